#include "rankdrop/error.hpp"
#include "rankdrop/generate.hpp"
#include "rankdrop/invariants.hpp"
#include "rankdrop/io.hpp"
#include "rankdrop/surface.hpp"
#include "rankdrop/synthesize.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using Json = nlohmann::ordered_json;

// Exit-code taxonomy. Shell pipelines branch on these without parsing JSON.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;          // parse / validation failure
constexpr int kExitSynth = 3;          // synthesis constructor failure
constexpr int kExitSurface = 4;        // surface construction failure
constexpr int kExitDeficient = 10;     // check: configuration is rank deficient
constexpr int kExitViolation = 20;     // fuzz: soundness violation found

/// Machine-readable diagnostic on standard error; stdout stays clean.
void print_error(const char* kind, const std::string& message) {
    Json j;
    j["error"] = kind;
    j["message"] = message;
    std::cerr << j.dump(2) << "\n";
}

void print_error(const rankdrop::Error& e) {
    print_error(rankdrop::to_string(e.kind()), e.what());
}

Json sextuple_json(const rankdrop::Sextuple& s) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < 6; ++i) arr.push_back(rankdrop::rat_str(s[i]));
    return arr;
}

/// A 3×3 matrix flattened row-major to nine rational strings.
Json matrix_flat_json(const rankdrop::QMatrix& m) {
    Json arr = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) arr.push_back(rankdrop::rat_str(m.at(r, c)));
    return arr;
}

int run_check(const std::string& path, bool p1, bool verbose) {
    try {
        const rankdrop::ParsedConfig parsed = rankdrop::read_config_file(path);
        if (p1 && parsed.plane) {
            print_error("ParseError", "--p1 expects a line-pair file, got plane pairs");
            return kExitUsage;
        }
        if (parsed.plane) {
            const auto t0 = std::chrono::steady_clock::now();
            const rankdrop::Report r = rankdrop::classify(*parsed.plane);
            const auto t1 = std::chrono::steady_clock::now();
            const long long us =
                std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count();
            std::cout << rankdrop::report_to_json(*parsed.plane, r, us, verbose) << "\n";
            return r.deficient ? kExitDeficient : kExitOk;
        }
        const auto t0 = std::chrono::steady_clock::now();
        const rankdrop::Report r = rankdrop::classify_p1(*parsed.line);
        const auto t1 = std::chrono::steady_clock::now();
        const long long us =
            std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count();
        std::cout << rankdrop::report_p1_to_json(*parsed.line, r, us, verbose) << "\n";
        return r.deficient ? kExitDeficient : kExitOk;
    } catch (const rankdrop::Error& e) {
        print_error(e);
        return kExitUsage;
    }
}

int run_synth(const std::string& mode, const std::string& path, bool verify) {
    rankdrop::Config c;
    try {
        const rankdrop::ParsedConfig parsed = rankdrop::read_config_file(path);
        if (!parsed.plane) {
            print_error("ParseError", "synthesis needs plane pairs, got a line-pair file");
            return kExitUsage;
        }
        c = *parsed.plane;
    } catch (const rankdrop::Error& e) {
        print_error(e);
        return kExitUsage;
    }

    rankdrop::Config out;
    try {
        if (mode == "sixth-pair") {
            out = c;
            out.push_back(rankdrop::sixth_pair(c));
        } else if (mode == "sturm") {
            out = c;
            out.push_back(rankdrop::sturm_sixth_pair(c));
        } else { // completion
            if (c.size() != 6)
                throw rankdrop::Error(rankdrop::ErrorKind::DimensionMismatch,
                                      "completion needs exactly six pairs");
            const std::array<rankdrop::PointP2, 6> xs = {c[0].x, c[1].x, c[2].x,
                                                         c[3].x, c[4].x, c[5].x};
            const std::array<rankdrop::PointP2, 6> ys = rankdrop::completion_y(xs);
            for (std::size_t i = 0; i < 6; ++i) out.push_back({xs[i], ys[i]});
        }
        if (verify && !rankdrop::z_deficient(out))
            throw rankdrop::Error(rankdrop::ErrorKind::NotDeficient,
                                  "synthesized configuration has full rank");
    } catch (const rankdrop::Error& e) {
        print_error(e);
        return kExitSynth;
    }
    std::cout << rankdrop::config_to_json(out) << "\n";
    return kExitOk;
}

int run_surface(const std::string& path) {
    rankdrop::Config c;
    try {
        const rankdrop::ParsedConfig parsed = rankdrop::read_config_file(path);
        if (!parsed.plane || parsed.plane->size() != 6) {
            print_error("ParseError", "surface extraction needs exactly six plane pairs");
            return kExitUsage;
        }
        c = *parsed.plane;
    } catch (const rankdrop::Error& e) {
        print_error(e);
        return kExitUsage;
    }

    try {
        const rankdrop::Pencil p = rankdrop::pencil_from_config(c);
        const rankdrop::CubicForm f = rankdrop::cubic_form(p);
        std::vector<rankdrop::LineP3> lines;
        for (const auto& pair : c) lines.push_back(rankdrop::line_x(p, pair.x));
        for (const auto& pair : c) lines.push_back(rankdrop::line_y(p, pair.y));
        const std::array<rankdrop::LineP3, 6> lx = {lines[0], lines[1], lines[2],
                                                    lines[3], lines[4], lines[5]};
        const std::array<rankdrop::LineP3, 6> ly = {lines[6], lines[7],  lines[8],
                                                    lines[9], lines[10], lines[11]};

        Json out;
        Json pencil = Json::array();
        for (const auto& basis : p.basis) pencil.push_back(matrix_flat_json(basis));
        out["pencil"] = std::move(pencil);
        Json cubic = Json::array();
        for (const auto& q : f.coeffs) cubic.push_back(rankdrop::rat_str(q));
        out["cubic_form"] = std::move(cubic);
        Json lines_json = Json::array();
        for (const auto& line : lines) {
            Json arr = Json::array();
            for (std::size_t i = 0; i < 6; ++i) arr.push_back(rankdrop::rat_str(line[i]));
            lines_json.push_back(std::move(arr));
        }
        out["lines"] = std::move(lines_json);
        out["double_six_verified"] = rankdrop::verify_double_six(lx, ly);
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    } catch (const rankdrop::Error& e) {
        print_error(e);
        return kExitSurface;
    }
}

int run_invariants(const std::string& path) {
    try {
        const rankdrop::ParsedConfig parsed = rankdrop::read_config_file(path);
        if (!parsed.plane || parsed.plane->size() != 6) {
            print_error("ParseError", "invariants need exactly six plane pairs");
            return kExitUsage;
        }
        const rankdrop::Config& c = *parsed.plane;
        std::vector<rankdrop::PointP2> xs;
        std::vector<rankdrop::PointP2> ys;
        for (const auto& pair : c) {
            xs.push_back(pair.x);
            ys.push_back(pair.y);
        }
        const std::array<rankdrop::PointP2, 6> ax = {xs[0], xs[1], xs[2], xs[3], xs[4], xs[5]};
        const std::array<rankdrop::PointP2, 6> ay = {ys[0], ys[1], ys[2], ys[3], ys[4], ys[5]};
        const rankdrop::Sextuple cx = rankdrop::coble_bar(ax);
        const rankdrop::Sextuple cy = rankdrop::coble_bar(ay);

        Json out;
        out["coble_x"] = sextuple_json(cx);
        out["coble_y"] = sextuple_json(cy);
        if (const auto jx = rankdrop::collinear_side_joubert(xs))
            out["joubert_x"] = sextuple_json(*jx);
        if (const auto jy = rankdrop::collinear_side_joubert(ys))
            out["joubert_y"] = sextuple_json(*jy);
        out["proportional"] = rankdrop::proportional(cx, cy);
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    } catch (const rankdrop::Error& e) {
        print_error(e);
        return kExitUsage;
    }
}

/// Per-configuration seed for fuzzing: one mixing round over the base seed
/// and the loop coordinates, so every (seed, regime, k, index) cell gets an
/// independent, reproducible stream.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t regime_index, std::uint64_t k,
                          std::uint64_t index) {
    rankdrop::SplitMix64 g{base + 0x9E3779B97F4A7C15ULL * (regime_index + 1) +
                           0xBF58476D1CE4E5B9ULL * k + 0x94D049BB133111EBULL * index};
    return g.next();
}

/// Checks a classification report against a rank computed directly from the
/// face-splitting matrix. Returns a description of the first inconsistency.
std::optional<std::string> report_violation(std::size_t k, std::size_t direct_rank,
                                            const rankdrop::Report& r) {
    if (r.k != k) return "reported k disagrees with the configuration size";
    if (r.rank != direct_rank)
        return "reported rank " + std::to_string(r.rank) +
               " disagrees with direct elimination rank " + std::to_string(direct_rank);
    if (r.deficient != (direct_rank < k)) return "deficiency flag disagrees with the rank";
    for (const auto& cond : r.conditions)
        if (rankdrop::certifies_deficiency(cond.kind) && !r.deficient)
            return std::string("certifying condition '") +
                   rankdrop::condition_kind_name(cond.kind) +
                   "' reported on a full-rank configuration";
    if (r.unexplained && !r.deficient) return "unexplained flag set on a full-rank configuration";
    if (r.deficient && r.unexplained) return "rank-deficient configuration left unexplained";
    return std::nullopt;
}

int emit_violation(rankdrop::Regime regime, bool p1, std::size_t k, std::uint64_t config_seed,
                   const std::string& description, const std::optional<std::string>& config_text) {
    Json v;
    v["regime"] = rankdrop::regime_name(regime);
    v["variant"] = p1 ? "line" : "plane";
    v["k"] = k;
    v["config_seed"] = config_seed;
    v["description"] = description;
    if (config_text) v["config"] = Json::parse(*config_text);
    Json out;
    out["violation"] = std::move(v);
    std::cout << out.dump(2) << "\n";
    return kExitViolation;
}

int run_fuzz(std::uint64_t seed, std::size_t count, const std::string& regime_arg, bool p1) {
    std::vector<rankdrop::Regime> regimes;
    if (regime_arg.empty()) {
        const auto& all = rankdrop::all_regimes();
        regimes.assign(all.begin(), all.end());
    } else {
        try {
            regimes.push_back(rankdrop::regime_from_name(regime_arg));
        } catch (const rankdrop::Error& e) {
            print_error(e);
            return kExitUsage;
        }
    }
    std::vector<std::size_t> sizes;
    for (std::size_t k = 2; k <= (p1 ? 4u : 6u); ++k) sizes.push_back(k);

    Json summary;
    summary["seed"] = seed;
    summary["count"] = count;
    summary["variant"] = p1 ? "line" : "plane";
    Json regimes_json = Json::array();
    std::size_t total = 0;
    std::size_t total_deficient = 0;

    for (std::size_t ri = 0; ri < regimes.size(); ++ri) {
        const rankdrop::Regime regime = regimes[ri];
        // Index the seed stream by the regime's global position, not the
        // loop position, so --regime reproduces the same configurations as
        // the all-regimes run.
        const auto& all = rankdrop::all_regimes();
        std::size_t regime_index = 0;
        for (std::size_t j = 0; j < all.size(); ++j)
            if (all[j] == regime) regime_index = j;

        Json per_k = Json::array();
        for (const std::size_t k : sizes) {
            std::size_t generated = 0;
            std::size_t deficient = 0;
            for (std::size_t i = 0; i < count; ++i) {
                const std::uint64_t cs = derive_seed(seed, regime_index, k, i);
                std::optional<std::string> description;
                std::optional<std::string> config_text;
                bool is_deficient = false;
                try {
                    if (p1) {
                        const rankdrop::ConfigP1 cfg = rankdrop::generate_config_p1(cs, k, regime);
                        config_text = rankdrop::config_p1_to_json(cfg);
                        const rankdrop::Report r = rankdrop::classify_p1(cfg);
                        description =
                            report_violation(k, rankdrop::rank(rankdrop::build_z_p1(cfg)), r);
                        is_deficient = r.deficient;
                    } else {
                        const rankdrop::Config cfg = rankdrop::generate_config(cs, k, regime);
                        config_text = rankdrop::config_to_json(cfg);
                        const rankdrop::Report r = rankdrop::classify(cfg);
                        description =
                            report_violation(k, rankdrop::rank(rankdrop::build_z(cfg)), r);
                        is_deficient = r.deficient;
                    }
                } catch (const rankdrop::Error& e) {
                    description = std::string("exception: ") + e.what();
                }
                if (!description && regime == rankdrop::Regime::SynthesizedDeficient &&
                    !is_deficient)
                    description = "synthesized configuration is not rank deficient";
                if (description)
                    return emit_violation(regime, p1, k, cs, *description, config_text);
                ++generated;
                if (is_deficient) ++deficient;
            }
            Json cell;
            cell["k"] = k;
            cell["generated"] = generated;
            cell["deficient"] = deficient;
            per_k.push_back(std::move(cell));
            total += generated;
            total_deficient += deficient;
        }
        Json rj;
        rj["regime"] = rankdrop::regime_name(regime);
        rj["per_k"] = std::move(per_k);
        regimes_json.push_back(std::move(rj));
    }

    summary["regimes"] = std::move(regimes_json);
    summary["generated"] = total;
    summary["deficient"] = total_deficient;
    summary["violations"] = 0;
    std::cout << summary.dump(2) << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact rank analysis of point-pair configurations in P2xP2 and P1xP1"};
    app.require_subcommand(1);

    std::string format = "json";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json"}));

    std::string check_path;
    bool check_p1 = false;
    bool check_verbose = false;
    CLI::App* check = app.add_subcommand(
        "check", "Classify a configuration file: rank, deficiency, and witnesses");
    check->add_option("input", check_path, "Configuration file")->required();
    check->add_flag("--p1", check_p1, "Require the line-pair variant");
    check->add_flag("--verbose", check_verbose, "Report the full inherited-subset lattice");

    std::string synth_mode;
    std::string synth_path;
    bool synth_verify = false;
    CLI::App* synth = app.add_subcommand(
        "synth", "Complete a configuration to a rank-deficient one");
    synth->add_option("mode", synth_mode, "sixth-pair | completion | sturm")
        ->required()
        ->check(CLI::IsMember({"sixth-pair", "completion", "sturm"}));
    synth->add_option("input", synth_path, "Configuration file")->required();
    synth->add_flag("--verify", synth_verify, "Assert the output is rank deficient");

    std::string surface_path;
    CLI::App* surface = app.add_subcommand(
        "surface", "Determinantal pencil, cubic form, and double six of six deficient pairs");
    surface->add_option("input", surface_path, "Configuration file")->required();

    std::string inv_path;
    CLI::App* invariants = app.add_subcommand(
        "invariants", "Six-point invariant sextuples and their proportionality");
    invariants->add_option("input", inv_path, "Configuration file")->required();

    std::uint64_t fuzz_seed = 0;
    std::size_t fuzz_count = 100;
    std::string fuzz_regime;
    bool fuzz_p1 = false;
    CLI::App* fuzz = app.add_subcommand(
        "fuzz", "Generate seeded configurations and verify classification soundness");
    fuzz->add_option("--seed", fuzz_seed, "Base seed (default 0)");
    fuzz->add_option("--count", fuzz_count, "Configurations per regime and size (default 100)");
    fuzz->add_option("--regime", fuzz_regime,
                     "Restrict to one regime (default: all): generic, collinear-side, "
                     "planted-coincidence, planted-homography, synthesized-deficient");
    fuzz->add_flag("--p1", fuzz_p1, "Fuzz the line-pair variant");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (*check) return run_check(check_path, check_p1, check_verbose);
    if (*synth) return run_synth(synth_mode, synth_path, synth_verify);
    if (*surface) return run_surface(surface_path);
    if (*invariants) return run_invariants(inv_path);
    if (*fuzz) return run_fuzz(fuzz_seed, fuzz_count, fuzz_regime, fuzz_p1);
    return kExitUsage;
}
