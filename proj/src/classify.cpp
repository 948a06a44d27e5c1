#include "rankdrop/classify.hpp"

#include "rankdrop/error.hpp"

#include <algorithm>

namespace rankdrop {
namespace {

std::vector<PointP2> side_points(const Config& c, Side s) {
    std::vector<PointP2> out;
    out.reserve(c.size());
    for (const auto& pair : c) out.push_back(s == Side::X ? pair.x : pair.y);
    return out;
}

template <typename Point>
bool all_equal(const std::vector<Point>& pts) {
    return std::all_of(pts.begin(), pts.end(), [&](const Point& p) { return p == pts[0]; });
}

template <typename Point>
std::size_t distinct_count(const std::vector<Point>& pts) {
    std::vector<Point> seen;
    for (const auto& p : pts)
        if (std::find(seen.begin(), seen.end(), p) == seen.end()) seen.push_back(p);
    return seen.size();
}

/// Proper subsets of {0..k−1} of size ≥ 2, ordered by size then
/// lexicographically, so minimality suppression can scan earlier entries.
std::vector<std::vector<std::size_t>> proper_subsets(std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t size = 2; size + 1 <= k; ++size) {
        std::vector<std::size_t> pick(size);
        for (std::size_t i = 0; i < size; ++i) pick[i] = i;
        while (true) {
            out.push_back(pick);
            std::size_t pos = size;
            while (pos > 0 && pick[pos - 1] == k - size + pos - 1) --pos;
            if (pos == 0) break;
            ++pick[pos - 1];
            for (std::size_t i = pos; i < size; ++i) pick[i] = pick[i - 1] + 1;
        }
    }
    return out;
}

bool subset_contains(const std::vector<std::size_t>& big, const std::vector<std::size_t>& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

/// The representative inner reason of a subconfiguration's report: its first
/// own (non-inherited) condition, falling back to the first condition.
std::shared_ptr<const Condition> inner_reason(const Report& r) {
    for (const auto& cond : r.conditions)
        if (cond.kind != ConditionKind::Inherited)
            return std::make_shared<const Condition>(cond);
    if (!r.conditions.empty()) return std::make_shared<const Condition>(r.conditions.front());
    return nullptr;
}

Condition make_condition(ConditionKind kind) {
    Condition c;
    c.kind = kind;
    return c;
}

/// P¹ reduction of a collinear side; all-bracket-zero sides with fewer than
/// two distinct points have no reduction, signalled by nullopt (every line
/// bracket of such a side vanishes).
std::optional<std::vector<PointP1>> reduced_or_degenerate(const std::vector<PointP2>& pts) {
    if (distinct_count(pts) < 2) return std::nullopt;
    return reduce_to_p1(pts);
}

std::array<PointP2, 6> six_points(const std::vector<PointP2>& pts) {
    return {pts[0], pts[1], pts[2], pts[3], pts[4], pts[5]};
}

/// Eq-style five-term residuals share this shape: plane brackets on one
/// side, line brackets on the other.
Rat k5_residual(const std::vector<PointP2>& plane, const std::vector<PointP1>& line,
                std::size_t j, const std::array<std::size_t, 4>& rem) {
    const auto& [i1, i2, i3, i4] = rem;
    return bracket3(plane[i1], plane[i3], plane[j]) * bracket3(plane[i2], plane[i4], plane[j]) *
               bracket2(line[i1], line[i4]) * bracket2(line[i2], line[i3]) -
           bracket3(plane[i1], plane[i4], plane[j]) * bracket3(plane[i2], plane[i3], plane[j]) *
               bracket2(line[i1], line[i3]) * bracket2(line[i2], line[i4]);
}

/// The Joubert pairing of a six-pair configuration whose named side is
/// collinear; a side with fewer than two distinct points contributes zero
/// line brackets, hence a zero pairing.
Rat line_pairing(const Config& c, Side line_side) {
    const auto line_pts = side_points(c, line_side);
    const auto plane_pts = side_points(c, line_side == Side::X ? Side::Y : Side::X);
    const auto reduced = reduced_or_degenerate(line_pts);
    if (!reduced) return Rat(0);
    const std::array<PointP1, 6> line6 = {(*reduced)[0], (*reduced)[1], (*reduced)[2],
                                          (*reduced)[3], (*reduced)[4], (*reduced)[5]};
    return line_case_form(six_points(plane_pts), line6);
}

/// Coincidence classes of a point list: class id per index, classes numbered
/// by first appearance.
template <typename Point>
std::vector<std::size_t> coincidence_classes(const std::vector<Point>& pts,
                                             std::size_t& class_count) {
    std::vector<Point> reps;
    std::vector<std::size_t> id(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        auto it = std::find(reps.begin(), reps.end(), pts[i]);
        if (it == reps.end()) {
            reps.push_back(pts[i]);
            id[i] = reps.size() - 1;
        } else {
            id[i] = static_cast<std::size_t>(it - reps.begin());
        }
    }
    class_count = reps.size();
    return id;
}

/// A reordering witnessing the double-triangle pattern, assuming the
/// class-structure checks have already passed: walk the 6-cycle alternating
/// y-partners and x-partners.
std::vector<std::size_t> double_triangle_order(const std::vector<std::size_t>& xid,
                                               const std::vector<std::size_t>& yid) {
    auto partner = [](const std::vector<std::size_t>& id, std::size_t i) {
        for (std::size_t j = 0; j < id.size(); ++j)
            if (j != i && id[j] == id[i]) return j;
        return i;
    };
    const std::size_t i1 = 0;
    const std::size_t i2 = partner(yid, i1);
    const std::size_t i4 = partner(xid, i1);
    const std::size_t i3 = partner(yid, i4);
    const std::size_t i6 = partner(xid, i3);
    const std::size_t i5 = partner(yid, i6);
    return {i1, i2, i3, i4, i5, i6};
}

void append_k2_conditions(const Config& c, Report& r) {
    if (c[0].x == c[1].x && c[0].y == c[1].y) {
        Condition cond = make_condition(ConditionKind::RepeatedPair);
        cond.indices = {0, 1};
        r.conditions.push_back(std::move(cond));
    }
}

void append_k3_conditions(const Config& c, Report& r) {
    const auto xs = side_points(c, Side::X);
    const auto ys = side_points(c, Side::Y);
    if (all_equal(xs) && collinear(ys)) {
        Condition cond = make_condition(ConditionKind::CoincidentTripleOppositeLine);
        cond.side = Side::X;
        cond.indices = {0, 1, 2};
        r.conditions.push_back(std::move(cond));
    }
    if (all_equal(ys) && collinear(xs)) {
        Condition cond = make_condition(ConditionKind::CoincidentTripleOppositeLine);
        cond.side = Side::Y;
        cond.indices = {0, 1, 2};
        r.conditions.push_back(std::move(cond));
    }
}

void append_k4_conditions(const Config& c, Report& r) {
    const auto xs = side_points(c, Side::X);
    const auto ys = side_points(c, Side::Y);
    for (Side s : {Side::X, Side::Y}) {
        if (!all_equal(s == Side::X ? xs : ys)) continue;
        Condition cond = make_condition(ConditionKind::AllCoincident);
        cond.side = s;
        cond.indices = {0, 1, 2, 3};
        r.conditions.push_back(std::move(cond));
    }
    if (!collinear(xs) || !collinear(ys)) return;
    const Rat residual = check_k4_bracket(c);
    if (residual != 0) return;
    Condition cond = make_condition(ConditionKind::BothSidesCollinearCrossRatio);
    cond.residuals = {residual};
    r.conditions.push_back(std::move(cond));

    // Contextual witness: with four distinct points per side the bracket
    // identity means the reduced sides are related by a line homography.
    if (distinct_count(xs) == 4 && distinct_count(ys) == 4) {
        const auto xr = reduce_to_p1(xs);
        const auto yr = reduce_to_p1(ys);
        try {
            const auto h = homography_p1_from_3({xr[0], xr[1], xr[2]}, {yr[0], yr[1], yr[2]});
            if (h.apply(xr[3]) == yr[3]) {
                Condition hcond = make_condition(ConditionKind::HomographyRelated);
                hcond.homography_p1 = h;
                r.conditions.push_back(std::move(hcond));
            }
        } catch (const Error&) {
            // repeated reduced points; the bracket condition stands alone
        }
    }
}

void append_k5_conditions(const Config& c, Report& r) {
    for (Side s : {Side::X, Side::Y}) {
        if (!collinear(side_points(c, s))) continue;
        const auto residuals = check_k5_brackets(c, s);
        if (!std::all_of(residuals.begin(), residuals.end(),
                         [](const Rat& q) { return q == 0; }))
            continue;
        Condition cond = make_condition(ConditionKind::K5LineAndBrackets);
        cond.side = s;
        cond.residuals.assign(residuals.begin(), residuals.end());
        r.conditions.push_back(std::move(cond));
    }
}

void append_k6_conditions(const Config& c, Report& r) {
    const auto xs = side_points(c, Side::X);
    const auto ys = side_points(c, Side::Y);
    const bool xs_line = collinear(xs);
    const bool ys_line = collinear(ys);

    for (Side s : {Side::X, Side::Y}) {
        if (!(s == Side::X ? xs_line : ys_line)) continue;
        const Rat pairing = line_pairing(c, s);
        if (pairing != 0) continue;
        Condition cond = make_condition(ConditionKind::K6LineJoubert);
        cond.side = s;
        cond.residuals = {pairing};
        r.conditions.push_back(std::move(cond));
    }

    if (!xs_line && !ys_line) {
        const auto residuals = check_k6_brackets(c);
        const bool all_zero = std::all_of(residuals.begin(), residuals.end(),
                                          [](const Rat& q) { return q == 0; });
        if (all_zero) {
            std::size_t x_classes = 0;
            std::size_t y_classes = 0;
            const auto xid = coincidence_classes(xs, x_classes);
            const auto yid = coincidence_classes(ys, y_classes);
            if (is_asymmetric_double_triangle(c)) {
                Condition cond = make_condition(ConditionKind::AsymmetricDoubleTriangle);
                cond.indices = double_triangle_order(xid, yid);
                r.conditions.push_back(std::move(cond));
            } else {
                Condition cond = make_condition(ConditionKind::K6Brackets);
                cond.residuals.assign(residuals.begin(), residuals.end());
                r.conditions.push_back(std::move(cond));
            }
        }
    }

    if (general_position_p2(xs) && general_position_p2(ys) &&
        check_invariant_proportionality(c)) {
        if (r.deficient) {
            r.conditions.push_back(make_condition(ConditionKind::K6InvariantProportional));
        } else {
            // Full rank with proportional invariants means the sides are
            // related by a homography; record it once verified.
            try {
                const auto h = homography_from_4({xs[0], xs[1], xs[2], xs[3]},
                                                 {ys[0], ys[1], ys[2], ys[3]});
                bool matches = true;
                for (std::size_t i = 0; i < 6; ++i)
                    if (h.apply(xs[i]) != ys[i]) matches = false;
                if (matches) {
                    Condition cond = make_condition(ConditionKind::HomographyRelated);
                    cond.homography = h;
                    r.conditions.push_back(std::move(cond));
                }
            } catch (const Error&) {
                // no verified witness; leave the report without one
            }
        }
    }
}

void append_p1_conditions(const ConfigP1& c, Report& r) {
    std::vector<PointP1> xs;
    std::vector<PointP1> ys;
    for (const auto& pair : c) {
        xs.push_back(pair.x);
        ys.push_back(pair.y);
    }
    switch (c.size()) {
    case 2:
        if (xs[0] == xs[1] && ys[0] == ys[1]) {
            Condition cond = make_condition(ConditionKind::RepeatedPair);
            cond.indices = {0, 1};
            r.conditions.push_back(std::move(cond));
        }
        break;
    case 3:
        for (Side s : {Side::X, Side::Y}) {
            if (!all_equal(s == Side::X ? xs : ys)) continue;
            Condition cond = make_condition(ConditionKind::AllCoincident);
            cond.side = s;
            cond.indices = {0, 1, 2};
            r.conditions.push_back(std::move(cond));
        }
        break;
    case 4: {
        const Rat residual = bracket2(xs[0], xs[2]) * bracket2(xs[1], xs[3]) *
                                 bracket2(ys[0], ys[3]) * bracket2(ys[1], ys[2]) -
                             bracket2(xs[0], xs[3]) * bracket2(xs[1], xs[2]) *
                                 bracket2(ys[0], ys[2]) * bracket2(ys[1], ys[3]);
        if (residual != 0) break;
        Condition cond = make_condition(ConditionKind::BothSidesCollinearCrossRatio);
        cond.residuals = {residual};
        r.conditions.push_back(std::move(cond));
        if (distinct_count(xs) == 4 && distinct_count(ys) == 4) {
            try {
                const auto h = homography_p1_from_3({xs[0], xs[1], xs[2]}, {ys[0], ys[1], ys[2]});
                if (h.apply(xs[3]) == ys[3]) {
                    Condition hcond = make_condition(ConditionKind::HomographyRelated);
                    hcond.homography_p1 = h;
                    r.conditions.push_back(std::move(hcond));
                }
            } catch (const Error&) {
            }
        }
        break;
    }
    default:
        break;
    }
}

void finalize(Report& r) {
    bool explained = false;
    for (const auto& cond : r.conditions)
        if (certifies_deficiency(cond.kind)) explained = true;
    r.unexplained = r.deficient && !explained;
}

} // namespace

const char* condition_kind_name(ConditionKind k) {
    switch (k) {
    case ConditionKind::RepeatedPair: return "repeated-pair";
    case ConditionKind::CoincidentTripleOppositeLine: return "coincident-triple-opposite-line";
    case ConditionKind::AllCoincident: return "all-coincident";
    case ConditionKind::BothSidesCollinearCrossRatio: return "both-sides-collinear-cross-ratio";
    case ConditionKind::K5LineAndBrackets: return "k5-line-and-brackets";
    case ConditionKind::K6Brackets: return "k6-brackets";
    case ConditionKind::K6LineJoubert: return "k6-line-joubert";
    case ConditionKind::K6InvariantProportional: return "k6-invariant-proportional";
    case ConditionKind::HomographyRelated: return "homography-related";
    case ConditionKind::AsymmetricDoubleTriangle: return "asymmetric-double-triangle";
    case ConditionKind::Inherited: return "inherited";
    }
    return "unknown";
}

const char* side_name(Side s) { return s == Side::X ? "x" : "y"; }

bool certifies_deficiency(ConditionKind k) {
    switch (k) {
    case ConditionKind::HomographyRelated:
    case ConditionKind::AsymmetricDoubleTriangle:
        return false;
    default:
        return true;
    }
}

Report classify(const Config& c) {
    const std::size_t k = c.size();
    if (k < 2 || k > 6)
        throw Error(ErrorKind::DimensionMismatch,
                    "classification covers 2..6 pairs, got " + std::to_string(k));
    Report r;
    r.k = k;
    r.rank = z_rank(c);
    r.deficient = r.rank < k;
    r.conditions = inherited_conditions(c);
    switch (k) {
    case 2: append_k2_conditions(c, r); break;
    case 3: append_k3_conditions(c, r); break;
    case 4: append_k4_conditions(c, r); break;
    case 5: append_k5_conditions(c, r); break;
    case 6: append_k6_conditions(c, r); break;
    default: break;
    }
    if (k == 6) {
        r.invariant_summary = {coble_bar(six_points(side_points(c, Side::X))),
                               coble_bar(six_points(side_points(c, Side::Y)))};
    }
    finalize(r);
    return r;
}

std::vector<Condition> inherited_conditions(const Config& c, bool minimal_only) {
    std::vector<Condition> out;
    std::vector<std::vector<std::size_t>> reported;
    for (const auto& subset : proper_subsets(c.size())) {
        if (minimal_only) {
            bool covered = false;
            for (const auto& prev : reported)
                if (subset_contains(subset, prev)) covered = true;
            if (covered) continue;
        }
        Config sub;
        for (auto i : subset) sub.push_back(c[i]);
        if (!z_deficient(sub)) continue;
        Condition cond = make_condition(ConditionKind::Inherited);
        cond.indices = subset;
        cond.inner = inner_reason(classify(sub));
        out.push_back(std::move(cond));
        reported.push_back(subset);
    }
    return out;
}

std::vector<Condition> inherited_conditions_p1(const ConfigP1& c, bool minimal_only) {
    std::vector<Condition> out;
    std::vector<std::vector<std::size_t>> reported;
    for (const auto& subset : proper_subsets(c.size())) {
        if (minimal_only) {
            bool covered = false;
            for (const auto& prev : reported)
                if (subset_contains(subset, prev)) covered = true;
            if (covered) continue;
        }
        ConfigP1 sub;
        for (auto i : subset) sub.push_back(c[i]);
        if (rank(build_z_p1(sub)) >= sub.size()) continue;
        Condition cond = make_condition(ConditionKind::Inherited);
        cond.indices = subset;
        cond.inner = inner_reason(classify_p1(sub));
        out.push_back(std::move(cond));
        reported.push_back(subset);
    }
    return out;
}

Rat check_k4_bracket(const Config& c) {
    if (c.size() != 4)
        throw Error(ErrorKind::DimensionMismatch, "the bracket residual needs 4 pairs");
    const auto xs = side_points(c, Side::X);
    const auto ys = side_points(c, Side::Y);
    if (!collinear(xs))
        throw Error(ErrorKind::SideNotCollinear, "the x side is not on a line");
    if (!collinear(ys))
        throw Error(ErrorKind::SideNotCollinear, "the y side is not on a line");
    const auto xr = reduced_or_degenerate(xs);
    const auto yr = reduced_or_degenerate(ys);
    // A side with one distinct point kills every line bracket.
    if (!xr || !yr) return Rat(0);
    return bracket2((*xr)[0], (*xr)[2]) * bracket2((*xr)[1], (*xr)[3]) *
               bracket2((*yr)[0], (*yr)[3]) * bracket2((*yr)[1], (*yr)[2]) -
           bracket2((*xr)[0], (*xr)[3]) * bracket2((*xr)[1], (*xr)[2]) *
               bracket2((*yr)[0], (*yr)[2]) * bracket2((*yr)[1], (*yr)[3]);
}

std::array<Rat, 5> check_k5_brackets(const Config& c, Side line_side) {
    if (c.size() != 5)
        throw Error(ErrorKind::DimensionMismatch, "the five residuals need 5 pairs");
    const auto line_pts = side_points(c, line_side);
    const auto plane_pts = side_points(c, line_side == Side::X ? Side::Y : Side::X);
    if (!collinear(line_pts))
        throw Error(ErrorKind::SideNotCollinear,
                    std::string("the ") + side_name(line_side) + " side is not on a line");
    std::array<Rat, 5> out{};
    const auto reduced = reduced_or_degenerate(line_pts);
    if (!reduced) return out; // single distinct point: every line bracket is zero
    for (std::size_t j = 0; j < 5; ++j) {
        std::array<std::size_t, 4> rem{};
        std::size_t n = 0;
        for (std::size_t i = 0; i < 5; ++i)
            if (i != j) rem[n++] = i;
        out[j] = k5_residual(plane_pts, *reduced, j, rem);
    }
    return out;
}

std::array<Rat, 30> check_k6_brackets(const Config& c) {
    if (c.size() != 6)
        throw Error(ErrorKind::DimensionMismatch, "the thirty residuals need 6 pairs");
    const auto xs = side_points(c, Side::X);
    const auto ys = side_points(c, Side::Y);
    std::array<Rat, 30> out{};
    std::size_t n = 0;
    for (std::size_t p = 0; p < 6; ++p) {
        for (std::size_t s = 0; s < 6; ++s) {
            if (s == p) continue;
            std::array<std::size_t, 4> rem{};
            std::size_t m = 0;
            for (std::size_t i = 0; i < 6; ++i)
                if (i != p && i != s) rem[m++] = i;
            const auto& [i, j, k, r] = rem;
            out[n++] = bracket3(xs[i], xs[k], xs[p]) * bracket3(xs[j], xs[r], xs[p]) *
                           bracket3(ys[i], ys[r], ys[s]) * bracket3(ys[j], ys[k], ys[s]) -
                       bracket3(xs[i], xs[r], xs[p]) * bracket3(xs[j], xs[k], xs[p]) *
                           bracket3(ys[i], ys[k], ys[s]) * bracket3(ys[j], ys[r], ys[s]);
        }
    }
    return out;
}

bool is_asymmetric_double_triangle(const Config& c) {
    if (c.size() != 6) return false;
    const auto xs = side_points(c, Side::X);
    const auto ys = side_points(c, Side::Y);
    std::size_t x_classes = 0;
    std::size_t y_classes = 0;
    const auto xid = coincidence_classes(xs, x_classes);
    const auto yid = coincidence_classes(ys, y_classes);
    if (x_classes != 3 || y_classes != 3) return false;
    std::array<std::size_t, 3> x_count{};
    std::array<std::size_t, 3> y_count{};
    for (std::size_t i = 0; i < 6; ++i) {
        ++x_count[xid[i]];
        ++y_count[yid[i]];
    }
    for (std::size_t cls = 0; cls < 3; ++cls)
        if (x_count[cls] != 2 || y_count[cls] != 2) return false;
    // No two rows may share both classes (that would be a repeated pair, and
    // the class graph would degenerate from a 6-cycle).
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = i + 1; j < 6; ++j)
            if (xid[i] == xid[j] && yid[i] == yid[j]) return false;
    return true;
}

bool check_invariant_proportionality(const Config& c) {
    if (c.size() != 6)
        throw Error(ErrorKind::DimensionMismatch, "the proportionality test needs 6 pairs");
    const auto xs = side_points(c, Side::X);
    const auto ys = side_points(c, Side::Y);
    if (!general_position_p2(xs))
        throw Error(ErrorKind::NotGeneralPosition, "the x side is not in general position");
    if (!general_position_p2(ys))
        throw Error(ErrorKind::NotGeneralPosition, "the y side is not in general position");
    return proportional(coble_bar(six_points(xs)), coble_bar(six_points(ys)));
}

Report classify_p1(const ConfigP1& c) {
    const std::size_t k = c.size();
    if (k < 2 || k > 4)
        throw Error(ErrorKind::DimensionMismatch,
                    "line classification covers 2..4 pairs, got " + std::to_string(k));
    Report r;
    r.k = k;
    r.rank = rank(build_z_p1(c));
    r.deficient = r.rank < k;
    r.conditions = inherited_conditions_p1(c);
    append_p1_conditions(c, r);
    finalize(r);
    return r;
}

} // namespace rankdrop
