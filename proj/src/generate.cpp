#include "rankdrop/generate.hpp"

#include "rankdrop/error.hpp"
#include "rankdrop/matrix.hpp"
#include "rankdrop/synthesize.hpp"

#include <algorithm>

namespace rankdrop {

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::int64_t SplitMix64::range(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
}

namespace {

Rat small_rat(SplitMix64& rng) {
    return Rat(Int(rng.range(-9, 9)), Int(rng.range(1, 6)));
}

PointP2 random_point_p2(SplitMix64& rng) {
    while (true) {
        const Rat a = small_rat(rng);
        const Rat b = small_rat(rng);
        const Rat c = small_rat(rng);
        if (a != 0 || b != 0 || c != 0) return PointP2(a, b, c);
    }
}

PointP1 random_point_p1(SplitMix64& rng) {
    while (true) {
        const Rat a = small_rat(rng);
        const Rat b = small_rat(rng);
        if (a != 0 || b != 0) return PointP1(a, b);
    }
}

PointP2 distinct_point_p2(SplitMix64& rng, const std::vector<PointP2>& avoid) {
    while (true) {
        const PointP2 p = random_point_p2(rng);
        if (std::find(avoid.begin(), avoid.end(), p) == avoid.end()) return p;
    }
}

PointP1 distinct_point_p1(SplitMix64& rng, const std::vector<PointP1>& avoid) {
    while (true) {
        const PointP1 p = random_point_p1(rng);
        if (std::find(avoid.begin(), avoid.end(), p) == avoid.end()) return p;
    }
}

/// A random point of the line through two distinct anchors.
PointP2 point_on_line(SplitMix64& rng, const PointP2& a, const PointP2& b) {
    while (true) {
        const Rat lam(Int(rng.range(-6, 6)), 1);
        const Rat mu(Int(rng.range(-6, 6)), 1);
        if (lam == 0 && mu == 0) continue;
        std::array<Rat, 3> coords{};
        for (std::size_t j = 0; j < 3; ++j) coords[j] = lam * a[j] + mu * b[j];
        return PointP2(coords[0], coords[1], coords[2]);
    }
}

std::vector<PointP2> random_points(SplitMix64& rng, std::size_t k) {
    std::vector<PointP2> out;
    for (std::size_t i = 0; i < k; ++i) out.push_back(random_point_p2(rng));
    return out;
}

std::vector<PointP2> collinear_points(SplitMix64& rng, std::size_t k) {
    const PointP2 a = random_point_p2(rng);
    const PointP2 b = distinct_point_p2(rng, {a});
    std::vector<PointP2> out;
    for (std::size_t i = 0; i < k; ++i) out.push_back(point_on_line(rng, a, b));
    return out;
}

Config zip(const std::vector<PointP2>& xs, const std::vector<PointP2>& ys) {
    Config c;
    for (std::size_t i = 0; i < xs.size(); ++i) c.push_back({xs[i], ys[i]});
    return c;
}

Config swap_sides(const Config& c) {
    Config out;
    for (const auto& pair : c) out.push_back({pair.y, pair.x});
    return out;
}

void shuffle_rows(SplitMix64& rng, Config& c) {
    for (std::size_t i = c.size(); i > 1; --i) {
        const auto j = static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(i) - 1));
        std::swap(c[i - 1], c[j]);
    }
}

QMatrix random_invertible(SplitMix64& rng, std::size_t n) {
    while (true) {
        QMatrix m(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) m.at(r, c) = Rat(Int(rng.range(-9, 9)), 1);
        if (det(m) != 0) return m;
    }
}

Config coincidence_config(SplitMix64& rng, std::size_t k) {
    enum Pattern { FullPair, OneSidePoint, TripleOnLine, TripleLoose, WholeSide, DoubleTriangle };
    std::vector<Pattern> menu = {FullPair, OneSidePoint};
    if (k >= 3) menu.insert(menu.end(), {TripleOnLine, TripleLoose, WholeSide});
    if (k == 6) menu.push_back(DoubleTriangle);
    const auto pattern = menu[static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(menu.size()) - 1))];

    std::vector<PointP2> xs = random_points(rng, k);
    std::vector<PointP2> ys = random_points(rng, k);
    const auto i = static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(k) - 1));
    auto other_index = [&](std::size_t skip) {
        while (true) {
            const auto j = static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(k) - 1));
            if (j != skip) return j;
        }
    };
    Config c;
    switch (pattern) {
    case FullPair: {
        const std::size_t j = other_index(i);
        xs[j] = xs[i];
        ys[j] = ys[i];
        c = zip(xs, ys);
        break;
    }
    case OneSidePoint: {
        const std::size_t j = other_index(i);
        xs[j] = xs[i];
        c = zip(xs, ys);
        break;
    }
    case TripleOnLine: {
        std::vector<std::size_t> idx(k);
        for (std::size_t n = 0; n < k; ++n) idx[n] = n;
        for (std::size_t n = k; n > 1; --n)
            std::swap(idx[n - 1], idx[static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(n) - 1))]);
        const PointP2 shared = random_point_p2(rng);
        const PointP2 a = random_point_p2(rng);
        const PointP2 b = distinct_point_p2(rng, {a});
        for (std::size_t n = 0; n < 3; ++n) {
            xs[idx[n]] = shared;
            ys[idx[n]] = point_on_line(rng, a, b);
        }
        c = zip(xs, ys);
        break;
    }
    case TripleLoose: {
        const PointP2 shared = random_point_p2(rng);
        std::vector<std::size_t> idx(k);
        for (std::size_t n = 0; n < k; ++n) idx[n] = n;
        for (std::size_t n = k; n > 1; --n)
            std::swap(idx[n - 1], idx[static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(n) - 1))]);
        for (std::size_t n = 0; n < 3; ++n) xs[idx[n]] = shared;
        c = zip(xs, ys);
        break;
    }
    case WholeSide: {
        const PointP2 shared = random_point_p2(rng);
        for (auto& p : xs) p = shared;
        c = zip(xs, ys);
        break;
    }
    case DoubleTriangle: {
        const PointP2 xa = random_point_p2(rng);
        const PointP2 xb = distinct_point_p2(rng, {xa});
        const PointP2 xc = distinct_point_p2(rng, {xa, xb});
        const PointP2 ya = random_point_p2(rng);
        const PointP2 yb = distinct_point_p2(rng, {ya});
        const PointP2 yc = distinct_point_p2(rng, {ya, yb});
        c = {{xa, ya}, {xb, ya}, {xb, yb}, {xc, yb}, {xc, yc}, {xa, yc}};
        shuffle_rows(rng, c);
        break;
    }
    }
    if (rng.next() % 2 == 0) c = swap_sides(c);
    return c;
}

Config homography_config(SplitMix64& rng, std::size_t k) {
    const Homography h(random_invertible(rng, 3));
    std::vector<PointP2> xs;
    if (k == 4 && rng.next() % 2 == 0) {
        xs = collinear_points(rng, k);
    } else {
        xs = random_points(rng, k);
    }
    Config c;
    for (const auto& x : xs) c.push_back({x, h.apply(x)});
    return c;
}

/// A point of the conic u² + v² = w² with rational parameter t.
PointP2 circle_point(const Rat& t) {
    const Rat t2 = t * t;
    return PointP2(Rat(1) - t2, Rat(2) * t, Rat(1) + t2);
}

/// The projection P² → P¹ whose center is the given point, as a 2×3 matrix.
QMatrix projection_killing(const PointP2& center) {
    std::size_t drop = 0;
    while (center[drop] == 0) ++drop;
    QMatrix t(2, 3);
    std::size_t row = 0;
    for (std::size_t r = 0; r < 3; ++r) {
        if (r == drop) continue;
        for (std::size_t c = 0; c < 3; ++c) {
            Rat entry = (r == c) ? center[drop] : Rat(0);
            if (c == drop) entry -= center[r];
            t.at(row, c) = entry;
        }
        ++row;
    }
    return t;
}

Config deficient_config(SplitMix64& rng, std::size_t k) {
    switch (k) {
    case 2: {
        const PointPair p{random_point_p2(rng), random_point_p2(rng)};
        return {p, p};
    }
    case 3: {
        const PointP2 shared = random_point_p2(rng);
        const PointP2 a = random_point_p2(rng);
        const PointP2 b = distinct_point_p2(rng, {a});
        Config c;
        for (std::size_t n = 0; n < 3; ++n) c.push_back({shared, point_on_line(rng, a, b)});
        if (rng.next() % 2 == 0) c = swap_sides(c);
        return c;
    }
    case 4: {
        // Two lines carrying parameter points related by an invertible 2×2
        // map: the reduced cross-ratios then agree, which forces the drop.
        const PointP2 a1 = random_point_p2(rng);
        const PointP2 b1 = distinct_point_p2(rng, {a1});
        const PointP2 a2 = random_point_p2(rng);
        const PointP2 b2 = distinct_point_p2(rng, {a2});
        const QMatrix m = random_invertible(rng, 2);
        std::vector<PointP1> params;
        while (params.size() < 4) params.push_back(distinct_point_p1(rng, params));
        Config c;
        for (const auto& t : params) {
            std::array<Rat, 3> x{};
            std::array<Rat, 3> y{};
            const Rat u = m.at(0, 0) * t[0] + m.at(0, 1) * t[1];
            const Rat v = m.at(1, 0) * t[0] + m.at(1, 1) * t[1];
            for (std::size_t j = 0; j < 3; ++j) {
                x[j] = t[0] * a1[j] + t[1] * b1[j];
                y[j] = u * a2[j] + v * b2[j];
            }
            c.push_back({PointP2(x[0], x[1], x[2]), PointP2(y[0], y[1], y[2])});
        }
        return c;
    }
    case 5: {
        // Five points of a conic projected to a line from a sixth point of
        // the same conic: the classical certified drop for five pairs.
        std::vector<Rat> ts;
        while (ts.size() < 6) {
            const Rat t = small_rat(rng);
            if (std::find(ts.begin(), ts.end(), t) == ts.end()) ts.push_back(t);
        }
        const PointP2 center = circle_point(ts[5]);
        const QMatrix t = projection_killing(center);
        Config c;
        for (std::size_t n = 0; n < 5; ++n) {
            const PointP2 x = circle_point(ts[n]);
            std::array<Rat, 2> img{};
            for (std::size_t r = 0; r < 2; ++r)
                for (std::size_t j = 0; j < 3; ++j) img[r] += t.at(r, j) * x[j];
            c.push_back({x, PointP2(img[0], img[1], Rat(0))});
        }
        if (rng.next() % 2 == 0) c = swap_sides(c);
        return c;
    }
    case 6: {
        for (int attempt = 0; attempt < 200; ++attempt) {
            Config five;
            std::vector<PointP2> xs;
            std::vector<PointP2> ys;
            for (std::size_t n = 0; n < 5; ++n) {
                five.push_back({random_point_p2(rng), random_point_p2(rng)});
                xs.push_back(five.back().x);
                ys.push_back(five.back().y);
            }
            if (!general_position_p2(xs) || !general_position_p2(ys)) continue;
            try {
                five.push_back(sixth_pair(five));
            } catch (const Error&) {
                continue;
            }
            return five;
        }
        throw Error(ErrorKind::DegenerateInput,
                    "no general-position five-pair seed found for the sixth-pair construction");
    }
    default:
        break;
    }
    throw Error(ErrorKind::DimensionMismatch, "deficient constructions cover 2..6 pairs");
}

ConfigP1 coincidence_config_p1(SplitMix64& rng, std::size_t k) {
    enum Pattern { FullPair, OneSidePoint, WholeSide };
    std::vector<Pattern> menu = {FullPair, OneSidePoint};
    if (k >= 3) menu.push_back(WholeSide);
    const auto pattern = menu[static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(menu.size()) - 1))];
    std::vector<PointP1> xs;
    std::vector<PointP1> ys;
    for (std::size_t n = 0; n < k; ++n) {
        xs.push_back(random_point_p1(rng));
        ys.push_back(random_point_p1(rng));
    }
    const auto i = static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(k) - 1));
    auto other_index = [&](std::size_t skip) {
        while (true) {
            const auto j = static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(k) - 1));
            if (j != skip) return j;
        }
    };
    switch (pattern) {
    case FullPair: {
        const std::size_t j = other_index(i);
        xs[j] = xs[i];
        ys[j] = ys[i];
        break;
    }
    case OneSidePoint: {
        const std::size_t j = other_index(i);
        xs[j] = xs[i];
        break;
    }
    case WholeSide:
        for (auto& p : xs) p = xs[0];
        break;
    }
    const bool flip = rng.next() % 2 == 0;
    ConfigP1 c;
    for (std::size_t n = 0; n < k; ++n)
        c.push_back(flip ? PairP1{ys[n], xs[n]} : PairP1{xs[n], ys[n]});
    return c;
}

PointP1 apply_2x2(const QMatrix& m, const PointP1& p) {
    return PointP1(m.at(0, 0) * p[0] + m.at(0, 1) * p[1], m.at(1, 0) * p[0] + m.at(1, 1) * p[1]);
}

ConfigP1 deficient_config_p1(SplitMix64& rng, std::size_t k) {
    switch (k) {
    case 2: {
        const PairP1 p{random_point_p1(rng), random_point_p1(rng)};
        return {p, p};
    }
    case 3: {
        const PointP1 shared = random_point_p1(rng);
        const bool flip = rng.next() % 2 == 0;
        ConfigP1 c;
        for (std::size_t n = 0; n < 3; ++n) {
            const PointP1 other = random_point_p1(rng);
            c.push_back(flip ? PairP1{other, shared} : PairP1{shared, other});
        }
        return c;
    }
    case 4: {
        const QMatrix m = random_invertible(rng, 2);
        std::vector<PointP1> xs;
        while (xs.size() < 4) xs.push_back(distinct_point_p1(rng, xs));
        ConfigP1 c;
        for (const auto& x : xs) c.push_back({x, apply_2x2(m, x)});
        return c;
    }
    default:
        break;
    }
    throw Error(ErrorKind::DimensionMismatch, "deficient line constructions cover 2..4 pairs");
}

} // namespace

const char* regime_name(Regime r) {
    switch (r) {
    case Regime::Generic: return "generic";
    case Regime::CollinearSide: return "collinear-side";
    case Regime::PlantedCoincidence: return "planted-coincidence";
    case Regime::PlantedHomography: return "planted-homography";
    case Regime::SynthesizedDeficient: return "synthesized-deficient";
    }
    return "unknown";
}

Regime regime_from_name(const std::string& name) {
    for (Regime r : all_regimes())
        if (name == regime_name(r)) return r;
    // Accepted alias: some callers describe this regime by how the
    // configurations are planted rather than by the constructor used.
    if (name == "planted-degenerate") return Regime::SynthesizedDeficient;
    throw Error(ErrorKind::ParseError,
                "unknown regime '" + name +
                    "' (expected generic, collinear-side, planted-coincidence, "
                    "planted-homography, or synthesized-deficient)");
}

const std::array<Regime, 5>& all_regimes() {
    static const std::array<Regime, 5> regimes = {
        Regime::Generic, Regime::CollinearSide, Regime::PlantedCoincidence,
        Regime::PlantedHomography, Regime::SynthesizedDeficient};
    return regimes;
}

Config generate_config(std::uint64_t seed, std::size_t k, Regime regime) {
    if (k < 2 || k > 6)
        throw Error(ErrorKind::DimensionMismatch,
                    "generation covers 2..6 pairs, got " + std::to_string(k));
    SplitMix64 rng{seed};
    switch (regime) {
    case Regime::Generic:
        return zip(random_points(rng, k), random_points(rng, k));
    case Regime::CollinearSide: {
        const bool x_side = rng.next() % 2 == 0;
        const auto line = collinear_points(rng, k);
        const auto loose = random_points(rng, k);
        return x_side ? zip(line, loose) : zip(loose, line);
    }
    case Regime::PlantedCoincidence:
        return coincidence_config(rng, k);
    case Regime::PlantedHomography:
        return homography_config(rng, k);
    case Regime::SynthesizedDeficient:
        return deficient_config(rng, k);
    }
    throw Error(ErrorKind::ParseError, "unknown regime");
}

ConfigP1 generate_config_p1(std::uint64_t seed, std::size_t k, Regime regime) {
    if (k < 2 || k > 4)
        throw Error(ErrorKind::DimensionMismatch,
                    "line generation covers 2..4 pairs, got " + std::to_string(k));
    SplitMix64 rng{seed};
    switch (regime) {
    case Regime::Generic:
    case Regime::CollinearSide: {
        ConfigP1 c;
        for (std::size_t n = 0; n < k; ++n) c.push_back({random_point_p1(rng), random_point_p1(rng)});
        return c;
    }
    case Regime::PlantedCoincidence:
        return coincidence_config_p1(rng, k);
    case Regime::PlantedHomography: {
        const QMatrix m = random_invertible(rng, 2);
        ConfigP1 c;
        for (std::size_t n = 0; n < k; ++n) {
            const PointP1 x = random_point_p1(rng);
            c.push_back({x, apply_2x2(m, x)});
        }
        return c;
    }
    case Regime::SynthesizedDeficient:
        return deficient_config_p1(rng, k);
    }
    throw Error(ErrorKind::ParseError, "unknown regime");
}

} // namespace rankdrop
