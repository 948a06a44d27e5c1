#include "rankdrop/invariants.hpp"

#include <algorithm>

namespace rankdrop {

bool Sextuple::is_zero() const {
    return std::all_of(v.begin(), v.end(), [](const Rat& q) { return q == 0; });
}

bool proportional(const Sextuple& a, const Sextuple& b) {
    for (std::size_t i = 0; i < 6; ++i) {
        for (std::size_t j = i + 1; j < 6; ++j) {
            if (a[i] * b[j] != a[j] * b[i]) {
                return false;
            }
        }
    }
    return true;
}

namespace {

// One pairing (i, j)(k, l)(r, s) of the six labels; a term of a 5-term sum.
struct Pairing {
    int i, j, k, l, r, s;
};

// The classical table: five ways to split the six labels into ordered pairs,
// one row of five per scalar. The same table drives the bar scalars, the
// Joubert invariants and the covariant cubics.
constexpr Pairing kTable[6][5] = {
    {{2, 5, 1, 3, 4, 6}, {5, 1, 4, 2, 3, 6}, {1, 4, 3, 5, 2, 6}, {4, 3, 2, 1, 5, 6}, {3, 2, 5, 4, 1, 6}},
    {{5, 3, 1, 2, 4, 6}, {1, 4, 2, 3, 5, 6}, {2, 5, 3, 4, 1, 6}, {3, 1, 4, 5, 2, 6}, {4, 2, 5, 1, 3, 6}},
    {{5, 3, 4, 1, 2, 6}, {3, 4, 2, 5, 1, 6}, {4, 2, 1, 3, 5, 6}, {2, 1, 5, 4, 3, 6}, {1, 5, 3, 2, 4, 6}},
    {{4, 5, 3, 1, 2, 6}, {5, 3, 2, 4, 1, 6}, {4, 1, 2, 5, 3, 6}, {3, 2, 1, 5, 4, 6}, {2, 1, 4, 3, 5, 6}},
    {{3, 1, 2, 4, 5, 6}, {1, 2, 5, 3, 4, 6}, {2, 5, 4, 1, 3, 6}, {5, 4, 3, 2, 1, 6}, {4, 3, 1, 5, 2, 6}},
    {{4, 2, 3, 5, 1, 6}, {2, 3, 1, 4, 5, 6}, {3, 1, 5, 2, 4, 6}, {1, 5, 4, 3, 2, 6}, {5, 4, 2, 1, 3, 6}},
};

const PointP2& at(const std::array<PointP2, 6>& p, int one_based) {
    return p[static_cast<std::size_t>(one_based - 1)];
}

const PointP1& at(const std::array<PointP1, 6>& p, int one_based) {
    return p[static_cast<std::size_t>(one_based - 1)];
}

} // namespace

Rat triple_invariant(const std::array<PointP2, 6>& p, int i, int j, int k, int l, int r, int s) {
    return bracket3(at(p, i), at(p, j), at(p, r)) * bracket3(at(p, k), at(p, l), at(p, s)) -
           bracket3(at(p, i), at(p, j), at(p, s)) * bracket3(at(p, k), at(p, l), at(p, r));
}

Sextuple coble_bar(const std::array<PointP2, 6>& p) {
    Sextuple out{};
    for (std::size_t row = 0; row < 6; ++row) {
        Rat acc = 0;
        for (const Pairing& t : kTable[row]) {
            acc += triple_invariant(p, t.i, t.j, t.k, t.l, t.r, t.s);
        }
        out[row] = acc;
    }
    return out;
}

Sextuple joubert(const std::array<PointP1, 6>& p) {
    Sextuple out{};
    for (std::size_t row = 0; row < 6; ++row) {
        Rat acc = 0;
        for (const Pairing& t : kTable[row]) {
            acc += bracket2(at(p, t.i), at(p, t.j)) * bracket2(at(p, t.k), at(p, t.l)) *
                   bracket2(at(p, t.r), at(p, t.s));
        }
        out[row] = acc;
    }
    return out;
}

Sextuple covariant_cubics(const std::array<PointP2, 6>& p, const PointP2& u) {
    Sextuple out{};
    for (std::size_t row = 0; row < 6; ++row) {
        Rat acc = 0;
        for (const Pairing& t : kTable[row]) {
            acc += bracket3(at(p, t.i), at(p, t.j), u) * bracket3(at(p, t.k), at(p, t.l), u) *
                   bracket3(at(p, t.r), at(p, t.s), u);
        }
        out[row] = acc;
    }
    return out;
}

namespace {

Rat raw_bracket(const PointP2& a, const PointP2& b, const std::array<Rat, 3>& u) {
    return a[0] * (b[1] * u[2] - b[2] * u[1]) - a[1] * (b[0] * u[2] - b[2] * u[0]) +
           a[2] * (b[0] * u[1] - b[1] * u[0]);
}

} // namespace

Sextuple covariant_cubics(const std::array<PointP2, 6>& p, const std::array<Rat, 3>& u) {
    Sextuple out{};
    for (std::size_t row = 0; row < 6; ++row) {
        Rat acc = 0;
        for (const Pairing& t : kTable[row]) {
            acc += raw_bracket(at(p, t.i), at(p, t.j), u) * raw_bracket(at(p, t.k), at(p, t.l), u) *
                   raw_bracket(at(p, t.r), at(p, t.s), u);
        }
        out[row] = acc;
    }
    return out;
}

std::array<Rat, 3> hexahedral_residuals(const std::array<PointP2, 6>& p, const Sextuple& z) {
    Rat cubes = 0, sum = 0, pairing = 0;
    Sextuple bar = coble_bar(p);
    for (std::size_t i = 0; i < 6; ++i) {
        cubes += z[i] * z[i] * z[i];
        sum += z[i];
        pairing += bar[i] * z[i];
    }
    return {cubes, sum, pairing};
}

Rat line_case_form(const std::array<PointP2, 6>& xs, const std::array<PointP1, 6>& ys) {
    Sextuple bar = coble_bar(xs);
    Sextuple jou = joubert(ys);
    Rat acc = 0;
    for (std::size_t i = 0; i < 6; ++i) {
        acc += bar[i] * jou[i];
    }
    return acc;
}

std::optional<Sextuple> collinear_side_joubert(const std::vector<PointP2>& pts) {
    if (pts.size() != 6 || !collinear(pts)) {
        return std::nullopt;
    }
    std::vector<PointP2> distinct;
    for (const PointP2& p : pts) {
        if (std::find(distinct.begin(), distinct.end(), p) == distinct.end()) {
            distinct.push_back(p);
        }
    }
    if (distinct.size() < 2) {
        return std::nullopt;
    }
    std::vector<PointP1> reduced = reduce_to_p1(pts);
    return joubert({reduced[0], reduced[1], reduced[2], reduced[3], reduced[4], reduced[5]});
}

} // namespace rankdrop
