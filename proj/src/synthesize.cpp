#include "rankdrop/synthesize.hpp"

#include "rankdrop/error.hpp"
#include "rankdrop/invariants.hpp"
#include "rankdrop/poly.hpp"

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

namespace rankdrop {

namespace {

QMatrix canonical_projection(const QMatrix& t) {
    if (t.rows() != 2 || t.cols() != 3) {
        throw Error(ErrorKind::DimensionMismatch, "projection matrix must be 2x3");
    }
    if (rank(t) != 2) {
        throw Error(ErrorKind::DegenerateInput, "projection matrix must have rank 2");
    }
    std::vector<Rat> flat;
    flat.reserve(6);
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 3; ++c) {
            flat.push_back(t.at(r, c));
        }
    }
    const auto canon = canonical_integer_vector(flat);
    QMatrix out(2, 3);
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 3; ++c) {
            out.at(r, c) = canon[3 * r + c];
        }
    }
    return out;
}

PointP2 kernel_point(const QMatrix& t) {
    const auto ker = null_space(t);
    if (ker.size() != 1) {
        throw Error(ErrorKind::DegenerateInput, "projection matrix must have a point kernel");
    }
    return PointP2(ker[0]);
}

std::array<PointP2, 4> standard_frame() {
    return {PointP2(Rat(1), Rat(0), Rat(0)), PointP2(Rat(0), Rat(1), Rat(0)),
            PointP2(Rat(0), Rat(0), Rat(1)), PointP2(Rat(1), Rat(1), Rat(1))};
}

std::vector<PointP2> x_side(const Config& c) {
    std::vector<PointP2> out;
    out.reserve(c.size());
    for (const auto& pair : c) out.push_back(pair.x);
    return out;
}

std::vector<PointP2> y_side(const Config& c) {
    std::vector<PointP2> out;
    out.reserve(c.size());
    for (const auto& pair : c) out.push_back(pair.y);
    return out;
}

bool all_zero(const std::vector<Rat>& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& q) { return q == 0; });
}

/// The coefficient row of a conic in the monomial order
/// (p₁², p₁p₂, p₂², p₁p₃, p₂p₃, p₃²).
std::vector<Rat> conic_row(const QMatrix& s) {
    return {s.at(0, 0), Rat(2) * s.at(0, 1), s.at(1, 1),
            Rat(2) * s.at(0, 2), Rat(2) * s.at(1, 2), s.at(2, 2)};
}

/// Map the conic through the five src points by the homographies matching the
/// four (src → dst) pairs omitting each index in turn; return the single
/// common point of the five image conics.
PointP2 common_image_conic_point(const std::array<PointP2, 5>& src,
                                 const std::array<PointP2, 5>& dst) {
    const Conic base = conic_through_5(src);
    QMatrix stack(5, 6);
    for (std::size_t omit = 0; omit < 5; ++omit) {
        std::vector<PointP2> s4, d4;
        for (std::size_t j = 0; j < 5; ++j) {
            if (j == omit) continue;
            s4.push_back(src[j]);
            d4.push_back(dst[j]);
        }
        const Homography h = homography_from_4({s4[0], s4[1], s4[2], s4[3]},
                                               {d4[0], d4[1], d4[2], d4[3]});
        const QMatrix hinv = inverse(h.matrix());
        const QMatrix image = hinv.transposed() * base.sym() * hinv;
        const auto row = conic_row(image);
        for (std::size_t col = 0; col < 6; ++col) stack.at(omit, col) = row[col];
    }
    const auto ker = null_space(stack);
    if (ker.size() != 1) {
        throw Error(ErrorKind::NoCommonPoint, "the five image conics do not meet in one point");
    }
    const auto& w = ker[0];
    // A common point makes the kernel vector a Veronese image
    // (y₀², y₀y₁, y₁², y₀y₂, y₁y₂, y₂²), so this symmetric fill has rank 1.
    const QMatrix gram{{w[0], w[1], w[3]}, {w[1], w[2], w[4]}, {w[3], w[4], w[5]}};
    if (gram.is_zero() || rank(gram) != 1) {
        throw Error(ErrorKind::NoCommonPoint, "the common conic solution is not a single point");
    }
    for (std::size_t r = 0; r < 3; ++r) {
        if (!all_zero(gram.row(r))) return PointP2(gram.row(r));
    }
    throw Error(ErrorKind::NoCommonPoint, "the common conic solution is not a single point");
}

/// Projection from a center onto the coordinate line opposite the center's
/// first nonzero coordinate, composed with the chart on that line: a 2×3
/// matrix of rank 2 whose kernel is exactly the center.
QMatrix chart_projection(const PointP2& center) {
    std::size_t drop = 0;
    while (center[drop] == 0) ++drop;
    QMatrix m(3, 3);
    for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t c = 0; c < 3; ++c) {
            m.at(r, c) = (r == c ? center[drop] : Rat(0)) - (c == drop ? center[r] : Rat(0));
        }
    }
    QMatrix chart(2, 3);
    std::size_t out_row = 0;
    for (std::size_t c = 0; c < 3; ++c) {
        if (c == drop) continue;
        chart.at(out_row++, c) = Rat(1);
    }
    return chart * m;
}

/// Fit the remaining P¹ homography so that the composite maps every x_i to
/// y_i; empty when no such map through this center exists.
std::optional<ProjectionMap> projection_through(const std::vector<PointP2>& xs,
                                                const std::vector<PointP1>& ys,
                                                const PointP2& center) {
    for (const auto& x : xs) {
        if (x == center) return std::nullopt;
    }
    const QMatrix p = chart_projection(center);
    std::vector<PointP1> images;
    images.reserve(xs.size());
    for (const auto& x : xs) {
        const auto v = matvec(p, x.coords());
        if (all_zero(v)) return std::nullopt;
        images.emplace_back(v[0], v[1]);
    }
    // Three pairwise-distinct image points anchor the fit.
    std::vector<std::size_t> anchors;
    for (std::size_t i = 0; i < images.size() && anchors.size() < 3; ++i) {
        bool fresh = true;
        for (std::size_t a : anchors) {
            if (images[a] == images[i] || ys[a] == ys[i]) fresh = false;
        }
        if (fresh) anchors.push_back(i);
    }
    if (anchors.size() < 3) return std::nullopt;
    HomographyP1 h = HomographyP1::identity();
    try {
        h = homography_p1_from_3({images[anchors[0]], images[anchors[1]], images[anchors[2]]},
                                 {ys[anchors[0]], ys[anchors[1]], ys[anchors[2]]});
    } catch (const Error&) {
        return std::nullopt;
    }
    const ProjectionMap out(h.matrix() * p);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (out.apply(xs[i]) != ys[i]) return std::nullopt;
    }
    return out;
}

/// The cubic w ↦ a_m(u₀, u₁, w)·J_n − a_n(u₀, u₁, w)·J_m, interpolated from
/// four raw evaluations of the covariant cubics.
Poly specialized_cross(const std::array<PointP2, 6>& xs, const Sextuple& j, std::size_t m,
                       std::size_t n, const Rat& u0, const Rat& u1) {
    std::vector<std::pair<Rat, Rat>> pts;
    pts.reserve(4);
    for (int w = 0; w <= 3; ++w) {
        const Sextuple s = covariant_cubics(xs, std::array<Rat, 3>{u0, u1, Rat(w)});
        pts.emplace_back(Rat(w), s[m] * j[n] - s[n] * j[m]);
    }
    return lagrange_interpolate(pts);
}

bool cross_vanishes_on_probes(const std::array<PointP2, 6>& xs, const Sextuple& j, std::size_t m,
                              std::size_t n) {
    for (int t : {0, 1, -1, 2, -2}) {
        if (!specialized_cross(xs, j, m, n, Rat(t), Rat(1)).is_zero()) return false;
    }
    return specialized_cross(xs, j, m, n, Rat(1), Rat(0)).is_zero();
}

struct CrossPair {
    std::size_t m;
    std::size_t n;
};

/// Exact linear route: the incidence conditions T·x_i ∝ y_i are one bilinear
/// equation per pair, a 6×6 rational system in the entries of T. Any rank-2
/// kernel element with no pair collapsing to zero is a valid projection.
ProjectionMap incidence_projection(const std::vector<PointP2>& xs, const std::vector<PointP1>& ys) {
    QMatrix a(xs.size(), 6);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t col = 0; col < 3; ++col) {
            a.at(i, col) = xs[i][col] * ys[i][1];
            a.at(i, 3 + col) = -(xs[i][col] * ys[i][0]);
        }
    }
    const auto ker = null_space(a);
    std::vector<std::vector<Rat>> trials;
    for (const auto& v : ker) trials.push_back(v);
    for (std::size_t i = 0; i < ker.size(); ++i) {
        for (std::size_t j = i + 1; j < ker.size(); ++j) {
            for (int lam : {1, -1, 2, -2, 3, -3, 4, -4, 5, -5}) {
                std::vector<Rat> v(6);
                for (std::size_t k = 0; k < 6; ++k) v[k] = ker[i][k] + Rat(lam) * ker[j][k];
                trials.push_back(std::move(v));
            }
        }
    }
    for (const auto& v : trials) {
        QMatrix t(2, 3);
        for (std::size_t r = 0; r < 2; ++r) {
            for (std::size_t c = 0; c < 3; ++c) t.at(r, c) = v[3 * r + c];
        }
        if (rank(t) != 2) continue;
        bool valid = true;
        for (const auto& x : xs) {
            if (all_zero(matvec(t, x.coords()))) {
                valid = false;
                break;
            }
        }
        if (valid) return ProjectionMap(t);
    }
    throw Error(ErrorKind::NoRationalCenter, "no rational projection satisfies the incidences");
}

} // namespace

ProjectionMap::ProjectionMap(const QMatrix& t)
    : t_(canonical_projection(t)), center_(kernel_point(t_)) {}

PointP1 ProjectionMap::apply(const PointP2& p) const {
    const auto v = matvec(t_, p.coords());
    if (all_zero(v)) {
        throw Error(ErrorKind::DegenerateInput, "projection is undefined at its center");
    }
    return PointP1(v[0], v[1]);
}

PointPair sixth_pair(const Config& c) {
    if (c.size() != 5) {
        throw Error(ErrorKind::DimensionMismatch, "sixth pair needs exactly five pairs");
    }
    const auto xs = x_side(c);
    const auto ys = y_side(c);
    if (!general_position_p2(xs) || !general_position_p2(ys)) {
        throw Error(ErrorKind::DegenerateInput, "sixth pair needs both sides in general position");
    }
    const auto frame = standard_frame();
    const Homography hx = homography_from_4({xs[0], xs[1], xs[2], xs[3]}, frame);
    const Homography hy = homography_from_4({ys[0], ys[1], ys[2], ys[3]}, frame);
    const PointP2 a = hx.apply(xs[4]);
    const PointP2 b = hy.apply(ys[4]);
    const Rat d1 = b[2] * a[1] - a[2] * b[1];
    const Rat d2 = b[2] * a[0] - a[2] * b[0];
    const Rat d3 = b[0] * a[1] - a[0] * b[1];
    if (d1 == 0 && d2 == 0 && d3 == 0) {
        throw Error(ErrorKind::HomographyRelated,
                    "the five pairs are homography related, so no unique sixth pair exists");
    }
    const std::vector<Rat> x6{(b[2] - b[1]) * d2 * d3, (b[2] - b[0]) * d1 * d3,
                              (b[0] - b[1]) * d1 * d2};
    const std::vector<Rat> y6{(a[2] - a[1]) * d2 * d3, (a[2] - a[0]) * d1 * d3,
                              (a[0] - a[1]) * d1 * d2};
    if (all_zero(x6) || all_zero(y6)) {
        throw Error(ErrorKind::DegenerateInput, "the sixth-pair formula degenerates here");
    }
    return PointPair{hx.inverse().apply(PointP2(x6)), hy.inverse().apply(PointP2(y6))};
}

std::array<PointP2, 6> completion_y(const std::array<PointP2, 6>& xs) {
    if (!general_position_p2({xs.begin(), xs.end()})) {
        throw Error(ErrorKind::DegenerateInput, "completion needs six points in general position");
    }
    const auto frame = standard_frame();
    const Homography h = homography_from_4({xs[0], xs[1], xs[2], xs[3]}, frame);
    const PointP2 a = h.apply(xs[4]);
    const PointP2 b = h.apply(xs[5]);
    const Rat d1 = a[2] * b[1] - b[2] * a[1];
    const Rat d2 = a[2] * b[0] - b[2] * a[0];
    const Rat d3 = a[0] * b[1] - b[0] * a[1];
    const std::vector<Rat> y5{(b[2] - b[1]) * d2 * d3, (b[2] - b[0]) * d1 * d3,
                              (b[0] - b[1]) * d1 * d2};
    const std::vector<Rat> y6{(a[2] - a[1]) * d2 * d3, (a[2] - a[0]) * d1 * d3,
                              (a[0] - a[1]) * d1 * d2};
    if (all_zero(y5) || all_zero(y6)) {
        throw Error(ErrorKind::DegenerateInput, "the completion formula degenerates here");
    }
    return {frame[0], frame[1], frame[2], frame[3], PointP2(y5), PointP2(y6)};
}

PointPair sturm_sixth_pair(const Config& c) {
    if (c.size() != 5) {
        throw Error(ErrorKind::DimensionMismatch, "sixth pair needs exactly five pairs");
    }
    const auto xs = x_side(c);
    const auto ys = y_side(c);
    if (!general_position_p2(xs) || !general_position_p2(ys)) {
        throw Error(ErrorKind::DegenerateInput, "sixth pair needs both sides in general position");
    }
    const std::array<PointP2, 5> ax{xs[0], xs[1], xs[2], xs[3], xs[4]};
    const std::array<PointP2, 5> ay{ys[0], ys[1], ys[2], ys[3], ys[4]};
    const PointP2 y6 = common_image_conic_point(ax, ay);
    const PointP2 x6 = common_image_conic_point(ay, ax);
    return PointPair{x6, y6};
}

ProjectionMap k5_projection(const Config& c, const PointP2& center) {
    if (c.size() != 5) {
        throw Error(ErrorKind::DimensionMismatch, "projection needs exactly five pairs");
    }
    const auto xs = x_side(c);
    const auto ys = y_side(c);
    if (!general_position_p2(xs)) {
        throw Error(ErrorKind::DegenerateInput, "the x side must be in general position");
    }
    if (z_rank(c) == 5) {
        throw Error(ErrorKind::NotDeficient, "the five pairs have full rank");
    }
    const Conic omega = conic_through_5({xs[0], xs[1], xs[2], xs[3], xs[4]});
    for (const auto& x : xs) {
        if (x == center) {
            throw Error(ErrorKind::CenterNotOnConic, "the center must differ from the five points");
        }
    }
    if (!omega.contains(center)) {
        throw Error(ErrorKind::CenterNotOnConic, "the center must lie on the conic through the x side");
    }
    const auto yp = reduce_to_p1(ys);
    for (std::size_t i = 0; i < yp.size(); ++i) {
        for (std::size_t j = i + 1; j < yp.size(); ++j) {
            if (yp[i] == yp[j]) {
                throw Error(ErrorKind::DegenerateInput, "the y side must be distinct");
            }
        }
    }
    const auto pm = projection_through(xs, yp, center);
    if (!pm) {
        throw Error(ErrorKind::DegenerateInput,
                    "no projection through this center matches every pair");
    }
    return *pm;
}

ProjectionMap k6_line_projection(const Config& c) {
    if (c.size() != 6) {
        throw Error(ErrorKind::DimensionMismatch, "line projection needs exactly six pairs");
    }
    const auto xs = x_side(c);
    const auto ys = y_side(c);
    if (!general_position_p2(xs)) {
        throw Error(ErrorKind::DegenerateInput, "the x side must be in general position");
    }
    const auto yp_vec = reduce_to_p1(ys);
    for (std::size_t i = 0; i < 6; ++i) {
        for (std::size_t j = i + 1; j < 6; ++j) {
            if (yp_vec[i] == yp_vec[j]) {
                throw Error(ErrorKind::DegenerateInput, "the y side must be distinct");
            }
        }
    }
    const std::array<PointP2, 6> ax{xs[0], xs[1], xs[2], xs[3], xs[4], xs[5]};
    const std::array<PointP1, 6> ay{yp_vec[0], yp_vec[1], yp_vec[2],
                                    yp_vec[3], yp_vec[4], yp_vec[5]};
    if (line_case_form(ax, ay) != 0) {
        throw Error(ErrorKind::NotDeficient, "the six pairs have full rank");
    }
    const Sextuple jy = joubert(ay);
    if (jy.is_zero()) {
        throw Error(ErrorKind::DegenerateInput, "the line invariants vanish identically");
    }

    // Candidate centers: rational solutions of two cross-product cubics,
    // via a resultant in the third coordinate.
    std::vector<PointP2> candidates;
    candidates.emplace_back(Rat(0), Rat(0), Rat(1));
    auto push_candidate = [&candidates](const Rat& u0, const Rat& u1, const Rat& u2) {
        if (u0 == 0 && u1 == 0 && u2 == 0) return;
        const PointP2 u(u0, u1, u2);
        if (std::find(candidates.begin(), candidates.end(), u) == candidates.end()) {
            candidates.push_back(u);
        }
    };
    std::vector<CrossPair> pairs;
    for (std::size_t m = 0; m < 6 && pairs.size() < 2; ++m) {
        for (std::size_t n = m + 1; n < 6 && pairs.size() < 2; ++n) {
            if (jy[m] == 0 && jy[n] == 0) continue;
            if (!cross_vanishes_on_probes(ax, jy, m, n)) pairs.push_back({m, n});
        }
    }
    if (pairs.size() == 2) {
        // Eliminate the third coordinate: the resultant of the two cross
        // cubics in u₂ is a binary form in (u₀, u₁) of degree at most nine;
        // interpolate it from exact Sylvester determinants. The u₂-degrees
        // can drop below three (e.g. when a base point sits at (0,0,1)), so
        // read them off the samples first — each u₂-coefficient has degree
        // at most three in u₀, so ten samples cannot all miss a nonzero one.
        std::vector<Poly> sp1, sp2;
        std::vector<Rat> ts;
        long d1 = -1, d2 = -1;
        for (int k = -5; k <= 4; ++k) {
            ts.emplace_back(k);
            sp1.push_back(specialized_cross(ax, jy, pairs[0].m, pairs[0].n, ts.back(), Rat(1)));
            sp2.push_back(specialized_cross(ax, jy, pairs[1].m, pairs[1].n, ts.back(), Rat(1)));
            d1 = std::max(d1, sp1.back().degree());
            d2 = std::max(d2, sp2.back().degree());
        }
        Poly res;
        if (d1 >= 0 && d2 >= 0) {
            std::vector<std::pair<Rat, Rat>> samples;
            for (std::size_t i = 0; i < ts.size(); ++i) {
                samples.emplace_back(
                    ts[i], sylvester_resultant(sp1[i], sp2[i], static_cast<std::size_t>(d1),
                                               static_cast<std::size_t>(d2)));
            }
            res = lagrange_interpolate(samples);
        }
        std::vector<std::pair<Rat, Rat>> projections;
        if (!res.is_zero()) {
            for (const auto& root : rational_roots(res)) {
                projections.emplace_back(Rat(boost::multiprecision::numerator(root)),
                                         Rat(boost::multiprecision::denominator(root)));
            }
        }
        projections.emplace_back(Rat(1), Rat(0));
        for (const auto& [u0, u1] : projections) {
            const Poly g1 = specialized_cross(ax, jy, pairs[0].m, pairs[0].n, u0, u1);
            const Poly g2 = specialized_cross(ax, jy, pairs[1].m, pairs[1].n, u0, u1);
            Poly d = poly_gcd(g1, g2);
            if (d.is_zero()) {
                // Both cubics vanish on this whole line; consult the other
                // cross products for the missing coordinate.
                for (std::size_t m = 0; m < 6 && d.is_zero(); ++m) {
                    for (std::size_t n = m + 1; n < 6 && d.is_zero(); ++n) {
                        if (jy[m] == 0 && jy[n] == 0) continue;
                        d = specialized_cross(ax, jy, m, n, u0, u1);
                    }
                }
            }
            if (d.is_zero() || d.degree() == 0) continue;
            for (const auto& w : rational_roots(d)) push_candidate(u0, u1, w);
        }
    }
    for (const auto& u : candidates) {
        const Sextuple s = covariant_cubics(ax, u);
        if (s.is_zero() || !proportional(s, jy)) continue;
        const auto pm = projection_through(xs, yp_vec, u);
        if (pm) return *pm;
    }
    return incidence_projection(xs, yp_vec);
}

} // namespace rankdrop
