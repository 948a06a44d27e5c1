#include "rankdrop/projective.hpp"

#include "rankdrop/error.hpp"

#include <algorithm>
#include <sstream>

namespace rankdrop {

namespace {

std::vector<Rat> canonical_point(std::vector<Rat> coords) {
    coords = canonical_integer_vector(coords);
    bool all_zero = std::all_of(coords.begin(), coords.end(), [](const Rat& q) { return q == 0; });
    if (all_zero) {
        throw Error(ErrorKind::DegenerateInput, "the zero vector does not represent a projective point");
    }
    return coords;
}

} // namespace

PointP2::PointP2(const Rat& a, const Rat& b, const Rat& c) : PointP2(std::vector<Rat>{a, b, c}) {}

PointP2::PointP2(const std::vector<Rat>& coords) {
    if (coords.size() != 3) {
        throw Error(ErrorKind::DimensionMismatch, "a plane point needs 3 coordinates");
    }
    auto v = canonical_point(coords);
    v_ = {v[0], v[1], v[2]};
}

PointP1::PointP1(const Rat& a, const Rat& b) : PointP1(std::vector<Rat>{a, b}) {}

PointP1::PointP1(const std::vector<Rat>& coords) {
    if (coords.size() != 2) {
        throw Error(ErrorKind::DimensionMismatch, "a line point needs 2 coordinates");
    }
    auto v = canonical_point(coords);
    v_ = {v[0], v[1]};
}

ExtRat ExtRat::ratio(const Rat& num, const Rat& den) {
    if (den == 0) {
        return num == 0 ? indeterminate() : infinity();
    }
    return finite(num / den);
}

const Rat& ExtRat::value() const {
    if (kind_ != Kind::Finite) {
        throw Error(ErrorKind::DegenerateInput, "no finite value to extract");
    }
    return value_;
}

std::string ext_rat_str(const ExtRat& q) {
    if (q.is_infinity()) {
        return "inf";
    }
    if (q.is_indeterminate()) {
        return "indeterminate";
    }
    return rat_str(q.value());
}

Rat bracket3(const PointP2& a, const PointP2& b, const PointP2& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
           a[2] * (b[0] * c[1] - b[1] * c[0]);
}

Rat bracket2(const PointP1& a, const PointP1& b) { return a[0] * b[1] - a[1] * b[0]; }

ExtRat cross_ratio_p1(const PointP1& p1, const PointP1& p2, const PointP1& p3, const PointP1& p4) {
    return ExtRat::ratio(bracket2(p1, p3) * bracket2(p2, p4), bracket2(p1, p4) * bracket2(p2, p3));
}

ExtRat planar_cross_ratio(const PointP2& p1, const PointP2& p2, const PointP2& p3,
                          const PointP2& p4, const PointP2& p5) {
    return ExtRat::ratio(bracket3(p1, p3, p5) * bracket3(p2, p4, p5),
                         bracket3(p1, p4, p5) * bracket3(p2, p3, p5));
}

PointP2 cross(const PointP2& a, const PointP2& b) {
    return PointP2(a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]);
}

bool collinear(const std::vector<PointP2>& points) {
    const std::size_t n = points.size();
    if (n < 3) {
        return true;
    }
    for (std::size_t i = 0; i + 2 < n; ++i) {
        for (std::size_t j = i + 1; j + 1 < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                if (bracket3(points[i], points[j], points[k]) != 0) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::vector<PointP1> reduce_to_p1(const std::vector<PointP2>& points) {
    if (!collinear(points)) {
        throw Error(ErrorKind::DegenerateInput, "points are not collinear");
    }
    std::size_t second = points.size();
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (!(points[i] == points[0])) {
            second = i;
            break;
        }
    }
    if (points.size() < 2 || second == points.size()) {
        throw Error(ErrorKind::DegenerateInput, "need two distinct points to pin down a line");
    }
    PointP2 line = cross(points[0], points[second]);
    std::size_t drop = 0;
    while (line[drop] == 0) {
        ++drop;
    }
    std::size_t a = drop == 0 ? 1 : 0;
    std::size_t b = drop == 2 ? 1 : 2;
    std::vector<PointP1> out;
    out.reserve(points.size());
    for (const PointP2& p : points) {
        out.emplace_back(p[a], p[b]);
    }
    return out;
}

Conic::Conic(const QMatrix& sym) : sym_(3, 3) {
    if (sym.rows() != 3 || sym.cols() != 3) {
        throw Error(ErrorKind::DimensionMismatch, "a conic matrix is 3x3");
    }
    if (!(sym.transposed() == sym)) {
        throw Error(ErrorKind::DegenerateInput, "a conic matrix must be symmetric");
    }
    std::vector<Rat> entries;
    entries.reserve(9);
    for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t c = 0; c < 3; ++c) {
            entries.push_back(sym.at(r, c));
        }
    }
    entries = canonical_integer_vector(entries);
    if (std::all_of(entries.begin(), entries.end(), [](const Rat& q) { return q == 0; })) {
        throw Error(ErrorKind::DegenerateInput, "the zero matrix is not a conic");
    }
    for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t c = 0; c < 3; ++c) {
            sym_.at(r, c) = entries[3 * r + c];
        }
    }
}

Rat Conic::evaluate(const PointP2& p) const {
    Rat acc = 0;
    for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t c = 0; c < 3; ++c) {
            acc += p[r] * sym_.at(r, c) * p[c];
        }
    }
    return acc;
}

namespace {

// Coefficient order for conics as 6-vectors: p1^2, p1 p2, p2^2, p1 p3, p2 p3, p3^2.
std::vector<Rat> conic_monomials(const PointP2& p) {
    return {p[0] * p[0], p[0] * p[1], p[1] * p[1], p[0] * p[2], p[1] * p[2], p[2] * p[2]};
}

Conic conic_from_coeffs(const std::vector<Rat>& c) {
    QMatrix s(3, 3);
    // Doubling the matrix keeps entries integral; a conic is only defined up
    // to scale anyway.
    s.at(0, 0) = 2 * c[0];
    s.at(1, 1) = 2 * c[2];
    s.at(2, 2) = 2 * c[5];
    s.at(0, 1) = s.at(1, 0) = c[1];
    s.at(0, 2) = s.at(2, 0) = c[3];
    s.at(1, 2) = s.at(2, 1) = c[4];
    return Conic(s);
}

} // namespace

Conic conic_through_5(const std::array<PointP2, 5>& p) {
    QMatrix m(5, 6);
    for (std::size_t i = 0; i < 5; ++i) {
        auto row = conic_monomials(p[i]);
        for (std::size_t j = 0; j < 6; ++j) {
            m.at(i, j) = row[j];
        }
    }
    auto kernel = null_space(m);
    if (kernel.size() != 1) {
        throw Error(ErrorKind::NotUnique, "the five points do not determine a unique conic");
    }
    return conic_from_coeffs(kernel[0]);
}

bool six_on_conic(const std::array<PointP2, 6>& p) {
    Rat lhs = bracket3(p[0], p[2], p[4]) * bracket3(p[1], p[3], p[4]) *
              bracket3(p[0], p[3], p[5]) * bracket3(p[1], p[2], p[5]);
    Rat rhs = bracket3(p[0], p[2], p[5]) * bracket3(p[1], p[3], p[5]) *
              bracket3(p[0], p[3], p[4]) * bracket3(p[1], p[2], p[4]);
    return lhs == rhs;
}

ExtRat conic_cross_ratio(const Conic& w, const PointP2& p1, const PointP2& p2, const PointP2& p3,
                         const PointP2& p4) {
    if (w.degenerate()) {
        throw Error(ErrorKind::DegenerateConic, "cross-ratio needs a non-degenerate conic");
    }
    const std::array<const PointP2*, 4> pts = {&p1, &p2, &p3, &p4};
    for (const PointP2* p : pts) {
        if (!w.contains(*p)) {
            throw Error(ErrorKind::PointNotOnConic, "cross-ratio arguments must lie on the conic");
        }
    }
    // Walk lines through p1 in a fixed direction order; each non-tangent line
    // meets the conic in exactly one further point.
    for (std::size_t index = 0; index < 2000; ++index) {
        auto t = small_height_triple(index);
        PointP2 d{Rat(t[0]), Rat(t[1]), Rat(t[2])};
        if (d == p1) {
            continue;
        }
        PointP2 candidate = second_conic_intersection(w, p1, d);
        if (candidate == p1 || candidate == p2 || candidate == p3 || candidate == p4) {
            continue;
        }
        return planar_cross_ratio(p1, p2, p3, p4, candidate);
    }
    throw Error(ErrorKind::DegenerateInput, "no auxiliary conic point found");
}

PointP2 second_conic_intersection(const Conic& w, const PointP2& on_conic,
                                  const PointP2& direction) {
    if (w.degenerate()) {
        throw Error(ErrorKind::DegenerateConic, "chord intersection needs a non-degenerate conic");
    }
    if (!w.contains(on_conic)) {
        throw Error(ErrorKind::PointNotOnConic, "chord base point must lie on the conic");
    }
    if (direction == on_conic) {
        throw Error(ErrorKind::DegenerateInput, "chord needs two distinct points");
    }
    const QMatrix& s = w.sym();
    auto bilinear = [&s](const PointP2& u, const PointP2& v) {
        Rat acc = 0;
        for (std::size_t r = 0; r < 3; ++r) {
            for (std::size_t c = 0; c < 3; ++c) {
                acc += u[r] * s.at(r, c) * v[c];
            }
        }
        return acc;
    };
    const Rat dd = bilinear(direction, direction);
    const Rat qd = bilinear(on_conic, direction);
    if (dd == 0) {
        // The direction point itself lies on the conic; for the tangent line
        // the residual intersection is the base point again.
        return qd == 0 ? on_conic : direction;
    }
    std::vector<Rat> v(3);
    for (std::size_t i = 0; i < 3; ++i) {
        v[i] = on_conic[i] * dd - Rat(2) * qd * direction[i];
    }
    return PointP2(v);
}

namespace {

QMatrix canonical_matrix(const QMatrix& m) {
    std::vector<Rat> entries;
    entries.reserve(m.rows() * m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            entries.push_back(m.at(r, c));
        }
    }
    entries = canonical_integer_vector(entries);
    QMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            out.at(r, c) = entries[m.cols() * r + c];
        }
    }
    return out;
}

} // namespace

Homography::Homography(const QMatrix& m) : m_(3, 3) {
    if (m.rows() != 3 || m.cols() != 3) {
        throw Error(ErrorKind::DimensionMismatch, "a plane homography is 3x3");
    }
    if (det(m) == 0) {
        throw Error(ErrorKind::DegenerateInput, "a homography must be invertible");
    }
    m_ = canonical_matrix(m);
}

PointP2 Homography::apply(const PointP2& p) const { return PointP2(matvec(m_, p.coords())); }

Homography Homography::inverse() const { return Homography(rankdrop::inverse(m_)); }

Homography Homography::compose(const Homography& inner) const {
    return Homography(m_ * inner.m_);
}

HomographyP1::HomographyP1(const QMatrix& m) : m_(2, 2) {
    if (m.rows() != 2 || m.cols() != 2) {
        throw Error(ErrorKind::DimensionMismatch, "a line homography is 2x2");
    }
    if (det(m) == 0) {
        throw Error(ErrorKind::DegenerateInput, "a homography must be invertible");
    }
    m_ = canonical_matrix(m);
}

PointP1 HomographyP1::apply(const PointP1& p) const {
    auto v = matvec(m_, p.coords());
    return PointP1(v[0], v[1]);
}

HomographyP1 HomographyP1::inverse() const { return HomographyP1(rankdrop::inverse(m_)); }

Homography homography_from_4(const std::array<PointP2, 4>& src, const std::array<PointP2, 4>& dst) {
    // For each pair, (H x) × y = 0 gives three equations linear in the nine
    // entries of H (unknown h[3r+c] = H | r,c).
    QMatrix system(12, 9);
    for (std::size_t i = 0; i < 4; ++i) {
        const PointP2& x = src[i];
        const PointP2& y = dst[i];
        for (std::size_t c = 0; c < 3; ++c) {
            // (Hx)_1 y_2 - (Hx)_2 y_1 = 0
            system.at(3 * i + 0, 3 * 1 + c) += x[c] * y[2];
            system.at(3 * i + 0, 3 * 2 + c) -= x[c] * y[1];
            // (Hx)_2 y_0 - (Hx)_0 y_2 = 0
            system.at(3 * i + 1, 3 * 2 + c) += x[c] * y[0];
            system.at(3 * i + 1, 3 * 0 + c) -= x[c] * y[2];
            // (Hx)_0 y_1 - (Hx)_1 y_0 = 0
            system.at(3 * i + 2, 3 * 0 + c) += x[c] * y[1];
            system.at(3 * i + 2, 3 * 1 + c) -= x[c] * y[0];
        }
    }
    auto kernel = null_space(system);
    if (kernel.size() != 1) {
        throw Error(ErrorKind::DegenerateInput, "the four pairs do not determine a unique homography");
    }
    QMatrix h(3, 3);
    for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t c = 0; c < 3; ++c) {
            h.at(r, c) = kernel[0][3 * r + c];
        }
    }
    if (det(h) == 0) {
        throw Error(ErrorKind::DegenerateInput, "the fitted map is not invertible");
    }
    return Homography(h);
}

namespace {

// The 2x2 matrix sending the standard frame e1, e2, e1+e2 to three distinct
// points of the line.
QMatrix frame_map_p1(const std::array<PointP1, 3>& p) {
    Rat d = bracket2(p[0], p[1]);
    if (d == 0 || bracket2(p[0], p[2]) == 0 || bracket2(p[1], p[2]) == 0) {
        throw Error(ErrorKind::DegenerateInput, "need three distinct points on the line");
    }
    // Solve lambda0 p0 + lambda1 p1 = p2.
    Rat l0 = bracket2(p[2], p[1]) / d;
    Rat l1 = bracket2(p[0], p[2]) / d;
    QMatrix m(2, 2);
    m.at(0, 0) = l0 * p[0][0];
    m.at(1, 0) = l0 * p[0][1];
    m.at(0, 1) = l1 * p[1][0];
    m.at(1, 1) = l1 * p[1][1];
    return m;
}

} // namespace

HomographyP1 homography_p1_from_3(const std::array<PointP1, 3>& src,
                                  const std::array<PointP1, 3>& dst) {
    QMatrix ms = frame_map_p1(src);
    QMatrix md = frame_map_p1(dst);
    return HomographyP1(md * inverse(ms));
}

bool general_position_p2(const std::vector<PointP2>& points) {
    const std::size_t n = points.size();
    if (n < 1 || n > 6) {
        throw Error(ErrorKind::DimensionMismatch, "general position is defined for 1 to 6 points");
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (points[i] == points[j]) {
                return false;
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                if (bracket3(points[i], points[j], points[k]) == 0) {
                    return false;
                }
            }
        }
    }
    if (n == 6) {
        std::array<PointP2, 6> six = {points[0], points[1], points[2],
                                      points[3], points[4], points[5]};
        if (six_on_conic(six)) {
            return false;
        }
    }
    return true;
}

bool general_position_pairs(const Config& c) {
    if (c.size() != 6) {
        throw Error(ErrorKind::DimensionMismatch, "pair-wise general position is defined for 6 pairs");
    }
    std::vector<PointP2> xs;
    std::vector<PointP2> ys;
    for (const PointPair& pp : c) {
        xs.push_back(pp.x);
        ys.push_back(pp.y);
    }
    if (!general_position_p2(xs) || !general_position_p2(ys)) {
        return false;
    }
    // No five of the pairs may be related by a homography. With both sides
    // in general position the map through any four pairs is unique, so it is
    // enough to test whether it also matches the fifth.
    for (std::size_t omit = 0; omit < 6; ++omit) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < 6; ++i) {
            if (i != omit) {
                idx.push_back(i);
            }
        }
        Homography h = homography_from_4({xs[idx[0]], xs[idx[1]], xs[idx[2]], xs[idx[3]]},
                                         {ys[idx[0]], ys[idx[1]], ys[idx[2]], ys[idx[3]]});
        if (h.apply(xs[idx[4]]) == ys[idx[4]]) {
            return false;
        }
    }
    return true;
}

std::array<Int, 3> small_height_triple(std::size_t index) {
    for (Int h = 1;; ++h) {
        for (Int a = -h; a <= h; ++a) {
            for (Int b = -h; b <= h; ++b) {
                for (Int c = -h; c <= h; ++c) {
                    Int m = abs(a);
                    if (abs(b) > m) {
                        m = abs(b);
                    }
                    if (abs(c) > m) {
                        m = abs(c);
                    }
                    if (m != h) {
                        continue;
                    }
                    if (index == 0) {
                        return {a, b, c};
                    }
                    --index;
                }
            }
        }
    }
}

} // namespace rankdrop
