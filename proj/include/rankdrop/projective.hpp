#pragma once

#include "rankdrop/matrix.hpp"

#include <array>
#include <cstddef>
#include <vector>

namespace rankdrop {

/// Point of the projective plane. The constructor immediately rescales to
/// the canonical integer representative (denominators cleared, entries
/// coprime, first nonzero coordinate positive), so equality of PointP2
/// values is equality up to scale. The zero vector is rejected.
class PointP2 {
public:
    PointP2(const Rat& a, const Rat& b, const Rat& c);
    explicit PointP2(const std::vector<Rat>& coords);

    const Rat& operator[](std::size_t i) const { return v_[i]; }
    std::vector<Rat> coords() const { return {v_[0], v_[1], v_[2]}; }

    bool operator==(const PointP2&) const = default;

private:
    std::array<Rat, 3> v_;
};

/// Point of the projective line, canonicalized like PointP2.
class PointP1 {
public:
    PointP1(const Rat& a, const Rat& b);
    explicit PointP1(const std::vector<Rat>& coords);

    const Rat& operator[](std::size_t i) const { return v_[i]; }
    std::vector<Rat> coords() const { return {v_[0], v_[1]}; }

    bool operator==(const PointP1&) const = default;

private:
    std::array<Rat, 2> v_;
};

struct PointPair {
    PointP2 x;
    PointP2 y;
    bool operator==(const PointPair&) const = default;
};

/// Ordered list of point pairs; order matters because indices enter the
/// bracket equations.
using Config = std::vector<PointPair>;

struct PairP1 {
    PointP1 x;
    PointP1 y;
    bool operator==(const PairP1&) const = default;
};

using ConfigP1 = std::vector<PairP1>;

/// A rational value extended by infinity and the indeterminate form 0/0.
/// Cross-ratios of degenerate quadruples land on the extra elements instead
/// of raising errors; bracket equations remain the decision procedure.
class ExtRat {
public:
    static ExtRat finite(const Rat& v) { return ExtRat(Kind::Finite, v); }
    static ExtRat infinity() { return ExtRat(Kind::Infinity, 0); }
    static ExtRat indeterminate() { return ExtRat(Kind::Indeterminate, 0); }
    /// num/den without division: infinity when den = 0 ≠ num, indeterminate
    /// when both vanish.
    static ExtRat ratio(const Rat& num, const Rat& den);

    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_infinity() const { return kind_ == Kind::Infinity; }
    bool is_indeterminate() const { return kind_ == Kind::Indeterminate; }
    const Rat& value() const; // finite only

    bool operator==(const ExtRat&) const = default;

private:
    enum class Kind { Finite, Infinity, Indeterminate };
    ExtRat(Kind k, const Rat& v) : kind_(k), value_(v) {}
    Kind kind_;
    Rat value_;
};

std::string ext_rat_str(const ExtRat& q);

/// 3×3 determinant of the canonical representatives stacked as rows.
/// Zero exactly when the points are collinear.
Rat bracket3(const PointP2& a, const PointP2& b, const PointP2& c);

/// 2×2 determinant of the canonical representatives.
Rat bracket2(const PointP1& a, const PointP1& b);

/// ([13][24]) / ([14][23]) as an ExtRat.
ExtRat cross_ratio_p1(const PointP1& p1, const PointP1& p2, const PointP1& p3, const PointP1& p4);

/// Planar cross-ratio around p5: ([135][245]) / ([145][235]).
ExtRat planar_cross_ratio(const PointP2& p1, const PointP2& p2, const PointP2& p3,
                          const PointP2& p4, const PointP2& p5);

/// Line through two distinct points / intersection of two distinct lines
/// (projective duality): the cross product, canonicalized.
PointP2 cross(const PointP2& a, const PointP2& b);

/// True when every 3-subset has vanishing bracket (always true for fewer
/// than 3 points).
bool collinear(const std::vector<PointP2>& points);

/// Identify collinear points with points of P¹ by dropping the coordinate
/// indexed by the first nonzero entry of their common line. Requires at
/// least 2 distinct points, all collinear.
std::vector<PointP1> reduce_to_p1(const std::vector<PointP2>& points);

/// Plane conic as a symmetric 3×3 matrix up to scale (canonicalized).
/// Degenerate conics (det = 0) are representable.
class Conic {
public:
    explicit Conic(const QMatrix& sym);
    const QMatrix& sym() const { return sym_; }
    Rat evaluate(const PointP2& p) const;
    bool contains(const PointP2& p) const { return evaluate(p) == 0; }
    bool degenerate() const { return det(sym_) == 0; }
    bool operator==(const Conic&) const = default;

private:
    QMatrix sym_;
};

/// The unique conic through five points, from the 1-dimensional kernel of
/// the 5×6 monomial matrix. Throws NotUnique when the kernel is bigger.
Conic conic_through_5(const std::array<PointP2, 5>& p);

/// Bracket test for six points on a common conic:
/// [135][245][146][236] = [136][246][145][235].
bool six_on_conic(const std::array<PointP2, 6>& p);

/// Cross-ratio of four points on a non-degenerate conic, computed as the
/// planar cross-ratio around a deterministically chosen auxiliary fifth
/// point of the conic. Independent of that choice.
/// The residual intersection of a non-degenerate conic with the line joining
/// a point of the conic to any other point: the far chord endpoint, or the
/// base point itself when the line is tangent there. Always rational, which
/// makes it the workhorse for producing fresh points on a rational conic.
PointP2 second_conic_intersection(const Conic& w, const PointP2& on_conic,
                                  const PointP2& direction);

ExtRat conic_cross_ratio(const Conic& w, const PointP2& p1, const PointP2& p2, const PointP2& p3,
                         const PointP2& p4);

/// Invertible projective transformation of the plane, canonical up to scale.
class Homography {
public:
    explicit Homography(const QMatrix& m);
    static Homography identity() { return Homography(QMatrix::identity(3)); }
    const QMatrix& matrix() const { return m_; }
    PointP2 apply(const PointP2& p) const;
    Homography inverse() const;
    Homography compose(const Homography& inner) const; // this ∘ inner
    bool operator==(const Homography&) const = default;

private:
    QMatrix m_;
};

/// Invertible projective transformation of the line.
class HomographyP1 {
public:
    explicit HomographyP1(const QMatrix& m);
    static HomographyP1 identity() { return HomographyP1(QMatrix::identity(2)); }
    const QMatrix& matrix() const { return m_; }
    PointP1 apply(const PointP1& p) const;
    HomographyP1 inverse() const;
    bool operator==(const HomographyP1&) const = default;

private:
    QMatrix m_;
};

/// The unique homography taking four source points (no 3 collinear) to four
/// destination points (no 3 collinear), found as the 1-dimensional kernel of
/// the stacked incidence system.
Homography homography_from_4(const std::array<PointP2, 4>& src, const std::array<PointP2, 4>& dst);

/// The unique P¹ homography taking three distinct points to three distinct
/// points.
HomographyP1 homography_p1_from_3(const std::array<PointP1, 3>& src,
                                  const std::array<PointP1, 3>& dst);

/// No 3 of the points collinear, and — when 6 are given — not all on a
/// conic. Accepts 1 to 6 points.
bool general_position_p2(const std::vector<PointP2>& points);

/// Both sides in general position and no 5 of the 6 pairs related by a
/// homography (tested on every 5-subset by fitting on its first 4 pairs).
bool general_position_pairs(const Config& c);

/// Deterministic enumeration of nonzero integer 3-vectors by increasing
/// height (max absolute value), lexicographic within a height, starting at
/// height 1. Used for reproducible searches over small points/lines.
std::array<Int, 3> small_height_triple(std::size_t index);

} // namespace rankdrop
