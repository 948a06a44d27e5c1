#pragma once

#include "rankdrop/facesplit.hpp"
#include "rankdrop/matrix.hpp"
#include "rankdrop/projective.hpp"

#include <array>

namespace rankdrop {

/// A rational linear projection P² → P¹: a 2×3 matrix of rank 2 stored with
/// canonical integer entries, together with its center (the kernel point).
class ProjectionMap {
public:
    explicit ProjectionMap(const QMatrix& t);

    const QMatrix& matrix() const { return t_; }
    const PointP2& center() const { return center_; }

    /// Image of a point away from the center.
    PointP1 apply(const PointP2& p) const;

    bool operator==(const ProjectionMap&) const = default;

private:
    QMatrix t_;
    PointP2 center_;
};

/// Given five pairs in general position on both sides, the unique sixth pair
/// whose addition makes the 6×9 matrix rank deficient. Computed by fixing
/// the first four pairs of each side to the standard frame
/// ((1,0,0),(0,1,0),(0,0,1),(1,1,1)), applying the closed rational formula
/// to the transformed fifth pair, and pulling back. Throws HomographyRelated
/// when every denominator vanishes (the five pairs are related by a
/// homography, so no unique sixth pair exists).
PointPair sixth_pair(const Config& c);

/// Given six plane points in general position, the six y-side points (unique
/// up to one homography on the y side) that make all six pairs rank
/// deficient. The first four output points are the standard frame.
std::array<PointP2, 6> completion_y(const std::array<PointP2, 6>& xs);

/// The same sixth pair as sixth_pair, computed through conics: y₆ is the
/// common point of the five conics H_i(C), where C is the conic through
/// x₁..x₅ and H_i matches the four pairs omitting i; x₆ mirrors with the
/// sides swapped. The common point is found exactly as the kernel of the
/// stacked conic coefficient matrix. Throws NoCommonPoint if the five conics
/// fail to meet in a single point (a precondition violation).
PointPair sturm_sixth_pair(const Config& c);

/// For five pairs with the x side in general position, the y side distinct
/// on a line, and a rank-deficient 5×9 matrix: the projection centered at
/// the given point of the conic through the x's that maps every x_i to y_i.
/// The center must lie on that conic and differ from all five x's.
ProjectionMap k5_projection(const Config& c, const PointP2& center);

/// For six pairs with the x side in general position and the y side distinct
/// on a line, rank deficient: a projection T with T(x_i) ~ y_i for all six.
/// Its center u satisfies covariant_cubics(xs, u) ∝ joubert(ys); u is found
/// by eliminating one variable from two cross-product cubics via resultants
/// and keeping the rational candidates, with an exact linear-incidence
/// fallback when elimination degenerates. Throws NotDeficient when the
/// six-column determinant criterion fails, NoRationalCenter when no rational
/// center exists.
ProjectionMap k6_line_projection(const Config& c);

} // namespace rankdrop
