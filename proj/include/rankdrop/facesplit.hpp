#pragma once

#include "rankdrop/matrix.hpp"
#include "rankdrop/projective.hpp"

namespace rankdrop {

/// The k×9 matrix whose i-th row is the Kronecker product of the canonical
/// representatives of x_i and y_i: entry (i, 3a+b) = x_{ia} · y_{ib}
/// (0-based coordinate indices).
QMatrix build_z(const Config& c);

/// The k×4 analogue for pairs of line points: entry (i, 2a+b) = x_{ia} · y_{ib}.
QMatrix build_z_p1(const ConfigP1& c);

/// The k×6 matrix for pairs of a plane point and a line point: entry
/// (i, 2a+b) = x_{ia} · y_{ib}. When one side of a plane configuration lies
/// on a line, the rank questions reduce to this matrix.
QMatrix build_z_line(const std::vector<PointP2>& xs, const std::vector<PointP1>& ys);

/// Rank of the k×9 matrix of a configuration.
std::size_t z_rank(const Config& c);

/// True when the k×9 matrix has rank below k, i.e. the rows are dependent.
bool z_deficient(const Config& c);

/// Fold a 9-vector into the 3×3 matrix M with v[3c + r] = M(r, c). A vector
/// annihilated by every row of the k×9 matrix folds into M with yᵀ M x = 0
/// for every pair, and a row x ⊗ y unfolds from the rank-one matrix y xᵀ.
QMatrix unvec(const std::vector<Rat>& v);

/// Inverse of unvec.
std::vector<Rat> vec(const QMatrix& m);

/// Apply hx to every x and hy to every y.
Config transform(const Config& c, const Homography& hx, const Homography& hy);

struct FiniteForm {
    Config config; ///< transformed pairs, all coordinates x_3, y_3 nonzero
    Homography hx; ///< the map applied to the x side
    Homography hy; ///< the map applied to the y side
};

/// Move both sides so that every point has nonzero last coordinate. The
/// avoiding lines are found by deterministic small-height search; inputs
/// that are already finite get identity maps.
FiniteForm move_to_finite(const Config& c);

} // namespace rankdrop
