#pragma once

#include "rankdrop/projective.hpp"

#include <array>
#include <optional>
#include <vector>

namespace rankdrop {

/// Six rationals labeled (a, b, c, d, e, f), usually only meaningful up to a
/// common scale.
struct Sextuple {
    std::array<Rat, 6> v;

    const Rat& operator[](std::size_t i) const { return v[i]; }
    Rat& operator[](std::size_t i) { return v[i]; }
    bool operator==(const Sextuple&) const = default;
    bool is_zero() const;
};

/// Equality up to scale, decided by the vanishing of all fifteen 2×2 minors
/// of the stacked 2×6 matrix. No division, so zeros need no special casing.
bool proportional(const Sextuple& a, const Sextuple& b);

/// The classical invariant [(ij)(kl)(rs)] = [ijr][kls] − [ijs][klr] of six
/// plane points (1-based indices). It vanishes exactly when the lines
/// p_i p_j, p_k p_l and p_r p_s pass through a common point.
Rat triple_invariant(const std::array<PointP2, 6>& p, int i, int j, int k, int l, int r, int s);

/// The six scalars (ā, …, f̄) of six plane points: each is a 5-term sum of
/// triple invariants over a classical table of pairings. They vanish
/// simultaneously when the points are collinear, and transform by a common
/// factor under homographies.
Sextuple coble_bar(const std::array<PointP2, 6>& p);

/// The Joubert invariants (A, …, F) of six points on the line: the same
/// 5-term table with each pairing contributing a product of three 2×2
/// brackets. They satisfy ΣA = 0 and ΣA³ = 0 identically.
Sextuple joubert(const std::array<PointP1, 6>& p);

/// Joubert invariants of six collinear plane points via their P¹ reduction.
/// nullopt when the points are not collinear or have fewer than two
/// distinct members (no reduction exists there).
std::optional<Sextuple> collinear_side_joubert(const std::vector<PointP2>& pts);

/// The six covariant cubics evaluated at u: the same table with each pairing
/// (ij)(kl)(rs) contributing [iju][klu][rsu]. Each vanishes at all six
/// points; the image of u ↦ (a(u), …, f(u)) is a cubic surface in P⁵.
Sextuple covariant_cubics(const std::array<PointP2, 6>& p, const PointP2& u);

/// Same cubics on a raw coordinate triple, without projective
/// canonicalization, so the result is an honest cubic polynomial in u.
/// Used when interpolating the cubics coefficient-wise.
Sextuple covariant_cubics(const std::array<PointP2, 6>& p, const std::array<Rat, 3>& u);

/// The three forms cutting out that cubic surface, evaluated at z:
/// (Σ z_i³, Σ z_i, ā z₁ + b̄ z₂ + … + f̄ z₆) with the bar scalars taken from
/// the given points. All three vanish exactly when z lies on the surface.
std::array<Rat, 3> hexahedral_residuals(const std::array<PointP2, 6>& p, const Sextuple& z);

/// The bilinear pairing of the bar scalars of the plane side with the
/// Joubert invariants of the line side. For six pairs with the y side on a
/// line this form vanishes exactly when the 6×9 matrix drops rank; it equals
/// −24 times the determinant of the six-column matrix of the pairs.
Rat line_case_form(const std::array<PointP2, 6>& xs, const std::array<PointP1, 6>& ys);

} // namespace rankdrop
