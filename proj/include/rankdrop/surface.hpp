#pragma once

#include "rankdrop/facesplit.hpp"

#include <array>
#include <cstddef>

namespace rankdrop {

/// A 4-dimensional space of 3×3 matrices, M(z) = z₀M₀ + z₁M₁ + z₂M₂ + z₃M₃.
/// The basis matrices are linearly independent as 9-vectors when the pencil
/// comes from pencil_from_config; aggregate construction is available for
/// hand-built pencils in tests.
struct Pencil {
    std::array<QMatrix, 4> basis;

    /// The member M(z) of the pencil at z ∈ P³.
    QMatrix at(const std::array<Rat, 4>& z) const;

    /// Entrywise transpose of the pencil: M(z) ↦ M(z)ᵀ.
    Pencil transposed() const;

    bool operator==(const Pencil&) const = default;
};

/// A homogeneous cubic in z₀..z₃, stored as 20 coefficients indexed by the
/// degree-3 monomials in graded lexicographic order:
///   z₀³, z₀²z₁, z₀²z₂, z₀²z₃, z₀z₁², z₀z₁z₂, z₀z₁z₃, z₀z₂², z₀z₂z₃, z₀z₃²,
///   z₁³, z₁²z₂, z₁²z₃, z₁z₂², z₁z₂z₃, z₁z₃², z₂³, z₂²z₃, z₂z₃², z₃³.
struct CubicForm {
    std::array<Rat, 20> coeffs;

    Rat evaluate(const std::array<Rat, 4>& z) const;
    bool is_zero() const;

    bool operator==(const CubicForm&) const = default;
};

/// The exponent triples (i ≤ j ≤ k) of the 20 degree-3 monomials, in the
/// coefficient order used by CubicForm.
const std::array<std::array<int, 3>, 20>& cubic_monomials();

/// A line in P³ in Plücker coordinates (p₀₁, p₀₂, p₀₃, p₁₂, p₁₃, p₂₃),
/// canonicalized up to scale (cleared denominators, coprime integer entries,
/// positive first nonzero entry). Construction validates the Grassmann
/// relation p₀₁p₂₃ − p₀₂p₁₃ + p₀₃p₁₂ = 0 and rejects the zero vector.
class LineP3 {
public:
    explicit LineP3(const std::array<Rat, 6>& plucker);

    /// The line through two distinct points of P³ (throws DegenerateInput
    /// when the points coincide projectively).
    static LineP3 through(const std::array<Rat, 4>& a, const std::array<Rat, 4>& b);

    const Rat& operator[](std::size_t i) const { return p_[i]; }
    const std::array<Rat, 6>& coords() const { return p_; }

    bool operator==(const LineP3&) const = default;

private:
    std::array<Rat, 6> p_;
};

/// Determinantal pencil of a rank-deficient configuration: a basis of the
/// right kernel of the k×9 matrix, each 9-vector folded to a 3×3 matrix so
/// that yᵢᵀ·M(z)·xᵢ = 0 for every pair and every z. Requires the kernel to
/// be exactly 4-dimensional (k = 6 with one dependency, or k = 5 of full
/// rank); throws NotDeficient otherwise.
Pencil pencil_from_config(const Config& c);

/// Exact 20-coefficient expansion of det(M(z)); the zero set is the cubic
/// surface carrying the configuration's double six.
CubicForm cubic_form(const Pencil& p);

/// The line {z : M(z)·x = 0} in Plücker coordinates. The 3×4 system must
/// have rank exactly 2 (x is one of the blown-up points); otherwise throws
/// RankNotTwo.
LineP3 line_x(const Pencil& p, const PointP2& x);

/// The line {z : yᵀ·M(z) = 0}; mirror of line_x under transposition.
LineP3 line_y(const Pencil& p, const PointP2& y);

/// The incidence pairing a₀₁b₂₃ − a₀₂b₁₃ + a₀₃b₁₂ + a₂₃b₀₁ − a₁₃b₀₂ + a₁₂b₀₃.
/// Zero exactly when the two lines meet (are coplanar).
Rat plucker_meet(const LineP3& a, const LineP3& b);

/// True when the 6+6 lines form a double six: each family mutually skew
/// (15 + 15 nonzero pairings), the six diagonal pairings nonzero, and the
/// 30 off-diagonal cross pairings zero.
bool verify_double_six(const std::array<LineP3, 6>& lx, const std::array<LineP3, 6>& ly);

/// Right-kernel generator of M(z) for a point z of the surface where
/// rank(M(z)) = 2; sends every point of line_x(p, xᵢ) back to xᵢ.
/// Throws NotOnSurface when det(M(z)) ≠ 0 and RankNotTwo on the
/// rank ≤ 1 stratum.
PointP2 blow_down_right(const Pencil& p, const std::array<Rat, 4>& z);

/// Left-kernel generator of M(z); mirror of blow_down_right, sending every
/// point of line_y(p, yⱼ) back to yⱼ.
PointP2 blow_down_left(const Pencil& p, const std::array<Rat, 4>& z);

} // namespace rankdrop
