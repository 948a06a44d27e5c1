#pragma once

#include "rankdrop/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace rankdrop {

/// Dense univariate polynomial with rational coefficients, stored in
/// ascending degree with no trailing zeros (the zero polynomial is empty).
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs);
    static Poly constant(const Rat& v);

    const std::vector<Rat>& coeffs() const { return c_; }
    /// Degree, or -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    Rat leading() const;

    Rat eval(const Rat& t) const;

    Poly operator+(const Poly&) const;
    Poly operator-(const Poly&) const;
    Poly operator*(const Poly&) const;
    Poly scaled(const Rat& s) const;
    bool operator==(const Poly&) const = default;

private:
    std::vector<Rat> c_;
};

/// Quotient and remainder with deg(rem) < deg(divisor). Divisor must be
/// nonzero.
std::pair<Poly, Poly> poly_divmod(const Poly& num, const Poly& den);

/// Monic greatest common divisor by the Euclidean algorithm (monic so the
/// answer is canonical; gcd(0, 0) = 0).
Poly poly_gcd(const Poly& a, const Poly& b);

/// The unique polynomial of degree < n through n points with distinct
/// abscissae.
Poly lagrange_interpolate(const std::vector<std::pair<Rat, Rat>>& points);

/// Resultant as the determinant of the Sylvester matrix for the FORMAL
/// degrees given (coefficients above the true degree are read as zero).
/// With formal degrees equal to the true degrees this is the classical
/// resultant; it vanishes when the polynomials share a root.
Rat sylvester_resultant(const Poly& a, const Poly& b, std::size_t formal_deg_a,
                        std::size_t formal_deg_b);

/// Formal derivative.
Poly derivative(const Poly& p);

/// The same polynomial scaled to coprime integer coefficients by a positive
/// factor (signs preserved). Zero stays zero.
Poly primitive_part(const Poly& p);

/// The unique rational in [lo, hi] with the smallest denominator (smallest
/// numerator magnitude among those). Requires lo <= hi.
Rat simplest_rational_between(const Rat& lo, const Rat& hi);

/// All rational roots of a nonzero polynomial, each listed once, ascending.
/// Small coefficients take the divisor-candidate route (numerators divide
/// the trailing coefficient, denominators the leading one, via integer
/// factorization); large ones take exact Sturm isolation with
/// simplest-rational reconstruction inside each isolating interval, which
/// never factors and finds every root of denominator below ~2^120.
std::vector<Rat> rational_roots(const Poly& p);

/// Prime factorization helper for the root search: the positive divisors of
/// |n|, ascending. n must be nonzero.
std::vector<Int> positive_divisors(const Int& n);

} // namespace rankdrop
