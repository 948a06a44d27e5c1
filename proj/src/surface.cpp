#include "rankdrop/surface.hpp"

#include "rankdrop/error.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace rankdrop {
namespace {

using Linear = std::array<Rat, 4>;
using Quad = std::array<Rat, 10>;
using Cubic = std::array<Rat, 20>;

/// Degree-2 monomials (i ≤ j) in the same graded-lex order as the cubics.
const std::array<std::array<int, 2>, 10>& quad_monomials() {
    static const std::array<std::array<int, 2>, 10> table = [] {
        std::array<std::array<int, 2>, 10> t{};
        std::size_t n = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i; j < 4; ++j) t[n++] = {i, j};
        return t;
    }();
    return table;
}

std::size_t quad_index(int i, int j) {
    if (i > j) std::swap(i, j);
    const auto& table = quad_monomials();
    for (std::size_t m = 0; m < table.size(); ++m)
        if (table[m][0] == i && table[m][1] == j) return m;
    throw Error(ErrorKind::DimensionMismatch, "monomial index out of range");
}

std::size_t cubic_index(int i, int j, int k) {
    std::array<int, 3> e = {i, j, k};
    std::sort(e.begin(), e.end());
    const auto& table = cubic_monomials();
    for (std::size_t m = 0; m < table.size(); ++m)
        if (table[m] == e) return m;
    throw Error(ErrorKind::DimensionMismatch, "monomial index out of range");
}

Quad multiply(const Linear& a, const Linear& b) {
    Quad q{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) q[quad_index(i, j)] += a[i] * b[j];
    return q;
}

Cubic multiply(const Quad& q, const Linear& b) {
    Cubic c{};
    const auto& table = quad_monomials();
    for (std::size_t m = 0; m < q.size(); ++m) {
        if (q[m] == 0) continue;
        for (int j = 0; j < 4; ++j) c[cubic_index(table[m][0], table[m][1], j)] += q[m] * b[j];
    }
    return c;
}

/// Entry (r, c) of M(z) as a linear form in z₀..z₃.
Linear entry_form(const Pencil& p, std::size_t r, std::size_t c) {
    Linear f{};
    for (std::size_t j = 0; j < 4; ++j) f[j] = p.basis[j].at(r, c);
    return f;
}

std::array<Rat, 6> plucker_from_basis(const std::vector<Rat>& b1, const std::vector<Rat>& b2) {
    std::array<Rat, 6> p{};
    std::size_t n = 0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) p[n++] = b1[i] * b2[j] - b1[j] * b2[i];
    return p;
}

PointP2 kernel_generator(const QMatrix& m, const char* what) {
    auto ker = null_space(m);
    if (ker.size() != 1)
        throw Error(ErrorKind::RankNotTwo,
                    std::string(what) + ": matrix rank is " + std::to_string(3 - ker.size()) +
                        ", need 2");
    return PointP2(ker[0]);
}

} // namespace

QMatrix Pencil::at(const std::array<Rat, 4>& z) const {
    QMatrix m(3, 3);
    for (std::size_t j = 0; j < 4; ++j) {
        if (z[j] == 0) continue;
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 3; ++c) m.at(r, c) += z[j] * basis[j].at(r, c);
    }
    return m;
}

Pencil Pencil::transposed() const {
    return Pencil{{basis[0].transposed(), basis[1].transposed(), basis[2].transposed(),
                   basis[3].transposed()}};
}

const std::array<std::array<int, 3>, 20>& cubic_monomials() {
    static const std::array<std::array<int, 3>, 20> table = [] {
        std::array<std::array<int, 3>, 20> t{};
        std::size_t n = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i; j < 4; ++j)
                for (int k = j; k < 4; ++k) t[n++] = {i, j, k};
        return t;
    }();
    return table;
}

Rat CubicForm::evaluate(const std::array<Rat, 4>& z) const {
    Rat total = 0;
    const auto& table = cubic_monomials();
    for (std::size_t m = 0; m < coeffs.size(); ++m) {
        if (coeffs[m] == 0) continue;
        total += coeffs[m] * z[table[m][0]] * z[table[m][1]] * z[table[m][2]];
    }
    return total;
}

bool CubicForm::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Rat& q) { return q == 0; });
}

LineP3::LineP3(const std::array<Rat, 6>& plucker) {
    auto scaled = canonical_integer_vector(std::vector<Rat>(plucker.begin(), plucker.end()));
    bool nonzero = std::any_of(scaled.begin(), scaled.end(), [](const Rat& q) { return q != 0; });
    if (!nonzero) throw Error(ErrorKind::DegenerateInput, "line coordinates are all zero");
    std::copy(scaled.begin(), scaled.end(), p_.begin());
    if (p_[0] * p_[5] - p_[1] * p_[4] + p_[2] * p_[3] != 0)
        throw Error(ErrorKind::DegenerateInput, "coordinates violate the Plücker relation");
}

LineP3 LineP3::through(const std::array<Rat, 4>& a, const std::array<Rat, 4>& b) {
    std::array<Rat, 6> p{};
    std::size_t n = 0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) p[n++] = a[i] * b[j] - a[j] * b[i];
    bool nonzero = std::any_of(p.begin(), p.end(), [](const Rat& q) { return q != 0; });
    if (!nonzero)
        throw Error(ErrorKind::DegenerateInput, "the two points coincide projectively");
    return LineP3(p);
}

Pencil pencil_from_config(const Config& c) {
    auto kernel = null_space(build_z(c));
    if (kernel.size() != 4)
        throw Error(ErrorKind::NotDeficient, "kernel dimension is " +
                                                 std::to_string(kernel.size()) +
                                                 ", need 4 for a determinantal pencil");
    Pencil p;
    for (std::size_t j = 0; j < 4; ++j) p.basis[j] = unvec(kernel[j]);
    return p;
}

CubicForm cubic_form(const Pencil& p) {
    // Signed terms of the 3×3 determinant, each a product of three linear forms.
    static constexpr std::array<std::array<std::size_t, 3>, 6> perms = {
        {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}}};
    CubicForm form{};
    for (std::size_t t = 0; t < perms.size(); ++t) {
        auto quad = multiply(entry_form(p, 0, perms[t][0]), entry_form(p, 1, perms[t][1]));
        auto term = multiply(quad, entry_form(p, 2, perms[t][2]));
        const bool even = t < 3;
        for (std::size_t m = 0; m < term.size(); ++m) {
            if (even)
                form.coeffs[m] += term[m];
            else
                form.coeffs[m] -= term[m];
        }
    }
    return form;
}

LineP3 line_x(const Pencil& p, const PointP2& x) {
    QMatrix a(3, 4);
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t c = 0; c < 3; ++c) a.at(r, j) += p.basis[j].at(r, c) * x[c];
    auto solutions = null_space(a);
    if (solutions.size() != 2)
        throw Error(ErrorKind::RankNotTwo, "M(z)·x = 0 has solution dimension " +
                                               std::to_string(solutions.size()) +
                                               ", need 2 (x is not a blown-up point)");
    return LineP3(plucker_from_basis(solutions[0], solutions[1]));
}

LineP3 line_y(const Pencil& p, const PointP2& y) {
    QMatrix a(3, 4);
    for (std::size_t c = 0; c < 3; ++c)
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t r = 0; r < 3; ++r) a.at(c, j) += y[r] * p.basis[j].at(r, c);
    auto solutions = null_space(a);
    if (solutions.size() != 2)
        throw Error(ErrorKind::RankNotTwo, "yᵀ·M(z) = 0 has solution dimension " +
                                               std::to_string(solutions.size()) +
                                               ", need 2 (y is not a blown-up point)");
    return LineP3(plucker_from_basis(solutions[0], solutions[1]));
}

Rat plucker_meet(const LineP3& a, const LineP3& b) {
    return a[0] * b[5] - a[1] * b[4] + a[2] * b[3] + a[5] * b[0] - a[4] * b[1] + a[3] * b[2];
}

bool verify_double_six(const std::array<LineP3, 6>& lx, const std::array<LineP3, 6>& ly) {
    for (std::size_t i = 0; i < 6; ++i) {
        for (std::size_t j = i + 1; j < 6; ++j) {
            if (plucker_meet(lx[i], lx[j]) == 0) return false;
            if (plucker_meet(ly[i], ly[j]) == 0) return false;
        }
    }
    for (std::size_t i = 0; i < 6; ++i) {
        for (std::size_t j = 0; j < 6; ++j) {
            const Rat pairing = plucker_meet(lx[i], ly[j]);
            if (i == j && pairing == 0) return false;
            if (i != j && pairing != 0) return false;
        }
    }
    return true;
}

PointP2 blow_down_right(const Pencil& p, const std::array<Rat, 4>& z) {
    if (cubic_form(p).evaluate(z) != 0)
        throw Error(ErrorKind::NotOnSurface, "the form is nonzero at z: not on the cubic surface");
    return kernel_generator(p.at(z), "blow_down_right");
}

PointP2 blow_down_left(const Pencil& p, const std::array<Rat, 4>& z) {
    if (cubic_form(p).evaluate(z) != 0)
        throw Error(ErrorKind::NotOnSurface, "the form is nonzero at z: not on the cubic surface");
    return kernel_generator(p.at(z).transposed(), "blow_down_left");
}

} // namespace rankdrop
