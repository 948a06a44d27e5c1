#pragma once

#include "rankdrop/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace rankdrop {

/// Dense exact-rational matrix. All operations are pure; none mutate their
/// inputs. No floating point, no tolerances: every comparison is exact.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Rat(0)) {}
    QMatrix(std::initializer_list<std::initializer_list<Rat>> rows);

    static QMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rat& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::vector<Rat> row(std::size_t r) const;
    std::vector<Rat> col(std::size_t c) const;

    QMatrix transposed() const;

    bool is_zero() const;

    friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
    QMatrix scaled(const Rat& s) const;

    bool operator==(const QMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> entries_;
};

/// Matrix-vector product.
std::vector<Rat> matvec(const QMatrix& m, const std::vector<Rat>& v);

/// Exact rank over the rationals, via fraction-free elimination on
/// denominator-cleared rows with first-nonzero pivoting.
std::size_t rank(const QMatrix& m);

/// Exact determinant. Throws Error{NonSquare} unless the matrix is square.
Rat det(const QMatrix& m);

/// Canonical basis of the right kernel: one vector per free column of the
/// reduced row echelon form, each with cleared denominators, coprime integer
/// entries, and positive first nonzero entry. Size = cols − rank.
std::vector<std::vector<Rat>> null_space(const QMatrix& m);

/// All C(cols, rows) maximal minors, in lexicographic order on the column
/// subsets. Requires rows ≤ cols.
std::vector<Rat> maximal_minors(const QMatrix& m);

/// Inverse of a square matrix; throws NonSquare / DegenerateInput(singular).
QMatrix inverse(const QMatrix& m);

} // namespace rankdrop
