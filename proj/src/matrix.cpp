#include "rankdrop/matrix.hpp"

#include "rankdrop/error.hpp"

#include <boost/multiprecision/gmp.hpp>
#include <utility>

namespace rankdrop {

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rat>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw Error(ErrorKind::DimensionMismatch, "ragged initializer");
        for (const auto& e : r) entries_.push_back(e);
    }
}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

std::vector<Rat> QMatrix::row(std::size_t r) const {
    return {entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

std::vector<Rat> QMatrix::col(std::size_t c) const {
    std::vector<Rat> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(at(r, c));
    return out;
}

QMatrix QMatrix::transposed() const {
    QMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

bool QMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (e != 0) return false;
    return true;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols() != b.rows())
        throw Error(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
    QMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rat& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out.at(i, j) += aik * b.at(k, j);
        }
    return out;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error(ErrorKind::DimensionMismatch, "matrix sum shape mismatch");
    QMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j) + b.at(i, j);
    return out;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error(ErrorKind::DimensionMismatch, "matrix difference shape mismatch");
    QMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j) - b.at(i, j);
    return out;
}

QMatrix QMatrix::scaled(const Rat& s) const {
    QMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j) * s;
    return out;
}

std::vector<Rat> matvec(const QMatrix& m, const std::vector<Rat>& v) {
    if (m.cols() != v.size())
        throw Error(ErrorKind::DimensionMismatch, "matrix-vector shape mismatch");
    std::vector<Rat> out(m.rows(), Rat(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m.at(i, j) * v[j];
    return out;
}

namespace {

// Integer matrix with per-row denominators cleared; used by the
// fraction-free elimination below. Row scaling never changes rank, and the
// accumulated scale factors are divided back out for determinants.
struct ClearedRows {
    std::vector<std::vector<Int>> m;
    Rat scale = 1; // det(original) = det(cleared) / scale
};

ClearedRows clear_denominators(const QMatrix& q) {
    ClearedRows out;
    out.m.resize(q.rows());
    for (std::size_t i = 0; i < q.rows(); ++i) {
        Int l = 1;
        for (std::size_t j = 0; j < q.cols(); ++j)
            l = boost::multiprecision::lcm(l, denominator(q.at(i, j)));
        out.m[i].reserve(q.cols());
        for (std::size_t j = 0; j < q.cols(); ++j) {
            const Rat& e = q.at(i, j);
            out.m[i].push_back(numerator(e) * (l / denominator(e)));
        }
        out.scale *= Rat(l);
    }
    return out;
}

// Fraction-free (Bareiss) elimination with first-nonzero pivoting and
// column skipping. Returns the pivot count (= rank); when `sign` is given,
// accumulates the row-swap sign and leaves the last pivot in place so the
// caller can read off the determinant.
std::size_t bareiss(std::vector<std::vector<Int>>& m, int* sign, Int* last_pivot) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    Int prev = 1;
    std::size_t pr = 0;
    if (sign) *sign = 1;
    for (std::size_t col = 0; col < cols && pr < rows; ++col) {
        std::size_t piv = pr;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != pr) {
            std::swap(m[piv], m[pr]);
            if (sign) *sign = -*sign;
        }
        for (std::size_t i = pr + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                m[i][j] = (m[pr][col] * m[i][j] - m[i][col] * m[pr][j]) / prev;
            m[i][col] = 0;
        }
        prev = m[pr][col];
        ++pr;
    }
    if (last_pivot) *last_pivot = prev;
    return pr;
}

} // namespace

std::size_t rank(const QMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    auto cleared = clear_denominators(m);
    return bareiss(cleared.m, nullptr, nullptr);
}

Rat det(const QMatrix& m) {
    if (m.rows() != m.cols())
        throw Error(ErrorKind::NonSquare, "determinant of a non-square matrix");
    if (m.rows() == 0) return 1;
    auto cleared = clear_denominators(m);
    int sign = 1;
    Int last = 1;
    const std::size_t r = bareiss(cleared.m, &sign, &last);
    if (r < m.rows()) return 0;
    Rat d(last);
    d *= sign;
    d /= cleared.scale;
    return d;
}

std::vector<std::vector<Rat>> null_space(const QMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    // Reduced row echelon form over the rationals with first-nonzero pivoting.
    std::vector<std::vector<Rat>> a(rows);
    for (std::size_t i = 0; i < rows; ++i) a[i] = m.row(i);
    std::vector<std::size_t> pivot_col;
    std::size_t pr = 0;
    for (std::size_t col = 0; col < cols && pr < rows; ++col) {
        std::size_t piv = pr;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[pr]);
        const Rat p = a[pr][col];
        for (std::size_t j = col; j < cols; ++j) a[pr][j] /= p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == pr || a[i][col] == 0) continue;
            const Rat f = a[i][col];
            for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[pr][j];
        }
        pivot_col.push_back(col);
        ++pr;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[free_col] = 1;
        for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -a[r][free_col];
        basis.push_back(canonical_integer_vector(v));
    }
    return basis;
}

std::vector<Rat> maximal_minors(const QMatrix& m) {
    const std::size_t k = m.rows();
    const std::size_t n = m.cols();
    if (k > n)
        throw Error(ErrorKind::DimensionMismatch, "maximal minors need rows <= cols");
    std::vector<Rat> out;
    std::vector<std::size_t> subset(k);
    for (std::size_t i = 0; i < k; ++i) subset[i] = i;
    while (true) {
        QMatrix sub(k, k);
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < k; ++c) sub.at(r, c) = m.at(r, subset[c]);
        out.push_back(det(sub));
        // next lexicographic k-subset of {0..n-1}
        std::size_t i = k;
        while (i > 0 && subset[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++subset[i - 1];
        for (std::size_t j = i; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
    return out;
}

QMatrix inverse(const QMatrix& m) {
    if (m.rows() != m.cols())
        throw Error(ErrorKind::NonSquare, "inverse of a non-square matrix");
    const std::size_t n = m.rows();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);
        a[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n)
            throw Error(ErrorKind::DegenerateInput, "singular matrix has no inverse");
        std::swap(a[piv], a[col]);
        const Rat p = a[col][col];
        for (std::size_t j = 0; j < 2 * n; ++j) a[col][j] /= p;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            const Rat f = a[i][col];
            for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    QMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = a[i][n + j];
    return inv;
}

} // namespace rankdrop
