#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rankdrop/error.hpp"
#include "rankdrop/matrix.hpp"

#include <cstdint>
#include <vector>

using namespace rankdrop;

namespace {

struct TestRng {
    std::uint64_t state;
    explicit TestRng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    long pick(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    QMatrix matrix(std::size_t r, std::size_t c, long span = 9) {
        QMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Rat(pick(-span, span));
        return m;
    }
};

// Independent determinant oracle: cofactor expansion along the first row.
Rat det_cofactor(const QMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m.at(0, 0);
    Rat total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m.at(0, c) == 0) continue;
        QMatrix sub(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t cc = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == c) continue;
                sub.at(i - 1, cc++) = m.at(i, j);
            }
        }
        const Rat term = m.at(0, c) * det_cofactor(sub);
        total += (c % 2 == 0) ? term : -term;
    }
    return total;
}

// Independent rank oracle: largest r such that some r×r minor is nonzero.
std::size_t rank_by_minors(const QMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    auto subsets = [](std::size_t n, std::size_t k) {
        std::vector<std::vector<std::size_t>> out;
        std::vector<std::size_t> s(k);
        for (std::size_t i = 0; i < k; ++i) s[i] = i;
        if (k == 0 || k > n) return out;
        while (true) {
            out.push_back(s);
            std::size_t i = k;
            while (i > 0 && s[i - 1] == n - k + i - 1) --i;
            if (i == 0) break;
            ++s[i - 1];
            for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
        }
        return out;
    };
    std::size_t best = 0;
    const std::size_t top = rows < cols ? rows : cols;
    for (std::size_t r = 1; r <= top; ++r) {
        bool found = false;
        for (const auto& rs : subsets(rows, r)) {
            for (const auto& cs : subsets(cols, r)) {
                QMatrix sub(r, r);
                for (std::size_t i = 0; i < r; ++i)
                    for (std::size_t j = 0; j < r; ++j) sub.at(i, j) = m.at(rs[i], cs[j]);
                if (det_cofactor(sub) != 0) {
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
        if (found) best = r;
    }
    return best;
}

} // namespace

TEST_CASE("rank: identities and frozen cases") {
    CHECK(rank(QMatrix::identity(3)) == 3);
    CHECK(rank(QMatrix(4, 7)) == 0);
    QMatrix repeated{{Rat(1), Rat(2)}, {Rat(1), Rat(2)}, {Rat(3), Rat(4)}};
    CHECK(rank(repeated) == 2);
    QMatrix hilbert{{Rat(1), Rat(1, 2), Rat(1, 3)},
                    {Rat(1, 2), Rat(1, 3), Rat(1, 4)},
                    {Rat(1, 3), Rat(1, 4), Rat(1, 5)}};
    CHECK(rank(hilbert) == 3);
    CHECK(det(hilbert) == Rat(1, 2160));
}

TEST_CASE("rank agrees with the nonzero-minor oracle on random matrices") {
    TestRng rng(101);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t r = static_cast<std::size_t>(rng.pick(1, 4));
        std::size_t c = static_cast<std::size_t>(rng.pick(1, 5));
        QMatrix m = rng.matrix(r, c, 3);
        CHECK(rank(m) == rank_by_minors(m));
        CHECK(rank(m) == rank(m.transposed()));
    }
}

TEST_CASE("rank is invariant under adding linear combinations of rows") {
    TestRng rng(103);
    for (int trial = 0; trial < 30; ++trial) {
        QMatrix m = rng.matrix(3, 6);
        QMatrix bigger(4, 6);
        Rat a(rng.pick(-5, 5)), b(rng.pick(-5, 5)), c(rng.pick(-5, 5));
        for (std::size_t j = 0; j < 6; ++j) {
            for (std::size_t i = 0; i < 3; ++i) bigger.at(i, j) = m.at(i, j);
            bigger.at(3, j) = a * m.at(0, j) + b * m.at(1, j) + c * m.at(2, j);
        }
        CHECK(rank(bigger) == rank(m));
    }
}

TEST_CASE("det: frozen values, alternation, multiplicativity") {
    CHECK(det(QMatrix::identity(4)) == 1);
    CHECK_THROWS_AS(det(QMatrix(2, 3)), Error);

    SUBCASE("Vandermonde 6x6 matches the closed product") {
        const long nodes[6] = {0, 1, 2, 3, 5, 8};
        QMatrix v(6, 6);
        for (std::size_t i = 0; i < 6; ++i) {
            Rat p = 1;
            for (std::size_t j = 0; j < 6; ++j) {
                v.at(i, j) = p;
                p *= nodes[i];
            }
        }
        Rat expected = 1;
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = i + 1; j < 6; ++j) expected *= Rat(nodes[j] - nodes[i]);
        CHECK(det(v) == expected);
    }

    SUBCASE("agrees with cofactor expansion on random matrices") {
        TestRng rng(107);
        for (int trial = 0; trial < 40; ++trial) {
            std::size_t n = static_cast<std::size_t>(rng.pick(1, 5));
            QMatrix m = rng.matrix(n, n);
            CHECK(det(m) == det_cofactor(m));
            CHECK(det(m) == det(m.transposed()));
        }
    }

    SUBCASE("row swap negates; duplicate row kills") {
        TestRng rng(109);
        for (int trial = 0; trial < 20; ++trial) {
            QMatrix m = rng.matrix(4, 4);
            QMatrix swapped = m;
            for (std::size_t j = 0; j < 4; ++j) {
                swapped.at(1, j) = m.at(2, j);
                swapped.at(2, j) = m.at(1, j);
            }
            CHECK(det(swapped) == -det(m));
            QMatrix dup = m;
            for (std::size_t j = 0; j < 4; ++j) dup.at(3, j) = m.at(0, j);
            CHECK(det(dup) == 0);
        }
    }

    SUBCASE("det(AB) = det(A)det(B)") {
        TestRng rng(113);
        for (int trial = 0; trial < 20; ++trial) {
            QMatrix a = rng.matrix(4, 4);
            QMatrix b = rng.matrix(4, 4);
            CHECK(det(a * b) == det(a) * det(b));
        }
    }

    SUBCASE("nonzero det iff full rank") {
        TestRng rng(127);
        for (int trial = 0; trial < 40; ++trial) {
            QMatrix m = rng.matrix(3, 3, 2);
            CHECK((det(m) != 0) == (rank(m) == 3));
        }
    }
}

TEST_CASE("null_space: canonical basis of the right kernel") {
    SUBCASE("full rank means empty basis") {
        CHECK(null_space(QMatrix::identity(2)).empty());
    }
    SUBCASE("frozen 2x3 example") {
        QMatrix m{{Rat(1), Rat(2), Rat(3)}, {Rat(4), Rat(5), Rat(6)}};
        auto basis = null_space(m);
        REQUIRE(basis.size() == 1);
        CHECK(basis[0] == std::vector<Rat>{Rat(1), Rat(-2), Rat(1)});
    }
    SUBCASE("random matrices: size, exact annihilation, canonical entries") {
        TestRng rng(131);
        for (int trial = 0; trial < 40; ++trial) {
            std::size_t r = static_cast<std::size_t>(rng.pick(1, 5));
            std::size_t c = static_cast<std::size_t>(rng.pick(1, 9));
            QMatrix m = rng.matrix(r, c, 4);
            auto basis = null_space(m);
            CHECK(basis.size() == c - rank(m));
            QMatrix stacked(basis.size(), c);
            for (std::size_t i = 0; i < basis.size(); ++i) {
                const auto& v = basis[i];
                for (const Rat& e : matvec(m, v)) CHECK(e == 0);
                bool seen = false;
                Int g = 0;
                for (std::size_t j = 0; j < c; ++j) {
                    CHECK(denominator(v[j]) == 1);
                    if (!seen && v[j] != 0) {
                        CHECK(v[j] > 0);
                        seen = true;
                    }
                    g = int_gcd(g, numerator(v[j]));
                    stacked.at(i, j) = v[j];
                }
                CHECK(seen);
                CHECK(g == 1);
            }
            CHECK(rank(stacked) == basis.size()); // basis is independent
        }
    }
}

TEST_CASE("maximal_minors: order, count, deficiency criterion") {
    SUBCASE("1x2 and 2x3 frozen values") {
        QMatrix row{{Rat(7), Rat(-3)}};
        CHECK(maximal_minors(row) == std::vector<Rat>{Rat(7), Rat(-3)});
        QMatrix m{{Rat(1), Rat(2), Rat(3)}, {Rat(4), Rat(5), Rat(6)}};
        // column subsets in lexicographic order: {0,1}, {0,2}, {1,2}
        CHECK(maximal_minors(m) == std::vector<Rat>{Rat(-3), Rat(-6), Rat(-3)});
    }
    SUBCASE("2x4 minors satisfy the quadratic exchange identity") {
        TestRng rng(137);
        for (int trial = 0; trial < 30; ++trial) {
            QMatrix m = rng.matrix(2, 4);
            auto p = maximal_minors(m);
            REQUIRE(p.size() == 6);
            // subsets: 01,02,03,12,13,23
            CHECK(p[0] * p[5] - p[1] * p[4] + p[2] * p[3] == 0);
        }
    }
    SUBCASE("all minors vanish exactly when rank drops") {
        TestRng rng(139);
        for (int trial = 0; trial < 20; ++trial) {
            QMatrix m = rng.matrix(3, 5, 4);
            auto mm = maximal_minors(m);
            CHECK(mm.size() == 10);
            bool all_zero = true;
            for (const auto& d : mm) all_zero = all_zero && (d == 0);
            CHECK(all_zero == (rank(m) < 3));

            // manufactured deficiency: replace last row by a combination
            QMatrix defic = m;
            for (std::size_t j = 0; j < 5; ++j)
                defic.at(2, j) = Rat(2) * m.at(0, j) - Rat(3) * m.at(1, j);
            for (const auto& d : maximal_minors(defic)) CHECK(d == 0);
        }
    }
    SUBCASE("count for wide matrices") {
        TestRng rng(149);
        QMatrix m = rng.matrix(5, 9, 3);
        CHECK(maximal_minors(m).size() == 126);
    }
}

TEST_CASE("inverse round-trips and rejects singular input") {
    TestRng rng(151);
    int done = 0;
    for (int trial = 0; trial < 40 && done < 15; ++trial) {
        QMatrix m = rng.matrix(3, 3);
        if (det(m) == 0) continue;
        ++done;
        CHECK(m * inverse(m) == QMatrix::identity(3));
        CHECK(inverse(m) * m == QMatrix::identity(3));
    }
    CHECK(done == 15);
    QMatrix sing{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
    CHECK_THROWS_AS(inverse(sing), Error);
}

TEST_CASE("matrix arithmetic basics") {
    QMatrix a{{Rat(1), Rat(2)}, {Rat(3), Rat(4)}};
    QMatrix b{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}};
    CHECK(a * b == QMatrix{{Rat(2), Rat(1)}, {Rat(4), Rat(3)}});
    CHECK(a + b - b == a);
    CHECK(a.scaled(Rat(2)).at(1, 1) == Rat(8));
    CHECK(matvec(a, {Rat(1), Rat(1)}) == std::vector<Rat>{Rat(3), Rat(7)});
    CHECK(a.transposed().at(0, 1) == Rat(3));
    CHECK_THROWS_AS(a * QMatrix(3, 3), Error);
}
