#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rankdrop/error.hpp"
#include "rankdrop/facesplit.hpp"
#include "rankdrop/matrix.hpp"
#include "rankdrop/projective.hpp"

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
    Rat rat(long span = 9) {
        long n = pick(-span, span);
        long d = pick(1, span);
        return Rat(n, d);
    }
    PointP2 point_p2(long span = 9) {
        while (true) {
            Rat a = rat(span), b = rat(span), c = rat(span);
            if (a != 0 || b != 0 || c != 0) {
                return PointP2(a, b, c);
            }
        }
    }
    PointP1 point_p1(long span = 9) {
        while (true) {
            Rat a = rat(span), b = rat(span);
            if (a != 0 || b != 0) {
                return PointP1(a, b);
            }
        }
    }
    Config config(std::size_t k, long span = 9) {
        Config c;
        for (std::size_t i = 0; i < k; ++i) {
            c.push_back({point_p2(span), point_p2(span)});
        }
        return c;
    }
    ConfigP1 config_p1(std::size_t k, long span = 9) {
        ConfigP1 c;
        for (std::size_t i = 0; i < k; ++i) {
            c.push_back({point_p1(span), point_p1(span)});
        }
        return c;
    }
    Homography homography(long span = 5) {
        while (true) {
            QMatrix m(3, 3);
            for (std::size_t r = 0; r < 3; ++r) {
                for (std::size_t c = 0; c < 3; ++c) {
                    m.at(r, c) = Rat(pick(-span, span));
                }
            }
            if (det(m) != 0) {
                return Homography(m);
            }
        }
    }
};

Config worked_five_pair_example() {
    return {{PointP2(Rat(0), Rat(0), Rat(1)), PointP2(Rat(0), Rat(0), Rat(1))},
            {PointP2(Rat(1), Rat(0), Rat(1)), PointP2(Rat(1), Rat(0), Rat(1))},
            {PointP2(Rat(0), Rat(1), Rat(1)), PointP2(Rat(3), Rat(0), Rat(1))},
            {PointP2(Rat(1), Rat(1), Rat(1)), PointP2(Rat(-4), Rat(0), Rat(1))},
            {PointP2(Rat(50), Rat(98), Rat(113)), PointP2(Rat(8), Rat(0), Rat(1))}};
}

QMatrix kron3(const QMatrix& a, const QMatrix& b) {
    QMatrix k(9, 9);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            for (std::size_t r = 0; r < 3; ++r) {
                for (std::size_t c = 0; c < 3; ++c) {
                    k.at(3 * i + r, 3 * j + c) = a.at(i, j) * b.at(r, c);
                }
            }
        }
    }
    return k;
}

bool rows_proportional(const std::vector<Rat>& u, const std::vector<Rat>& v) {
    REQUIRE(u.size() == v.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        for (std::size_t j = i + 1; j < u.size(); ++j) {
            if (u[i] * v[j] != u[j] * v[i]) {
                return false;
            }
        }
    }
    bool u_zero = true, v_zero = true;
    for (const Rat& q : u) {
        if (q != 0) {
            u_zero = false;
        }
    }
    for (const Rat& q : v) {
        if (q != 0) {
            v_zero = false;
        }
    }
    return u_zero == v_zero;
}

Rat br2(const PointP1& a, const PointP1& b) { return bracket2(a, b); }

} // namespace

TEST_CASE("the matrix of a known five-pair configuration") {
    Config c = worked_five_pair_example();
    QMatrix z = build_z(c);
    REQUIRE(z.rows() == 5);
    REQUIRE(z.cols() == 9);
    // The point (-4, 0, 1) is stored as (4, 0, -1): canonical representatives
    // make the leading coordinate positive.
    QMatrix expected = {{0, 0, 0, 0, 0, 0, 0, 0, 1},
                        {1, 0, 1, 0, 0, 0, 1, 0, 1},
                        {0, 0, 0, 3, 0, 1, 3, 0, 1},
                        {4, 0, -1, 4, 0, -1, 4, 0, -1},
                        {400, 0, 50, 784, 0, 98, 904, 0, 113}};
    CHECK(z == expected);
    CHECK(rank(z) == 4);
    CHECK(z_rank(c) == 4);
    CHECK(z_deficient(c));
}

TEST_CASE("entry layout follows the coordinate products") {
    TestRng rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        Config c = rng.config(3);
        QMatrix z = build_z(c);
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t a = 0; a < 3; ++a) {
                for (std::size_t b = 0; b < 3; ++b) {
                    CHECK(z.at(i, 3 * a + b) == c[i].x[a] * c[i].y[b]);
                }
            }
        }
    }
    CHECK_THROWS_AS(build_z(Config{}), Error);
}

TEST_CASE("rows fold to rank-one outer products and kernel vectors to annihilators") {
    TestRng rng(22);
    for (int trial = 0; trial < 15; ++trial) {
        Config c = rng.config(5);
        QMatrix z = build_z(c);
        for (std::size_t i = 0; i < c.size(); ++i) {
            QMatrix m = unvec(z.row(i));
            CHECK(rank(m) == 1);
            // The fold is y x^T: entry (r, c) is y_r x_c.
            for (std::size_t r = 0; r < 3; ++r) {
                for (std::size_t col = 0; col < 3; ++col) {
                    CHECK(m.at(r, col) == c[i].y[r] * c[i].x[col]);
                }
            }
            CHECK(vec(m) == z.row(i));
        }
        for (const auto& v : null_space(z)) {
            QMatrix m = unvec(v);
            for (const PointPair& p : c) {
                Rat acc = 0;
                for (std::size_t r = 0; r < 3; ++r) {
                    for (std::size_t col = 0; col < 3; ++col) {
                        acc += p.y[r] * m.at(r, col) * p.x[col];
                    }
                }
                CHECK(acc == 0);
            }
        }
    }
}

TEST_CASE("identical pairs leave exactly the antisymmetric annihilators") {
    Config c;
    for (const PointP2& p :
         {PointP2(Rat(1), Rat(0), Rat(0)), PointP2(Rat(0), Rat(1), Rat(0)),
          PointP2(Rat(0), Rat(0), Rat(1)), PointP2(Rat(1), Rat(1), Rat(1)),
          PointP2(Rat(2), Rat(3), Rat(1)), PointP2(Rat(3), Rat(7), Rat(1))}) {
        c.push_back({p, p});
    }
    QMatrix z = build_z(c);
    CHECK(rank(z) == 6);
    CHECK_FALSE(z_deficient(c));
    auto kernel = null_space(z);
    REQUIRE(kernel.size() == 3);
    for (const auto& v : kernel) {
        QMatrix m = unvec(v);
        CHECK(m.transposed() == m.scaled(Rat(-1)));
    }
}

TEST_CASE("transforming both sides multiplies by a Kronecker factor row by row") {
    TestRng rng(33);
    for (int trial = 0; trial < 12; ++trial) {
        Config c = rng.config(4);
        Homography hx = rng.homography(), hy = rng.homography();
        Config moved = transform(c, hx, hy);
        QMatrix z = build_z(c);
        QMatrix zt = build_z(moved);
        QMatrix k = kron3(hx.matrix().transposed(), hy.matrix().transposed());
        QMatrix product = z * k;
        for (std::size_t i = 0; i < c.size(); ++i) {
            CHECK(rows_proportional(zt.row(i), product.row(i)));
        }
        CHECK(rank(z) == rank(zt));
    }
}

TEST_CASE("rank is invariant under changing coordinates on either side") {
    TestRng rng(44);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t k = static_cast<std::size_t>(rng.pick(2, 6));
        Config c = rng.config(k);
        Homography hx = rng.homography(), hy = rng.homography();
        CHECK(z_rank(c) == z_rank(transform(c, hx, hy)));
    }
}

TEST_CASE("moving every point away from infinity") {
    Config with_infinite = {{PointP2(Rat(1), Rat(0), Rat(0)), PointP2(Rat(2), Rat(1), Rat(1))},
                            {PointP2(Rat(0), Rat(1), Rat(0)), PointP2(Rat(1), Rat(-1), Rat(0))},
                            {PointP2(Rat(1), Rat(2), Rat(3)), PointP2(Rat(0), Rat(0), Rat(1))}};
    FiniteForm moved = move_to_finite(with_infinite);
    for (const PointPair& p : moved.config) {
        CHECK(p.x[2] != 0);
        CHECK(p.y[2] != 0);
    }
    CHECK(moved.config == transform(with_infinite, moved.hx, moved.hy));
    CHECK(z_rank(moved.config) == z_rank(with_infinite));

    Config finite = {{PointP2(Rat(1), Rat(2), Rat(3)), PointP2(Rat(0), Rat(0), Rat(1))},
                     {PointP2(Rat(-5), Rat(1), Rat(1)), PointP2(Rat(4), Rat(1), Rat(2))}};
    FiniteForm untouched = move_to_finite(finite);
    CHECK(untouched.hx == Homography::identity());
    CHECK(untouched.hy == Homography::identity());
    CHECK(untouched.config == finite);
}

TEST_CASE("the four-pair matrix of line points and its determinant") {
    // x = 1, 1, 1, 3 and y = 8, 4, 2, 5 as affine values: three equal points
    // on one side force a rank drop.
    ConfigP1 c = {{PointP1(Rat(1), Rat(1)), PointP1(Rat(8), Rat(1))},
                  {PointP1(Rat(1), Rat(1)), PointP1(Rat(4), Rat(1))},
                  {PointP1(Rat(1), Rat(1)), PointP1(Rat(2), Rat(1))},
                  {PointP1(Rat(3), Rat(1)), PointP1(Rat(5), Rat(1))}};
    QMatrix z = build_z_p1(c);
    QMatrix expected = {{8, 1, 8, 1}, {4, 1, 4, 1}, {2, 1, 2, 1}, {15, 3, 5, 1}};
    CHECK(z == expected);
    CHECK(det(z) == 0);
    CHECK(rank(z) == 3);

    TestRng rng(55);
    for (int trial = 0; trial < 30; ++trial) {
        ConfigP1 r = rng.config_p1(4);
        Rat combo = br2(r[0].x, r[3].x) * br2(r[1].x, r[2].x) * br2(r[0].y, r[2].y) *
                        br2(r[1].y, r[3].y) -
                    br2(r[0].x, r[2].x) * br2(r[1].x, r[3].x) * br2(r[0].y, r[3].y) *
                        br2(r[1].y, r[2].y);
        CHECK(det(build_z_p1(r)) == combo);
    }
}

TEST_CASE("pairs with a line point match the matching plane columns") {
    TestRng rng(66);
    for (int trial = 0; trial < 15; ++trial) {
        std::vector<PointP2> xs;
        std::vector<PointP1> ys;
        Config embedded;
        for (int i = 0; i < 6; ++i) {
            PointP2 x = rng.point_p2();
            PointP1 y = rng.point_p1();
            xs.push_back(x);
            ys.push_back(y);
            embedded.push_back({x, PointP2(y[0], y[1], Rat(0))});
        }
        QMatrix narrow = build_z_line(xs, ys);
        QMatrix wide = build_z(embedded);
        for (std::size_t i = 0; i < 6; ++i) {
            // Columns that multiply the vanishing coordinate are zero...
            CHECK(wide.at(i, 2) == 0);
            CHECK(wide.at(i, 5) == 0);
            CHECK(wide.at(i, 8) == 0);
            // ...and the rest reproduce the six-column matrix in order.
            CHECK(wide.at(i, 0) == narrow.at(i, 0));
            CHECK(wide.at(i, 1) == narrow.at(i, 1));
            CHECK(wide.at(i, 3) == narrow.at(i, 2));
            CHECK(wide.at(i, 4) == narrow.at(i, 3));
            CHECK(wide.at(i, 6) == narrow.at(i, 4));
            CHECK(wide.at(i, 7) == narrow.at(i, 5));
        }
        CHECK(rank(narrow) == rank(wide));
    }
}

TEST_CASE("the six-column matrix of the worked line example") {
    std::vector<PointP2> xs = {PointP2(Rat(0), Rat(0), Rat(1)), PointP2(Rat(1), Rat(0), Rat(1)),
                               PointP2(Rat(0), Rat(1), Rat(1)), PointP2(Rat(1), Rat(1), Rat(1)),
                               PointP2(Rat(3), Rat(5), Rat(1))};
    std::vector<PointP1> ys = {PointP1(Rat(0), Rat(1)), PointP1(Rat(1), Rat(1)),
                               PointP1(Rat(3), Rat(1)), PointP1(Rat(-4), Rat(1)),
                               PointP1(Rat(8), Rat(1))};
    QMatrix top = build_z_line(xs, ys);
    QMatrix expected = {{0, 0, 0, 0, 0, 1},
                        {1, 1, 0, 0, 1, 1},
                        {0, 0, 3, 1, 3, 1},
                        {4, -1, 4, -1, 4, -1},
                        {24, 3, 40, 5, 8, 1}};
    CHECK(top == expected);
    CHECK(rank(top) == 5);

    // Appending the sixth pair x6 = (2, 11, 1) with affine y-value t gives a
    // determinant linear in t; its root is where the six pairs go deficient.
    auto det_at = [&](const Rat& t) {
        std::vector<PointP2> x6 = xs;
        std::vector<PointP1> y6 = ys;
        x6.push_back(PointP2(Rat(2), Rat(11), Rat(1)));
        y6.push_back(PointP1(t, Rat(1)));
        return det(build_z_line(x6, y6));
    };
    Rat at0 = det_at(Rat(0));
    Rat at1 = det_at(Rat(1));
    Rat slope = at1 - at0;
    CHECK(det_at(Rat(2)) == at0 + 2 * slope); // the determinant is linear in t
    CHECK(at0 != 0);
    CHECK(slope != 0);
    CHECK(det_at(-at0 / slope) == 0);
    CHECK(det_at(Rat(2942, 918)) == 0);
    CHECK(-at0 / slope == Rat(2942, 918));
}

TEST_CASE("generic configurations keep full row rank") {
    TestRng rng(77);
    for (std::size_t k = 1; k <= 6; ++k) {
        int full = 0;
        for (int trial = 0; trial < 8; ++trial) {
            Config c = rng.config(k, 30);
            if (z_rank(c) == k) {
                ++full;
            }
        }
        CHECK(full >= 7); // random pairs are almost never dependent
    }
}

TEST_CASE("fold and unfold are mutually inverse") {
    TestRng rng(88);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Rat> v(9);
        for (auto& q : v) {
            q = rng.rat();
        }
        CHECK(vec(unvec(v)) == v);
    }
    CHECK_THROWS_AS(unvec(std::vector<Rat>(8)), Error);
    CHECK_THROWS_AS(vec(QMatrix(2, 3)), Error);
}
