#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rankdrop/error.hpp"
#include "rankdrop/poly.hpp"

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
    Rat rat() {
        const long num = static_cast<long>(next() % 21) - 10;
        const long den = static_cast<long>(next() % 9) + 1;
        return Rat(Int(num), Int(den));
    }
    Poly poly(std::size_t max_deg) {
        std::vector<Rat> c(next() % (max_deg + 1) + 1, Rat(0));
        for (auto& v : c) v = rat();
        return Poly(std::move(c));
    }
};

Poly from_roots(const std::vector<Rat>& roots, const Rat& lead) {
    Poly p = Poly::constant(lead);
    for (const auto& r : roots) p = p * Poly({-r, Rat(1)});
    return p;
}

} // namespace

TEST_CASE("arithmetic and normalization") {
    const Poly p({Rat(1), Rat(0), Rat(2)});     // 1 + 2t^2
    const Poly q({Rat(-1), Rat(3)});            // -1 + 3t
    CHECK(p.degree() == 2);
    CHECK((p + q) == Poly({Rat(0), Rat(3), Rat(2)}));
    CHECK((p - p).is_zero());
    CHECK((p - p).degree() == -1);
    CHECK((p * q) == Poly({Rat(-1), Rat(3), Rat(-2), Rat(6)}));
    CHECK(p.eval(Rat(Int(3), Int(2))) == Rat(Int(11), Int(2)));
    // Trailing zeros are stripped on construction.
    CHECK(Poly({Rat(5), Rat(0), Rat(0)}).degree() == 0);
    CHECK(Poly({Rat(0)}).is_zero());
}

TEST_CASE("divmod reconstructs and bounds the remainder") {
    TestRng rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const Poly den = rng.poly(3);
        if (den.is_zero()) continue;
        const Poly num = rng.poly(6);
        const auto [q, r] = poly_divmod(num, den);
        CHECK(q * den + r == num);
        CHECK(r.degree() < den.degree());
    }
    CHECK_THROWS_AS((void)poly_divmod(Poly::constant(Rat(1)), Poly()), Error);
}

TEST_CASE("gcd is monic and divides both inputs") {
    const Poly g = from_roots({Rat(1)}, Rat(7));
    const Poly a = g * Poly({Rat(2), Rat(0), Rat(1)});  // (t^2+2) factor
    const Poly b = g * Poly({Rat(3), Rat(1)});          // (t+3) factor
    const Poly d = poly_gcd(a, b);
    CHECK(d == Poly({Rat(-1), Rat(1)}));  // monic t - 1

    TestRng rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        const Poly f = rng.poly(4);
        const Poly h = rng.poly(4);
        if (f.is_zero() || h.is_zero()) continue;
        const Poly d2 = poly_gcd(f, h);
        CHECK(poly_divmod(f, d2).second.is_zero());
        CHECK(poly_divmod(h, d2).second.is_zero());
        // Quotients are coprime.
        const Poly cf = poly_divmod(f, d2).first;
        const Poly ch = poly_divmod(h, d2).first;
        CHECK(poly_gcd(cf, ch).degree() == 0);
    }
    CHECK(poly_gcd(Poly(), Poly()).is_zero());
    CHECK(poly_gcd(Poly(), Poly({Rat(0), Rat(4)})) == Poly({Rat(0), Rat(1)}));
}

TEST_CASE("interpolation recovers the sampled polynomial") {
    TestRng rng(37);
    for (int trial = 0; trial < 25; ++trial) {
        const Poly p = rng.poly(6);
        std::vector<std::pair<Rat, Rat>> pts;
        for (int t = 0; t <= 6; ++t) pts.emplace_back(Rat(t), p.eval(Rat(t)));
        CHECK(lagrange_interpolate(pts) == p);
    }
    CHECK_THROWS_AS((void)lagrange_interpolate({{Rat(1), Rat(2)}, {Rat(1), Rat(3)}}), Error);
}

TEST_CASE("resultant matches the product-over-roots oracle") {
    // Res(t^2-1, t-2) via the 3x3 Sylvester determinant equals
    // lc(f)^deg(g) * g(1) * g(-1) = (1-2)(-1-2) = 3.
    const Poly f({Rat(-1), Rat(0), Rat(1)});
    const Poly g({Rat(-2), Rat(1)});
    CHECK(sylvester_resultant(f, g, 2, 1) == Rat(3));

    TestRng rng(53);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Rat> roots{rng.rat(), rng.rat(), rng.rat()};
        Rat lead = rng.rat();
        if (lead == 0) lead = Rat(1);
        const Poly a = from_roots(roots, lead);
        const Poly b = rng.poly(3);
        if (b.is_zero()) continue;
        Rat expect = lead;
        for (int i = 1; i < b.degree(); ++i) expect *= lead;
        if (b.degree() == 0) expect = Rat(1);
        Rat prod(1);
        for (const auto& r : roots) prod *= b.eval(r);
        CHECK(sylvester_resultant(a, b, 3, static_cast<std::size_t>(b.degree())) ==
              expect * prod);
    }

    // Shared root forces a zero resultant.
    const Poly s1 = from_roots({Rat(2), Rat(-1)}, Rat(1));
    const Poly s2 = from_roots({Rat(2), Rat(5)}, Rat(3));
    CHECK(sylvester_resultant(s1, s2, 2, 2) == Rat(0));
}

TEST_CASE("rational roots, including large prime factors") {
    const Poly p = Poly({Rat(0), Rat(0), Rat(1)}) * Poly({Rat(-1), Rat(2)}) * Poly({Rat(3), Rat(1)});
    const auto roots = rational_roots(p);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0] == Rat(-3));
    CHECK(roots[1] == Rat(0));
    CHECK(roots[2] == Rat(Int(1), Int(2)));

    // Irreducible over the rationals: no roots at all.
    CHECK(rational_roots(Poly({Rat(-2), Rat(0), Rat(1)})).empty());

    // Large prime roots exercise the factorization path.
    const Poly big = from_roots({Rat(1000003), Rat(999983), Rat(-1)}, Rat(1));
    const auto big_roots = rational_roots(big);
    REQUIRE(big_roots.size() == 3);
    CHECK(big_roots[0] == Rat(-1));
    CHECK(big_roots[1] == Rat(999983));
    CHECK(big_roots[2] == Rat(1000003));

    // Large prime denominator.
    const Poly q = Poly({Rat(-1), Rat(999983)}) * Poly({Rat(2), Rat(1)});
    const auto q_roots = rational_roots(q);
    REQUIRE(q_roots.size() == 2);
    CHECK(q_roots[0] == Rat(-2));
    CHECK(q_roots[1] == Rat(Int(1), Int(999983)));

    CHECK_THROWS_AS((void)rational_roots(Poly()), Error);
}

TEST_CASE("derivative and primitive part") {
    CHECK(derivative(Poly({Rat(7), Rat(-2), Rat(0), Rat(5)})) ==
          Poly({Rat(-2), Rat(0), Rat(15)}));
    CHECK(derivative(Poly::constant(Rat(4))).is_zero());
    CHECK(primitive_part(Poly({Rat(Int(4), Int(6)), Rat(Int(-2), Int(3))})) ==
          Poly({Rat(1), Rat(-1)}));
    // Signs are preserved: the scale factor is positive.
    CHECK(primitive_part(Poly({Rat(-4), Rat(-6)})) == Poly({Rat(-2), Rat(-3)}));
    CHECK(primitive_part(Poly()).is_zero());
}

TEST_CASE("simplest rational in an interval") {
    CHECK(simplest_rational_between(Rat(Int(1), Int(3)), Rat(Int(1), Int(2))) ==
          Rat(Int(1), Int(2)));
    CHECK(simplest_rational_between(Rat(Int(28), Int(100)), Rat(Int(35), Int(100))) ==
          Rat(Int(1), Int(3)));
    CHECK(simplest_rational_between(Rat(Int(-2), Int(3)), Rat(Int(-1), Int(2))) ==
          Rat(Int(-1), Int(2)));
    CHECK(simplest_rational_between(Rat(Int(-1), Int(4)), Rat(Int(1), Int(5))) == Rat(0));
    CHECK(simplest_rational_between(Rat(Int(7), Int(3)), Rat(Int(8), Int(3))) ==
          Rat(Int(5), Int(2)));
    CHECK(simplest_rational_between(Rat(2), Rat(3)) == Rat(2));
    CHECK(simplest_rational_between(Rat(5), Rat(5)) == Rat(5));
    CHECK_THROWS_AS((void)simplest_rational_between(Rat(3), Rat(2)), Error);
}

TEST_CASE("roots of huge-coefficient polynomials avoid factorization") {
    // (11t + 11888)(3t - 1)(t^2 - 2), scaled by a 40-digit constant: the
    // divisor route would have to factor the extremes, the Sturm route
    // does not.
    Rat big(Int("1237940039285380274899124357"));
    const Poly p = (Poly({Rat(11888), Rat(11)}) * Poly({Rat(-1), Rat(3)}) *
                    Poly({Rat(-2), Rat(0), Rat(1)}))
                       .scaled(big);
    const auto roots = rational_roots(p);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == Rat(Int(-11888), Int(11)));
    CHECK(roots[1] == Rat(Int(1), Int(3)));

    // Near-rational irrational roots must not produce false positives:
    // t^2 - 10^20 t + 7 has roots within 10^-19 of 10^20 and 7*10^-20.
    const Poly q = Poly({Rat(7), -Rat(Int("100000000000000000000")), Rat(1)}) *
                   Poly({Rat(-147), Rat(73)}).scaled(Rat(Int("982451653000000007")));
    const auto qroots = rational_roots(q);
    REQUIRE(qroots.size() == 1);
    CHECK(qroots[0] == Rat(Int(147), Int(73)));

    // Repeated roots collapse to one listing.
    const Poly r = Poly({Rat(-2), Rat(1)}) * Poly({Rat(-2), Rat(1)}) * Poly({Rat(1), Rat(1)});
    const auto rroots = rational_roots(r.scaled(big * big));
    REQUIRE(rroots.size() == 2);
    CHECK(rroots[0] == Rat(-1));
    CHECK(rroots[1] == Rat(2));
}

TEST_CASE("divisor enumeration") {
    const auto d12 = positive_divisors(Int(12));
    CHECK(d12 == std::vector<Int>{Int(1), Int(2), Int(3), Int(4), Int(6), Int(12)});
    CHECK(positive_divisors(Int(-7)) == std::vector<Int>{Int(1), Int(7)});
    CHECK(positive_divisors(Int(1)) == std::vector<Int>{Int(1)});

    // Product of two ten-digit primes: needs more than trial division.
    const Int p1("1000000007");
    const Int p2("1000000009");
    const auto dd = positive_divisors(p1 * p2);
    CHECK(dd == std::vector<Int>{Int(1), p1, p2, p1 * p2});
    CHECK_THROWS_AS((void)positive_divisors(Int(0)), Error);
}
