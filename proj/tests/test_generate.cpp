#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rankdrop/error.hpp"
#include "rankdrop/facesplit.hpp"
#include "rankdrop/generate.hpp"

#include <cstdint>
#include <vector>

using namespace rankdrop;

namespace {

std::vector<PointP2> side_points(const Config& c, bool x_side) {
    std::vector<PointP2> out;
    for (const auto& pair : c) out.push_back(x_side ? pair.x : pair.y);
    return out;
}

bool has_repeated_point(const std::vector<PointP2>& pts) {
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (pts[i] == pts[j]) return true;
    return false;
}

} // namespace

TEST_CASE("the generator is a pure function of its arguments") {
    for (std::size_t k = 2; k <= 6; ++k) {
        for (Regime regime : all_regimes()) {
            const Config a = generate_config(42, k, regime);
            const Config b = generate_config(42, k, regime);
            REQUIRE(a.size() == k);
            CHECK(a == b);
            const Config other = generate_config(43, k, regime);
            CHECK(other.size() == k);
        }
    }
    CHECK(generate_config(7, 4, Regime::Generic) != generate_config(8, 4, Regime::Generic));
    CHECK(generate_config_p1(7, 3, Regime::Generic) == generate_config_p1(7, 3, Regime::Generic));
}

TEST_CASE("the stream behind the generator matches the published test vectors") {
    SplitMix64 rng{0};
    CHECK(rng.next() == 0xE220A8397B1DCDAFULL);
    CHECK(rng.next() == 0x6E789E6AA1B965F4ULL);
    CHECK(rng.next() == 0x06C45D188009454FULL);

    SplitMix64 bounded{123456789};
    for (int i = 0; i < 500; ++i) {
        const auto v = bounded.range(-6, 17);
        CHECK(v >= -6);
        CHECK(v <= 17);
    }
    CHECK(bounded.range(5, 5) == 5);
}

TEST_CASE("size limits are enforced") {
    try {
        generate_config(1, 1, Regime::Generic);
        FAIL("one pair must be rejected");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DimensionMismatch);
    }
    try {
        generate_config(1, 7, Regime::Generic);
        FAIL("seven pairs must be rejected");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DimensionMismatch);
    }
    try {
        generate_config_p1(1, 5, Regime::Generic);
        FAIL("five line pairs must be rejected");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DimensionMismatch);
    }
}

TEST_CASE("regime names round-trip") {
    for (Regime regime : all_regimes()) {
        CHECK(regime_from_name(regime_name(regime)) == regime);
    }
    try {
        regime_from_name("collinear_side");
        FAIL("underscored spelling must be rejected");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ParseError);
    }
}

TEST_CASE("a collinear-side draw puts one side on a line") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        for (std::size_t k = 2; k <= 6; ++k) {
            const Config c = generate_config(seed, k, Regime::CollinearSide);
            const bool ok = collinear(side_points(c, true)) || collinear(side_points(c, false));
            CHECK(ok);
        }
    }
}

TEST_CASE("a planted coincidence always repeats a point on some side") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        for (std::size_t k = 2; k <= 6; ++k) {
            const Config c = generate_config(seed, k, Regime::PlantedCoincidence);
            const bool ok = has_repeated_point(side_points(c, true)) ||
                            has_repeated_point(side_points(c, false));
            CHECK(ok);
        }
    }
}

TEST_CASE("a planted homography relates the two sides") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        for (std::size_t k = 4; k <= 6; ++k) {
            const Config c = generate_config(seed, k, Regime::PlantedHomography);
            const auto xs = side_points(c, true);
            const auto ys = side_points(c, false);
            if (collinear(xs)) {
                // The four-pair collinear variant: the relation forces the
                // drop instead of being recoverable from four image pairs.
                CHECK(collinear(ys));
                CHECK(z_deficient(c));
                continue;
            }
            try {
                const Homography h = homography_from_4({xs[0], xs[1], xs[2], xs[3]},
                                                       {ys[0], ys[1], ys[2], ys[3]});
                for (std::size_t i = 0; i < k; ++i) CHECK(h.apply(xs[i]) == ys[i]);
            } catch (const Error&) {
                // Four of the random source points failed to form a frame;
                // nothing to recover in that case.
            }
        }
    }
}

TEST_CASE("synthesized configurations are rank deficient for every size") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        for (std::size_t k = 2; k <= 6; ++k) {
            const Config c = generate_config(seed, k, Regime::SynthesizedDeficient);
            REQUIRE(c.size() == k);
            CHECK(z_deficient(c));
        }
    }
}

TEST_CASE("synthesized line configurations are rank deficient for every size") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        for (std::size_t k = 2; k <= 4; ++k) {
            const ConfigP1 c = generate_config_p1(seed, k, Regime::SynthesizedDeficient);
            REQUIRE(c.size() == k);
            CHECK(rank(build_z_p1(c)) < k);
        }
    }
}

TEST_CASE("line-pair regimes keep their promises") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        for (std::size_t k = 2; k <= 4; ++k) {
            const ConfigP1 coincident = generate_config_p1(seed, k, Regime::PlantedCoincidence);
            bool repeated = false;
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = i + 1; j < k; ++j)
                    if (coincident[i].x == coincident[j].x || coincident[i].y == coincident[j].y)
                        repeated = true;
            CHECK(repeated);

            const ConfigP1 related = generate_config_p1(seed, k, Regime::PlantedHomography);
            std::vector<PointP1> xs;
            std::vector<PointP1> ys;
            for (const auto& pair : related) {
                xs.push_back(pair.x);
                ys.push_back(pair.y);
            }
            if (k >= 3 && xs[0] != xs[1] && xs[0] != xs[2] && xs[1] != xs[2]) {
                try {
                    const HomographyP1 h =
                        homography_p1_from_3({xs[0], xs[1], xs[2]}, {ys[0], ys[1], ys[2]});
                    for (std::size_t i = 0; i < k; ++i) CHECK(h.apply(xs[i]) == ys[i]);
                } catch (const Error&) {
                    // degenerate image triple; nothing to recover
                }
            }
        }
    }
}
