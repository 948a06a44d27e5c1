#pragma once

#include "rankdrop/projective.hpp"

#include <array>
#include <cstdint>
#include <string>

namespace rankdrop {

/// Small deterministic PRNG (SplitMix64). Every generator below derives all
/// of its randomness from one of these, so a seed fully determines the
/// output on every platform.
struct SplitMix64 {
    std::uint64_t state = 0;

    std::uint64_t next();

    /// Uniform-ish integer in [lo, hi] (inclusive). hi must be ≥ lo.
    std::int64_t range(std::int64_t lo, std::int64_t hi);
};

/// Families of random configurations with different guarantees:
///  - Generic: independent random points on both sides, no constraints.
///  - CollinearSide: one side drawn from a single random line.
///  - PlantedCoincidence: a random coincidence pattern (repeated pair,
///    repeated point on one side, coincident triple with or without a
///    collinear opposite side, a fully coincident side, or — for six
///    pairs — the double-triangle pattern of three doubled points per side).
///  - PlantedHomography: the y side is the image of the x side under a
///    random invertible map (for four pairs, the x side is additionally
///    placed on a line half the time).
///  - SynthesizedDeficient: a construction that is rank deficient by design
///    for every pair count.
enum class Regime {
    Generic,
    CollinearSide,
    PlantedCoincidence,
    PlantedHomography,
    SynthesizedDeficient,
};

const char* regime_name(Regime r);

/// Inverse of regime_name. Throws ParseError for unknown names.
Regime regime_from_name(const std::string& name);

const std::array<Regime, 5>& all_regimes();

/// A random configuration of k pairs in P²×P² (2 ≤ k ≤ 6) drawn from the
/// given regime. The same (seed, k, regime) triple always produces the same
/// configuration.
Config generate_config(std::uint64_t seed, std::size_t k, Regime regime);

/// The P¹×P¹ counterpart for 2 ≤ k ≤ 4. CollinearSide degenerates to
/// Generic (every point of a projective line is "on the line").
ConfigP1 generate_config_p1(std::uint64_t seed, std::size_t k, Regime regime);

} // namespace rankdrop
