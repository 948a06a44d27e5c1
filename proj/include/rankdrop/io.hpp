#pragma once

#include "rankdrop/classify.hpp"

#include <optional>
#include <string>

namespace rankdrop {

/// A parsed configuration file. Exactly one of the two variants is set:
/// plane pairs (3-coordinate points) or line pairs (2-coordinate points),
/// decided by the coordinate array lengths in the file.
struct ParsedConfig {
    std::string version;
    std::optional<Config> plane;
    std::optional<ConfigP1> line;
};

/// Parse a configuration from JSON text of the form
///   {"version": "1", "points": [{"x": ["0","1","1/2"], "y": [...]}, ...]}
/// where every coordinate is a rational string "n" or "n/d" with d > 0.
/// Plane files carry 2..6 points, line files 2..4; mixed or ragged
/// coordinate lengths, zero vectors, and malformed rationals all raise
/// Error{ParseError}.
ParsedConfig parse_config_text(const std::string& text);

/// Read and parse a configuration file from disk. Unreadable files raise
/// Error{ParseError}.
ParsedConfig read_config_file(const std::string& path);

/// Canonical JSON text for a configuration (schema of parse_config_text;
/// coordinates are the canonical integer representatives). parse ∘ emit is
/// the identity.
std::string config_to_json(const Config& c);
std::string config_p1_to_json(const ConfigP1& c);

/// JSON report for a plane classification: k, rank, deficiency, the
/// conditions with their witnesses, the six-point invariant sextuples
/// (with the Joubert sextuple of every collinear side), and the supplied
/// classification timing. All geometric values are rational strings.
/// With verbose_inherited the full subset lattice replaces the minimal one.
std::string report_to_json(const Config& c, const Report& r, long long classify_microseconds,
                           bool verbose_inherited = false);

/// The line-pair counterpart (no invariant block).
std::string report_p1_to_json(const ConfigP1& c, const Report& r,
                              long long classify_microseconds,
                              bool verbose_inherited = false);

} // namespace rankdrop
