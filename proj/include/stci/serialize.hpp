#pragma once
/// @file serialize.hpp
/// @brief The versioned JSON generator-set format.
///
/// A generator-set file records one constructed level completely: the
/// schedule snapshot it was built from, the generators with their table and
/// x_2 exponents, and (except at the base level) the artifacts of the lift
/// that produced it. Everything a later verification run needs travels in
/// the file, so no parameter is ever recomputed from flags.
///
/// All exponents are decimal strings; coefficients, variable indices and
/// small counters are plain JSON numbers. Readers reject unknown fields and
/// version mismatches, and re-validate the schedule on load. Writing is
/// canonical: parse followed by serialize reproduces the bytes.

#include "stci/lift.hpp"

#include <string>

namespace stci {

inline constexpr std::uint32_t kGeneratorSetVersion = 1;
inline constexpr const char* kGeneratorSetFormat = "stci-generator-set";

/// One level of the tower plus, optionally, the lift that reached it.
struct GeneratorSetFile {
    StructuredGenerators gens;
    bool has_artifacts = false;
    LiftArtifacts artifacts;
};

/// Serializes to the canonical JSON text (two-space indent, LF endings).
std::string generator_set_to_json(const GeneratorSetFile& file);

/// Parses and validates; throws std::invalid_argument on malformed input,
/// unknown fields, version mismatch, or inconsistent dimensions.
GeneratorSetFile generator_set_from_json(const std::string& text);

/// The schedule snapshot alone, in the same dialect.
std::string schedule_to_json(const Schedule& s);
Schedule schedule_from_json(const std::string& text);

}  // namespace stci
