#pragma once
/// @file cli.hpp
/// @brief Command-line front end: schedule ledgers, construction runs,
///        verification batches, and CAS export, all reproducible — identical
///        invocations write identical bytes, timing goes to stderr only.

#include "stci/serialize.hpp"
#include "stci/verify.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>

namespace stci {

/// Stable exit-code contract for batch runs.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitConstruction = 3;

/// Environment variable overriding the exhaustive-sweep point cap.
inline constexpr const char* kSweepCapEnv = "STCI_SWEEP_CAP";

/// Print the minimal schedule for (p, N) — every derived exponent plus the
/// validation report — as a text table or JSON. Needs p prime and N >= 6.
int cmd_schedule(std::uint32_t p, std::uint32_t N, bool json, std::ostream& out, std::ostream& err);

/// Build the chain up to level n under the given schedule and write the
/// level-n generator set to out_path (with the lift artifacts unless
/// with_artifacts is off). Prints the generator count and term statistics.
int cmd_construct(const Schedule& sch, std::uint32_t n, X2Mode mode, bool with_artifacts,
                  const std::string& out_path, std::ostream& out, std::ostream& err);

/// Flag-level wrapper: minimal schedule from (p, N), mode parsed by name.
int cmd_construct(std::uint32_t p, std::uint32_t N, std::uint32_t n, const std::string& mode,
                  bool with_artifacts, const std::string& out_path, std::ostream& out, std::ostream& err);

/// Run the selected checks ("membership", "conditions", "variety",
/// "resultant", "probe", or "all") on a generator-set file over the listed
/// subfield sizes. Every parameter the checks need beyond fields, seed and
/// trial count comes from the file itself.
int cmd_verify(const std::string& in_path, const std::string& fields, const std::string& checks,
               std::uint64_t seed, std::uint32_t trials, std::ostream& out, std::ostream& err);

/// Write a CAS script ("macaulay2" or "singular") for the file's generators.
int cmd_export(const std::string& in_path, const std::string& format, const std::string& out_path,
               std::ostream& out, std::ostream& err);

/// argv front end over the commands above; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace stci
