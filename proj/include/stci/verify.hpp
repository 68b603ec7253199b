#pragma once
/// @file verify.hpp
/// @brief Decidable verification of the constructed generators: termwise
///        ideal membership, exhaustive variety comparison over small
///        finite fields, elimination identities replayed on recorded lift
///        artifacts, the trivial-solution probe, and CAS script export.

#include "stci/gf.hpp"
#include "stci/lift.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace stci {

enum class CheckStatus { pass, fail, skipped };

std::string to_string(CheckStatus s);

struct CheckItem {
    std::string name;
    CheckStatus status = CheckStatus::fail;
    std::string detail;
};

/// Outcome of one verification run. A skipped item never counts as a
/// pass: all_pass() demands every item actually passed, any_fail() is
/// true only on a hard failure.
struct VerificationReport {
    std::string check;  // which operation produced this report
    std::vector<CheckItem> items;
    std::uint64_t seed = 0;   // sampling seed (probe only)
    std::uint64_t swept = 0;  // points visited by exhaustive sweeps
    long long elapsed_ms = 0;

    bool all_pass() const;
    bool any_fail() const;
    void add(std::string name, bool pass, std::string detail = "");
};

/// Termwise membership of every polynomial in the cycle ideal of the
/// n-gon — exact, since the ideal is monomial. An empty list passes
/// vacuously.
VerificationReport membership_check(const std::vector<Polynomial>& fs, std::uint32_t n);

/// Exhaustive comparison over F_q, q = p^k: the common zero set of fs
/// against the variety of the cycle ideal, both inclusions, plus the
/// closed-form point count. Decisive for this subfield only — a
/// necessary condition for the radical identity, not a proof over the
/// closure — and the report says so. Throws std::invalid_argument when
/// q^n exceeds cap.
VerificationReport variety_equality(const std::vector<Polynomial>& fs, std::uint32_t n, const Field& f,
                                    std::uint64_t cap = kDefaultSweepCap);

/// Replays the elimination identities on one lift's artifacts: the linear
/// eliminated rows vanish on the cofactor vector, the resultant equals the
/// first eliminated row evaluated at the cofactors, the first and last
/// cofactors split off their pure powers into the predicted central
/// depths, the remainder sits in the cycle ideal at full depth, and the
/// resultant decomposes as remainder + pure power + tail.
VerificationReport resultant_checks(const Schedule& sch, const LiftArtifacts& art);

/// Samples x-points with S(x) != 0 (mt19937_64(seed), one rng() % q draw
/// per coordinate), then enumerates every y in F_q^{n-3} and checks that
/// y = 0 is the only common zero of the eliminated rows. Draws with
/// S(x) = 0 are skipped and counted separately. Throws
/// std::invalid_argument when q^{n-3} exceeds cap.
VerificationReport trivial_solution_probe(const LiftArtifacts& art, const Field& f, std::uint32_t trials,
                                          std::uint64_t seed, std::uint64_t cap = kDefaultSweepCap);

/// Self-contained CAS script declaring the ring over F_p, the generators,
/// the cycle ideal, and one radical-membership query per ideal generator
/// (via the classical auxiliary-variable trick). format is "macaulay2" or
/// "singular"; anything else throws std::invalid_argument, as does an
/// empty generator list.
std::string export_cas(const std::vector<Polynomial>& fs, std::uint32_t n, const std::string& format);

}  // namespace stci
