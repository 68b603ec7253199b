#pragma once
/// @file schedule.hpp
/// @brief The tower of exponents driving the recursive construction.
///
/// A schedule for characteristic p and top level N fixes, per level n, the
/// data the construction consumes:
///
///   r[4..N]      base exponents, fed by r[n-1] > 2 r[n] + N
///   s[n]         r[n] + N
///   gamma[n]     a row of n-3 exponents with gamma_1 = p^{r[n]} and total
///                sum p^{s[n]}
///   delta[n]     p^{r[n-1]}
///   alpha[n]     alpha[5] = p^{r[5]},  alpha[n] = alpha[n-1] * p^{s[n-1]}
///   lambda[n]    lambda[5] chosen just above delta[5]; lambda[n] = alpha[n-1]
///   beta[n]      beta[5] = 1,  beta[n] = beta[n-1] * lambda[n-1]
///   eps[n]       eps[5] chosen just above alpha[5]*delta[5];
///                eps[n] = alpha[n-1] * (delta[n-1] - p^{s[n-1]})
///
/// make_minimal produces the least such schedule (r[N] = 1, the gap
/// inequality tight, the gamma mass split evenly); make_custom accepts
/// externally chosen r / gamma / lambda[5] / eps[5]. Structural facts (row
/// lengths, the gamma sum, purity of gamma_1) are enforced hard; the derived
/// inequalities are only *reported* by validate(), because one of them —
/// lambda[n] > delta[n] — degenerates to equality at n = 6 for every
/// minimal schedule and the construction survives it.

#include "stci/bignat.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace stci {

/// Exponents are capped so schedule powers stay allocatable.
inline constexpr std::uint64_t kMaxScheduleExponent = 1ull << 20;

struct Schedule {
    std::uint32_t p = 0;
    std::uint32_t N = 0;
    std::vector<BigNat> r;                   // r[0] is level 4, ..., r[N-4] is level N
    std::vector<std::vector<BigNat>> gamma;  // gamma[0] is level 5, ..., gamma[N-5] is level N
    BigNat lambda5;
    BigNat eps5;

    const BigNat& r_at(std::uint32_t n) const;                 // n in 4..N
    BigNat s_at(std::uint32_t n) const;                        // n in 4..N
    const std::vector<BigNat>& gamma_row(std::uint32_t n) const;  // n in 5..N

    BigNat delta(std::uint32_t n) const;   // n in 5..N
    BigNat alpha(std::uint32_t n) const;   // n in 5..N
    BigNat lambda(std::uint32_t n) const;  // n in 5..N
    BigNat beta(std::uint32_t n) const;    // n in 5..N
    BigNat eps(std::uint32_t n) const;     // n in 5..N (may be negative if the r gaps are bad)

    /// The central depth the level-n row rewrites actually guarantee. At
    /// n = 5 the seed's d-part carries a spare central power, so the full
    /// delta[5] survives; past that the exactness of the rewrite costs one
    /// power, leaving delta[n] - 1.
    BigNat delta_rewrite(std::uint32_t n) const;  // n in 5..N

    /// The effective last-row exponent:
    /// alpha[n-1] * delta_rewrite[n-1] - alpha[n] for n >= 6, eps[5] at 5.
    /// Equals eps[n] at n = 6 and falls short of it by alpha[n-1] beyond;
    /// the construction meets this bound tightly.
    BigNat eps_floor(std::uint32_t n) const;  // n in 5..N
};

/// Least schedule: r[N] = 1, r[n-1] = 2 r[n] + N + 1, gamma rows split by
/// largest remainder with earlier entries taking the extras,
/// lambda[5] = delta[5] + 1, eps[5] = alpha[5] delta[5] + 1.
Schedule make_minimal(std::uint32_t p, std::uint32_t N);

struct CustomScheduleInput {
    std::uint32_t p = 0;
    std::uint32_t N = 0;
    std::vector<BigNat> r;
    std::vector<std::vector<BigNat>> gamma;
    BigNat lambda5;
    BigNat eps5;
};

/// Builds a schedule from explicit data. Throws std::invalid_argument on
/// structural violations (primality, sizes, gamma sums, exponent caps);
/// soft inequalities are left to validate().
Schedule make_custom(const CustomScheduleInput& in);

struct ValidationItem {
    std::string name;
    bool pass;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationItem> items;
    bool all_pass() const;
};

/// Checks every derived inequality and reports item by item, never throwing:
/// r gaps, delta strictly descending, lambda[n] vs delta[n] (strict
/// domination, the one that fails at n = 6 on minimal schedules), eps
/// positivity, eps[n] vs alpha[n] delta[n], and whether the effective
/// last-row exponent eps_floor[n] meets the nominal eps[n] (it falls short
/// by alpha[n-1] from level 7 on).
ValidationReport validate(const Schedule& s);

}  // namespace stci
