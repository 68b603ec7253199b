#pragma once
/// @file lift.hpp
/// @brief The recursive construction: structured generator sets for the
///        cycle ideal and the lift that adds one vertex per step.
///
/// A structured generator set at level n packages the n-2 polynomials
/// f_1..f_{n-2} together with the coefficient table A they flatten through:
///
///   f_1     = A[1][2] x_2^{E1} + sum_{j=3}^{n-2} A[1][j] x_j^{lambda[n]}
///   f_2     = A[2][2] x_2^{E2} + sum_{j=3}^{n-2} A[2][j] x_j
///   f_i     =                    sum_{j=3}^{n-2} A[i][j] x_j          (3 <= i <= n-3)
///   f_{n-2} = sum_{j=3}^{n-2} A[n-2][j] x_j^{alpha[n]} + x_1 x_{n-1}^{alpha[n]}
///
/// with each diagonal entry A[i][i+1] carrying the pure power x_n^{gamma_i}
/// plus a remainder inside (x_3^delta, ..., x_{n-1}^delta). The lift to
/// level n+1 rewrites the first two rows, forms an auxiliary linear system
/// in fresh y variables, eliminates it through the signed cofactors of its
/// coefficient block, and closes the new generator list with the resulting
/// resultant-style polynomial. Every intermediate is retained in
/// LiftArtifacts so the identities behind the step can be re-verified
/// independently.
///
/// The one lift step that is not forced by the data is the exponent placed
/// on x_2 in the new f_1: `carried` propagates alpha * E1 (consistent with
/// the flattening), `literal` uses the closed expression
/// alpha * lambda * beta. The two agree up to the factor lambda[5] and both
/// are constructed and checked.

#include "stci/mpoly.hpp"
#include "stci/schedule.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace stci {

enum class X2Mode { carried, literal };

std::string to_string(X2Mode mode);
X2Mode x2_mode_from_string(const std::string& s);

struct StructuredGenerators {
    Schedule schedule;
    std::uint32_t level = 0;  // n
    X2Mode mode = X2Mode::carried;
    std::vector<Polynomial> gens;  // f_1..f_{n-2}, arity n
    PolyMatrix table;              // (n-2) x (n-2), columns 2..n-2 meaningful
    BigNat e1, e2;                 // x_2 exponents of rows 1 and 2

    std::uint32_t p() const { return schedule.p; }

    /// b_i = A[i][i+1] - x_n^{gamma_i}, the ideal remainder of a diagonal
    /// entry (1 <= i <= n-3).
    Polynomial ideal_part(std::uint32_t i) const;
};

/// The level-5 seed: f_1 = x_5^{gamma_1} x_2 + x_1 x_3^lambda,
/// f_2 = x_4^lambda x_2 + x_5^{gamma_2} x_3, f_3 = x_1 x_4^alpha.
StructuredGenerators base5(const Schedule& schedule, X2Mode mode);

/// Everything the lift from level n-1 to level n produced along the way.
struct LiftArtifacts {
    std::uint32_t level = 0;  // the level n that was produced
    int sign = 0;             // sigma: unit coefficient of the pure x_n term of S

    std::vector<Polynomial> row1_rewrite;  // a'_{1,j}, j = 3..n-3
    std::vector<Polynomial> row2_rewrite;  // a'_{2,j}, j = 3..n-2
    Polynomial b2_prime;                   // a'_{2,3} minus its pure x_{n-1} head

    std::vector<Polynomial> tilde;  // the y-linear system, arity 2n-3
    PolyMatrix cmat;                // its (n-4) x (n-3) coefficient block, arity n
    std::vector<Polynomial> cofactors;

    Polynomial resultant_s;  // S = tilde_1(y -> cofactors)
    Polynomial remainder_f;  // F = S - sigma x_n^e - x_1 x_{n-1}^{alpha[n]}
    Monomial pure_term;      // x_n^e
    Monomial tail_term;      // x_1 x_{n-1}^{alpha[n]}
};

struct LiftResult {
    StructuredGenerators next;
    LiftArtifacts artifacts;
};

/// One lift step. Throws construction_error when an invariant the
/// construction relies on fails to hold (non-unit pure-term coefficient,
/// undecomposable remainder, remainder terms outside the cycle ideal, a
/// flattening mismatch).
LiftResult lift_once(const StructuredGenerators& in);

struct ConditionReport {
    std::uint32_t level = 0;
    std::vector<ValidationItem> items;
    bool all_pass() const;
};

/// Checks the table conditions at the set's own level: the flattening
/// identities, the diagonal shape (I), the row-2..row-(n-3) memberships and
/// the decomposability of A[2][2] (II), and the last-row memberships (III).
ConditionReport check_conditions(const StructuredGenerators& sg);

struct Chain {
    std::vector<StructuredGenerators> levels;  // level 5 first
    std::vector<LiftArtifacts> lifts;          // one per produced level 6..top
};

/// base5 plus repeated lift_once up to `top` (default: the schedule's N).
Chain build_chain(const Schedule& schedule, X2Mode mode, std::uint32_t top = 0);

}  // namespace stci
