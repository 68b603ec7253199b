#pragma once
/// @file gf.hpp
/// @brief Exact arithmetic in small finite fields F_q, q = p^k.
///
/// Elements are packed machine values: the residue sum c_i * X^i (polynomial
/// basis modulo a fixed monic irreducible) is stored as the integer
/// sum c_i * p^i, so values range over 0..q-1, and 0 and 1 are the additive
/// and multiplicative identities. The modulus is pinned deterministically:
/// the first monic irreducible of degree k when the non-leading coefficient
/// vectors are enumerated by increasing packed value. Two Field objects for
/// the same (p, k) therefore represent literally the same field.
///
/// Multiplication runs through discrete-log tables (q is capped), which also
/// makes big-exponent powering cheap: for x != 0 the exponent only matters
/// mod q-1. By convention 0^0 = 1 and 0^e = 0 for e > 0.

#include "stci/bignat.hpp"

#include <cstdint>
#include <vector>

namespace stci {

inline constexpr std::uint64_t kDefaultFieldCap = 1ull << 20;
inline constexpr std::uint64_t kDefaultSweepCap = 1ull << 22;

class Field {
public:
    /// Builds F_{p^k}. Throws std::invalid_argument if p is not prime,
    /// k == 0, or p^k exceeds cap.
    Field(std::uint32_t p, std::uint32_t k, std::uint64_t cap = kDefaultFieldCap);

    std::uint32_t p() const { return p_; }
    std::uint32_t k() const { return k_; }
    std::uint32_t q() const { return q_; }

    /// Modulus coefficients c_0..c_k (constant first, leading 1 last).
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    /// Multiplicative generator backing the log tables.
    std::uint32_t generator() const { return generator_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;

    /// Embedding of the prime subfield: c in 0..p-1 maps to the packed
    /// constant c.
    std::uint32_t embed(std::uint32_t c) const;

    /// x^e with the exponent reduced mod q-1 for x != 0; 0^0 = 1, 0^e = 0.
    std::uint32_t pow_big(std::uint32_t x, const BigNat& e) const;
    std::uint32_t pow_u64(std::uint32_t x, std::uint64_t e) const;

    bool operator==(const Field& o) const { return p_ == o.p_ && k_ == o.k_; }

private:
    std::uint32_t p_, k_, q_;
    std::vector<std::uint32_t> modulus_;
    std::uint32_t generator_;
    std::vector<std::uint32_t> exp_;  // exp_[i] = g^i, i in 0..q-2
    std::vector<std::uint32_t> log_;  // log_[x] for x != 0
};

/// Deterministic enumeration of F_q^n: index i in 0..q^n-1 maps to the
/// base-q digits of i with x_n varying fastest (x_1 most significant).
class PointEnumerator {
public:
    /// Throws std::invalid_argument if q^n exceeds cap.
    PointEnumerator(const Field& f, std::uint32_t n, std::uint64_t cap = kDefaultSweepCap);

    std::uint64_t count() const { return count_; }
    std::uint32_t arity() const { return n_; }

    /// Writes the idx-th point into out (resized to n).
    void point(std::uint64_t idx, std::vector<std::uint32_t>& out) const;

private:
    const Field* f_;
    std::uint32_t n_;
    std::uint64_t count_;
};

}  // namespace stci
