#pragma once
/// @file mpoly.hpp
/// @brief Sparse multivariate polynomials over prime fields with
///        arbitrary-precision exponents.
///
/// The construction manipulates polynomials whose exponents run to hundreds
/// of bits, so exponents are BigNat throughout. Coefficients live in F_p
/// (p prime) and are stored reduced in 1..p-1; the zero polynomial has no
/// terms. Terms are kept in strictly descending lexicographic order with
/// x_1 > x_2 > ..., which makes every rendering and serialization of a
/// polynomial canonical.

#include "stci/bignat.hpp"
#include "stci/error.hpp"
#include "stci/gf.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace stci {

/// Sparse monomial: (variable, exponent) pairs with 1-based variable
/// indices strictly increasing and exponents strictly positive. The empty
/// vector is the monomial 1.
using Monomial = std::vector<std::pair<std::uint32_t, BigNat>>;

/// Strict lexicographic order with x_1 > x_2 > ... (true when a < b).
bool monomial_less(const Monomial& a, const Monomial& b);

Monomial monomial_mul(const Monomial& a, const Monomial& b);

/// Whether d divides m coordinate-wise.
bool monomial_divides(const Monomial& d, const Monomial& m);

/// m / d; throws std::invalid_argument when d does not divide m.
Monomial monomial_quotient(const Monomial& m, const Monomial& d);

std::string monomial_str(const Monomial& m);

struct Term {
    std::uint32_t coeff;  // reduced, 1..p-1
    Monomial mono;
};

class Polynomial {
public:
    /// Default state is unusable (p = 0); real instances come from the
    /// factories so a ring is always attached.
    Polynomial() = default;

    static Polynomial zero(std::uint32_t p, std::uint32_t arity);
    static Polynomial constant(std::uint32_t p, std::uint32_t arity, std::uint32_t c);
    static Polynomial monomial(std::uint32_t p, std::uint32_t arity, Monomial m, std::uint32_t coeff = 1);
    static Polynomial variable(std::uint32_t p, std::uint32_t arity, std::uint32_t var);
    static Polynomial var_pow(std::uint32_t p, std::uint32_t arity, std::uint32_t var, const BigNat& e);

    std::uint32_t p() const { return p_; }
    std::uint32_t arity() const { return arity_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Coefficient at a monomial (0 when absent).
    std::uint32_t coeff_of(const Monomial& m) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial scaled(std::uint32_t c) const;

    /// f^e. Exact for any e: single terms power directly; otherwise e is
    /// split as p^t * m with the p-part applied through the Frobenius and
    /// the rest by square-and-multiply (m must fit a machine word, which
    /// covers every power the construction takes).
    Polynomial pow(const BigNat& e) const;

    /// Reinterpret in a ring with more variables.
    Polynomial extend_arity(std::uint32_t new_arity) const;

    /// Substitute images[v] for x_v. Variables without an image must not
    /// exceed out_arity and map to themselves; every image must live in
    /// the (p, out_arity) ring.
    Polynomial substitute(const std::map<std::uint32_t, Polynomial>& images, std::uint32_t out_arity) const;

    /// Exponent folding for sweeps over F_q: e -> 1 + (e-1 mod q-1) keeps
    /// every evaluation on F_q^n unchanged (0^e stays 0) while exponents
    /// drop below q. Terms that collide are merged.
    Polynomial fold_exponents(const Field& f) const;

    /// Evaluation at a point of F_q^arity (packed field values), embedding
    /// the prime-field coefficients.
    std::uint32_t evaluate(const Field& f, const std::vector<std::uint32_t>& point) const;

    /// Canonical rendering, e.g. "2*x1*x3^512 + x2". Zero renders "0".
    std::string str() const;

    /// Strict inverse of str(); also accepts unnormalized input (repeated
    /// monomials, reducible coefficients) and canonicalizes it.
    static Polynomial parse(const std::string& s, std::uint32_t p, std::uint32_t arity);

    /// sum of a_i * b_i over one shared accumulator; cheaper than folding
    /// the products one by one when the summands are large.
    static Polynomial sum_of_products(const std::vector<std::pair<const Polynomial*, const Polynomial*>>& prods);

    /// Throws std::logic_error if internal invariants are broken.
    void check_invariants() const;

private:
    std::uint32_t p_ = 0;
    std::uint32_t arity_ = 0;
    std::vector<Term> terms_;  // strictly descending under monomial_less

    static Polynomial from_accumulator(std::uint32_t p, std::uint32_t arity,
                                       std::map<Monomial, std::uint32_t, bool (*)(const Monomial&, const Monomial&)>&& acc);
};

/// Every term divisible by at least one of the given monomials (membership
/// in the monomial ideal they generate). gens must be nonempty.
bool in_monomial_ideal(const Polynomial& f, const std::vector<Monomial>& gens);

/// First (largest) term of f outside the monomial ideal, empty if none.
/// Distinguishes "no offender" from the offender being the monomial 1 via
/// the bool.
std::pair<bool, Monomial> first_term_outside(const Polynomial& f, const std::vector<Monomial>& gens);

/// Writes f as sum_j d_j * x_j^e over the given candidate variables, sending
/// each term to the smallest listed variable whose exponent reaches e.
/// Throws construction_error when a term fits no candidate. Only variables
/// that receive something appear in the result.
std::map<std::uint32_t, Polynomial> decompose_pure_power(const Polynomial& f,
                                                         const std::vector<std::uint32_t>& vars,
                                                         const BigNat& e);

/// Dense matrix of polynomials in a fixed ring, 1-based indexing.
class PolyMatrix {
public:
    /// Empty 0 x 0 placeholder; at() always throws on it.
    PolyMatrix() : p_(0), arity_(0), rows_(0), cols_(0) {}
    PolyMatrix(std::uint32_t p, std::uint32_t arity, std::uint32_t rows, std::uint32_t cols);

    std::uint32_t p() const { return p_; }
    std::uint32_t arity() const { return arity_; }
    std::uint32_t rows() const { return rows_; }
    std::uint32_t cols() const { return cols_; }

    Polynomial& at(std::uint32_t i, std::uint32_t j);
    const Polynomial& at(std::uint32_t i, std::uint32_t j) const;

private:
    std::uint32_t p_, arity_, rows_, cols_;
    std::vector<Polynomial> cells_;
};

/// Signed cofactors of a virtual last row appended to the r x (r+1) block
/// `top`: for the square matrix [top; T] one has
/// det = sum_i cof[i] * T_i, with cof[i] = (-1)^{(r+1)+i} det(top minus
/// column i). Exact expansion over F_p.
std::vector<Polynomial> det_cofactors_last_row(const PolyMatrix& top);

}  // namespace stci
