#pragma once
/// @file bignat.hpp
/// @brief Arbitrary-precision naturals used for exponents and schedule data.
///
/// Thin helpers around GMP's mpz_class. Exponents in this project routinely
/// exceed machine words (hundreds of bits), so every exponent-typed value is
/// a BigNat and serialization always uses decimal strings.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace stci {

using BigNat = mpz_class;

/// base^e for machine-sized inputs.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline BigNat pow_nat(std::uint64_t base, std::uint64_t e) {
    BigNat out;
    mpz_ui_pow_ui(out.get_mpz_t(), base, e);
    return out;
}

/// True iff v == p^t for some t >= 0; on success stores t in *t_out.
inline bool pure_power_of(const BigNat& v, std::uint64_t p, std::uint64_t* t_out = nullptr) {
    if (sgn(v) <= 0) return false;
    if (v == 1) {
        if (t_out) *t_out = 0;
        return true;
    }
    BigNat rest, base(static_cast<unsigned long>(p));
    mp_bitcnt_t t = mpz_remove(rest.get_mpz_t(), v.get_mpz_t(), base.get_mpz_t());
    if (rest != 1) return false;
    if (t_out) *t_out = t;
    return true;
}

/// v mod m for machine-sized m > 0 (v must be nonnegative).
inline std::uint64_t mod_u64(const BigNat& v, std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("mod_u64: zero modulus");
    if (sgn(v) < 0) throw std::invalid_argument("mod_u64: negative value");
    return mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(m));
}

inline std::string to_decimal(const BigNat& v) { return v.get_str(10); }

/// Parses a nonnegative decimal string; rejects signs, blanks and junk.
inline BigNat from_decimal(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("from_decimal: empty string");
    for (char c : s)
        if (c < '0' || c > '9') throw std::invalid_argument("from_decimal: not a decimal natural: " + s);
    return BigNat(s, 10);
}

/// Exponent that must fit a machine word (e.g. r-values fed to pow_nat).
inline std::uint64_t to_u64(const BigNat& v, const char* what) {
    if (sgn(v) < 0 || !v.fits_ulong_p())
        throw std::invalid_argument(std::string(what) + ": value does not fit a machine word");
    return v.get_ui();
}

}  // namespace stci
