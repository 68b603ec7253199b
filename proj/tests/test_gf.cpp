#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stci/gf.hpp"

#include <cstdint>
#include <vector>

using namespace stci;

namespace {

// Reference powering: plain square-and-multiply over the bits of e, never
// reducing the exponent. Independent of the log-table shortcut under test.
std::uint32_t pow_reference(const Field& f, std::uint32_t x, BigNat e) {
    std::uint32_t out = 1, base = x;
    while (sgn(e) > 0) {
        if (mpz_odd_p(e.get_mpz_t())) out = f.mul(out, base);
        base = f.mul(base, base);
        e >>= 1;
    }
    return out;
}

// Naive irreducibility over F_p by trial division with every monic
// polynomial of lower degree. Only used to cross-check modulus selection.
using Poly = std::vector<std::uint32_t>;

Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    while (a.size() >= b.size()) {
        std::uint64_t c = a.back();  // b is monic
        std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j)
            a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + c * (p - b[j])) % p);
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

bool naive_irreducible(const Poly& f, std::uint32_t p) {
    std::size_t k = f.size() - 1;
    for (std::size_t d = 1; d < k; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t packed = 0; packed < count; ++packed) {
            Poly g(d + 1, 0);
            g[d] = 1;
            std::uint64_t v = packed;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(v % p);
                v /= p;
            }
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

Poly first_irreducible(std::uint32_t p, std::uint32_t k) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < k; ++i) count *= p;
    for (std::uint64_t packed = 0; packed < count; ++packed) {
        Poly f(k + 1, 0);
        f[k] = 1;
        std::uint64_t v = packed;
        for (std::uint32_t i = 0; i < k; ++i) {
            f[i] = static_cast<std::uint32_t>(v % p);
            v /= p;
        }
        if (naive_irreducible(f, p)) return f;
    }
    return {};
}

}  // namespace

TEST_CASE("field construction picks the documented modulus") {
    CHECK(Field(2, 2).modulus() == std::vector<std::uint32_t>{1, 1, 1});     // X^2+X+1
    CHECK(Field(2, 3).modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});  // X^3+X+1
    CHECK(Field(3, 2).modulus() == std::vector<std::uint32_t>{1, 0, 1});     // X^2+1

    for (auto [p, k] : {std::pair<std::uint32_t, std::uint32_t>{2, 4}, {2, 5}, {3, 3}, {5, 2}, {7, 2}}) {
        Field f(p, k);
        CHECK(f.modulus() == first_irreducible(p, k));
        CHECK(naive_irreducible(f.modulus(), p));
    }
}

TEST_CASE("construction rejects bad parameters") {
    CHECK_THROWS_AS(Field(4, 1), std::invalid_argument);   // composite p
    CHECK_THROWS_AS(Field(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(Field(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(Field(2, 21), std::invalid_argument);  // over the default cap
    CHECK_THROWS_AS(Field(2, 8, 100), std::invalid_argument);
    CHECK_NOTHROW(Field(2, 8, 256));  // cap is inclusive
}

TEST_CASE("field axioms hold on every element of small fields") {
    for (auto [p, k] : {std::pair<std::uint32_t, std::uint32_t>{2, 1}, {2, 4}, {3, 2}, {5, 1}, {7, 1}, {13, 1}}) {
        Field f(p, k);
        const std::uint32_t q = f.q();
        for (std::uint32_t a = 0; a < q; ++a) {
            CHECK(f.add(a, f.neg(a)) == 0);
            CHECK(f.add(a, 0) == a);
            CHECK(f.mul(a, 1) == a);
            CHECK(f.mul(a, 0) == 0);
            if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
            // Characteristic p.
            std::uint32_t s = 0;
            for (std::uint32_t i = 0; i < p; ++i) s = f.add(s, a);
            CHECK(s == 0);
        }
        for (std::uint32_t a = 0; a < q; ++a)
            for (std::uint32_t b = 0; b < q; ++b) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                CHECK(f.sub(f.add(a, b), b) == a);
            }
        // Distributivity, sampled on a coarse grid to keep q^3 in check.
        for (std::uint32_t a = 0; a < q; a += 3)
            for (std::uint32_t b = 0; b < q; b += 5)
                for (std::uint32_t c = 0; c < q; c += 7)
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
    }
}

TEST_CASE("generator has full multiplicative order") {
    for (auto [p, k] : {std::pair<std::uint32_t, std::uint32_t>{2, 1}, {2, 4}, {3, 2}, {13, 1}}) {
        Field f(p, k);
        std::uint32_t g = f.generator();
        std::uint32_t cur = 1;
        std::vector<bool> seen(f.q(), false);
        for (std::uint32_t i = 0; i + 1 < f.q(); ++i) {
            CHECK(!seen[cur]);
            seen[cur] = true;
            cur = f.mul(cur, g);
        }
        CHECK(cur == 1);
    }
}

TEST_CASE("pow_big matches unreduced square-and-multiply") {
    // Deterministic xorshift so failures reproduce.
    std::uint64_t state = 0x9e3779b97f4a7c15ull;
    auto next = [&] {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    for (auto [p, k] : {std::pair<std::uint32_t, std::uint32_t>{2, 2}, {2, 4}, {3, 2}, {5, 1}, {7, 1}}) {
        Field f(p, k);
        for (int trial = 0; trial < 300; ++trial) {
            std::uint32_t x = static_cast<std::uint32_t>(next() % f.q());
            BigNat e;
            // Exponents up to ~192 bits.
            for (int limb = 0; limb < 3; ++limb) {
                e <<= 64;
                e += BigNat(std::to_string(next()));
            }
            CHECK(f.pow_big(x, e) == pow_reference(f, x, e));
        }
        CHECK(f.pow_big(0, BigNat(0)) == 1);
        CHECK(f.pow_big(0, BigNat(5)) == 0);
        CHECK(f.pow_big(1, pow_nat(2, 100)) == 1);
    }
}

TEST_CASE("pow_u64 agrees with pow_big") {
    Field f(2, 4);
    for (std::uint32_t x = 0; x < f.q(); ++x)
        for (std::uint64_t e : {0ull, 1ull, 2ull, 14ull, 15ull, 16ull, 1ull << 40})
            CHECK(f.pow_u64(x, e) == f.pow_big(x, BigNat(std::to_string(e))));
}

TEST_CASE("F_4 exponent folding: x^(2^25) equals x^2") {
    // 2^25 = 2 mod 3, so over F_4 the huge power collapses to a square.
    Field f(2, 2);
    BigNat e = pow_nat(2, 25);
    for (std::uint32_t x = 0; x < 4; ++x)
        CHECK(f.pow_big(x, e) == f.mul(x, x));
}

TEST_CASE("frobenius is additive") {
    for (auto [p, k] : {std::pair<std::uint32_t, std::uint32_t>{2, 4}, {3, 3}, {5, 2}}) {
        Field f(p, k);
        for (std::uint32_t a = 0; a < f.q(); ++a)
            for (std::uint32_t b = 0; b < f.q(); ++b)
                CHECK(f.pow_u64(f.add(a, b), p) == f.add(f.pow_u64(a, p), f.pow_u64(b, p)));
    }
}

TEST_CASE("construction is deterministic") {
    Field a(2, 4), b(2, 4);
    CHECK(a.modulus() == b.modulus());
    CHECK(a.generator() == b.generator());
    for (std::uint32_t x = 0; x < 16; ++x)
        for (std::uint32_t y = 0; y < 16; ++y)
            CHECK(a.mul(x, y) == b.mul(x, y));
}

TEST_CASE("point enumeration order and bounds") {
    Field f(2, 1);
    PointEnumerator e(f, 3);
    CHECK(e.count() == 8);
    std::vector<std::uint32_t> pt;
    e.point(0, pt);
    CHECK(pt == std::vector<std::uint32_t>{0, 0, 0});
    e.point(1, pt);  // last coordinate varies fastest
    CHECK(pt == std::vector<std::uint32_t>{0, 0, 1});
    e.point(4, pt);
    CHECK(pt == std::vector<std::uint32_t>{1, 0, 0});
    e.point(7, pt);
    CHECK(pt == std::vector<std::uint32_t>{1, 1, 1});

    Field f4(2, 2);
    PointEnumerator e4(f4, 5);
    CHECK(e4.count() == 1024);

    CHECK_THROWS_AS(PointEnumerator(f4, 12), std::invalid_argument);  // 4^12 > 2^22
    CHECK_NOTHROW(PointEnumerator(f4, 11));                           // 4^11 = 2^22 exactly
}
