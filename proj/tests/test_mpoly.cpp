#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stci/mpoly.hpp"
#include "oracles.hpp"

#include <map>
#include <vector>

using namespace stci;
using testing_support::Rng;

namespace {

Polynomial P(const std::string& s, std::uint32_t p, std::uint32_t arity) {
    return Polynomial::parse(s, p, arity);
}

}  // namespace

TEST_CASE("monomial order, product, division") {
    Monomial one{};
    Monomial x1{{1, 1}};
    Monomial x2{{2, 1}};
    Monomial x1sq{{1, 2}};
    Monomial x1x2{{1, 1}, {2, 1}};

    CHECK(monomial_less(x2, x1));      // x1 > x2 under lex
    CHECK(monomial_less(x1x2, x1sq));  // x1^2 > x1*x2
    CHECK(monomial_less(x1, x1x2));
    CHECK(monomial_less(one, x2));
    CHECK(!monomial_less(x1, x1));

    CHECK(monomial_mul(x1, x2) == x1x2);
    CHECK(monomial_mul(x1, x1) == x1sq);
    CHECK(monomial_mul(one, x1) == x1);

    CHECK(monomial_divides(x1, x1x2));
    CHECK(!monomial_divides(x1sq, x1x2));
    CHECK(monomial_divides(one, one));
    CHECK(monomial_quotient(x1x2, x2) == x1);
    CHECK(monomial_quotient(x1sq, x1) == x1);
    CHECK_THROWS_AS(monomial_quotient(x1, x2), std::invalid_argument);

    CHECK(monomial_str(one) == "1");
    CHECK(monomial_str(x1x2) == "x1*x2");
    CHECK(monomial_str(Monomial{{3, 512}}) == "x3^512");
}

TEST_CASE("string round-trip and canonicalization") {
    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::uint32_t p = trial % 2 ? 2 : 3;
        Polynomial f = testing_support::random_poly(rng, p, 4, 5, true);
        f.check_invariants();
        CHECK(Polynomial::parse(f.str(), p, 4) == f);
    }
    CHECK(P("0", 2, 3).is_zero());
    CHECK(P("x2*x1", 5, 3) == P("x1*x2", 5, 3));
    CHECK(P("x1 + x1", 2, 3).is_zero());
    CHECK(P("x1 + x1", 3, 3) == P("2*x1", 3, 3));
    CHECK(P("3*x1", 3, 3).is_zero());
    CHECK(P("x1^2*x1", 2, 3) == P("x1^3", 2, 3));
    CHECK(P("2*3*x1", 7, 3) == P("6*x1", 7, 3));
    CHECK(P("x1^10000000000000000000000000", 2, 1).str() == "x1^10000000000000000000000000");
    CHECK_THROWS_AS(P("x5", 2, 4), std::invalid_argument);
    CHECK_THROWS_AS(P("", 2, 4), std::invalid_argument);
    CHECK_THROWS_AS(P("x1 +", 2, 4), std::invalid_argument);
    CHECK_THROWS_AS(P("y1", 2, 4), std::invalid_argument);
}

TEST_CASE("ring axioms on random inputs") {
    Rng rng(11);
    for (int trial = 0; trial < 150; ++trial) {
        std::uint32_t p = (trial % 3 == 0) ? 5 : (trial % 3 == 1 ? 3 : 2);
        Polynomial a = testing_support::random_poly(rng, p, 3);
        Polynomial b = testing_support::random_poly(rng, p, 3);
        Polynomial c = testing_support::random_poly(rng, p, 3);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        CHECK(a.scaled(p).is_zero());
        CHECK(a * Polynomial::constant(p, 3, 1) == a);
        CHECK((a * Polynomial::zero(p, 3)).is_zero());
        (a * b).check_invariants();
        (a + b).check_invariants();
    }
    CHECK_THROWS_AS(P("x1", 2, 2) + P("x1", 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(P("x1", 2, 2) * P("x1", 2, 3), std::invalid_argument);
}

TEST_CASE("pow matches repeated multiplication") {
    Rng rng(13);
    for (int trial = 0; trial < 80; ++trial) {
        std::uint32_t p = trial % 2 ? 2 : 3;
        Polynomial f = testing_support::random_poly(rng, p, 3, 3);
        for (std::uint64_t e = 0; e <= 6; ++e)
            CHECK(f.pow(BigNat(static_cast<unsigned long>(e))) == testing_support::pow_naive(f, e));
    }
    // Mixed p-part and unit part: 12 = 4 * 3 over F_2.
    Polynomial g = P("x1 + x2*x3", 2, 3);
    CHECK(g.pow(12) == testing_support::pow_naive(g, 12));
}

TEST_CASE("frobenius powers act exponent-wise") {
    Polynomial f = P("x1 + x2^3 + x1*x3", 2, 3);
    BigNat e = pow_nat(2, 100);
    Polynomial expected = P("x1^" + to_decimal(e) + " + x2^" + to_decimal(3 * e) + " + x1^" + to_decimal(e) +
                                "*x3^" + to_decimal(e),
                            2, 3);
    CHECK(f.pow(e) == expected);

    // (f+g)^(p^t) = f^(p^t) + g^(p^t) over F_p.
    Rng rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        std::uint32_t p = trial % 2 ? 2 : 3;
        Polynomial a = testing_support::random_poly(rng, p, 3);
        Polynomial b = testing_support::random_poly(rng, p, 3);
        BigNat q = pow_nat(p, 50 + trial);
        CHECK((a + b).pow(q) == a.pow(q) + b.pow(q));
    }
}

TEST_CASE("substitution agrees with evaluation") {
    Field f4(2, 2);
    Rng rng(19);
    for (int trial = 0; trial < 60; ++trial) {
        Polynomial f = testing_support::random_poly(rng, 2, 3, 4);
        std::map<std::uint32_t, Polynomial> images{
            {2, testing_support::random_poly(rng, 2, 4, 3)},
            {3, testing_support::random_poly(rng, 2, 4, 3)},
        };
        Polynomial g = f.substitute(images, 4);
        g.check_invariants();
        std::vector<std::uint32_t> pt(4);
        for (int s = 0; s < 10; ++s) {
            for (auto& v : pt) v = static_cast<std::uint32_t>(rng.below(4));
            std::vector<std::uint32_t> lifted{pt[0], images.at(2).evaluate(f4, pt), images.at(3).evaluate(f4, pt)};
            CHECK(g.evaluate(f4, pt) == f.evaluate(f4, lifted));
        }
    }
}

TEST_CASE("substitution validates rings") {
    Polynomial f = P("x1*x2", 2, 2);
    CHECK_THROWS_AS(f.substitute({{2, P("x1", 3, 2)}}, 2), std::invalid_argument);
    CHECK_THROWS_AS(f.substitute({{2, P("x1", 2, 3)}}, 2), std::invalid_argument);
    CHECK_THROWS_AS(f.substitute({{5, P("x1", 2, 2)}}, 2), std::invalid_argument);
    // x2 has no image and exceeds the output arity.
    CHECK_THROWS_AS(f.substitute({{1, P("x1", 2, 1)}}, 1), std::invalid_argument);
    CHECK(f.substitute({{2, P("x1", 2, 2)}}, 2) == P("x1^2", 2, 2));
}

TEST_CASE("exponent folding preserves every evaluation") {
    Field f4(2, 2);
    Field f2(2, 1);
    Rng rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        Polynomial f = testing_support::random_poly(rng, 2, 3, 5, true);
        for (const Field* fld : {&f2, &f4}) {
            Polynomial folded = f.fold_exponents(*fld);
            folded.check_invariants();
            for (const auto& t : folded.terms())
                for (const auto& [var, e] : t.mono) CHECK(e <= fld->q() - 1);
            PointEnumerator en(*fld, 3);
            std::vector<std::uint32_t> pt;
            for (std::uint64_t i = 0; i < en.count(); ++i) {
                en.point(i, pt);
                CHECK(folded.evaluate(*fld, pt) == f.evaluate(*fld, pt));
            }
        }
    }
    // Over F_2, x^2 + x folds to nothing.
    CHECK(P("x1^2 + x1", 2, 1).fold_exponents(f2).is_zero());
}

TEST_CASE("evaluation handles huge exponents through the field") {
    Field f4(2, 2);
    Polynomial f = P("x1^" + to_decimal(pow_nat(2, 25)), 2, 1);
    for (std::uint32_t x = 0; x < 4; ++x)
        CHECK(f.evaluate(f4, {x}) == f4.mul(x, x));  // 2^25 = 2 mod 3
}

TEST_CASE("monomial ideal membership") {
    std::vector<Monomial> gens{{{1, 1}, {3, 1}}, {{2, 2}}};  // (x1*x3, x2^2)
    CHECK(in_monomial_ideal(P("x1*x2*x3 + x2^3", 2, 3), gens));
    CHECK(!in_monomial_ideal(P("x1*x2*x3 + x2", 2, 3), gens));
    CHECK(in_monomial_ideal(P("0", 2, 3), gens));
    auto [missing, witness] = first_term_outside(P("x1*x3 + x1^5", 2, 3), gens);
    CHECK(missing);
    CHECK(witness == Monomial{{1, 5}});
    CHECK_THROWS_AS(in_monomial_ideal(P("x1", 2, 3), {}), std::invalid_argument);
}

TEST_CASE("pure-power decomposition") {
    BigNat e(8);
    Polynomial f = P("x1*x3^8 + x3^9*x4^8 + 2*x4^10", 5, 4);
    auto parts = decompose_pure_power(f, {3, 4}, e);
    CHECK(parts.size() == 2);
    // x3^9*x4^8 goes to the smallest listed variable that fits: x3.
    CHECK(parts.at(3) == P("x1 + x3*x4^8", 5, 4));
    CHECK(parts.at(4) == P("2*x4^2", 5, 4));
    // Reconstruction.
    Polynomial back = Polynomial::zero(5, 4);
    for (const auto& [v, d] : parts) back += d * Polynomial::var_pow(5, 4, v, e);
    CHECK(back == f);

    CHECK_THROWS_AS(decompose_pure_power(P("x1*x3^7", 5, 4), {3, 4}, e), construction_error);
    CHECK(decompose_pure_power(P("0", 5, 4), {3}, e).empty());
}

TEST_CASE("cofactor expansion matches the permanent-style oracle") {
    Rng rng(29);
    for (int trial = 0; trial < 60; ++trial) {
        std::uint32_t p = trial % 2 ? 2 : 5;
        std::uint32_t r = 1 + trial % 3;  // block sizes 1x2 .. 3x4
        PolyMatrix full(p, 3, r + 1, r + 1);
        for (std::uint32_t i = 1; i <= r + 1; ++i)
            for (std::uint32_t j = 1; j <= r + 1; ++j) full.at(i, j) = testing_support::random_poly(rng, p, 3, 2);
        PolyMatrix top(p, 3, r, r + 1);
        for (std::uint32_t i = 1; i <= r; ++i)
            for (std::uint32_t j = 1; j <= r + 1; ++j) top.at(i, j) = full.at(i, j);
        auto cof = det_cofactors_last_row(top);
        REQUIRE(cof.size() == r + 1);
        Polynomial assembled = Polynomial::zero(p, 3);
        for (std::uint32_t i = 1; i <= r + 1; ++i) assembled += cof[i - 1] * full.at(r + 1, i);
        CHECK(assembled == testing_support::det_leibniz(full));
    }
}

TEST_CASE("cofactors of the degenerate 0 x 1 block") {
    PolyMatrix top(2, 1, 0, 1);
    auto cof = det_cofactors_last_row(top);
    REQUIRE(cof.size() == 1);
    CHECK(cof[0] == Polynomial::constant(2, 1, 1));
}

TEST_CASE("cofactor signs on a concrete 3x3 case") {
    // Signed last-row cofactors of [[a,b,0],[0,c,d]] for a virtual third row.
    PolyMatrix top(3, 4, 2, 3);
    top.at(1, 1) = P("x1", 3, 4);
    top.at(1, 2) = P("x2", 3, 4);
    top.at(2, 2) = P("x3", 3, 4);
    top.at(2, 3) = P("x4", 3, 4);
    auto cof = det_cofactors_last_row(top);
    CHECK(cof[0] == P("x2*x4", 3, 4));          // +(b*d - 0*c)
    CHECK(cof[1] == -P("x1*x4", 3, 4));         // -(a*d - 0*0)
    CHECK(cof[2] == P("x1*x3", 3, 4));          // +(a*c - b*0)
}
