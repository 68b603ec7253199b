#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stci/srideal.hpp"
#include "stci/verify.hpp"

#include <map>
#include <string>

using namespace stci;

namespace {

std::map<std::string, CheckItem> by_name(const VerificationReport& rep) {
    std::map<std::string, CheckItem> out;
    for (const auto& item : rep.items) out[item.name] = item;
    return out;
}

Polynomial pp(const std::string& s, std::uint32_t p, std::uint32_t arity) {
    return Polynomial::parse(s, p, arity);
}

}  // namespace

TEST_CASE("membership is decided termwise") {
    auto chain = build_chain(make_minimal(2, 6), X2Mode::carried);
    auto rep = membership_check(chain.levels[1].gens, 6);
    CHECK(rep.check == "membership");
    CHECK(rep.items.size() == 4);
    CHECK(rep.all_pass());

    auto bad = membership_check({pp("x1*x2", 2, 5)}, 5);
    REQUIRE(bad.items.size() == 1);
    CHECK(bad.items[0].status == CheckStatus::fail);
    CHECK(bad.items[0].detail.find("x1*x2") != std::string::npos);
    CHECK(bad.any_fail());

    auto empty = membership_check({}, 5);
    CHECK(empty.all_pass());
    CHECK_FALSE(empty.items.empty());
}

TEST_CASE("variety sweeps match the closed-form count") {
    auto sch = make_minimal(2, 6);
    for (auto mode : {X2Mode::carried, X2Mode::literal}) {
        auto chain = build_chain(sch, mode);
        for (auto [k, pts5] : {std::pair<std::uint32_t, std::uint64_t>{1, 11}, {2, 61}, {3, 281}}) {
            Field f(2, k);
            auto rep = variety_equality(chain.levels[0].gens, 5, f);
            CHECK(rep.all_pass());
            CHECK(rep.swept == std::uint64_t(1) << (5 * k));
            auto items = by_name(rep);
            CHECK(items.at("point-count").detail.find(std::to_string(pts5) + " common") !=
                  std::string::npos);
        }
        Field f2(2, 1);
        auto rep2 = variety_equality(chain.levels[1].gens, 6, f2);
        CHECK(rep2.all_pass());
        CHECK(by_name(rep2).at("point-count").detail.find("13 common") != std::string::npos);
    }

    Field f4(2, 2);
    auto rep6 = variety_equality(build_chain(sch, X2Mode::carried).levels[1].gens, 6, f4);
    CHECK(rep6.all_pass());
    CHECK(rep6.swept == 4096);
    CHECK(by_name(rep6).at("point-count").detail.find("73 common") != std::string::npos);
}

TEST_CASE("the printed seed exponent leaks extra zeros over extension fields") {
    // In literal mode the first generator keeps the x_2 exponent
    // alpha*lambda*beta even though the seed starts from x_2^1, so the
    // resultant's zero transfer breaks at the first lift. Over prime fields
    // folding hides it; over F_4 the sweep finds off-variety common zeros.
    auto sch = make_minimal(2, 6);
    auto chain = build_chain(sch, X2Mode::literal);
    Field f4(2, 2);
    auto rep = variety_equality(chain.levels[1].gens, 6, f4);
    auto items = by_name(rep);
    CHECK(items.at("variety-implies-zeros").status == CheckStatus::pass);
    CHECK(items.at("zeros-imply-variety").status == CheckStatus::fail);
    const std::string& d = items.at("zeros-imply-variety").detail;
    CHECK(d.find("(2,3,1,2,1,1)") != std::string::npos);

    // Replay the recorded counterexample: a common zero off the variety.
    std::vector<std::uint32_t> pt{2, 3, 1, 2, 1, 1};
    CHECK_FALSE(on_cycle_variety(pt));
    for (const auto& g : chain.levels[1].gens) CHECK(g.evaluate(f4, pt) == 0);
    // The carried-mode generators differ only in that exponent and exclude it.
    auto carried = build_chain(sch, X2Mode::carried);
    bool all_zero = true;
    for (const auto& g : carried.levels[1].gens) all_zero = all_zero && g.evaluate(f4, pt) == 0;
    CHECK_FALSE(all_zero);
}

TEST_CASE("variety mismatches are reported with replayable points") {
    Field f2(2, 1);
    auto rep = variety_equality({pp("x1", 2, 4)}, 4, f2);
    auto items = by_name(rep);
    CHECK(items.at("variety-implies-zeros").status == CheckStatus::fail);
    CHECK(items.at("zeros-imply-variety").status == CheckStatus::fail);
    CHECK(items.at("point-count").status == CheckStatus::fail);
    // Replay the first recorded counterexample: on the variety, x1 != 0.
    const std::string& d = items.at("variety-implies-zeros").detail;
    auto lp = d.find('(');
    REQUIRE(lp != std::string::npos);
    std::vector<std::uint32_t> pt;
    for (auto c = lp + 1; c < d.size() && d[c] != ')'; ++c)
        if (d[c] != ',') pt.push_back(static_cast<std::uint32_t>(d[c] - '0'));
    REQUIRE(pt.size() == 4);
    CHECK(on_cycle_variety(pt));
    CHECK(pt[0] != 0);

    CHECK_THROWS_AS(variety_equality({pp("x1", 2, 4)}, 4, f2, 8), std::invalid_argument);
    CHECK_THROWS_AS(variety_equality({pp("x1", 2, 5)}, 4, f2), std::invalid_argument);
}

TEST_CASE("resultant identities replay on recorded artifacts") {
    for (auto [p, N] : {std::pair<std::uint32_t, std::uint32_t>{2, 6}, {2, 7}, {3, 7}}) {
        auto sch = make_minimal(p, N);
        auto chain = build_chain(sch, X2Mode::carried);
        for (const auto& art : chain.lifts) {
            auto rep = resultant_checks(sch, art);
            INFO("p=", p, " N=", N, " level=", art.level);
            CHECK(rep.all_pass());
            CHECK(rep.items.size() == 2 * (art.level - 4) + 5);
        }
    }
}

TEST_CASE("doctored artifacts fail the replay") {
    auto sch = make_minimal(2, 6);
    auto chain = build_chain(sch, X2Mode::carried);
    const auto& art = chain.lifts[0];

    {
        // Sign flips only matter in odd characteristic.
        auto sch3 = make_minimal(3, 6);
        auto chain3 = build_chain(sch3, X2Mode::carried);
        auto bad = chain3.lifts[0];
        bad.sign = -bad.sign;
        auto items = by_name(resultant_checks(sch3, bad));
        CHECK(items.at("first-cofactor-split").status == CheckStatus::fail);
        CHECK(items.at("resultant-decomposition").status == CheckStatus::fail);
    }
    {
        auto bad = art;
        bad.cofactors[1] += pp("x1", 2, 6);
        auto rep = by_name(resultant_checks(sch, bad));
        CHECK(rep.at("laplace[2]").status == CheckStatus::fail);
    }
    {
        auto bad = art;
        bad.remainder_f += pp("x3", 2, 6);
        auto rep = by_name(resultant_checks(sch, bad));
        CHECK(rep.at("remainder-membership").status == CheckStatus::fail);
        CHECK(rep.at("resultant-decomposition").status == CheckStatus::fail);
    }
    {
        auto bad = art;
        bad.resultant_s += pp("x1", 2, 6);
        auto rep = by_name(resultant_checks(sch, bad));
        CHECK(rep.at("resultant-substitution").status == CheckStatus::fail);
        CHECK(rep.at("resultant-decomposition").status == CheckStatus::fail);
    }
    {
        auto bad = art;
        bad.tilde[1] += pp("x9", 2, 9);
        auto rep = by_name(resultant_checks(sch, bad));
        CHECK(rep.at("tilde-row[2]").status == CheckStatus::fail);
    }
}

TEST_CASE("odd characteristic signs replay too") {
    auto sch = make_minimal(3, 7);
    auto chain = build_chain(sch, X2Mode::carried);
    REQUIRE(chain.lifts[1].sign == -1);
    auto rep = resultant_checks(sch, chain.lifts[1]);
    CHECK(rep.all_pass());
}

TEST_CASE("the probe finds only the trivial solution") {
    auto sch = make_minimal(2, 6);
    auto chain = build_chain(sch, X2Mode::carried);
    for (std::uint32_t k : {1u, 2u}) {
        Field f(2, k);
        auto rep = trivial_solution_probe(chain.lifts[0], f, 100, 0);
        CHECK(rep.check == "probe");
        CHECK(rep.all_pass());
        CHECK(rep.seed == 0);
        CHECK(rep.swept == 100ull * (std::uint64_t(1) << (3 * k)));
        auto items = by_name(rep);
        CHECK(items.at("sampling").detail.find("100 samples accepted") != std::string::npos);

        auto again = trivial_solution_probe(chain.lifts[0], f, 100, 0);
        REQUIRE(again.items.size() == rep.items.size());
        for (std::size_t i = 0; i < rep.items.size(); ++i) {
            CHECK(again.items[i].status == rep.items[i].status);
            CHECK(again.items[i].detail == rep.items[i].detail);
        }
    }
    CHECK_THROWS_AS(trivial_solution_probe(chain.lifts[0], Field(2, 2), 10, 0, 8),
                    std::invalid_argument);
}

TEST_CASE("a vanishing resultant only skips, never passes") {
    auto sch = make_minimal(2, 6);
    auto chain = build_chain(sch, X2Mode::carried);
    auto art = chain.lifts[0];
    art.resultant_s = Polynomial::zero(2, 6);
    auto rep = trivial_solution_probe(art, Field(2, 1), 5, 0);
    auto items = by_name(rep);
    CHECK(items.at("sampling").status == CheckStatus::skipped);
    CHECK_FALSE(rep.all_pass());
    CHECK_FALSE(rep.any_fail());
    CHECK(rep.swept == 0);
}

TEST_CASE("CAS exports cover both dialects") {
    auto sch = make_minimal(2, 6);
    auto chain = build_chain(sch, X2Mode::carried);
    const auto& g5 = chain.levels[0].gens;
    const auto& g6 = chain.levels[1].gens;

    std::string m2 = export_cas(g5, 5, "macaulay2");
    CHECK(m2.find("R = ZZ/2[x_1..x_5, t];") != std::string::npos);
    CHECK(m2.find("f3 = ") != std::string::npos);
    CHECK(m2.find("f4 = ") == std::string::npos);
    CHECK(m2.find("x_1*x_3") != std::string::npos);
    CHECK(m2.find("33554433") != std::string::npos);  // full decimal exponent

    std::string sg = export_cas(g6, 6, "singular");
    CHECK(sg.find("ring R = 2, (x(1..6), t), dp;") != std::string::npos);
    std::size_t queries = 0;
    for (std::size_t at = sg.find("reduce("); at != std::string::npos; at = sg.find("reduce(", at + 1))
        ++queries;
    CHECK(queries == cycle_ideal_gens(6).size());
    CHECK(queries == 9);

    // Round-trip: the scripted f1 re-parses to the constructed generator.
    auto grab = [](const std::string& text, const std::string& from) {
        auto a = text.find(from);
        REQUIRE(a != std::string::npos);
        a += from.size();
        auto b = text.find(';', a);
        return text.substr(a, b - a);
    };
    std::string f1 = grab(m2, "f1 = ");
    std::string plain;
    for (char c : f1)
        if (c != '_') plain += c;
    CHECK(Polynomial::parse(plain, 2, 5) == g5[0]);

    std::string s1 = grab(sg, "poly f1 = ");
    plain.clear();
    for (char c : s1)
        if (c != '(' && c != ')') plain += c;
    CHECK(Polynomial::parse(plain, 2, 6) == g6[0]);

    CHECK_THROWS_AS(export_cas(g5, 5, "maple"), std::invalid_argument);
    CHECK_THROWS_AS(export_cas({}, 5, "macaulay2"), std::invalid_argument);
}
