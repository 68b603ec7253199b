#include "stci/verify.hpp"

#include "stci/error.hpp"
#include "stci/srideal.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace stci {

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

/// A folded polynomial laid out for tight evaluation loops: embedded
/// coefficient plus (0-based variable, small exponent) pairs.
struct FlatTerm {
    std::uint32_t coeff;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> vars;
};

std::vector<FlatTerm> flatten(const Polynomial& folded, const Field& f) {
    std::vector<FlatTerm> out;
    out.reserve(folded.term_count());
    for (const auto& t : folded.terms()) {
        FlatTerm ft;
        ft.coeff = f.embed(t.coeff);
        for (const auto& [v, e] : t.mono) ft.vars.emplace_back(v - 1, to_u64(e, "folded exponent"));
        out.push_back(std::move(ft));
    }
    return out;
}

std::uint32_t eval_flat(const std::vector<FlatTerm>& terms, const Field& f,
                        const std::vector<std::uint32_t>& pt) {
    std::uint32_t acc = 0;
    for (const auto& t : terms) {
        std::uint32_t v = t.coeff;
        for (const auto& [var, e] : t.vars) {
            const std::uint32_t x = pt[var];
            if (x == 0) {
                v = 0;
                break;
            }
            v = f.mul(v, f.pow_u64(x, e));
        }
        acc = f.add(acc, v);
    }
    return acc;
}

std::string point_str(const std::vector<std::uint32_t>& pt) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < pt.size(); ++i) os << (i ? "," : "") << pt[i];
    os << ")";
    return os.str();
}

std::vector<Monomial> central_ideal(std::uint32_t n, const BigNat& e) {
    std::vector<Monomial> out;
    for (std::uint32_t v = 3; v <= n - 2; ++v) out.push_back(Monomial{{v, e}});
    return out;
}

}  // namespace

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skipped: return "skipped";
    }
    return "?";
}

bool VerificationReport::all_pass() const {
    return std::all_of(items.begin(), items.end(),
                       [](const CheckItem& i) { return i.status == CheckStatus::pass; });
}

bool VerificationReport::any_fail() const {
    return std::any_of(items.begin(), items.end(),
                       [](const CheckItem& i) { return i.status == CheckStatus::fail; });
}

void VerificationReport::add(std::string name, bool pass, std::string detail) {
    items.push_back({std::move(name), pass ? CheckStatus::pass : CheckStatus::fail, std::move(detail)});
}

VerificationReport membership_check(const std::vector<Polynomial>& fs, std::uint32_t n) {
    const auto t0 = Clock::now();
    VerificationReport rep;
    rep.check = "membership";
    auto gens = cycle_ideal_gens(n);
    for (std::size_t i = 0; i < fs.size(); ++i) {
        auto [outside, wit] = first_term_outside(fs[i], gens);
        rep.add("membership[" + std::to_string(i + 1) + "]", !outside,
                outside ? "term " + monomial_str(wit) + " lies outside the cycle ideal"
                        : "every term divisible by an ideal generator");
    }
    if (fs.empty()) rep.add("membership[]", true, "empty list, vacuous");
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

VerificationReport variety_equality(const std::vector<Polynomial>& fs, std::uint32_t n, const Field& f,
                                    std::uint64_t cap) {
    const auto t0 = Clock::now();
    for (const auto& g : fs)
        if (g.p() != f.p() || g.arity() != n)
            throw std::invalid_argument("variety_equality: generator in the wrong ring");
    PointEnumerator en(f, n, cap);

    std::vector<std::vector<FlatTerm>> flats;
    flats.reserve(fs.size());
    for (const auto& g : fs) flats.push_back(flatten(g.fold_exponents(f), f));

    VerificationReport rep;
    rep.check = "variety";
    rep.swept = en.count();
    std::uint64_t common = 0;
    bool fwd = true, bwd = true;  // variety => zeros, zeros => variety
    std::string fwd_wit, bwd_wit;
    std::vector<std::uint32_t> pt;
    for (std::uint64_t idx = 0; idx < en.count(); ++idx) {
        en.point(idx, pt);
        bool zeros = true;
        for (const auto& ft : flats)
            if (eval_flat(ft, f, pt) != 0) {
                zeros = false;
                break;
            }
        const bool on_v = on_cycle_variety(pt);
        if (zeros && on_v) ++common;
        if (on_v && !zeros && fwd) {
            fwd = false;
            fwd_wit = point_str(pt);
        }
        if (zeros && !on_v && bwd) {
            bwd = false;
            bwd_wit = point_str(pt);
        }
    }
    const std::string scope = " over F_" + std::to_string(f.q()) + " (" + std::to_string(en.count()) +
                              " points; decisive for this subfield only)";
    rep.add("variety-implies-zeros", fwd,
            fwd ? "every variety point annihilates all generators" + scope
                : "variety point " + fwd_wit + " does not annihilate all generators");
    rep.add("zeros-imply-variety", bwd,
            bwd ? "every common zero lies on the variety" + scope
                : "common zero " + bwd_wit + " lies off the variety");
    const BigNat expect = cycle_variety_count(n, BigNat(f.q()));
    const bool count_ok = fwd && bwd && BigNat(common) == expect;
    rep.add("point-count", count_ok,
            std::to_string(common) + " common points, closed form " + to_decimal(expect));
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

VerificationReport resultant_checks(const Schedule& sch, const LiftArtifacts& art) {
    const auto t0 = Clock::now();
    VerificationReport rep;
    rep.check = "resultant";
    const std::uint32_t n = art.level;
    const std::uint32_t m = n - 1;
    const std::uint32_t p = art.resultant_s.p();

    std::map<std::uint32_t, Polynomial> images;
    for (std::uint32_t j = 2; j <= n - 2; ++j) images[n + j - 1] = art.cofactors[j - 2];
    for (std::uint32_t i = 2; i <= n - 3; ++i) {
        // The eliminated row is linear with the recorded coefficients...
        Polynomial row = Polynomial::zero(p, 2 * n - 3);
        for (std::uint32_t j = 1; j <= n - 3; ++j)
            row += art.cmat.at(i - 1, j).extend_arity(2 * n - 3) *
                   Polynomial::variable(p, 2 * n - 3, n + j);
        rep.add("tilde-row[" + std::to_string(i) + "]", row == art.tilde[i - 1],
                "eliminated row vs its coefficient vector");
        // ...and those coefficients annihilate the cofactor vector.
        std::vector<std::pair<const Polynomial*, const Polynomial*>> prods;
        for (std::uint32_t j = 1; j <= n - 3; ++j)
            prods.emplace_back(&art.cmat.at(i - 1, j), &art.cofactors[j - 1]);
        Polynomial v = Polynomial::sum_of_products(prods);
        rep.add("laplace[" + std::to_string(i) + "]", v.is_zero(),
                v.is_zero() ? "eliminated row vanishes on the cofactor vector"
                            : "row evaluates to a nonzero polynomial with " +
                                  std::to_string(v.term_count()) + " terms");
    }
    {
        Polynomial s = art.tilde[0].substitute(images, n);
        rep.add("resultant-substitution", s == art.resultant_s,
                "first eliminated row at the cofactor vector vs the stored resultant");
    }

    const std::uint32_t sigma_coeff = art.sign > 0 ? 1 : p - 1;
    {
        const BigNat e = pow_nat(p, to_u64(sch.s_at(n), "s")) - sch.gamma_row(n)[0];
        const Monomial mono{{n, e}};
        bool coeff_ok = art.cofactors.front().coeff_of(mono) == sigma_coeff;
        Polynomial bar = art.cofactors.front() - Polynomial::monomial(p, n, mono, sigma_coeff);
        auto [outside, wit] = first_term_outside(bar, central_ideal(n, sch.delta_rewrite(m)));
        rep.add("first-cofactor-split", coeff_ok && !outside,
                !coeff_ok  ? "pure power x" + std::to_string(n) + "^" + to_decimal(e) + " missing or missigned"
                : outside ? "term " + monomial_str(wit) + " under the guaranteed central depth"
                          : "pure power split off; rest at the guaranteed central depth");
    }
    {
        const BigNat e = pow_nat(p, to_u64(sch.s_at(m), "s"));
        const Monomial mono{{n - 1, e}};
        bool coeff_ok = art.cofactors.back().coeff_of(mono) == 1;
        // The weak d-row entry always sits in the column this cofactor
        // deletes, so the full depth survives here.
        Polynomial bar = art.cofactors.back() - Polynomial::monomial(p, n, mono);
        auto [outside, wit] = first_term_outside(bar, central_ideal(n, sch.delta(m)));
        rep.add("last-cofactor-split", coeff_ok && !outside,
                !coeff_ok  ? "pure power x" + std::to_string(n - 1) + "^" + to_decimal(e) + " missing"
                : outside ? "term " + monomial_str(wit) + " under the full central depth"
                          : "pure power split off; rest at the full central depth");
    }
    {
        auto [out_cyc, w1] = first_term_outside(art.remainder_f, cycle_ideal_gens(n));
        auto [out_dep, w2] =
            first_term_outside(art.remainder_f, central_ideal(n, sch.alpha(m) * sch.delta_rewrite(m)));
        rep.add("remainder-membership", !out_cyc && !out_dep,
                out_cyc   ? "term " + monomial_str(w1) + " outside the cycle ideal"
                : out_dep ? "term " + monomial_str(w2) + " under the guaranteed central depth"
                          : "remainder in the cycle ideal at the guaranteed central depth");
    }
    {
        Polynomial lhs = art.remainder_f + Polynomial::monomial(p, n, art.pure_term, sigma_coeff) +
                         Polynomial::monomial(p, n, art.tail_term);
        rep.add("resultant-decomposition", lhs == art.resultant_s,
                "resultant vs remainder + signed pure power + tail");
    }
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

VerificationReport trivial_solution_probe(const LiftArtifacts& art, const Field& f, std::uint32_t trials,
                                          std::uint64_t seed, std::uint64_t cap) {
    const auto t0 = Clock::now();
    const std::uint32_t n = art.level;
    const std::uint32_t ny = n - 3;
    const std::uint32_t q = f.q();
    PointEnumerator yen(f, ny, cap);

    // Each eliminated row is a sum of (x-coefficient) * (monomial in y).
    // Group the folded terms by their y-part so the x-coefficients are
    // evaluated once per sample instead of once per y-point.
    struct YGroup {
        std::vector<std::pair<std::uint32_t, std::uint32_t>> ypows;  // (y index, exponent)
        std::vector<FlatTerm> xpart;
        std::uint32_t value = 0;
    };
    std::vector<std::vector<YGroup>> rows;
    for (const auto& row : art.tilde) {
        std::map<Monomial, std::vector<FlatTerm>> groups;
        const Polynomial folded = row.fold_exponents(f);
        for (const auto& t : folded.terms()) {
            Monomial ypart;
            FlatTerm xt;
            xt.coeff = f.embed(t.coeff);
            for (const auto& [v, e] : t.mono) {
                if (v > n)
                    ypart.emplace_back(v, e);
                else
                    xt.vars.emplace_back(v - 1, to_u64(e, "folded exponent"));
            }
            groups[ypart].push_back(std::move(xt));
        }
        std::vector<YGroup> out;
        for (auto& [ypart, xterms] : groups) {
            YGroup g;
            for (const auto& [v, e] : ypart)
                g.ypows.emplace_back(v - n - 1, to_u64(e, "folded exponent"));
            g.xpart = std::move(xterms);
            out.push_back(std::move(g));
        }
        rows.push_back(std::move(out));
    }
    const auto sflat = flatten(art.resultant_s.fold_exponents(f), f);

    VerificationReport rep;
    rep.check = "probe";
    rep.seed = seed;
    std::mt19937_64 rng(seed);
    std::uint32_t accepted = 0;
    std::uint64_t skipped = 0;
    const std::uint64_t draw_limit = std::max<std::uint64_t>(1000, 100ull * trials);
    bool zero_solves = true, trivial_only = true;
    std::string wit;
    std::vector<std::uint32_t> x(n), y;
    for (std::uint64_t draw = 0; draw < draw_limit && accepted < trials; ++draw) {
        for (std::uint32_t v = 0; v < n; ++v) x[v] = static_cast<std::uint32_t>(rng() % q);
        if (eval_flat(sflat, f, x) == 0) {
            ++skipped;
            continue;
        }
        ++accepted;
        for (auto& row : rows)
            for (auto& g : row) g.value = eval_flat(g.xpart, f, x);
        for (std::uint64_t idx = 0; idx < yen.count(); ++idx) {
            yen.point(idx, y);
            bool all_zero = true;
            for (const auto& row : rows) {
                std::uint32_t acc = 0;
                for (const auto& g : row) {
                    if (g.value == 0) continue;
                    std::uint32_t v = g.value;
                    for (const auto& [yi, e] : g.ypows) {
                        const std::uint32_t yv = y[yi];
                        if (yv == 0) {
                            v = 0;
                            break;
                        }
                        v = f.mul(v, f.pow_u64(yv, e));
                    }
                    acc = f.add(acc, v);
                }
                if (acc != 0) {
                    all_zero = false;
                    break;
                }
            }
            const bool y_zero = std::all_of(y.begin(), y.end(), [](std::uint32_t v) { return v == 0; });
            if (y_zero && !all_zero && zero_solves) {
                zero_solves = false;
                wit = "x=" + point_str(x);
            }
            if (!y_zero && all_zero && trivial_only) {
                trivial_only = false;
                wit = "x=" + point_str(x) + " y=" + point_str(y);
            }
        }
        rep.swept += yen.count();
    }

    const std::string counts = std::to_string(accepted) + " samples accepted, " + std::to_string(skipped) +
                               " with a vanishing resultant skipped";
    if (accepted < trials)
        rep.items.push_back({"sampling", CheckStatus::skipped,
                             counts + " (wanted " + std::to_string(trials) + ")"});
    else
        rep.add("sampling", true, counts);
    rep.add("zero-solution", zero_solves,
            zero_solves ? "y = 0 annihilates every eliminated row at every sample"
                        : "eliminated row nonzero at y = 0, " + wit);
    rep.add("trivial-solution-only", trivial_only,
            trivial_only ? "no nontrivial y-solution at any sample with a nonzero resultant"
                         : "nontrivial solution " + wit);
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

namespace {

std::string cas_poly(const Polynomial& f, const std::function<std::string(std::uint32_t)>& var) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : f.terms()) {
        if (!first) os << " + ";
        first = false;
        bool lead = true;
        if (t.coeff != 1 || t.mono.empty()) {
            os << t.coeff;
            lead = false;
        }
        for (const auto& [v, e] : t.mono) {
            if (!lead) os << "*";
            lead = false;
            os << var(v);
            if (e != 1) os << "^" << to_decimal(e);
        }
    }
    return os.str();
}

std::string cas_monomial(const Monomial& m, const std::function<std::string(std::uint32_t)>& var) {
    std::ostringstream os;
    bool lead = true;
    for (const auto& [v, e] : m) {
        if (!lead) os << "*";
        lead = false;
        os << var(v);
        if (e != 1) os << "^" << to_decimal(e);
    }
    return os.str();
}

}  // namespace

std::string export_cas(const std::vector<Polynomial>& fs, std::uint32_t n, const std::string& format) {
    if (fs.empty()) throw std::invalid_argument("export_cas: empty generator list");
    for (const auto& g : fs)
        if (g.arity() != n || g.p() != fs.front().p())
            throw std::invalid_argument("export_cas: generator in the wrong ring");
    const std::uint32_t p = fs.front().p();
    const auto ideal = cycle_ideal_gens(n);
    std::ostringstream os;

    if (format == "macaulay2") {
        auto var = [](std::uint32_t v) { return "x_" + std::to_string(v); };
        os << "-- radical-membership queries for the cycle ideal of the " << n << "-gon over F_" << p << "\n";
        os << "R = ZZ/" << p << "[x_1..x_" << n << ", t];\n";
        for (std::size_t i = 0; i < fs.size(); ++i)
            os << "f" << i + 1 << " = " << cas_poly(fs[i], var) << ";\n";
        os << "J = ideal(";
        for (std::size_t i = 0; i < fs.size(); ++i) os << (i ? ", " : "") << "f" << i + 1;
        os << ");\n";
        os << "mems = {";
        for (std::size_t i = 0; i < ideal.size(); ++i) os << (i ? ", " : "") << cas_monomial(ideal[i], var);
        os << "};\n";
        os << "-- m lies in the radical of J iff 1 lies in J + (1 - t*m)\n";
        os << "results = apply(mems, m -> (1_R % (J + ideal(1_R - t*m))) == 0);\n";
        os << "print results;\n";
        os << "assert all(results, r -> r);\n";
        return os.str();
    }
    if (format == "singular") {
        auto var = [](std::uint32_t v) { return "x(" + std::to_string(v) + ")"; };
        os << "// radical-membership queries for the cycle ideal of the " << n << "-gon over F_" << p << "\n";
        os << "ring R = " << p << ", (x(1.." << n << "), t), dp;\n";
        for (std::size_t i = 0; i < fs.size(); ++i)
            os << "poly f" << i + 1 << " = " << cas_poly(fs[i], var) << ";\n";
        os << "ideal J = ";
        for (std::size_t i = 0; i < fs.size(); ++i) os << (i ? ", " : "") << "f" << i + 1;
        os << ";\n";
        os << "// m lies in the radical of J iff 1 reduces to 0 against J + (1 - t*m)\n";
        os << "int ok = 1;\n";
        for (std::size_t i = 0; i < ideal.size(); ++i) {
            os << "ideal K" << i + 1 << " = J, 1 - t*" << cas_monomial(ideal[i], var) << ";\n";
            os << "ok = ok && (reduce(1, std(K" << i + 1 << ")) == 0);\n";
        }
        os << "ok;\n";
        return os.str();
    }
    throw std::invalid_argument("export_cas: unknown format '" + format + "'");
}

}  // namespace stci
