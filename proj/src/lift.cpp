#include "stci/lift.hpp"

#include "stci/srideal.hpp"

#include <stdexcept>
#include <utility>

namespace stci {

std::string to_string(X2Mode mode) { return mode == X2Mode::carried ? "carried" : "literal"; }

X2Mode x2_mode_from_string(const std::string& s) {
    if (s == "carried") return X2Mode::carried;
    if (s == "literal") return X2Mode::literal;
    throw std::invalid_argument("x2_mode_from_string: unknown mode \"" + s + "\"");
}

namespace {

Polynomial xp(std::uint32_t p, std::uint32_t arity, std::uint32_t var, const BigNat& e) {
    return Polynomial::var_pow(p, arity, var, e);
}

/// The four flattening shapes computed from the table; a well-formed set
/// has gens[i] equal to forms[i] exactly.
std::vector<Polynomial> flattening_forms(const StructuredGenerators& sg) {
    const std::uint32_t p = sg.p(), n = sg.level;
    const BigNat lam = sg.schedule.lambda(n);
    const BigNat alp = sg.schedule.alpha(n);
    std::vector<Polynomial> out;
    out.reserve(n - 2);

    Polynomial f = sg.table.at(1, 2) * xp(p, n, 2, sg.e1);
    for (std::uint32_t j = 3; j <= n - 2; ++j) f += sg.table.at(1, j) * xp(p, n, j, lam);
    out.push_back(std::move(f));

    f = sg.table.at(2, 2) * xp(p, n, 2, sg.e2);
    for (std::uint32_t j = 3; j <= n - 2; ++j) f += sg.table.at(2, j) * Polynomial::variable(p, n, j);
    out.push_back(std::move(f));

    for (std::uint32_t i = 3; i <= n - 3; ++i) {
        f = Polynomial::zero(p, n);
        for (std::uint32_t j = 3; j <= n - 2; ++j) f += sg.table.at(i, j) * Polynomial::variable(p, n, j);
        out.push_back(std::move(f));
    }

    f = xp(p, n, 1, 1) * xp(p, n, n - 1, alp);
    for (std::uint32_t j = 3; j <= n - 2; ++j) f += sg.table.at(n - 2, j) * xp(p, n, j, alp);
    out.push_back(std::move(f));
    return out;
}

void require_shape(const StructuredGenerators& sg, const char* who) {
    const std::uint32_t n = sg.level;
    if (n < 5 || n > sg.schedule.N)
        throw construction_error(std::string(who) + ": level " + std::to_string(n) + " outside the schedule");
    if (sg.gens.size() != std::size_t(n) - 2)
        throw construction_error(std::string(who) + ": expected " + std::to_string(n - 2) + " generators");
    if (sg.table.rows() != n - 2 || sg.table.cols() != n - 2)
        throw construction_error(std::string(who) + ": table must be (n-2) x (n-2)");
}

}  // namespace

Polynomial StructuredGenerators::ideal_part(std::uint32_t i) const {
    if (i < 1 || i > level - 3) throw std::out_of_range("ideal_part: row out of range");
    const auto& grow = schedule.gamma_row(level);
    return table.at(i, i + 1) - xp(p(), level, level, grow[i - 1]);
}

StructuredGenerators base5(const Schedule& schedule, X2Mode mode) {
    const std::uint32_t p = schedule.p;
    StructuredGenerators sg;
    sg.schedule = schedule;
    sg.level = 5;
    sg.mode = mode;
    sg.e1 = 1;
    sg.e2 = 1;
    const auto& grow = schedule.gamma_row(5);
    sg.table = PolyMatrix(p, 5, 3, 3);
    sg.table.at(1, 2) = xp(p, 5, 5, grow[0]);
    sg.table.at(1, 3) = Polynomial::variable(p, 5, 1);
    sg.table.at(2, 2) = xp(p, 5, 4, schedule.lambda(5));
    sg.table.at(2, 3) = xp(p, 5, 5, grow[1]);
    sg.gens = flattening_forms(sg);
    return sg;
}

bool ConditionReport::all_pass() const {
    for (const auto& item : items)
        if (!item.pass) return false;
    return true;
}

ConditionReport check_conditions(const StructuredGenerators& sg) {
    require_shape(sg, "check_conditions");
    ConditionReport rep;
    rep.level = sg.level;
    const std::uint32_t n = sg.level;
    const Schedule& sch = sg.schedule;
    auto add = [&](const std::string& name, bool pass, const std::string& detail) {
        rep.items.push_back({name, pass, detail});
    };

    auto forms = flattening_forms(sg);
    for (std::uint32_t i = 0; i < forms.size(); ++i)
        add("flattening[" + std::to_string(i + 1) + "]", forms[i] == sg.gens[i],
            "generator " + std::to_string(i + 1) + " vs its table form");

    const BigNat delta = sch.delta(n);
    std::vector<Monomial> delta_ideal;
    for (std::uint32_t v = 3; v <= n - 1; ++v) delta_ideal.push_back(Monomial{{v, delta}});

    for (std::uint32_t i = 1; i <= n - 3; ++i) {
        auto [bad, wit] = first_term_outside(sg.ideal_part(i), delta_ideal);
        add("I[" + std::to_string(i) + "]", !bad,
            bad ? "remainder term " + monomial_str(wit) + " outside the delta ideal"
                : "diagonal remainder inside (x_3^delta..x_" + std::to_string(n - 1) + "^delta)");
    }

    for (std::uint32_t i = 2; i <= n - 3; ++i)
        for (std::uint32_t j = 3; j <= n - 2; ++j) {
            if (j == i + 1) continue;
            auto [bad, wit] = first_term_outside(sg.table.at(i, j), delta_ideal);
            add("II[" + std::to_string(i) + "][" + std::to_string(j) + "]", !bad,
                bad ? "term " + monomial_str(wit) + " outside the delta ideal" : "inside the delta ideal");
        }
    {
        bool ok = true;
        std::string detail = "A[2][2] splits into d_j x_j^delta over j = 3.." + std::to_string(n - 1);
        try {
            std::vector<std::uint32_t> dvars;
            for (std::uint32_t v = 3; v <= n - 1; ++v) dvars.push_back(v);
            decompose_pure_power(sg.table.at(2, 2), dvars, delta);
        } catch (const construction_error& err) {
            ok = false;
            detail = err.what();
        }
        add("II-decompose", ok, detail);
    }

    const BigNat eps = sch.eps_floor(n);
    auto cyc = cycle_ideal_gens(n);
    for (std::uint32_t j = 3; j <= n - 2; ++j) {
        if (sgn(eps) <= 0) {
            add("III[" + std::to_string(j) + "]", false, "eps at this level is not positive");
            continue;
        }
        std::vector<Monomial> eps_ideal;
        for (std::uint32_t v = 3; v <= n - 2; ++v) eps_ideal.push_back(Monomial{{v, eps}});
        const Polynomial& a = sg.table.at(n - 2, j);
        auto [out_cyc, w1] = first_term_outside(a, cyc);
        auto [out_eps, w2] = first_term_outside(a, eps_ideal);
        std::string detail = "inside the cycle ideal and the eps ideal";
        if (out_cyc) detail = "term " + monomial_str(w1) + " outside the cycle ideal";
        if (out_eps) detail = "term " + monomial_str(w2) + " outside the eps ideal";
        add("III[" + std::to_string(j) + "]", !out_cyc && !out_eps, detail);
    }

    bool zeros = true;
    for (std::uint32_t i = 3; i <= n - 2; ++i) zeros = zeros && sg.table.at(i, 2).is_zero();
    add("column-2-zeros", zeros, "rows 3.." + std::to_string(n - 2) + " have no x_2 column entry");
    return rep;
}

LiftResult lift_once(const StructuredGenerators& in) {
    require_shape(in, "lift_once");
    const std::uint32_t p = in.p();
    const std::uint32_t m = in.level;
    const std::uint32_t n = m + 1;
    const Schedule& sch = in.schedule;
    if (n > sch.N)
        throw construction_error("lift_once: schedule ends at level " + std::to_string(sch.N));

    {
        auto forms = flattening_forms(in);
        for (std::size_t i = 0; i < forms.size(); ++i)
            if (!(forms[i] == in.gens[i]))
                throw construction_error("lift_once: input generator " + std::to_string(i + 1) +
                                         " does not flatten through its table at level " + std::to_string(m));
    }

    const BigNat delta = sch.delta(m);
    const BigNat lam = sch.lambda(m);
    const BigNat alp = sch.alpha(m);
    const BigNat alpha_n = sch.alpha(n);
    const auto& grow = sch.gamma_row(n);

    // Split A[2][2] into sum d_j x_j^delta.
    std::vector<std::uint32_t> dvars;
    for (std::uint32_t v = 3; v <= m - 1; ++v) dvars.push_back(v);
    auto dparts = decompose_pure_power(in.table.at(2, 2), dvars, delta);
    auto dpart = [&](std::uint32_t j) {
        auto it = dparts.find(j);
        return it == dparts.end() ? Polynomial::zero(p, m) : it->second;
    };

    // Row rewrites that turn rows 1 and 2 into forms linear in x_j. Row 1
    // moves all but one power of x_j onto the coefficient; row 2 absorbs the
    // A[2][2] split with x_j^{delta-1}, so that the rewritten row still sums
    // back to the generator exactly. The same rewrite feeds the elimination
    // system and the new table: any deeper power would break the equality,
    // and with it the transfer of common zeros into the linear system.
    std::vector<Polynomial> a1p;  // j = 3..m-2
    for (std::uint32_t j = 3; j <= m - 2; ++j) a1p.push_back(in.table.at(1, j) * xp(p, m, j, lam - 1));
    std::vector<Polynomial> a2p;  // j = 3..m-1
    const Polynomial x2e2 = xp(p, m, 2, in.e2);
    for (std::uint32_t j = 3; j <= m - 1; ++j) {
        Polynomial base = (j <= m - 2) ? in.table.at(2, j) : Polynomial::zero(p, m);
        a2p.push_back(base + dpart(j) * x2e2 * xp(p, m, j, delta - 1));
    }
    Polynomial b2_prime = in.ideal_part(2) + dpart(3) * x2e2 * xp(p, m, 3, delta - 1);

    // The y-linear elimination system (y_j lives at variable n + j - 1).
    const std::uint32_t tarity = 2 * n - 3;
    auto yvar = [&](std::uint32_t j) { return n + j - 1; };
    std::vector<Polynomial> tilde;
    {
        Polynomial f = xp(p, tarity, n, grow[0]) * xp(p, tarity, yvar(2), alp);
        for (std::uint32_t j = 3; j <= m - 2; ++j)
            f += in.table.at(m - 2, j).extend_arity(tarity) * xp(p, tarity, yvar(j), alp);
        f += xp(p, tarity, 1, 1) * xp(p, tarity, yvar(m - 1), alp);
        tilde.push_back(std::move(f));

        f = in.table.at(1, 2).extend_arity(tarity) * xp(p, tarity, yvar(2), 1);
        for (std::uint32_t j = 3; j <= m - 2; ++j)
            f += a1p[j - 3].extend_arity(tarity) * xp(p, tarity, yvar(j), 1);
        f += xp(p, tarity, n, grow[1]) * xp(p, tarity, yvar(3), 1);
        tilde.push_back(std::move(f));

        f = Polynomial::zero(p, tarity);
        for (std::uint32_t j = 3; j <= m - 1; ++j)
            f += a2p[j - 3].extend_arity(tarity) * xp(p, tarity, yvar(j), 1);
        f += xp(p, tarity, n, grow[2]) * xp(p, tarity, yvar(4), 1);
        tilde.push_back(std::move(f));

        for (std::uint32_t i = 4; i <= n - 3; ++i) {
            f = Polynomial::zero(p, tarity);
            for (std::uint32_t j = 3; j <= m - 2; ++j)
                f += in.table.at(i - 1, j).extend_arity(tarity) * xp(p, tarity, yvar(j), 1);
            f += xp(p, tarity, n, grow[i - 1]) * xp(p, tarity, yvar(i + 1), 1);
            tilde.push_back(std::move(f));
        }
    }

    // Coefficient block of tilde_2..tilde_{n-3} (column c holds y_{c+1}).
    PolyMatrix C(p, n, n - 4, n - 3);
    C.at(1, 1) = in.table.at(1, 2).extend_arity(n);
    for (std::uint32_t j = 3; j <= m - 2; ++j) C.at(1, j - 1) = a1p[j - 3].extend_arity(n);
    C.at(1, 2) += xp(p, n, n, grow[1]);
    for (std::uint32_t j = 3; j <= m - 1; ++j) C.at(2, j - 1) = a2p[j - 3].extend_arity(n);
    C.at(2, 3) += xp(p, n, n, grow[2]);
    for (std::uint32_t i = 3; i <= n - 4; ++i) {
        for (std::uint32_t j = 3; j <= m - 2; ++j) C.at(i, j - 1) = in.table.at(i, j).extend_arity(n);
        C.at(i, i + 1) += xp(p, n, n, grow[i]);
    }
    std::vector<Polynomial> cof = det_cofactors_last_row(C);

    // S = tilde_1(y -> cofactors), assembled structurally so each cofactor
    // power is taken once.
    std::vector<Polynomial> cof_pow;
    cof_pow.reserve(cof.size());
    for (const auto& c : cof) cof_pow.push_back(c.pow(alp));
    Polynomial S;
    {
        std::vector<Polynomial> holders;
        holders.reserve(m);
        holders.push_back(xp(p, n, n, grow[0]));
        for (std::uint32_t j = 3; j <= m - 2; ++j) holders.push_back(in.table.at(m - 2, j).extend_arity(n));
        holders.push_back(Polynomial::variable(p, n, 1));
        std::vector<std::pair<const Polynomial*, const Polynomial*>> prods;
        prods.emplace_back(&holders.front(), &cof_pow[0]);
        for (std::uint32_t j = 3; j <= m - 2; ++j) prods.emplace_back(&holders[j - 2], &cof_pow[j - 2]);
        prods.emplace_back(&holders.back(), &cof_pow[n - 4]);
        S = Polynomial::sum_of_products(prods);
    }

    // Pure head and tail of S; their coefficients must be units.
    const BigNat sn = pow_nat(p, to_u64(sch.s_at(n), "lift_once: s"));
    const BigNat e = grow[0] + alp * (sn - grow[0]);
    Monomial pure{{n, e}};
    Monomial tail{{1, 1}, {n - 1, alpha_n}};
    const std::uint32_t cpure = S.coeff_of(pure);
    int sigma;
    if (cpure == 1)
        sigma = 1;
    else if (cpure == p - 1)
        sigma = -1;
    else
        throw construction_error("lift_once: pure term x" + std::to_string(n) + "^" + to_decimal(e) +
                                 " of the resultant has non-unit coefficient " + std::to_string(cpure) +
                                 " at level " + std::to_string(n));
    if (S.coeff_of(tail) != 1)
        throw construction_error("lift_once: tail term " + monomial_str(tail) +
                                 " of the resultant has coefficient " + std::to_string(S.coeff_of(tail)) +
                                 " at level " + std::to_string(n));

    const Polynomial pure_poly = Polynomial::monomial(p, n, pure, sigma > 0 ? 1 : p - 1);
    const Polynomial tail_poly = Polynomial::monomial(p, n, tail);
    Polynomial F = S - pure_poly - tail_poly;

    // Every leftover term must sit in the cycle ideal and carry a central
    // variable to the guaranteed depth alpha * delta_rewrite. (The row
    // rewrites deposit x_j^{lambda-1} and x_j^{delta-1}, so past the base
    // level the depth sits one alpha-block under alpha * delta.)
    {
        auto [bad, wit] = first_term_outside(F, cycle_ideal_gens(n));
        if (bad)
            throw construction_error("lift_once: remainder term " + monomial_str(wit) +
                                     " escapes the cycle ideal at level " + std::to_string(n));
        std::vector<Monomial> adgens;
        const BigNat ad = alp * sch.delta_rewrite(m);
        for (std::uint32_t v = 3; v <= n - 2; ++v) adgens.push_back(Monomial{{v, ad}});
        auto [bad2, wit2] = first_term_outside(F, adgens);
        if (bad2)
            throw construction_error("lift_once: remainder term " + monomial_str(wit2) +
                                     " falls short of the guaranteed central depth at level " +
                                     std::to_string(n));
    }

    // New generators: the old ones chain up directly, the resultant closes
    // the list.
    BigNat e1n = in.mode == X2Mode::carried ? BigNat(alp * in.e1) : BigNat(alp * lam * sch.beta(m));
    std::vector<Polynomial> gens;
    gens.reserve(n - 2);
    gens.push_back(in.gens[m - 3].extend_arity(n) + xp(p, n, n, grow[0]) * xp(p, n, 2, e1n));
    for (std::uint32_t i = 2; i <= n - 3; ++i)
        gens.push_back(in.gens[i - 2].extend_arity(n) +
                       xp(p, n, n, grow[i - 1]) * Polynomial::variable(p, n, i + 1));
    gens.push_back(S - pure_poly);

    // New table.
    PolyMatrix T(p, n, n - 2, n - 2);
    T.at(1, 2) = xp(p, n, n, grow[0]);
    for (std::uint32_t j = 3; j <= n - 3; ++j) T.at(1, j) = in.table.at(m - 2, j).extend_arity(n);
    T.at(1, n - 2) = Polynomial::variable(p, n, 1);
    T.at(2, 2) = in.table.at(1, 2).extend_arity(n);
    for (std::uint32_t j = 3; j <= n - 3; ++j) T.at(2, j) = a1p[j - 3].extend_arity(n);
    T.at(2, 3) += xp(p, n, n, grow[1]);
    for (std::uint32_t j = 3; j <= n - 2; ++j) T.at(3, j) = a2p[j - 3].extend_arity(n);
    T.at(3, 4) += xp(p, n, n, grow[2]);
    for (std::uint32_t i = 4; i <= n - 3; ++i) {
        for (std::uint32_t j = 3; j <= n - 3; ++j) T.at(i, j) = in.table.at(i - 1, j).extend_arity(n);
        T.at(i, i + 1) += xp(p, n, n, grow[i - 1]);
    }
    {
        std::vector<std::uint32_t> fvars;
        for (std::uint32_t v = 3; v <= n - 2; ++v) fvars.push_back(v);
        auto frow = decompose_pure_power(F, fvars, alpha_n);
        for (auto& [v, part] : frow) T.at(n - 2, v) = std::move(part);
    }

    StructuredGenerators next;
    next.schedule = sch;
    next.level = n;
    next.mode = in.mode;
    next.gens = std::move(gens);
    next.table = std::move(T);
    next.e1 = e1n;
    next.e2 = in.e1;
    {
        auto forms = flattening_forms(next);
        for (std::size_t i = 0; i < forms.size(); ++i)
            if (!(forms[i] == next.gens[i]))
                throw construction_error("lift_once: output generator " + std::to_string(i + 1) +
                                         " does not flatten through the new table at level " + std::to_string(n));
    }

    LiftArtifacts art;
    art.level = n;
    art.sign = sigma;
    for (auto& f : a1p) art.row1_rewrite.push_back(f.extend_arity(n));
    for (auto& f : a2p) art.row2_rewrite.push_back(f.extend_arity(n));
    art.b2_prime = b2_prime.extend_arity(n);
    art.tilde = std::move(tilde);
    art.cmat = std::move(C);
    art.cofactors = std::move(cof);
    art.resultant_s = std::move(S);
    art.remainder_f = std::move(F);
    art.pure_term = std::move(pure);
    art.tail_term = std::move(tail);
    return {std::move(next), std::move(art)};
}

Chain build_chain(const Schedule& schedule, X2Mode mode, std::uint32_t top) {
    if (top == 0) top = schedule.N;
    if (top < 5 || top > schedule.N) throw std::invalid_argument("build_chain: top level out of range");
    Chain ch;
    ch.levels.push_back(base5(schedule, mode));
    while (ch.levels.back().level < top) {
        LiftResult step = lift_once(ch.levels.back());
        ch.levels.push_back(std::move(step.next));
        ch.lifts.push_back(std::move(step.artifacts));
    }
    return ch;
}

}  // namespace stci
