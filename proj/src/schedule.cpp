#include "stci/schedule.hpp"

#include <stdexcept>

namespace stci {
namespace {

std::uint64_t exponent_u64(const BigNat& e, const char* what) {
    std::uint64_t v = to_u64(e, what);
    if (v > kMaxScheduleExponent)
        throw std::invalid_argument(std::string(what) + ": exponent " + to_decimal(e) +
                                    " exceeds the schedule cap");
    return v;
}

}  // namespace

const BigNat& Schedule::r_at(std::uint32_t n) const {
    if (n < 4 || n > N) throw std::out_of_range("Schedule::r_at: level out of range");
    return r[n - 4];
}

BigNat Schedule::s_at(std::uint32_t n) const { return r_at(n) + N; }

const std::vector<BigNat>& Schedule::gamma_row(std::uint32_t n) const {
    if (n < 5 || n > N) throw std::out_of_range("Schedule::gamma_row: level out of range");
    return gamma[n - 5];
}

BigNat Schedule::delta(std::uint32_t n) const {
    return pow_nat(p, exponent_u64(r_at(n - 1), "Schedule::delta"));
}

BigNat Schedule::alpha(std::uint32_t n) const {
    if (n < 5 || n > N) throw std::out_of_range("Schedule::alpha: level out of range");
    // alpha is the pure power p^(r[5] + s[5] + ... + s[n-1]).
    BigNat e = r_at(5);
    for (std::uint32_t m = 5; m < n; ++m) e += s_at(m);
    return pow_nat(p, exponent_u64(e, "Schedule::alpha"));
}

BigNat Schedule::lambda(std::uint32_t n) const {
    if (n == 5) return lambda5;
    return alpha(n - 1);
}

BigNat Schedule::beta(std::uint32_t n) const {
    if (n < 5 || n > N) throw std::out_of_range("Schedule::beta: level out of range");
    BigNat out = 1;
    for (std::uint32_t m = 5; m < n; ++m) out *= lambda(m);
    return out;
}

BigNat Schedule::eps(std::uint32_t n) const {
    if (n == 5) return eps5;
    if (n < 5 || n > N) throw std::out_of_range("Schedule::eps: level out of range");
    return alpha(n - 1) * (delta(n - 1) - pow_nat(p, exponent_u64(s_at(n - 1), "Schedule::eps")));
}

BigNat Schedule::delta_rewrite(std::uint32_t n) const {
    BigNat d = delta(n);
    return n == 5 ? d : BigNat(d - 1);
}

BigNat Schedule::eps_floor(std::uint32_t n) const {
    if (n == 5) return eps5;
    if (n < 5 || n > N) throw std::out_of_range("Schedule::eps_floor: level out of range");
    return alpha(n - 1) * delta_rewrite(n - 1) - alpha(n);
}

Schedule make_minimal(std::uint32_t p, std::uint32_t N) {
    CustomScheduleInput in;
    in.p = p;
    in.N = N;
    if (N < 5) throw std::invalid_argument("make_minimal: need N >= 5");
    in.r.assign(N - 3, 0);
    in.r[N - 4] = 1;
    for (std::uint32_t n = N; n >= 5; --n) in.r[n - 5] = 2 * in.r[n - 4] + N + 1;
    for (std::uint32_t n = 5; n <= N; ++n) {
        std::uint32_t len = n - 3;
        std::vector<BigNat> row(len);
        row[0] = pow_nat(p, to_u64(in.r[n - 4], "make_minimal: r"));
        BigNat total = pow_nat(p, to_u64(in.r[n - 4] + N, "make_minimal: s"));
        BigNat mass = total - row[0];
        // Even split of the remaining mass, earlier entries taking the
        // leftover units.
        BigNat q_part, rem;
        mpz_fdiv_qr(q_part.get_mpz_t(), rem.get_mpz_t(), mass.get_mpz_t(), BigNat(len - 1).get_mpz_t());
        std::uint64_t extras = to_u64(rem, "make_minimal: remainder");
        for (std::uint32_t i = 1; i < len; ++i) row[i] = q_part + (i <= extras ? 1 : 0);
        in.gamma.push_back(std::move(row));
    }
    Schedule tmp;
    tmp.p = p;
    tmp.N = N;
    tmp.r = in.r;
    in.lambda5 = tmp.delta(5) + 1;
    in.eps5 = tmp.alpha(5) * tmp.delta(5) + 1;
    return make_custom(in);
}

Schedule make_custom(const CustomScheduleInput& in) {
    if (!is_prime_u64(in.p)) throw std::invalid_argument("make_custom: p must be prime");
    if (in.N < 5) throw std::invalid_argument("make_custom: need N >= 5");
    if (in.r.size() != std::size_t(in.N) - 3)
        throw std::invalid_argument("make_custom: expected one r entry per level 4.." + std::to_string(in.N));
    for (const BigNat& v : in.r) {
        if (sgn(v) <= 0) throw std::invalid_argument("make_custom: r entries must be positive");
        exponent_u64(v, "make_custom: r");
    }
    if (in.gamma.size() != std::size_t(in.N) - 4)
        throw std::invalid_argument("make_custom: expected one gamma row per level 5.." + std::to_string(in.N));

    Schedule out;
    out.p = in.p;
    out.N = in.N;
    out.r = in.r;
    out.gamma = in.gamma;
    out.lambda5 = in.lambda5;
    out.eps5 = in.eps5;

    for (std::uint32_t n = 5; n <= in.N; ++n) {
        const auto& row = out.gamma_row(n);
        if (row.size() != std::size_t(n) - 3)
            throw std::invalid_argument("make_custom: gamma row for level " + std::to_string(n) +
                                        " must have " + std::to_string(n - 3) + " entries");
        BigNat sum = 0;
        for (const BigNat& g : row) {
            if (sgn(g) <= 0) throw std::invalid_argument("make_custom: gamma entries must be positive");
            sum += g;
        }
        if (row[0] != pow_nat(in.p, exponent_u64(out.r_at(n), "make_custom: gamma_1")))
            throw std::invalid_argument("make_custom: gamma_1 at level " + std::to_string(n) +
                                        " must equal p^r for that level");
        if (sum != pow_nat(in.p, exponent_u64(out.s_at(n), "make_custom: gamma sum")))
            throw std::invalid_argument("make_custom: gamma row at level " + std::to_string(n) +
                                        " must sum to p^s for that level");
    }
    if (sgn(out.lambda5) <= 0) throw std::invalid_argument("make_custom: lambda5 must be positive");
    if (sgn(out.eps5) <= 0) throw std::invalid_argument("make_custom: eps5 must be positive");
    return out;
}

bool ValidationReport::all_pass() const {
    for (const auto& item : items)
        if (!item.pass) return false;
    return true;
}

ValidationReport validate(const Schedule& s) {
    ValidationReport rep;
    auto add = [&](const std::string& name, bool pass, const std::string& detail) {
        rep.items.push_back({name, pass, detail});
    };
    for (std::uint32_t n = 5; n <= s.N; ++n) {
        BigNat lhs = s.r_at(n - 1);
        BigNat rhs = 2 * s.r_at(n) + s.N;
        add("r-gap[" + std::to_string(n) + "]", lhs > rhs,
            "r[" + std::to_string(n - 1) + "] = " + to_decimal(lhs) + " vs 2 r[" + std::to_string(n) +
                "] + N = " + to_decimal(rhs));
    }
    for (std::uint32_t n = 5; n <= s.N; ++n) {
        const auto& row = s.gamma_row(n);
        bool ge = true;
        for (const BigNat& g : row) ge = ge && g >= row[0];
        add("gamma-floor[" + std::to_string(n) + "]", ge,
            "every gamma entry at level " + std::to_string(n) + " at least gamma_1 = " + to_decimal(row[0]));
    }
    for (std::uint32_t n = 6; n <= s.N; ++n)
        add("delta-descends[" + std::to_string(n) + "]", s.delta(n - 1) > s.delta(n),
            "delta[" + std::to_string(n - 1) + "] > delta[" + std::to_string(n) + "]");
    for (std::uint32_t n = 5; n <= s.N; ++n) {
        BigNat l = s.lambda(n), d = s.delta(n);
        std::string rel = l > d ? ">" : (l == d ? "=" : "<");
        add("lambda-dominates[" + std::to_string(n) + "]", l > d,
            "lambda[" + std::to_string(n) + "] " + rel + " delta[" + std::to_string(n) + "]");
    }
    for (std::uint32_t n = 5; n <= s.N; ++n)
        add("eps-positive[" + std::to_string(n) + "]", sgn(s.eps(n)) > 0,
            "eps[" + std::to_string(n) + "] = " + to_decimal(s.eps(n)));
    for (std::uint32_t n = 5; n <= s.N; ++n)
        add("eps-dominates[" + std::to_string(n) + "]", s.eps(n) > s.alpha(n) * s.delta(n),
            "eps[" + std::to_string(n) + "] vs alpha[" + std::to_string(n) + "] delta[" + std::to_string(n) + "]");
    for (std::uint32_t n = 6; n <= s.N; ++n) {
        bool same = s.eps_floor(n) == s.eps(n);
        add("eps-effective[" + std::to_string(n) + "]", same,
            same ? "effective last-row exponent meets the nominal eps[" + std::to_string(n) + "]"
                 : "effective last-row exponent is lower than eps[" + std::to_string(n) + "] by alpha[" +
                       std::to_string(n - 1) + "] (the level " + std::to_string(n - 1) +
                       " rewrite deposits central depth delta - 1)");
    }
    return rep;
}

}  // namespace stci
