#include "stci/gf.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace stci {
namespace {

// Dense F_p[X] arithmetic on coefficient vectors (constant term first),
// used only while constructing the field tables.
using FpPoly = std::vector<std::uint32_t>;

void trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly mul_mod(const FpPoly& a, const FpPoly& b, const FpPoly& m, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            acc[i + j] = (acc[i + j] + std::uint64_t(a[i]) * b[j]) % p;
    // Reduce modulo the monic m of degree m.size()-1.
    std::size_t deg_m = m.size() - 1;
    for (std::size_t i = acc.size(); i-- > deg_m;) {
        std::uint64_t c = acc[i];
        if (c == 0) continue;
        acc[i] = 0;
        for (std::size_t j = 0; j < deg_m; ++j)
            acc[i - deg_m + j] = (acc[i - deg_m + j] + c * (p - m[j])) % p;
    }
    FpPoly out(acc.begin(), acc.begin() + std::min(acc.size(), deg_m));
    trim(out);
    return out;
}

FpPoly pow_mod(FpPoly base, std::uint64_t e, const FpPoly& m, std::uint32_t p) {
    FpPoly out{1};
    while (e) {
        if (e & 1) out = mul_mod(out, base, m, p);
        base = mul_mod(base, base, m, p);
        e >>= 1;
    }
    return out;
}

FpPoly gcd(FpPoly a, FpPoly b, std::uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b, with b made monic on the fly via inverse of its lead.
        std::uint32_t lead = b.back();
        std::uint32_t lead_inv = 1;
        for (std::uint32_t x = 1; x < p; ++x)
            if (x * std::uint64_t(lead) % p == 1) { lead_inv = x; break; }
        while (a.size() >= b.size()) {
            std::uint64_t c = std::uint64_t(a.back()) * lead_inv % p;
            std::size_t shift = a.size() - b.size();
            for (std::size_t j = 0; j < b.size(); ++j)
                a[shift + j] = (a[shift + j] + c * (p - b[j])) % p;
            trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return a;
}

/// Irreducibility over F_p via x^{p^k} == x mod f together with
/// gcd(x^{p^{k/t}} - x, f) = 1 for every prime divisor t of k.
bool is_irreducible(const FpPoly& f, std::uint32_t p) {
    std::size_t k = f.size() - 1;
    auto frob = [&](std::uint64_t times) {
        FpPoly x{0, 1};
        FpPoly out = x;
        for (std::uint64_t i = 0; i < times; ++i) out = pow_mod(out, p, f, p);
        return out;
    };
    // x^{p^k} - x must vanish mod f.
    FpPoly diff = frob(k);
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (!diff.empty()) return false;
    for (std::size_t t = 2; t <= k; ++t) {
        if (k % t != 0) continue;
        bool t_prime = true;
        for (std::size_t d = 2; d * d <= t; ++d)
            if (t % d == 0) { t_prime = false; break; }
        if (!t_prime) continue;
        FpPoly sub = frob(k / t);
        if (sub.size() < 2) sub.resize(2, 0);
        sub[1] = (sub[1] + p - 1) % p;
        trim(sub);
        FpPoly g = gcd(sub, f, p);
        if (g.size() != 1) return false;
    }
    return true;
}

}  // namespace

Field::Field(std::uint32_t p, std::uint32_t k, std::uint64_t cap) : p_(p), k_(k) {
    if (!is_prime_u64(p)) throw std::invalid_argument("Field: p must be prime, got " + std::to_string(p));
    if (k == 0) throw std::invalid_argument("Field: k must be positive");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        q *= p;
        if (q > cap)
            throw std::invalid_argument("Field: p^k exceeds the field cap of " + std::to_string(cap));
    }
    q_ = static_cast<std::uint32_t>(q);

    // First monic irreducible of degree k, scanning the non-leading
    // coefficient vectors by increasing packed value.
    modulus_.assign(k + 1, 0);
    modulus_[k] = 1;
    if (k == 1) {
        // X itself is irreducible but gives the zero ring idea no trouble:
        // any monic linear works; pick X (all lower coefficients 0).
        // Reduction then just drops X, i.e. F_p with packed residues.
    } else {
        bool found = false;
        for (std::uint64_t packed = 0; packed < q && !found; ++packed) {
            std::uint64_t v = packed;
            for (std::uint32_t i = 0; i < k; ++i) {
                modulus_[i] = static_cast<std::uint32_t>(v % p);
                v /= p;
            }
            if (modulus_[0] == 0) continue;  // divisible by X
            found = is_irreducible(modulus_, p);
        }
        if (!found) throw std::logic_error("Field: no irreducible found (unreachable)");
    }

    // Multiplication table bootstrap: packed mul through FpPoly, then a
    // generator search, then log/exp tables.
    auto unpack = [&](std::uint32_t x) {
        FpPoly a;
        while (x) {
            a.push_back(x % p);
            x /= p;
        }
        return a;
    };
    auto pack = [&](const FpPoly& a) {
        std::uint64_t x = 0;
        for (std::size_t i = a.size(); i-- > 0;) x = x * p + a[i];
        return static_cast<std::uint32_t>(x);
    };
    auto raw_mul = [&](std::uint32_t a, std::uint32_t b) {
        return pack(mul_mod(unpack(a), unpack(b), modulus_, p));
    };

    // Factor q-1 to test candidate generators by maximal proper power.
    std::vector<std::uint64_t> prime_factors;
    {
        std::uint64_t m = q - 1;
        for (std::uint64_t d = 2; d * d <= m; ++d)
            if (m % d == 0) {
                prime_factors.push_back(d);
                while (m % d == 0) m /= d;
            }
        if (m > 1) prime_factors.push_back(m);
    }
    auto raw_pow = [&](std::uint32_t x, std::uint64_t e) {
        std::uint32_t out = 1;
        while (e) {
            if (e & 1) out = raw_mul(out, x);
            x = raw_mul(x, x);
            e >>= 1;
        }
        return out;
    };
    generator_ = 0;
    for (std::uint32_t g = 1; g < q_; ++g) {
        bool ok = true;
        for (std::uint64_t f : prime_factors)
            if (raw_pow(g, (q - 1) / f) == 1) { ok = false; break; }
        if (ok) { generator_ = g; break; }
    }
    if (generator_ == 0 && q_ > 2) throw std::logic_error("Field: no generator (unreachable)");
    if (q_ == 2) generator_ = 1;

    exp_.resize(q_ - 1);
    log_.assign(q_, 0);
    std::uint32_t cur = 1;
    for (std::uint32_t i = 0; i + 1 < q_; ++i) {
        exp_[i] = cur;
        log_[cur] = i;
        cur = raw_mul(cur, generator_);
    }
    if (cur != 1) throw std::logic_error("Field: generator order mismatch (unreachable)");
}

std::uint32_t Field::add(std::uint32_t a, std::uint32_t b) const {
    // Digit-wise addition mod p on the packed base-p representations.
    std::uint32_t out = 0, place = 1;
    while (a || b) {
        std::uint32_t d = (a % p_ + b % p_) % p_;
        out += d * place;
        place *= p_;
        a /= p_;
        b /= p_;
    }
    return out;
}

std::uint32_t Field::neg(std::uint32_t a) const {
    std::uint32_t out = 0, place = 1;
    while (a) {
        std::uint32_t d = a % p_;
        out += (d ? p_ - d : 0) * place;
        place *= p_;
        a /= p_;
    }
    return out;
}

std::uint32_t Field::mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    std::uint64_t l = std::uint64_t(log_[a]) + log_[b];
    if (l >= q_ - 1) l -= q_ - 1;
    return exp_[l];
}

std::uint32_t Field::inv(std::uint32_t a) const {
    if (a == 0) throw std::invalid_argument("Field::inv: zero has no inverse");
    std::uint32_t l = log_[a];
    return exp_[l == 0 ? 0 : q_ - 1 - l];
}

std::uint32_t Field::embed(std::uint32_t c) const {
    if (c >= p_) throw std::invalid_argument("Field::embed: constant out of range");
    return c;
}

std::uint32_t Field::pow_u64(std::uint32_t x, std::uint64_t e) const {
    if (x == 0) return e == 0 ? 1u : 0u;
    std::uint64_t r = e % (q_ - 1);
    std::uint64_t l = std::uint64_t(log_[x]) * r % (q_ - 1);
    return exp_[l];
}

std::uint32_t Field::pow_big(std::uint32_t x, const BigNat& e) const {
    if (sgn(e) < 0) throw std::invalid_argument("Field::pow_big: negative exponent");
    if (x == 0) return sgn(e) == 0 ? 1u : 0u;
    std::uint64_t r = mod_u64(e, q_ - 1);
    std::uint64_t l = std::uint64_t(log_[x]) * r % (q_ - 1);
    return exp_[l];
}

PointEnumerator::PointEnumerator(const Field& f, std::uint32_t n, std::uint64_t cap) : f_(&f), n_(n) {
    if (n == 0) throw std::invalid_argument("PointEnumerator: arity must be positive");
    count_ = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        if (count_ > cap / f.q())
            throw std::invalid_argument("PointEnumerator: q^n exceeds the sweep cap of " + std::to_string(cap));
        count_ *= f.q();
    }
}

void PointEnumerator::point(std::uint64_t idx, std::vector<std::uint32_t>& out) const {
    out.assign(n_, 0);
    for (std::uint32_t i = n_; i-- > 0;) {
        out[i] = static_cast<std::uint32_t>(idx % f_->q());
        idx /= f_->q();
    }
}

}  // namespace stci
