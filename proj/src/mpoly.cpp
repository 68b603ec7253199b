#include "stci/mpoly.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <stdexcept>

namespace stci {

bool monomial_less(const Monomial& a, const Monomial& b) {
    // Lex with x_1 > x_2 > ...: at the first variable where the exponents
    // differ, the monomial with the larger exponent is the larger one. A
    // pair list that continues past a common prefix has a positive exponent
    // where the other has zero.
    std::size_t i = 0;
    for (; i < a.size() && i < b.size(); ++i) {
        if (a[i].first != b[i].first) return a[i].first > b[i].first;
        int c = cmp(a[i].second, b[i].second);
        if (c != 0) return c < 0;
    }
    return a.size() < b.size();
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first)
            out.push_back(a[i++]);
        else if (a[i].first > b[j].first)
            out.push_back(b[j++]);
        else {
            out.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i, ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back(b[j]);
    return out;
}

bool monomial_divides(const Monomial& d, const Monomial& m) {
    std::size_t j = 0;
    for (const auto& [var, e] : d) {
        while (j < m.size() && m[j].first < var) ++j;
        if (j == m.size() || m[j].first != var || m[j].second < e) return false;
    }
    return true;
}

Monomial monomial_quotient(const Monomial& m, const Monomial& d) {
    if (!monomial_divides(d, m)) throw std::invalid_argument("monomial_quotient: not divisible");
    Monomial out;
    std::size_t j = 0;
    for (const auto& [var, e] : m) {
        if (j < d.size() && d[j].first == var) {
            BigNat r = e - d[j].second;
            if (sgn(r) > 0) out.emplace_back(var, r);
            ++j;
        } else {
            out.emplace_back(var, e);
        }
    }
    return out;
}

std::string monomial_str(const Monomial& m) {
    if (m.empty()) return "1";
    std::string out;
    for (const auto& [var, e] : m) {
        if (!out.empty()) out += "*";
        out += "x" + std::to_string(var);
        if (e != 1) out += "^" + to_decimal(e);
    }
    return out;
}

namespace {

void require_ring(const Polynomial& a, const Polynomial& b, const char* op) {
    if (a.p() == 0 || b.p() == 0) throw std::invalid_argument(std::string(op) + ": uninitialized polynomial");
    if (a.p() != b.p() || a.arity() != b.arity())
        throw std::invalid_argument(std::string(op) + ": ring mismatch");
}

using Accumulator = std::map<Monomial, std::uint32_t, bool (*)(const Monomial&, const Monomial&)>;

Accumulator make_acc() { return Accumulator(monomial_less); }

void acc_add(Accumulator& acc, const Monomial& m, std::uint64_t c, std::uint32_t p) {
    auto [it, fresh] = acc.try_emplace(m, 0);
    it->second = static_cast<std::uint32_t>((it->second + c) % p);
}

}  // namespace

Polynomial Polynomial::from_accumulator(std::uint32_t p, std::uint32_t arity, Accumulator&& acc) {
    Polynomial out;
    out.p_ = p;
    out.arity_ = arity;
    out.terms_.reserve(acc.size());
    for (auto it = acc.rbegin(); it != acc.rend(); ++it)
        if (it->second != 0) out.terms_.push_back({it->second, std::move(it->first)});
    return out;
}

Polynomial Polynomial::zero(std::uint32_t p, std::uint32_t arity) {
    if (p < 2) throw std::invalid_argument("Polynomial: characteristic must be at least 2");
    Polynomial out;
    out.p_ = p;
    out.arity_ = arity;
    return out;
}

Polynomial Polynomial::constant(std::uint32_t p, std::uint32_t arity, std::uint32_t c) {
    Polynomial out = zero(p, arity);
    c %= p;
    if (c) out.terms_.push_back({c, {}});
    return out;
}

Polynomial Polynomial::monomial(std::uint32_t p, std::uint32_t arity, Monomial m, std::uint32_t coeff) {
    Polynomial out = zero(p, arity);
    coeff %= p;
    if (coeff == 0) return out;
    std::uint32_t prev = 0;
    for (const auto& [var, e] : m) {
        if (var == 0 || var <= prev || var > arity)
            throw std::invalid_argument("Polynomial::monomial: bad variable list");
        if (sgn(e) <= 0) throw std::invalid_argument("Polynomial::monomial: exponent must be positive");
        prev = var;
    }
    out.terms_.push_back({coeff, std::move(m)});
    return out;
}

Polynomial Polynomial::variable(std::uint32_t p, std::uint32_t arity, std::uint32_t var) {
    return var_pow(p, arity, var, 1);
}

Polynomial Polynomial::var_pow(std::uint32_t p, std::uint32_t arity, std::uint32_t var, const BigNat& e) {
    if (sgn(e) == 0) return constant(p, arity, 1);
    return monomial(p, arity, {{var, e}});
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    require_ring(*this, o, "operator+");
    auto acc = make_acc();
    for (const auto& t : terms_) acc_add(acc, t.mono, t.coeff, p_);
    for (const auto& t : o.terms_) acc_add(acc, t.mono, t.coeff, p_);
    return from_accumulator(p_, arity_, std::move(acc));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
    if (p_ == 0) throw std::invalid_argument("operator-: uninitialized polynomial");
    Polynomial out = *this;
    for (auto& t : out.terms_) t.coeff = p_ - t.coeff;
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_ring(*this, o, "operator*");
    auto acc = make_acc();
    for (const auto& a : terms_)
        for (const auto& b : o.terms_)
            acc_add(acc, monomial_mul(a.mono, b.mono), std::uint64_t(a.coeff) * b.coeff, p_);
    return from_accumulator(p_, arity_, std::move(acc));
}

std::uint32_t Polynomial::coeff_of(const Monomial& m) const {
    for (const auto& t : terms_)
        if (t.mono == m) return t.coeff;
    return 0;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (p_ != o.p_ || arity_ != o.arity_ || terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].coeff != o.terms_[i].coeff || terms_[i].mono != o.terms_[i].mono) return false;
    return true;
}

Polynomial Polynomial::scaled(std::uint32_t c) const {
    if (p_ == 0) throw std::invalid_argument("scaled: uninitialized polynomial");
    c %= p_;
    if (c == 0) return zero(p_, arity_);
    Polynomial out = *this;
    for (auto& t : out.terms_) t.coeff = static_cast<std::uint32_t>(std::uint64_t(t.coeff) * c % p_);
    return out;
}

Polynomial Polynomial::pow(const BigNat& e) const {
    if (p_ == 0) throw std::invalid_argument("pow: uninitialized polynomial");
    if (sgn(e) < 0) throw std::invalid_argument("pow: negative exponent");
    if (sgn(e) == 0) return constant(p_, arity_, 1);
    if (terms_.empty()) return zero(p_, arity_);
    if (terms_.size() == 1) {
        // c^e by Fermat (c is a unit), exponents scaled directly.
        const Term& t = terms_[0];
        std::uint32_t c = 1;
        std::uint64_t r = mod_u64(e, p_ - 1);
        for (std::uint64_t i = 0; i < r; ++i) c = static_cast<std::uint32_t>(std::uint64_t(c) * t.coeff % p_);
        Monomial m;
        m.reserve(t.mono.size());
        for (const auto& [var, exp] : t.mono) m.emplace_back(var, exp * e);
        return monomial(p_, arity_, std::move(m), c);
    }
    // Split e = p^t * m: the p-part is the Frobenius (coefficientwise
    // identity on F_p), the rest is square-and-multiply.
    BigNat rest;
    BigNat base(static_cast<unsigned long>(p_));
    mpz_remove(rest.get_mpz_t(), e.get_mpz_t(), base.get_mpz_t());
    BigNat frob = e / rest;
    Polynomial powered = *this;
    if (frob != 1)
        for (auto& t : powered.terms_)
            for (auto& [var, exp] : t.mono) exp *= frob;
    if (rest == 1) return powered;
    if (!rest.fits_ulong_p())
        throw std::domain_error("pow: non-p part of the exponent is too large for dense powering");
    std::uint64_t m = rest.get_ui();
    Polynomial out = constant(p_, arity_, 1);
    Polynomial sq = powered;
    while (m) {
        if (m & 1) out = out * sq;
        m >>= 1;
        if (m) sq = sq * sq;
    }
    return out;
}

Polynomial Polynomial::extend_arity(std::uint32_t new_arity) const {
    if (p_ == 0) throw std::invalid_argument("extend_arity: uninitialized polynomial");
    if (new_arity < arity_) throw std::invalid_argument("extend_arity: cannot shrink");
    Polynomial out = *this;
    out.arity_ = new_arity;
    return out;
}

Polynomial Polynomial::substitute(const std::map<std::uint32_t, Polynomial>& images, std::uint32_t out_arity) const {
    if (p_ == 0) throw std::invalid_argument("substitute: uninitialized polynomial");
    for (const auto& [var, img] : images) {
        if (var == 0 || var > arity_) throw std::invalid_argument("substitute: image for variable outside the ring");
        if (img.p() != p_ || img.arity() != out_arity)
            throw std::invalid_argument("substitute: image in the wrong ring");
    }
    Polynomial out = zero(p_, out_arity);
    for (const auto& t : terms_) {
        Polynomial prod = constant(p_, out_arity, t.coeff);
        for (const auto& [var, e] : t.mono) {
            auto it = images.find(var);
            if (it != images.end()) {
                prod = prod * it->second.pow(e);
            } else {
                if (var > out_arity)
                    throw std::invalid_argument("substitute: variable x" + std::to_string(var) +
                                                " has no image and exceeds the output arity");
                prod = prod * var_pow(p_, out_arity, var, e);
            }
            if (prod.is_zero()) break;
        }
        out += prod;
    }
    return out;
}

Polynomial Polynomial::fold_exponents(const Field& f) const {
    if (p_ == 0) throw std::invalid_argument("fold_exponents: uninitialized polynomial");
    if (f.p() != p_) throw std::invalid_argument("fold_exponents: field characteristic mismatch");
    const std::uint32_t qm1 = f.q() - 1;
    auto acc = make_acc();
    for (const auto& t : terms_) {
        Monomial m;
        m.reserve(t.mono.size());
        for (const auto& [var, e] : t.mono) {
            if (e <= qm1) {
                m.emplace_back(var, e);
            } else {
                BigNat folded = 1 + ((e - 1) % qm1);
                m.emplace_back(var, std::move(folded));
            }
        }
        acc_add(acc, m, t.coeff, p_);
    }
    return from_accumulator(p_, arity_, std::move(acc));
}

std::uint32_t Polynomial::evaluate(const Field& f, const std::vector<std::uint32_t>& point) const {
    if (p_ == 0) throw std::invalid_argument("evaluate: uninitialized polynomial");
    if (f.p() != p_) throw std::invalid_argument("evaluate: field characteristic mismatch");
    if (point.size() != arity_) throw std::invalid_argument("evaluate: point arity mismatch");
    std::uint32_t sum = 0;
    for (const auto& t : terms_) {
        std::uint32_t prod = f.embed(t.coeff);
        for (const auto& [var, e] : t.mono) {
            if (prod == 0) break;
            prod = f.mul(prod, f.pow_big(point[var - 1], e));
        }
        sum = f.add(sum, prod);
    }
    return sum;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& t : terms_) {
        if (!out.empty()) out += " + ";
        if (t.mono.empty()) {
            out += std::to_string(t.coeff);
        } else {
            if (t.coeff != 1) out += std::to_string(t.coeff) + "*";
            out += monomial_str(t.mono);
        }
    }
    return out;
}

Polynomial Polynomial::parse(const std::string& s, std::uint32_t p, std::uint32_t arity) {
    auto fail = [&](const std::string& why) -> Polynomial {
        throw std::invalid_argument("Polynomial::parse: " + why + " in \"" + s + "\"");
    };
    auto acc = make_acc();
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < s.size() && s[i] == ' ') ++i; };
    auto read_digits = [&]() -> std::string {
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) fail("expected digits");
        return s.substr(start, i - start);
    };
    skip_ws();
    if (i == s.size()) fail("empty input");
    bool first = true;
    while (first || i < s.size()) {
        if (!first) {
            skip_ws();
            if (i >= s.size() || s[i] != '+') fail("expected '+'");
            ++i;
        }
        first = false;
        skip_ws();
        // One term: '*'-separated factors, each a decimal constant or
        // x<var>[^<exp>]. Repeated variables multiply together.
        std::uint64_t coeff = 1;
        std::map<std::uint32_t, BigNat> exps;
        bool want_factor = true;
        while (want_factor) {
            skip_ws();
            if (i < s.size() && s[i] == 'x') {
                ++i;
                std::uint64_t var = std::stoull(read_digits());
                if (var == 0 || var > arity) fail("variable x" + std::to_string(var) + " outside arity");
                BigNat e = 1;
                if (i < s.size() && s[i] == '^') {
                    ++i;
                    e = from_decimal(read_digits());
                }
                exps[static_cast<std::uint32_t>(var)] += e;
            } else if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                coeff = coeff * mod_u64(from_decimal(read_digits()), p) % p;
            } else {
                fail("expected a factor");
            }
            skip_ws();
            want_factor = i < s.size() && s[i] == '*';
            if (want_factor) ++i;
        }
        Monomial m;
        for (auto& [var, e] : exps)
            if (sgn(e) > 0) m.emplace_back(var, std::move(e));
        acc_add(acc, m, coeff, p);
        skip_ws();
    }
    return from_accumulator(p, arity, std::move(acc));
}

void Polynomial::check_invariants() const {
    if (p_ < 2) throw std::logic_error("Polynomial: missing ring");
    for (const auto& t : terms_) {
        if (t.coeff == 0 || t.coeff >= p_) throw std::logic_error("Polynomial: coefficient out of range");
        std::uint32_t prev = 0;
        for (const auto& [var, e] : t.mono) {
            if (var == 0 || var <= prev || var > arity_) throw std::logic_error("Polynomial: bad variable order");
            if (sgn(e) <= 0) throw std::logic_error("Polynomial: nonpositive exponent");
            prev = var;
        }
    }
    for (std::size_t i = 1; i < terms_.size(); ++i)
        if (!monomial_less(terms_[i].mono, terms_[i - 1].mono))
            throw std::logic_error("Polynomial: terms out of order");
}

Polynomial Polynomial::sum_of_products(const std::vector<std::pair<const Polynomial*, const Polynomial*>>& prods) {
    if (prods.empty()) throw std::invalid_argument("sum_of_products: empty input");
    const std::uint32_t p = prods[0].first->p(), arity = prods[0].first->arity();
    auto acc = make_acc();
    for (const auto& [a, b] : prods) {
        require_ring(*a, *b, "sum_of_products");
        if (a->p() != p || a->arity() != arity)
            throw std::invalid_argument("sum_of_products: ring mismatch across summands");
        for (const auto& ta : a->terms())
            for (const auto& tb : b->terms())
                acc_add(acc, monomial_mul(ta.mono, tb.mono), std::uint64_t(ta.coeff) * tb.coeff, p);
    }
    return from_accumulator(p, arity, std::move(acc));
}

bool in_monomial_ideal(const Polynomial& f, const std::vector<Monomial>& gens) {
    return !first_term_outside(f, gens).first;
}

std::pair<bool, Monomial> first_term_outside(const Polynomial& f, const std::vector<Monomial>& gens) {
    if (gens.empty()) throw std::invalid_argument("first_term_outside: empty generator list");
    for (const auto& t : f.terms()) {
        bool covered = false;
        for (const auto& g : gens)
            if (monomial_divides(g, t.mono)) {
                covered = true;
                break;
            }
        if (!covered) return {true, t.mono};
    }
    return {false, {}};
}

std::map<std::uint32_t, Polynomial> decompose_pure_power(const Polynomial& f,
                                                         const std::vector<std::uint32_t>& vars,
                                                         const BigNat& e) {
    if (vars.empty()) throw std::invalid_argument("decompose_pure_power: no candidate variables");
    if (sgn(e) <= 0) throw std::invalid_argument("decompose_pure_power: exponent must be positive");
    std::map<std::uint32_t, Polynomial> out;
    for (const auto& t : f.terms()) {
        std::uint32_t chosen = 0;
        for (std::uint32_t v : vars) {
            Monomial d{{v, e}};
            if (monomial_divides(d, t.mono)) {
                chosen = v;
                break;
            }
        }
        if (chosen == 0)
            throw construction_error("decompose_pure_power: term " + monomial_str(t.mono) +
                                     " has no candidate variable with exponent at least " + to_decimal(e));
        Monomial q = monomial_quotient(t.mono, Monomial{{chosen, e}});
        auto it = out.find(chosen);
        if (it == out.end()) it = out.emplace(chosen, Polynomial::zero(f.p(), f.arity())).first;
        it->second += Polynomial::monomial(f.p(), f.arity(), std::move(q), t.coeff);
    }
    return out;
}

PolyMatrix::PolyMatrix(std::uint32_t p, std::uint32_t arity, std::uint32_t rows, std::uint32_t cols)
    : p_(p), arity_(arity), rows_(rows), cols_(cols), cells_(std::size_t(rows) * cols, Polynomial::zero(p, arity)) {}

Polynomial& PolyMatrix::at(std::uint32_t i, std::uint32_t j) {
    if (i == 0 || i > rows_ || j == 0 || j > cols_) throw std::out_of_range("PolyMatrix::at");
    return cells_[std::size_t(i - 1) * cols_ + (j - 1)];
}

const Polynomial& PolyMatrix::at(std::uint32_t i, std::uint32_t j) const {
    return const_cast<PolyMatrix*>(this)->at(i, j);
}

namespace {

// Determinants of the column-subset minors of `m`, expanded along the top
// row of the window of rows that fits the subset (a subset of k columns uses
// rows rows-k+1..rows). Memoizing on the column mask shares every inner
// minor across the cofactor computations below.
class MinorTable {
public:
    explicit MinorTable(const PolyMatrix& m) : m_(&m) {}

    const Polynomial& det(std::uint32_t mask) {
        auto it = memo_.find(mask);
        if (it != memo_.end()) return it->second;
        std::uint32_t k = static_cast<std::uint32_t>(std::popcount(mask));
        Polynomial out;
        if (k == 0) {
            out = Polynomial::constant(m_->p(), m_->arity(), 1);
        } else {
            std::uint32_t row = m_->rows() - k + 1;
            out = Polynomial::zero(m_->p(), m_->arity());
            std::uint32_t idx = 0;
            for (std::uint32_t j = 1; j <= m_->cols(); ++j) {
                std::uint32_t bit = 1u << (j - 1);
                if (!(mask & bit)) continue;
                const Polynomial& entry = m_->at(row, j);
                if (!entry.is_zero()) {
                    Polynomial contrib = entry * det(mask & ~bit);
                    out += (idx % 2 == 0) ? contrib : -contrib;
                }
                ++idx;
            }
        }
        return memo_.emplace(mask, std::move(out)).first->second;
    }

private:
    const PolyMatrix* m_;
    std::map<std::uint32_t, Polynomial> memo_;
};

}  // namespace

std::vector<Polynomial> det_cofactors_last_row(const PolyMatrix& top) {
    if (top.cols() != top.rows() + 1)
        throw std::invalid_argument("det_cofactors_last_row: block must be r x (r+1)");
    if (top.cols() > 31) throw std::invalid_argument("det_cofactors_last_row: block too wide");
    const std::uint32_t r = top.rows();
    MinorTable minors(top);
    const std::uint32_t full = (1u << (r + 1)) - 1;
    std::vector<Polynomial> out;
    out.reserve(r + 1);
    for (std::uint32_t i = 1; i <= r + 1; ++i) {
        Polynomial minor = minors.det(full & ~(1u << (i - 1)));
        bool positive = ((r + 1) + i) % 2 == 0;
        out.push_back(positive ? minor : -minor);
    }
    return out;
}

}  // namespace stci
