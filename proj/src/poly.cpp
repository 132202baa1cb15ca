#include <odesym/poly.hpp>

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace odesym {

std::string VarId::name() const {
    switch (id_) {
        case 0: return "x";
        case 1: return "y";
        case 2: return "y1";
        case 3: return "y2";
        default: return "c" + std::to_string(id_ - 4);
    }
}

Monomial Monomial::var(VarId v, std::uint32_t e) {
    Monomial m;
    if (e > 0) m.factors_.push_back({v, e});
    return m;
}

std::uint32_t Monomial::degree_in(VarId v) const {
    for (const auto& [var, exp] : factors_)
        if (var == v) return exp;
    return 0;
}

std::uint32_t Monomial::total_degree() const {
    std::uint32_t d = 0;
    for (const auto& [var, exp] : factors_) d += exp;
    return d;
}

Monomial Monomial::times(const Monomial& o) const {
    Monomial r;
    r.factors_.reserve(factors_.size() + o.factors_.size());
    auto a = factors_.begin();
    auto b = o.factors_.begin();
    while (a != factors_.end() && b != o.factors_.end()) {
        if (a->first == b->first) {
            r.factors_.push_back({a->first, a->second + b->second});
            ++a;
            ++b;
        } else if (a->first < b->first) {
            r.factors_.push_back(*a++);
        } else {
            r.factors_.push_back(*b++);
        }
    }
    r.factors_.insert(r.factors_.end(), a, factors_.end());
    r.factors_.insert(r.factors_.end(), b, o.factors_.end());
    return r;
}

Monomial Monomial::gcd(const Monomial& o) const {
    Monomial r;
    auto a = factors_.begin();
    auto b = o.factors_.begin();
    while (a != factors_.end() && b != o.factors_.end()) {
        if (a->first == b->first) {
            r.factors_.push_back({a->first, std::min(a->second, b->second)});
            ++a;
            ++b;
        } else if (a->first < b->first) {
            ++a;
        } else {
            ++b;
        }
    }
    return r;
}

Monomial Monomial::divide_by(const Monomial& o) const {
    Monomial r;
    auto a = factors_.begin();
    auto b = o.factors_.begin();
    while (a != factors_.end()) {
        if (b == o.factors_.end() || a->first < b->first) {
            r.factors_.push_back(*a++);
        } else if (a->first == b->first) {
            if (a->second < b->second) throw std::invalid_argument("Monomial: not divisible");
            if (a->second > b->second) r.factors_.push_back({a->first, a->second - b->second});
            ++a;
            ++b;
        } else {
            throw std::invalid_argument("Monomial: not divisible");
        }
    }
    if (b != o.factors_.end()) throw std::invalid_argument("Monomial: not divisible");
    return r;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    const auto da = a.total_degree();
    const auto db = b.total_degree();
    if (da != db) return da > db;
    auto ia = a.factors().begin();
    auto ib = b.factors().begin();
    while (ia != a.factors().end() && ib != b.factors().end()) {
        if (ia->first != ib->first) return ia->first < ib->first;
        if (ia->second != ib->second) return ia->second > ib->second;
        ++ia;
        ++ib;
    }
    // Equal total degree with one factor list a prefix of the other can
    // only happen for identical monomials.
    return false;
}

Poly Poly::constant(Rat c) {
    Poly p;
    p.insert_term(Monomial{}, c);
    return p;
}

Poly Poly::var(VarId v) { return var_pow(v, 1); }

Poly Poly::var_pow(VarId v, std::uint32_t e) {
    Poly p;
    p.insert_term(Monomial::var(v, e), Rat(1));
    return p;
}

Poly Poly::term(Monomial m, Rat c) {
    Poly p;
    p.insert_term(m, c);
    return p;
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first.is_unit();
}

Rat Poly::constant_value() const {
    if (terms_.empty()) return Rat(0);
    if (!is_constant()) throw std::logic_error("Poly: not a constant");
    return terms_.begin()->second;
}

void Poly::insert_term(const Monomial& m, const Rat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) insert_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) insert_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.insert_term(ma.times(mb), ca * cb);
    return r;
}

Poly operator*(const Rat& c, const Poly& p) {
    Poly r;
    if (c.is_zero()) return r;
    for (const auto& [m, pc] : p.terms_) r.terms_.emplace(m, c * pc);
    return r;
}

Poly Poly::pow(std::uint32_t e) const {
    Poly r = Poly::constant(Rat(1));
    for (std::uint32_t i = 0; i < e; ++i) r = r * *this;
    return r;
}

Poly Poly::pdiff(VarId v) const {
    Poly r;
    for (const auto& [m, c] : terms_) {
        const auto e = m.degree_in(v);
        if (e == 0) continue;
        Monomial dm = m.divide_by(Monomial::var(v));
        r.insert_term(dm, c * Rat(static_cast<long>(e)));
    }
    return r;
}

Poly Poly::subst(VarId v, const Poly& r) const {
    // Collect coefficients by power of v, then evaluate by Horner.
    std::map<std::uint32_t, Poly> by_power;
    for (const auto& [m, c] : terms_) {
        const auto e = m.degree_in(v);
        Monomial rest = e == 0 ? m : m.divide_by(Monomial::var(v, e));
        by_power[e] += Poly::term(rest, c);
    }
    if (by_power.empty()) return Poly{};
    Poly acc;
    std::uint32_t prev = 0;
    for (auto it = by_power.rbegin(); it != by_power.rend(); ++it) {
        if (!acc.is_zero())
            for (std::uint32_t i = it->first; i < prev; ++i) acc = acc * r;
        acc += it->second;
        prev = it->first;
    }
    for (std::uint32_t i = 0; i < prev; ++i) acc = acc * r;
    return acc;
}

std::uint32_t Poly::degree_in(VarId v) const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree_in(v));
    return d;
}

std::uint32_t Poly::total_degree() const {
    // Map order is graded-descending, so the first term carries the degree.
    return terms_.empty() ? 0 : terms_.begin()->first.total_degree();
}

bool Poly::contains(VarId v) const {
    for (const auto& [m, c] : terms_)
        if (m.contains(v)) return true;
    return false;
}

bool Poly::has_ansatz_vars() const {
    for (const auto& [m, c] : terms_)
        for (const auto& [var, exp] : m.factors())
            if (var.is_ansatz()) return true;
    return false;
}

Poly Poly::coeff_of(VarId v, std::uint32_t k) const {
    Poly r;
    for (const auto& [m, c] : terms_) {
        if (m.degree_in(v) != k) continue;
        Monomial rest = k == 0 ? m : m.divide_by(Monomial::var(v, k));
        r.insert_term(rest, c);
    }
    return r;
}

PseudoDivision prem(const Poly& g, const Poly& f, VarId v) {
    const auto df = f.degree_in(v);
    if (df == 0)
        throw std::invalid_argument("prem: divisor has no " + v.name() + " dependence");
    const Poly lcf = f.leading_coeff(v);
    PseudoDivision out;
    out.remainder = g;
    while (!out.remainder.is_zero() && out.remainder.degree_in(v) >= df) {
        const auto dr = out.remainder.degree_in(v);
        Poly s = out.remainder.leading_coeff(v) * Poly::var_pow(v, dr - df);
        out.remainder = lcf * out.remainder - s * f;
        out.quotient = lcf * out.quotient + s;
        ++out.power;
    }
    // lc^power * g = q*f + r, rechecked by expansion in debug builds.
    assert(lcf.pow(out.power) * g == out.quotient * f + out.remainder);
    return out;
}

}  // namespace odesym
