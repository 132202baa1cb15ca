#pragma once

#include <odesym/rat.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace odesym {

// Variables live in a fixed totally ordered universe:
//   x < y < y1 < y2 < c0 < c1 < ...
// where y1, y2 are the jet coordinates for y', y'' and the c_i are
// ansatz unknowns introduced by the determining-system builder.
class VarId {
public:
    constexpr VarId() : id_(0) {}

    static constexpr VarId x() { return VarId(0); }
    static constexpr VarId y() { return VarId(1); }
    static constexpr VarId y1() { return VarId(2); }
    static constexpr VarId y2() { return VarId(3); }
    static constexpr VarId ansatz(std::uint32_t i) { return VarId(4 + i); }

    constexpr bool is_jet_var() const { return id_ < 4; }
    constexpr bool is_ansatz() const { return id_ >= 4; }
    constexpr std::uint32_t ansatz_index() const { return id_ - 4; }
    constexpr std::uint32_t raw() const { return id_; }

    std::string name() const;

    friend constexpr bool operator==(VarId a, VarId b) { return a.id_ == b.id_; }
    friend constexpr bool operator!=(VarId a, VarId b) { return a.id_ != b.id_; }
    friend constexpr bool operator<(VarId a, VarId b) { return a.id_ < b.id_; }
    friend constexpr bool operator>(VarId a, VarId b) { return a.id_ > b.id_; }

private:
    constexpr explicit VarId(std::uint32_t id) : id_(id) {}
    std::uint32_t id_;
};

// Power product of variables. Factors are sorted by VarId and carry
// strictly positive exponents; the empty monomial is 1.
class Monomial {
public:
    using Factor = std::pair<VarId, std::uint32_t>;

    Monomial() = default;
    static Monomial var(VarId v, std::uint32_t e = 1);

    const std::vector<Factor>& factors() const { return factors_; }
    bool is_unit() const { return factors_.empty(); }
    std::uint32_t degree_in(VarId v) const;
    std::uint32_t total_degree() const;
    bool contains(VarId v) const { return degree_in(v) > 0; }

    Monomial times(const Monomial& o) const;
    // Componentwise min of exponents; the largest common divisor monomial.
    Monomial gcd(const Monomial& o) const;
    // Requires divisibility.
    Monomial divide_by(const Monomial& o) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

private:
    std::vector<Factor> factors_;
};

// Graded lexicographic order, descending: higher total degree first; ties
// broken at the first variable (in VarId order) with differing exponent,
// larger exponent first. Used for canonical printing and iteration.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Canonical multivariate polynomial over exact rationals. The term map
// never stores zero coefficients, so equality of maps is equality of
// polynomials.
class Poly {
public:
    using TermMap = std::map<Monomial, Rat, MonomialOrder>;

    Poly() = default;  // zero
    static Poly constant(Rat c);
    static Poly var(VarId v);
    static Poly var_pow(VarId v, std::uint32_t e);
    static Poly term(Monomial m, Rat c);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Requires is_constant().
    Rat constant_value() const;
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rat& c, const Poly& p);
    Poly pow(std::uint32_t e) const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Formal partial derivative with respect to v.
    Poly pdiff(VarId v) const;
    // Every occurrence of v replaced by r, expanded to canonical form.
    Poly subst(VarId v, const Poly& r) const;

    std::uint32_t degree_in(VarId v) const;  // 0 for the zero polynomial
    std::uint32_t total_degree() const;      // 0 for the zero polynomial
    bool contains(VarId v) const;
    bool has_ansatz_vars() const;

    // Coefficient of v^k as a polynomial free of v.
    Poly coeff_of(VarId v, std::uint32_t k) const;
    Poly leading_coeff(VarId v) const { return coeff_of(v, degree_in(v)); }

private:
    void insert_term(const Monomial& m, const Rat& c);
    TermMap terms_;
};

// Pseudo-division result: lc_v(f)^power * g = quotient * f + remainder
// with deg_v(remainder) < deg_v(f) and power the number of reduction
// steps taken (at most max(0, deg_v(g) - deg_v(f) + 1)).
struct PseudoDivision {
    Poly remainder;
    Poly quotient;
    std::uint32_t power = 0;
};

// Throws std::invalid_argument if f does not contain v.
PseudoDivision prem(const Poly& g, const Poly& f, VarId v);

}  // namespace odesym
