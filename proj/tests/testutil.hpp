#pragma once

#include <odesym/jet.hpp>
#include <odesym/poly.hpp>

#include <cstdint>
#include <random>
#include <vector>

namespace testutil {

using Rng = std::mt19937_64;

inline odesym::Rat random_rat(Rng& rng, long max_abs_num = 9, long max_den = 4) {
    std::uniform_int_distribution<long> num(-max_abs_num, max_abs_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return odesym::Rat(num(rng), den(rng));
}

inline odesym::Rat random_nonzero_rat(Rng& rng, long max_abs_num = 9, long max_den = 4) {
    while (true) {
        odesym::Rat r = random_rat(rng, max_abs_num, max_den);
        if (!r.is_zero()) return r;
    }
}

// Sparse random polynomial: up to max_terms monomials with per-variable
// exponents chosen so each monomial's total degree stays <= max_deg.
inline odesym::Poly random_poly(Rng& rng, const std::vector<odesym::VarId>& vars,
                                std::uint32_t max_deg, int max_terms) {
    std::uniform_int_distribution<int> term_count(0, max_terms);
    odesym::Poly p;
    const int terms = term_count(rng);
    for (int t = 0; t < terms; ++t) {
        odesym::Monomial m;
        std::uint32_t remaining = max_deg;
        for (const auto v : vars) {
            std::uniform_int_distribution<std::uint32_t> expd(0, remaining);
            const std::uint32_t e = expd(rng);
            if (e > 0) m = m.times(odesym::Monomial::var(v, e));
            remaining -= e;
        }
        p += odesym::Poly::term(m, random_rat(rng));
    }
    return p;
}

inline odesym::Poly random_nonzero_poly(Rng& rng, const std::vector<odesym::VarId>& vars,
                                        std::uint32_t max_deg, int max_terms) {
    while (true) {
        odesym::Poly p = random_poly(rng, vars, max_deg, max_terms);
        if (!p.is_zero()) return p;
    }
}

inline odesym::PointField random_field(Rng& rng, std::uint32_t max_deg = 3, int max_terms = 4) {
    const std::vector<odesym::VarId> xy{odesym::VarId::x(), odesym::VarId::y()};
    return odesym::PointField(random_poly(rng, xy, max_deg, max_terms),
                              random_poly(rng, xy, max_deg, max_terms));
}

// First-order differential operator on the jet space, used to cross-check
// prolongation against operator commutators.
struct JetOp {
    odesym::Poly cx, cy, cy1, cy2;

    odesym::Poly operator()(const odesym::Poly& g) const {
        using odesym::VarId;
        return cx * g.pdiff(VarId::x()) + cy * g.pdiff(VarId::y()) + cy1 * g.pdiff(VarId::y1()) +
               cy2 * g.pdiff(VarId::y2());
    }
};

inline JetOp as_operator(const odesym::ProlongedField& pf) {
    return {pf.base.xi, pf.base.eta, pf.eta1, pf.eta2};
}

inline JetOp operator_commutator(const JetOp& p, const JetOp& q) {
    return {p(q.cx) - q(p.cx), p(q.cy) - q(p.cy), p(q.cy1) - q(p.cy1), p(q.cy2) - q(p.cy2)};
}

}  // namespace testutil
