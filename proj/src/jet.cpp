#include <odesym/jet.hpp>

#include <stdexcept>

namespace odesym {

PointField::PointField(Poly xi_, Poly eta_) : xi(std::move(xi_)), eta(std::move(eta_)) {
    for (const Poly* p : {&xi, &eta}) {
        if (p->contains(VarId::y1()) || p->contains(VarId::y2()))
            throw std::invalid_argument("PointField: components must not depend on y1 or y2");
    }
}

PointField operator+(const PointField& a, const PointField& b) {
    return PointField(a.xi + b.xi, a.eta + b.eta);
}

PointField operator-(const PointField& a, const PointField& b) {
    return PointField(a.xi - b.xi, a.eta - b.eta);
}

PointField operator*(const Rat& c, const PointField& f) {
    return PointField(c * f.xi, c * f.eta);
}

Poly total_derivative(const Poly& p) {
    if (p.contains(VarId::y2()))
        throw std::invalid_argument("total_derivative: input depends on y2");
    return p.pdiff(VarId::x()) + Poly::var(VarId::y1()) * p.pdiff(VarId::y()) +
           Poly::var(VarId::y2()) * p.pdiff(VarId::y1());
}

ProlongedField prolong(const PointField& f, int order) {
    if (order != 1 && order != 2) throw std::invalid_argument("prolong: order must be 1 or 2");
    ProlongedField pf;
    pf.base = f;
    pf.order = order;
    const Poly dxi = total_derivative(f.xi);
    pf.eta1 = total_derivative(f.eta) - Poly::var(VarId::y1()) * dxi;
    if (order == 2) pf.eta2 = total_derivative(pf.eta1) - Poly::var(VarId::y2()) * dxi;
    return pf;
}

Poly apply(const ProlongedField& pf, const Poly& f) {
    Poly r = pf.base.xi * f.pdiff(VarId::x()) + pf.base.eta * f.pdiff(VarId::y()) +
             pf.eta1 * f.pdiff(VarId::y1());
    if (pf.order == 2) r += pf.eta2 * f.pdiff(VarId::y2());
    return r;
}

}  // namespace odesym
