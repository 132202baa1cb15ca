#pragma once

#include <odesym/poly.hpp>

namespace odesym {

// Vector field xi(x,y) d/dx + eta(x,y) d/dy on the base plane. Components
// may carry ansatz unknowns; concrete fields have none.
struct PointField {
    Poly xi;
    Poly eta;

    PointField() = default;
    // Throws std::invalid_argument if a component depends on y1 or y2.
    PointField(Poly xi_, Poly eta_);

    bool is_zero() const { return xi.is_zero() && eta.is_zero(); }
    bool is_concrete() const { return !xi.has_ansatz_vars() && !eta.has_ansatz_vars(); }

    friend bool operator==(const PointField& a, const PointField& b) {
        return a.xi == b.xi && a.eta == b.eta;
    }
    friend bool operator!=(const PointField& a, const PointField& b) { return !(a == b); }
};

PointField operator+(const PointField& a, const PointField& b);
PointField operator-(const PointField& a, const PointField& b);
PointField operator*(const Rat& c, const PointField& f);

// Point field lifted to the jet space: eta1 acts on y1, eta2 on y2.
//   eta1 = D_x(eta) - y1 D_x(xi)
//   eta2 = D_x(eta1) - y2 D_x(xi)   (second-order lifts only)
struct ProlongedField {
    PointField base;
    int order = 2;  // 1 or 2
    Poly eta1;      // in x, y, y1
    Poly eta2;      // in x, y, y1, y2; affine in y2; zero for order 1
};

// Truncated total derivative d/dx + y1 d/dy + y2 d/dy1.
// Throws std::invalid_argument if p depends on y2.
Poly total_derivative(const Poly& p);

// Throws std::invalid_argument unless order is 1 or 2.
ProlongedField prolong(const PointField& f, int order);

// Directional derivative of f along the prolonged field:
//   xi df/dx + eta df/dy + eta1 df/dy1 + eta2 df/dy2.
Poly apply(const ProlongedField& pf, const Poly& f);

}  // namespace odesym
