#pragma once

#include <odesym/jet.hpp>
#include <odesym/linalg.hpp>
#include <odesym/parse.hpp>
#include <odesym/poly.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace odesym {

// Polynomial ansatz for a point field: both components run over all
// monomials in x, y of total degree <= degree. Unknown c_j is the xi
// coefficient of monomials()[j]; c_{M+j} the eta coefficient, where
// M = monomials().size(), so there are (d+1)(d+2) unknowns in total.
class Ansatz {
public:
    static Ansatz of_degree(std::uint32_t degree);

    std::uint32_t degree() const { return degree_; }
    const std::vector<Monomial>& monomials() const { return monomials_; }
    std::size_t unknown_count() const { return 2 * monomials_.size(); }

    // The field with symbolic coefficients.
    PointField field() const;
    // Instantiate from a coordinate vector of length unknown_count().
    PointField field_from_solution(std::span<const Rat> coords) const;

private:
    std::uint32_t degree_ = 0;
    std::vector<Monomial> monomials_;  // degree ascending, then x-power descending
};

// Homogeneous linear system whose nullspace is the degree-bounded
// polynomial symmetry algebra of the ODE. One row per monomial in the
// jet variables appearing in the reduced defect; one column per
// ansatz unknown.
struct DeterminingSystem {
    Ansatz ansatz;
    RatMatrix matrix;
};

// Certificate data for a verified field:
//   lc^power * apply(prolong(X), F) = cofactor * F + defect
// with is_symmetry iff defect == 0.
struct VerifyResult {
    bool is_symmetry = false;
    Poly cofactor;
    std::uint32_t power = 0;
    Poly defect;
};

// Pseudo-remainder of the prolonged field applied to F, reduced modulo F
// in the top jet variable (y2 for order 2, y1 for order 1). Zero iff the
// prolonged field is tangent to {F = 0} away from the leading-coefficient
// locus.
Poly symmetry_defect(const OdeInput& ode, const PointField& f);

// Full reduction data; f must be concrete (no ansatz unknowns).
VerifyResult verify(const OdeInput& ode, const PointField& f);

DeterminingSystem assemble_system(const OdeInput& ode, std::uint32_t degree);

// Canonical nullspace basis of the determining system, mapped back to
// point fields. Deterministic: reduced-echelon free-column pattern.
std::vector<PointField> solve_symmetries(const OdeInput& ode, std::uint32_t degree);

// Common monomial factor of the leading coefficient of F in the top jet
// variable; non-unit means the reduction degenerates on its zero locus
// and the CLI warns about it.
Monomial leading_coeff_content(const OdeInput& ode);

}  // namespace odesym
