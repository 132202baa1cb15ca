#pragma once

#include <odesym/jet.hpp>
#include <odesym/linalg.hpp>

#include <cstddef>
#include <optional>
#include <vector>

namespace odesym {

// Commutator of plane vector fields:
//   [X, Y] = (X(xi_Y) - Y(xi_X)) d/dx + (X(eta_Y) - Y(eta_X)) d/dy.
PointField bracket(const PointField& a, const PointField& b);

// Multiplication table [X_i, X_j] = sum_k c[i][j][k] X_k.
struct StructureConstants {
    std::size_t dim = 0;
    std::vector<std::vector<std::vector<Rat>>> c;

    const Rat& at(std::size_t i, std::size_t j, std::size_t k) const { return c[i][j][k]; }
};

struct AlgebraReport {
    std::size_t dimension = 0;
    bool closed = false;
    std::optional<StructureConstants> structure;  // present iff closed
    std::size_t killing_rank = 0;                 // meaningful iff closed
    std::vector<std::size_t> derived_dims;        // dims of g', g'', ... until stable
};

// Exact rank of the Killing matrix B[a][b] = tr(ad X_a ad X_b).
std::size_t killing_rank(const StructureConstants& sc);

// Dimensions of the derived series [g,g], [[g,g],[g,g]], ... computed from
// the structure constants, recorded until stabilization (capped at dim steps).
std::vector<std::size_t> derived_series_dims(const StructureConstants& sc);

// Expresses every pairwise bracket in the given basis by exact linear
// solve. closed means all brackets were representable. Throws
// std::invalid_argument when the basis is linearly dependent.
AlgebraReport closure(const std::vector<PointField>& basis);

// True iff the two field lists span the same subspace of coefficient
// vectors (over the union of their monomials).
bool fields_span_equal(const std::vector<PointField>& a, const std::vector<PointField>& b);

}  // namespace odesym
