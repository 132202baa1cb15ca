#pragma once

#include <odesym/rat.hpp>

#include <cstddef>
#include <optional>
#include <vector>

namespace odesym {

// Dense matrix of exact rationals. Dimensions are fixed at construction.
class RatMatrix {
public:
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RatMatrix from_rows(const std::vector<std::vector<Rat>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rat& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rat& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rat> data_;
};

// Exact rank via fraction-free (Bareiss) elimination on the
// denominator-cleared integer matrix. Pivot choice: leftmost eligible
// column, then largest absolute numerator, then lowest row index.
std::size_t rank(const RatMatrix& m);

// Reduced row-echelon form, exact rational Gauss-Jordan.
RatMatrix rref(const RatMatrix& m);

// Canonical nullspace basis: one vector per free column of the RREF,
// in ascending column order, with a unit in the free position.
std::vector<std::vector<Rat>> nullspace(const RatMatrix& m);

// True iff the row spans agree: rank(a) == rank(b) == rank(a stacked on b).
// Throws std::invalid_argument when vector lengths differ.
bool span_equal(const std::vector<std::vector<Rat>>& a, const std::vector<std::vector<Rat>>& b);

// Unique solution of A x = b when the system is consistent and A has full
// column rank; std::nullopt when inconsistent. Throws std::invalid_argument
// on size mismatch or column-rank deficiency.
std::optional<std::vector<Rat>> solve_exact(const RatMatrix& a, const std::vector<Rat>& b);

}  // namespace odesym
