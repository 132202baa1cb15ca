#include <odesym/linalg.hpp>

#include <gmpxx.h>

#include <stdexcept>
#include <utility>

namespace odesym {

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rat>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows[0].size();
    RatMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("RatMatrix: ragged rows");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

std::size_t rank(const RatMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    if (rows == 0 || cols == 0) return 0;

    // Clear denominators row by row; row scaling preserves rank.
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < cols; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).den().get_mpz_t());
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = m.at(i, j).num() * (l / m.at(i, j).den());
    }

    std::size_t r = 0;
    mpz_class prev = 1;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (sgn(a[i][col]) == 0) continue;
            if (piv == rows || mpz_cmpabs(a[i][col].get_mpz_t(), a[piv][col].get_mpz_t()) > 0)
                piv = i;
        }
        if (piv == rows) continue;
        std::swap(a[r], a[piv]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                mpz_class t = a[r][col] * a[i][j] - a[i][col] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev = a[r][col];
        ++r;
    }
    return r;
}

RatMatrix rref(const RatMatrix& m) {
    RatMatrix a = m;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (a.at(i, col).is_zero()) continue;
            if (piv == rows ||
                mpz_cmpabs(a.at(i, col).num().get_mpz_t(), a.at(piv, col).num().get_mpz_t()) > 0)
                piv = i;
        }
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a.at(r, j), a.at(piv, j));
        const Rat p = a.at(r, col);
        for (std::size_t j = col; j < cols; ++j) a.at(r, j) /= p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a.at(i, col).is_zero()) continue;
            const Rat f = a.at(i, col);
            for (std::size_t j = col; j < cols; ++j) a.at(i, j) -= f * a.at(r, j);
        }
        ++r;
    }
    return a;
}

std::vector<std::vector<Rat>> nullspace(const RatMatrix& m) {
    const std::size_t cols = m.cols();
    const RatMatrix r = rref(m);

    // Pivot column of each echelon row, in order.
    std::vector<std::size_t> pivot_col;
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t i = 0; i < r.rows(); ++i) {
        std::size_t j = 0;
        while (j < cols && r.at(i, j).is_zero()) ++j;
        if (j == cols) break;
        pivot_col.push_back(j);
        is_pivot[j] = true;
    }

    std::vector<std::vector<Rat>> basis;
    for (std::size_t j = 0; j < cols; ++j) {
        if (is_pivot[j]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[j] = Rat(1);
        for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -r.at(i, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool span_equal(const std::vector<std::vector<Rat>>& a, const std::vector<std::vector<Rat>>& b) {
    std::size_t dim = 0;
    bool dim_known = false;
    for (const auto* list : {&a, &b}) {
        for (const auto& v : *list) {
            if (!dim_known) {
                dim = v.size();
                dim_known = true;
            } else if (v.size() != dim) {
                throw std::invalid_argument("span_equal: ambient dimension mismatch");
            }
        }
    }
    if (!dim_known) return true;  // both empty

    auto rank_of = [dim](const std::vector<std::vector<Rat>>& rows_a,
                         const std::vector<std::vector<Rat>>& rows_b) {
        RatMatrix m(rows_a.size() + rows_b.size(), dim);
        std::size_t i = 0;
        for (const auto* list : {&rows_a, &rows_b})
            for (const auto& v : *list) {
                for (std::size_t j = 0; j < dim; ++j) m.at(i, j) = v[j];
                ++i;
            }
        return rank(m);
    };

    const std::size_t ra = rank_of(a, {});
    const std::size_t rb = rank_of(b, {});
    return ra == rb && rank_of(a, b) == ra;
}

std::optional<std::vector<Rat>> solve_exact(const RatMatrix& a, const std::vector<Rat>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve_exact: size mismatch");
    RatMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    const RatMatrix r = rref(aug);

    std::vector<Rat> x(a.cols(), Rat(0));
    std::size_t pivots = 0;
    const std::size_t width = a.cols() + 1;
    for (std::size_t i = 0; i < r.rows(); ++i) {
        std::size_t j = 0;
        while (j < width && r.at(i, j).is_zero()) ++j;
        if (j == width) continue;                 // zero row
        if (j == a.cols()) return std::nullopt;   // pivot in the rhs column
        x[j] = r.at(i, a.cols());
        ++pivots;
    }
    if (pivots != a.cols())
        throw std::invalid_argument("solve_exact: coefficient matrix lacks full column rank");
    return x;
}

}  // namespace odesym
