#include <odesym/liealg.hpp>

#include <map>
#include <set>
#include <stdexcept>

namespace odesym {

namespace {

// Derivative of g(x,y) along the field.
Poly along(const PointField& f, const Poly& g) {
    return f.xi * g.pdiff(VarId::x()) + f.eta * g.pdiff(VarId::y());
}

// Coefficient vectors over the union of monomials of all components:
// xi coordinates first, then eta coordinates.
std::vector<std::vector<Rat>> coordinatize(const std::vector<const PointField*>& fields) {
    std::set<Monomial, MonomialOrder> monos;
    for (const auto* f : fields) {
        for (const auto& [m, c] : f->xi.terms()) monos.insert(m);
        for (const auto& [m, c] : f->eta.terms()) monos.insert(m);
    }
    std::map<Monomial, std::size_t, MonomialOrder> index;
    std::size_t n = 0;
    for (const auto& m : monos) index.emplace(m, n++);

    std::vector<std::vector<Rat>> out;
    out.reserve(fields.size());
    for (const auto* f : fields) {
        std::vector<Rat> v(2 * n, Rat(0));
        for (const auto& [m, c] : f->xi.terms()) v[index.at(m)] = c;
        for (const auto& [m, c] : f->eta.terms()) v[n + index.at(m)] = c;
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

PointField bracket(const PointField& a, const PointField& b) {
    return PointField(along(a, b.xi) - along(b, a.xi), along(a, b.eta) - along(b, a.eta));
}

std::size_t killing_rank(const StructureConstants& sc) {
    const std::size_t n = sc.dim;
    RatMatrix killing(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Rat sum(0);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t k = 0; k < n; ++k) sum += sc.at(a, i, k) * sc.at(b, k, i);
            killing.at(a, b) = sum;
        }
    return rank(killing);
}

std::vector<std::size_t> derived_series_dims(const StructureConstants& sc) {
    const std::size_t n = sc.dim;

    // Bracket of coordinate vectors through the structure constants.
    auto coord_bracket = [&](const std::vector<Rat>& u, const std::vector<Rat>& v) {
        std::vector<Rat> w(n, Rat(0));
        for (std::size_t i = 0; i < n; ++i) {
            if (u[i].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (v[j].is_zero()) continue;
                for (std::size_t k = 0; k < n; ++k) w[k] += u[i] * v[j] * sc.at(i, j, k);
            }
        }
        return w;
    };

    // Canonical spanning set of the derived subalgebra of span(current).
    auto derive = [&](const std::vector<std::vector<Rat>>& current) {
        std::vector<std::vector<Rat>> brackets;
        for (std::size_t i = 0; i < current.size(); ++i)
            for (std::size_t j = i + 1; j < current.size(); ++j)
                brackets.push_back(coord_bracket(current[i], current[j]));
        if (brackets.empty()) return std::vector<std::vector<Rat>>{};
        RatMatrix m = RatMatrix::from_rows(brackets);
        const RatMatrix r = rref(m);
        std::vector<std::vector<Rat>> basis;
        for (std::size_t i = 0; i < r.rows(); ++i) {
            std::vector<Rat> row(n);
            bool nonzero = false;
            for (std::size_t j = 0; j < n; ++j) {
                row[j] = r.at(i, j);
                nonzero = nonzero || !row[j].is_zero();
            }
            if (nonzero) basis.push_back(std::move(row));
        }
        return basis;
    };

    std::vector<std::vector<Rat>> current;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rat> e(n, Rat(0));
        e[i] = Rat(1);
        current.push_back(std::move(e));
    }

    std::vector<std::size_t> dims;
    std::size_t prev = n;
    for (std::size_t step = 0; step < n; ++step) {
        current = derive(current);
        dims.push_back(current.size());
        if (current.size() == prev || current.empty()) break;
        prev = current.size();
    }
    return dims;
}

AlgebraReport closure(const std::vector<PointField>& basis) {
    AlgebraReport report;
    report.dimension = basis.size();
    if (basis.empty()) {
        report.closed = true;
        report.structure = StructureConstants{};
        return report;
    }

    const std::size_t n = basis.size();

    // All pairwise brackets share one coordinatization with the basis so
    // bracket monomials outside the basis span are representable as
    // inconsistent systems, not index errors.
    std::vector<PointField> brackets;
    brackets.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) brackets.push_back(bracket(basis[i], basis[j]));

    std::vector<const PointField*> all;
    for (const auto& f : basis) all.push_back(&f);
    for (const auto& f : brackets) all.push_back(&f);
    const auto coords = coordinatize(all);
    const std::size_t ambient = coords.empty() ? 0 : coords[0].size();

    RatMatrix basis_cols(ambient, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < ambient; ++i) basis_cols.at(i, j) = coords[j][i];
    if (rank(basis_cols) != n)
        throw std::invalid_argument("closure: basis fields are linearly dependent");

    StructureConstants sc;
    sc.dim = n;
    sc.c.assign(n, std::vector<std::vector<Rat>>(n, std::vector<Rat>(n, Rat(0))));

    report.closed = true;
    std::size_t b = 0;
    for (std::size_t i = 0; i < n && report.closed; ++i) {
        for (std::size_t j = i + 1; j < n && report.closed; ++j, ++b) {
            const auto sol = solve_exact(basis_cols, coords[n + b]);
            if (!sol) {
                report.closed = false;
                break;
            }
            for (std::size_t k = 0; k < n; ++k) {
                sc.c[i][j][k] = (*sol)[k];
                sc.c[j][i][k] = -(*sol)[k];
            }
        }
    }

    if (report.closed) {
        report.structure = sc;
        report.killing_rank = killing_rank(sc);
        report.derived_dims = derived_series_dims(sc);
    }
    return report;
}

bool fields_span_equal(const std::vector<PointField>& a, const std::vector<PointField>& b) {
    std::vector<const PointField*> all;
    for (const auto& f : a) all.push_back(&f);
    for (const auto& f : b) all.push_back(&f);
    const auto coords = coordinatize(all);
    std::vector<std::vector<Rat>> ca(coords.begin(), coords.begin() + static_cast<long>(a.size()));
    std::vector<std::vector<Rat>> cb(coords.begin() + static_cast<long>(a.size()), coords.end());
    return span_equal(ca, cb);
}

}  // namespace odesym
