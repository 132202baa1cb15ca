#include <odesym/detsys.hpp>

#include <map>
#include <stdexcept>

namespace odesym {

namespace {

VarId top_var(const OdeInput& ode) { return ode.order == 2 ? VarId::y2() : VarId::y1(); }

PseudoDivision reduced_defect(const OdeInput& ode, const PointField& f) {
    const ProlongedField pf = prolong(f, ode.order);
    const Poly raw = apply(pf, ode.f);
    return prem(raw, ode.f, top_var(ode));
}

}  // namespace

Ansatz Ansatz::of_degree(std::uint32_t degree) {
    Ansatz a;
    a.degree_ = degree;
    for (std::uint32_t t = 0; t <= degree; ++t)
        for (std::uint32_t xe = t + 1; xe-- > 0;)
            a.monomials_.push_back(
                Monomial::var(VarId::x(), xe).times(Monomial::var(VarId::y(), t - xe)));
    return a;
}

PointField Ansatz::field() const {
    const std::size_t m = monomials_.size();
    Poly xi, eta;
    for (std::size_t j = 0; j < m; ++j) {
        xi += Poly::term(monomials_[j].times(Monomial::var(VarId::ansatz(static_cast<std::uint32_t>(j)))),
                         Rat(1));
        eta += Poly::term(
            monomials_[j].times(Monomial::var(VarId::ansatz(static_cast<std::uint32_t>(m + j)))),
            Rat(1));
    }
    return PointField(std::move(xi), std::move(eta));
}

PointField Ansatz::field_from_solution(std::span<const Rat> coords) const {
    const std::size_t m = monomials_.size();
    if (coords.size() != 2 * m)
        throw std::invalid_argument("Ansatz: coordinate vector has wrong length");
    Poly xi, eta;
    for (std::size_t j = 0; j < m; ++j) {
        xi += Poly::term(monomials_[j], coords[j]);
        eta += Poly::term(monomials_[j], coords[m + j]);
    }
    return PointField(std::move(xi), std::move(eta));
}

Poly symmetry_defect(const OdeInput& ode, const PointField& f) {
    return reduced_defect(ode, f).remainder;
}

VerifyResult verify(const OdeInput& ode, const PointField& f) {
    if (!f.is_concrete())
        throw std::invalid_argument("verify: field carries ansatz unknowns");
    PseudoDivision red = reduced_defect(ode, f);
    VerifyResult out;
    out.is_symmetry = red.remainder.is_zero();
    out.cofactor = std::move(red.quotient);
    out.power = red.power;
    out.defect = std::move(red.remainder);
    return out;
}

DeterminingSystem assemble_system(const OdeInput& ode, std::uint32_t degree) {
    Ansatz ansatz = Ansatz::of_degree(degree);
    const Poly defect = symmetry_defect(ode, ansatz.field());

    // Group terms by their jet-variable part; the cofactor of each group
    // must be a homogeneous linear form in the unknowns.
    std::map<Monomial, std::map<std::size_t, Rat>, MonomialOrder> rows;
    for (const auto& [mono, coeff] : defect.terms()) {
        Monomial jet_part;
        std::size_t unknown = ansatz.unknown_count();
        std::uint32_t unknown_power = 0;
        for (const auto& [var, exp] : mono.factors()) {
            if (var.is_ansatz()) {
                unknown = var.ansatz_index();
                unknown_power += exp;
            } else {
                jet_part = jet_part.times(Monomial::var(var, exp));
            }
        }
        if (unknown == ansatz.unknown_count() || unknown_power != 1)
            throw std::logic_error("assemble_system: defect is not homogeneous linear in unknowns");
        rows[jet_part][unknown] += coeff;
    }

    RatMatrix matrix(rows.size(), ansatz.unknown_count());
    std::size_t i = 0;
    for (const auto& [jet_mono, form] : rows) {
        for (const auto& [unknown, coeff] : form) matrix.at(i, unknown) = coeff;
        ++i;
    }
    return {std::move(ansatz), std::move(matrix)};
}

std::vector<PointField> solve_symmetries(const OdeInput& ode, std::uint32_t degree) {
    const DeterminingSystem sys = assemble_system(ode, degree);
    std::vector<PointField> fields;
    for (const auto& v : nullspace(sys.matrix)) fields.push_back(sys.ansatz.field_from_solution(v));
    return fields;
}

Monomial leading_coeff_content(const OdeInput& ode) {
    const Poly lc = ode.f.leading_coeff(top_var(ode));
    bool first = true;
    Monomial content;
    for (const auto& [mono, coeff] : lc.terms()) {
        content = first ? mono : content.gcd(mono);
        first = false;
    }
    return content;
}

}  // namespace odesym
