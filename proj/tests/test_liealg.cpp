#include <odesym/liealg.hpp>

#include <doctest.h>

#include <odesym/detsys.hpp>
#include <odesym/parse.hpp>

#include "testutil.hpp"

using namespace odesym;
using testutil::Rng;

namespace {

std::vector<PointField> parse_fields(std::initializer_list<const char*> texts) {
    std::vector<PointField> out;
    for (const char* t : texts) out.push_back(parse_field(t));
    return out;
}

}  // namespace

TEST_CASE("commutators of plane fields") {
    CHECK(bracket(parse_field("1, 0"), parse_field("x, 0")) == parse_field("1, 0"));
    CHECK(bracket(parse_field("1, 0"), parse_field("x^2, -x*y")) == parse_field("2*x, -y"));
    CHECK(bracket(parse_field("x, 0"), parse_field("0, x*y")) == parse_field("0, x*y"));
}

TEST_CASE("bracket is antisymmetric and vanishes on the diagonal") {
    Rng rng(818181);
    for (int i = 0; i < 200; ++i) {
        const PointField f = testutil::random_field(rng);
        const PointField g = testutil::random_field(rng);
        CHECK(bracket(f, f) == PointField());
        const PointField fg = bracket(f, g);
        const PointField gf = bracket(g, f);
        CHECK(fg.xi == -gf.xi);
        CHECK(fg.eta == -gf.eta);
    }
}

TEST_CASE("flat-model algebra closes with nondegenerate Killing form") {
    const auto basis = solve_symmetries(parse_ode("y''=0"), 2);
    REQUIRE(basis.size() == 8);
    const AlgebraReport report = closure(basis);
    CHECK(report.closed);
    CHECK(report.dimension == 8);
    CHECK(report.killing_rank == 8);
    REQUIRE(!report.derived_dims.empty());
    CHECK(report.derived_dims.front() == 8);  // perfect algebra
}

TEST_CASE("structure constants satisfy antisymmetry and the Jacobi identity") {
    const std::vector<std::vector<PointField>> bases = {
        solve_symmetries(parse_ode("y''=0"), 2),
        solve_symmetries(parse_ode("y*y''=2*(y')^2"), 3),
    };
    for (const auto& basis : bases) {
        const AlgebraReport report = closure(basis);
        REQUIRE(report.closed);
        REQUIRE(report.structure.has_value());
        const StructureConstants& sc = *report.structure;
        const std::size_t n = sc.dim;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) CHECK(sc.at(i, j, k) == -sc.at(j, i, k));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    for (std::size_t l = 0; l < n; ++l) {
                        Rat sum(0);
                        for (std::size_t m = 0; m < n; ++m)
                            sum += sc.at(i, j, m) * sc.at(m, k, l) +
                                   sc.at(j, k, m) * sc.at(m, i, l) +
                                   sc.at(k, i, m) * sc.at(m, j, l);
                        CHECK(sum == Rat(0));
                    }
    }
}

TEST_CASE("structure constants of the affine line algebra, by hand") {
    // [d/dx, x d/dx] = d/dx, so c(0,1,.) = (1, 0).
    const AlgebraReport report = closure(parse_fields({"1, 0", "x, 0"}));
    REQUIRE(report.structure.has_value());
    const StructureConstants& sc = *report.structure;
    CHECK(sc.at(0, 1, 0) == Rat(1));
    CHECK(sc.at(0, 1, 1) == Rat(0));
    CHECK(sc.at(1, 0, 0) == Rat(-1));
    CHECK(sc.at(0, 0, 0) == Rat(0));
}

TEST_CASE("two-dimensional nonabelian algebra has Killing rank one") {
    const AlgebraReport report = closure(parse_fields({"1, 0", "2/3*x, y"}));
    CHECK(report.closed);
    CHECK(report.dimension == 2);
    CHECK(report.killing_rank == 1);
    REQUIRE(report.derived_dims.size() == 2);
    CHECK(report.derived_dims[0] == 1);
    CHECK(report.derived_dims[1] == 0);
}

TEST_CASE("translations form an abelian algebra with zero Killing form") {
    const AlgebraReport report = closure(parse_fields({"1, 0", "0, 1"}));
    CHECK(report.closed);
    CHECK(report.killing_rank == 0);
    REQUIRE(!report.derived_dims.empty());
    CHECK(report.derived_dims.front() == 0);
}

TEST_CASE("closure detects a basis that does not close") {
    // [d/dx, x^2 d/dx] = 2x d/dx lies outside the span.
    const AlgebraReport report = closure(parse_fields({"1, 0", "x^2, 0"}));
    CHECK(!report.closed);
    CHECK(!report.structure.has_value());
}

TEST_CASE("closure rejects dependent bases") {
    CHECK_THROWS_AS(closure(parse_fields({"x, 0", "2*x, 0"})), std::invalid_argument);
    CHECK_THROWS_AS(closure(parse_fields({"0, 0"})), std::invalid_argument);
}

TEST_CASE("killing rank distinguishes the corpus algebras exactly") {
    const auto flat = closure(solve_symmetries(parse_ode("y''=0"), 2));
    REQUIRE(flat.structure.has_value());
    CHECK(killing_rank(*flat.structure) == 8);

    const auto abelian = closure(parse_fields({"1, 0", "0, 1"}));
    REQUIRE(abelian.structure.has_value());
    CHECK(killing_rank(*abelian.structure) == 0);

    const auto affine = closure(parse_fields({"1, 0", "2/3*x, y"}));
    REQUIRE(affine.structure.has_value());
    CHECK(killing_rank(*affine.structure) == 1);
}

TEST_CASE("solved corpus bases close or their brackets verify") {
    const char* odes[] = {"y*y''=2*(y')^2", "y*y''=(y')^2", "y*y''=3*(y')^2"};
    const std::uint32_t degs[] = {3, 2, 4};
    for (int i = 0; i < 3; ++i) {
        const OdeInput ode = parse_ode(odes[i]);
        const auto basis = solve_symmetries(ode, degs[i]);
        const AlgebraReport report = closure(basis);
        if (!report.closed) {
            for (std::size_t a = 0; a < basis.size(); ++a)
                for (std::size_t b = a + 1; b < basis.size(); ++b)
                    CHECK(verify(ode, bracket(basis[a], basis[b])).is_symmetry);
        } else {
            CHECK(report.structure.has_value());
        }
    }
}

TEST_CASE("field span comparison matches hand examples") {
    CHECK(fields_span_equal(parse_fields({"1, 0", "0, 1"}), parse_fields({"1, 1", "1, -1"})));
    CHECK(!fields_span_equal(parse_fields({"1, 0"}), parse_fields({"0, 1"})));
    CHECK(fields_span_equal({}, {}));
    CHECK(fields_span_equal(parse_fields({"x, y"}), parse_fields({"3*x, 3*y"})));
    CHECK(!fields_span_equal(parse_fields({"x, y"}), parse_fields({"x, y", "y, x"})));
}
