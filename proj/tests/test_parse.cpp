#include <odesym/parse.hpp>

#include <doctest.h>

#include "testutil.hpp"

using namespace odesym;
using testutil::Rng;

namespace {

const Poly X = Poly::var(VarId::x());
const Poly Y = Poly::var(VarId::y());
const Poly Y1 = Poly::var(VarId::y1());
const Poly Y2 = Poly::var(VarId::y2());

Poly c(long n) { return Poly::constant(Rat(n)); }

}  // namespace

TEST_CASE("equations move everything to the left-hand side") {
    auto ode = parse_ode("y*y'' = 2*(y')^2");
    CHECK(ode.f == Y * Y2 - c(2) * Y1 * Y1);
    CHECK(ode.order == 2);

    ode = parse_ode("y'' = 0");
    CHECK(ode.f == Y2);
    CHECK(ode.order == 2);

    ode = parse_ode("y = (y')^3");
    CHECK(ode.f == Y - Y1.pow(3));
    CHECK(ode.order == 1);
}

TEST_CASE("primed and indexed spellings are interchangeable") {
    CHECK(parse_ode("y*y''=2*(y')^2").f == parse_ode("y*y2=2*y1^2").f);
    CHECK(parse_poly("y'") == Y1);
    CHECK(parse_poly("y''") == Y2);
}

TEST_CASE("fields parse componentwise") {
    PointField f = parse_field("x^2, -x*y");
    CHECK(f.xi == X * X);
    CHECK(f.eta == -(X * Y));

    f = parse_field("0, y");
    CHECK(f.xi == Poly{});
    CHECK(f.eta == Y);

    f = parse_field("1, 0");
    CHECK(f.xi == c(1));
    CHECK(f.eta == Poly{});
}

TEST_CASE("rational literals and nested expressions") {
    CHECK(parse_poly("2/3*x") == Rat(2, 3) * X);
    CHECK(parse_poly("-2/3") == Poly::constant(Rat(-2, 3)));
    CHECK(parse_poly("(x + y)*(x - y)") == X * X - Y * Y);
    CHECK(parse_poly("-x^2") == -(X * X));
    CHECK(parse_poly("2^3") == c(8));
}

TEST_CASE("canonical printing") {
    CHECK(to_string(Y * Y2 - c(2) * Y1 * Y1) == "y*y2 - 2*y1^2");
    CHECK(to_string(Poly{}) == "0");
    CHECK(to_string(X) == "x");
    CHECK(to_string(-(X * Y) + X * X) == "x^2 - x*y");
    CHECK(to_string(Rat(-2, 3) * X + c(1)) == "-2/3*x + 1");
    CHECK(to_string(PointField(c(2) * X, -Y)) == "2*x, -y");
}

TEST_CASE("syntax errors carry a position") {
    CHECK_THROWS_AS(parse_ode("y** = 3"), ParseError);
    try {
        parse_ode("y1 + $");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 5);
    }
    CHECK_THROWS_AS(parse_poly("x^-1"), ParseError);
    CHECK_THROWS_AS(parse_poly("(x + y"), ParseError);
    CHECK_THROWS_AS(parse_poly("x /"), ParseError);
    CHECK_THROWS_AS(parse_poly(""), ParseError);
}

TEST_CASE("implicit multiplication and unknown names are rejected") {
    CHECK_THROWS_AS(parse_poly("2 x"), ParseError);
    CHECK_THROWS_AS(parse_poly("xy"), ParseError);
    CHECK_THROWS_AS(parse_poly("x y"), ParseError);
    CHECK_THROWS_AS(parse_poly("sin(x)"), ParseError);
}

TEST_CASE("degenerate equations are distinguished from syntax errors") {
    CHECK_THROWS_AS(parse_ode("x + y"), DegenerateOdeError);   // no jet variable
    CHECK_THROWS_AS(parse_ode("3 = 2"), DegenerateOdeError);   // constant
    CHECK_THROWS_AS(parse_ode("y'' = y''"), DegenerateOdeError);  // identically zero
}

TEST_CASE("field components must live on the base plane") {
    CHECK_THROWS_AS(parse_field("y1, 0"), ParseError);
    CHECK_THROWS_AS(parse_field("0, y''"), ParseError);
    CHECK_THROWS_AS(parse_field("x"), ParseError);  // missing component
}

TEST_CASE("print/parse round trip on corpus equations") {
    const char* odes[] = {
        "y''=0",
        "y*y''=2*(y')^2",
        "x*y*y''=2*y'*(x*y'+y)",
        "y*y''=(y')^2",
        "y*y''=3*(y')^2",
        "y*y''=5*(y')^2",
        "x*y''=-3*y'",
        "y'=0",
        "y=(y')^3",
    };
    for (const char* text : odes) {
        const Poly f = parse_ode(text).f;
        CHECK(parse_ode(to_string(f)).f == f);
    }
}

TEST_CASE("print/parse round trip on random polynomials") {
    Rng rng(424242);
    const std::vector<VarId> vars{VarId::x(), VarId::y(), VarId::y1(), VarId::y2()};
    for (int i = 0; i < 200; ++i) {
        const Poly p = testutil::random_poly(rng, vars, 4, 6);
        CHECK(parse_poly(to_string(p)) == p);
    }
}

TEST_CASE("arbitrary input never escapes the parser error contract") {
    // Random ASCII strings must either parse or throw one of the two
    // documented exception types; nothing else.
    Rng rng(13371337);
    const std::string alphabet = "xy12'^*/+-=(), \tqz$";
    for (int i = 0; i < 500; ++i) {
        std::string text;
        const std::size_t len = rng() % 24;
        for (std::size_t k = 0; k < len; ++k) text += alphabet[rng() % alphabet.size()];
        try {
            (void)parse_ode(text);
        } catch (const ParseError&) {
        } catch (const DegenerateOdeError&) {
        }
        try {
            (void)parse_field(text);
        } catch (const ParseError&) {
        }
    }
}

TEST_CASE("printing is injective on distinct random polynomials") {
    Rng rng(515151);
    const std::vector<VarId> vars{VarId::x(), VarId::y(), VarId::y1(), VarId::y2()};
    for (int i = 0; i < 200; ++i) {
        const Poly p = testutil::random_poly(rng, vars, 3, 4);
        const Poly q = testutil::random_poly(rng, vars, 3, 4);
        if (p != q) CHECK(to_string(p) != to_string(q));
    }
}
