#pragma once

#include <odesym/jet.hpp>
#include <odesym/poly.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace odesym {

// Lexical or syntactic problem in an input expression, with the byte
// offset of the offending token.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Structurally unusable equation: no jet variables, or constant / zero
// left-hand side after moving everything to one side.
class DegenerateOdeError : public std::runtime_error {
public:
    explicit DegenerateOdeError(const std::string& what) : std::runtime_error(what) {}
};

// An ODE in implicit form f = 0 with f polynomial in x, y, y1, y2.
// order is 2 when f involves y2, otherwise 1 (f then involves y1).
struct OdeInput {
    Poly f;
    int order = 0;
};

// Grammar:
//   equation := expr "=" expr | expr
//   expr     := term (("+"|"-") term)*
//   term     := factor ("*" factor)*
//   factor   := base ("^" nonneg-int)?
//   base     := "x" | "y" | "y1" | "y2" | "y'" | "y''" | rational | "(" expr ")" | "-" factor
//   rational := int ("/" posint)?
// Implicit multiplication is rejected; y'/y'' normalize to y1/y2.
Poly parse_poly(std::string_view text);

// "lhs = rhs" maps to f = lhs - rhs. Throws ParseError on syntax problems,
// DegenerateOdeError when f is constant or has no jet variable.
OdeInput parse_ode(std::string_view text);

// "xi-expr, eta-expr" with both expressions in x, y only.
PointField parse_field(std::string_view text);

// Deterministic canonical form: terms in descending graded-lex order,
// factors in variable order, unit coefficients and exponents elided.
// parse_poly(to_string(p)) == p whenever p uses only grammar variables.
std::string to_string(const Poly& p);
std::string to_string(const PointField& f);

}  // namespace odesym
