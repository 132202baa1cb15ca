#include <odesym/parse.hpp>

#include <cctype>
#include <optional>
#include <vector>

namespace odesym {

namespace {

enum class Tok { Num, Var, Plus, Minus, Star, Caret, Slash, LParen, RParen, Equals, Comma, End };

struct Token {
    Tok kind;
    std::size_t pos = 0;
    std::string text;   // digits for Num
    VarId var;          // for Var
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_ws();
            if (i_ >= text_.size()) {
                out.push_back({Tok::End, i_, "", {}});
                return out;
            }
            const std::size_t start = i_;
            const char c = text_[i_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string digits;
                while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_])))
                    digits += text_[i_++];
                out.push_back({Tok::Num, start, digits, {}});
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(c))) {
                std::string word;
                while (i_ < text_.size() &&
                       std::isalnum(static_cast<unsigned char>(text_[i_])))
                    word += text_[i_++];
                if (word == "y" && i_ < text_.size() && text_[i_] == '\'') {
                    ++i_;
                    if (i_ < text_.size() && text_[i_] == '\'') {
                        ++i_;
                        out.push_back({Tok::Var, start, "y''", VarId::y2()});
                    } else {
                        out.push_back({Tok::Var, start, "y'", VarId::y1()});
                    }
                    continue;
                }
                if (word == "x") out.push_back({Tok::Var, start, word, VarId::x()});
                else if (word == "y") out.push_back({Tok::Var, start, word, VarId::y()});
                else if (word == "y1") out.push_back({Tok::Var, start, word, VarId::y1()});
                else if (word == "y2") out.push_back({Tok::Var, start, word, VarId::y2()});
                else throw ParseError("unknown identifier '" + word + "'", start);
                continue;
            }
            ++i_;
            switch (c) {
                case '+': out.push_back({Tok::Plus, start, "+", {}}); break;
                case '-': out.push_back({Tok::Minus, start, "-", {}}); break;
                case '*': out.push_back({Tok::Star, start, "*", {}}); break;
                case '^': out.push_back({Tok::Caret, start, "^", {}}); break;
                case '/': out.push_back({Tok::Slash, start, "/", {}}); break;
                case '(': out.push_back({Tok::LParen, start, "(", {}}); break;
                case ')': out.push_back({Tok::RParen, start, ")", {}}); break;
                case '=': out.push_back({Tok::Equals, start, "=", {}}); break;
                case ',': out.push_back({Tok::Comma, start, ",", {}}); break;
                default:
                    throw ParseError(std::string("unexpected character '") + c + "'", start);
            }
        }
    }

private:
    void skip_ws() {
        while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
    }

    std::string_view text_;
    std::size_t i_ = 0;
};

class Parser {
public:
    explicit Parser(std::string_view text) : toks_(Lexer(text).run()) {}

    // expr ("=" expr)? End
    Poly equation() {
        Poly lhs = expr();
        if (peek().kind == Tok::Equals) {
            advance();
            Poly rhs = expr();
            lhs = lhs - rhs;
        }
        expect_end();
        return lhs;
    }

    // expr "," expr End
    std::pair<Poly, Poly> field_pair() {
        Poly xi = expr();
        if (peek().kind != Tok::Comma)
            throw ParseError("expected ',' between field components", peek().pos);
        advance();
        Poly eta = expr();
        expect_end();
        return {xi, eta};
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& advance() { return toks_[pos_++]; }

    void expect_end() {
        if (peek().kind != Tok::End)
            throw ParseError("unexpected trailing input '" + peek().text + "'", peek().pos);
    }

    Poly expr() {
        Poly acc = term();
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            const bool plus = advance().kind == Tok::Plus;
            Poly rhs = term();
            acc = plus ? acc + rhs : acc - rhs;
        }
        return acc;
    }

    Poly term() {
        Poly acc = factor();
        while (peek().kind == Tok::Star) {
            advance();
            acc = acc * factor();
        }
        return acc;
    }

    Poly factor() {
        Poly b = base();
        if (peek().kind == Tok::Caret) {
            advance();
            if (peek().kind != Tok::Num)
                throw ParseError("exponent must be a nonnegative integer", peek().pos);
            const Token& t = advance();
            b = b.pow(parse_u32(t));
        }
        return b;
    }

    Poly base() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Minus:
                advance();
                return -factor();
            case Tok::LParen: {
                advance();
                Poly inner = expr();
                if (peek().kind != Tok::RParen) throw ParseError("expected ')'", peek().pos);
                advance();
                return inner;
            }
            case Tok::Var:
                advance();
                return Poly::var(t.var);
            case Tok::Num: {
                advance();
                Rat value = Rat::from_string(t.text);
                if (peek().kind == Tok::Slash) {
                    advance();
                    if (peek().kind != Tok::Num)
                        throw ParseError("expected denominator after '/'", peek().pos);
                    const Token& d = advance();
                    Rat den = Rat::from_string(d.text);
                    if (den.is_zero()) throw ParseError("denominator must be positive", d.pos);
                    value /= den;
                }
                return Poly::constant(value);
            }
            default:
                throw ParseError("expected a value, variable, or '('", t.pos);
        }
    }

    std::uint32_t parse_u32(const Token& t) {
        unsigned long v = 0;
        try {
            v = std::stoul(t.text);
        } catch (const std::exception&) {
            throw ParseError("exponent out of range", t.pos);
        }
        if (v > 64) throw ParseError("exponent too large", t.pos);
        return static_cast<std::uint32_t>(v);
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text) { return Parser(text).equation(); }

OdeInput parse_ode(std::string_view text) {
    Poly f = Parser(text).equation();
    if (f.is_zero() || f.is_constant())
        throw DegenerateOdeError("equation reduces to a constant");
    const bool has_y2 = f.contains(VarId::y2());
    const bool has_y1 = f.contains(VarId::y1());
    if (!has_y1 && !has_y2)
        throw DegenerateOdeError("equation involves neither y' nor y''");
    return {std::move(f), has_y2 ? 2 : 1};
}

PointField parse_field(std::string_view text) {
    auto [xi, eta] = Parser(text).field_pair();
    for (const Poly* p : {&xi, &eta}) {
        if (p->contains(VarId::y1()) || p->contains(VarId::y2()))
            throw ParseError("field components must depend on x, y only", 0);
    }
    return PointField(std::move(xi), std::move(eta));
}

namespace {

std::string monomial_str(const Monomial& m) {
    std::string s;
    for (const auto& [var, exp] : m.factors()) {
        if (!s.empty()) s += "*";
        s += var.name();
        if (exp > 1) s += "^" + std::to_string(exp);
    }
    return s;
}

}  // namespace

std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        const bool neg = c.sign() < 0;
        if (first) {
            if (neg) s += "-";
            first = false;
        } else {
            s += neg ? " - " : " + ";
        }
        const Rat mag = c.abs();
        const std::string ms = monomial_str(m);
        if (ms.empty()) {
            s += mag.str();
        } else if (mag.is_one()) {
            s += ms;
        } else {
            s += mag.str() + "*" + ms;
        }
    }
    return s;
}

std::string to_string(const PointField& f) { return to_string(f.xi) + ", " + to_string(f.eta); }

}  // namespace odesym
