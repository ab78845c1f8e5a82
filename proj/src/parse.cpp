#include "sfd/parse.hpp"

#include <cctype>
#include <string>

namespace sfd {
namespace {

// Keeps ((x+y)^4096)-style inputs from exhausting memory; degrees at desk
// scale stay far below this.
constexpr std::uint32_t kMaxExponent = 4096;

class Parser {
public:
    Parser(std::string_view text, int arity_hint) : text_(text), hint_(arity_hint) {}

    Polynomial run() {
        if (hint_ < 0 || hint_ > kMaxArity)
            throw ParseError("arity above supported limit " + std::to_string(kMaxArity), 1);
        Polynomial p = parse_expr();
        skip_ws();
        if (pos_ < text_.size()) fail("unexpected character; expected '+', '-' or '*'");
        int arity = std::max({max_var_, hint_, 1});
        // Built at full width; shrink to the declared arity.
        Polynomial out(arity);
        for (const auto& [m, c] : p.terms()) {
            std::vector<std::uint32_t> e(m.exponents().begin(), m.exponents().begin() + arity);
            out.add_term(Monomial(std::move(e)), c);
        }
        return out;
    }

private:
    std::string_view text_;
    int hint_;
    std::size_t pos_ = 0;
    int max_var_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_ + 1); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool consume(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial parse_expr() {
        bool negate = false;
        skip_ws();
        if (peek() == '-') {
            ++pos_;
            negate = true;
        } else if (peek() == '+') {
            fail("unexpected '+'");
        }
        Polynomial acc = parse_term();
        if (negate) acc = -acc;
        while (true) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                acc = acc + parse_term();
            } else if (c == '-') {
                ++pos_;
                acc = acc - parse_term();
            } else {
                return acc;
            }
        }
    }

    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        while (consume('*')) acc = acc * parse_factor();
        return acc;
    }

    Polynomial parse_factor() {
        Polynomial base = parse_base();
        if (peek() == '^') {
            ++pos_;
            if (peek() == '-') fail("negative exponent");
            base = base.pow(parse_uint());
        }
        return base;
    }

    Polynomial parse_base() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial inner = parse_expr();
            if (!consume(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_int_literal();
        if (c == 'x' || c == 'y' || c == 'z') return parse_variable();
        if (c == '\0') fail("unexpected end of input");
        fail(std::string("unexpected character '") + c + "'");
    }

    Polynomial parse_int_literal() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return Polynomial::constant(mpz_class(std::string(text_.substr(start, pos_ - start))),
                                    kMaxArity);
    }

    Polynomial parse_variable() {
        skip_ws();
        char c = text_[pos_++];
        int index;
        if (c == 'y') {
            index = 2;
        } else if (c == 'z') {
            index = 3;
        } else {  // 'x', optionally followed by a digit
            index = 1;
            if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                int d = text_[pos_] - '0';
                if (d == 0) fail("variable index must be 1..9");
                index = d;
                ++pos_;
            }
        }
        max_var_ = std::max(max_var_, index);
        return Polynomial::variable(index, kMaxArity);
    }

    std::uint32_t parse_uint() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected exponent");
        std::uint64_t value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
            if (value > kMaxExponent) fail("exponent too large");
            ++pos_;
        }
        return static_cast<std::uint32_t>(value);
    }
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, int arity_hint) {
    return Parser(text, arity_hint).run();
}

}  // namespace sfd
