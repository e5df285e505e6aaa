#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "identity.hpp"

namespace geoprod {

/// Recursive descent parser for the product/identity DSL.
/**
 * Grammar (whitespace between tokens is ignored):
 *
 *     identity        := product "=" product
 *     product         := "1" | term { "*" term }
 *     term            := "a" integer [ "^" exponent ]
 *     exponent        := signed_rational | "(" exp_expr ")"
 *     exp_expr        := exp_atom { ("+" | "-") exp_atom }
 *     exp_atom        := signed_rational [ ["*"] "pi" ] | "pi"
 *     signed_rational := ["-"] integer [ "/" integer ]
 *
 * Failures are reported as parse_error with the byte offset of the
 * offending token.
 */
class Parser {
public:
    explicit Parser(std::string_view input) : input_(input) {}

    StringProduct product_only() {
        StringProduct p = product();
        expect_end();
        return p;
    }

    Identity identity_only() {
        StringProduct lhs = product();
        skip_ws();
        if (!accept('=')) {
            fail("'=' or '*'");
        }
        StringProduct rhs = product();
        expect_end();
        return {std::move(lhs), std::move(rhs)};
    }

private:
    StringProduct product() {
        skip_ws();
        if (peek() == '1') {
            const std::size_t start = pos_;
            ++pos_;
            if (!std::isdigit(static_cast<unsigned char>(peek()))) {
                return StringProduct{};
            }
            pos_ = start;
        }
        std::vector<Factor> raw;
        raw.push_back(term());
        while (true) {
            skip_ws();
            if (!accept('*')) {
                break;
            }
            raw.push_back(term());
        }
        return normalize(std::move(raw));
    }

    Factor term() {
        skip_ws();
        if (!accept('a')) {
            fail("'a'");
        }
        skip_ws();
        const std::size_t at = pos_;
        const big_int index = integer("term index");
        if (index < 1) {
            throw parse_error(at, "index >= 1", "'" + index.str() + "'", parse_error::reason::invalid_index);
        }
        if (index > std::numeric_limits<index_t>::max()) {
            throw parse_error(at, "index that fits in 64 bits", "'" + index.str() + "'");
        }
        Factor f{static_cast<index_t>(index), ExactExponent{1}};
        skip_ws();
        if (accept('^')) {
            f.exponent = exponent();
        }
        return f;
    }

    ExactExponent exponent() {
        skip_ws();
        if (accept('(')) {
            ExactExponent e = exp_expr();
            skip_ws();
            if (!accept(')')) {
                fail("')'");
            }
            return e;
        }
        return signed_rational();
    }

    ExactExponent exp_expr() {
        ExactExponent e = exp_atom();
        while (true) {
            skip_ws();
            if (accept('+')) {
                e += exp_atom();
            } else if (accept('-')) {
                e -= exp_atom();
            } else {
                return e;
            }
        }
    }

    ExactExponent exp_atom() {
        skip_ws();
        if (accept_word("pi")) {
            return ExactExponent::pi_multiple(Rational(1));
        }
        Rational coeff = signed_rational();
        skip_ws();
        const std::size_t save = pos_;
        if (accept('*')) {
            skip_ws();
            if (!accept_word("pi")) {
                fail("'pi'");
            }
            return ExactExponent::pi_multiple(std::move(coeff));
        }
        pos_ = save;
        if (accept_word("pi")) {
            return ExactExponent::pi_multiple(std::move(coeff));
        }
        return ExactExponent{std::move(coeff)};
    }

    Rational signed_rational() {
        skip_ws();
        const bool negative = accept('-');
        skip_ws();
        big_int num = integer("integer");
        big_int den = 1;
        skip_ws();
        if (accept('/')) {
            skip_ws();
            const std::size_t at = pos_;
            den = integer("denominator");
            if (den == 0) {
                throw parse_error(at, "nonzero denominator", "'0'", parse_error::reason::zero_denominator);
            }
        }
        if (negative) {
            num = -num;
        }
        return Rational(num, den);
    }

    big_int integer(const char* what) {
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            ++pos_;
        }
        if (pos_ == start) {
            fail(what);
        }
        return parse_decimal(input_.substr(start, pos_ - start));
    }

    void expect_end() {
        skip_ws();
        if (pos_ != input_.size()) {
            fail("end of input");
        }
    }

    void skip_ws() {
        while (pos_ < input_.size() && std::isspace(static_cast<unsigned char>(input_[pos_]))) {
            ++pos_;
        }
    }

    char peek() const { return pos_ < input_.size() ? input_[pos_] : '\0'; }

    bool accept(char c) {
        if (pos_ < input_.size() && input_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool accept_word(std::string_view word) {
        if (input_.substr(pos_, word.size()) == word) {
            pos_ += word.size();
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(std::string expected) const {
        throw parse_error(pos_, std::move(expected), describe_found());
    }

    std::string describe_found() const {
        if (pos_ >= input_.size()) {
            return "end of input";
        }
        const auto c = static_cast<unsigned char>(input_[pos_]);
        if (std::isprint(c)) {
            return std::string("'") + input_[pos_] + "'";
        }
        static const char* hex = "0123456789abcdef";
        return std::string("byte 0x") + hex[c >> 4] + hex[c & 0xf];
    }

    std::string_view input_;
    std::size_t pos_ = 0;
};

inline StringProduct parse_product(std::string_view input) { return Parser(input).product_only(); }

inline Identity parse_identity(std::string_view input) { return Parser(input).identity_only(); }

enum class render_style { text, latex };

inline std::string latex_rational(const Rational& r) { return r.to_string(); }

/// Exponent in LaTeX form, pi part first: "5\pi+2", "\pi", "3/2".
inline std::string latex_exponent(const ExactExponent& e) {
    if (e.pi().is_zero()) {
        return latex_rational(e.rat());
    }
    std::string out;
    if (e.pi() == Rational(1)) {
        out = "\\pi";
    } else if (e.pi() == Rational(-1)) {
        out = "-\\pi";
    } else {
        out = latex_rational(e.pi()) + "\\pi";
    }
    if (e.rat().sign() > 0) {
        out += "+" + latex_rational(e.rat());
    } else if (e.rat().sign() < 0) {
        out += latex_rational(e.rat());
    }
    return out;
}

inline std::string render_factor(const Factor& f, render_style style) {
    const bool unit = f.exponent == ExactExponent{1};
    if (style == render_style::text) {
        std::string out = "a" + std::to_string(f.index);
        if (!unit) {
            out += "^(" + f.exponent.to_string() + ")";
        }
        return out;
    }
    std::string out = "a_{" + std::to_string(f.index) + "}";
    if (!unit) {
        out += "^{" + latex_exponent(f.exponent) + "}";
    }
    return out;
}

/// Canonical text ("a3*a4^(3/2)") or LaTeX ("a_{3} \cdot a_{4}^{3/2}"); "1" when empty.
inline std::string render(const StringProduct& p, render_style style = render_style::text) {
    if (p.empty()) {
        return "1";
    }
    const std::string_view sep = style == render_style::text ? "*" : " \\cdot ";
    std::string out;
    for (const auto& f : p.factors()) {
        if (!out.empty()) {
            out += sep;
        }
        out += render_factor(f, style);
    }
    return out;
}

inline std::string render(const Identity& id, render_style style = render_style::text) {
    return render(id.lhs, style) + " = " + render(id.rhs, style);
}

} // namespace geoprod
