#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace geoprod {

using big_int = boost::multiprecision::cpp_int;

/// Base-10 digit string to big_int; leading zeros are not an octal prefix.
inline big_int parse_decimal(std::string_view digits) {
    const auto first = digits.find_first_not_of('0');
    if (first == std::string_view::npos) {
        return 0;
    }
    return big_int{std::string(digits.substr(first))};
}

/// Exact fraction of arbitrary-precision integers.
/**
 * Always held in lowest terms with a strictly positive denominator, so
 * structural equality coincides with value equality and zero is 0/1.
 */
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value) : value_(value) {}
    Rational(const big_int& value) : value_(value) {}

    Rational(const big_int& num, const big_int& den) {
        if (den == 0) {
            throw division_by_zero{};
        }
        value_ = den < 0 ? boost::multiprecision::cpp_rational(-num, -den) : boost::multiprecision::cpp_rational(num, den);
    }

    big_int numerator() const { return boost::multiprecision::numerator(value_); }
    big_int denominator() const { return boost::multiprecision::denominator(value_); }

    bool is_zero() const { return value_.is_zero(); }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return value_.sign(); }

    long double to_long_double() const { return value_.convert_to<long double>(); }

    /// "p" when the denominator is 1, "p/q" otherwise.
    std::string to_string() const {
        if (is_integer()) {
            return numerator().str();
        }
        return numerator().str() + "/" + denominator().str();
    }

    /// Accepts an optional leading '-', digits, and an optional "/digits".
    static std::optional<Rational> from_string(std::string_view text) {
        std::size_t pos = 0;
        bool negative = false;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            negative = text[pos] == '-';
            ++pos;
        }
        auto digits = [&](std::string_view& out) {
            const std::size_t start = pos;
            while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
                ++pos;
            }
            out = text.substr(start, pos - start);
            return !out.empty();
        };
        std::string_view num_text;
        std::string_view den_text = "1";
        if (!digits(num_text)) {
            return std::nullopt;
        }
        if (pos < text.size() && text[pos] == '/') {
            ++pos;
            if (!digits(den_text)) {
                return std::nullopt;
            }
        }
        if (pos != text.size()) {
            return std::nullopt;
        }
        big_int num = parse_decimal(num_text);
        big_int den = parse_decimal(den_text);
        if (den == 0) {
            return std::nullopt;
        }
        return Rational(negative ? big_int(-num) : num, den);
    }

    Rational operator-() const { return from_raw(-value_); }

    Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
    Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
    Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
    Rational& operator/=(const Rational& rhs) {
        if (rhs.is_zero()) {
            throw division_by_zero{};
        }
        value_ /= rhs.value_;
        return *this;
    }

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
        const int c = lhs.value_.compare(rhs.value_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    static Rational from_raw(boost::multiprecision::cpp_rational v) {
        Rational r;
        r.value_ = std::move(v);
        return r;
    }

    boost::multiprecision::cpp_rational value_;
};

enum class rat_op { add, sub, mul, div };

/// Binary operation by tag; div by zero raises division_by_zero.
inline Rational rat_arith(const Rational& a, const Rational& b, rat_op op) {
    switch (op) {
    case rat_op::add: return a + b;
    case rat_op::sub: return a - b;
    case rat_op::mul: return a * b;
    case rat_op::div: return a / b;
    }
    return {};
}

} // namespace geoprod
