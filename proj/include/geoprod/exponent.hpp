#pragma once

#include <numbers>
#include <ostream>
#include <string>

#include "rational.hpp"

namespace geoprod {

/// Exponent of the form q + p*pi with rational q and p.
/**
 * Since pi is irrational, q + p*pi = q' + p'*pi holds exactly when q = q'
 * and p = p', so equality is decided componentwise without any tolerance.
 */
class ExactExponent {
public:
    ExactExponent() = default;
    ExactExponent(Rational rat) : rat_(std::move(rat)) {}
    ExactExponent(std::int64_t rat) : rat_(rat) {}
    ExactExponent(Rational rat, Rational pi) : rat_(std::move(rat)), pi_(std::move(pi)) {}

    static ExactExponent pi_multiple(Rational coeff) { return {Rational{}, std::move(coeff)}; }

    const Rational& rat() const noexcept { return rat_; }
    const Rational& pi() const noexcept { return pi_; }

    bool is_zero() const { return rat_.is_zero() && pi_.is_zero(); }
    bool is_rational() const { return pi_.is_zero(); }

    long double to_real() const {
        return rat_.to_long_double() + pi_.to_long_double() * std::numbers::pi_v<long double>;
    }

    /// Canonical serialization: "q", "p*pi" or "q+p*pi" (minus sign folded in).
    std::string to_string() const {
        if (pi_.is_zero()) {
            return rat_.to_string();
        }
        if (rat_.is_zero()) {
            return pi_.to_string() + "*pi";
        }
        if (pi_.sign() < 0) {
            return rat_.to_string() + "-" + (-pi_).to_string() + "*pi";
        }
        return rat_.to_string() + "+" + pi_.to_string() + "*pi";
    }

    ExactExponent operator-() const { return {-rat_, -pi_}; }

    ExactExponent& operator+=(const ExactExponent& rhs) {
        rat_ += rhs.rat_;
        pi_ += rhs.pi_;
        return *this;
    }
    ExactExponent& operator-=(const ExactExponent& rhs) {
        rat_ -= rhs.rat_;
        pi_ -= rhs.pi_;
        return *this;
    }

    friend ExactExponent operator+(ExactExponent lhs, const ExactExponent& rhs) { return lhs += rhs; }
    friend ExactExponent operator-(ExactExponent lhs, const ExactExponent& rhs) { return lhs -= rhs; }

    ExactExponent scaled(const Rational& c) const { return {rat_ * c, pi_ * c}; }

    friend bool operator==(const ExactExponent&, const ExactExponent&) = default;

    friend std::ostream& operator<<(std::ostream& os, const ExactExponent& e) { return os << e.to_string(); }

private:
    Rational rat_;
    Rational pi_;
};

inline ExactExponent exp_scale(const ExactExponent& a, const Rational& c) { return a.scaled(c); }

inline long double exp_to_real(const ExactExponent& a) { return a.to_real(); }

} // namespace geoprod
