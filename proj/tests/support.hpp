#pragma once

// Random generators shared by the property suites and the acceptance runner.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "geoprod/geoprod.hpp"

namespace geoprod::proptest {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    bool chance(int percent) { return uniform(1, 100) <= percent; }

    Rational rational(std::int64_t max_num, std::int64_t max_den) {
        return Rational(uniform(-max_num, max_num), uniform(1, max_den));
    }

    Rational nonzero_rational(std::int64_t max_num, std::int64_t max_den) {
        std::int64_t num = 0;
        while (num == 0) {
            num = uniform(-max_num, max_num);
        }
        return Rational(num, uniform(1, max_den));
    }

    ExactExponent exponent(bool allow_pi = true) {
        Rational rat = rational(3, 3);
        Rational pi = allow_pi && chance(30) ? rational(2, 3) : Rational{};
        return {std::move(rat), std::move(pi)};
    }

    /// Up to `max_factors` terms with indices in [1, max_index].
    StringProduct product(int max_factors = 4, index_t max_index = 12, bool allow_pi = true) {
        std::vector<Factor> raw;
        const auto n = uniform(0, max_factors);
        for (std::int64_t k = 0; k < n; ++k) {
            raw.push_back({uniform(1, max_index), exponent(allow_pi)});
        }
        return normalize(std::move(raw));
    }

    /// A product with the same signature as `p`, built by topping up a random
    /// base with two far-apart indices so the solved weights stay moderate.
    StringProduct equivalent_partner(const StringProduct& p) {
        const StringProduct base = product(3, 12);
        const Signature want = signature(p);
        const Signature have = signature(base);
        const ExactExponent dt = want.total - have.total;
        const ExactExponent ds = want.weighted_sum - have.weighted_sum;
        const index_t i = uniform(1, 3);
        const index_t j = uniform(10, 12);
        const Rational span(i - j);
        const ExactExponent wi = (ds - dt.scaled(Rational(j))).scaled(Rational(1) / span);
        const ExactExponent wj = (dt.scaled(Rational(i)) - ds).scaled(Rational(1) / span);
        return geoprod::product(base, normalize(std::vector<Factor>{{i, wi}, {j, wj}}));
    }

    /// Same total exponent as `p`, weighted sum shifted by delta * (m - n).
    StringProduct shifted_partner(const StringProduct& p) {
        const StringProduct same = equivalent_partner(p);
        const index_t m = uniform(1, 12);
        index_t n = m;
        while (n == m) {
            n = uniform(1, 12);
        }
        ExactExponent delta(nonzero_rational(3, 3), chance(30) ? rational(1, 2) : Rational{});
        if (delta.is_zero()) {
            delta = ExactExponent{1};
        }
        return geoprod::product(same, normalize(std::vector<Factor>{{m, delta}, {n, -delta}}));
    }

    std::string bytes(std::size_t max_len, bool dsl_alphabet) {
        static const std::string alphabet = "a0123456789^()*/+-= pi1a";
        std::string out;
        const auto len = static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(max_len)));
        for (std::size_t k = 0; k < len; ++k) {
            if (dsl_alphabet) {
                out.push_back(alphabet[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(alphabet.size()) - 1))]);
            } else {
                out.push_back(static_cast<char>(uniform(0, 255)));
            }
        }
        return out;
    }

    /// A random sentence of the product grammar, with random spacing.
    std::string grammar_product() {
        if (chance(5)) {
            return "1";
        }
        std::string out;
        const auto terms = uniform(1, 4);
        for (std::int64_t k = 0; k < terms; ++k) {
            if (k > 0) {
                out += space() + "*" + space();
            }
            out += "a" + space() + std::to_string(uniform(1, 30));
            if (chance(60)) {
                out += space() + "^" + space() + grammar_exponent();
            }
        }
        return out;
    }

private:
    std::string space() { return chance(25) ? " " : ""; }

    std::string signed_rational() {
        std::string out = chance(30) ? "-" : "";
        out += std::to_string(uniform(0, 40));
        if (chance(40)) {
            out += space() + "/" + space() + std::to_string(uniform(1, 9));
        }
        return out;
    }

    std::string grammar_exponent() {
        if (chance(40)) {
            return signed_rational();
        }
        std::string out = "(" + space();
        const auto atoms = uniform(1, 3);
        for (std::int64_t k = 0; k < atoms; ++k) {
            if (k > 0) {
                out += space() + (chance(50) ? "+" : "-") + space();
            }
            switch (uniform(0, 3)) {
            case 0: out += "pi"; break;
            case 1: out += signed_rational() + space() + "pi"; break;
            case 2: out += signed_rational() + space() + "*" + space() + "pi"; break;
            default: out += signed_rational(); break;
            }
        }
        return out + space() + ")";
    }

    std::mt19937_64 rng_;
};

} // namespace geoprod::proptest
