#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "identity.hpp"

namespace geoprod {

// Numeric cross-checks that never go through signatures: products are
// evaluated term by term from a_n = a1 * r^(n-1), and families are found by
// materializing every candidate tuple.

struct OracleConfig {
    std::int64_t trials = 1000;
    std::uint64_t seed = 0;
    double rel_tol = 1e-9;
    std::pair<double, double> a1_range{0.5, 2.0};
    std::pair<double, double> r_range{1.1, 3.0};

    void validate() const {
        if (trials < 1) {
            throw invalid_argument("oracle needs at least one trial");
        }
        if (!(rel_tol >= 0)) {
            throw invalid_argument("relative tolerance must be non-negative");
        }
        const auto [a_lo, a_hi] = a1_range;
        const auto [r_lo, r_hi] = r_range;
        if (!(a_lo > 0) || a_hi < a_lo) {
            throw invalid_argument("a1 range must be positive and ordered");
        }
        if (!(r_lo > 0) || r_hi < r_lo || (r_lo <= 1 && 1 <= r_hi)) {
            throw invalid_argument("r range must be positive, ordered and exclude 1");
        }
    }
};

enum class oracle_verdict { pass, fail, unstable };

inline const char* to_string(oracle_verdict v) {
    switch (v) {
    case oracle_verdict::pass: return "pass";
    case oracle_verdict::fail: return "fail";
    case oracle_verdict::unstable: return "unstable";
    }
    return "unknown";
}

struct OracleReport {
    oracle_verdict verdict = oracle_verdict::pass;
    std::int64_t trials = 0;
    std::int64_t pass_count = 0;
    std::int64_t skipped = 0;
    double max_rel_error = 0;

    friend bool operator==(const OracleReport&, const OracleReport&) = default;
};

/// Product of (a1 * r^(b-1))^t over all factors, in extended precision.
inline long double evaluate_termwise(const StringProduct& p, long double a1, long double r) {
    long double value = 1.0L;
    for (const auto& f : p.factors()) {
        const long double term = a1 * std::pow(r, static_cast<long double>(f.index - 1));
        value *= std::pow(term, f.exponent.to_real());
    }
    return value;
}

inline long double relative_error(long double x, long double y) {
    const long double scale = std::max(std::fabs(x), std::fabs(y));
    if (scale == 0) {
        return 0;
    }
    return std::fabs(x - y) / scale;
}

namespace detail {

// Uniform draw in [lo, hi] from the raw 64-bit stream, independent of the
// standard library's distribution implementation.
inline long double draw(std::mt19937_64& rng, double lo, double hi) {
    const long double u = static_cast<long double>(rng() >> 11) * 0x1.0p-53L;
    return lo + u * (static_cast<long double>(hi) - lo);
}

} // namespace detail

/// Samples (a1, r) and compares both sides of the identity numerically.
inline OracleReport numeric_check(const Identity& id, const OracleConfig& cfg) {
    cfg.validate();
    std::mt19937_64 rng(cfg.seed);
    OracleReport report;
    report.trials = cfg.trials;
    long double worst = 0;
    for (std::int64_t trial = 0; trial < cfg.trials; ++trial) {
        const long double a1 = detail::draw(rng, cfg.a1_range.first, cfg.a1_range.second);
        const long double r = detail::draw(rng, cfg.r_range.first, cfg.r_range.second);
        const long double lhs = evaluate_termwise(id.lhs, a1, r);
        const long double rhs = evaluate_termwise(id.rhs, a1, r);
        if (!std::isfinite(lhs) || !std::isfinite(rhs) || lhs == 0 || rhs == 0) {
            ++report.skipped;
            continue;
        }
        const long double err = relative_error(lhs, rhs);
        worst = std::max(worst, err);
        if (err <= cfg.rel_tol) {
            ++report.pass_count;
        }
    }
    report.max_rel_error = static_cast<double>(worst);
    const std::int64_t evaluated = report.trials - report.skipped;
    if (report.skipped * 100 >= report.trials) {
        report.verdict = oracle_verdict::unstable;
    } else if (report.pass_count == evaluated) {
        report.verdict = oracle_verdict::pass;
    } else {
        report.verdict = oracle_verdict::fail;
    }
    return report;
}

/// Literal generate-and-filter over every size-t selection from [1, l].
inline std::vector<IndexMultiset> brute_force_family(index_t t, index_t sum, index_t l, bool repetition) {
    if (t < 1 || l < 1 || t > 5 || l > 15) {
        throw invalid_argument("brute force oracle is limited to 1 <= t <= 5 and 1 <= l <= 15");
    }
    std::vector<IndexMultiset> out;
    if (!repetition) {
        for (std::uint32_t mask = 0; mask < (1u << l); ++mask) {
            if (std::popcount(mask) != t) {
                continue;
            }
            IndexMultiset pick;
            for (index_t i = 0; i < l; ++i) {
                if (mask & (1u << i)) {
                    pick.push_back(i + 1);
                }
            }
            if (std::accumulate(pick.begin(), pick.end(), index_t{0}) == sum) {
                out.push_back(std::move(pick));
            }
        }
    } else {
        // every tuple in [1, l]^t, kept only when non-decreasing
        IndexMultiset tuple(static_cast<std::size_t>(t), 1);
        while (true) {
            if (std::is_sorted(tuple.begin(), tuple.end()) &&
                std::accumulate(tuple.begin(), tuple.end(), index_t{0}) == sum) {
                out.push_back(tuple);
            }
            std::size_t digit = 0;
            while (digit < tuple.size() && tuple[digit] == l) {
                tuple[digit++] = 1;
            }
            if (digit == tuple.size()) {
                break;
            }
            ++tuple[digit];
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct DegenerateReport {
    long double a1 = 0;
    long double lhs_value = 0;
    long double rhs_value = 0;
    bool numerically_equal = false;
    bool equivalent = false;

    /// The r = 1 point hides the difference between non-equivalent sides.
    bool masks_refutation() const noexcept { return numerically_equal && !equivalent; }
};

/// Evaluates both sides at r = 1, where every term collapses to a1.
inline DegenerateReport degenerate_probe(const Identity& id, long double a1 = 2.0L) {
    if (!(a1 > 0)) {
        throw invalid_argument("degenerate probe needs a1 > 0");
    }
    const Signature lhs = signature(id.lhs);
    const Signature rhs = signature(id.rhs);
    if (lhs.total != rhs.total) {
        throw invalid_argument("degenerate probe needs equal total exponents on both sides");
    }
    DegenerateReport report;
    report.a1 = a1;
    report.lhs_value = evaluate_termwise(id.lhs, a1, 1.0L);
    report.rhs_value = evaluate_termwise(id.rhs, a1, 1.0L);
    report.numerically_equal = relative_error(report.lhs_value, report.rhs_value) <= 1e-12L;
    report.equivalent = lhs == rhs;
    return report;
}

} // namespace geoprod
