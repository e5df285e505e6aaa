#pragma once

#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "product.hpp"

namespace geoprod {

/// Ascending list of term indices; repeats allowed in repetition mode.
using IndexMultiset = std::vector<index_t>;

struct FamilyQuery {
    index_t t = 1;
    index_t sum = 1;
    index_t max_index = 1;
    bool repetition = false;
};

struct DecompositionPart {
    index_t index = 1;
    index_t weight = 1;

    friend bool operator==(const DecompositionPart&, const DecompositionPart&) = default;
    friend auto operator<=>(const DecompositionPart&, const DecompositionPart&) = default;
};

/// Rewriting of a signature (t, S) as sum of weight_i * index_i with distinct indices.
struct Decomposition {
    std::vector<DecompositionPart> parts;

    StringProduct to_product() const {
        std::vector<Factor> raw;
        for (const auto& part : parts) {
            raw.push_back({part.index, ExactExponent{part.weight}});
        }
        return normalize(std::move(raw));
    }

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

struct Identity {
    StringProduct lhs;
    StringProduct rhs;

    friend bool operator==(const Identity&, const Identity&) = default;
};

namespace detail {

// Smallest and largest sums of `count` indices drawn from [low, high].
inline index_t min_fill(index_t count, index_t low, bool repetition) {
    return repetition ? count * low : count * low + count * (count - 1) / 2;
}

inline index_t max_fill(index_t count, index_t high, bool repetition) {
    return repetition ? count * high : count * high - count * (count - 1) / 2;
}

inline void family_step(const FamilyQuery& q, index_t low, index_t remaining, index_t left,
                        IndexMultiset& prefix, std::vector<IndexMultiset>& out) {
    if (left == 0) {
        if (remaining == 0) {
            out.push_back(prefix);
        }
        return;
    }
    for (index_t x = low; x <= q.max_index; ++x) {
        const index_t next_low = q.repetition ? x : x + 1;
        const index_t rest = remaining - x;
        if (rest < min_fill(left - 1, next_low, q.repetition)) {
            // larger x only shrinks `rest` further
            break;
        }
        if (left > 1 && next_low > q.max_index) {
            break;
        }
        if (rest > max_fill(left - 1, q.max_index, q.repetition)) {
            continue;
        }
        prefix.push_back(x);
        family_step(q, next_low, rest, left - 1, prefix, out);
        prefix.pop_back();
    }
}

} // namespace detail

/// Every size-t index multiset (or set, without repetition) in [1, max_index]
/// whose elements sum to `sum`, in lexicographic order.
inline std::vector<IndexMultiset> enumerate_family(const FamilyQuery& q) {
    if (q.t < 1 || q.sum < 1 || q.max_index < 1) {
        throw invalid_argument("family query requires t, sum and max index to be positive");
    }
    std::vector<IndexMultiset> out;
    if (!q.repetition && q.t > q.max_index) {
        return out;
    }
    if (q.sum < detail::min_fill(q.t, 1, q.repetition) || q.sum > detail::max_fill(q.t, q.max_index, q.repetition)) {
        return out;
    }
    IndexMultiset prefix;
    prefix.reserve(static_cast<std::size_t>(q.t));
    detail::family_step(q, 1, q.sum, q.t, prefix, out);
    return out;
}

/// a_i * a_j = a_{i-n} * a_{j+n}.
inline Identity shift_identity(index_t i, index_t j, index_t n) {
    if (i < 1 || j < 1) {
        throw invalid_index(i < 1 ? i : j);
    }
    if (i - n < 1 || j + n < 1) {
        throw invalid_shift("shift by " + std::to_string(n) + " moves an index of a" + std::to_string(i) + "*a" +
                            std::to_string(j) + " below 1");
    }
    return {from_indices({i, j}), from_indices({i - n, j + n})};
}

namespace detail {

// Bounds on sum(w_k * b_k) over `slots` strictly increasing indices in
// [low, high] with positive integer weights totalling `weight`.
inline index_t min_weighted(index_t slots, index_t weight, index_t low) {
    return (weight - slots + 1) * low + (slots - 1) * low + (slots - 1) * slots / 2;
}

inline index_t max_weighted(index_t slots, index_t weight, index_t high) {
    return (weight - slots + 1) * high + (slots - 1) * high - (slots - 1) * slots / 2;
}

inline void decompose_step(index_t low, index_t max_index, index_t weight_left, index_t sum_left, index_t slots,
                           std::vector<DecompositionPart>& prefix, std::vector<Decomposition>& out) {
    if (slots == 0) {
        if (weight_left == 0 && sum_left == 0) {
            out.push_back({prefix});
        }
        return;
    }
    if (weight_left < slots || max_index - low + 1 < slots) {
        return;
    }
    if (sum_left < min_weighted(slots, weight_left, low) || sum_left > max_weighted(slots, weight_left, max_index)) {
        return;
    }
    for (index_t b = low; b <= max_index - slots + 1; ++b) {
        for (index_t w = 1; w <= weight_left - (slots - 1); ++w) {
            if (w * b > sum_left) {
                break;
            }
            prefix.push_back({b, w});
            decompose_step(b + 1, max_index, weight_left - w, sum_left - w * b, slots - 1, prefix, out);
            prefix.pop_back();
        }
    }
}

} // namespace detail

/// All ways to write S as sum of w_i * b_i with exactly `parts` distinct
/// indices b_i in [1, max_index] and positive integer weights summing to t.
/**
 * Results are ordered lexicographically by their (index, weight) sequence.
 */
inline std::vector<Decomposition> decompose(index_t t, index_t sum, index_t parts, index_t max_index) {
    if (t < 1 || sum < 1 || parts < 1 || max_index < 1) {
        throw invalid_argument("decompose requires t, sum, parts and max index to be positive");
    }
    std::vector<Decomposition> out;
    if (parts > t) {
        return out;
    }
    std::vector<DecompositionPart> prefix;
    detail::decompose_step(1, max_index, t, sum, parts, prefix, out);
    return out;
}

struct Collapse {
    index_t index;
    Rational exponent;

    friend bool operator==(const Collapse&, const Collapse&) = default;
};

/// Single-term form a_k^T of p, when S/T is a positive integer k.
inline std::optional<Collapse> collapse(const StringProduct& p) {
    for (const auto& f : p.factors()) {
        if (!f.exponent.is_rational()) {
            return std::nullopt;
        }
    }
    const Signature sig = signature(p);
    const Rational& total = sig.total.rat();
    if (total.is_zero()) {
        return std::nullopt;
    }
    const Rational k = sig.weighted_sum.rat() / total;
    if (!k.is_integer() || k.sign() <= 0) {
        return std::nullopt;
    }
    const big_int& kv = k.numerator();
    if (kv > std::numeric_limits<index_t>::max()) {
        return std::nullopt;
    }
    return Collapse{static_cast<index_t>(kv), total};
}

struct WeightPair {
    Rational first;
    Rational second;

    friend bool operator==(const WeightPair&, const WeightPair&) = default;
};

/// Weights (w1, w2) with a_i^w1 * a_j^w2 = a_k^t, i.e. w1 + w2 = t and w1*i + w2*j = t*k.
inline WeightPair solve_rational_weights(index_t i, index_t j, index_t k, const Rational& t) {
    if (i < 1 || j < 1 || k < 1) {
        throw invalid_index(std::min({i, j, k}));
    }
    if (i == j) {
        if (k != i) {
            throw no_solution("a" + std::to_string(i) + " alone cannot produce a" + std::to_string(k));
        }
        return {t, Rational{}};
    }
    const Rational span(i - j);
    return {t * Rational(k - j) / span, t * Rational(i - k) / span};
}

struct Verdict {
    enum class kind { verified_symbolic, refuted };

    kind result;
    Signature lhs;
    Signature rhs;

    bool verified() const noexcept { return result == kind::verified_symbolic; }
};

/// Symbolic decision; a refutation carries both signatures as witness.
inline Verdict verify_identity(const Identity& id) {
    Signature l = signature(id.lhs);
    Signature r = signature(id.rhs);
    const auto k = l == r ? Verdict::kind::verified_symbolic : Verdict::kind::refuted;
    return {k, std::move(l), std::move(r)};
}

} // namespace geoprod
