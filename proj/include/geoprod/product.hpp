#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "error.hpp"
#include "exponent.hpp"

namespace geoprod {

using index_t = std::int64_t;

/// Geometric sequence a_n = a1 * r^(n-1) for 1 <= n <= max_index.
struct SequenceSpec {
    long double a1 = 1.0L;
    long double r = 2.0L;
    index_t max_index = 1;

    /// Region where distinct signatures give distinct values.
    bool admissible() const { return max_index >= 1 && a1 > 0 && r > 0 && r != 1; }
};

/// One term a_index raised to an exact exponent.
struct Factor {
    index_t index = 1;
    ExactExponent exponent{1};

    friend bool operator==(const Factor&, const Factor&) = default;
};

/// Canonical invariant of a product: total exponent T and index-weighted sum S.
/**
 * A product with signature (T, S) equals a1^T * r^(S - T) for every
 * geometric sequence.
 */
struct Signature {
    ExactExponent total;
    ExactExponent weighted_sum;

    Signature& operator+=(const Signature& rhs) {
        total += rhs.total;
        weighted_sum += rhs.weighted_sum;
        return *this;
    }
    friend Signature operator+(Signature lhs, const Signature& rhs) { return lhs += rhs; }

    friend bool operator==(const Signature&, const Signature&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Signature& s) {
    return os << "T=" << s.total << ", S=" << s.weighted_sum;
}

/// Normalized product of terms: ascending distinct indices, no zero exponents.
/**
 * Only constructible through normalize(), so every instance satisfies the
 * canonical-form invariants. The default instance is the empty product 1.
 */
class StringProduct {
public:
    StringProduct() = default;

    std::span<const Factor> factors() const noexcept { return factors_; }
    bool empty() const noexcept { return factors_.empty(); }
    std::size_t size() const noexcept { return factors_.size(); }

    /// Largest index present, 0 for the empty product.
    index_t max_index() const noexcept { return factors_.empty() ? 0 : factors_.back().index; }

    friend bool operator==(const StringProduct&, const StringProduct&) = default;

    friend StringProduct normalize(std::vector<Factor> raw);

private:
    std::vector<Factor> factors_;
};

/// Merges equal indices, drops zero exponents and sorts ascending.
inline StringProduct normalize(std::vector<Factor> raw) {
    for (const auto& f : raw) {
        if (f.index < 1) {
            throw invalid_index(f.index);
        }
    }
    std::stable_sort(raw.begin(), raw.end(), [](const Factor& a, const Factor& b) { return a.index < b.index; });

    StringProduct out;
    for (auto& f : raw) {
        if (!out.factors_.empty() && out.factors_.back().index == f.index) {
            out.factors_.back().exponent += f.exponent;
        } else {
            out.factors_.push_back(std::move(f));
        }
    }
    std::erase_if(out.factors_, [](const Factor& f) { return f.exponent.is_zero(); });
    return out;
}

inline StringProduct normalize(std::span<const Factor> raw) { return normalize(std::vector<Factor>(raw.begin(), raw.end())); }

inline StringProduct normalize(const StringProduct& p) { return normalize(p.factors()); }

/// Product of unit-exponent terms, one per listed index (repeats merge).
inline StringProduct from_indices(std::span<const index_t> indices) {
    std::vector<Factor> raw;
    raw.reserve(indices.size());
    for (index_t i : indices) {
        raw.push_back({i, ExactExponent{1}});
    }
    return normalize(std::move(raw));
}

inline StringProduct from_indices(std::initializer_list<index_t> indices) {
    return from_indices(std::span<const index_t>(indices.begin(), indices.size()));
}

inline Signature signature(const StringProduct& p) {
    Signature sig;
    for (const auto& f : p.factors()) {
        sig.total += f.exponent;
        sig.weighted_sum += exp_scale(f.exponent, Rational(f.index));
    }
    return sig;
}

/// True iff both sides agree for every admissible geometric sequence.
inline bool equivalent(const StringProduct& p, const StringProduct& q) { return signature(p) == signature(q); }

inline StringProduct product(const StringProduct& p, const StringProduct& q) {
    std::vector<Factor> raw(p.factors().begin(), p.factors().end());
    raw.insert(raw.end(), q.factors().begin(), q.factors().end());
    return normalize(std::move(raw));
}

inline StringProduct power(const StringProduct& p, const Rational& c) {
    std::vector<Factor> raw;
    raw.reserve(p.size());
    for (const auto& f : p.factors()) {
        raw.push_back({f.index, exp_scale(f.exponent, c)});
    }
    return normalize(std::move(raw));
}

/// Evaluates the product as a1^T * r^(S - T).
inline long double evaluate(const StringProduct& p, const SequenceSpec& seq) {
    if (seq.max_index < 1) {
        throw invalid_argument("sequence max index must be at least 1");
    }
    if (!(seq.a1 > 0) || !(seq.r > 0)) {
        throw invalid_argument("evaluation requires a1 > 0 and r > 0");
    }
    if (p.max_index() > seq.max_index) {
        throw index_out_of_range(p.max_index(), seq.max_index);
    }
    const Signature sig = signature(p);
    const long double total = sig.total.to_real();
    const long double shift = (sig.weighted_sum - sig.total).to_real();
    const long double lead = std::pow(seq.a1, total);
    const long double tail = std::pow(seq.r, shift);
    const long double value = lead * tail;
    if (!std::isfinite(lead) || !std::isfinite(tail) || !std::isfinite(value)) {
        throw overflow("evaluation overflowed");
    }
    if (value == 0) {
        throw overflow("evaluation underflowed to zero");
    }
    return value;
}

} // namespace geoprod
