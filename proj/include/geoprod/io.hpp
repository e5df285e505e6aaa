#pragma once

#include <nlohmann/json.hpp>

#include "oracle.hpp"
#include "parser.hpp"

namespace geoprod {

// JSON encodings. Rationals travel as strings ("3/2") so that arbitrary
// precision survives the round trip.

inline void to_json(nlohmann::json& j, const Rational& r) { j = r.to_string(); }

inline void from_json(const nlohmann::json& j, Rational& r) {
    auto parsed = Rational::from_string(j.get<std::string>());
    if (!parsed) {
        throw invalid_argument("malformed rational '" + j.get<std::string>() + "'");
    }
    r = std::move(*parsed);
}

inline void to_json(nlohmann::json& j, const ExactExponent& e) { j = {{"rat", e.rat()}, {"pi", e.pi()}}; }

inline void from_json(const nlohmann::json& j, ExactExponent& e) {
    e = ExactExponent(j.at("rat").get<Rational>(), j.at("pi").get<Rational>());
}

inline void to_json(nlohmann::json& j, const StringProduct& p) {
    auto factors = nlohmann::json::array();
    for (const auto& f : p.factors()) {
        factors.push_back({{"index", f.index}, {"exp", f.exponent}});
    }
    j = {{"factors", std::move(factors)}};
}

inline void from_json(const nlohmann::json& j, StringProduct& p) {
    std::vector<Factor> raw;
    for (const auto& f : j.at("factors")) {
        raw.push_back({f.at("index").get<index_t>(), f.at("exp").get<ExactExponent>()});
    }
    p = normalize(std::move(raw));
}

inline void to_json(nlohmann::json& j, const Signature& s) { j = {{"T", s.total}, {"S", s.weighted_sum}}; }

inline void to_json(nlohmann::json& j, const Decomposition& d) {
    auto parts = nlohmann::json::array();
    for (const auto& part : d.parts) {
        parts.push_back({{"index", part.index}, {"weight", part.weight}});
    }
    j = {{"parts", std::move(parts)}};
}

inline void from_json(const nlohmann::json& j, Decomposition& d) {
    d.parts.clear();
    for (const auto& part : j.at("parts")) {
        d.parts.push_back({part.at("index").get<index_t>(), part.at("weight").get<index_t>()});
    }
}

inline void to_json(nlohmann::json& j, const OracleReport& r) {
    j = {{"verdict", to_string(r.verdict)},
         {"trials", r.trials},
         {"pass_count", r.pass_count},
         {"max_rel_error", r.max_rel_error},
         {"skipped", r.skipped}};
}

} // namespace geoprod
