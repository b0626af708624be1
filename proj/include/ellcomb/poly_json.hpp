// SPDX-License-Identifier: Apache-2.0
#ifndef ELLCOMB_POLY_JSON_HPP
#define ELLCOMB_POLY_JSON_HPP

#include <json.hpp>

#include "ellcomb/bivar_poly.hpp"
#include "ellcomb/errors.hpp"

namespace ellcomb {

// JSON term list in canonical order (e_v desc, e_q desc).  Coefficients are
// decimal strings so values past 64 bits survive the trip.
inline nlohmann::json to_json_terms(const BivarPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        terms.push_back({{"eq", it->first.eq},
                         {"ev", it->first.ev},
                         {"c", it->second.get_str()}});
    }
    return terms;
}

inline BivarPoly from_json_terms(const nlohmann::json& terms) {
    if (!terms.is_array()) throw ParseError("JSON terms must be an array", 0);
    BivarPoly p;
    for (const auto& t : terms) {
        if (!t.contains("eq") || !t.contains("ev") || !t.contains("c"))
            throw ParseError("JSON term must have eq, ev, c", 0);
        p.add_term(Monomial{t.at("eq").get<std::uint32_t>(), t.at("ev").get<std::uint32_t>()},
                   BigInt(t.at("c").get<std::string>(), 10));
    }
    return p;
}

}  // namespace ellcomb

#endif
