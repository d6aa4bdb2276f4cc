#pragma once

#include "hookfusion/algebra_element.hpp"

#include "json.hpp"

#include <sstream>
#include <string>

namespace hookfusion {

// Canonical JSON form of a rational group-algebra element:
//   {"n": 3, "terms": [{"perm": [2,1,3], "num": "-1", "den": "2"}, ...]}
// Terms appear sorted by one-line notation and integers are decimal strings,
// so equal elements always serialize to identical bytes.
inline nlohmann::ordered_json to_json(const AlgebraElement<Rational>& a) {
    nlohmann::ordered_json j;
    j["n"] = a.degree();
    auto terms = nlohmann::ordered_json::array();
    for (const auto& [g, c] : a.terms()) {
        nlohmann::ordered_json t;
        t["perm"] = g.one_line();
        t["num"] = c.numerator().get_str();
        t["den"] = c.denominator().get_str();
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

inline std::string to_json_string(const AlgebraElement<Rational>& a) {
    return to_json(a).dump();
}

// Plain-text rendering, one term per line: "coefficient<TAB>cycles".
inline std::string to_text(const AlgebraElement<Rational>& a) {
    std::ostringstream os;
    os << "n: " << a.degree() << "\n";
    os << "terms: " << a.support_size() << "\n";
    for (const auto& [g, c] : a.terms()) os << c.str() << "\t" << g.cycle_string() << "\n";
    return os.str();
}

} // namespace hookfusion
