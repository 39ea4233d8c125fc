#pragma once

// JSON encoding of the exact scalar types. Schema: gk-local/1.
// PiScaled: {"terms":[{"twice_pi_exp":e,"re":[num,den],"im":[num,den]}]},
// terms sorted ascending by exponent. num/den are JSON numbers when they fit an
// int64 exactly and decimal strings otherwise; both forms are accepted on input.

#include "gklocal/scalar.hpp"

#include <nlohmann/json.hpp>

namespace gk {

using json = nlohmann::ordered_json;

inline json int_to_json(const Int& v) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
    return v.str();
}

inline Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("expected integer or integer string");
}

inline json rat_to_json(const Rat& r) {
    return json::array({int_to_json(numerator(r)), int_to_json(denominator(r))});
}

inline Rat rat_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("expected [num,den]");
    return Rat(int_from_json(j[0]), int_from_json(j[1]));
}

inline json pi_scaled_to_json(const PiScaled& p) {
    json terms = json::array();
    for (auto& [e, c] : p.terms) {  // std::map iterates ascending
        json t;
        t["twice_pi_exp"] = e;
        t["re"] = rat_to_json(c.re);
        t["im"] = rat_to_json(c.im);
        terms.push_back(std::move(t));
    }
    json out;
    out["terms"] = std::move(terms);
    return out;
}

inline PiScaled pi_scaled_from_json(const json& j) {
    PiScaled p;
    for (auto& t : j.at("terms"))
        p.add_term(t.at("twice_pi_exp").get<int>(),
                   GaussianRational(rat_from_json(t.at("re")), rat_from_json(t.at("im"))));
    return p;
}

// Fixed 15-significant-digit rendering; imaginary part printed only when present.
inline std::string format_decimal(std::complex<double> z) {
    char buf[64];
    auto fmt = [&](double x) {
        std::snprintf(buf, sizeof(buf), "%.15g", x);
        return std::string(buf);
    };
    if (z.imag() == 0.0) return fmt(z.real());
    std::string s = fmt(z.real());
    s += (z.imag() < 0 ? " - " : " + ");
    s += fmt(std::abs(z.imag()));
    s += "i";
    return s;
}

}  // namespace gk
