#pragma once

#include <json.hpp>

#include "qrst/bracket.hpp"
#include "qrst/rational_qt.hpp"

namespace qrst {

using nlohmann::json;

/// Serialization of a Laurent polynomial: [[eq, et, "coefficient"], ...] with
/// deterministic term order (eq ascending, then et ascending) and decimal
/// fraction strings.
inline json poly_to_json(const LaurentPoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back(json::array({e.q, e.t, rat_to_string(c)}));
    return terms;
}

inline LaurentPoly poly_from_json(const json& j) {
    LaurentPoly p;
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 3) fail(errc::parse_error, "bad polynomial term");
        p.add_term(QTExp{term[0].get<int>(), term[1].get<int>()}, rat_from_string(term[2].get<std::string>()));
    }
    return p;
}

inline json rq_to_json(const RationalQT& f) {
    return json{{"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}};
}

inline RationalQT rq_from_json(const json& j) {
    return RationalQT(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

/// Human-readable expanded form, e.g. "(1 - q t)/(1 - t)".
inline std::string poly_display(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                s += "-";
                a = -a;
            }
        } else {
            s += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        std::string mono;
        if (e.q != 0) mono += (e.q == 1) ? "q" : "q^" + std::to_string(e.q);
        if (e.t != 0) {
            if (!mono.empty()) mono += " ";
            mono += (e.t == 1) ? "t" : "t^" + std::to_string(e.t);
        }
        if (mono.empty())
            s += rat_to_string(a);
        else if (a == 1)
            s += mono;
        else
            s += rat_to_string(a) + " " + mono;
        first = false;
    }
    return s;
}

inline std::string rq_display(const RationalQT& f) {
    if (f.den().is_one()) return poly_display(f.num());
    return "(" + poly_display(f.num()) + ")/(" + poly_display(f.den()) + ")";
}

/// Factored display of a bracket product, e.g. "q t^2 (1-q)(1-t)/((1-q t)(1-q^3 t^2))".
inline std::string bracket_display(const BracketProduct& b) {
    if (b.is_zero()) return "0";
    auto bracket_str = [](QTExp e) {
        std::string s = "(1-";
        if (e.q != 0) s += (e.q == 1) ? "q" : "q^" + std::to_string(e.q);
        if (e.t != 0) {
            if (e.q != 0) s += " ";
            s += (e.t == 1) ? "t" : "t^" + std::to_string(e.t);
        }
        return s + ")";
    };
    std::string head;
    if (b.scalar() != 1) head += rat_to_string(b.scalar()) + " ";
    if (b.mono().q != 0) head += (b.mono().q == 1 ? "q " : "q^" + std::to_string(b.mono().q) + " ");
    if (b.mono().t != 0) head += (b.mono().t == 1 ? "t " : "t^" + std::to_string(b.mono().t) + " ");
    std::string num, den;
    int den_factors = 0;
    for (const auto& [e, k] : b.factors()) {
        std::string f = bracket_str(e);
        if (std::abs(k) > 1) f += "^" + std::to_string(std::abs(k));
        if (k > 0)
            num += f;
        else {
            den += f;
            ++den_factors;
        }
    }
    std::string s = head;
    if (num.empty() && den.empty()) return head.empty() ? "1" : head.substr(0, head.size() - 1);
    s += num.empty() ? "1" : num;
    if (!den.empty()) s += "/" + (den_factors > 1 ? "(" + den + ")" : den);
    return s;
}

} // namespace qrst
