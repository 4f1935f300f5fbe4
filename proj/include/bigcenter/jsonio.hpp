#pragma once

// JSON serialization used by the structured CLI output: rationals as
// "p/q" strings, polynomials as ordered monomial lists, series as
// coefficient arrays.

#include <json.hpp>

#include "coupling.hpp"
#include "loglaurent.hpp"
#include "poisson.hpp"
#include "poly.hpp"
#include "series.hpp"
#include "vaspec.hpp"

namespace bigcenter {

using nlohmann::json;

inline json to_json(const Rational& r) { return to_string(r); }

inline json to_json(const Poly& p) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) {
        json factors = json::array();
        for (const auto& [g, e] : m)
            factors.push_back({{"sym", sym_name(g.sym)},
                               {"mode", is_param_sym(g.sym) ? json() : json(g.mode)},
                               {"pow", e}});
        terms.push_back({{"coeff", to_string(c)}, {"factors", factors}});
    }
    return terms;
}

inline json to_json(const TruncSeries<Poly>& s) {
    json coeffs = json::array();
    for (int k = 0; k < s.order; ++k) coeffs.push_back(to_json(s.c[k]));
    return {{"order", s.order}, {"coeffs", coeffs}};
}

inline json to_json(const TruncSeries<Rational>& s) {
    json coeffs = json::array();
    for (int k = 0; k < s.order; ++k) coeffs.push_back(to_string(s.c[k]));
    return {{"order", s.order}, {"coeffs", coeffs}};
}

template <class R>
inline json to_json(const MatrixSeries<R>& m) {
    return {{"order", m.order},
            {"a", to_json(m.m.a)},
            {"b", to_json(m.m.b)},
            {"c", to_json(m.m.c)},
            {"d", to_json(m.m.d)}};
}

inline json to_json(const LogLaurent& s) {
    json terms = json::array();
    for (const auto& [e, c] : s.terms())
        terms.push_back({{"n", e.n}, {"lam", e.c}, {"log", e.j}, {"coeff", to_json(c)}});
    return terms;
}

inline json to_json(const VASpec& spec, const TwistedModeExpr& e) {
    json terms = json::array();
    for (const auto& [k, c] : e.terms)
        terms.push_back({{"state", k.first == 0 ? "1" : spec.gens[k.first - 1].name},
                         {"index", -k.second - 1},
                         {"coeff", to_json(c)}});
    return {{"kmax", e.kmax}, {"terms", terms}};
}

inline json to_json(const VASpec& spec, const CoupledElement& e) {
    json legs = json::array();
    for (size_t s = 0; s < e.leg.size(); ++s)
        legs.push_back({{"state", s == 0 ? "1" : spec.gens[s - 1].name}, {"leg", to_json(e.leg[s])}});
    return legs;
}

} // namespace bigcenter
