#include "bigcenter/vaspec.hpp"

#include <sstream>
#include <stdexcept>

#include "bigcenter/binomial.hpp"

namespace bigcenter {

StateVec VASpec::basis_state(int s) const {
    StateVec v = zero_state();
    if (s < 0 || s >= num_states()) throw std::out_of_range("state index");
    v[s] = Poly::one();
    return v;
}

std::vector<Rational> VASpec::ope_entry(int i, int l, int j) const {
    auto it = ope.find({i, l, j});
    if (it == ope.end()) return std::vector<Rational>(num_states(), Rational(0));
    return it->second;
}

int VASpec::gen_index(const std::string& name) const {
    for (size_t i = 0; i < gens.size(); ++i)
        if (gens[i].name == name) return static_cast<int>(i) + 1;
    throw std::invalid_argument("unknown generator: " + name);
}

VASpec builtin_symplectic_fermions() {
    VASpec spec;
    spec.gens = {{"x", true}, {"y", true}};
    spec.pole_bound = -2;
    // x(z) y(w) ~ (z-w)^{-2} 1, the opposite order picks up the odd sign,
    // and xx, yy have no singular part.
    spec.ope[{1, -2, 2}] = {Rational(1), Rational(0), Rational(0)};
    spec.ope[{2, -2, 1}] = {Rational(-1), Rational(0), Rational(0)};
    return spec;
}

StateVec ope_apply(const VASpec& spec, const StateVec& u, int l, const StateVec& v) {
    StateVec out = spec.zero_state();
    if (l >= 0 || l < spec.pole_bound) return out;
    const int ns = spec.num_states();
    for (int i = 1; i < ns; ++i) {
        if (u[i].is_zero()) continue;
        for (int j = 1; j < ns; ++j) {
            if (v[j].is_zero()) continue;
            auto entry = spec.ope_entry(i, l, j);
            Poly c = u[i] * v[j];
            for (int s = 0; s < ns; ++s)
                if (entry[s] != 0) out[s] += c * entry[s];
        }
    }
    return out;
}

StateVec act_states(const VASpec& spec, const Mat2<Poly>& g, const StateVec& v,
                    const Poly& vacuum_scale) {
    if (spec.gens.size() != 2)
        throw std::domain_error("matrix action requires a two-dimensional generator span");
    StateVec out = spec.zero_state();
    out[0] = v[0] * vacuum_scale;
    // column action on the doublet basis
    out[1] = g.a * v[1] + g.b * v[2];
    out[2] = g.c * v[1] + g.d * v[2];
    return out;
}

void ModeExpr::add(int state, int p, const Poly& c) {
    if (c.is_zero()) return;
    if (state == 0 && p != 0) return; // vacuum modes vanish except id
    auto [it, inserted] = terms.emplace(std::make_pair(state, p), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

ModeExpr& ModeExpr::operator+=(const ModeExpr& o) {
    for (const auto& [k, c] : o.terms) add(k.first, k.second, c);
    return *this;
}

ModeExpr ModeExpr::operator-() const {
    ModeExpr r;
    for (const auto& [k, c] : terms) r.terms.emplace(k, -c);
    return r;
}

std::string ModeExpr::str(const VASpec& spec, const char* tag) const {
    if (terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : terms) {
        if (!first) out << " + ";
        first = false;
        out << '(' << c.str() << ") ";
        if (k.first == 0) out << "id";
        else out << '(' << spec.gens[k.first - 1].name << ')' << tag << "_{" << (-k.second - 1) << '}';
    }
    return out.str();
}

ModeExpr untwisted_commutator(const VASpec& spec, const StateVec& u, int m, const StateVec& v,
                              int n) {
    ModeExpr out;
    for (int l = spec.pole_bound; l < 0; ++l) {
        StateVec w = ope_apply(spec, u, l, v);
        Rational coef = binom(Rational(-m - 1), -l - 1);
        if (coef == 0) continue;
        for (int s = 0; s < spec.num_states(); ++s)
            if (!w[s].is_zero()) out.add(s, m + n - l, w[s] * coef);
    }
    return out;
}

} // namespace bigcenter
