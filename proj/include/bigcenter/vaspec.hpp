#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "mat2.hpp"
#include "poly.hpp"

namespace bigcenter {

// States are indexed 0 = vacuum, 1..num_gens = generators; a state vector
// is a coefficient list over that basis.
using StateVec = std::vector<Poly>;

// Finite presentation of the vertex algebra being coupled: named
// generators with parity, the standard two-dimensional group action on
// the generator span, and the singular products (u)_{(-l-1)} v for
// l_min <= l <= -1 with values inside span{vacuum, generators}.
struct VASpec {
    struct Gen {
        std::string name;
        bool odd = false;
    };

    std::vector<Gen> gens;
    int pole_bound = -1; // l_min: products vanish for l < pole_bound

    // (i, l, j) -> state vector of (gen_i)_{(-l-1)} gen_j; omitted = zero
    std::map<std::tuple<int, int, int>, std::vector<Rational>> ope;

    int num_states() const { return static_cast<int>(gens.size()) + 1; }
    StateVec zero_state() const { return StateVec(num_states()); }
    StateVec basis_state(int s) const;
    std::vector<Rational> ope_entry(int i, int l, int j) const;
    int gen_index(const std::string& name) const; // 1-based state index
};

// Doublet of odd generators x, y with a single second order pole
// x(z) y(w) ~ (z-w)^{-2} 1 and vanishing xx, yy products; the group acts
// on span{x, y} as the standard representation.
VASpec builtin_symplectic_fermions();

// Bilinear extension of the singular products to state vectors supported
// on the generator span (vacuum rows and columns vanish for l < 0).
StateVec ope_apply(const VASpec& spec, const StateVec& u, int l, const StateVec& v);

// Matrix action on states: the vacuum component passes through scaled by
// `vacuum_scale` (1 for a group element, 0 for a higher series
// coefficient), generators mix by the column action of g.
StateVec act_states(const VASpec& spec, const Mat2<Poly>& g, const StateVec& v,
                    const Poly& vacuum_scale);

// Formal span of modes (state)_{-p-1} with polynomial coefficients;
// vacuum modes are normalized away except (vacuum)_{-1} = id.
struct ModeExpr {
    std::map<std::pair<int, int>, Poly> terms; // (state, p) -> coefficient

    void add(int state, int p, const Poly& c);
    ModeExpr& operator+=(const ModeExpr& o);
    friend ModeExpr operator+(ModeExpr a, const ModeExpr& b) { return a += b; }
    ModeExpr operator-() const;
    bool is_zero() const { return terms.empty(); }
    friend bool operator==(const ModeExpr& a, const ModeExpr& b) { return a.terms == b.terms; }
    std::string str(const VASpec& spec, const char* tag = "") const;
};

// Commutator of modes [u_{-m-1}, v_{-n-1}] (the super bracket when both
// arguments are odd):
//   sum_{l<0} C(-m-1, -l-1) (u_{(-l-1)} v)_{-1-(m+n-l)}.
// m, n may be any integers; only the singular products enter.
ModeExpr untwisted_commutator(const VASpec& spec, const StateVec& u, int m, const StateVec& v,
                              int n);

} // namespace bigcenter
