#pragma once

#include <map>
#include <string>
#include <vector>

#include "functionals.hpp"
#include "gauge.hpp"
#include "vaspec.hpp"

namespace bigcenter {

// Element of the coupled algebra: a functional leg for every state,
// canonicalized by state index.  `order` is the truncation used when the
// element is evaluated on a fibre.
struct CoupledElement {
    std::vector<Poly> leg; // leg[s] tensors the basis state s
    int order = 8;

    bool is_zero() const;
    friend bool operator==(const CoupledElement& a, const CoupledElement& b) {
        return a.leg == b.leg;
    }
    std::string str(const VASpec& spec) const;
};

CoupledElement coupled_zero(const VASpec& spec, int order = 8);

// The linear embedding v -> (F -> F(0)^{-1}.v): for the standard
// representation it pairs adjugate entry functionals at mode -1 with the
// basis states.
CoupledElement delta(const VASpec& spec, const StateVec& v, int order = 8);

// Symbolic one-parameter subgroups used for invariance checks.
Mat2<Poly> upper_unipotent_sym();
Mat2<Poly> lower_unipotent_sym();
Mat2<Poly> diagonal_sym(); // diag(t, t^{-1}) with a Laurent parameter

struct InvarianceReport {
    bool invariant = true;
    std::string failing; // description of the first failing translate
};

// Simultaneous right translation and state action for the three symbolic
// subgroup families; equality is polynomial in the parameter, modulo the
// determinant ideal.
InvarianceReport check_invariance(const VASpec& spec, const CoupledElement& e, int trials = 20,
                                  std::uint64_t seed = kDefaultSeed);

// Left translation action on the functional leg of a coupled element.
CoupledElement left_act(const VASpec& spec, const Mat2<Poly>& g, const CoupledElement& e);

// g . delta(v) == delta(g . v), exactly in the free ring.
bool g_action_recovery(const VASpec& spec, const Mat2<Rational>& g, const StateVec& v,
                       int order = 8);

// B_s(z) = F_A(z) (d^s/s!) F_A(z)^{-1}, the order-s differential
// polynomial in A entering the twisted commutator formula; valid mod
// z^{N-s}.  B_0 = id and B_1 = A.
struct ABracketCoeffs {
    int s = 0;
    MatrixSeries<Rational> series;
};

ABracketCoeffs a_bracket_coeffs(const Connection& A, int s, int N);

// Span of twisted modes (state)^{d+A}_{-p-1} with polynomial
// coefficients; kmax records the internal summation bound, so output
// modes needing larger k are truncated away rather than wrong.
struct TwistedModeExpr {
    std::map<std::pair<int, int>, Poly> terms; // (state, p) -> coefficient
    int kmax = 0;

    void add(int state, int p, const Poly& c);
    bool is_zero() const { return terms.empty(); }
    friend bool operator==(const TwistedModeExpr& a, const TwistedModeExpr& b) {
        return a.terms == b.terms;
    }
    // Restriction to output modes p >= p_min (the exactness window).
    TwistedModeExpr restricted(int p_min) const;
    std::string str(const VASpec& spec) const;
};

// Twisted commutator [a^{d+A}_{-m-1}, b^{d+A}_{-n-1}] as a sum of twisted
// modes:
//   sum_{k,s,l} C(-m-1, -l-1-s) ((B_s[k].a)_{(-l-1)} b)^{d+A}_{-1-(m+n-l-k-s)}
// with B_s[k] the z^k coefficient of F_A (d^s/s!) F_A^{-1}.  The k sum is
// truncated at kmax = N-2; coefficients with internal index k <= kmax are
// exact.
TwistedModeExpr twisted_commutator_formula(const VASpec& spec, int a, int m, int b, int n,
                                           const Connection& A, int N);

// Same formula with a symbolic connection A_{-k-1} = [[a*,b*],[c*,-a*]]
// at mode -k-1; only available for pole bounds >= -2, where the needed
// coefficients are the universal ones B_0 = id, B_1 = A.
TwistedModeExpr twisted_commutator_formula_symbolic(const VASpec& spec, int a, int m, int b,
                                                    int n, int kmax);

// The closed form the formula takes when only a second order pole is
// present: sum_k (((-m-1) delta_{k,0} + A_{-k-1}).a)_{(1)} b at output
// mode -1-(m+n+1-k) for the connection part and -1-(m+n+2) for the
// constant part.
TwistedModeExpr twisted_commutator_l2_display(const VASpec& spec, int a, int m, int b, int n,
                                              int kmax);

// Brute-force route: expand delta(a)_{-m-1} = sum_i (F^{-1}_i.a)_{-(m-i)-1}
// at the concrete solution F_A, commute bilinearly with the plain
// commutator formula, and rewrite the resulting plain modes back through
// the twisted basis (w)_{-q-1} = sum_i (F_i.w)^{d+A}_{-(q-i)-1}.
TwistedModeExpr twisted_commutator_oracle(const VASpec& spec, int a, int m, int b, int n,
                                          const Connection& A, int N);

// Exactness window for comparing the two routes at truncation N: every
// contribution to an output mode p >= this bound has internal index
// k <= N-2 on the formula side and complete coefficient data on the
// oracle side.
int twisted_exact_window(const VASpec& spec, int m, int n, int N);

// Bivariate expansion of delta(u)(z) delta(v)(w): singular coefficients
// of (z-w)^l as per-state series in w.
struct CoupledOpe {
    int order = 0;                                        // truncation in w
    std::map<int, std::vector<TruncSeries<Poly>>> part;   // l -> per-state series
    std::vector<TruncSeries<Poly>> component(int l, int num_states) const;
};

CoupledOpe coupled_ope(const VASpec& spec, int u, int v, int N);

// Evaluation on the fibre over d+A: substitutes group functionals by the
// coefficients of the canonical solution F_A (initial value id) and
// algebra functionals by the coefficients of A itself.  Unless
// allow_noninvariant is set, the element must pass check_invariance.
// Picking the translated solution F_A g instead moves the value of an
// invariant element by the inverse state action of g (strictly unchanged
// on vacuum legs), which is what fibre_evaluate_at exposes for tests.
std::vector<Rational> fibre_evaluate(const VASpec& spec, const CoupledElement& e,
                                     const Connection& A, bool allow_noninvariant = false);

std::vector<Rational> fibre_evaluate_at(const VASpec& spec, const CoupledElement& e,
                                        const Connection& A, const Mat2<Rational>& F0,
                                        bool allow_noninvariant = false);

} // namespace bigcenter
