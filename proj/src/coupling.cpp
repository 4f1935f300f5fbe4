#include "bigcenter/coupling.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

#include "bigcenter/binomial.hpp"

namespace bigcenter {

bool CoupledElement::is_zero() const {
    for (const auto& p : leg)
        if (!p.is_zero()) return false;
    return true;
}

std::string CoupledElement::str(const VASpec& spec) const {
    std::ostringstream out;
    bool first = true;
    for (size_t s = 0; s < leg.size(); ++s) {
        if (leg[s].is_zero()) continue;
        if (!first) out << " + ";
        first = false;
        out << '(' << leg[s].str() << ") (x) " << (s == 0 ? "1" : spec.gens[s - 1].name);
    }
    return first ? "0" : out.str();
}

CoupledElement coupled_zero(const VASpec& spec, int order) {
    CoupledElement e;
    e.leg.assign(spec.num_states(), Poly());
    e.order = order;
    return e;
}

CoupledElement delta(const VASpec& spec, const StateVec& v, int order) {
    if (spec.gens.size() != 2)
        throw std::domain_error("delta requires the standard two-dimensional representation");
    CoupledElement e = coupled_zero(spec, order);
    e.leg[0] = v[0]; // the vacuum couples to the unit functional
    Mat2<Poly> adj = adj_gen_matrix(-1);
    // F^{-1}.e_j = sum_i adj_{ij} e_i
    e.leg[1] += adj.a * v[1] + adj.b * v[2];
    e.leg[2] += adj.c * v[1] + adj.d * v[2];
    return e;
}

Mat2<Poly> upper_unipotent_sym() {
    return {Poly::one(), Poly::param(Sym::t), Poly(), Poly::one()};
}

Mat2<Poly> lower_unipotent_sym() {
    return {Poly::one(), Poly(), Poly::param(Sym::t), Poly::one()};
}

Mat2<Poly> diagonal_sym() {
    Generator t = param_gen(Sym::t);
    return {Poly::from_gen(t, 1), Poly(), Poly(), Poly::from_gen(t, -1)};
}

namespace {

CoupledElement right_act(const VASpec& spec, const Mat2<Poly>& g, const CoupledElement& e) {
    CoupledElement out = coupled_zero(spec, e.order);
    StateVec translated(spec.num_states());
    for (int s = 0; s < spec.num_states(); ++s) translated[s] = right_translate(g, e.leg[s]);
    // leg'_{s'} = sum_s rho(g)_{s' s} (g . leg_s)
    out.leg[0] = translated[0];
    out.leg[1] = g.a * translated[1] + g.b * translated[2];
    out.leg[2] = g.c * translated[1] + g.d * translated[2];
    return out;
}

} // namespace

InvarianceReport check_invariance(const VASpec& spec, const CoupledElement& e, int trials,
                                  std::uint64_t seed) {
    struct Family {
        const char* name;
        Mat2<Poly> g;
    };
    const Family fams[] = {{"upper unipotent", upper_unipotent_sym()},
                           {"lower unipotent", lower_unipotent_sym()},
                           {"diagonal", diagonal_sym()}};
    for (const auto& fam : fams) {
        CoupledElement t = right_act(spec, fam.g, e);
        for (int s = 0; s < spec.num_states(); ++s) {
            auto cert = equal_mod_det(t.leg[s], e.leg[s], trials, seed);
            if (!cert.equal) {
                InvarianceReport rep;
                rep.invariant = false;
                std::ostringstream msg;
                msg << fam.name << " translate moves the "
                    << (s == 0 ? std::string("vacuum") : spec.gens[s - 1].name) << " leg";
                if (!cert.witness.empty()) msg << " (" << cert.witness << ')';
                rep.failing = msg.str();
                return rep;
            }
        }
    }
    return {};
}

CoupledElement left_act(const VASpec& spec, const Mat2<Poly>& g, const CoupledElement& e) {
    CoupledElement out = coupled_zero(spec, e.order);
    for (int s = 0; s < spec.num_states(); ++s) out.leg[s] = left_translate(g, e.leg[s]);
    return out;
}

bool g_action_recovery(const VASpec& spec, const Mat2<Rational>& g, const StateVec& v,
                       int order) {
    CoupledElement lhs = left_act(spec, lift_poly(g), delta(spec, v, order));
    StateVec gv = act_states(spec, lift_poly(g), v, Poly::one());
    CoupledElement rhs = delta(spec, gv, order);
    return lhs == rhs;
}

ABracketCoeffs a_bracket_coeffs(const Connection& A, int s, int N) {
    if (!A.regular()) throw std::domain_error("a_bracket_coeffs requires a regular connection");
    if (s < 0) throw std::invalid_argument("differential order must be >= 0");
    if (s >= N) throw std::domain_error("insufficient truncation: need N > s");
    auto F = solve_connection(A.reg, mat2_identity<Rational>(), N);
    auto Finv = matrix_inverse(F);
    for (int i = 0; i < s; ++i) Finv = series_derivative(Finv);
    Rational fact = 1;
    for (int i = 2; i <= s; ++i) fact *= i;
    ABracketCoeffs out;
    out.s = s;
    out.series = scale(F.truncated(Finv.order) * Finv, 1 / fact);
    return out;
}

void TwistedModeExpr::add(int state, int p, const Poly& c) {
    if (c.is_zero()) return;
    if (state == 0 && p != 0) return; // twisted vacuum modes also vanish except id
    auto [it, inserted] = terms.emplace(std::make_pair(state, p), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

TwistedModeExpr TwistedModeExpr::restricted(int p_min) const {
    TwistedModeExpr r;
    r.kmax = kmax;
    for (const auto& [k, c] : terms)
        if (k.second >= p_min) r.terms.emplace(k, c);
    return r;
}

std::string TwistedModeExpr::str(const VASpec& spec) const {
    if (terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : terms) {
        if (!first) out << " + ";
        first = false;
        out << '(' << c.str() << ") ";
        if (k.first == 0) out << "id";
        else out << '(' << spec.gens[k.first - 1].name << ")^{d+A}_{" << (-k.second - 1) << '}';
    }
    return out.str();
}

namespace {

// Shared engine: coefficients(s, k) supplies the z^k matrix of
// F (d^s/s!) F^{-1}; contributions land at output p = m+n-l-k-s.
TwistedModeExpr twisted_formula_engine(
    const VASpec& spec, int a, int m, int b, int n, int kmax,
    const std::function<Mat2<Poly>(int s, int k)>& coefficients) {
    TwistedModeExpr out;
    out.kmax = kmax;
    StateVec vb = spec.basis_state(b);
    for (int l = spec.pole_bound; l < 0; ++l) {
        for (int s = 0; s <= -l - 1; ++s) {
            int r = -l - 1 - s;
            Rational br = binom(Rational(-m - 1), r);
            if (br == 0) continue;
            for (int k = 0; k <= kmax; ++k) {
                Mat2<Poly> Bk = coefficients(s, k);
                StateVec ua = act_states(spec, Bk, spec.basis_state(a), Poly());
                StateVec w = ope_apply(spec, ua, l, vb);
                int p = m + n - l - k - s;
                for (int st = 0; st < spec.num_states(); ++st)
                    if (!w[st].is_zero()) out.add(st, p, w[st] * br);
            }
        }
    }
    return out;
}

Mat2<Poly> symbolic_connection_coeff(int k) {
    Poly ak = Poly::gen(Sym::ga, -k - 1);
    return {ak, Poly::gen(Sym::gb, -k - 1), Poly::gen(Sym::gc, -k - 1), -ak};
}

} // namespace

TwistedModeExpr twisted_commutator_formula(const VASpec& spec, int a, int m, int b, int n,
                                           const Connection& A, int N) {
    if (!A.regular())
        throw std::domain_error("twisted commutator formula requires a regular connection");
    int smax = -spec.pole_bound - 1;
    if (smax >= N)
        throw std::domain_error("insufficient truncation: need N > " + std::to_string(smax));
    int kmax = N - 2;
    std::vector<ABracketCoeffs> bs;
    for (int s = 0; s <= smax; ++s) bs.push_back(a_bracket_coeffs(A, s, N));
    return twisted_formula_engine(spec, a, m, b, n, kmax, [&](int s, int k) {
        if (k >= bs[s].series.order) return Mat2<Poly>::zero();
        return lift_poly(bs[s].series.coeff(k));
    });
}

TwistedModeExpr twisted_commutator_formula_symbolic(const VASpec& spec, int a, int m, int b,
                                                    int n, int kmax) {
    if (spec.pole_bound < -2)
        throw std::domain_error("symbolic connection coefficients are universal only up to "
                                "second order poles");
    return twisted_formula_engine(spec, a, m, b, n, kmax, [&](int s, int k) {
        if (s == 0) return k == 0 ? lift_poly(mat2_identity<Rational>()) : Mat2<Poly>::zero();
        return symbolic_connection_coeff(k);
    });
}

TwistedModeExpr twisted_commutator_l2_display(const VASpec& spec, int a, int m, int b, int n,
                                              int kmax) {
    if (spec.pole_bound < -2)
        throw std::domain_error("the closed form assumes poles of order at most two");
    TwistedModeExpr out;
    out.kmax = kmax;
    StateVec vb = spec.basis_state(b);
    // constant part (-m-1) (a)_{(1)} b at p = m+n+2
    {
        StateVec w = ope_apply(spec, spec.basis_state(a), -2, vb);
        for (int st = 0; st < spec.num_states(); ++st)
            if (!w[st].is_zero()) out.add(st, m + n + 2, w[st] * Rational(-m - 1));
    }
    // connection part (A_{-k-1}.a)_{(1)} b at p = m+n+1-k
    for (int k = 0; k <= kmax; ++k) {
        StateVec ua = act_states(spec, symbolic_connection_coeff(k), spec.basis_state(a), Poly());
        StateVec w = ope_apply(spec, ua, -2, vb);
        for (int st = 0; st < spec.num_states(); ++st)
            if (!w[st].is_zero()) out.add(st, m + n + 1 - k, w[st]);
    }
    return out;
}

TwistedModeExpr twisted_commutator_oracle(const VASpec& spec, int a, int m, int b, int n,
                                          const Connection& A, int N) {
    if (!A.regular())
        throw std::domain_error("twisted commutator oracle requires a regular connection");
    auto F = solve_connection(A.reg, mat2_identity<Rational>(), N);
    auto Finv = matrix_inverse(F);

    // delta(a)_{-m-1} = sum_i (F^{-1}_i.a)_{-(m-i)-1}, commuted bilinearly.
    ModeExpr plain;
    for (int i = 0; i < N; ++i) {
        StateVec ua = act_states(spec, lift_poly(Finv.coeff(i)), spec.basis_state(a), Poly());
        if (ua[1].is_zero() && ua[2].is_zero()) continue;
        for (int j = 0; j < N; ++j) {
            StateVec vb = act_states(spec, lift_poly(Finv.coeff(j)), spec.basis_state(b), Poly());
            if (vb[1].is_zero() && vb[2].is_zero()) continue;
            plain += untwisted_commutator(spec, ua, m - i, vb, n - j);
        }
    }

    // Rewrite plain modes through the twisted basis.
    TwistedModeExpr out;
    out.kmax = N - 2;
    for (const auto& [key, c] : plain.terms) {
        auto [st, q] = key;
        if (st == 0) {
            out.add(0, q, c);
            continue;
        }
        for (int i = 0; i < N; ++i) {
            StateVec w = act_states(spec, lift_poly(F.coeff(i)), spec.basis_state(st), Poly());
            for (int s2 = 0; s2 < spec.num_states(); ++s2)
                if (!w[s2].is_zero()) out.add(s2, q - i, c * w[s2]);
        }
    }
    return out;
}

int twisted_exact_window(const VASpec& spec, int m, int n, int N) {
    return m + n - spec.pole_bound + 2 - N;
}

std::vector<TruncSeries<Poly>> CoupledOpe::component(int l, int num_states) const {
    auto it = part.find(l);
    if (it != part.end()) return it->second;
    return std::vector<TruncSeries<Poly>>(num_states, TruncSeries<Poly>::zero(order));
}

CoupledOpe coupled_ope(const VASpec& spec, int u, int v, int N) {
    CoupledOpe out;
    out.order = N;
    CoupledElement du = delta(spec, spec.basis_state(u), N);
    CoupledElement dv = delta(spec, spec.basis_state(v), N);
    const int ns = spec.num_states();
    for (int su = 1; su < ns; ++su) {
        if (du.leg[su].is_zero()) continue;
        // functional leg of delta(u) around the second point
        auto re = taylor_reexpand(vertex_op(du.leg[su], N));
        for (int sv = 1; sv < ns; ++sv) {
            if (dv.leg[sv].is_zero()) continue;
            auto right = vertex_op(dv.leg[sv], N);
            for (int l = spec.pole_bound; l < 0; ++l) {
                auto states = spec.ope_entry(su, l, sv);
                bool zero = true;
                for (const auto& q : states) zero = zero && q == 0;
                if (zero) continue;
                for (int nn = 0; nn < static_cast<int>(re.size()); ++nn) {
                    int L = l + nn;
                    if (L >= 0) break; // only the singular part is well defined here
                    auto series = re[nn] * right.truncated(re[nn].order);
                    if (series.is_zero()) continue;
                    auto it = out.part.find(L);
                    if (it == out.part.end())
                        it = out.part
                                 .emplace(L, std::vector<TruncSeries<Poly>>(
                                                 ns, TruncSeries<Poly>::zero(N)))
                                 .first;
                    for (int st = 0; st < ns; ++st) {
                        if (states[st] == 0) continue;
                        auto scaled_series = scale(series, states[st]);
                        auto cur = it->second[st].truncated(scaled_series.order);
                        it->second[st] = cur + scaled_series;
                    }
                }
            }
        }
    }
    return out;
}

std::vector<Rational> fibre_evaluate(const VASpec& spec, const CoupledElement& e,
                                     const Connection& A, bool allow_noninvariant) {
    return fibre_evaluate_at(spec, e, A, mat2_identity<Rational>(), allow_noninvariant);
}

std::vector<Rational> fibre_evaluate_at(const VASpec& spec, const CoupledElement& e,
                                        const Connection& A, const Mat2<Rational>& F0,
                                        bool allow_noninvariant) {
    if (!A.regular()) throw std::domain_error("fibre evaluation requires a regular connection");
    if (!allow_noninvariant) {
        auto rep = check_invariance(spec, e);
        if (!rep.invariant)
            throw std::domain_error("fibre evaluation of a non-invariant element: " + rep.failing);
    }
    int depth = e.order;
    for (const auto& p : e.leg)
        for (const auto& [mon, c] : p.terms())
            for (const auto& [g, exp] : mon)
                if (!is_param_sym(g.sym)) depth = std::max(depth, -g.mode);
    auto F = solve_connection(A.reg, F0, depth);
    std::vector<Rational> out;
    for (const auto& p : e.leg) {
        Poly value = p.substitute([&](const Generator& g) -> std::optional<Poly> {
            int k = -g.mode - 1;
            switch (g.sym) {
                case Sym::GA: return Poly::constant(F.m.a.coeff(k));
                case Sym::GB: return Poly::constant(F.m.b.coeff(k));
                case Sym::GC: return Poly::constant(F.m.c.coeff(k));
                case Sym::GD: return Poly::constant(F.m.d.coeff(k));
                case Sym::ga: return Poly::constant(A.reg.m.a.coeff(k));
                case Sym::gb: return Poly::constant(A.reg.m.b.coeff(k));
                case Sym::gc: return Poly::constant(A.reg.m.c.coeff(k));
                case Sym::gd: return Poly::constant(A.reg.m.d.coeff(k));
                default: return std::nullopt;
            }
        });
        if (!value.is_constant())
            throw std::domain_error("fibre evaluation left free parameters in a leg");
        out.push_back(value.constant_value());
    }
    return out;
}

} // namespace bigcenter
