#include "bigcenter/criteria.hpp"

#include <sstream>

#include "bigcenter/binomial.hpp"
#include "bigcenter/coupling.hpp"
#include "bigcenter/functionals.hpp"
#include "bigcenter/gauge.hpp"
#include "bigcenter/poisson.hpp"
#include "bigcenter/rng.hpp"
#include "bigcenter/twisted.hpp"

namespace bigcenter {

namespace {

// Small check collector so a criterion can report its first failure.
struct Checker {
    bool ok = true;
    std::string detail;
    int checks = 0;

    void expect(bool cond, const std::string& what) {
        ++checks;
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }

    CriterionResult result(const std::string& on_pass) const {
        if (ok) return {true, on_pass + " (" + std::to_string(checks) + " checks)"};
        return {false, detail};
    }
};

Sym lower_syms[] = {Sym::ga, Sym::gb, Sym::gc, Sym::gd};
Sym upper_syms[] = {Sym::GA, Sym::GB, Sym::GC, Sym::GD};

CriterionResult embedding_display() {
    Checker c;
    Mat2<Poly> e = embed_matrix(0);
    Poly A2 = Poly::gen(Sym::GA, -2), B2 = Poly::gen(Sym::GB, -2);
    Poly C2 = Poly::gen(Sym::GC, -2), D2 = Poly::gen(Sym::GD, -2);
    Poly A1 = Poly::gen(Sym::GA, -1), B1 = Poly::gen(Sym::GB, -1);
    Poly C1 = Poly::gen(Sym::GC, -1), D1 = Poly::gen(Sym::GD, -1);
    c.expect(e.a == -(A2 * D1) + B2 * C1, "a* entry differs");
    c.expect(e.b == A2 * B1 - B2 * A1, "b* entry differs");
    c.expect(e.c == -(C2 * D1) + D2 * C1, "c* entry differs");
    c.expect(e.d == C2 * B1 - D2 * A1, "d* entry differs");
    c.expect(e.a.str() == "-A*_{-2} D*_{-1} + B*_{-2} C*_{-1}",
             "printed normal form differs: " + e.a.str());
    c.expect(embed_g_in_G(Sym::ga, -1) == e.a, "single-generator accessor differs");
    // general mode: a*_{-n-1} = -sum_{i+j-1=n} i (A D - B C)
    for (int n = 0; n <= 3; ++n) {
        Poly expect;
        for (int i = 1; i <= n + 1; ++i) {
            int j = n + 1 - i;
            expect -= Rational(i) * (Poly::gen(Sym::GA, -i - 1) * Poly::gen(Sym::GD, -j - 1) -
                                     Poly::gen(Sym::GB, -i - 1) * Poly::gen(Sym::GC, -j - 1));
        }
        c.expect(embed_g_in_G(Sym::ga, -n - 1) == expect,
                 "a* image at mode " + std::to_string(-n - 1) + " differs");
    }
    return c.result("embedding matrix reproduced verbatim");
}

CriterionResult invariance() {
    Checker c;
    // concrete unipotent translate fixes the mode -1 image exactly
    Mat2<Poly> u1 = lift_poly(mat2(1, 1, 0, 1));
    Poly img = embed_g_in_G(Sym::ga, -1);
    c.expect(right_translate(u1, img) == img, "concrete unipotent moves a*_{-1} image");
    // symbolic one-parameter subgroups on all images for modes -1..-5
    const Mat2<Poly> fams[] = {upper_unipotent_sym(), lower_unipotent_sym(), diagonal_sym()};
    for (const auto& g : fams)
        for (Sym s : lower_syms)
            for (int n = 0; n <= 4; ++n) {
                Poly im = embed_g_in_G(s, -n - 1);
                auto cert = equal_mod_det(right_translate(g, im), im, 20, kDefaultSeed);
                c.expect(cert.equal, std::string("translate moves image of ") + sym_name(s) +
                                         " at mode " + std::to_string(-n - 1));
            }
    return c.result("embedded images are right-translation invariant");
}

CriterionResult vertex_embed_match() {
    Checker c;
    const int N = 8;
    for (Sym s : lower_syms)
        for (int n = 0; n <= 4; ++n) {
            auto lhs = vertex_op(embed_g_in_G(s, -n - 1), N);
            for (int k = 0; k < N; ++k) {
                Poly rhs = embed_g_in_G(s, -n - k - 1) * binom_int(n + k, n);
                c.expect(lhs.coeff(k) == rhs, std::string("coefficient z^") + std::to_string(k) +
                                                  " of Y(" + sym_name(s) + ") differs");
            }
        }
    for (int n = 0; n <= 8; ++n)
        for (int k = 0; k <= 8; ++k)
            for (int l = 0; l <= 8; ++l) {
                Rational lhs = 0;
                for (int i = 0; i <= n + 1; ++i) lhs += Rational(i) * binom_int(k, i) * binom_int(l, n + 1 - i);
                c.expect(lhs == Rational(k) * binom_int(k + l - 1, n),
                         "binomial identity fails at n=" + std::to_string(n));
            }
    return c.result("vertex operator commutes with the embedding");
}

CriterionResult torsor_round_trip() {
    Checker c;
    const int N = 10;
    Rng rng(401);
    for (int trial = 0; trial < 5; ++trial) {
        Connection A = rng.random_connection(3, N);
        auto F = solve_connection(A, mat2_identity<Rational>(), N);
        c.expect(det_series(F) == TruncSeries<Rational>::one(N), "det(F) != 1");
        auto back = connection_of(F).truncated(N - 2);
        auto orig = A.reg.truncated(N - 2);
        c.expect(back == orig, "round trip differs");
        // initial-value independence
        auto G = solve_connection(A, rng.unimodular_mat2(), N);
        c.expect(connection_of(G).truncated(N - 2) == orig, "dependence on initial value");
    }
    return c.result("connection <-> solution round trip is the identity");
}

CriterionResult automorphisms() {
    Checker c;
    const int N = 8;
    // trivial connection: constants with the determinant constraint
    auto fam0 = automorphism_space(MatrixSeries<Rational>(N), N);
    Mat2<Poly> F0{Poly::from_gen(fam0.params[0]), Poly::from_gen(fam0.params[1]),
                  Poly::from_gen(fam0.params[2]), Poly::from_gen(fam0.params[3])};
    c.expect(fam0.family.coeff(0) == F0, "constant term is not the free matrix");
    for (int k = 1; k < N; ++k)
        c.expect(fam0.family.coeff(k) == Mat2<Poly>::zero(), "nonconstant automorphism of d");
    c.expect(fam0.constraint == F0.det() - Poly::one(), "constraint is not det - 1");

    // constant diagonal connection: exponential off-diagonal entries
    const Rational alpha = rat(3, 4); // half of t - t^{-1} at t = 2
    Connection Ad = make_connection({mat2(alpha, 0, 0, -alpha)}, N);
    auto fam = automorphism_space(Ad.reg, N);
    for (int k = 0; k < N; ++k) {
        auto ck = fam.family.coeff(k);
        Rational fact = 1;
        for (int i = 2; i <= k; ++i) fact *= i;
        Rational up = 1, down = 1;
        for (int i = 0; i < k; ++i) { up *= -2 * alpha; down *= 2 * alpha; }
        c.expect(ck.b == Poly::from_gen(fam.params[1]) * (up / fact),
                 "B entry is not B exp(-(t-t^{-1}) z)");
        c.expect(ck.c == Poly::from_gen(fam.params[2]) * (down / fact),
                 "C entry is not C exp((t-t^{-1}) z)");
        if (k > 0) {
            c.expect(ck.a.is_zero() && ck.d.is_zero(), "diagonal entries drift");
        }
    }

    // members fix the connection under the gauge action
    Rng rng(402);
    Connection A = rng.random_connection(2, N);
    auto famA = automorphism_space(A.reg, N);
    for (int trial = 0; trial < 5; ++trial) {
        auto member = aut_member(famA, rng.unimodular_mat2());
        auto acted = gauge_act(member, A.reg).truncated(N - 2);
        c.expect(acted == A.reg.truncated(N - 2), "member does not fix the connection");
    }
    // and the family is the conjugated solution family
    auto FA = solve_connection(A.reg, mat2_identity<Rational>(), N);
    MatrixSeries<Poly> FAp(N), FAinvp(N);
    auto FAinv = matrix_inverse(FA);
    for (int k = 0; k < N; ++k) {
        FAp.set_coeff(k, lift_poly(FA.coeff(k)));
        FAinvp.set_coeff(k, lift_poly(FAinv.coeff(k)));
    }
    Mat2<Poly> P0{Poly::from_gen(famA.params[0]), Poly::from_gen(famA.params[1]),
                  Poly::from_gen(famA.params[2]), Poly::from_gen(famA.params[3])};
    MatrixSeries<Poly> C0(N);
    C0.set_coeff(0, P0);
    c.expect(famA.family == FAp * C0 * FAinvp, "family is not the conjugated constant family");
    return c.result("automorphism groups match the constant family");
}

CriterionResult poisson_module() {
    Checker c;
    const Mat2<Rational> basis[] = {sl2_e(), sl2_f(), sl2_h()};
    Mat2<Poly> E = embed_matrix(0);
    auto pair_with = [&](const Mat2<Rational>& u) {
        // tr(u E) as a free-ring representative
        return E.a * u.a + E.c * u.b + E.b * u.c + E.d * u.d;
    };
    for (const auto& x : basis)
        for (const auto& u : basis) {
            Poly lhs = poisson_module_act(x, pair_with(u));
            Poly rhs = pair_with(lie_bracket(x, u));
            c.expect(lhs == rhs, "module action does not reduce to the bracket");
            // lambda^0 term of the algebra bracket maps to the same image
            LambdaPoly br = poisson_bracket(x, 0, u, 0);
            Poly l0 = br.coef.count(0) ? br.coef.at(0) : Poly();
            auto cert = equal_mod_det(embed_expr(l0), lhs, 20, kDefaultSeed);
            c.expect(cert.equal, "lambda^0 term disagrees with the module action");
        }
    return c.result("module action restricts to the algebra bracket");
}

CriterionResult fermion_ope() {
    Checker c;
    const int N = 6;
    VASpec sf = builtin_symplectic_fermions();
    const int x = 1, y = 2;

    auto xy = coupled_ope(sf, x, y, N);
    auto pole2 = xy.component(-2, sf.num_states());
    auto pole1 = xy.component(-1, sf.num_states());
    for (int n = 0; n <= 3; ++n) {
        Poly det_n = det_relation(n) + (n == 0 ? Poly::one() : Poly());
        c.expect(pole2[0].coeff(n) == det_n, "(z-w)^{-2} coefficient is not det(w)");
        c.expect(pole1[0].coeff(n) == -embed_g_in_G(Sym::gd, -n - 1),
                 "(z-w)^{-1} coefficient is not -d*(w)");
        auto cert = equal_mod_det(pole2[0].coeff(n), n == 0 ? Poly::one() : Poly());
        c.expect(cert.equal, "det(w) does not reduce to 1 in the quotient");
    }
    c.expect(pole2[1].is_zero() && pole2[2].is_zero() && pole1[1].is_zero() && pole1[2].is_zero(),
             "generator states appear in the xy product");

    auto xx = coupled_ope(sf, x, x, N);
    c.expect(xx.component(-2, sf.num_states())[0].is_zero(), "xx has a second order pole");
    auto xx1 = xx.component(-1, sf.num_states());
    for (int n = 0; n <= 3; ++n)
        c.expect(xx1[0].coeff(n) == -embed_g_in_G(Sym::gc, -n - 1), "xx pole is not -c*(w)");

    auto yy = coupled_ope(sf, y, y, N);
    c.expect(yy.component(-2, sf.num_states())[0].is_zero(), "yy has a second order pole");
    auto yy1 = yy.component(-1, sf.num_states());
    for (int n = 0; n <= 3; ++n)
        c.expect(yy1[0].coeff(n) == embed_g_in_G(Sym::gb, -n - 1), "yy pole is not b*(w)");
    return c.result("deformed operator products match");
}

CriterionResult bracket_coeffs() {
    Checker c;
    const int N = 10;
    Rng rng(403);
    for (int trial = 0; trial < 5; ++trial) {
        Connection A = rng.random_connection(2, N);
        auto B0 = a_bracket_coeffs(A, 0, N);
        c.expect(B0.series == MatrixSeries<Rational>::identity(N), "B_0 != id");
        auto B1 = a_bracket_coeffs(A, 1, N);
        c.expect(B1.series == A.reg.truncated(B1.series.order), "B_1 != A");
        auto B2 = a_bracket_coeffs(A, 2, N);
        auto diffpoly = scale(A.reg * A.reg + series_derivative(A.reg).truncated(N), rat(1, 2));
        c.expect(B2.series.truncated(N - 2) == diffpoly.truncated(N - 2),
                 "B_2 != (A^2 + A')/2");
    }
    return c.result("differential polynomial coefficients check out");
}

CriterionResult twisted_oracle_equivalence() {
    Checker c;
    const int N = 12;
    VASpec sf = builtin_symplectic_fermions();
    Rng rng(404);
    int nonzero = 0;
    // modes run over [-2, 3]: the stated window plus annihilation-side
    // cells, where the internal sums cover several k at once
    for (int trial = 0; trial < 5; ++trial) {
        Connection A = rng.random_connection(2, N);
        for (int a = 1; a <= 2; ++a)
            for (int b = 1; b <= 2; ++b)
                for (int m = -2; m <= 3; ++m)
                    for (int n = -2; n <= 3; ++n) {
                        auto lhs = twisted_commutator_formula(sf, a, m, b, n, A, N);
                        auto rhs = twisted_commutator_oracle(sf, a, m, b, n, A, N);
                        int win = twisted_exact_window(sf, m, n, N);
                        bool same = lhs.restricted(win) == rhs.restricted(win);
                        if (!lhs.restricted(win).is_zero()) ++nonzero;
                        std::ostringstream what;
                        what << "formula/oracle differ at trial " << trial << " a=" << a
                             << " b=" << b << " m=" << m << " n=" << n;
                        c.expect(same, what.str());
                    }
    }
    // with a degree <= 2 connection the bracket is the scalar a_{m+n+1} id,
    // nonzero only for -1 <= m+n <= 1 plus the pairing cell m+n = -2
    c.expect(nonzero >= 100, "comparison is vacuous");
    return c.result("twisted commutator formula matches the brute-force expansion");
}

CriterionResult l2_specialization() {
    Checker c;
    VASpec sf = builtin_symplectic_fermions();
    const int kmax = 8;
    for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 2; ++b)
            for (int m = 0; m <= 4; ++m)
                for (int n = 0; n <= 4; ++n) {
                    auto gen = twisted_commutator_formula_symbolic(sf, a, m, b, n, kmax);
                    auto disp = twisted_commutator_l2_display(sf, a, m, b, n, kmax);
                    std::ostringstream what;
                    what << "specialization differs at a=" << a << " b=" << b << " m=" << m
                         << " n=" << n;
                    c.expect(gen == disp, what.str());
                }
    return c.result("second order pole closed form agrees symbolically");
}

CriterionResult action_recovery() {
    Checker c;
    VASpec sf = builtin_symplectic_fermions();
    const Mat2<Rational> gens[] = {mat2(1, 1, 0, 1), mat2(1, 0, 1, 1), mat2(2, 0, 0, rat(1, 2))};
    for (const auto& g : gens)
        for (int v = 1; v <= 2; ++v)
            c.expect(g_action_recovery(sf, g, sf.basis_state(v)), "left action differs from delta");
    // composite consistency
    Mat2<Rational> gh = gens[0] * gens[1];
    for (int v = 1; v <= 2; ++v) {
        CoupledElement lhs =
            left_act(sf, lift_poly(gens[0]), left_act(sf, lift_poly(gens[1]), delta(sf, sf.basis_state(v))));
        CoupledElement rhs = left_act(sf, lift_poly(gh), delta(sf, sf.basis_state(v)));
        c.expect(lhs == rhs, "composite left action is inconsistent");
    }
    return c.result("group action on the zero fibre is recovered");
}

CriterionResult monodromy_commutator() {
    Checker c;
    // backward binomial convolution as an exact polynomial identity
    Poly X = Poly::param(Sym::X);
    for (int q = 0; q <= 6; ++q)
        for (int m = 0; m <= 5; ++m) {
            Poly lhs;
            for (int r = 0; r <= q; ++r) lhs += binom(X, q - r) * binom(Rational(-m - 1), r);
            Poly rhs = binom(X + Poly::constant(-m - 1), q);
            c.expect(lhs == rhs, "binomial convolution fails at q=" + std::to_string(q));
        }
    // negative modes are included so the surviving vacuum term at
    // m+n+2 = 0 gives the comparison real content
    VASpec sf = builtin_symplectic_fermions();
    for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 2; ++b)
            for (int m = -3; m <= 3; ++m)
                for (int n = -3; n <= 3; ++n) {
                    auto red = regular_singular_commutator(sf, a, m, b, n, true);
                    auto unred = regular_singular_commutator(sf, a, m, b, n, false);
                    c.expect(red == unred, "reduced and unreduced forms differ");
                    // lambda = 0 degenerates to the plain commutator
                    auto at0 = substitute_lambda(red, 0);
                    auto plain =
                        untwisted_commutator(sf, sf.basis_state(a), m, sf.basis_state(b), n);
                    c.expect(at0.terms == plain.terms, "lambda = 0 does not degenerate");
                }
    return c.result("regular singular commutator collapses as expected");
}

CriterionResult normal_forms() {
    Checker c;
    Poly lam = Poly::param(Sym::lam);
    Mat2<Poly> A0{lam, Poly(), Poly(), -lam};
    auto nf = fnorm(A0, NormalForm::Kind::semisimple);
    auto defect = normal_form_defect(A0, nf);
    c.expect(defect.a.is_zero() && defect.b.is_zero() && defect.c.is_zero() && defect.d.is_zero(),
             "semisimple normal form fails its equation");

    Mat2<Poly> N0{Poly(), Poly::one(), Poly(), Poly()};
    auto nf2 = fnorm(N0, NormalForm::Kind::nilpotent);
    auto defect2 = normal_form_defect(N0, nf2);
    c.expect(defect2.a.is_zero() && defect2.b.is_zero() && defect2.c.is_zero() &&
                 defect2.d.is_zero(),
             "nilpotent normal form fails its equation");
    c.expect(!nf2.F.b.is_zero(), "second kind solution is missing");

    auto nf0 = fnorm(Mat2<Poly>{Poly(), Poly(), Poly(), Poly()}, NormalForm::Kind::semisimple);
    c.expect(nf0.F.a == LogLaurent::constant(Poly::one()) && nf0.F.b.is_zero(),
             "lambda = 0 normal form is not the identity");

    // twisted operators degenerate at lambda = 0 to the plain ones
    const int N = 8;
    for (Sym s : upper_syms)
        for (int n = 0; n <= 3; ++n) {
            LogLaurent tw = twisted_vertex_op(s, -n - 1, nf, N);
            LogLaurent at0;
            for (const auto& [e, coeff] : tw.terms()) {
                Poly c0 = coeff.substitute([&](const Generator& g) -> std::optional<Poly> {
                    if (g.sym == Sym::lam) return Poly();
                    return std::nullopt;
                });
                at0 += LogLaurent::term({e.n, 0, e.j}, c0);
            }
            auto plain = vertex_op(Poly::gen(s, -n - 1), N);
            for (int k = 0; k < N; ++k)
                c.expect(at0.coeff({k, 0, 0}) == plain.coeff(k),
                         std::string("twisted operator of ") + sym_name(s) +
                             " does not degenerate at k=" + std::to_string(k));
        }
    return c.result("normal forms and twisted operators verified");
}

} // namespace

const std::vector<Criterion>& acceptance_criteria() {
    static const std::vector<Criterion> list = {
        {1, "embedding-display", embedding_display},
        {2, "invariance", invariance},
        {3, "vertex-embed-match", vertex_embed_match},
        {4, "torsor-round-trip", torsor_round_trip},
        {5, "automorphisms", automorphisms},
        {6, "poisson-module", poisson_module},
        {7, "fermion-ope", fermion_ope},
        {8, "bracket-coeffs", bracket_coeffs},
        {9, "twisted-oracle-equivalence", twisted_oracle_equivalence},
        {10, "l2-specialization", l2_specialization},
        {11, "action-recovery", action_recovery},
        {12, "monodromy-commutator", monodromy_commutator},
        {13, "normal-forms", normal_forms},
    };
    return list;
}

int run_acceptance(std::ostream& out, std::optional<int> only) {
    int failures = 0;
    bool matched = false;
    for (const auto& crit : acceptance_criteria()) {
        if (only && crit.id != *only) continue;
        matched = true;
        CriterionResult res;
        try {
            res = crit.run();
        } catch (const std::exception& ex) {
            res = {false, std::string("exception: ") + ex.what()};
        }
        out << (res.pass ? "PASS" : "FAIL") << " criterion-" << crit.id << ' ' << crit.name
            << ": " << res.detail << '\n';
        if (!res.pass) ++failures;
    }
    if (only && !matched) {
        out << "no criterion with id " << *only << '\n';
        return 1;
    }
    return failures;
}

} // namespace bigcenter
