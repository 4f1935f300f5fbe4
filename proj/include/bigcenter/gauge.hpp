#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mat2.hpp"

namespace bigcenter {

// Regular part A(z) = sum_k A_k z^k of a connection d + A, with an
// optional z^{-1} coefficient for the regular singular route.  All
// coefficient matrices are traceless; only regular connections are
// accepted by the solver and the gauge action.
struct Connection {
    MatrixSeries<Rational> reg;
    std::optional<Mat2<Poly>> singular_a0;

    bool regular() const { return !singular_a0.has_value(); }
    int order() const { return reg.order; }
};

template <class R>
void require_traceless(const MatrixSeries<R>& A) {
    if (!trace_series(A).is_zero()) throw std::domain_error("connection is not traceless");
}

inline Connection make_connection(const std::vector<Mat2<Rational>>& coeffs, int order) {
    Connection A;
    A.reg = MatrixSeries<Rational>::from_coeffs(coeffs, order);
    require_traceless(A.reg);
    return A;
}

// F^{-1} by adjugate over the inverted determinant series.
template <class R>
MatrixSeries<R> matrix_inverse(const MatrixSeries<R>& F) {
    auto det = det_series(F);
    if (det.order == 0 || ring_is_zero(det.coeff(0)))
        throw std::domain_error("not invertible at z=0");
    TruncSeries<R> dinv;
    try {
        dinv = series_invert(det);
    } catch (const std::domain_error&) {
        throw std::domain_error("not invertible at z=0");
    }
    auto adj = adjugate(F);
    MatrixSeries<R> s;
    s.order = F.order;
    s.m = {adj.m.a * dinv, adj.m.b * dinv, adj.m.c * dinv, adj.m.d * dinv};
    return s;
}

// Unique solution of dF + AF = 0 with F(0) = F0, by the coefficient
// recursion F_{m+1} = -(1/(m+1)) sum_{i+j=m} A_i F_j.  Correct for
// non-commuting coefficients; no exponential shortcut is taken.
template <class R>
MatrixSeries<R> solve_connection(const MatrixSeries<R>& A, const Mat2<R>& F0, int N) {
    MatrixSeries<R> F(N);
    if (N == 0) return F;
    F.set_coeff(0, F0);
    for (int m = 0; m + 1 < N; ++m) {
        Mat2<R> acc = Mat2<R>::zero();
        for (int i = 0; i <= m; ++i) acc = acc + A.coeff(i) * F.coeff(m - i);
        F.set_coeff(m + 1, acc * ring_from_rational<R>(rat(-1, m + 1)));
    }
    return F;
}

inline MatrixSeries<Rational> solve_connection(const Connection& A, const Mat2<Rational>& F0, int N) {
    if (!A.regular()) throw std::domain_error("solve_connection requires a regular connection");
    return solve_connection(A.reg, F0, N);
}

// Connection attached to a solution, A = -(dF) F^{-1}, truncated one
// order below F.  Asserts tracelessness of the result.
template <class R>
MatrixSeries<R> connection_of(const MatrixSeries<R>& F) {
    auto dF = series_derivative(F);
    auto Finv = matrix_inverse(F).truncated(dF.order);
    auto A = MatrixSeries<R>(dF.order) - (dF * Finv);
    require_traceless(A);
    return A;
}

// Gauge action d+A -> d + (-(dF)F^{-1} + F A F^{-1}), for F in the
// determinant-one group to order N.
template <class R>
MatrixSeries<R> gauge_act(const MatrixSeries<R>& F, const MatrixSeries<R>& A) {
    if (!(det_series(F) == TruncSeries<R>::one(F.order)))
        throw std::domain_error("gauge transformation is not unimodular");
    auto Finv = matrix_inverse(F);
    auto dF = series_derivative(F);
    auto out = (MatrixSeries<R>(dF.order) - (dF * Finv.truncated(dF.order))) +
               (F * A * Finv).truncated(std::min(dF.order, A.order));
    require_traceless(out);
    return out;
}

// Four-parameter family of gauge transformations fixing d + A, i.e. the
// solutions of dF = [F, A] with F(0) a symbolic matrix, together with the
// determinant-one constraint on the parameters.
struct AutFamily {
    std::array<Generator, 4> params; // initial-value coordinates A*,B*,C*,D* at mode -1
    MatrixSeries<Poly> family;
    Poly constraint; // det(F(0)) - 1
};

inline AutFamily automorphism_space(const MatrixSeries<Rational>& A, int N) {
    require_traceless(A);
    AutFamily out;
    out.params = {mode_gen(Sym::GA, -1), mode_gen(Sym::GB, -1), mode_gen(Sym::GC, -1),
                  mode_gen(Sym::GD, -1)};
    Mat2<Poly> F0{Poly::from_gen(out.params[0]), Poly::from_gen(out.params[1]),
                  Poly::from_gen(out.params[2]), Poly::from_gen(out.params[3])};
    out.constraint = F0.det() - Poly::one();
    MatrixSeries<Poly> F(N);
    if (N == 0) { out.family = F; return out; }
    F.set_coeff(0, F0);
    for (int m = 0; m + 1 < N; ++m) {
        Mat2<Poly> acc = Mat2<Poly>::zero();
        for (int i = 0; i <= m; ++i) {
            Mat2<Poly> Ai = lift_poly(A.coeff(i));
            Mat2<Poly> Fj = F.coeff(m - i);
            acc = acc + (Fj * Ai - Ai * Fj);
        }
        F.set_coeff(m + 1, acc * Poly::constant(rat(1, m + 1)));
    }
    out.family = F;
    return out;
}

// Member of the family at concrete initial values (must satisfy the
// constraint to stay in the group).
inline MatrixSeries<Rational> aut_member(const AutFamily& fam, const Mat2<Rational>& F0) {
    MatrixSeries<Rational> F(fam.family.order);
    for (int k = 0; k < F.order; ++k) {
        auto coef = fam.family.coeff(k);
        auto eval = [&](const Poly& p) {
            Poly r = p.substitute([&](const Generator& g) -> std::optional<Poly> {
                if (g == fam.params[0]) return Poly::constant(F0.a);
                if (g == fam.params[1]) return Poly::constant(F0.b);
                if (g == fam.params[2]) return Poly::constant(F0.c);
                if (g == fam.params[3]) return Poly::constant(F0.d);
                return std::nullopt;
            });
            if (!r.is_constant()) throw std::domain_error("family member is not rational");
            return r.constant_value();
        };
        F.set_coeff(k, mat2(eval(coef.a), eval(coef.b), eval(coef.c), eval(coef.d)));
    }
    return F;
}

} // namespace bigcenter
