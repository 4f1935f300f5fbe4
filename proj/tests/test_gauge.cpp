#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bigcenter/functionals.hpp"
#include "bigcenter/gauge.hpp"
#include "bigcenter/rng.hpp"

using namespace bigcenter;

TEST_CASE("matrix inverse by adjugate over the inverted determinant") {
    auto id = MatrixSeries<Rational>::identity(6);
    CHECK(matrix_inverse(id) == id);

    // constant unipotent
    auto F = MatrixSeries<Rational>::from_coeffs({mat2(1, 1, 0, 1)}, 6);
    auto Finv = matrix_inverse(F);
    CHECK(Finv.coeff(0) == mat2(1, -1, 0, 1));
    for (int k = 1; k < 6; ++k) CHECK(Finv.coeff(k) == mat2(0, 0, 0, 0));

    Rng rng(21);
    for (int t = 0; t < 5; ++t) {
        auto G = solve_connection(rng.random_connection(2, 6).reg, rng.unimodular_mat2(), 6);
        CHECK(G * matrix_inverse(G) == MatrixSeries<Rational>::identity(6));
        CHECK(matrix_inverse(G) * G == MatrixSeries<Rational>::identity(6));
    }

    auto S = MatrixSeries<Rational>::from_coeffs({mat2(0, 0, 0, 0), mat2(1, 0, 0, 1)}, 4);
    CHECK_THROWS_WITH(matrix_inverse(S), "not invertible at z=0");
}

TEST_CASE("adjugate of the symbolic point matches the generator display") {
    Mat2<Poly> M = gen_matrix(-1, true);
    Mat2<Poly> adj = M.adjugate();
    CHECK(adj.a == Poly::gen(Sym::GD, -1));
    CHECK(adj.b == -Poly::gen(Sym::GB, -1));
    CHECK(adj.c == -Poly::gen(Sym::GC, -1));
    CHECK(adj.d == Poly::gen(Sym::GA, -1));
}

TEST_CASE("solving a connection") {
    const int N = 10;
    // zero connection keeps the initial value
    auto F0 = mat2(1, 2, 0, 1);
    auto F = solve_connection(MatrixSeries<Rational>(N), F0, N);
    CHECK(F.coeff(0) == F0);
    for (int k = 1; k < N; ++k) CHECK(F.coeff(k) == mat2(0, 0, 0, 0));

    // constant diagonal: columns are the two exponentials exp(-tz), exp(tz)
    const Rational t = rat(2, 3);
    Connection A = make_connection({mat2(t, 0, 0, -t)}, N);
    auto Fd = solve_connection(A, mat2_identity<Rational>(), N);
    Rational fact = 1, up = 1, down = 1;
    for (int k = 0; k < N; ++k) {
        if (k > 0) {
            fact *= k;
            up *= -t;
            down *= t;
        }
        CHECK(Fd.m.a.coeff(k) == up / fact);
        CHECK(Fd.m.d.coeff(k) == down / fact);
        CHECK(Fd.m.b.coeff(k) == 0);
        CHECK(Fd.m.c.coeff(k) == 0);
    }

    // the identity solves the trivial connection
    CHECK(connection_of(MatrixSeries<Rational>::identity(N)) == MatrixSeries<Rational>(N - 1));

    // round trip through the attached connection, any initial value
    Rng rng(22);
    for (int trial = 0; trial < 5; ++trial) {
        Connection B = rng.random_connection(3, N);
        auto G = solve_connection(B, rng.unimodular_mat2(), N);
        CHECK(connection_of(G).truncated(N - 2) == B.reg.truncated(N - 2));
        CHECK(det_series(G) == TruncSeries<Rational>::one(N)); // Liouville
    }
}

TEST_CASE("gauge action") {
    const int N = 10;
    Rng rng(23);
    Connection A = rng.random_connection(2, N);
    auto id = MatrixSeries<Rational>::identity(N);
    CHECK(gauge_act(id, A.reg) == A.reg.truncated(N - 1));

    // acting on the trivial connection gives the attached connection
    auto F = solve_connection(rng.random_connection(2, N).reg, rng.unimodular_mat2(), N);
    CHECK(gauge_act(F, MatrixSeries<Rational>(N)) == connection_of(F));

    // group action: F then F^{-1} is the identity
    auto Finv = matrix_inverse(F);
    auto once = gauge_act(Finv, A.reg);
    auto back = gauge_act(F.truncated(once.order + 1), once);
    CHECK(back.truncated(N - 2) == A.reg.truncated(N - 2));

    // left action on random triples
    for (int trial = 0; trial < 5; ++trial) {
        auto F1 = solve_connection(rng.random_connection(1, N).reg, rng.unimodular_mat2(), N);
        auto F2 = solve_connection(rng.random_connection(1, N).reg, rng.unimodular_mat2(), N);
        auto lhs = gauge_act(F1 * F2, A.reg).truncated(N - 2);
        auto rhs = gauge_act(F1.truncated(N - 1), gauge_act(F2, A.reg)).truncated(N - 2);
        CHECK(lhs == rhs);
    }

    auto bad = MatrixSeries<Rational>::from_coeffs({mat2(2, 0, 0, 1)}, N);
    CHECK_THROWS(gauge_act(bad, A.reg));
}

TEST_CASE("automorphism space of the trivial connection") {
    auto fam = automorphism_space(MatrixSeries<Rational>(6), 6);
    for (int k = 1; k < 6; ++k) CHECK(fam.family.coeff(k) == Mat2<Poly>::zero());
    Poly expect = Poly::from_gen(fam.params[0]) * Poly::from_gen(fam.params[3]) -
                  Poly::from_gen(fam.params[1]) * Poly::from_gen(fam.params[2]) - Poly::one();
    CHECK(fam.constraint == expect);
}

TEST_CASE("automorphism members fix their connection") {
    const int N = 8;
    Rng rng(24);
    for (int trial = 0; trial < 3; ++trial) {
        Connection A = rng.random_connection(2, N);
        auto fam = automorphism_space(A.reg, N);
        for (int s = 0; s < 3; ++s) {
            auto member = aut_member(fam, rng.unimodular_mat2());
            CHECK(det_series(member) == TruncSeries<Rational>::one(N));
            CHECK(gauge_act(member, A.reg).truncated(N - 2) == A.reg.truncated(N - 2));
            // the defining equation dF = [F, A]
            auto dF = series_derivative(member);
            auto bracket = (member * A.reg - A.reg * member).truncated(N - 1);
            CHECK(dF == bracket);
        }
    }
}

TEST_CASE("constant diagonal connection has exponential automorphisms") {
    const int N = 8;
    const Rational alpha = rat(3, 4);
    Connection A = make_connection({mat2(alpha, 0, 0, -alpha)}, N);
    auto fam = automorphism_space(A.reg, N);
    Rational fact = 1, up = 1, down = 1;
    for (int k = 0; k < N; ++k) {
        if (k > 0) {
            fact *= k;
            up *= -2 * alpha;
            down *= 2 * alpha;
        }
        auto ck = fam.family.coeff(k);
        CHECK(ck.b == Poly::from_gen(fam.params[1]) * (up / fact));
        CHECK(ck.c == Poly::from_gen(fam.params[2]) * (down / fact));
    }
}

TEST_CASE("traceless coefficients are enforced") {
    CHECK_THROWS_WITH(make_connection({mat2(1, 0, 0, 1)}, 4), "connection is not traceless");
}
