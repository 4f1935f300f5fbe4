#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bigcenter/binomial.hpp"
#include "bigcenter/loglaurent.hpp"
#include "bigcenter/poly.hpp"
#include "bigcenter/rng.hpp"
#include "bigcenter/series.hpp"

using namespace bigcenter;

namespace {

Poly random_poly(Rng& rng, int terms = 3) {
    const Sym syms[] = {Sym::GA, Sym::GB, Sym::GC, Sym::GD, Sym::ga, Sym::gb, Sym::gc};
    Poly p;
    for (int t = 0; t < terms; ++t) {
        Poly mono = Poly::constant(rng.small_rational());
        int factors = static_cast<int>(rng.pick(0, 2));
        for (int f = 0; f < factors; ++f)
            mono *= Poly::gen(syms[rng.pick(0, 6)], static_cast<int>(rng.pick(-4, -1)));
        p += mono;
    }
    return p;
}

TruncSeries<Rational> random_series(Rng& rng, int order) {
    auto s = TruncSeries<Rational>::zero(order);
    for (int k = 0; k < order; ++k) s.c[k] = rng.small_rational();
    return s;
}

} // namespace

TEST_CASE("rationals reduce and print") {
    CHECK(rat(2, 4) == rat(1, 2));
    CHECK(to_string(rat(-6, 4)) == "-3/2");
    CHECK(to_string(rat(5)) == "5");
    CHECK(rat_from_string("-3/2") == rat(-3, 2));
    CHECK_THROWS(rat(1, 0));
    CHECK_THROWS(reciprocal(Rational(0)));
}

TEST_CASE("polynomial arithmetic normal forms") {
    Poly A1 = Poly::gen(Sym::GA, -1), B1 = Poly::gen(Sym::GB, -1);
    Poly C1 = Poly::gen(Sym::GC, -1), D1 = Poly::gen(Sym::GD, -1);

    // determinant of the identity point
    Poly det = Poly::gen(Sym::GA, -1) * Poly::gen(Sym::GD, -1) -
               Poly::gen(Sym::GB, -1) * Poly::gen(Sym::GC, -1);
    Poly at_id = det.substitute([&](const Generator& g) -> std::optional<Poly> {
        if (g.sym == Sym::GA || g.sym == Sym::GD) return Poly::one();
        if (g.sym == Sym::GB || g.sym == Sym::GC) return Poly();
        return std::nullopt;
    });
    CHECK(at_id == Poly::one());

    Rng rng(1);
    CHECK((random_poly(rng) * Poly()).is_zero());

    // the unipotent-invariance cancellation
    Poly A2 = Poly::gen(Sym::GA, -2), B2 = Poly::gen(Sym::GB, -2);
    Poly lhs = (A2 + B2) * C1 - A2 * (C1 + D1);
    CHECK(lhs == B2 * C1 - A2 * D1);
    CHECK((A1 * B1) * C1 == A1 * (B1 * C1));
}

TEST_CASE("ring axioms hold on random triples") {
    Rng rng(11);
    for (int t = 0; t < 20; ++t) {
        Poly p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
        CHECK((p + q) + r == p + (q + r));
        CHECK(p * q == q * p);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p - p == Poly());
    }
    for (int t = 0; t < 20; ++t) {
        auto f = random_series(rng, 6), g = random_series(rng, 6), h = random_series(rng, 6);
        CHECK((f + g) + h == f + (g + h));
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
    }
}

TEST_CASE("substitution is a ring homomorphism") {
    Rng rng(12);
    auto assignment = [&](const Generator& g) -> std::optional<Poly> {
        if (g.sym == Sym::GA) return Poly::constant(rat(2, 3));
        if (g.sym == Sym::GB) return Poly::gen(Sym::GC, -1) + Poly::one();
        return std::nullopt;
    };
    for (int t = 0; t < 20; ++t) {
        Poly p = random_poly(rng), q = random_poly(rng);
        CHECK((p * q).substitute(assignment) == p.substitute(assignment) * q.substitute(assignment));
        CHECK((p + q).substitute(assignment) == p.substitute(assignment) + q.substitute(assignment));
    }
}

TEST_CASE("generalized binomials") {
    Poly X = Poly::param(Sym::X);
    CHECK(binom(X, 2) == (X * X - X) * rat(1, 2));
    CHECK(binom(Rational(-3), 2) == Rational(6));
    CHECK(binom(X, 0) == Poly::one());
    // C(-1+X, 3) at m = 0: (X-1)(X-2)(X-3)/6
    Poly lhs = binom(Poly::constant(-1) + X, 3);
    Poly rhs = (X - Poly::constant(1)) * (X - Poly::constant(2)) * (X - Poly::constant(3)) *
               rat(1, 6);
    CHECK(lhs == rhs);
    CHECK(binom(Rational(5), 2) == Rational(10));
    CHECK(binom_int(-1, 1) == Rational(-1));
}

TEST_CASE("series arithmetic and inverses") {
    auto z = TruncSeries<Rational>::coordinate(4);
    auto one = TruncSeries<Rational>::one(4);

    CHECK(series_exp(TruncSeries<Rational>::zero(5)) == TruncSeries<Rational>::one(5));

    // exp(f) exp(-f) = 1 for f = z + 2 z^2
    auto f = TruncSeries<Rational>::zero(7);
    f.c[1] = 1;
    f.c[2] = 2;
    CHECK(series_exp(f) * series_exp(-f) == TruncSeries<Rational>::one(7));

    auto inv = series_invert(one + z);
    CHECK(inv.coeff(0) == 1);
    CHECK(inv.coeff(1) == -1);
    CHECK(inv.coeff(2) == 1);
    CHECK(inv.coeff(3) == -1);

    Rng rng(2);
    for (int t = 0; t < 10; ++t) {
        auto g = random_series(rng, 6);
        g.c[0] = rng.small_rational(true);
        CHECK(series_invert(g) * g == TruncSeries<Rational>::one(6));
    }
    auto bad = TruncSeries<Rational>::zero(3);
    CHECK_THROWS_WITH(series_invert(bad), "non-unit constant term");
    CHECK_THROWS(series_exp(one));

    // derivative and the zero-constant antiderivative are inverse
    auto h = random_series(rng, 6);
    auto back = series_derivative(series_integrate_zero(h));
    CHECK(back == h);
}

TEST_CASE("mixed order arithmetic truncates down") {
    Rng rng(3);
    auto f = random_series(rng, 8);
    auto g = random_series(rng, 5);
    CHECK((f + g).order == 5);
    CHECK((f * g).order == 5);
}

TEST_CASE("re-expansion around a shifted point") {
    // t^2 = (t-z)^2 + 2z(t-z) + z^2
    auto f = TruncSeries<Rational>::zero(4);
    f.c[2] = 1;
    auto g = taylor_reexpand(f);
    CHECK(g[0].coeff(2) == 1);
    CHECK(g[1].coeff(1) == 2);
    CHECK(g[2].coeff(0) == 1);
    CHECK(g[0].coeff(0) == 0);
    CHECK(g[0].coeff(1) == 0);

    // generic coefficient of (t-z)^1: f_{-2} + 2 f_{-3} z + 3 f_{-4} z^2 + ...
    auto s = TruncSeries<Poly>::zero(5);
    for (int k = 0; k < 5; ++k) s.c[k] = Poly::gen(Sym::GA, -k - 1);
    auto gs = taylor_reexpand(s);
    for (int k = 0; k + 1 < 5; ++k)
        CHECK(gs[1].coeff(k) == Poly::gen(Sym::GA, -k - 2) * Rational(k + 1));
}

TEST_CASE("double re-expansion composes additively") {
    Rng rng(5);
    Poly u = Poly::param(Sym::t), v = Poly::param(Sym::X);
    for (int N = 2; N <= 8; ++N) {
        auto f = TruncSeries<Poly>::zero(N);
        for (int k = 0; k < N; ++k) f.c[k] = Poly::constant(rng.small_rational());
        auto first = taylor_reexpand(f);
        // second expansion of the (t-z1) series around z2, then compare with
        // a single expansion evaluated at z1 + z2
        for (int n = 0; n < N; ++n) {
            Poly twice;
            for (int k = 0; n + k < N; ++k)
                twice += eval_at(first[n + k], u) * binom_int(n + k, n) * v.pow(k);
            Poly once;
            for (int k = 0; n + k < N; ++k)
                once += f.c[n + k] * binom_int(n + k, n) * (u + v).pow(k);
            CHECK(twice == once);
        }
    }
}

TEST_CASE("log-Laurent derivative and lambda specialization") {
    // d(z^{-lam}) = -lam z^{-lam-1}
    auto f = LogLaurent::term({0, -1, 0}, Poly::one());
    auto df = f.derivative();
    CHECK(df.coeff({-1, -1, 0}) == -Poly::param(Sym::lam));

    // d(log z) = z^{-1}
    auto lg = LogLaurent::term({0, 0, 1}, Poly::one());
    CHECK(lg.derivative().coeff({-1, 0, 0}) == Poly::one());

    // re-expansion coefficient of t^{-lam}: (1/n!) d^n -> C(-lam, n) z^{-lam-n}
    for (int n = 1; n <= 4; ++n) {
        auto g = f.reexpand_coeff(n);
        CHECK(g.coeff({-n, -1, 0}) == binom(-Poly::param(Sym::lam), n));
        CHECK(g.terms().size() == 1);
    }

    auto spec0 = f.substitute_lambda(0);
    CHECK(spec0 == LogLaurent::constant(Poly::one()));
    auto spec2 = f.substitute_lambda(2);
    CHECK(spec2.coeff({-2, 0, 0}) == Poly::one());

    // multiplication adds exponents and log powers
    auto prod = lg * lg * f;
    CHECK(prod.coeff({0, -1, 2}) == Poly::one());
    // Leibniz for the termwise derivative on products
    auto fg = f * lg;
    CHECK(fg.derivative() == f.derivative() * lg + f * lg.derivative());
}

TEST_CASE("series evaluated at a polynomial offset") {
    auto s = TruncSeries<Poly>::zero(3);
    s.c[0] = Poly::constant(1);
    s.c[1] = Poly::constant(2);
    s.c[2] = Poly::constant(1);
    Poly t = Poly::param(Sym::t);
    CHECK(eval_at(s, t) == Poly::one() + t * Rational(2) + t * t);
}
