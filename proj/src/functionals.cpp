#include "bigcenter/functionals.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace bigcenter {

RingTag ring_of(const Poly& p) {
    bool grp = false, alg = false;
    for (const auto& [m, c] : p.terms())
        for (const auto& [g, e] : m) {
            if (is_group_sym(g.sym)) grp = true;
            if (is_algebra_sym(g.sym)) alg = true;
        }
    if (grp && alg) return RingTag::mixed;
    if (grp) return RingTag::group;
    if (alg) return RingTag::algebra;
    return RingTag::scalar;
}

Mat2<Poly> gen_matrix(int mode, bool group) {
    if (group)
        return {Poly::gen(Sym::GA, mode), Poly::gen(Sym::GB, mode), Poly::gen(Sym::GC, mode),
                Poly::gen(Sym::GD, mode)};
    return {Poly::gen(Sym::ga, mode), Poly::gen(Sym::gb, mode), Poly::gen(Sym::gc, mode),
            Poly::gen(Sym::gd, mode)};
}

Mat2<Poly> adj_gen_matrix(int mode) {
    return {Poly::gen(Sym::GD, mode), -Poly::gen(Sym::GB, mode), -Poly::gen(Sym::GC, mode),
            Poly::gen(Sym::GA, mode)};
}

MatrixSeries<Poly> symbolic_group_series(int order) {
    MatrixSeries<Poly> F(order);
    for (int k = 0; k < order; ++k) F.set_coeff(k, gen_matrix(-k - 1, true));
    return F;
}

Mat2<Poly> embed_matrix(int n) {
    // coefficient of z^n in -(dF(z)) adj(F(z)), i.e.
    // -sum_{i+j-1=n, i>=1} i * M_{-i-1} adj(M)_{-j-1}
    Mat2<Poly> acc = Mat2<Poly>::zero();
    for (int i = 1; i <= n + 1; ++i) {
        int j = n + 1 - i;
        acc = acc + (gen_matrix(-i - 1, true) * adj_gen_matrix(-j - 1)) * Poly::constant(Rational(i));
    }
    Poly minus_one = Poly::constant(-1);
    return {acc.a * minus_one, acc.b * minus_one, acc.c * minus_one, acc.d * minus_one};
}

Poly embed_g_in_G(Sym algebra_sym, int mode) {
    if (!is_algebra_sym(algebra_sym)) throw std::invalid_argument("not an algebra generator");
    Mat2<Poly> e = embed_matrix(-mode - 1);
    switch (algebra_sym) {
        case Sym::ga: return e.a;
        case Sym::gb: return e.b;
        case Sym::gc: return e.c;
        default: return e.d;
    }
}

Poly embed_expr(const Poly& p) {
    return p.substitute([](const Generator& g) -> std::optional<Poly> {
        if (is_algebra_sym(g.sym)) return embed_g_in_G(g.sym, g.mode);
        return std::nullopt;
    });
}

namespace {

void require_unimodular(const Mat2<Poly>& g) {
    if (!(g.det() == Poly::one())) throw std::domain_error("translation matrix must have det 1");
}

// Substitutes every group generator row through entry(row, col) -> value.
Poly translate_group_gens(const Poly& phi,
                          const std::function<Poly(int r, int c, int mode)>& image) {
    return phi.substitute([&](const Generator& g) -> std::optional<Poly> {
        if (!is_group_sym(g.sym)) {
            if (is_algebra_sym(g.sym))
                throw std::domain_error("translation acts on group functionals only");
            return std::nullopt;
        }
        int r = (g.sym == Sym::GA || g.sym == Sym::GB) ? 0 : 1;
        int c = (g.sym == Sym::GA || g.sym == Sym::GC) ? 0 : 1;
        return image(r, c, g.mode);
    });
}

Poly entry(const Mat2<Poly>& m, int r, int c) {
    if (r == 0) return c == 0 ? m.a : m.b;
    return c == 0 ? m.c : m.d;
}

} // namespace

Poly right_translate(const Mat2<Poly>& g, const Poly& phi) {
    require_unimodular(g);
    return translate_group_gens(phi, [&](int r, int c, int mode) {
        // (M g)_{rc} = sum_l M_{rl} g_{lc}
        Mat2<Poly> M = gen_matrix(mode, true);
        return entry(M, r, 0) * entry(g, 0, c) + entry(M, r, 1) * entry(g, 1, c);
    });
}

Poly left_translate(const Mat2<Poly>& g, const Poly& phi) {
    require_unimodular(g);
    Mat2<Poly> ginv = g.adjugate();
    return translate_group_gens(phi, [&](int r, int c, int mode) {
        // (g^{-1} M)_{rc} = sum_l (g^{-1})_{rl} M_{lc}
        Mat2<Poly> M = gen_matrix(mode, true);
        return entry(ginv, r, 0) * entry(M, 0, c) + entry(ginv, r, 1) * entry(M, 1, c);
    });
}

Poly derivation_T(const Poly& p) {
    Poly out;
    for (const auto& [m, coef] : p.terms()) {
        for (size_t f = 0; f < m.size(); ++f) {
            const auto& [g, e] = m[f];
            if (is_param_sym(g.sym)) continue;
            // T g^e = e g^{e-1} (n+1) g', with g = phi_{-n-1}, g' = phi_{-n-2}
            int n = -g.mode - 1;
            Monomial rest;
            for (size_t f2 = 0; f2 < m.size(); ++f2) {
                if (f2 == f) continue;
                rest.push_back(m[f2]);
            }
            // shallower modes order before deeper ones
            Monomial factor;
            if (e > 1) factor.push_back({g, e - 1});
            factor.push_back({Generator{g.sym, g.mode - 1}, 1});
            Poly term;
            term.add_term(mono_mul(rest, factor), coef * Rational(e) * Rational(n + 1));
            out += term;
        }
    }
    return out;
}

TruncSeries<Poly> vertex_op(const Poly& phi, int N) {
    auto out = TruncSeries<Poly>::zero(N);
    for (const auto& [m, coef] : phi.terms()) {
        auto term = TruncSeries<Poly>::one(N) * Poly::constant(coef);
        for (const auto& [g, e] : m) {
            if (is_param_sym(g.sym)) {
                term = term * Poly::from_gen(g, e);
                continue;
            }
            int n = -g.mode - 1;
            auto gs = TruncSeries<Poly>::zero(N);
            for (int k = 0; k < N; ++k)
                gs.c[k] = Poly::from_gen(Generator{g.sym, g.mode - k}) * binom_int(n + k, n);
            for (int rep = 0; rep < e; ++rep) term = term * gs;
        }
        out = out + term;
    }
    return out;
}

Poly det_relation(int n) {
    Poly det;
    for (int i = 0; i <= n; ++i) {
        int j = n - i;
        det += Poly::gen(Sym::GA, -i - 1) * Poly::gen(Sym::GD, -j - 1);
        det -= Poly::gen(Sym::GB, -i - 1) * Poly::gen(Sym::GC, -j - 1);
    }
    if (n == 0) det -= Poly::one();
    return det;
}

Poly normalize_algebra(const Poly& p) {
    return p.substitute([](const Generator& g) -> std::optional<Poly> {
        if (g.sym == Sym::gd) return -Poly::gen(Sym::ga, g.mode);
        return std::nullopt;
    });
}

namespace {

int group_mode_depth(const Poly& p) {
    int depth = 0;
    for (const auto& [m, c] : p.terms())
        for (const auto& [g, e] : m) {
            if (is_algebra_sym(g.sym))
                throw std::domain_error("equal_mod_det expects group-ring representatives");
            if (is_group_sym(g.sym)) depth = std::max(depth, -g.mode);
        }
    return depth;
}

} // namespace

DetCertificate equal_mod_det(const Poly& lhs, const Poly& rhs, int trials, std::uint64_t seed) {
    DetCertificate cert;
    cert.seed = seed;
    if (lhs == rhs) {
        cert.equal = true;
        cert.exact = true;
        return cert;
    }
    int depth = std::max(group_mode_depth(lhs), group_mode_depth(rhs));
    if (depth == 0) return cert; // distinct scalars/parameter polynomials

    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        ++cert.trials;
        // Random variety point: A, B, C free with A(0) a unit, D forced.
        auto A = TruncSeries<Rational>::zero(depth);
        auto B = TruncSeries<Rational>::zero(depth);
        auto C = TruncSeries<Rational>::zero(depth);
        for (int k = 0; k < depth; ++k) {
            A.c[k] = (k == 0) ? rng.small_rational(true) : rng.small_rational();
            B.c[k] = rng.small_rational();
            C.c[k] = rng.small_rational();
        }
        auto D = (TruncSeries<Rational>::one(depth) + B * C) * series_invert(A);
        auto value = [&](const Generator& g) -> std::optional<Poly> {
            if (!is_group_sym(g.sym)) return std::nullopt;
            int k = -g.mode - 1;
            switch (g.sym) {
                case Sym::GA: return Poly::constant(A.coeff(k));
                case Sym::GB: return Poly::constant(B.coeff(k));
                case Sym::GC: return Poly::constant(C.coeff(k));
                default: return Poly::constant(D.coeff(k));
            }
        };
        Poly l = lhs.substitute(value), r = rhs.substitute(value);
        if (!(l == r)) {
            std::ostringstream w;
            w << "trial " << t << ": lhs = " << l.str() << ", rhs = " << r.str();
            cert.witness = w.str();
            return cert;
        }
    }
    cert.equal = true;
    return cert;
}

} // namespace bigcenter
