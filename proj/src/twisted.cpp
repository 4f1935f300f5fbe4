#include "bigcenter/twisted.hpp"

#include <stdexcept>

#include "bigcenter/binomial.hpp"

namespace bigcenter {

namespace {

// Reads an exponent polynomial of the shape n0 + c0*lam with integers.
std::pair<int, int> exponent_parts(const Poly& lambda) {
    int n0 = 0, c0 = 0;
    for (const auto& [m, c] : lambda.terms()) {
        if (!is_integer(c)) throw std::domain_error("unsupported normal form");
        if (m.empty()) {
            n0 = static_cast<int>(to_long(c));
        } else if (m.size() == 1 && m[0].first.sym == Sym::lam && m[0].second == 1) {
            c0 = static_cast<int>(to_long(c));
        } else {
            throw std::domain_error("unsupported normal form");
        }
    }
    return {n0, c0};
}

} // namespace

Poly NormalForm::lambda_poly() const {
    return Poly::constant(n0) + Poly::param(Sym::lam) * Rational(c0);
}

Mat2<LogLaurent> normal_form_defect(const Mat2<Poly>& A0, const NormalForm& nf) {
    auto dF = Mat2<LogLaurent>{nf.F.a.derivative(), nf.F.b.derivative(), nf.F.c.derivative(),
                               nf.F.d.derivative()};
    // (A0/z) F
    auto scaled = [&](const Poly& coeff, const LogLaurent& entry) {
        return entry.scaled(coeff).shifted(-1, 0);
    };
    Mat2<LogLaurent> AF{scaled(A0.a, nf.F.a) + scaled(A0.b, nf.F.c),
                        scaled(A0.a, nf.F.b) + scaled(A0.b, nf.F.d),
                        scaled(A0.c, nf.F.a) + scaled(A0.d, nf.F.c),
                        scaled(A0.c, nf.F.b) + scaled(A0.d, nf.F.d)};
    return {dF.a + AF.a, dF.b + AF.b, dF.c + AF.c, dF.d + AF.d};
}

NormalForm fnorm(const Mat2<Poly>& A0, NormalForm::Kind kind) {
    NormalForm nf;
    nf.kind = kind;
    if (kind == NormalForm::Kind::semisimple) {
        if (!A0.b.is_zero() || !A0.c.is_zero() || !(A0.d == -A0.a))
            throw std::domain_error("unsupported normal form");
        auto [n0, c0] = exponent_parts(A0.a);
        nf.n0 = n0;
        nf.c0 = c0;
        nf.F = {LogLaurent::term({-n0, -c0, 0}, Poly::one()), LogLaurent(), LogLaurent(),
                LogLaurent::term({n0, c0, 0}, Poly::one())};
    } else {
        if (!(A0 == Mat2<Poly>{Poly(), Poly::one(), Poly(), Poly()}))
            throw std::domain_error("unsupported normal form");
        nf.F = {LogLaurent::constant(Poly::one()),
                LogLaurent::term({0, 0, 1}, Poly::constant(-1)), LogLaurent(),
                LogLaurent::constant(Poly::one())};
    }
    auto defect = normal_form_defect(A0, nf);
    if (!defect.a.is_zero() || !defect.b.is_zero() || !defect.c.is_zero() || !defect.d.is_zero())
        throw std::logic_error("normal form fails its defining equation");
    return nf;
}

LogLaurent twisted_vertex_op(Sym group_sym, int mode, const NormalForm& nf, int N) {
    if (nf.kind != NormalForm::Kind::semisimple)
        throw std::domain_error("log-twisted operators not implemented");
    if (!is_group_sym(group_sym)) throw std::invalid_argument("expects a group functional");
    const int n = -mode - 1;
    // A*, C* pick up z^{-lambda}; B*, D* pick up z^{+lambda}
    const int dir = (group_sym == Sym::GA || group_sym == Sym::GC) ? -1 : 1;
    const Poly lambda = nf.lambda_poly() * Rational(dir);
    LogLaurent out;
    for (int k = 0; k < N; ++k) {
        Poly coeff = Poly::gen(group_sym, mode - k) *
                     binom(Poly::constant(n + k) + lambda, n);
        out += LogLaurent::term({k + dir * nf.n0, dir * nf.c0, 0}, coeff);
    }
    return out;
}

int cartan_weight(const VASpec& spec, int gen) {
    if (spec.gens.size() != 2 || gen < 1 || gen > 2)
        throw std::domain_error("requires Cartan eigenvector");
    return gen == 1 ? 1 : -1;
}

TwistedModeExpr regular_singular_commutator(const VASpec& spec, int a, int m, int b, int n,
                                            bool reduced) {
    const int w = cartan_weight(spec, a);
    const Poly lw = Poly::param(Sym::lam) * Rational(w);
    TwistedModeExpr out;
    out.kmax = 0;
    for (int l = spec.pole_bound; l < 0; ++l) {
        StateVec prod = ope_apply(spec, spec.basis_state(a), l, spec.basis_state(b));
        bool zero = true;
        for (const auto& p : prod) zero = zero && p.is_zero();
        if (zero) continue;
        Poly coeff;
        if (reduced) {
            coeff = binom(Poly::constant(-m - 1) + lw, -l - 1);
        } else {
            for (int s = 0; s <= -l - 1; ++s)
                coeff += binom(lw, s) * binom(Rational(-m - 1), -l - 1 - s);
        }
        const int p = m + n - l;
        for (int st = 0; st < spec.num_states(); ++st)
            if (!prod[st].is_zero()) out.add(st, p, prod[st] * coeff);
    }
    return out;
}

TwistedModeExpr substitute_lambda(const TwistedModeExpr& e, const Rational& value) {
    TwistedModeExpr out;
    out.kmax = e.kmax;
    for (const auto& [k, c] : e.terms) {
        Poly cs = c.substitute([&](const Generator& g) -> std::optional<Poly> {
            if (g.sym == Sym::lam) return Poly::constant(value);
            return std::nullopt;
        });
        out.add(k.first, k.second, cs);
    }
    return out;
}

} // namespace bigcenter
