#include "bigcenter/poisson.hpp"

#include <sstream>
#include <stdexcept>

namespace bigcenter {

void LambdaPoly::add(int deg, const Poly& p) {
    if (p.is_zero()) return;
    auto [it, inserted] = coef.emplace(deg, p);
    if (!inserted) {
        it->second += p;
        if (it->second.is_zero()) coef.erase(it);
    }
}

LambdaPoly& LambdaPoly::operator+=(const LambdaPoly& o) {
    for (const auto& [d, p] : o.coef) add(d, p);
    return *this;
}

LambdaPoly LambdaPoly::operator-() const {
    LambdaPoly r;
    for (const auto& [d, p] : coef) r.coef.emplace(d, -p);
    return r;
}

LambdaPoly LambdaPoly::scaled(const Rational& q) const {
    LambdaPoly r;
    if (q == 0) return r;
    for (const auto& [d, p] : coef) r.coef.emplace(d, p * q);
    return r;
}

LambdaPoly LambdaPoly::shifted() const {
    LambdaPoly r;
    for (const auto& [d, p] : coef) r.coef.emplace(d + 1, p);
    return r;
}

LambdaPoly LambdaPoly::applied_T() const {
    LambdaPoly r;
    for (const auto& [d, p] : coef) r.add(d, derivation_T(p));
    return r;
}

std::string LambdaPoly::str() const {
    if (coef.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [d, p] : coef) {
        if (!first) out << " + ";
        first = false;
        if (d > 0) {
            out << "lam";
            if (d > 1) out << '^' << d;
            out << " (" << p.str() << ')';
        } else {
            out << '(' << p.str() << ')';
        }
    }
    return out.str();
}

Poly covector(const Mat2<Rational>& x, int mode) {
    // tr(x M) = x11 a + x12 c + x21 b + x22 d, with d = -a.
    Poly out;
    out += Poly::gen(Sym::ga, mode) * (x.a - x.d);
    out += Poly::gen(Sym::gb, mode) * x.c;
    out += Poly::gen(Sym::gc, mode) * x.b;
    return out;
}

LambdaPoly poisson_bracket(const Mat2<Rational>& x, int m, const Mat2<Rational>& y, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("bracket modes are phi_{-m-1} with m >= 0");
    // Generator bracket {x_{-1} l y_{-1}} = [x,y]_{-1} + l (x,y).
    LambdaPoly out;
    out.add(0, covector(lie_bracket(x, y), -1));
    out.add(1, Poly::constant(trace_form(x, y)));
    // x_{-m-1} = T^m/m! x_{-1} and {Ta l b} = -l {a l b}: factor (-l)^m/m!.
    for (int i = 0; i < m; ++i) out = out.shifted().scaled(rat(-1, i + 1));
    // {a l Tb} = (l+T) {a l b}: factor (l+T)^n/n!.
    for (int i = 0; i < n; ++i) {
        LambdaPoly next = out.shifted();
        next += out.applied_T();
        out = next.scaled(rat(1, i + 1));
    }
    return out;
}

LambdaPoly poisson_bracket_poly(const Poly& a, const Poly& b) {
    auto parse = [](const Poly& p) -> std::pair<Mat2<Rational>, int> {
        if (ring_of(p) != RingTag::algebra) throw std::domain_error("not in O(g[[z]])");
        Mat2<Rational> x = mat2(0, 0, 0, 0);
        int mode = 0;
        for (const auto& [mon, c] : p.terms()) {
            if (mon.size() != 1 || mon[0].second != 1)
                throw std::domain_error("bracket expects single algebra modes");
            const Generator& g = mon[0].first;
            if (mode != 0 && g.mode != mode)
                throw std::domain_error("bracket expects a single mode");
            mode = g.mode;
            // invert the covector map: a* -> h/2, b* -> f, c* -> e, d* -> -h/2
            switch (g.sym) {
                case Sym::ga: x = x + mat2(c / 2, 0, 0, -c / 2); break;
                case Sym::gb: x = x + mat2(0, 0, c, 0); break;
                case Sym::gc: x = x + mat2(0, c, 0, 0); break;
                default: x = x + mat2(-c / 2, 0, 0, c / 2); break;
            }
        }
        return {x, -mode - 1};
    };
    auto [x, m] = parse(a);
    auto [y, n] = parse(b);
    return poisson_bracket(x, m, y, n);
}

Poly poisson_module_act(const Mat2<Rational>& x, const Poly& phi) {
    if (ring_of(phi) != RingTag::group && ring_of(phi) != RingTag::scalar)
        throw std::domain_error("module action is defined on group functionals");
    Mat2<Poly> xp = lift_poly(x);
    Poly out;
    for (const auto& [m, coef] : phi.terms()) {
        for (size_t f = 0; f < m.size(); ++f) {
            const auto& [g, e] = m[f];
            if (!is_group_sym(g.sym)) continue;
            // row action: M_{rc} -> -(x M)_{rc}, Leibniz across the factors
            int r = (g.sym == Sym::GA || g.sym == Sym::GB) ? 0 : 1;
            int c = (g.sym == Sym::GA || g.sym == Sym::GC) ? 0 : 1;
            Mat2<Poly> M = gen_matrix(g.mode, true);
            Poly xrow = (r == 0 ? xp.a : xp.c) * (c == 0 ? M.a : M.b) +
                        (r == 0 ? xp.b : xp.d) * (c == 0 ? M.c : M.d);
            Poly rest = Poly::constant(coef * Rational(e));
            for (size_t f2 = 0; f2 < m.size(); ++f2) {
                if (f2 == f) {
                    if (e > 1) rest *= Poly::from_gen(g, e - 1);
                    continue;
                }
                rest *= Poly::from_gen(m[f2].first, m[f2].second);
            }
            out -= rest * xrow;
        }
    }
    return out;
}

} // namespace bigcenter
