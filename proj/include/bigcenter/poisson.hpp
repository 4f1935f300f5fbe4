#pragma once

#include <map>
#include <string>

#include "functionals.hpp"
#include "mat2.hpp"
#include "poly.hpp"

namespace bigcenter {

// Polynomial in the bracket variable with functional coefficients.
struct LambdaPoly {
    std::map<int, Poly> coef; // lambda degree -> coefficient

    void add(int deg, const Poly& p);
    LambdaPoly& operator+=(const LambdaPoly& o);
    friend LambdaPoly operator+(LambdaPoly a, const LambdaPoly& b) { return a += b; }
    LambdaPoly operator-() const;
    LambdaPoly scaled(const Rational& q) const;
    // Multiply by lambda.
    LambdaPoly shifted() const;
    // Apply the derivation T to every coefficient.
    LambdaPoly applied_T() const;

    bool is_zero() const { return coef.empty(); }
    friend bool operator==(const LambdaPoly& a, const LambdaPoly& b) { return a.coef == b.coef; }
    std::string str() const;
};

inline Mat2<Rational> sl2_e() { return mat2(0, 1, 0, 0); }
inline Mat2<Rational> sl2_f() { return mat2(0, 0, 1, 0); }
inline Mat2<Rational> sl2_h() { return mat2(1, 0, 0, -1); }

// Trace form on sl2.
inline Rational trace_form(const Mat2<Rational>& x, const Mat2<Rational>& y) {
    return (x * y).trace();
}

inline Mat2<Rational> lie_bracket(const Mat2<Rational>& x, const Mat2<Rational>& y) {
    return x * y - y * x;
}

// The functional (x, -) = tr(x .) at the given mode, in normalized
// algebra coordinates (d* eliminated via a* + d* = 0).
Poly covector(const Mat2<Rational>& x, int mode);

// {x_{-m-1} lambda y_{-n-1}} for sl2 elements x, y: the generator bracket
// [x,y]_{-1} + lambda (x,y) extended by sesquilinearity
// {Ta l b} = -l {a l b},  {a l Tb} = (l+T) {a l b}.
LambdaPoly poisson_bracket(const Mat2<Rational>& x, int m, const Mat2<Rational>& y, int n);

// Bracket taking single algebra modes as polynomials; rejects anything
// outside the algebra ring.
LambdaPoly poisson_bracket_poly(const Poly& a, const Poly& b);

// Infinitesimal left translation by -x on group functionals, a derivation
// acting mode-wise through the row action of x.
Poly poisson_module_act(const Mat2<Rational>& x, const Poly& phi);

} // namespace bigcenter
