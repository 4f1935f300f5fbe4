#pragma once

#include "poly.hpp"
#include "rational.hpp"

namespace bigcenter {

// Generalized binomial coefficient x(x-1)...(x-s+1)/s! for arbitrary
// rational or polynomial upper argument; binom(x, 0) = 1, zero for s < 0.
inline Rational binom(const Rational& x, int s) {
    if (s < 0) return 0;
    Rational r = 1;
    for (int i = 0; i < s; ++i) r *= (x - i) / (i + 1);
    return r;
}

inline Rational binom_int(long m, long n) { return binom(Rational(m), static_cast<int>(n)); }

inline Poly binom(const Poly& x, int s) {
    if (s < 0) return Poly();
    Poly r = Poly::one();
    for (int i = 0; i < s; ++i) r *= (x - Poly::constant(i)) * rat(1, i + 1);
    return r;
}

} // namespace bigcenter
