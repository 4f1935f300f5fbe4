#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "binomial.hpp"
#include "poly.hpp"
#include "rational.hpp"

namespace bigcenter {

template <class R> inline R ring_zero() { return R(0); }
template <class R> inline R ring_one() { return R(1); }
template <> inline Poly ring_zero<Poly>() { return Poly(); }
template <> inline Poly ring_one<Poly>() { return Poly::one(); }

template <class R> inline R ring_from_rational(const Rational& q) { return R(q); }
template <> inline Poly ring_from_rational<Poly>(const Rational& q) { return Poly::constant(q); }

template <class R> inline bool ring_is_zero(const R& x) { return x == 0; }
template <> inline bool ring_is_zero<Poly>(const Poly& x) { return x.is_zero(); }

// Power series truncated at z^order: coefficients c[0..order-1], all
// results correct mod z^order.  Mixed-order arithmetic truncates down.
template <class R>
struct TruncSeries {
    int order = 0;
    std::vector<R> c;

    TruncSeries() = default;
    TruncSeries(int n, std::vector<R> coeffs) : order(n), c(std::move(coeffs)) {
        if (order < 0) throw std::invalid_argument("negative truncation order");
        c.resize(order, ring_zero<R>());
    }

    static TruncSeries zero(int n) { return TruncSeries(n, {}); }
    static TruncSeries one(int n) {
        TruncSeries s = zero(n);
        if (n > 0) s.c[0] = ring_one<R>();
        return s;
    }
    // The series z (identity coordinate).
    static TruncSeries coordinate(int n) {
        TruncSeries s = zero(n);
        if (n > 1) s.c[1] = ring_one<R>();
        return s;
    }

    R coeff(int k) const { return (k >= 0 && k < static_cast<int>(c.size())) ? c[k] : ring_zero<R>(); }

    void set(int k, R v) {
        if (k < 0 || k >= order) throw std::out_of_range("series coefficient index");
        c[k] = std::move(v);
    }

    TruncSeries truncated(int n) const {
        TruncSeries s = zero(std::min(n, order));
        for (int k = 0; k < s.order; ++k) s.c[k] = c[k];
        return s;
    }

    bool is_zero() const {
        for (const R& x : c)
            if (!ring_is_zero(x)) return false;
        return true;
    }
};

template <class R>
bool operator==(const TruncSeries<R>& a, const TruncSeries<R>& b) {
    if (a.order != b.order) return false;
    for (int k = 0; k < a.order; ++k)
        if (!(a.c[k] == b.c[k])) return false;
    return true;
}

// True when the two agree mod z^min(orders).
template <class R>
bool agree_to_common_order(const TruncSeries<R>& a, const TruncSeries<R>& b) {
    int n = std::min(a.order, b.order);
    for (int k = 0; k < n; ++k)
        if (!(a.coeff(k) == b.coeff(k))) return false;
    return true;
}

template <class R>
TruncSeries<R> operator+(const TruncSeries<R>& a, const TruncSeries<R>& b) {
    auto s = TruncSeries<R>::zero(std::min(a.order, b.order));
    for (int k = 0; k < s.order; ++k) s.c[k] = a.c[k] + b.c[k];
    return s;
}

template <class R>
TruncSeries<R> operator-(const TruncSeries<R>& a, const TruncSeries<R>& b) {
    auto s = TruncSeries<R>::zero(std::min(a.order, b.order));
    for (int k = 0; k < s.order; ++k) s.c[k] = a.c[k] - b.c[k];
    return s;
}

template <class R>
TruncSeries<R> operator-(const TruncSeries<R>& a) {
    auto s = a;
    for (auto& x : s.c) x = ring_zero<R>() - x;
    return s;
}

template <class R>
TruncSeries<R> operator*(const TruncSeries<R>& a, const TruncSeries<R>& b) {
    auto s = TruncSeries<R>::zero(std::min(a.order, b.order));
    for (int i = 0; i < std::min(a.order, s.order); ++i) {
        if (ring_is_zero(a.c[i])) continue;
        for (int j = 0; j + i < s.order && j < b.order; ++j) s.c[i + j] += a.c[i] * b.c[j];
    }
    return s;
}

template <class R>
TruncSeries<R> operator*(const TruncSeries<R>& a, const R& v) {
    auto s = a;
    for (auto& x : s.c) x = x * v;
    return s;
}

template <class R>
TruncSeries<R> scale(const TruncSeries<R>& a, const Rational& q) {
    return a * ring_from_rational<R>(q);
}

template <class R>
TruncSeries<R> series_derivative(const TruncSeries<R>& f) {
    auto s = TruncSeries<R>::zero(std::max(f.order - 1, 0));
    for (int k = 0; k < s.order; ++k) s.c[k] = f.c[k + 1] * ring_from_rational<R>(k + 1);
    return s;
}

// Unique antiderivative with vanishing constant term.
template <class R>
TruncSeries<R> series_integrate_zero(const TruncSeries<R>& f) {
    auto s = TruncSeries<R>::zero(f.order + 1);
    for (int k = 0; k < f.order; ++k) s.c[k + 1] = f.c[k] * ring_from_rational<R>(rat(1, k + 1));
    return s;
}

template <class R>
TruncSeries<R> series_invert(const TruncSeries<R>& f) {
    if (f.order == 0) return f;
    R u = reciprocal(f.c[0]); // throws on a non-unit constant term
    auto g = TruncSeries<R>::zero(f.order);
    g.c[0] = u;
    for (int m = 1; m < f.order; ++m) {
        R acc = ring_zero<R>();
        for (int i = 1; i <= m; ++i) acc += f.c[i] * g.c[m - i];
        g.c[m] = ring_zero<R>() - u * acc;
    }
    return g;
}

// exp(f) for f with zero constant term, by solving g' = f' g.
template <class R>
TruncSeries<R> series_exp(const TruncSeries<R>& f) {
    if (f.order > 0 && !ring_is_zero(f.c[0]))
        throw std::domain_error("series_exp requires a vanishing constant term");
    auto g = TruncSeries<R>::one(f.order);
    for (int m = 0; m + 1 < f.order; ++m) {
        // (m+1) g_{m+1} = sum_{i+j=m} (i+1) f_{i+1} g_j
        R acc = ring_zero<R>();
        for (int i = 0; i <= m; ++i) acc += f.c[i + 1] * g.c[m - i] * ring_from_rational<R>(i + 1);
        g.c[m + 1] = acc * ring_from_rational<R>(rat(1, m + 1));
    }
    return g;
}

// Re-expansion of f(t) = sum f_k t^k around a shifted point:
// f(t) = sum_n g_n(z) (t-z)^n with g_n[k] = f_{n+k} * C(n+k, n),
// truncated so that n + k < order.
template <class R>
std::vector<TruncSeries<R>> taylor_reexpand(const TruncSeries<R>& f) {
    std::vector<TruncSeries<R>> g;
    g.reserve(f.order);
    for (int n = 0; n < f.order; ++n) {
        auto s = TruncSeries<R>::zero(f.order - n);
        for (int k = 0; k + n < f.order; ++k)
            s.c[k] = f.c[n + k] * ring_from_rational<R>(binom_int(n + k, n));
        g.push_back(std::move(s));
    }
    return g;
}

// Evaluate the stored part of a series at a polynomial argument.  Exact on
// the coefficients present; callers own the truncation bookkeeping.
inline Poly eval_at(const TruncSeries<Poly>& s, const Poly& v) {
    Poly acc;
    Poly p = Poly::one();
    for (int k = 0; k < s.order; ++k) {
        acc += s.c[k] * p;
        p *= v;
    }
    return acc;
}

std::string to_string(const TruncSeries<Rational>& s, const std::string& var = "z");
std::string to_string(const TruncSeries<Poly>& s, const std::string& var = "z");

} // namespace bigcenter
