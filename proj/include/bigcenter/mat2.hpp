#pragma once

#include <stdexcept>
#include <vector>

#include "series.hpp"

namespace bigcenter {

template <class T>
struct Mat2 {
    T a, b, c, d; // row-major [[a, b], [c, d]]

    static Mat2 zero() { return {T(ring_zero_of()), T(ring_zero_of()), T(ring_zero_of()), T(ring_zero_of())}; }

    friend Mat2 operator+(const Mat2& x, const Mat2& y) {
        return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
    }
    friend Mat2 operator-(const Mat2& x, const Mat2& y) {
        return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
    }
    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    friend Mat2 operator*(const Mat2& x, const T& s) { return {x.a * s, x.b * s, x.c * s, x.d * s}; }

    T trace() const { return a + d; }
    T det() const { return a * d - b * c; }
    Mat2 adjugate() const { return {d, ring_neg(b), ring_neg(c), a}; }

    friend bool operator==(const Mat2&, const Mat2&) = default;

  private:
    static T ring_zero_of() { return bigcenter::ring_zero<T>(); }
    static T ring_neg(const T& x) { return bigcenter::ring_zero<T>() - x; }
};

template <class R>
Mat2<R> mat2_identity() {
    return {ring_one<R>(), ring_zero<R>(), ring_zero<R>(), ring_one<R>()};
}

inline Mat2<Rational> mat2(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
    return Mat2<Rational>{a, b, c, d};
}

inline Mat2<Poly> lift_poly(const Mat2<Rational>& m) {
    return {Poly::constant(m.a), Poly::constant(m.b), Poly::constant(m.c), Poly::constant(m.d)};
}

// 2x2 matrix of truncated series, all four entries at the same order.
template <class R>
struct MatrixSeries {
    int order = 0;
    Mat2<TruncSeries<R>> m;

    MatrixSeries() = default;
    explicit MatrixSeries(int n)
        : order(n), m{TruncSeries<R>::zero(n), TruncSeries<R>::zero(n), TruncSeries<R>::zero(n),
                      TruncSeries<R>::zero(n)} {}

    static MatrixSeries identity(int n) {
        MatrixSeries s(n);
        s.m.a = TruncSeries<R>::one(n);
        s.m.d = TruncSeries<R>::one(n);
        return s;
    }

    static MatrixSeries from_coeffs(const std::vector<Mat2<R>>& coeffs, int n) {
        MatrixSeries s(n);
        for (int k = 0; k < n && k < static_cast<int>(coeffs.size()); ++k) s.set_coeff(k, coeffs[k]);
        return s;
    }

    Mat2<R> coeff(int k) const { return {m.a.coeff(k), m.b.coeff(k), m.c.coeff(k), m.d.coeff(k)}; }

    void set_coeff(int k, const Mat2<R>& v) {
        m.a.set(k, v.a);
        m.b.set(k, v.b);
        m.c.set(k, v.c);
        m.d.set(k, v.d);
    }

    MatrixSeries truncated(int n) const {
        MatrixSeries s;
        s.order = std::min(n, order);
        s.m = {m.a.truncated(s.order), m.b.truncated(s.order), m.c.truncated(s.order),
               m.d.truncated(s.order)};
        return s;
    }

    bool is_zero() const { return m.a.is_zero() && m.b.is_zero() && m.c.is_zero() && m.d.is_zero(); }

    friend bool operator==(const MatrixSeries& x, const MatrixSeries& y) {
        return x.order == y.order && x.m == y.m;
    }
};

template <class R>
MatrixSeries<R> operator+(const MatrixSeries<R>& x, const MatrixSeries<R>& y) {
    MatrixSeries<R> s;
    s.order = std::min(x.order, y.order);
    s.m = {x.m.a + y.m.a, x.m.b + y.m.b, x.m.c + y.m.c, x.m.d + y.m.d};
    return s;
}

template <class R>
MatrixSeries<R> operator-(const MatrixSeries<R>& x, const MatrixSeries<R>& y) {
    MatrixSeries<R> s;
    s.order = std::min(x.order, y.order);
    s.m = {x.m.a - y.m.a, x.m.b - y.m.b, x.m.c - y.m.c, x.m.d - y.m.d};
    return s;
}

template <class R>
MatrixSeries<R> operator*(const MatrixSeries<R>& x, const MatrixSeries<R>& y) {
    MatrixSeries<R> s;
    s.order = std::min(x.order, y.order);
    s.m = x.m * y.m;
    // entries already truncate to the common order through series mul
    return s;
}

template <class R>
MatrixSeries<R> scale(const MatrixSeries<R>& x, const Rational& q) {
    MatrixSeries<R> s = x;
    s.m = {scale(x.m.a, q), scale(x.m.b, q), scale(x.m.c, q), scale(x.m.d, q)};
    return s;
}

template <class R>
MatrixSeries<R> series_derivative(const MatrixSeries<R>& x) {
    MatrixSeries<R> s;
    s.order = std::max(x.order - 1, 0);
    s.m = {series_derivative(x.m.a), series_derivative(x.m.b), series_derivative(x.m.c),
           series_derivative(x.m.d)};
    return s;
}

template <class R>
TruncSeries<R> det_series(const MatrixSeries<R>& x) {
    return x.m.a * x.m.d - x.m.b * x.m.c;
}

template <class R>
TruncSeries<R> trace_series(const MatrixSeries<R>& x) {
    return x.m.a + x.m.d;
}

template <class R>
MatrixSeries<R> adjugate(const MatrixSeries<R>& x) {
    MatrixSeries<R> s;
    s.order = x.order;
    s.m = {x.m.d, -x.m.b, -x.m.c, x.m.a};
    return s;
}

} // namespace bigcenter
