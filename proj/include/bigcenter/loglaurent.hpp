#pragma once

#include <map>
#include <string>
#include <tuple>

#include "poly.hpp"
#include "rational.hpp"

namespace bigcenter {

// Exponent of one log-Laurent term: z^{n + c*lam} * log(z)^j.
struct LogExp {
    int n = 0; // integer part of the exponent
    int c = 0; // multiplicity of the symbolic shift lam
    int j = 0; // log power, >= 0

    friend auto operator<=>(const LogExp&, const LogExp&) = default;
};

// Finite sums of z^{n+c*lam} log(z)^j with polynomial coefficients.
// Plain truncated series and Laurent polynomials embed as c = j = 0.
class LogLaurent {
  public:
    using TermMap = std::map<LogExp, Poly>;

    LogLaurent() = default;

    static LogLaurent term(const LogExp& e, const Poly& coeff);
    static LogLaurent constant(const Poly& coeff) { return term({0, 0, 0}, coeff); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Poly coeff(const LogExp& e) const;

    LogLaurent& operator+=(const LogLaurent& o);
    LogLaurent& operator-=(const LogLaurent& o);
    friend LogLaurent operator+(LogLaurent a, const LogLaurent& b) { return a += b; }
    friend LogLaurent operator-(LogLaurent a, const LogLaurent& b) { return a -= b; }
    friend LogLaurent operator*(const LogLaurent& a, const LogLaurent& b);
    LogLaurent operator-() const;

    LogLaurent scaled(const Poly& p) const;
    // Multiply by z^{dn + dc*lam}.
    LogLaurent shifted(int dn, int dc) const;

    // d/dz termwise: d z^{n+c lam} = (n+c lam) z^{n+c lam-1},
    // d log(z) = z^{-1}.
    LogLaurent derivative() const;

    // Specialize lam to an integer value, folding c into n.
    LogLaurent substitute_lambda(const Rational& value) const;

    // Coefficient of (t-z)^n when the series is re-expanded around a
    // shifted point: (1/n!) d^n/dt^n, read in the shifted coordinate.
    LogLaurent reexpand_coeff(int n) const;

    friend bool operator==(const LogLaurent& a, const LogLaurent& b) { return a.terms_ == b.terms_; }

    std::string str() const;

  private:
    void add_term(const LogExp& e, const Poly& c);
    TermMap terms_;
};

} // namespace bigcenter
