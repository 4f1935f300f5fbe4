#pragma once

#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "generator.hpp"
#include "rational.hpp"

namespace bigcenter {

// Monomial: sorted factor list with nonzero exponents.  Mode generators
// always carry positive exponents; parameter symbols may carry negative
// ones (Laurent parameters such as the diagonal group parameter t, t^-1).
using Monomial = std::vector<std::pair<Generator, int>>;

long total_degree(const Monomial& m);

// Graded order: total degree first, then the factor sequence
// lexicographically.  Gives every polynomial a unique normal form.
struct MonoLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse multivariate polynomial over Rational in the fixed alphabet.
class Poly {
  public:
    using TermMap = std::map<Monomial, Rational, MonoLess>;

    Poly() = default;

    static Poly constant(const Rational& r);
    static Poly one() { return constant(1); }
    static Poly gen(Sym s, int mode) { return from_gen(mode_gen(s, mode)); }
    static Poly param(Sym s) { return from_gen(param_gen(s)); }
    static Poly from_gen(const Generator& g, int exp = 1);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant term of the polynomial (zero if absent).
    Rational constant_value() const;
    long degree() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& r);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& r) { return a *= r; }
    friend Poly operator*(const Rational& r, Poly a) { return a *= r; }
    Poly operator-() const;

    Poly pow(int e) const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

    // Replaces generators for which the callback returns a value; other
    // generators stay.  Polynomial values require nonnegative exponents;
    // nonzero constants may also replace Laurent powers.
    Poly substitute(const std::function<std::optional<Poly>(const Generator&)>& value) const;

    void add_term(const Monomial& m, const Rational& c);

    std::string str() const;

  private:
    TermMap terms_;
};

std::string to_string(const Poly& p);

// Multiplicative inverse of a unit (nonzero constant) polynomial.
Poly reciprocal(const Poly& p);

// Merge two sorted factor lists, adding exponents and dropping zeros.
Monomial mono_mul(const Monomial& a, const Monomial& b);

} // namespace bigcenter
