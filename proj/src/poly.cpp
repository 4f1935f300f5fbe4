#include "bigcenter/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bigcenter {

long total_degree(const Monomial& m) {
    long d = 0;
    for (const auto& [g, e] : m) d += e;
    return d;
}

bool MonoLess::operator()(const Monomial& a, const Monomial& b) const {
    long da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    const size_t n = std::min(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        std::int64_t ia = gen_id(a[i].first), ib = gen_id(b[i].first);
        if (ia != ib) return ia < ib;
        if (a[i].second != b[i].second) return a[i].second < b[i].second;
    }
    return a.size() < b.size();
}

Poly Poly::constant(const Rational& r) {
    Poly p;
    if (r != 0) p.terms_.emplace(Monomial{}, r);
    return p;
}

Poly Poly::from_gen(const Generator& g, int exp) {
    if (exp < 0 && !is_param_sym(g.sym))
        throw std::invalid_argument("negative exponent on a mode generator");
    Poly p;
    if (exp != 0) p.terms_.emplace(Monomial{{g, exp}}, Rational(1));
    else p = one();
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational Poly::constant_value() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
}

long Poly::degree() const {
    long d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
    return d;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly Poly::operator-() const {
    Poly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly& Poly::operator*=(const Rational& r) {
    if (r == 0) { terms_.clear(); return *this; }
    for (auto& [m, c] : terms_) c *= r;
    return *this;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        std::int64_t ia = gen_id(a[i].first), ib = gen_id(b[j].first);
        if (ia < ib) r.push_back(a[i++]);
        else if (ib < ia) r.push_back(b[j++]);
        else {
            int e = a[i].second + b[j].second;
            if (e != 0) r.emplace_back(a[i].first, e);
            ++i, ++j;
        }
    }
    for (; i < a.size(); ++i) r.push_back(a[i]);
    for (; j < b.size(); ++j) r.push_back(b[j]);
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
    return r;
}

Poly& Poly::operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
}

Poly Poly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative polynomial power");
    Poly r = one();
    Poly base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

Poly Poly::substitute(const std::function<std::optional<Poly>(const Generator&)>& value) const {
    Poly result;
    for (const auto& [m, c] : terms_) {
        Poly term = constant(c);
        for (const auto& [g, e] : m) {
            auto v = value(g);
            if (!v) {
                term *= from_gen(g, e);
                continue;
            }
            if (e >= 0) {
                term *= v->pow(e);
            } else {
                if (!v->is_constant())
                    throw std::domain_error("cannot substitute a polynomial into a Laurent power");
                term *= constant(reciprocal(v->constant_value())).pow(-e);
            }
        }
        result += term;
    }
    return result;
}

Poly reciprocal(const Poly& p) {
    if (!p.is_constant() || p.is_zero()) throw std::domain_error("non-unit constant term");
    return Poly::constant(reciprocal(p.constant_value()));
}

namespace {

std::string mono_str(const Monomial& m) {
    std::string s;
    for (const auto& [g, e] : m) {
        if (!s.empty()) s += ' ';
        s += g.str();
        if (e != 1) s += '^' + std::to_string(e);
    }
    return s;
}

} // namespace

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool neg = c < 0;
        Rational a = neg ? Rational(-c) : c;
        if (first) {
            if (neg) out << '-';
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        std::string ms = mono_str(m);
        if (ms.empty()) out << to_string(a);
        else {
            if (a != 1) out << to_string(a) << ' ';
            out << ms;
        }
    }
    return out.str();
}

std::string to_string(const Poly& p) { return p.str(); }

} // namespace bigcenter
