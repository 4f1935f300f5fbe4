#include "bigcenter/loglaurent.hpp"

#include <sstream>
#include <stdexcept>

namespace bigcenter {

LogLaurent LogLaurent::term(const LogExp& e, const Poly& coeff) {
    LogLaurent s;
    s.add_term(e, coeff);
    return s;
}

Poly LogLaurent::coeff(const LogExp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Poly() : it->second;
}

void LogLaurent::add_term(const LogExp& e, const Poly& c) {
    if (c.is_zero()) return;
    if (e.j < 0) throw std::invalid_argument("negative log power");
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LogLaurent& LogLaurent::operator+=(const LogLaurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LogLaurent& LogLaurent::operator-=(const LogLaurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LogLaurent operator*(const LogLaurent& a, const LogLaurent& b) {
    LogLaurent r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term({ea.n + eb.n, ea.c + eb.c, ea.j + eb.j}, ca * cb);
    return r;
}

LogLaurent LogLaurent::operator-() const {
    LogLaurent r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LogLaurent LogLaurent::scaled(const Poly& p) const {
    LogLaurent r;
    for (const auto& [e, c] : terms_) r.add_term(e, c * p);
    return r;
}

LogLaurent LogLaurent::shifted(int dn, int dc) const {
    LogLaurent r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(LogExp{e.n + dn, e.c + dc, e.j}, c);
    return r;
}

LogLaurent LogLaurent::derivative() const {
    const Poly lam = Poly::param(Sym::lam);
    LogLaurent r;
    for (const auto& [e, c] : terms_) {
        Poly expo = Poly::constant(e.n) + Poly::constant(e.c) * lam;
        r.add_term({e.n - 1, e.c, e.j}, c * expo);
        if (e.j > 0) r.add_term({e.n - 1, e.c, e.j - 1}, c * Rational(e.j));
    }
    return r;
}

LogLaurent LogLaurent::substitute_lambda(const Rational& value) const {
    if (!is_integer(value)) throw std::domain_error("lambda substitution requires an integer value");
    const long v = to_long(value);
    LogLaurent r;
    for (const auto& [e, c] : terms_) {
        Poly cs = c.substitute([&](const Generator& g) -> std::optional<Poly> {
            if (g.sym == Sym::lam) return Poly::constant(value);
            return std::nullopt;
        });
        r.add_term({e.n + static_cast<int>(v) * e.c, 0, e.j}, cs);
    }
    return r;
}

LogLaurent LogLaurent::reexpand_coeff(int n) const {
    if (n < 0) throw std::invalid_argument("negative expansion degree");
    LogLaurent out = *this;
    Rational fact = 1;
    for (int i = 0; i < n; ++i) {
        out = out.derivative();
        fact *= (i + 1);
    }
    return out.scaled(Poly::constant(1 / fact));
}

std::string LogLaurent::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << '(' << c.str() << ')';
        if (e.n != 0 || e.c != 0) {
            out << " z^{";
            bool wrote = false;
            if (e.n != 0 || e.c == 0) {
                out << e.n;
                wrote = true;
            }
            if (e.c != 0) {
                if (e.c > 0 && wrote) out << '+';
                if (e.c == -1) out << '-';
                else if (e.c != 1) out << e.c << ' ';
                out << "lam";
            }
            out << '}';
        }
        if (e.j > 0) {
            out << " log(z)";
            if (e.j > 1) out << '^' << e.j;
        }
    }
    return out.str();
}

} // namespace bigcenter
