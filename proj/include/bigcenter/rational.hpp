#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace bigcenter {

// Exact rational scalar. GMP keeps results canonical (lowest terms,
// positive denominator) as long as inputs are canonical, so the only
// place that needs care is construction from a raw fraction.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rat_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline long to_long(const Rational& r) {
    if (!is_integer(r) || !r.get_num().fits_slong_p())
        throw std::domain_error("rational does not fit a machine integer");
    return r.get_num().get_si();
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational reciprocal(const Rational& r) {
    if (r == 0) throw std::domain_error("non-unit constant term");
    return 1 / r;
}

} // namespace bigcenter
