#include <sstream>

#include "bigcenter/poly.hpp"
#include "bigcenter/series.hpp"

namespace bigcenter {

namespace {

template <class R>
std::string series_str(const TruncSeries<R>& s, const std::string& var,
                       const std::function<std::string(const R&)>& coeff_str,
                       const std::function<bool(const R&)>& is_zero) {
    std::ostringstream out;
    bool first = true;
    for (int k = 0; k < s.order; ++k) {
        if (is_zero(s.c[k])) continue;
        if (!first) out << " + ";
        first = false;
        out << '(' << coeff_str(s.c[k]) << ')';
        if (k == 1) out << ' ' << var;
        else if (k > 1) out << ' ' << var << '^' << k;
    }
    if (first) out << '0';
    out << " + O(" << var << '^' << s.order << ')';
    return out.str();
}

} // namespace

std::string to_string(const TruncSeries<Rational>& s, const std::string& var) {
    return series_str<Rational>(
        s, var, [](const Rational& r) { return to_string(r); },
        [](const Rational& r) { return r == 0; });
}

std::string to_string(const TruncSeries<Poly>& s, const std::string& var) {
    return series_str<Poly>(
        s, var, [](const Poly& p) { return p.str(); }, [](const Poly& p) { return p.is_zero(); });
}

} // namespace bigcenter
