#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace bigcenter {

// The fixed alphabet of indexed symbols.  Upper-case families are matrix
// coefficient functionals on group-valued series, lower-case families the
// corresponding functionals on algebra-valued series.  The last three are
// free parameters without a mode index: a group parameter t, the exponent
// shift lam, and a formal binomial argument X.
enum class Sym : std::uint8_t {
    GA, GB, GC, GD,    // A*, B*, C*, D*
    ga, gb, gc, gd,    // a*, b*, c*, d*
    t, lam, X,
};

inline bool is_group_sym(Sym s) { return s <= Sym::GD; }
inline bool is_algebra_sym(Sym s) { return s >= Sym::ga && s <= Sym::gd; }
inline bool is_param_sym(Sym s) { return s >= Sym::t; }

inline const char* sym_name(Sym s) {
    switch (s) {
        case Sym::GA: return "A*";
        case Sym::GB: return "B*";
        case Sym::GC: return "C*";
        case Sym::GD: return "D*";
        case Sym::ga: return "a*";
        case Sym::gb: return "b*";
        case Sym::gc: return "c*";
        case Sym::gd: return "d*";
        case Sym::t:  return "t";
        case Sym::lam: return "lam";
        case Sym::X:  return "X";
    }
    return "?";
}

// One indexed symbol.  Starred families carry a mode -n-1 <= -1 (the
// functional picking the coefficient of z^n); parameters have mode 0.
struct Generator {
    Sym sym;
    int mode;

    friend bool operator==(const Generator&, const Generator&) = default;

    std::string str() const {
        if (is_param_sym(sym)) return sym_name(sym);
        return std::string(sym_name(sym)) + "_{" + std::to_string(mode) + "}";
    }
};

// Deterministic total order: by family, then shallow modes first
// (-1 before -2 before -3, ...).
inline std::int64_t gen_id(const Generator& g) {
    return (static_cast<std::int64_t>(g.sym) << 32) + (-static_cast<std::int64_t>(g.mode));
}

inline bool operator<(const Generator& a, const Generator& b) { return gen_id(a) < gen_id(b); }

inline Generator mode_gen(Sym s, int mode) {
    if (is_param_sym(s)) throw std::invalid_argument("parameter symbols carry no mode");
    if (mode > -1) throw std::invalid_argument("mode must be <= -1");
    return Generator{s, mode};
}

inline Generator param_gen(Sym s) {
    if (!is_param_sym(s)) throw std::invalid_argument("not a parameter symbol");
    return Generator{s, 0};
}

} // namespace bigcenter
