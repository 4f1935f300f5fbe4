#pragma once

#include <cstdint>
#include <string>

#include "mat2.hpp"
#include "poly.hpp"
#include "rng.hpp"
#include "series.hpp"

namespace bigcenter {

// Which ring of functionals a polynomial lives in.
enum class RingTag { scalar, group, algebra, mixed };

RingTag ring_of(const Poly& p);

// Matrix of mode generators [[A*, B*], [C*, D*]]_{mode} (group = true) or
// [[a*, b*], [c*, d*]]_{mode}.
Mat2<Poly> gen_matrix(int mode, bool group);

// Adjugate representative [[D*, -B*], [-C*, A*]]_{mode}; modulo the
// determinant relations this is the coefficient matrix of F^{-1}.
Mat2<Poly> adj_gen_matrix(int mode);

// The symbolic solution series F(z) = sum_k [[A*,B*],[C*,D*]]_{-k-1} z^k,
// truncated at the given order.
MatrixSeries<Poly> symbolic_group_series(int order);

// Coefficient matrix of z^n in -(dF) adj(F): the algebra functionals
// a*,b*,c*,d* at mode -n-1 written as quadratic group functionals.
Mat2<Poly> embed_matrix(int n);

// Image of a single algebra generator a*/b*/c*/d* at the given mode as a
// group functional; the invariant subalgebra embedding.
Poly embed_g_in_G(Sym algebra_sym, int mode);

// Rewrite an algebra functional through the embedding, generator by
// generator.
Poly embed_expr(const Poly& p);

// Right regular action (g.Phi)(F) = Phi(F g): each mode row of group
// generators is multiplied by g on the right.  det(g) must be 1 exactly
// (possibly through Laurent parameter cancellation).
Poly right_translate(const Mat2<Poly>& g, const Poly& phi);

// Left action (g.Phi)(F) = Phi(g^{-1} F); g^{-1} is the adjugate.
Poly left_translate(const Mat2<Poly>& g, const Poly& phi);

// Vertex algebra derivation: T phi_{-n-1} = (n+1) phi_{-n-2} on mode
// generators, zero on parameters, extended as a derivation.
Poly derivation_T(const Poly& p);

// Y(phi, z) truncated at order N.  On a single mode generator
// Y(phi_{-n-1}, z) = sum_k phi_{-n-k-1} C(n+k, n) z^k; multiplicative on
// products.
TruncSeries<Poly> vertex_op(const Poly& phi, int N);

// det_{-n-1} - delta_{n,0}, the n-th relation cutting the group variety
// out of the free ring.
Poly det_relation(int n);

// Normal form on the algebra side: d*_{-n-1} -> -a*_{-n-1}.
Poly normalize_algebra(const Poly& p);

struct DetCertificate {
    bool equal = false;
    bool exact = false;   // settled by free-ring equality, before any trials
    int trials = 0;
    std::uint64_t seed = 0;
    std::string witness;  // set when a trial separates the two
};

// Equality modulo the determinant ideal: free-ring equality first, then
// evaluation at random points of the group variety (A, B, C free with
// A(0) != 0 and D solved from det = 1).  Parameters stay symbolic, so
// disagreement is detected as an exact polynomial difference.
DetCertificate equal_mod_det(const Poly& lhs, const Poly& rhs, int trials = 20,
                             std::uint64_t seed = kDefaultSeed);

} // namespace bigcenter
