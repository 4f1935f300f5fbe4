#pragma once

#include "coupling.hpp"
#include "loglaurent.hpp"
#include "mat2.hpp"
#include "vaspec.hpp"

namespace bigcenter {

// Normal form solution of (d + A0/z) F = 0 for the two supported shapes
// of A0: diagonal diag(lambda, -lambda) giving diag(z^{-lambda},
// z^{lambda}), and the strictly upper triangular nilpotent giving
// [[1, -log z], [0, 1]].
struct NormalForm {
    enum class Kind { semisimple, nilpotent } kind = Kind::semisimple;
    // exponent lambda = n0 + c0*lam (semisimple case only)
    int n0 = 0;
    int c0 = 0;
    Mat2<LogLaurent> F;

    Poly lambda_poly() const;
};

// Builds the normal form for A0 and verifies (d + A0/z) F = 0 termwise in
// the log-Laurent ring.  A0 must be diag(lambda, -lambda) with lambda an
// integer or an integer multiple of lam plus an integer, or the nilpotent
// [[0,1],[0,0]]; anything else is rejected.
NormalForm fnorm(const Mat2<Poly>& A0, NormalForm::Kind kind);

// Residue of (d + A0/z) F as a log-Laurent matrix; zero for a valid
// normal form.
Mat2<LogLaurent> normal_form_defect(const Mat2<Poly>& A0, const NormalForm& nf);

// Twisted vertex operator of a group functional against a semisimple
// normal form: Y(X*_{-n-1}, z) = sum_k X*_{-n-k-1} C(n+k -+ lambda, n)
// z^{k -+ lambda}, where the A*, C* families shift by -lambda and the
// B*, D* families by +lambda.
LogLaurent twisted_vertex_op(Sym group_sym, int mode, const NormalForm& nf, int N);

// Commutator over the regular singular point with semisimple monodromy,
// where the bracket coefficients collapse to binomials in lambda times
// the Cartan weight of the first argument:
//   unreduced: sum_l sum_{r+s=-l-1} C(-m-1, r) C(lambda w(a), s)
//   reduced:   sum_l C(-m-1 + lambda w(a), -l-1)
// both paired with ((a)_{(-l-1)} b) at output mode -1-(m+n-l).
TwistedModeExpr regular_singular_commutator(const VASpec& spec, int a, int m, int b, int n,
                                            bool reduced);

// lambda -> value in every coefficient (exponent tags do not occur in
// mode expressions, so this is a plain polynomial substitution).
TwistedModeExpr substitute_lambda(const TwistedModeExpr& e, const Rational& value);

// Cartan weight of a basis generator of the standard representation.
int cartan_weight(const VASpec& spec, int gen);

} // namespace bigcenter
