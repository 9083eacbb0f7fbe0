#pragma once

#include <optional>
#include <vector>

#include "skms/rat.hpp"

namespace skms {

// Row-major dense rational matrix. Desk-scale sizes only; everything exact.
using QMat = std::vector<QVec>;
using ZMat = std::vector<ZVec>;

QVec qvec_zero(size_t n);
bool qvec_is_zero(const QVec& v);
QVec qvec_add(const QVec& a, const QVec& b);
QVec qvec_sub(const QVec& a, const QVec& b);
QVec qvec_scale(const Rat& c, const QVec& v);
Rat qvec_dot(const QVec& a, const QVec& b);
bool qvec_lex_less(const QVec& a, const QVec& b);

QMat qmat_identity(size_t n);
QMat qmat_mul(const QMat& a, const QMat& b);
QVec qmat_apply(const QMat& m, const QVec& v);
QMat qmat_transpose(const QMat& m);
QMat qmat_add(const QMat& a, const QMat& b);
QMat qmat_scale(const Rat& c, const QMat& m);
bool qmat_equal(const QMat& a, const QMat& b);

/// Rank via fraction-free (Bareiss) elimination on the denominator-cleared matrix.
size_t qmat_rank(const QMat& m);

/// One solution of A x = b, if consistent.
std::optional<QVec> qmat_solve(const QMat& a, const QVec& b);

std::optional<QMat> qmat_inverse(const QMat& m);

/// Basis of {x : A x = 0}, canonical (from reduced row echelon form).
std::vector<QVec> qmat_kernel(const QMat& a);

/// True iff m is symmetric with all leading principal minors positive.
bool qmat_positive_definite(const QMat& m);

/// Clears denominators and divides by content; zero vector maps to itself.
ZVec primitive_integer(const QVec& v);

/// primitive_integer with the first nonzero entry made positive.
ZVec primitive_lex_positive(const QVec& v);

/// Z-basis of {x in Z^n : M x = 0} via Smith normal form (columns of the
/// unimodular right transform matching zero invariant factors).
ZMat integer_kernel(const ZMat& m);

}  // namespace skms
