#ifndef SDKIT_EXACTMAT_HPP
#define SDKIT_EXACTMAT_HPP

#include <gmpxx.h>

#include <vector>

// Exact dense matrix helpers. Lattice data lives in int64 (entries stay
// tiny for everything in scope) but eliminations run in mpz/mpq so no
// intermediate can overflow.

namespace sdkit {

using Int = long long;
using IVec = std::vector<Int>;
using IMat = std::vector<IVec>;

using ZVec = std::vector<mpz_class>;
using ZMat = std::vector<ZVec>;
using QVec = std::vector<mpq_class>;
using QMat = std::vector<QVec>;

ZMat to_zmat(const IMat& m);
// Throws ValidationError if an entry does not fit in int64.
IMat to_imat(const ZMat& m);

// Row-style Hermite normal form of the lattice spanned by the rows.
// Result rows form a basis: r x n, upper echelon, positive pivots,
// entries above each pivot reduced into [0, pivot).
ZMat hnf(ZMat m);

// Rank of the row span over Q.
int rank_of(const ZMat& m);

// Determinant by fraction-free (Bareiss) elimination.
mpz_class det(const ZMat& m);

// True iff symmetric m is positive definite (leading minors > 0).
bool positive_definite_symmetric(const ZMat& m);

// Exact inverse of a nonsingular rational matrix.
QMat q_inverse(const QMat& m);

// a (r x n) times b (n x c)
ZMat z_mul(const ZMat& a, const ZMat& b);
ZMat z_transpose(const ZMat& m);

// Solve x * a = b for a square nonsingular integer a; returns the exact
// rational solution rows. Used for coordinates in a sublattice basis.
QMat solve_left(const ZMat& a, const ZMat& b);

bool is_integral(const QMat& m);
ZMat q_to_z(const QMat& m); // asserts integrality

} // namespace sdkit

#endif
