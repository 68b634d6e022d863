#pragma once

// Exact integer/rational linear algebra: Hermite and Smith normal forms,
// integer kernels, determinants, inverses, and Gram-matrix reduction.
// All outputs are canonical so equality tests downstream are syntactic.

#include <vector>

#include "torlat/errors.hpp"
#include "torlat/numeric.hpp"

namespace torlat {

struct HnfResult {
  IntMatrix H;  // row Hermite normal form
  IntMatrix U;  // unimodular, U*A = H
};

struct SnfResult {
  IntMatrix S;  // diagonal, d_1 | d_2 | ... | d_r >= 0
  IntMatrix U;  // unimodular
  IntMatrix V;  // unimodular, U*A*V = S
};

struct GramReduceResult {
  IntMatrix F;  // reduced Gram matrix, T^t * F_in * T = F
  IntMatrix T;  // unimodular change of basis
};

// Row HNF with smallest-absolute-value pivoting (limits entry growth).
// Pivots positive, entries above each pivot reduced into [0, pivot).
HnfResult hnf(const IntMatrix& A);

SnfResult snf(const IntMatrix& A);

// HNF-reduced basis of {x in Z^cols : A x = 0}; deterministic.
std::vector<IntVector> integer_kernel(const IntMatrix& A);

// columns = integer_kernel basis (cols x rank); convenience form
IntMatrix kernel_matrix(const IntMatrix& A);

Int det(const IntMatrix& A);   // fraction-free Bareiss
Rat det(const RatMatrix& A);

bool is_unimodular(const IntMatrix& A);

Index rank(const IntMatrix& A);

RatMatrix inverse_q(const IntMatrix& A);  // throws SingularMatrix
RatMatrix inverse_q(const RatMatrix& A);

// pre: is_unimodular(A); exact integral inverse
IntMatrix inverse_unimodular(const IntMatrix& A);

// entries reduced into [0, N)
IntMatrix mod_n(const IntMatrix& A, const Int& N);

// Basis of the rational nullspace of A (columns). Not saturated/canonical
// beyond a deterministic echelon choice; use integer_kernel for lattices.
std::vector<RatVector> rational_kernel(const RatMatrix& A);

// leading-principal-minor test; also rejects non-symmetric input
bool is_positive_definite(const IntMatrix& F);

// Exact LLL (delta = 3/4) on a symmetric positive definite Gram matrix.
// Throws NotPositiveDefinite.
GramReduceResult gram_reduce(const IntMatrix& F);

// All x != 0 with x^t F x <= bound, one representative per +-pair
// (first nonzero coordinate positive), sorted. pre: F positive definite.
std::vector<IntVector> short_vectors(const IntMatrix& F, const Int& bound);

}  // namespace torlat
