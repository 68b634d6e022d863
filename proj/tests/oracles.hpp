#pragma once

// Independent reference implementations used only by tests. These
// deliberately avoid the library's code paths: determinants by Laplace
// expansion, HNF by first-nonzero pivoting, invariant factors by minor
// gcds, conjugacy by exhaustive search over bounded matrices.

#include <random>
#include <vector>

#include "torlat/numeric.hpp"

namespace oracles {

using torlat::Index;
using torlat::Int;
using torlat::IntMatrix;
using torlat::IntVector;

inline Int laplace_det(const IntMatrix& A) {
  const Index n = A.rows();
  if (n == 1) return A(0, 0);
  Int acc = 0;
  for (Index j = 0; j < n; ++j) {
    if (A(0, j) == 0) continue;
    IntMatrix sub(n - 1, n - 1);
    for (Index i = 1; i < n; ++i) {
      Index cc = 0;
      for (Index c = 0; c < n; ++c) {
        if (c == j) continue;
        sub(i - 1, cc++) = A(i, c);
      }
    }
    Int term = A(0, j) * laplace_det(sub);
    acc += (j % 2 == 0) ? term : Int(-term);
  }
  return acc;
}

// gcd of all k-by-k minors; zero when all minors vanish
inline Int minor_gcd(const IntMatrix& A, Index k) {
  std::vector<Index> rows(k), cols(k);
  Int g = 0;
  std::vector<Index> rsel, csel;
  // enumerate k-subsets of rows and columns
  std::vector<std::vector<Index>> row_subsets, col_subsets;
  auto gen_subsets = [](Index n, Index k_) {
    std::vector<std::vector<Index>> out;
    std::vector<Index> cur;
    auto rec = [&](auto&& self, Index start) -> void {
      if (static_cast<Index>(cur.size()) == k_) {
        out.push_back(cur);
        return;
      }
      for (Index i = start; i < n; ++i) {
        cur.push_back(i);
        self(self, i + 1);
        cur.pop_back();
      }
    };
    rec(rec, 0);
    return out;
  };
  row_subsets = gen_subsets(A.rows(), k);
  col_subsets = gen_subsets(A.cols(), k);
  for (const auto& rs : row_subsets)
    for (const auto& cs : col_subsets) {
      IntMatrix sub(k, k);
      for (Index i = 0; i < k; ++i)
        for (Index j = 0; j < k; ++j) sub(i, j) = A(rs[i], cs[j]);
      Int d = laplace_det(sub);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      if (g == 1) return g;
    }
  return g;
}

// Row HNF by plain first-nonzero pivoting (different strategy from the
// library), used to confirm the canonical form.
inline IntMatrix reference_hnf(const IntMatrix& A) {
  IntMatrix H = A;
  const Index m = H.rows(), n = H.cols();
  auto fdiv = [](const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  };
  Index r = 0;
  std::vector<std::pair<Index, Index>> pivots;
  for (Index c = 0; c < n && r < m; ++c) {
    for (;;) {
      Index piv = -1;
      for (Index i = r; i < m; ++i)
        if (H(i, c) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) break;
      if (piv != r) H.row(r).swap(H.row(piv));
      if (H(r, c) < 0) H.row(r) = -H.row(r);
      bool clean = true;
      for (Index i = r + 1; i < m; ++i) {
        if (H(i, c) == 0) continue;
        Int q = fdiv(H(i, c), H(r, c));
        if (q != 0) H.row(i) -= q * H.row(r);
        if (H(i, c) != 0) clean = false;
      }
      if (clean) {
        pivots.emplace_back(r, c);
        ++r;
        break;
      }
    }
  }
  for (auto [pr, pc] : pivots)
    for (Index i = 0; i < pr; ++i) {
      Int q = fdiv(H(i, pc), H(pr, pc));
      if (q != 0) H.row(i) -= q * H.row(pr);
    }
  return H;
}

inline bool is_row_hnf(const IntMatrix& H) {
  Index last_col = -1;
  bool seen_zero_row = false;
  for (Index i = 0; i < H.rows(); ++i) {
    Index piv = -1;
    for (Index j = 0; j < H.cols(); ++j)
      if (H(i, j) != 0) {
        piv = j;
        break;
      }
    if (piv < 0) {
      seen_zero_row = true;
      continue;
    }
    if (seen_zero_row) return false;    // nonzero row after zero row
    if (piv <= last_col) return false;  // pivots must move right
    if (H(i, piv) <= 0) return false;
    for (Index k = 0; k < i; ++k)
      if (H(k, piv) < 0 || H(k, piv) >= H(i, piv)) return false;
    last_col = piv;
  }
  return true;
}

inline IntMatrix random_matrix(std::mt19937& rng, Index r, Index c, int lo,
                               int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix A(r, c);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j) A(i, j) = dist(rng);
  return A;
}

// random unimodular matrix as a short product of elementary operations
inline IntMatrix random_unimodular(std::mt19937& rng, Index n, int ops = 6) {
  IntMatrix U = torlat::int_identity(n);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(n) - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  std::uniform_int_distribution<int> kind(0, 2);
  for (int s = 0; s < ops; ++s) {
    int i = pick(rng), j = pick(rng);
    switch (kind(rng)) {
      case 0:
        if (i != j) U.row(i) += Int(coef(rng)) * U.row(j);
        break;
      case 1:
        if (i != j) U.row(i).swap(U.row(j));
        break;
      default:
        U.row(i) = -U.row(i);
        break;
    }
  }
  return U;
}

// random unimodular with all entries bounded; retries until within bound
inline IntMatrix random_unimodular_bounded(std::mt19937& rng, Index n,
                                           int bound) {
  for (;;) {
    IntMatrix U = random_unimodular(rng, n);
    bool ok = true;
    for (Index i = 0; i < n && ok; ++i)
      for (Index j = 0; j < n && ok; ++j)
        if (cmp(abs(U(i, j)), Int(bound)) > 0) ok = false;
    if (ok) return U;
  }
}

}  // namespace oracles
