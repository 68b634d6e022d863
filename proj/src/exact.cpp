#include "torlat/exact.hpp"

#include <algorithm>
#include <utility>

namespace torlat {

namespace {

void require_nonempty(const IntMatrix& A) {
  if (A.rows() < 1 || A.cols() < 1)
    throw DimensionMismatch("matrix must have at least one row and column");
}

// floor-division quotient, so a - q*b lands in [0, |b|)
Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// nearest integer, ties toward zero
Int round_nearest(const Rat& x) {
  Rat ax = abs(x);
  Rat shifted = ax + Rat(1, 2);
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), shifted.get_num().get_mpz_t(),
             shifted.get_den().get_mpz_t());
  if (Rat(q) == shifted) q -= 1;  // exact half: round toward zero
  if (sgn(x) < 0) q = -q;
  return q;
}

}  // namespace

HnfResult hnf(const IntMatrix& A) {
  require_nonempty(A);
  const Index m = A.rows(), n = A.cols();
  IntMatrix H = A;
  IntMatrix U = int_identity(m);
  std::vector<Index> pivot_row, pivot_col;

  Index r = 0;
  for (Index c = 0; c < n && r < m; ++c) {
    // Euclidean elimination in column c, smallest |pivot| first.
    for (;;) {
      Index best = -1;
      for (Index i = r; i < m; ++i) {
        if (H(i, c) == 0) continue;
        if (best < 0 || cmp(abs(H(i, c)), abs(H(best, c))) < 0) best = i;
      }
      if (best < 0) break;  // column has no pivot
      if (best != r) {
        H.row(r).swap(H.row(best));
        U.row(r).swap(U.row(best));
      }
      if (H(r, c) < 0) {
        H.row(r) = -H.row(r);
        U.row(r) = -U.row(r);
      }
      bool clean = true;
      for (Index i = r + 1; i < m; ++i) {
        if (H(i, c) == 0) continue;
        Int q = fdiv(H(i, c), H(r, c));
        if (q != 0) {
          H.row(i) -= q * H.row(r);
          U.row(i) -= q * U.row(r);
        }
        if (H(i, c) != 0) clean = false;
      }
      if (clean) {
        pivot_row.push_back(r);
        pivot_col.push_back(c);
        ++r;
        break;
      }
    }
  }

  // reduce entries above each pivot into [0, pivot), left to right
  for (std::size_t k = 0; k < pivot_row.size(); ++k) {
    Index pr = pivot_row[k], pc = pivot_col[k];
    for (Index i = 0; i < pr; ++i) {
      Int q = fdiv(H(i, pc), H(pr, pc));
      if (q != 0) {
        H.row(i) -= q * H.row(pr);
        U.row(i) -= q * U.row(pr);
      }
    }
  }
  return {std::move(H), std::move(U)};
}

SnfResult snf(const IntMatrix& A) {
  require_nonempty(A);
  const Index m = A.rows(), n = A.cols();
  IntMatrix S = A;
  IntMatrix U = int_identity(m);
  IntMatrix V = int_identity(n);

  auto row_op = [&](Index i, Index r, const Int& q) {
    S.row(i) -= q * S.row(r);
    U.row(i) -= q * U.row(r);
  };
  auto col_op = [&](Index j, Index c, const Int& q) {
    S.col(j) -= q * S.col(c);
    V.col(j) -= q * V.col(c);
  };

  const Index t_max = std::min(m, n);
  for (Index t = 0; t < t_max; ++t) {
    // locate the smallest nonzero entry in the trailing block
    Index pi = -1, pj = -1;
    for (Index i = t; i < m; ++i)
      for (Index j = t; j < n; ++j) {
        if (S(i, j) == 0) continue;
        if (pi < 0 || cmp(abs(S(i, j)), abs(S(pi, pj))) < 0) {
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;  // trailing block is zero
    if (pi != t) {
      S.row(t).swap(S.row(pi));
      U.row(t).swap(U.row(pi));
    }
    if (pj != t) {
      S.col(t).swap(S.col(pj));
      V.col(t).swap(V.col(pj));
    }

    for (;;) {
      bool dirty = false;
      for (Index i = t + 1; i < m; ++i) {
        if (S(i, t) == 0) continue;
        Int q = fdiv(S(i, t), S(t, t));
        if (q != 0) row_op(i, t, q);
        if (S(i, t) != 0) {
          // remainder is smaller than the pivot; promote it
          S.row(t).swap(S.row(i));
          U.row(t).swap(U.row(i));
          dirty = true;
        }
      }
      for (Index j = t + 1; j < n; ++j) {
        if (S(t, j) == 0) continue;
        Int q = fdiv(S(t, j), S(t, t));
        if (q != 0) col_op(j, t, q);
        if (S(t, j) != 0) {
          S.col(t).swap(S.col(j));
          V.col(t).swap(V.col(j));
          dirty = true;
        }
      }
      if (!dirty) {
        bool row_clean = true, col_clean = true;
        for (Index i = t + 1; i < m; ++i)
          if (S(i, t) != 0) row_clean = false;
        for (Index j = t + 1; j < n; ++j)
          if (S(t, j) != 0) col_clean = false;
        if (row_clean && col_clean) break;
      }
    }
    if (S(t, t) < 0) {
      S.row(t) = -S.row(t);
      U.row(t) = -U.row(t);
    }
  }

  // enforce the divisibility chain d_1 | d_2 | ...
  Index rk = 0;
  while (rk < t_max && S(rk, rk) != 0) ++rk;
  for (bool changed = true; changed;) {
    changed = false;
    for (Index i = 0; i + 1 < rk; ++i) {
      if (S(i + 1, i + 1) % S(i, i) == 0) continue;
      changed = true;
      // fold d_{i+1} into column i, then re-run the 2x2 elimination
      S.col(i) += S.col(i + 1);
      V.col(i) += V.col(i + 1);
      for (;;) {
        Int q = fdiv(S(i + 1, i), S(i, i));
        if (q != 0) {
          S.row(i + 1) -= q * S.row(i);
          U.row(i + 1) -= q * U.row(i);
        }
        if (S(i + 1, i) == 0) break;
        S.row(i).swap(S.row(i + 1));
        U.row(i).swap(U.row(i + 1));
      }
      Int q = fdiv(S(i, i + 1), S(i, i));
      if (q != 0) {
        S.col(i + 1) -= q * S.col(i);
        V.col(i + 1) -= q * V.col(i);
      }
      if (S(i, i + 1) != 0 || S(i + 1, i) != 0)
        throw Error("snf: local elimination failed");
      if (S(i, i) < 0) {
        S.row(i) = -S.row(i);
        U.row(i) = -U.row(i);
      }
      if (S(i + 1, i + 1) < 0) {
        S.row(i + 1) = -S.row(i + 1);
        U.row(i + 1) = -U.row(i + 1);
      }
    }
  }
  return {std::move(S), std::move(U), std::move(V)};
}

std::vector<IntVector> integer_kernel(const IntMatrix& A) {
  require_nonempty(A);
  // rows of U matching zero rows of hnf(A^t) span the kernel lattice
  HnfResult ht = hnf(IntMatrix(A.transpose()));
  std::vector<Index> zero_rows;
  for (Index i = 0; i < ht.H.rows(); ++i) {
    bool zero = true;
    for (Index j = 0; j < ht.H.cols(); ++j)
      if (ht.H(i, j) != 0) {
        zero = false;
        break;
      }
    if (zero) zero_rows.push_back(i);
  }
  if (zero_rows.empty()) return {};
  IntMatrix K(static_cast<Index>(zero_rows.size()), A.cols());
  for (std::size_t k = 0; k < zero_rows.size(); ++k)
    K.row(static_cast<Index>(k)) = ht.U.row(zero_rows[k]);
  // canonicalize the basis itself
  IntMatrix KH = hnf(K).H;
  std::vector<IntVector> basis;
  basis.reserve(zero_rows.size());
  for (Index i = 0; i < KH.rows(); ++i) basis.push_back(KH.row(i).transpose());
  return basis;
}

IntMatrix kernel_matrix(const IntMatrix& A) {
  auto basis = integer_kernel(A);
  IntMatrix K(A.cols(), static_cast<Index>(basis.size()));
  for (std::size_t j = 0; j < basis.size(); ++j)
    K.col(static_cast<Index>(j)) = basis[j];
  return K;
}

Int det(const IntMatrix& A) {
  require_nonempty(A);
  if (A.rows() != A.cols()) throw DimensionMismatch("det: matrix not square");
  const Index n = A.rows();
  IntMatrix M = A;
  Int prev = 1;
  int sign = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    if (M(k, k) == 0) {
      Index piv = -1;
      for (Index i = k + 1; i < n; ++i)
        if (M(i, k) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      M.row(k).swap(M.row(piv));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i)
      for (Index j = k + 1; j < n; ++j) {
        Int num = M(i, j) * M(k, k) - M(i, k) * M(k, j);
        mpz_divexact(M(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = M(k, k);
  }
  return sign > 0 ? M(n - 1, n - 1) : Int(-M(n - 1, n - 1));
}

Rat det(const RatMatrix& A) {
  if (A.rows() != A.cols() || A.rows() < 1)
    throw DimensionMismatch("det: matrix not square");
  const Index n = A.rows();
  RatMatrix M = A;
  Rat result = 1;
  for (Index k = 0; k < n; ++k) {
    Index piv = -1;
    for (Index i = k; i < n; ++i)
      if (M(i, k) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return 0;
    if (piv != k) {
      M.row(k).swap(M.row(piv));
      result = -result;
    }
    result *= M(k, k);
    Rat inv_piv = Rat(1) / M(k, k);
    for (Index i = k + 1; i < n; ++i) {
      if (M(i, k) == 0) continue;
      Rat f = M(i, k) * inv_piv;
      for (Index j = k; j < n; ++j) M(i, j) -= f * M(k, j);
    }
  }
  return result;
}

bool is_unimodular(const IntMatrix& A) {
  if (A.rows() != A.cols()) return false;
  Int d = det(A);
  return d == 1 || d == -1;
}

Index rank(const IntMatrix& A) {
  IntMatrix H = hnf(A).H;
  Index r = 0;
  for (Index i = 0; i < H.rows(); ++i) {
    bool nonzero = false;
    for (Index j = 0; j < H.cols(); ++j)
      if (H(i, j) != 0) {
        nonzero = true;
        break;
      }
    if (nonzero) ++r;
  }
  return r;
}

RatMatrix inverse_q(const RatMatrix& A) {
  if (A.rows() != A.cols() || A.rows() < 1)
    throw DimensionMismatch("inverse_q: matrix not square");
  const Index n = A.rows();
  RatMatrix M = A;
  RatMatrix R = RatMatrix::Identity(n, n);
  for (Index k = 0; k < n; ++k) {
    Index piv = -1;
    for (Index i = k; i < n; ++i)
      if (M(i, k) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) throw SingularMatrix("inverse_q: matrix is singular");
    if (piv != k) {
      M.row(k).swap(M.row(piv));
      R.row(k).swap(R.row(piv));
    }
    Rat inv_piv = Rat(1) / M(k, k);
    M.row(k) *= inv_piv;
    R.row(k) *= inv_piv;
    for (Index i = 0; i < n; ++i) {
      if (i == k || M(i, k) == 0) continue;
      Rat f = M(i, k);
      M.row(i) -= f * M.row(k);
      R.row(i) -= f * R.row(k);
    }
  }
  return R;
}

RatMatrix inverse_q(const IntMatrix& A) { return inverse_q(to_rational(A)); }

IntMatrix inverse_unimodular(const IntMatrix& A) {
  RatMatrix inv = inverse_q(A);
  if (!is_integral(inv))
    throw SingularMatrix("inverse_unimodular: inverse is not integral");
  return to_integral(inv);
}

IntMatrix mod_n(const IntMatrix& A, const Int& N) {
  if (N < 2) throw Error("mod_n: modulus must be >= 2");
  IntMatrix R(A.rows(), A.cols());
  for (Index i = 0; i < A.rows(); ++i)
    for (Index j = 0; j < A.cols(); ++j)
      mpz_fdiv_r(R(i, j).get_mpz_t(), A(i, j).get_mpz_t(), N.get_mpz_t());
  return R;
}

std::vector<RatVector> rational_kernel(const RatMatrix& A) {
  const Index m = A.rows(), n = A.cols();
  RatMatrix M = A;
  std::vector<Index> pivot_of_col(n, -1);
  Index r = 0;
  for (Index c = 0; c < n && r < m; ++c) {
    Index piv = -1;
    for (Index i = r; i < m; ++i)
      if (M(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) M.row(r).swap(M.row(piv));
    Rat inv_piv = Rat(1) / M(r, c);
    M.row(r) *= inv_piv;
    for (Index i = 0; i < m; ++i) {
      if (i == r || M(i, c) == 0) continue;
      Rat f = M(i, c);
      M.row(i) -= f * M.row(r);
    }
    pivot_of_col[c] = r;
    ++r;
  }
  std::vector<RatVector> basis;
  for (Index c = 0; c < n; ++c) {
    if (pivot_of_col[c] >= 0) continue;
    RatVector v = RatVector::Zero(n);
    v(c) = 1;
    for (Index c2 = 0; c2 < n; ++c2)
      if (pivot_of_col[c2] >= 0) v(c2) = -M(pivot_of_col[c2], c);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool is_positive_definite(const IntMatrix& F) {
  if (F.rows() != F.cols() || F.rows() < 1) return false;
  for (Index i = 0; i < F.rows(); ++i)
    for (Index j = 0; j < i; ++j)
      if (F(i, j) != F(j, i)) return false;
  for (Index k = 1; k <= F.rows(); ++k) {
    if (det(IntMatrix(F.topLeftCorner(k, k))) <= 0) return false;
  }
  return true;
}

namespace {

// Gram-Schmidt data recomputed from a Gram matrix: mu (strict lower
// triangle) and squared norms of the orthogonalized vectors.
void gram_schmidt(const IntMatrix& F, RatMatrix& mu, std::vector<Rat>& bstar) {
  const Index d = F.rows();
  mu = RatMatrix::Zero(d, d);
  bstar.assign(static_cast<std::size_t>(d), Rat(0));
  for (Index i = 0; i < d; ++i) {
    for (Index k = 0; k < i; ++k) {
      Rat acc = Rat(F(i, k));
      for (Index j = 0; j < k; ++j) acc -= mu(i, j) * mu(k, j) * bstar[j];
      mu(i, k) = acc / bstar[k];
    }
    Rat b = Rat(F(i, i));
    for (Index j = 0; j < i; ++j) b -= mu(i, j) * mu(i, j) * bstar[j];
    bstar[static_cast<std::size_t>(i)] = b;
  }
}

void congruence_col_op(IntMatrix& F, IntMatrix& T, Index k, Index j,
                       const Int& q) {
  // basis op v_k -= q v_j
  T.col(k) -= q * T.col(j);
  F.col(k) -= q * F.col(j);
  F.row(k) -= q * F.row(j);
}

void congruence_swap(IntMatrix& F, IntMatrix& T, Index a, Index b) {
  T.col(a).swap(T.col(b));
  F.col(a).swap(F.col(b));
  F.row(a).swap(F.row(b));
}

}  // namespace

GramReduceResult gram_reduce(const IntMatrix& F_in) {
  if (!is_positive_definite(F_in))
    throw NotPositiveDefinite("gram_reduce: form is not positive definite");
  const Index d = F_in.rows();
  IntMatrix F = F_in;
  IntMatrix T = int_identity(d);
  if (d == 1) return {std::move(F), std::move(T)};

  RatMatrix mu;
  std::vector<Rat> bstar;
  gram_schmidt(F, mu, bstar);

  Index k = 1;
  while (k < d) {
    for (Index j = k - 1; j >= 0; --j) {
      Int q = round_nearest(mu(k, j));
      if (q != 0) {
        congruence_col_op(F, T, k, j, q);
        gram_schmidt(F, mu, bstar);
      }
    }
    Rat lhs = bstar[static_cast<std::size_t>(k)];
    Rat rhs = (Rat(3, 4) - mu(k, k - 1) * mu(k, k - 1)) *
              bstar[static_cast<std::size_t>(k - 1)];
    if (lhs >= rhs) {
      ++k;
    } else {
      congruence_swap(F, T, k, k - 1);
      gram_schmidt(F, mu, bstar);
      k = std::max<Index>(k - 1, 1);
    }
  }
  return {std::move(F), std::move(T)};
}

namespace {

// recursive Fincke-Pohst over the rational Cholesky of F
void enumerate_level(const RatMatrix& mu, const std::vector<Rat>& bstar,
                     Index level, std::vector<Int>& coords, const Rat& budget,
                     std::vector<IntVector>& out) {
  if (level < 0) {
    IntVector v(static_cast<Index>(coords.size()));
    bool all_zero = true;
    for (std::size_t i = 0; i < coords.size(); ++i) {
      v(static_cast<Index>(i)) = coords[i];
      if (coords[i] != 0) all_zero = false;
    }
    if (all_zero) return;
    // keep the representative whose first nonzero coordinate is positive
    for (Index i = 0; i < v.size(); ++i) {
      if (v(i) == 0) continue;
      if (v(i) > 0) out.push_back(std::move(v));
      return;
    }
    return;
  }
  // offset contributed by already-fixed coordinates (those > level)
  Rat offset = 0;
  for (Index j = level + 1; j < mu.rows(); ++j)
    offset += Rat(coords[static_cast<std::size_t>(j)]) * mu(j, level);
  // |x_level + offset|^2 * bstar[level] <= budget
  const Rat& w = bstar[static_cast<std::size_t>(level)];
  // bound: |x + offset| <= sqrt(budget / w); avoid radicals by scanning
  // integers x with (x+offset)^2 <= budget / w
  Rat limit2 = budget / w;
  // center = -offset; integer range [ceil(center - r), floor(center + r)]
  // scan outward from round(center) until the quadratic test fails
  Int center = round_nearest(-offset);
  auto fits = [&](const Int& x) {
    Rat t = Rat(x) + offset;
    return t * t <= limit2;
  };
  // the feasible x form a contiguous interval
  Int lo = center, hi = center;
  if (!fits(center)) {
    // interval may still be nonempty off-center when rounding landed outside
    bool found = false;
    for (int step = 1; step <= 2 && !found; ++step) {
      if (fits(center - step)) {
        lo = hi = center - step;
        found = true;
      } else if (fits(center + step)) {
        lo = hi = center + step;
        found = true;
      }
    }
    if (!found) return;
  }
  while (fits(lo - 1)) lo -= 1;
  while (fits(hi + 1)) hi += 1;
  for (Int x = lo; x <= hi; x += 1) {
    coords[static_cast<std::size_t>(level)] = x;
    Rat t = Rat(x) + offset;
    Rat used = t * t * w;
    enumerate_level(mu, bstar, level - 1, coords, budget - used, out);
  }
  coords[static_cast<std::size_t>(level)] = 0;
}

}  // namespace

std::vector<IntVector> short_vectors(const IntMatrix& F, const Int& bound) {
  if (!is_positive_definite(F))
    throw NotPositiveDefinite("short_vectors: form is not positive definite");
  if (bound < 0) return {};
  const Index d = F.rows();
  RatMatrix mu;
  std::vector<Rat> bstar;
  gram_schmidt(F, mu, bstar);
  std::vector<Int> coords(static_cast<std::size_t>(d), Int(0));
  std::vector<IntVector> out;
  enumerate_level(mu, bstar, d - 1, coords, Rat(bound), out);
  std::sort(out.begin(), out.end(),
            [](const IntVector& a, const IntVector& b) {
              return lex_compare(a, b) < 0;
            });
  return out;
}

}  // namespace torlat
