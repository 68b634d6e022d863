#pragma once

// Exact scalars (GMP) plugged into Eigen dense types. Everything downstream
// works with IntMatrix / RatMatrix; no floating point anywhere.

#include <gmpxx.h>

#include <Eigen/Core>
#include <string>
#include <vector>

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpq_class;
  using Nested = mpz_class;
  using Literal = long;
  static inline Real epsilon() { return mpz_class(0); }
  static inline Real dummy_precision() { return mpz_class(0); }
  static inline int digits10() { return 0; }
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 20,
    MulCost = 40
  };
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  using Literal = long;
  static inline Real epsilon() { return mpq_class(0); }
  static inline Real dummy_precision() { return mpq_class(0); }
  static inline int digits10() { return 0; }
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 12,
    AddCost = 60,
    MulCost = 80
  };
};

}  // namespace Eigen

namespace torlat {

using Int = mpz_class;
using Rat = mpq_class;

using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using RatMatrix = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using RatVector = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

inline IntMatrix int_identity(Index n) { return IntMatrix::Identity(n, n); }
inline IntMatrix int_zero(Index r, Index c) { return IntMatrix::Zero(r, c); }

// Lexicographic total order on (rows, cols, row-major entries).
template <typename Mat>
int lex_compare(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) return a.rows() < b.rows() ? -1 : 1;
  if (a.cols() != b.cols()) return a.cols() < b.cols() ? -1 : 1;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) {
      int c = cmp(a(i, j), b(i, j));
      if (c != 0) return c < 0 ? -1 : 1;
    }
  return 0;
}

template <typename Mat>
bool mat_eq(const Mat& a, const Mat& b) {
  return lex_compare(a, b) == 0;
}

struct MatLess {
  template <typename Mat>
  bool operator()(const Mat& a, const Mat& b) const {
    return lex_compare(a, b) < 0;
  }
};

// Compact canonical key, usable in ordered and hashed containers.
template <typename Mat>
std::string mat_key(const Mat& m) {
  std::string out;
  out.reserve(static_cast<std::size_t>(m.size()) * 4 + 8);
  out += std::to_string(m.rows());
  out += 'x';
  out += std::to_string(m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) {
      out += ';';
      if constexpr (std::is_same_v<typename Mat::Scalar, mpq_class>) {
        out += m(i, j).get_str();
      } else {
        out += m(i, j).get_str();
      }
    }
  return out;
}

inline RatMatrix to_rational(const IntMatrix& a) {
  RatMatrix r(a.rows(), a.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) r(i, j) = Rat(a(i, j));
  return r;
}

inline bool is_integral(const RatMatrix& a) {
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j).get_den() != 1) return false;
  return true;
}

// pre: is_integral(a)
inline IntMatrix to_integral(const RatMatrix& a) {
  IntMatrix r(a.rows(), a.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) r(i, j) = a(i, j).get_num();
  return r;
}

inline std::string to_string(const Int& v) { return v.get_str(); }
inline std::string to_string(const Rat& v) { return v.get_str(); }

template <typename Mat>
std::string format_matrix(const Mat& m) {
  std::string out = "[";
  for (Index i = 0; i < m.rows(); ++i) {
    out += i == 0 ? "[" : " [";
    for (Index j = 0; j < m.cols(); ++j) {
      if (j) out += ", ";
      out += m(i, j).get_str();
    }
    out += "]";
    if (i + 1 < m.rows()) out += "\n";
  }
  out += "]";
  return out;
}

}  // namespace torlat
