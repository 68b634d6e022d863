#pragma once

#include <stdexcept>
#include <string>

namespace torlat {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// exact linear algebra
struct SingularMatrix : Error {
  using Error::Error;
};
struct NotPositiveDefinite : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};

// group machinery
struct NotFiniteWithinBound : Error {
  explicit NotFiniteWithinBound(std::size_t cap_, const std::string& what_)
      : Error(what_), cap(cap_) {}
  std::size_t cap;
};
struct OrbitExplosion : Error {
  explicit OrbitExplosion(std::size_t bound_, const std::string& what_)
      : Error(what_), bound(bound_) {}
  std::size_t bound;
};
struct NotASubgroup : Error {
  using Error::Error;
};
struct MismatchedGroups : Error {
  using Error::Error;
};
struct NotFinite : Error {
  using Error::Error;
};

// root systems
struct InvalidType : Error {
  using Error::Error;
};

// classification catalogs
struct IncompleteSeedSet : Error {
  using Error::Error;
};
struct NotInCatalog : Error {
  using Error::Error;
};

// persistence
struct IoError : Error {
  using Error::Error;
};
struct FormatVersionMismatch : Error {
  using Error::Error;
};
struct ChecksumMismatch : Error {
  using Error::Error;
};

// a theorem-backed check failed; indicates a bug, not bad input
struct AssertionFailure : Error {
  using Error::Error;
};

}  // namespace torlat
