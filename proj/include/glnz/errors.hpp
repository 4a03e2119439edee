#pragma once

#include <stdexcept>
#include <string>

namespace glnz {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- parsing / interface errors ---------------------------------------------

struct ParseError : Error {
  using Error::Error;
};

// Grammatically valid input referring to an undeclared symbol.
struct UnknownSymbol : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

// --- exact linear algebra ----------------------------------------------------

struct SingularMatrix : Error {
  using Error::Error;
};

// Rows do not extend to a basis of Z^m (gcd of maximal minors != 1).
struct NotExtendable : Error {
  using Error::Error;
};

// The rows of L together with w0 do not form a basis of Z^m.
struct BadCoset : Error {
  using Error::Error;
};

// --- homogeneous correspondents ----------------------------------------------

struct NotPrimitive : Error {
  using Error::Error;
};

struct NonPositiveLast : Error {
  using Error::Error;
};

// A simplex whose homogeneous vertices do not extend to a basis of Z^{n+1}.
struct NotRegular : Error {
  using Error::Error;
};

// --- affine spaces -------------------------------------------------------------

struct PointNotInSpace : Error {
  using Error::Error;
};

struct InconsistentSystem : Error {
  using Error::Error;
};

struct BadTriple : Error {
  using Error::Error;
};

// --- orbit classification ------------------------------------------------------

struct BasisMismatch : Error {
  using Error::Error;
};

struct RankTooLarge : Error {
  using Error::Error;
};

// A constructive step that is guaranteed to succeed produced an inconsistent
// result.  Always indicates an implementation bug, never bad input.
struct InternalVerificationFailure : Error {
  using Error::Error;
};

namespace detail {

inline void internal_check(bool cond, const char* msg) {
  if (!cond) throw InternalVerificationFailure(msg);
}

}  // namespace detail

}  // namespace glnz
