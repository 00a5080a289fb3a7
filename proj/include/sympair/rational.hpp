#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sympair {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense rational vector / row-major rational matrix.
using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

/// Integer weight coordinates on the scaled Cartan basis of k.
using Weight = std::vector<long>;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed or mathematically invalid input (bad Cartan matrix, bad images, ...).
class InvalidInput : public Error {
public:
  using Error::Error;
};

/// A component exceeded the configured monomial ceiling.
class DeskScaleExceeded : public Error {
public:
  using Error::Error;
};

/// Input violates a structural hypothesis required by an operation.
class HypothesisViolation : public Error {
public:
  using Error::Error;
};

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parse "3", "-2/5" into a canonical rational.
inline Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) {
    throw InvalidInput("cannot parse rational '" + text + "'");
  }
  q.canonicalize();
  return q;
}

inline bool is_zero(const RationalVector& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

inline Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline std::uint64_t binomial_u64(unsigned n, unsigned k) {
  if (k > n) return 0;
  Integer r = binomial(n, k);
  if (!r.fits_ulong_p()) throw DeskScaleExceeded("binomial coefficient overflow");
  return r.get_ui();
}

/// Solve the square system M x = b exactly; throws if M is singular.
RationalVector solve_linear(RationalMatrix m, RationalVector b);

/// Inverse of a square rational matrix; throws if singular.
RationalMatrix inverse(const RationalMatrix& m);

/// Basis of the null space {x : M x = 0} for an r x c matrix (c given explicitly).
std::vector<RationalVector> null_space(const RationalMatrix& m, std::size_t cols);

/// Rank of a rational matrix.
std::size_t matrix_rank(const RationalMatrix& m);

}  // namespace sympair
