#pragma once

#include "sympair/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace sympair {

/// Wedge monomial of R = Lambda(p_1 + p_2): a subset of p-basis indices in
/// each copy.  The canonical product lists copy-1 factors (ascending) before
/// copy-2 factors (ascending).  A single copy Lambda(p) uses mask2 = 0.
struct Monomial {
  std::uint64_t mask1 = 0;
  std::uint64_t mask2 = 0;

  std::pair<int, int> bidegree() const;
  int degree() const;
  auto operator<=>(const Monomial&) const = default;
};

/// Largest supported dim p (masks are 64-bit).
constexpr int kMaxExteriorDim = 64;

/// Sign of a ^ b for single-copy masks in canonical order; 0 if they overlap.
int mask_sign(std::uint64_t a, std::uint64_t b);

/// Sign of x ^ y in R; 0 if the product vanishes.
int wedge_sign(const Monomial& x, const Monomial& y);

/// Position of a k-subset among all k-subsets of {0..n-1} in colex order
/// (which is increasing numeric order of the mask).
std::uint64_t mask_rank(std::uint64_t mask);

/// All masks with k bits among n, in increasing numeric order.
std::vector<std::uint64_t> masks_of_degree(int n, int k);

/// Monomial basis of R^{(p,q)}; ordered by (rank of mask1, rank of mask2).
/// Out-of-range bidegrees give an empty list.
std::vector<Monomial> component_basis(int dim_p, int p, int q);

/// Index of a monomial inside component_basis(dim_p, p, q).
std::uint64_t component_index(int dim_p, const Monomial& m);

/// Sparse exact combination of monomials; zero coefficients are never stored.
class ExteriorElement {
public:
  ExteriorElement() = default;
  explicit ExteriorElement(const Monomial& m, const Rational& c = 1);

  void add(const Monomial& m, const Rational& c);
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  /// Common bidegree; throws InvalidInput for mixed or empty elements.
  std::pair<int, int> bidegree() const;

  ExteriorElement& operator+=(const ExteriorElement& o);
  ExteriorElement& operator-=(const ExteriorElement& o);
  ExteriorElement operator*(const Rational& c) const;
  bool operator==(const ExteriorElement& o) const { return terms_ == o.terms_; }

private:
  std::map<Monomial, Rational> terms_;
};

ExteriorElement wedge(const ExteriorElement& a, const ExteriorElement& b);

/// Degree-one element v in copy 1 or 2 from p-basis coordinates.
ExteriorElement degree_one(const RationalVector& v, int copy);

/// Apply the derivation extending the linear map d (square, on p-basis
/// coordinates, column j = d(e_j)) to a single-copy mask.  Returns pairs
/// (mask, coefficient).
std::vector<std::pair<std::uint64_t, Rational>> derive_mask(std::uint64_t mask, const RationalMatrix& d);

/// Same derivation applied to both copies of an element of R.
ExteriorElement derive(const ExteriorElement& x, const RationalMatrix& d);

}  // namespace sympair
