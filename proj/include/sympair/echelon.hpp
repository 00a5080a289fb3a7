#pragma once

#include "sympair/exterior.hpp"
#include "sympair/rational.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace sympair {

/// Sparse vectors sorted by column.
using IntSparse = std::vector<std::pair<std::uint32_t, Integer>>;
using RationalSparse = std::vector<std::pair<std::uint32_t, Rational>>;

/// Row-echelon basis of a subspace of Q^n, kept as primitive integer rows
/// with positive pivots.  Elimination is fraction-free with content
/// stripping.  Rows are triangular (no row has entries left of its pivot,
/// and pivots are distinct), which is all that reduction needs; reduced_rows()
/// produces the fully reduced form on demand.
class Echelon {
public:
  explicit Echelon(std::size_t ambient = 0) : ambient_(ambient) {}

  std::size_t ambient() const { return ambient_; }
  std::size_t rank() const { return rows_.size(); }

  /// Insert a vector; returns true if it enlarged the span.
  bool insert(IntSparse v);
  bool insert(const RationalSparse& v);

  /// Remainder of v modulo the span, scaled to a primitive integer vector.
  /// It vanishes at every pivot column and is zero iff v lies in the span.
  IntSparse reduce(IntSparse v) const;

  /// Exact normal form: the unique w = v - s with s in the span and w zero at
  /// every pivot column.
  RationalSparse normal_form(const RationalSparse& v) const;

  bool contains(const RationalSparse& v) const;

  std::vector<std::uint32_t> pivots() const;
  std::vector<std::uint32_t> free_columns() const;

  /// Fully reduced echelon rows with pivot 1, ordered by pivot.
  std::vector<RationalSparse> reduced_rows() const;

private:
  // returns remainder and the factor f with remainder = f * v - (span element)
  IntSparse reduce_scaled(IntSparse v, Rational& factor) const;

  std::size_t ambient_;
  std::map<std::uint32_t, IntSparse> rows_;
};

IntSparse to_integer(const RationalSparse& v, Integer* denominator = nullptr);
RationalSparse to_sparse(const RationalVector& v);
RationalVector to_dense(const RationalSparse& v, std::size_t n);

/// Subspace of one bidegree component R^{(p,q)} in monomial coordinates
/// (component_index order).
struct GradedSubspace {
  std::pair<int, int> bidegree{0, 0};
  int dim_p = 0;
  Echelon span;

  std::size_t rank() const { return span.rank(); }
  /// Reduced basis matrix.
  std::vector<RationalSparse> basis_matrix() const { return span.reduced_rows(); }
};

/// Coordinates of a bihomogeneous element in component_index order.
RationalSparse coordinates(const ExteriorElement& x, int dim_p);
ExteriorElement from_coordinates(const RationalSparse& v, int dim_p, std::pair<int, int> bidegree);

/// Reduced basis of the span.  Rejects elements outside the bidegree.
GradedSubspace span_reduce(const std::vector<ExteriorElement>& vectors, std::pair<int, int> bidegree, int dim_p);

/// Joint kernel of square operators acting on column vectors of length dim.
/// An empty list gives the whole space.
Echelon kernel_of_operators(const std::vector<RationalMatrix>& ops, std::size_t dim);

/// Kernel of the matrix whose columns are given (each of length `rows`),
/// by fraction-free reduction of [M^T | I].  Vectors are indexed by column.
std::vector<RationalSparse> kernel_from_columns(const std::vector<RationalSparse>& columns, std::size_t rows);

/// rank(ideal + span(candidates)) - rank(ideal).
std::size_t quotient_rank(const GradedSubspace& ideal, const std::vector<ExteriorElement>& candidates);

}  // namespace sympair
