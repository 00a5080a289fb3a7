#pragma once

#include "sympair/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sympair {

using IntMatrix = std::vector<std::vector<int>>;
/// Root in simple-root coordinates.
using RootVec = std::vector<int>;

/// Finite root system of a (semi)simple Lie algebra.
///
/// Convention: cartan_matrix[i][j] = <alpha_j, alpha_i^vee>, so the simple
/// reflection is s_i(beta) = beta - <beta, alpha_i^vee> alpha_i with
/// <beta, alpha_i^vee> = sum_j beta_j * cartan_matrix[i][j].  With this
/// convention G2 = [[2,-3],[-1,2]] has alpha_1 short and highest root 3a1+2a2.
struct RootSystem {
  IntMatrix cartan_matrix;
  std::vector<RootVec> simple_roots;
  /// Ordered by height, then reverse-lexicographically on coefficients
  /// (so alpha_1 precedes alpha_2).
  std::vector<RootVec> positive_roots;
  /// Coroot of each positive root in simple-coroot coordinates.
  std::vector<RootVec> coroots;
  /// Half-sum of positive roots, simple-root coordinates.
  RationalVector rho;
  /// (alpha_i, alpha_i); the longest roots of each component have norm 2.
  RationalVector simple_norms;
  /// Connected component of each simple root.
  std::vector<int> component;
  /// Highest root of each component.
  std::vector<RootVec> highest_roots;

  int rank() const { return static_cast<int>(cartan_matrix.size()); }
  int num_components() const { return static_cast<int>(highest_roots.size()); }
  bool is_simple() const { return num_components() == 1; }
  const RootVec& highest_root() const;

  /// <beta, alpha_i^vee>.
  int pairing(const RootVec& beta, int i) const;
  /// Normalized W-invariant form on the root lattice.
  Rational inner(const RootVec& a, const RootVec& b) const;
  Rational inner(const RationalVector& a, const RationalVector& b) const;

  std::optional<std::size_t> positive_index(const RootVec& beta) const;
  bool is_root(const RootVec& beta) const;
  RootVec reflect(const RootVec& beta, int i) const;

  std::map<RootVec, std::size_t> positive_lookup;
};

int height(const RootVec& beta);

/// Closure of the simple roots under simple reflections.
/// Rejects non-Cartan, non-finite-type, or rank > 8 input.
RootSystem build_root_system(const IntMatrix& cartan);

/// Cartan matrix for a named type: "A1".."A8", "B2".."B8", "C3".., "D4"..,
/// "E6".."E8", "F4", "G2", and products such as "A1xA1".
IntMatrix cartan_matrix_for(const std::string& name);

/// 1 + <rho, theta^vee>.  Requires a simple root system.
int dual_coxeter_number(const RootSystem& rs);

/// Weyl dimension formula.  The weight is given by its Dynkin labels
/// <lambda, alpha_i^vee>; rejects non-dominant weights.
Integer weyl_dimension(const RootSystem& rs, const std::vector<long>& dynkin_labels);

/// Sparse integer combination of basis elements.
using SparseIntVec = std::vector<std::pair<int, long>>;

/// Chevalley basis of a semisimple Lie algebra with its structure constants
/// and an invariant form normalized per simple factor.
struct StructureTable {
  enum class Kind { cartan, root };
  struct BasisElement {
    std::string label;
    Kind kind = Kind::cartan;
    /// Root in simple-root coordinates (zero for Cartan elements).
    RootVec root;
    /// Cartan index for Kind::cartan.
    int cartan_index = -1;
    /// Simple factor this element belongs to.
    int factor = 0;
  };

  std::vector<BasisElement> basis;
  /// brackets[i][j] = [b_i, b_j].
  std::vector<std::vector<SparseIntVec>> brackets;
  RationalMatrix form;
  IntMatrix cartan_matrix;
  RootSystem roots;
  /// Indices of the Chevalley generators e_i, f_i, h_i.
  std::vector<int> simple_e, simple_f, simple_h;
  int num_factors = 1;
  /// Label -> index.
  std::map<std::string, int> index_of;

  int dim() const { return static_cast<int>(basis.size()); }
  int rank() const { return static_cast<int>(simple_h.size()); }
  int index(const std::string& label) const;

  RationalVector bracket(const RationalVector& x, const RationalVector& y) const;
  Rational pair(const RationalVector& x, const RationalVector& y) const;
  RationalVector unit(int i) const;
  /// Matrix of ad(x) in the basis (column j = [x, b_j]).
  RationalMatrix ad(const RationalVector& x) const;
};

/// Chevalley basis.  Extraspecial pairs (alpha, xi - alpha) take alpha as the
/// first positive root in the positive-root order and get N = +(p+1); all other
/// structure constants follow.  Basis order: Cartan h_1..h_r, positive roots,
/// negative roots (same order).
StructureTable chevalley_table(const RootSystem& rs);

/// Block-diagonal sum; labels are prefixed "s1." / "s2.".
StructureTable direct_sum(const StructureTable& a, const StructureTable& b);

/// Label used for a root vector, e.g. "e(1,1)" or "f(1,0)".
std::string root_label(const RootVec& root);

}  // namespace sympair
