#pragma once

#include "sympair/lie_core.hpp"
#include "sympair/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sympair {

/// Image of one Chevalley generator ("e1", "f2", "h1", ...) as a combination
/// of basis labels.
struct GeneratorImage {
  std::string generator;
  std::map<std::string, Rational> image;
};

/// Order-two automorphism of g.
struct Involution {
  enum class Kind { generator_defined, diagonal_swap };
  Kind kind = Kind::generator_defined;
  std::vector<GeneratorImage> generator_images;
  /// Column j is sigma(b_j).
  RationalMatrix full_matrix;

  RationalVector apply(const RationalVector& x) const;
};

/// Extend generator images to g by bracket propagation, then check that the
/// result is an automorphism of order two preserving the form.  Images of
/// h_i are optional (they follow from [e_i, f_i]).
Involution build_involution(const StructureTable& table, const std::vector<GeneratorImage>& images);

/// Swap of the two factors of direct_sum(s, s).
Involution diagonal_swap(const StructureTable& table);

/// (dim k, dim p) from the eigenspaces of sigma alone; works for any
/// involution, including ones without a split Cartan in k.
std::pair<int, int> eigenspace_dimensions(const Involution& sigma);

/// g = k + p with a Cartan subalgebra h_sigma of k, a positivity on its
/// weights, and a dual basis of p.  All vectors are in g-basis coordinates.
struct SymmetricPair {
  std::string name;
  StructureTable table;
  Involution sigma;

  /// Basis of h_sigma (the sigma-fixed part of h), scaled so that every
  /// weight of g on it is a primitive integer vector.
  std::vector<RationalVector> cartan_basis;
  /// <H_a, H_b> on the basis above, and its inverse.
  RationalMatrix cartan_gram;
  RationalMatrix cartan_gram_inverse;

  /// k basis: h_sigma basis first, then root vectors of k.
  std::vector<RationalVector> k_basis;
  std::vector<Weight> k_weights;
  /// p basis {e_i}: weight vectors, highest weights first.
  std::vector<RationalVector> p_basis;
  std::vector<Weight> p_weights;
  /// Dual basis {f_i} with <e_i, f_j> = delta_ij.
  std::vector<RationalVector> p_dual_basis;
  /// f_j in p-basis coordinates: p_dual_coords[j][l] is the coefficient of e_l.
  RationalMatrix p_dual_coords;

  /// Root system of [k, k]; simple roots in the order of k_simple_weights.
  RootSystem k_roots;
  std::vector<Weight> k_simple_weights;
  /// k_basis indices of root vectors for the k simple roots and their negatives.
  std::vector<int> k_simple_e, k_simple_f;

  /// Unique maximal p weight (or the largest maximal one, see theta_unique).
  Weight theta_p;
  bool theta_unique = true;

  int dim_g() const { return table.dim(); }
  int dim_k() const { return static_cast<int>(k_basis.size()); }
  int dim_p() const { return static_cast<int>(p_basis.size()); }
  int cartan_rank() const { return static_cast<int>(cartan_basis.size()); }
  bool is_diagonal() const { return sigma.kind == Involution::Kind::diagonal_swap; }
  /// k semisimple with rank equal to dim h_sigma.
  bool k_semisimple() const { return k_roots.rank() == cartan_rank(); }

  bool is_positive(const Weight& w) const;
  /// Induced form on h_sigma^*.
  Rational weight_inner(const Weight& a, const Weight& b) const;
  /// <mu, beta_i^vee> for the simple roots beta_i of k.
  std::vector<long> dynkin_labels(const Weight& mu) const;

  /// Coordinates of v (assumed in p) in the p basis.
  RationalVector p_coords(const RationalVector& v) const;
  /// ad(x)|_p in the p basis, column j = [x, e_j].
  RationalMatrix ad_on_p(const RationalVector& x) const;
  /// sum_i c_i k_basis[i].
  RationalVector k_element(const RationalVector& k_coords) const;
  /// Coordinates of v (assumed in k) in the k basis.
  RationalVector k_coords(const RationalVector& v) const;
  /// p-basis indices of a given weight.
  std::vector<int> p_indices_of(const Weight& w) const;

  /// Positivity functional on weight coordinates.
  RationalVector positivity;
};

/// Eigenspace decomposition.  Requires sigma to preserve h and the sigma-
/// fixed part of h to be a Cartan subalgebra of k; nonzero p weights must
/// have multiplicity one.
SymmetricPair decompose(const StructureTable& table, const Involution& sigma, const std::string& name = "");

/// dim End_k(p).
int irreducibility_report(const SymmetricPair& sp);

struct ExponentPrediction {
  std::optional<int> value;
  std::optional<int> naive;
  std::string note;
};

/// Predicted nilpotency order of S.  Diagonal pairs: h^vee(s).  Simple g with
/// simple k: h^vee(g) - h^vee(k), defined only if the form of g restricts to
/// the normalized form of k.  Otherwise undefined.
ExponentPrediction conjectured_exponent(const SymmetricPair& sp);

/// Input description of a pair.
struct PairDescriptor {
  std::string name;
  /// Cartan matrix of g (or of s for the diagonal case).
  IntMatrix cartan;
  bool diagonal = false;
  std::vector<GeneratorImage> images;
};

/// Resolve the table and involution for a descriptor and decompose.
/// "diagonal" on a simple algebra s means s + s with the swap; on a sum of
/// two isomorphic simple blocks it swaps them.
SymmetricPair build_pair(const PairDescriptor& d);

/// Shipped presets, in catalog order.
std::vector<std::string> preset_names();
PairDescriptor preset_descriptor(const std::string& name);

}  // namespace sympair
