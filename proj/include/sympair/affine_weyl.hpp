#pragma once

#include "sympair/symmetric_pair.hpp"

#include <string>
#include <vector>

namespace sympair {

/// Affine root in simple-root coordinates (alpha_0, alpha_1, ..., alpha_r);
/// alpha_0 = delta - theta_p and alpha_1..alpha_r are the simple roots of k.
using AffineRoot = std::vector<int>;

struct AffineRootSystem {
  int k_rank = 0;
  /// cartan[i][j] = alpha_j(alpha_i^vee).
  IntMatrix cartan;
  /// h_sigma weight of each simple root (finite part of alpha_0 is -theta_p).
  std::vector<Weight> finite_parts;

  int size() const { return k_rank + 1; }
  AffineRoot simple(int i) const;
  /// delta-coefficient, i.e. beta(d).
  int level(const AffineRoot& b) const { return b[0]; }
  Weight finite_part(const AffineRoot& b) const;
  /// beta(alpha_i^vee).
  int pairing(const AffineRoot& b, int i) const;
  AffineRoot reflect(const AffineRoot& b, int i) const;
  bool is_positive(const AffineRoot& b) const;
};

/// Requires k semisimple and a unique highest weight of p.
AffineRootSystem build_affine(const SymmetricPair& sp);

struct AffineWeylElement {
  /// Reduced word i_1 ... i_k for w = s_{i_1} ... s_{i_k}.
  std::vector<int> word;
  /// Phi(w) = {alpha_{i_1}, s_{i_1} alpha_{i_2}, ...}.
  std::vector<AffineRoot> inversions;

  int length() const { return static_cast<int>(word.size()); }
};

/// Raised for a non-reduced word; carries a reduced equivalent.
class NonReducedWord : public InvalidInput {
public:
  NonReducedWord(const std::string& what, std::vector<int> reduced) : InvalidInput(what), reduced_word(std::move(reduced)) {}
  std::vector<int> reduced_word;
};

AffineWeylElement inversion_set(const AffineRootSystem& ars, const std::vector<int>& word);
/// Reduced word for the same element (deletion via the exchange condition).
std::vector<int> reduce_word(const AffineRootSystem& ars, std::vector<int> word);
/// w(beta) for w given by a word.
AffineRoot apply_word(const AffineRootSystem& ars, const std::vector<int>& word, AffineRoot beta);
/// Phi(w^{-1}).
std::vector<AffineRoot> inverse_inversions(const AffineRootSystem& ars, const AffineWeylElement& w);

/// Every root of Phi(w^{-1}) has level 1.
bool is_minuscule(const AffineRootSystem& ars, const AffineWeylElement& w);

/// All minuscule elements, ordered by length then word.
std::vector<AffineWeylElement> enumerate_minuscule(const AffineRootSystem& ars);

/// Subspace of p spanned by weight vectors with the given nonzero weights.
struct AbelianSubspace {
  /// Sorted.
  std::vector<Weight> weight_support;
  std::size_t dimension() const { return weight_support.size(); }
  bool operator==(const AbelianSubspace&) const = default;
  bool operator<(const AbelianSubspace& o) const { return weight_support < o.weight_support; }
};

/// ev_1 of the level-one root spaces of Phi(w^{-1}).  A level-one root
/// delta + mu contributes the weight -mu, which makes the image stable under
/// the positive Borel of k.
AbelianSubspace ev1_subspace(const AffineRootSystem& ars, const AffineWeylElement& w);

/// Relations among nonzero p weights read off the brackets.
struct AbelianRelations {
  std::vector<Weight> weights;       // nonzero p weights, from highest down
  std::vector<std::uint64_t> needs;  // bit set of weights that must accompany weight i
  std::vector<bool> forbidden;       // a simple root vector sends weight i into p_0
  std::vector<std::uint64_t> clash;  // weights whose vectors do not commute with weight i
  int index_of(const Weight& w) const;
};
AbelianRelations abelian_relations(const SymmetricPair& sp);

/// [b_sigma, I] in I and [I, I] = 0, checked with the brackets of g.
bool is_b_stable_abelian(const SymmetricPair& sp, const AbelianSubspace& s);

struct AbelianOracle {
  std::vector<AbelianSubspace> subspaces;
  /// No b_sigma-stable abelian subspace meets p_0.
  bool zero_weight_certified = false;
  std::string note;
};

/// Brute-force enumeration of b_sigma-stable abelian subspaces spanned by
/// nonzero weight vectors, plus the zero-weight obstruction check.
AbelianOracle enumerate_abelian_oracle(const SymmetricPair& sp);

struct CheckOutcome {
  bool pass = false;
  std::string detail;
};

CheckOutcome check_bijection(const AffineRootSystem& ars, const SymmetricPair& sp,
                             const std::vector<AffineWeylElement>& minuscule, const AbelianOracle& oracle);

/// (rho_hat - w^{-1} rho_hat)(d) by applying reflections to rho_hat.
long rho_shift(const AffineRootSystem& ars, const AffineWeylElement& w);
/// Sum of levels over Phi(w^{-1}).
long level_sum(const AffineRootSystem& ars, const AffineWeylElement& w);

/// Both routes to (rho_hat - w^{-1} rho_hat)(d) agree with l(w).
CheckOutcome rho_length_check(const AffineRootSystem& ars, const std::vector<AffineWeylElement>& minuscule);

/// (u^{-1} rho_hat + v^{-1} rho_hat - w^{-1} rho_hat - rho_hat)(d) via level sums.
long degree_defect(const AffineRootSystem& ars, const AffineWeylElement& u, const AffineWeylElement& v,
                   const AffineWeylElement& w);
/// Same quantity through rho_shift.
long degree_defect_direct(const AffineRootSystem& ars, const AffineWeylElement& u, const AffineWeylElement& v,
                          const AffineWeylElement& w);

/// For all minuscule triples with l(w) = l(u) + l(v): defect is zero.
CheckOutcome degree_defect_check(const AffineRootSystem& ars, const std::vector<AffineWeylElement>& minuscule);

/// Elements below a minuscule w (right descents and single-letter deletions),
/// projected to the minimal representative of their W_sigma coset, are
/// minuscule.
CheckOutcome order_ideal_check(const AffineRootSystem& ars, const std::vector<AffineWeylElement>& minuscule);

/// w alpha_i > 0 for all simple roots of k.
CheckOutcome minimal_coset_check(const AffineRootSystem& ars, const std::vector<AffineWeylElement>& minuscule);

}  // namespace sympair
