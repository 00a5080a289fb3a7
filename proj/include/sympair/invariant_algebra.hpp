#pragma once

#include "sympair/affine_weyl.hpp"
#include "sympair/echelon.hpp"
#include "sympair/exterior.hpp"
#include "sympair/symmetric_pair.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sympair {

/// c_3(x) = sum_i [x, e_i]^(1) ^ f_i^(2); x is given in k_basis coordinates.
ExteriorElement compute_c3(const SymmetricPair& sp, const RationalVector& x);
/// The same tensor antisymmetrized into Lambda^2 of copy 1 and of copy 2.
std::pair<ExteriorElement, ExteriorElement> compute_c1_c2(const SymmetricPair& sp, const RationalVector& x);
/// x acting on R as a derivation.
ExteriorElement act(const SymmetricPair& sp, const RationalVector& x, const ExteriorElement& v);

struct GeneratorSet {
  int dim_p = 0;
  /// Images of the k basis vectors, in k_basis order.
  std::vector<ExteriorElement> c1, c2, c3;
  GradedSubspace C1, C2, C3;
  /// S = sum_i e_i^(1) ^ f_i^(2).
  ExteriorElement S;
};

GeneratorSet build_generators(const SymmetricPair& sp);

/// J^{(p,q)} in R^{(p,q)}, spanned by monomials times generators.  Without C3
/// this is the ideal defining B.
GradedSubspace ideal_component(const GeneratorSet& gens, std::pair<int, int> bidegree, bool with_c3);

struct EngineOptions {
  /// Largest bidegree entry computed; -1 means dim p.
  int max_bidegree = -1;
  /// Components with more monomials than this are skipped.
  std::uint64_t ceiling = 200000;
  /// Worker threads for independent bidegrees.
  int threads = 1;
};

struct ComponentDims {
  int p = 0, q = 0;
  bool computed = false;
  std::uint64_t R = 0, J = 0, A = 0, B = 0;
  std::uint64_t A_k = 0, B_k = 0;
};

struct SPowerProfile {
  /// rank of S^m in A^{(m,m)} for m = 0, 1, ...
  std::vector<int> ranks;
  /// least m with S^m = 0 in A, if reached.
  std::optional<int> nilpotency_order;
  bool truncated = false;
};

/// Invariants of the bigraded quotients.  B = Q (x) Q with Q = Lambda(p)/<C1>
/// and A = B / (B . C3), computed one h_sigma weight at a time.  k-invariants
/// are the weight-zero vectors killed by the simple root vectors of k.
class InvariantEngine {
public:
  InvariantEngine(const SymmetricPair& sp, const GeneratorSet& gens, EngineOptions options = {});
  ~InvariantEngine();
  InvariantEngine(const InvariantEngine&) = delete;
  InvariantEngine& operator=(const InvariantEngine&) = delete;

  int max_bidegree() const;
  int dim_p() const;
  bool computed(int p, int q) const;
  bool truncated() const;
  const ComponentDims& dims(int p, int q) const;

  /// dim Lambda^n(p) / <C1>^n, or nullopt beyond the ceiling.
  std::optional<std::uint64_t> quotient_dim(int n) const;

  /// Basis of (A^k)^{(p,q)} or (B^k)^{(p,q)}, as B-coordinates of representatives.
  const std::vector<RationalSparse>& invariant_basis(int p, int q, bool in_a) const;

  SPowerProfile s_power_profile(int max_m) const;

  /// Normal form of S^m in A^{(m,m)}, in B-coordinates (empty if zero).
  RationalSparse s_power(int m) const;

  /// Whether a B-coordinate vector is k-invariant modulo C3 (in_a) or exactly in B.
  bool is_invariant(int p, int q, const RationalSparse& v, bool in_a) const;

  /// Lift of a B-coordinate vector to a representative in R (standard monomials).
  ExteriorElement representative(int p, int q, const RationalSparse& v) const;

  struct Impl;

private:
  Impl* impl_;
};

struct GenerationVerdict {
  bool pass = false;
  bool complete = true;
  int degree_bound = 0;
  std::string witness;
};

/// (A^k)^{(p,q)} = 0 for p != q and dim (A^k)^{(p,p)} = rank S^p for all
/// p, q <= degree_bound.  The default bound is nilpotency order + 1.
GenerationVerdict verify_generated_by_S(const InvariantEngine& engine, std::optional<int> degree_bound = std::nullopt);

struct HanRow {
  int degree = 0;
  std::uint64_t quotient_dim = 0;
  std::uint64_t predicted = 0;
};
struct HanReport {
  bool pass = false;
  /// False when some degree exceeded the ceiling.
  bool complete = true;
  bool multiplicity_free = false;
  std::vector<HanRow> rows;
  std::string detail;
};

/// dim Lambda^n(p)/<C1>^n against the sum of Weyl dimensions of V_I over the
/// b_sigma-stable abelian subspaces I of dimension n, whose highest weight is
/// the sum of the weights of I.
HanReport han_check(const SymmetricPair& sp, const InvariantEngine& engine, const std::vector<AbelianSubspace>& xi);

struct BidiagonalReport {
  bool pass = false;
  bool complete = true;
  std::string detail;
};

/// (B^k)^{(p,q)} = 0 off the diagonal and dim (B^k)^{(p,p)} = #{minuscule w : l(w) = p}.
BidiagonalReport b_invariants_bidiagonal_check(const InvariantEngine& engine, const std::vector<int>& minuscule_lengths);

}  // namespace sympair
