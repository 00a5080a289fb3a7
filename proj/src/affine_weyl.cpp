#include "sympair/affine_weyl.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace sympair {

namespace {

constexpr std::size_t kMaxMinuscule = 1u << 20;

std::string word_text(const std::vector<int>& w) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < w.size(); ++i) out << (i ? "," : "") << w[i];
  out << ']';
  return out.str();
}

AffineRoot neg(AffineRoot b) {
  for (auto& x : b) x = -x;
  return b;
}

}  // namespace

AffineRoot AffineRootSystem::simple(int i) const {
  AffineRoot a(size(), 0);
  a[i] = 1;
  return a;
}

Weight AffineRootSystem::finite_part(const AffineRoot& b) const {
  Weight w(finite_parts.front().size(), 0);
  for (int j = 0; j < size(); ++j)
    for (std::size_t a = 0; a < w.size(); ++a) w[a] += b[j] * finite_parts[j][a];
  return w;
}

int AffineRootSystem::pairing(const AffineRoot& b, int i) const {
  int s = 0;
  for (int j = 0; j < size(); ++j) s += b[j] * cartan[i][j];
  return s;
}

AffineRoot AffineRootSystem::reflect(const AffineRoot& b, int i) const {
  AffineRoot r = b;
  r[i] -= pairing(b, i);
  return r;
}

bool AffineRootSystem::is_positive(const AffineRoot& b) const {
  bool any = false;
  for (int x : b) {
    if (x < 0) return false;
    if (x > 0) any = true;
  }
  return any;
}

AffineRootSystem build_affine(const SymmetricPair& sp) {
  if (!sp.k_semisimple()) throw HypothesisViolation("affine root data needs k semisimple");
  if (!sp.theta_unique) throw HypothesisViolation("p has no unique highest weight");
  for (std::size_t i = 0; i < sp.p_weights.size(); ++i)
    if (sp.p_weights[i] != Weight(sp.cartan_rank(), 0) && sp.p_indices_of(sp.p_weights[i]).size() > 1)
      throw HypothesisViolation("nonzero p weight with multiplicity > 1");
  AffineRootSystem ars;
  ars.k_rank = sp.k_roots.rank();
  Weight t = sp.theta_p;
  for (auto& x : t) x = -x;
  ars.finite_parts.push_back(t);
  for (const auto& w : sp.k_simple_weights) ars.finite_parts.push_back(w);
  const int n = ars.size();
  ars.cartan.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rational v = 2 * sp.weight_inner(ars.finite_parts[j], ars.finite_parts[i]) /
                         sp.weight_inner(ars.finite_parts[i], ars.finite_parts[i]);
      if (v.get_den() != 1) throw Error("affine Cartan matrix is not integral");
      ars.cartan[i][j] = static_cast<int>(v.get_num().get_si());
    }
  return ars;
}

AffineRoot apply_word(const AffineRootSystem& ars, const std::vector<int>& word, AffineRoot beta) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) beta = ars.reflect(beta, *it);
  return beta;
}

namespace {

// Either the inversion list of a reduced word, or the positions (m, k) to delete.
bool try_inversions(const AffineRootSystem& ars, const std::vector<int>& word, std::vector<AffineRoot>& inv,
                    std::pair<std::size_t, std::size_t>& drop) {
  inv.clear();
  std::vector<int> prefix;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (word[k] < 0 || word[k] >= ars.size()) throw InvalidInput("word letter out of range: " + std::to_string(word[k]));
    const AffineRoot r = apply_word(ars, prefix, ars.simple(word[k]));
    if (!ars.is_positive(r)) {
      const AffineRoot target = neg(r);
      for (std::size_t m = 0; m < inv.size(); ++m)
        if (inv[m] == target) {
          drop = {m, k};
          return false;
        }
      throw Error("exchange condition failed");
    }
    inv.push_back(r);
    prefix.push_back(word[k]);
  }
  return true;
}

}  // namespace

std::vector<int> reduce_word(const AffineRootSystem& ars, std::vector<int> word) {
  std::vector<AffineRoot> inv;
  std::pair<std::size_t, std::size_t> drop;
  while (!try_inversions(ars, word, inv, drop)) {
    word.erase(word.begin() + drop.second);
    word.erase(word.begin() + drop.first);
  }
  return word;
}

AffineWeylElement inversion_set(const AffineRootSystem& ars, const std::vector<int>& word) {
  AffineWeylElement w;
  std::pair<std::size_t, std::size_t> drop;
  if (!try_inversions(ars, word, w.inversions, drop)) {
    auto reduced = reduce_word(ars, word);
    throw NonReducedWord("word " + word_text(word) + " is not reduced; reduced form " + word_text(reduced), reduced);
  }
  w.word = word;
  return w;
}

std::vector<AffineRoot> inverse_inversions(const AffineRootSystem& ars, const AffineWeylElement& w) {
  std::vector<int> rev(w.word.rbegin(), w.word.rend());
  return inversion_set(ars, rev).inversions;
}

bool is_minuscule(const AffineRootSystem& ars, const AffineWeylElement& w) {
  for (const auto& b : inverse_inversions(ars, w))
    if (ars.level(b) != 1) return false;
  return true;
}

std::vector<AffineWeylElement> enumerate_minuscule(const AffineRootSystem& ars) {
  // search over u = w^{-1}; u s_j is new exactly when u alpha_j > 0, which is
  // then the added inversion of u
  struct Node {
    std::vector<int> uword;
    std::set<AffineRoot> inv;
  };
  std::set<std::set<AffineRoot>> seen;
  std::deque<Node> queue;
  queue.push_back({{}, {}});
  seen.insert({});
  std::vector<std::vector<int>> found;
  while (!queue.empty()) {
    Node node = std::move(queue.front());
    queue.pop_front();
    found.push_back(node.uword);
    for (int j = 0; j < ars.size(); ++j) {
      const AffineRoot b = apply_word(ars, node.uword, ars.simple(j));
      if (!ars.is_positive(b) || ars.level(b) != 1) continue;
      Node next = node;
      next.uword.push_back(j);
      next.inv.insert(b);
      if (seen.insert(next.inv).second) {
        if (seen.size() > kMaxMinuscule) throw DeskScaleExceeded("too many minuscule elements");
        queue.push_back(std::move(next));
      }
    }
  }
  std::vector<AffineWeylElement> out;
  for (const auto& u : found) out.push_back(inversion_set(ars, std::vector<int>(u.rbegin(), u.rend())));
  std::sort(out.begin(), out.end(), [](const AffineWeylElement& a, const AffineWeylElement& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.word < b.word;
  });
  return out;
}

AbelianSubspace ev1_subspace(const AffineRootSystem& ars, const AffineWeylElement& w) {
  AbelianSubspace s;
  for (const auto& b : inverse_inversions(ars, w)) {
    if (ars.level(b) != 1) throw InvalidInput("ev1_subspace: element " + word_text(w.word) + " is not minuscule");
    Weight mu = ars.finite_part(b);
    for (auto& x : mu) x = -x;
    s.weight_support.push_back(mu);
  }
  std::sort(s.weight_support.begin(), s.weight_support.end());
  return s;
}

int AbelianRelations::index_of(const Weight& w) const {
  for (std::size_t i = 0; i < weights.size(); ++i)
    if (weights[i] == w) return static_cast<int>(i);
  return -1;
}

AbelianRelations abelian_relations(const SymmetricPair& sp) {
  AbelianRelations rel;
  const Weight zero(sp.cartan_rank(), 0);
  std::vector<int> idx;
  for (int i = 0; i < sp.dim_p(); ++i)
    if (sp.p_weights[i] != zero) {
      rel.weights.push_back(sp.p_weights[i]);
      idx.push_back(i);
    }
  const std::size_t n = rel.weights.size();
  if (n > 64) throw DeskScaleExceeded("more than 64 nonzero p weights");
  rel.needs.assign(n, 0);
  rel.forbidden.assign(n, false);
  rel.clash.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    const auto& v = sp.p_basis[idx[a]];
    for (int e : sp.k_simple_e) {
      const RationalVector c = sp.p_coords(sp.table.bracket(sp.k_basis[e], v));
      if (is_zero(c)) continue;
      Weight target = rel.weights[a];
      for (std::size_t t = 0; t < target.size(); ++t) target[t] += sp.k_weights[e][t];
      const int ti = rel.index_of(target);
      if (ti < 0)
        rel.forbidden[a] = true;
      else
        rel.needs[a] |= std::uint64_t{1} << ti;
    }
    for (std::size_t b = 0; b < n; ++b)
      if (!is_zero(sp.table.bracket(v, sp.p_basis[idx[b]]))) rel.clash[a] |= std::uint64_t{1} << b;
  }
  return rel;
}

bool is_b_stable_abelian(const SymmetricPair& sp, const AbelianSubspace& s) {
  std::vector<int> idx;
  for (const auto& w : s.weight_support) {
    const auto ids = sp.p_indices_of(w);
    if (ids.size() != 1) return false;
    idx.push_back(ids.front());
  }
  std::set<Weight> support(s.weight_support.begin(), s.weight_support.end());
  for (int i : idx) {
    for (int e : sp.k_simple_e) {
      const RationalVector c = sp.p_coords(sp.table.bracket(sp.k_basis[e], sp.p_basis[i]));
      for (int j = 0; j < sp.dim_p(); ++j)
        if (c[j] != 0 && !support.count(sp.p_weights[j])) return false;
    }
    for (int j : idx)
      if (!is_zero(sp.table.bracket(sp.p_basis[i], sp.p_basis[j]))) return false;
  }
  return true;
}

AbelianOracle enumerate_abelian_oracle(const SymmetricPair& sp) {
  const AbelianRelations rel = abelian_relations(sp);
  const std::size_t n = rel.weights.size();
  AbelianOracle out;
  std::vector<std::uint64_t> sets;
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t i, std::uint64_t chosen) {
    if (i == n) {
      for (std::size_t a = 0; a < n; ++a)
        if ((chosen >> a & 1) && (rel.needs[a] & ~chosen)) return;
      sets.push_back(chosen);
      if (sets.size() > kMaxMinuscule) throw DeskScaleExceeded("too many abelian subspaces");
      return;
    }
    rec(i + 1, chosen);
    const std::uint64_t bit = std::uint64_t{1} << i;
    if (rel.forbidden[i] || (rel.clash[i] & (chosen | bit))) return;
    // requirements on already-decided (higher) weights
    const std::uint64_t decided = bit - 1;
    if (rel.needs[i] & decided & ~chosen) return;
    rec(i + 1, chosen | bit);
  };
  rec(0, 0);
  for (auto m : sets) {
    AbelianSubspace s;
    for (std::size_t a = 0; a < n; ++a)
      if (m >> a & 1) s.weight_support.push_back(rel.weights[a]);
    std::sort(s.weight_support.begin(), s.weight_support.end());
    out.subspaces.push_back(std::move(s));
  }
  std::sort(out.subspaces.begin(), out.subspaces.end(), [](const AbelianSubspace& a, const AbelianSubspace& b) {
    if (a.dimension() != b.dimension()) return a.dimension() < b.dimension();
    return a.weight_support < b.weight_support;
  });

  // zero-weight obstruction: a nonzero v in I_0 needs, for each simple i,
  // l_i(v) = 0 or [v, u_i] = 0, where [e_i, v] = l_i(v) u_i
  const Weight zero(sp.cartan_rank(), 0);
  const std::vector<int> z = sp.p_indices_of(zero);
  if (z.empty()) {
    out.zero_weight_certified = true;
    out.note = "p has no zero weight";
    return out;
  }
  const int r = static_cast<int>(sp.k_simple_e.size());
  std::vector<RationalMatrix> ell(r), big(r);
  for (int i = 0; i < r; ++i) {
    const auto& ei = sp.k_basis[sp.k_simple_e[i]];
    const auto target = sp.p_indices_of(sp.k_weights[sp.k_simple_e[i]]);
    RationalVector row(z.size());
    for (std::size_t t = 0; t < z.size(); ++t) {
      const RationalVector c = sp.p_coords(sp.table.bracket(ei, sp.p_basis[z[t]]));
      for (int j : target) row[t] += c[j];
    }
    ell[i].push_back(row);
    if (target.size() == 1) {
      const auto& u = sp.p_basis[target.front()];
      RationalMatrix m(sp.dim_g(), RationalVector(z.size()));
      for (std::size_t t = 0; t < z.size(); ++t) {
        const RationalVector b = sp.table.bracket(sp.p_basis[z[t]], u);
        for (int g = 0; g < sp.dim_g(); ++g) m[g][t] = b[g];
      }
      big[i] = m;
    }
  }
  bool certified = true;
  for (std::uint32_t choice = 0; choice < (1u << r) && certified; ++choice) {
    RationalMatrix eq;
    for (int i = 0; i < r; ++i) {
      const auto& part = (choice >> i & 1) ? big[i] : ell[i];
      eq.insert(eq.end(), part.begin(), part.end());
    }
    if (!null_space(eq.empty() ? RationalMatrix{RationalVector(z.size())} : eq, z.size()).empty()) certified = false;
  }
  out.zero_weight_certified = certified;
  out.note = certified ? "no b_sigma-stable abelian subspace meets p_0"
                       : "zero-weight obstruction not certified; subspaces meeting p_0 may be missing";
  return out;
}

CheckOutcome check_bijection(const AffineRootSystem& ars, const SymmetricPair& sp,
                             const std::vector<AffineWeylElement>& minuscule, const AbelianOracle& oracle) {
  std::ostringstream d;
  std::set<AbelianSubspace> images;
  bool ok = true;
  for (const auto& w : minuscule) {
    const AbelianSubspace s = ev1_subspace(ars, w);
    if (static_cast<int>(s.dimension()) != w.length()) {
      ok = false;
      d << "dim ev1 != length for " << word_text(w.word) << "; ";
    }
    if (!is_b_stable_abelian(sp, s)) {
      ok = false;
      d << "ev1 image of " << word_text(w.word) << " is not b-stable abelian; ";
    }
    if (!images.insert(s).second) {
      ok = false;
      d << "ev1 not injective at " << word_text(w.word) << "; ";
    }
  }
  const std::set<AbelianSubspace> xi(oracle.subspaces.begin(), oracle.subspaces.end());
  if (images != xi) {
    ok = false;
    d << "ev1 image differs from the oracle list; ";
  }
  if (!oracle.zero_weight_certified) {
    ok = false;
    d << oracle.note << "; ";
  }
  d << "|W_minu| = " << minuscule.size() << ", |Xi| = " << oracle.subspaces.size();
  return {ok && minuscule.size() == oracle.subspaces.size(), d.str()};
}

long rho_shift(const AffineRootSystem& ars, const AffineWeylElement& w) {
  // x = rho_hat + sum_j c_j alpha_j; apply w^{-1} = s_{i_k} ... s_{i_1}
  std::vector<long> c(ars.size(), 0);
  for (int i : w.word) {
    long value = 1;
    for (int j = 0; j < ars.size(); ++j) value += c[j] * ars.cartan[i][j];
    c[i] -= value;
  }
  return -c[0];
}

long level_sum(const AffineRootSystem& ars, const AffineWeylElement& w) {
  long s = 0;
  for (const auto& b : inverse_inversions(ars, w)) s += ars.level(b);
  return s;
}

CheckOutcome rho_length_check(const AffineRootSystem& ars, const std::vector<AffineWeylElement>& minuscule) {
  for (const auto& w : minuscule) {
    const long a = rho_shift(ars, w), b = level_sum(ars, w);
    if (a != w.length() || b != w.length()) {
      return {false, "element " + word_text(w.word) + ": reflection route " + std::to_string(a) +
                         ", level sum " + std::to_string(b) + ", length " + std::to_string(w.length())};
    }
  }
  return {true, std::to_string(minuscule.size()) + " elements"};
}

long degree_defect(const AffineRootSystem& ars, const AffineWeylElement& u, const AffineWeylElement& v,
                   const AffineWeylElement& w) {
  return level_sum(ars, w) - level_sum(ars, u) - level_sum(ars, v);
}

long degree_defect_direct(const AffineRootSystem& ars, const AffineWeylElement& u, const AffineWeylElement& v,
                          const AffineWeylElement& w) {
  return rho_shift(ars, w) - rho_shift(ars, u) - rho_shift(ars, v);
}

CheckOutcome degree_defect_check(const AffineRootSystem& ars, const std::vector<AffineWeylElement>& minuscule) {
  std::vector<long> sums;
  std::vector<long> direct;
  for (const auto& w : minuscule) {
    sums.push_back(level_sum(ars, w));
    direct.push_back(rho_shift(ars, w));
  }
  std::size_t triples = 0;
  for (std::size_t a = 0; a < minuscule.size(); ++a)
    for (std::size_t b = 0; b < minuscule.size(); ++b)
      for (std::size_t c = 0; c < minuscule.size(); ++c) {
        if (minuscule[c].length() != minuscule[a].length() + minuscule[b].length()) continue;
        ++triples;
        const long d1 = sums[c] - sums[a] - sums[b];
        const long d2 = direct[c] - direct[a] - direct[b];
        if (d1 != 0 || d2 != 0) {
          return {false, "nonzero defect for " + word_text(minuscule[a].word) + "," + word_text(minuscule[b].word) +
                             " -> " + word_text(minuscule[c].word)};
        }
      }
  return {true, std::to_string(triples) + " triples"};
}

namespace {

// Minimal representative of u W_sigma, reached by right multiplication with
// finite simple reflections.
std::vector<int> coset_minimum(const AffineRootSystem& ars, std::vector<int> word) {
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 1; i < ars.size(); ++i)
      if (!ars.is_positive(apply_word(ars, word, ars.simple(i)))) {
        word.push_back(i);
        word = reduce_word(ars, word);
        moved = true;
      }
  }
  return word;
}

}  // namespace

CheckOutcome order_ideal_check(const AffineRootSystem& ars, const std::vector<AffineWeylElement>& minuscule) {
  std::size_t checked = 0, direct = 0;
  for (const auto& w : minuscule) {
    std::vector<std::vector<int>> below;
    for (int i = 0; i < ars.size(); ++i) {
      if (ars.is_positive(apply_word(ars, w.word, ars.simple(i)))) continue;
      auto word = w.word;
      word.push_back(i);
      word = reduce_word(ars, word);
      if (static_cast<int>(word.size()) != w.length() - 1)
        return {false, "descent " + std::to_string(i) + " of " + word_text(w.word) + " did not shorten"};
      below.push_back(word);
    }
    for (std::size_t pos = 0; pos < w.word.size(); ++pos) {
      auto word = w.word;
      word.erase(word.begin() + pos);
      below.push_back(reduce_word(ars, word));
    }
    for (const auto& u : below) {
      const auto rep = coset_minimum(ars, u);
      if (rep == u) ++direct;
      ++checked;
      if (!is_minuscule(ars, inversion_set(ars, rep)))
        return {false, "element " + word_text(rep) + " below " + word_text(w.word) + " in W' is not minuscule"};
    }
  }
  return {true, std::to_string(checked) + " elements below minuscule ones (" + std::to_string(direct) +
                    " already minimal coset representatives)"};
}

CheckOutcome minimal_coset_check(const AffineRootSystem& ars, const std::vector<AffineWeylElement>& minuscule) {
  for (const auto& w : minuscule)
    for (int i = 1; i < ars.size(); ++i)
      if (!ars.is_positive(apply_word(ars, w.word, ars.simple(i))))
        return {false, word_text(w.word) + " is not a minimal coset representative"};
  return {true, std::to_string(minuscule.size()) + " elements"};
}

}  // namespace sympair
