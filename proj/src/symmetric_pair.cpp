#include "sympair/symmetric_pair.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "sympair/echelon.hpp"

namespace sympair {

namespace {

RationalVector primitive(RationalVector v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  Integer g = 0;
  for (const auto& x : v) {
    const Integer num = x.get_num() * (l / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
  }
  if (g == 0) return v;
  int sign = 1;
  for (const auto& x : v)
    if (x != 0) {
      sign = x > 0 ? 1 : -1;
      break;
    }
  for (auto& x : v) x = x * l / g * sign;
  return v;
}

std::string vec_label(const StructureTable& t, const RationalVector& v) {
  std::string out;
  for (int i = 0; i < t.dim(); ++i) {
    if (v[i] == 0) continue;
    if (!out.empty()) out += " + ";
    out += to_string(v[i]) + "*" + t.basis[i].label;
  }
  return out.empty() ? "0" : out;
}

std::string weight_label(const Weight& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s + ")";
}

RationalVector mat_vec(const RationalMatrix& m, const RationalVector& x) {
  RationalVector r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      if (x[j] != 0 && m[i][j] != 0) r[i] += m[i][j] * x[j];
  return r;
}

// Solve sum_a x_a cols[a] = target exactly; nullopt if target is outside the span.
std::optional<RationalVector> solve_in_span(const std::vector<RationalVector>& cols, const RationalVector& target) {
  const std::size_t m = cols.size();
  const std::size_t n = target.size();
  RationalMatrix a(n, RationalVector(m + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) a[i][j] = cols[j][i];
    a[i][m] = -target[i];
  }
  for (const auto& v : null_space(a, m + 1)) {
    if (v[m] != 0) {
      RationalVector x(m);
      for (std::size_t j = 0; j < m; ++j) x[j] = v[j] / v[m];
      return x;
    }
  }
  if (is_zero(target)) return RationalVector(m);
  return std::nullopt;
}

// Checks that the linear map with columns `cols` is a form-preserving
// automorphism of order two.
void check_involution(const StructureTable& t, const RationalMatrix& m) {
  const int n = t.dim();
  std::vector<RationalVector> col(n, RationalVector(n));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) col[j][i] = m[i][j];
  std::vector<std::pair<int, int>> order;
  for (int i = 0; i < n; ++i)
    if (t.basis[i].kind == StructureTable::Kind::cartan)
      for (int j = 0; j < n; ++j)
        if (j != i) order.emplace_back(i, j);
  for (int i = 0; i < n; ++i)
    if (t.basis[i].kind != StructureTable::Kind::cartan)
      for (int j = i + 1; j < n; ++j)
        if (t.basis[j].kind != StructureTable::Kind::cartan) order.emplace_back(i, j);
  for (auto [i, j] : order) {
    const RationalVector lhs = mat_vec(m, t.bracket(t.unit(i), t.unit(j)));
    const RationalVector rhs = t.bracket(col[i], col[j]);
    if (lhs != rhs) {
      throw InvalidInput("images do not extend to an automorphism: bracket [" + t.basis[i].label + "," +
                         t.basis[j].label + "] is not preserved");
    }
  }
  for (int j = 0; j < n; ++j) {
    if (mat_vec(m, col[j]) != t.unit(j)) {
      throw InvalidInput("map is not an involution: sigma^2(" + t.basis[j].label + ") = " +
                         vec_label(t, mat_vec(m, col[j])));
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      if (t.pair(col[i], col[j]) != t.form[i][j]) {
        throw InvalidInput("involution does not preserve the invariant form on (" + t.basis[i].label + "," +
                           t.basis[j].label + ")");
      }
}

}  // namespace

RationalVector Involution::apply(const RationalVector& x) const { return mat_vec(full_matrix, x); }

Involution build_involution(const StructureTable& t, const std::vector<GeneratorImage>& images) {
  const int n = t.dim(), r = t.rank();
  std::vector<std::optional<RationalVector>> col(n);
  std::set<std::string> seen;
  for (const auto& gi : images) {
    const std::string& g = gi.generator;
    if (g.size() < 2 || (g[0] != 'e' && g[0] != 'f' && g[0] != 'h'))
      throw InvalidInput("unknown generator '" + g + "'");
    int idx = 0;
    try {
      std::size_t used = 0;
      idx = std::stoi(g.substr(1), &used) - 1;
      if (used != g.size() - 1) throw InvalidInput("");
    } catch (...) {
      throw InvalidInput("unknown generator '" + g + "'");
    }
    if (idx < 0 || idx >= r) throw InvalidInput("generator '" + g + "' out of range");
    if (!seen.insert(g).second) throw InvalidInput("generator '" + g + "' given twice");
    RationalVector v(n);
    for (const auto& [label, c] : gi.image) v[t.index(label)] += c;
    const int target = g[0] == 'e' ? t.simple_e[idx] : g[0] == 'f' ? t.simple_f[idx] : t.simple_h[idx];
    col[target] = v;
  }
  for (int i = 0; i < r; ++i) {
    if (!col[t.simple_e[i]]) throw InvalidInput("missing image for e" + std::to_string(i + 1));
    if (!col[t.simple_f[i]]) throw InvalidInput("missing image for f" + std::to_string(i + 1));
    if (!col[t.simple_h[i]]) col[t.simple_h[i]] = t.bracket(*col[t.simple_e[i]], *col[t.simple_f[i]]);
  }
  // propagate to root vectors in order of height
  std::map<RootVec, int> by_root;
  for (int j = 0; j < n; ++j)
    if (t.basis[j].kind == StructureTable::Kind::root) by_root[t.basis[j].root] = j;
  std::vector<int> order;
  for (int j = 0; j < n; ++j)
    if (t.basis[j].kind == StructureTable::Kind::root) order.push_back(j);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return std::abs(height(t.basis[a].root)) < std::abs(height(t.basis[b].root));
  });
  for (int j : order) {
    if (col[j]) continue;
    const RootVec& beta = t.basis[j].root;
    const bool pos = height(beta) > 0;
    bool done = false;
    for (int i = 0; i < r && !done; ++i) {
      RootVec rest = beta;
      rest[i] += pos ? -1 : 1;
      auto it = by_root.find(rest);
      if (it == by_root.end()) continue;
      const int gen = pos ? t.simple_e[i] : t.simple_f[i];
      long coeff = 0;
      for (const auto& [k, c] : t.brackets[gen][it->second])
        if (k == j) coeff = c;
      if (coeff == 0 || !col[it->second]) continue;
      RationalVector v = t.bracket(*col[gen], *col[it->second]);
      for (auto& x : v) x /= coeff;
      col[j] = v;
      done = true;
    }
    if (!done) throw Error("could not propagate involution to " + t.basis[j].label);
  }
  Involution s;
  s.kind = Involution::Kind::generator_defined;
  s.generator_images = images;
  s.full_matrix.assign(n, RationalVector(n));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) s.full_matrix[i][j] = (*col[j])[i];
  check_involution(t, s.full_matrix);
  return s;
}

Involution diagonal_swap(const StructureTable& t) {
  if (t.num_factors != 2) throw InvalidInput("diagonal swap needs a sum of two factors");
  const int n = t.dim();
  Involution s;
  s.kind = Involution::Kind::diagonal_swap;
  s.full_matrix.assign(n, RationalVector(n));
  for (int j = 0; j < n; ++j) {
    const std::string& l = t.basis[j].label;
    if (l.rfind("s1.", 0) != 0 && l.rfind("s2.", 0) != 0) throw InvalidInput("diagonal swap needs a direct_sum table");
    const std::string other = (l[1] == '1' ? "s2." : "s1.") + l.substr(3);
    auto it = t.index_of.find(other);
    if (it == t.index_of.end()) throw InvalidInput("factors are not isomorphic: no match for " + l);
    s.full_matrix[it->second][j] = 1;
  }
  check_involution(t, s.full_matrix);
  return s;
}

std::pair<int, int> eigenspace_dimensions(const Involution& sigma) {
  const std::size_t n = sigma.full_matrix.size();
  RationalMatrix plus = sigma.full_matrix, minus = sigma.full_matrix;
  for (std::size_t i = 0; i < n; ++i) {
    plus[i][i] -= 1;
    minus[i][i] += 1;
  }
  const int k = static_cast<int>(n - matrix_rank(plus));
  const int p = static_cast<int>(n - matrix_rank(minus));
  return {k, p};
}

bool SymmetricPair::is_positive(const Weight& w) const {
  Rational v = 0;
  for (std::size_t a = 0; a < w.size(); ++a) v += positivity[a] * w[a];
  if (v != 0) return v > 0;
  for (long x : w)
    if (x != 0) return x > 0;
  return false;
}

Rational SymmetricPair::weight_inner(const Weight& a, const Weight& b) const {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) s += cartan_gram_inverse[i][j] * a[i] * b[j];
  }
  return s;
}

std::vector<long> SymmetricPair::dynkin_labels(const Weight& mu) const {
  std::vector<long> out;
  for (const auto& beta : k_simple_weights) {
    const Rational v = 2 * weight_inner(mu, beta) / weight_inner(beta, beta);
    if (v.get_den() != 1) throw Error("weight " + weight_label(mu) + " is not integral for k");
    out.push_back(v.get_num().get_si());
  }
  return out;
}

RationalVector SymmetricPair::p_coords(const RationalVector& v) const {
  RationalVector c(dim_p());
  for (int i = 0; i < dim_p(); ++i) c[i] = table.pair(v, p_dual_basis[i]);
  return c;
}

RationalMatrix SymmetricPair::ad_on_p(const RationalVector& x) const {
  const int n = dim_p();
  RationalMatrix m(n, RationalVector(n));
  for (int j = 0; j < n; ++j) {
    const RationalVector c = p_coords(table.bracket(x, p_basis[j]));
    for (int i = 0; i < n; ++i) m[i][j] = c[i];
  }
  return m;
}

RationalVector SymmetricPair::k_element(const RationalVector& c) const {
  if (static_cast<int>(c.size()) != dim_k()) throw InvalidInput("k coordinates have the wrong length");
  RationalVector x(dim_g());
  for (int i = 0; i < dim_k(); ++i) {
    if (c[i] == 0) continue;
    for (int j = 0; j < dim_g(); ++j) x[j] += c[i] * k_basis[i][j];
  }
  return x;
}

RationalVector SymmetricPair::k_coords(const RationalVector& v) const {
  const int n = dim_k();
  RationalMatrix gram(n, RationalVector(n));
  RationalVector rhs(n);
  for (int i = 0; i < n; ++i) {
    rhs[i] = table.pair(v, k_basis[i]);
    for (int j = 0; j < n; ++j) gram[i][j] = table.pair(k_basis[i], k_basis[j]);
  }
  return solve_linear(gram, rhs);
}

std::vector<int> SymmetricPair::p_indices_of(const Weight& w) const {
  std::vector<int> out;
  for (int i = 0; i < dim_p(); ++i)
    if (p_weights[i] == w) out.push_back(i);
  return out;
}

SymmetricPair decompose(const StructureTable& t, const Involution& sigma, const std::string& name) {
  const int n = t.dim();
  const auto& M = sigma.full_matrix;
  std::vector<int> cartan_idx(t.rank());
  for (int j = 0; j < n; ++j)
    if (t.basis[j].kind == StructureTable::Kind::cartan) cartan_idx[t.basis[j].cartan_index] = j;
  const int r = t.rank();
  for (int c : cartan_idx)
    for (int i = 0; i < n; ++i)
      if (M[i][c] != 0 && t.basis[i].kind != StructureTable::Kind::cartan) {
        throw HypothesisViolation("sigma does not preserve the Cartan subalgebra h, so h_sigma cannot be taken "
                                  "inside h (k has no Cartan split over Q in this presentation)");
      }

  SymmetricPair sp;
  sp.name = name;
  sp.table = t;
  sp.sigma = sigma;

  // h_sigma = fixed part of h, in simple-coroot coordinates
  RationalMatrix sh(r, RationalVector(r));
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) sh[a][b] = M[cartan_idx[a]][cartan_idx[b]];
  RationalMatrix fix = sh;
  for (int a = 0; a < r; ++a) fix[a][a] -= 1;
  std::vector<RationalVector> hcoords = null_space(fix, r);
  const int m = static_cast<int>(hcoords.size());
  // scale each basis vector so the weights of g on it are primitive integers
  for (auto& h : hcoords) {
    RationalVector vals;
    for (int j = 0; j < n; ++j) {
      if (t.basis[j].kind != StructureTable::Kind::root) continue;
      Rational v = 0;
      for (int i = 0; i < r; ++i) v += h[i] * t.roots.pairing(t.basis[j].root, i);
      vals.push_back(v);
    }
    Integer l = 1, g = 0;
    for (const auto& x : vals) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    for (const auto& x : vals) {
      const Integer num = x.get_num() * (l / x.get_den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
    }
    if (g == 0) g = 1;
    for (auto& x : h) x = x * l / g;
  }
  auto weight_of = [&](int j) {
    Weight w(m, 0);
    if (t.basis[j].kind != StructureTable::Kind::root) return w;
    for (int a = 0; a < m; ++a) {
      Rational v = 0;
      for (int i = 0; i < r; ++i) v += hcoords[a][i] * t.roots.pairing(t.basis[j].root, i);
      if (v.get_den() != 1) throw Error("non-integral weight after scaling");
      w[a] = v.get_num().get_si();
    }
    return w;
  };
  for (const auto& h : hcoords) {
    RationalVector v(n);
    for (int i = 0; i < r; ++i) v[cartan_idx[i]] = h[i];
    sp.cartan_basis.push_back(v);
  }
  sp.cartan_gram.assign(m, RationalVector(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) sp.cartan_gram[a][b] = t.pair(sp.cartan_basis[a], sp.cartan_basis[b]);
  sp.cartan_gram_inverse = m ? inverse(sp.cartan_gram) : RationalMatrix{};

  // positivity: H = (rho^vee + sigma rho^vee) / 2 expressed on h_sigma
  {
    RationalMatrix at(r, RationalVector(r));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) at[i][j] = t.roots.cartan_matrix[j][i];
    RationalVector one(r, Rational(1));
    const RationalVector rho_v = r ? solve_linear(at, one) : RationalVector{};
    RationalVector hpos = rho_v;
    const RationalVector srho = mat_vec(sh, rho_v);
    for (int i = 0; i < r; ++i) hpos[i] = (hpos[i] + srho[i]) / 2;
    auto coeff = solve_in_span(hcoords, hpos);
    if (!coeff) throw Error("positivity element is not in h_sigma");
    // lambda(H) = sum_a t_a lambda(H_a)
    sp.positivity = *coeff;
  }

  std::map<Weight, std::vector<int>> groups;
  for (int j = 0; j < n; ++j) groups[weight_of(j)].push_back(j);

  struct Piece {
    Weight w;
    std::vector<RationalVector> k, p;
  };
  std::vector<Piece> pieces;
  for (const auto& [w, idx] : groups) {
    const int d = static_cast<int>(idx.size());
    std::set<int> inside(idx.begin(), idx.end());
    for (int j : idx)
      for (int i = 0; i < n; ++i)
        if (M[i][j] != 0 && !inside.count(i)) throw Error("sigma does not preserve a weight space of h_sigma");
    RationalMatrix plus(d, RationalVector(d)), minus(d, RationalVector(d));
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        plus[a][b] = M[idx[a]][idx[b]] - (a == b ? 1 : 0);
        minus[a][b] = M[idx[a]][idx[b]] + (a == b ? 1 : 0);
      }
    Piece pc;
    pc.w = w;
    auto embed = [&](const RationalVector& v) {
      RationalVector g(n);
      for (int a = 0; a < d; ++a) g[idx[a]] = v[a];
      return primitive(g);
    };
    for (const auto& v : null_space(plus, d)) pc.k.push_back(embed(v));
    for (const auto& v : null_space(minus, d)) pc.p.push_back(embed(v));
    pieces.push_back(std::move(pc));
  }
  auto value = [&](const Weight& w) {
    Rational v = 0;
    for (int a = 0; a < m; ++a) v += sp.positivity[a] * w[a];
    return v;
  };
  std::sort(pieces.begin(), pieces.end(), [&](const Piece& x, const Piece& y) {
    const Rational vx = value(x.w), vy = value(y.w);
    if (vx != vy) return vx > vy;
    return x.w > y.w;
  });

  const Weight zero(m, 0);
  for (const auto& pc : pieces) {
    if (pc.w == zero) {
      if (static_cast<int>(pc.k.size()) != m) {
        throw HypothesisViolation("the sigma-fixed part of h is not a Cartan subalgebra of k (centralizer has dim " +
                                  std::to_string(pc.k.size()) + ", expected " + std::to_string(m) + ")");
      }
    } else {
      if (pc.k.size() > 1) throw HypothesisViolation("k root space of weight " + weight_label(pc.w) + " is not one-dimensional");
      if (pc.p.size() > 1) {
        throw HypothesisViolation("nonzero p weight " + weight_label(pc.w) + " has multiplicity " +
                                  std::to_string(pc.p.size()));
      }
    }
  }
  for (const auto& v : sp.cartan_basis) {
    sp.k_basis.push_back(v);
    sp.k_weights.push_back(zero);
  }
  for (const auto& pc : pieces) {
    if (pc.w != zero)
      for (const auto& v : pc.k) {
        sp.k_basis.push_back(v);
        sp.k_weights.push_back(pc.w);
      }
    for (const auto& v : pc.p) {
      sp.p_basis.push_back(v);
      sp.p_weights.push_back(pc.w);
    }
  }
  if (sp.dim_p() > 64) throw HypothesisViolation("dim p = " + std::to_string(sp.dim_p()) + " exceeds 64");

  // dual basis
  const int np = sp.dim_p();
  if (np > 0) {
    RationalMatrix gram(np, RationalVector(np));
    for (int i = 0; i < np; ++i)
      for (int j = 0; j < np; ++j) gram[i][j] = t.pair(sp.p_basis[i], sp.p_basis[j]);
    const RationalMatrix gi = inverse(gram);
    sp.p_dual_coords.assign(np, RationalVector(np));
    for (int j = 0; j < np; ++j) {
      RationalVector f(n);
      for (int l = 0; l < np; ++l) {
        sp.p_dual_coords[j][l] = gi[l][j];
        if (gi[l][j] == 0) continue;
        for (int i = 0; i < n; ++i) f[i] += gi[l][j] * sp.p_basis[l][i];
      }
      sp.p_dual_basis.push_back(f);
    }
  }

  // root system of k
  std::vector<Weight> kpos;
  for (const auto& w : sp.k_weights)
    if (w != zero && sp.is_positive(w)) kpos.push_back(w);
  std::set<Weight> kpos_set(kpos.begin(), kpos.end());
  std::vector<Weight> simple;
  for (const auto& w : kpos) {
    bool decomposable = false;
    for (const auto& a : kpos) {
      Weight b(m);
      for (int i = 0; i < m; ++i) b[i] = w[i] - a[i];
      if (kpos_set.count(b)) decomposable = true;
    }
    if (!decomposable) simple.push_back(w);
  }
  std::sort(simple.begin(), simple.end(), [&](const Weight& x, const Weight& y) {
    const Rational vx = value(x), vy = value(y);
    if (vx != vy) return vx < vy;
    return x > y;
  });
  sp.k_simple_weights = simple;
  const int rk = static_cast<int>(simple.size());
  IntMatrix ak(rk, std::vector<int>(rk));
  for (int i = 0; i < rk; ++i)
    for (int j = 0; j < rk; ++j) {
      const Rational v = 2 * sp.weight_inner(simple[j], simple[i]) / sp.weight_inner(simple[i], simple[i]);
      if (v.get_den() != 1) throw Error("k Cartan matrix is not integral");
      ak[i][j] = static_cast<int>(v.get_num().get_si());
    }
  sp.k_roots = build_root_system(ak);
  if (sp.k_roots.positive_roots.size() != kpos.size()) throw Error("k root system does not match the k weights");
  {
    std::vector<RationalVector> cols;
    for (const auto& w : simple) cols.emplace_back(w.begin(), w.end());
    for (const auto& w : kpos) {
      auto c = solve_in_span(cols, RationalVector(w.begin(), w.end()));
      if (!c) throw Error("k root outside the span of simple roots");
      RootVec rv;
      for (const auto& x : *c) {
        if (x.get_den() != 1) throw Error("k root has non-integral simple coordinates");
        rv.push_back(static_cast<int>(x.get_num().get_si()));
      }
      if (!sp.k_roots.positive_index(rv)) throw Error("k root not found in the k root system");
    }
  }
  for (const auto& w : simple) {
    Weight neg(m);
    for (int i = 0; i < m; ++i) neg[i] = -w[i];
    for (int j = 0; j < sp.dim_k(); ++j) {
      if (sp.k_weights[j] == w) sp.k_simple_e.push_back(j);
      if (sp.k_weights[j] == neg) sp.k_simple_f.push_back(j);
    }
  }

  // highest weight of p
  std::set<Weight> pw(sp.p_weights.begin(), sp.p_weights.end());
  std::vector<Weight> maximal;
  for (const auto& w : pw) {
    bool top = true;
    for (const auto& s : simple) {
      Weight u(m);
      for (int i = 0; i < m; ++i) u[i] = w[i] + s[i];
      if (pw.count(u)) top = false;
    }
    if (top) maximal.push_back(w);
  }
  std::sort(maximal.begin(), maximal.end(), [&](const Weight& x, const Weight& y) {
    const Rational vx = value(x), vy = value(y);
    if (vx != vy) return vx > vy;
    return x > y;
  });
  if (!maximal.empty()) sp.theta_p = maximal.front();
  sp.theta_unique = maximal.size() == 1;
  return sp;
}

int irreducibility_report(const SymmetricPair& sp) {
  const int n = sp.dim_p();
  if (n == 0) return 0;
  std::vector<RationalVector> gens = sp.cartan_basis;
  for (int j : sp.k_simple_e) gens.push_back(sp.k_basis[j]);
  for (int j : sp.k_simple_f) gens.push_back(sp.k_basis[j]);
  const std::size_t cols = static_cast<std::size_t>(n) * n;
  Echelon eq(cols);
  for (const auto& y : gens) {
    const RationalMatrix rho = sp.ad_on_p(y);
    // (X rho - rho X)_{ab} = sum_c X_{ac} rho_{cb} - rho_{ac} X_{cb}
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        std::map<std::uint32_t, Rational> row;
        for (int c = 0; c < n; ++c) {
          if (rho[c][b] != 0) row[a * n + c] += rho[c][b];
          if (rho[a][c] != 0) row[c * n + b] -= rho[a][c];
        }
        RationalSparse sv;
        for (auto& [k, v] : row)
          if (v != 0) sv.emplace_back(k, v);
        if (!sv.empty()) eq.insert(sv);
      }
  }
  return static_cast<int>(cols - eq.rank());
}

ExponentPrediction conjectured_exponent(const SymmetricPair& sp) {
  ExponentPrediction out;
  if (sp.is_diagonal()) {
    const int r = sp.table.rank() / 2;
    IntMatrix block(r, std::vector<int>(r));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) block[i][j] = sp.table.cartan_matrix[i][j];
    const int h = dual_coxeter_number(build_root_system(block));
    out.value = h;
    out.naive = h;
    out.note = "dual Coxeter number of the diagonal factor";
    return out;
  }
  if (!sp.table.roots.is_simple()) {
    out.note = "g is not simple; no prediction";
    return out;
  }
  if (!sp.k_semisimple() || sp.k_roots.rank() == 0 || !sp.k_roots.is_simple()) {
    out.note = "k is not simple; h_k undefined";
    return out;
  }
  const int hg = dual_coxeter_number(sp.table.roots);
  const int hk = dual_coxeter_number(sp.k_roots);
  out.naive = hg - hk;
  const RootVec& th = sp.k_roots.highest_root();
  Weight w(sp.cartan_rank(), 0);
  for (std::size_t i = 0; i < th.size(); ++i)
    for (int a = 0; a < sp.cartan_rank(); ++a) w[a] += th[i] * sp.k_simple_weights[i][a];
  const Rational norm = sp.weight_inner(w, w);
  if (norm == 2) {
    out.value = hg - hk;
    out.note = "form of g restricts to the normalized form of k";
  } else {
    out.note = "form of g induces (theta_k, theta_k) = " + to_string(norm) +
               " on k instead of 2; normalization of h_k is ambiguous, comparison is advisory";
  }
  return out;
}

SymmetricPair build_pair(const PairDescriptor& d) {
  const RootSystem rs = build_root_system(d.cartan);
  if (d.diagonal) {
    if (!d.images.empty()) throw InvalidInput("diagonal pairs take no generator images");
    IntMatrix block = d.cartan;
    if (rs.num_components() == 2) {
      const int r = rs.rank();
      if (r % 2) throw InvalidInput("diagonal: the two factors are not isomorphic");
      const int h = r / 2;
      for (int i = 0; i < r; ++i)
        if (rs.component[i] != (i < h ? 0 : 1)) throw InvalidInput("diagonal: factors must be contiguous blocks");
      block.assign(h, std::vector<int>(h));
      for (int i = 0; i < h; ++i)
        for (int j = 0; j < h; ++j) {
          block[i][j] = d.cartan[i][j];
          if (d.cartan[h + i][h + j] != block[i][j]) throw InvalidInput("diagonal: the two factors are not isomorphic");
        }
    } else if (rs.num_components() != 1) {
      throw InvalidInput("diagonal: algebra must be simple or a sum of two isomorphic simple factors");
    }
    const StructureTable s = chevalley_table(build_root_system(block));
    const StructureTable t = direct_sum(s, s);
    return decompose(t, diagonal_swap(t), d.name);
  }
  const StructureTable t = chevalley_table(rs);
  return decompose(t, build_involution(t, d.images), d.name);
}

namespace {

// e_i -> -e_{perm i}, f_i -> -f_{perm i}
std::vector<GeneratorImage> twisted_sign_images(const IntMatrix& cartan, const std::vector<int>& perm) {
  const int r = static_cast<int>(cartan.size());
  std::vector<GeneratorImage> out;
  for (int i = 0; i < r; ++i) {
    RootVec a(r, 0);
    a[perm[i]] = 1;
    RootVec na(r, 0);
    na[perm[i]] = -1;
    out.push_back({"e" + std::to_string(i + 1), {{root_label(a), Rational(-1)}}});
    out.push_back({"f" + std::to_string(i + 1), {{root_label(na), Rational(-1)}}});
  }
  return out;
}

}  // namespace

std::vector<std::string> preset_names() {
  return {"diagonal:A1", "diagonal:A2", "diagonal:B2", "split:A1", "split:A2", "split:A3", "split:B2", "split:G2"};
}

PairDescriptor preset_descriptor(const std::string& name) {
  const auto colon = name.find(':');
  const auto names = preset_names();
  if (colon == std::string::npos || std::find(names.begin(), names.end(), name) == names.end()) {
    throw InvalidInput("unknown preset '" + name + "'");
  }
  const std::string kind = name.substr(0, colon);
  const std::string alg = name.substr(colon + 1);
  PairDescriptor d;
  d.name = name;
  d.cartan = cartan_matrix_for(alg);
  const int r = static_cast<int>(d.cartan.size());
  if (kind == "diagonal") {
    d.diagonal = true;
    return d;
  }
  std::vector<int> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  // type A of rank >= 2: twist by the diagram flip so that k is so_n
  if (alg[0] == 'A' && r >= 2) std::reverse(perm.begin(), perm.end());
  d.images = twisted_sign_images(d.cartan, perm);
  return d;
}

}  // namespace sympair
