#include "sympair/lie_core.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace sympair {

namespace {

constexpr int kMaxRank = 8;
constexpr std::size_t kMaxRoots = 4096;

bool root_order(const RootVec& a, const RootVec& b) {
  const int ha = height(a), hb = height(b);
  if (ha != hb) return ha < hb;
  return a > b;
}

RootVec negate(RootVec v) {
  for (auto& x : v) x = -x;
  return v;
}

RootVec add(const RootVec& a, const RootVec& b) {
  RootVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RootVec sub(const RootVec& a, const RootVec& b) {
  RootVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

bool is_positive(const RootVec& v) {
  bool any = false;
  for (int x : v) {
    if (x < 0) return false;
    if (x > 0) any = true;
  }
  return any;
}

void validate_cartan(const IntMatrix& a) {
  const std::size_t n = a.size();
  if (n > static_cast<std::size_t>(kMaxRank)) {
    throw InvalidInput("rank " + std::to_string(n) + " exceeds the supported ceiling of 8");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw InvalidInput("Cartan matrix is not square");
    if (a[i][i] != 2) throw InvalidInput("Cartan matrix diagonal entry is not 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a[i][j] > 0) throw InvalidInput("Cartan matrix has a positive off-diagonal entry");
      if ((a[i][j] == 0) != (a[j][i] == 0)) {
        throw InvalidInput("Cartan matrix zero pattern is not symmetric");
      }
    }
  }
}

}  // namespace

int height(const RootVec& beta) { return std::accumulate(beta.begin(), beta.end(), 0); }

const RootVec& RootSystem::highest_root() const {
  if (!is_simple()) throw HypothesisViolation("highest root requested for a non-simple root system");
  return highest_roots.front();
}

int RootSystem::pairing(const RootVec& beta, int i) const {
  int s = 0;
  for (int j = 0; j < rank(); ++j) s += beta[j] * cartan_matrix[i][j];
  return s;
}

Rational RootSystem::inner(const RootVec& a, const RootVec& b) const {
  Rational s = 0;
  for (int i = 0; i < rank(); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank(); ++j) {
      if (b[j] == 0) continue;
      // (alpha_i, alpha_j) = a_ij (alpha_i, alpha_i) / 2
      s += Rational(a[i] * b[j] * cartan_matrix[i][j]) * simple_norms[i] / 2;
    }
  }
  return s;
}

Rational RootSystem::inner(const RationalVector& a, const RationalVector& b) const {
  Rational s = 0;
  for (int i = 0; i < rank(); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank(); ++j) {
      if (b[j] == 0) continue;
      s += a[i] * b[j] * cartan_matrix[i][j] * simple_norms[i] / 2;
    }
  }
  return s;
}

std::optional<std::size_t> RootSystem::positive_index(const RootVec& beta) const {
  auto it = positive_lookup.find(beta);
  if (it == positive_lookup.end()) return std::nullopt;
  return it->second;
}

bool RootSystem::is_root(const RootVec& beta) const {
  return positive_index(beta).has_value() || positive_index(negate(beta)).has_value();
}

RootVec RootSystem::reflect(const RootVec& beta, int i) const {
  RootVec r = beta;
  r[i] -= pairing(beta, i);
  return r;
}

RootSystem build_root_system(const IntMatrix& cartan) {
  validate_cartan(cartan);
  RootSystem rs;
  rs.cartan_matrix = cartan;
  const int n = static_cast<int>(cartan.size());

  // Components and relative root lengths.
  rs.component.assign(n, -1);
  rs.simple_norms.assign(n, Rational(0));
  int comps = 0;
  for (int start = 0; start < n; ++start) {
    if (rs.component[start] >= 0) continue;
    std::vector<int> members;
    std::deque<int> queue{start};
    rs.component[start] = comps;
    rs.simple_norms[start] = 1;
    while (!queue.empty()) {
      const int i = queue.front();
      queue.pop_front();
      members.push_back(i);
      for (int j = 0; j < n; ++j) {
        if (j == i || cartan[i][j] == 0) continue;
        // a_ij |alpha_i|^2 = a_ji |alpha_j|^2
        const Rational nj = Rational(cartan[i][j]) * rs.simple_norms[i] / cartan[j][i];
        if (rs.component[j] < 0) {
          rs.component[j] = comps;
          rs.simple_norms[j] = nj;
          queue.push_back(j);
        } else if (rs.simple_norms[j] != nj) {
          throw InvalidInput("Cartan matrix is not symmetrizable");
        }
      }
    }
    Rational longest = 0;
    for (int i : members) longest = std::max(longest, rs.simple_norms[i]);
    for (int i : members) rs.simple_norms[i] = rs.simple_norms[i] * 2 / longest;
    ++comps;
  }

  // Finite type: symmetrized matrix positive definite (leading principal minors).
  {
    RationalMatrix sym(n, RationalVector(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) sym[i][j] = Rational(cartan[i][j]) * rs.simple_norms[i] / 2;
    for (int k = 1; k <= n; ++k) {
      RationalMatrix minor(k, RationalVector(k));
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) minor[i][j] = sym[i][j];
      // determinant by elimination
      Rational det = 1;
      for (int c = 0; c < k; ++c) {
        int p = c;
        while (p < k && minor[p][c] == 0) ++p;
        if (p == k) { det = 0; break; }
        if (p != c) { std::swap(minor[p], minor[c]); det = -det; }
        det *= minor[c][c];
        for (int r = c + 1; r < k; ++r) {
          const Rational f = minor[r][c] / minor[c][c];
          for (int j = c; j < k; ++j) minor[r][j] -= f * minor[c][j];
        }
      }
      if (det <= 0) throw InvalidInput("Cartan matrix is not of finite type");
    }
  }

  for (int i = 0; i < n; ++i) {
    RootVec e(n, 0);
    e[i] = 1;
    rs.simple_roots.push_back(e);
  }

  std::set<RootVec> seen(rs.simple_roots.begin(), rs.simple_roots.end());
  std::deque<RootVec> queue(rs.simple_roots.begin(), rs.simple_roots.end());
  while (!queue.empty()) {
    RootVec beta = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      RootVec r = rs.reflect(beta, i);
      if (seen.insert(r).second) {
        if (seen.size() > kMaxRoots) throw InvalidInput("reflection closure did not terminate");
        queue.push_back(r);
      }
    }
  }
  for (const auto& r : seen) {
    if (is_positive(r)) {
      rs.positive_roots.push_back(r);
    } else if (!is_positive(negate(r))) {
      throw InvalidInput("reflection closure produced a root of mixed sign");
    }
  }
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end(), root_order);
  for (std::size_t k = 0; k < rs.positive_roots.size(); ++k) rs.positive_lookup[rs.positive_roots[k]] = k;

  for (const auto& beta : rs.positive_roots) {
    const Rational nb = rs.inner(beta, beta);
    RootVec co(n);
    for (int j = 0; j < n; ++j) {
      Rational c = Rational(beta[j]) * rs.simple_norms[j] / nb;
      if (c.get_den() != 1) throw Error("non-integral coroot");
      co[j] = static_cast<int>(c.get_num().get_si());
    }
    rs.coroots.push_back(co);
  }

  rs.rho.assign(n, Rational(0));
  for (const auto& beta : rs.positive_roots)
    for (int j = 0; j < n; ++j) rs.rho[j] += Rational(beta[j]) / 2;

  for (int c = 0; c < comps; ++c) {
    const RootVec* best = nullptr;
    for (const auto& beta : rs.positive_roots) {
      bool inside = true;
      for (int j = 0; j < n; ++j)
        if (beta[j] != 0 && rs.component[j] != c) inside = false;
      if (inside && (best == nullptr || height(beta) > height(*best))) best = &beta;
    }
    rs.highest_roots.push_back(*best);
  }
  return rs;
}

IntMatrix cartan_matrix_for(const std::string& name) {
  // Products "A1xA1".
  if (auto pos = name.find('x'); pos != std::string::npos) {
    IntMatrix left = cartan_matrix_for(name.substr(0, pos));
    IntMatrix right = cartan_matrix_for(name.substr(pos + 1));
    const std::size_t a = left.size(), b = right.size();
    IntMatrix m(a + b, std::vector<int>(a + b, 0));
    for (std::size_t i = 0; i < a; ++i)
      for (std::size_t j = 0; j < a; ++j) m[i][j] = left[i][j];
    for (std::size_t i = 0; i < b; ++i)
      for (std::size_t j = 0; j < b; ++j) m[a + i][a + j] = right[i][j];
    return m;
  }
  if (name.size() < 2) throw InvalidInput("unknown algebra '" + name + "'");
  const char type = name[0];
  int n = 0;
  try {
    n = std::stoi(name.substr(1));
  } catch (...) {
    throw InvalidInput("unknown algebra '" + name + "'");
  }
  auto chain = [](int r) {
    IntMatrix m(r, std::vector<int>(r, 0));
    for (int i = 0; i < r; ++i) {
      m[i][i] = 2;
      if (i + 1 < r) m[i][i + 1] = m[i + 1][i] = -1;
    }
    return m;
  };
  IntMatrix m;
  switch (type) {
    case 'A':
      if (n < 1 || n > kMaxRank) break;
      return chain(n);
    case 'B':
      if (n < 2 || n > kMaxRank) break;
      m = chain(n);
      m[n - 1][n - 2] = -2;  // alpha_n short
      return m;
    case 'C':
      if (n < 2 || n > kMaxRank) break;
      m = chain(n);
      m[n - 2][n - 1] = -2;  // alpha_n long
      return m;
    case 'D':
      if (n < 4 || n > kMaxRank) break;
      m = chain(n);
      m[n - 2][n - 1] = m[n - 1][n - 2] = 0;
      m[n - 3][n - 1] = m[n - 1][n - 3] = -1;
      return m;
    case 'E': {
      if (n < 6 || n > 8) break;
      m.assign(n, std::vector<int>(n, 0));
      for (int i = 0; i < n; ++i) m[i][i] = 2;
      auto link = [&](int i, int j) { m[i - 1][j - 1] = m[j - 1][i - 1] = -1; };
      link(1, 3);
      link(2, 4);
      link(3, 4);
      for (int i = 4; i < n; ++i) link(i, i + 1);
      return m;
    }
    case 'F':
      if (n != 4) break;
      m = chain(4);
      m[2][1] = -2;  // alpha_3 short
      return m;
    case 'G':
      if (n != 2) break;
      return {{2, -3}, {-1, 2}};
    default:
      break;
  }
  throw InvalidInput("unknown algebra '" + name + "'");
}

int dual_coxeter_number(const RootSystem& rs) {
  if (!rs.is_simple()) throw HypothesisViolation("dual Coxeter number requires a simple root system");
  const RootVec& theta = rs.highest_root();
  RationalVector t(theta.begin(), theta.end());
  // <rho, theta^vee> = 2 (rho, theta) / (theta, theta)
  Rational v = 1 + 2 * rs.inner(rs.rho, t) / rs.inner(theta, theta);
  if (v.get_den() != 1) throw Error("non-integral dual Coxeter number");
  return static_cast<int>(v.get_num().get_si());
}

Integer weyl_dimension(const RootSystem& rs, const std::vector<long>& dynkin_labels) {
  if (static_cast<int>(dynkin_labels.size()) != rs.rank()) {
    throw InvalidInput("weight has wrong number of Dynkin labels");
  }
  for (long x : dynkin_labels) {
    if (x < 0) throw InvalidInput("weight is not dominant");
  }
  Rational dim = 1;
  for (const auto& co : rs.coroots) {
    long num = 0, den = 0;
    for (int j = 0; j < rs.rank(); ++j) {
      num += co[j] * (dynkin_labels[j] + 1);
      den += co[j];
    }
    dim *= Rational(num) / den;
  }
  if (dim.get_den() != 1) throw Error("Weyl dimension is not integral");
  return dim.get_num();
}

std::string root_label(const RootVec& root) {
  const bool pos = is_positive(root);
  std::ostringstream out;
  out << (pos ? 'e' : 'f') << '(';
  for (std::size_t i = 0; i < root.size(); ++i) {
    if (i) out << ',';
    out << (pos ? root[i] : -root[i]);
  }
  out << ')';
  return out.str();
}

int StructureTable::index(const std::string& label) const {
  auto it = index_of.find(label);
  if (it == index_of.end()) throw InvalidInput("unknown basis label '" + label + "'");
  return it->second;
}

RationalVector StructureTable::unit(int i) const {
  RationalVector v(dim());
  v[i] = 1;
  return v;
}

RationalVector StructureTable::bracket(const RationalVector& x, const RationalVector& y) const {
  RationalVector r(dim());
  for (int i = 0; i < dim(); ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dim(); ++j) {
      if (y[j] == 0) continue;
      const Rational c = x[i] * y[j];
      for (const auto& [k, n] : brackets[i][j]) r[k] += c * n;
    }
  }
  return r;
}

Rational StructureTable::pair(const RationalVector& x, const RationalVector& y) const {
  Rational s = 0;
  for (int i = 0; i < dim(); ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dim(); ++j) {
      if (y[j] == 0 || form[i][j] == 0) continue;
      s += x[i] * y[j] * form[i][j];
    }
  }
  return s;
}

RationalMatrix StructureTable::ad(const RationalVector& x) const {
  RationalMatrix m(dim(), RationalVector(dim()));
  for (int i = 0; i < dim(); ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dim(); ++j)
      for (const auto& [k, n] : brackets[i][j]) m[k][j] += x[i] * n;
  }
  return m;
}

StructureTable chevalley_table(const RootSystem& rs) {
  const int r = rs.rank();
  const int m = static_cast<int>(rs.positive_roots.size());
  const auto& P = rs.positive_roots;

  // N for pairs of positive roots whose sum is a root.
  std::map<std::pair<int, int>, long> npos;

  auto index_signed = [&](const RootVec& v) -> std::pair<int, bool> {
    if (auto k = rs.positive_index(v)) return {static_cast<int>(*k), true};
    if (auto k = rs.positive_index(negate(v))) return {static_cast<int>(*k), false};
    return {-1, false};
  };

  std::function<long(const RootVec&, const RootVec&)> N = [&](const RootVec& a, const RootVec& b) -> long {
    const RootVec s = add(a, b);
    if (!rs.is_root(s)) return 0;
    auto [ia, pa] = index_signed(a);
    auto [ib, pb] = index_signed(b);
    if (pa && pb) {
      auto it = npos.find({ia, ib});
      if (it == npos.end()) throw Error("structure constant requested before it was fixed");
      return it->second;
    }
    if (!pa && !pb) return -N(negate(a), negate(b));
    if (!pa && pb) return -N(b, a);
    // a > 0, b < 0, c = -(a+b); N_ab/(c,c) = N_bc/(a,a) = N_ca/(b,b)
    const RootVec c = negate(s);
    Rational v;
    if (is_positive(s)) {
      v = rs.inner(c, c) / rs.inner(a, a) * N(b, c);
    } else {
      v = rs.inner(c, c) / rs.inner(b, b) * N(c, a);
    }
    if (v.get_den() != 1) throw Error("non-integral structure constant");
    return v.get_num().get_si();
  };

  auto string_p = [&](const RootVec& alpha, const RootVec& beta) {
    int p = 0;
    RootVec cur = sub(beta, alpha);
    while (rs.is_root(cur)) {
      ++p;
      cur = sub(cur, alpha);
    }
    return p;
  };

  for (int x = 0; x < m; ++x) {
    const RootVec& xi = P[x];
    if (height(xi) == 1) continue;
    int alpha = -1;
    std::vector<int> firsts;
    for (int a = 0; a < m; ++a) {
      if (rs.positive_index(sub(xi, P[a]))) firsts.push_back(a);
    }
    alpha = firsts.front();
    const RootVec& A = P[alpha];
    const RootVec B = sub(xi, A);
    const int beta = static_cast<int>(*rs.positive_index(B));
    const long nab = string_p(A, B) + 1;
    npos[{alpha, beta}] = nab;
    npos[{beta, alpha}] = -nab;
    const Rational xi_norm = rs.inner(xi, xi);
    for (int a : firsts) {
      const int b = static_cast<int>(*rs.positive_index(sub(xi, P[a])));
      if (npos.count({a, b})) continue;
      const RootVec& ra = P[a];
      const RootVec& rb = P[b];
      Rational t = 0;
      const RootVec bma = sub(rb, A);
      if (rs.is_root(bma)) t += Rational(N(rb, negate(A)) * N(ra, negate(B))) / rs.inner(bma, bma);
      const RootVec ama = sub(ra, A);
      if (rs.is_root(ama)) t += Rational(N(negate(A), ra) * N(rb, negate(B))) / rs.inner(ama, ama);
      Rational v = xi_norm / nab * t;
      if (v.get_den() != 1) throw Error("non-integral structure constant");
      const long nv = v.get_num().get_si();
      const long expect = string_p(ra, rb) + 1;
      if (nv != expect && nv != -expect) throw Error("structure constant has wrong magnitude");
      npos[{a, b}] = nv;
      npos[{b, a}] = -nv;
    }
  }

  StructureTable t;
  t.cartan_matrix = rs.cartan_matrix;
  t.roots = rs;
  const int n = r + 2 * m;
  auto root_of = [&](int idx) -> RootVec {
    if (idx < r) return RootVec(r, 0);
    if (idx < r + m) return P[idx - r];
    return negate(P[idx - r - m]);
  };
  auto idx_of_root = [&](const RootVec& v) -> int {
    auto [k, pos] = index_signed(v);
    if (k < 0) return -1;
    return pos ? r + k : r + m + k;
  };
  for (int i = 0; i < n; ++i) {
    StructureTable::BasisElement b;
    if (i < r) {
      b.label = "h" + std::to_string(i + 1);
      b.kind = StructureTable::Kind::cartan;
      b.cartan_index = i;
      b.root = RootVec(r, 0);
      b.factor = rs.component[i];
    } else {
      b.root = root_of(i);
      b.kind = StructureTable::Kind::root;
      b.label = root_label(b.root);
      for (int j = 0; j < r; ++j)
        if (b.root[j] != 0) b.factor = rs.component[j];
    }
    t.basis.push_back(b);
  }
  t.num_factors = rs.num_components();
  t.brackets.assign(n, std::vector<SparseIntVec>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const bool ci = i < r, cj = j < r;
      if (ci && cj) continue;
      if (ci) {
        const RootVec bj = root_of(j);
        const int c = rs.pairing(bj, i);
        if (c) t.brackets[i][j] = {{j, c}};
        continue;
      }
      if (cj) {
        const RootVec bi = root_of(i);
        const int c = rs.pairing(bi, j);
        if (c) t.brackets[i][j] = {{i, -c}};
        continue;
      }
      const RootVec a = root_of(i), b = root_of(j);
      const RootVec s = add(a, b);
      if (std::all_of(s.begin(), s.end(), [](int v) { return v == 0; })) {
        // [e_a, e_-a] = h_a
        const bool pos = is_positive(a);
        const RootVec& co = rs.coroots[*rs.positive_index(pos ? a : negate(a))];
        SparseIntVec v;
        for (int k = 0; k < r; ++k)
          if (co[k]) v.push_back({k, pos ? co[k] : -co[k]});
        t.brackets[i][j] = v;
        continue;
      }
      const long c = N(a, b);
      if (c) t.brackets[i][j] = {{idx_of_root(s), c}};
    }
  }

  t.form.assign(n, RationalVector(n));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      // (alpha_i^vee, alpha_j^vee) = 4 (alpha_i, alpha_j) / (|alpha_i|^2 |alpha_j|^2)
      const Rational aij = Rational(rs.cartan_matrix[i][j]) * rs.simple_norms[i] / 2;
      t.form[i][j] = 4 * aij / (rs.simple_norms[i] * rs.simple_norms[j]);
    }
  for (int k = 0; k < m; ++k) {
    const Rational v = Rational(2) / rs.inner(P[k], P[k]);
    t.form[r + k][r + m + k] = v;
    t.form[r + m + k][r + k] = v;
  }
  for (int i = 0; i < r; ++i) {
    t.simple_h.push_back(i);
    t.simple_e.push_back(r + static_cast<int>(*rs.positive_index(rs.simple_roots[i])));
    t.simple_f.push_back(r + m + static_cast<int>(*rs.positive_index(rs.simple_roots[i])));
  }
  for (int i = 0; i < n; ++i) t.index_of[t.basis[i].label] = i;
  return t;
}

StructureTable direct_sum(const StructureTable& a, const StructureTable& b) {
  StructureTable t;
  const int na = a.dim(), nb = b.dim();
  const int ra = a.rank(), rb = b.rank();
  IntMatrix cm(ra + rb, std::vector<int>(ra + rb, 0));
  for (int i = 0; i < ra; ++i)
    for (int j = 0; j < ra; ++j) cm[i][j] = a.cartan_matrix[i][j];
  for (int i = 0; i < rb; ++i)
    for (int j = 0; j < rb; ++j) cm[ra + i][ra + j] = b.cartan_matrix[i][j];
  t.cartan_matrix = cm;
  t.roots = build_root_system(cm);
  t.num_factors = a.num_factors + b.num_factors;
  for (int i = 0; i < na; ++i) {
    auto e = a.basis[i];
    e.label = "s1." + e.label;
    e.root.resize(ra + rb, 0);
    t.basis.push_back(e);
  }
  for (int i = 0; i < nb; ++i) {
    auto e = b.basis[i];
    e.label = "s2." + e.label;
    RootVec root(ra, 0);
    root.insert(root.end(), e.root.begin(), e.root.end());
    e.root = root;
    if (e.cartan_index >= 0) e.cartan_index += ra;
    e.factor += a.num_factors;
    t.basis.push_back(e);
  }
  const int n = na + nb;
  t.brackets.assign(n, std::vector<SparseIntVec>(n));
  t.form.assign(n, RationalVector(n));
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j) {
      t.brackets[i][j] = a.brackets[i][j];
      t.form[i][j] = a.form[i][j];
    }
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nb; ++j) {
      for (const auto& [k, c] : b.brackets[i][j]) t.brackets[na + i][na + j].push_back({na + k, c});
      t.form[na + i][na + j] = b.form[i][j];
    }
  // Cartan elements of the sum: a's then b's (they are the first ra of a and of b).
  for (int i = 0; i < ra; ++i) {
    t.simple_h.push_back(a.simple_h[i]);
    t.simple_e.push_back(a.simple_e[i]);
    t.simple_f.push_back(a.simple_f[i]);
  }
  for (int i = 0; i < rb; ++i) {
    t.simple_h.push_back(na + b.simple_h[i]);
    t.simple_e.push_back(na + b.simple_e[i]);
    t.simple_f.push_back(na + b.simple_f[i]);
  }
  for (int i = 0; i < n; ++i) t.index_of[t.basis[i].label] = i;
  return t;
}

}  // namespace sympair
