#include "sympair/invariant_algebra.hpp"

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

namespace sympair {

namespace {

struct Term {
  int u = 0, v = 0;
  Rational c;
};

// C = ad(x)|_p * D, so that c_3(x) = sum C[a][l] e_a^(1) e_l^(2).
RationalMatrix coefficient_matrix(const SymmetricPair& sp, const RationalVector& x_g) {
  const int n = sp.dim_p();
  const RationalMatrix m = sp.ad_on_p(x_g);
  RationalMatrix c(n, RationalVector(n));
  for (int a = 0; a < n; ++a)
    for (int i = 0; i < n; ++i) {
      if (m[a][i] == 0) continue;
      for (int l = 0; l < n; ++l)
        if (sp.p_dual_coords[i][l] != 0) c[a][l] += m[a][i] * sp.p_dual_coords[i][l];
    }
  return c;
}

std::vector<Term> terms_of(const RationalMatrix& c) {
  std::vector<Term> out;
  for (std::size_t a = 0; a < c.size(); ++a)
    for (std::size_t l = 0; l < c[a].size(); ++l)
      if (c[a][l] != 0) out.push_back({static_cast<int>(a), static_cast<int>(l), c[a][l]});
  return out;
}

Weight add(const Weight& a, const Weight& b) {
  Weight w(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) w[i] = a[i] + b[i];
  return w;
}

std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

RationalSparse to_sorted(const std::map<std::uint32_t, Rational>& acc) {
  RationalSparse out;
  out.reserve(acc.size());
  for (const auto& [c, x] : acc)
    if (x != 0) out.emplace_back(c, x);
  return out;
}

// Runs fn(0..count-1) on up to `threads` workers; rethrows the first failure.
void run_indexed(std::size_t count, int threads, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::min<std::size_t>(std::max(threads, 1), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex guard;
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(guard);
          if (!failure) failure = std::current_exception();
          next = count;
        }
      }
    });
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

ExteriorElement compute_c3(const SymmetricPair& sp, const RationalVector& x) {
  ExteriorElement out;
  for (const auto& t : terms_of(coefficient_matrix(sp, sp.k_element(x)))) out.add(Monomial{bit(t.u), bit(t.v)}, t.c);
  return out;
}

std::pair<ExteriorElement, ExteriorElement> compute_c1_c2(const SymmetricPair& sp, const RationalVector& x) {
  ExteriorElement c1, c2;
  for (const auto& t : terms_of(coefficient_matrix(sp, sp.k_element(x)))) {
    if (t.u == t.v) continue;
    const int s = mask_sign(bit(t.u), bit(t.v));
    const std::uint64_t m = bit(t.u) | bit(t.v);
    c1.add(Monomial{m, 0}, t.c * s);
    c2.add(Monomial{0, m}, t.c * s);
  }
  return {c1, c2};
}

ExteriorElement act(const SymmetricPair& sp, const RationalVector& x, const ExteriorElement& v) {
  return derive(v, sp.ad_on_p(sp.k_element(x)));
}

GeneratorSet build_generators(const SymmetricPair& sp) {
  GeneratorSet g;
  g.dim_p = sp.dim_p();
  for (int i = 0; i < sp.dim_k(); ++i) {
    RationalVector x(sp.dim_k());
    x[i] = 1;
    g.c3.push_back(compute_c3(sp, x));
    auto [c1, c2] = compute_c1_c2(sp, x);
    g.c1.push_back(std::move(c1));
    g.c2.push_back(std::move(c2));
  }
  g.C1 = span_reduce(g.c1, {2, 0}, g.dim_p);
  g.C2 = span_reduce(g.c2, {0, 2}, g.dim_p);
  g.C3 = span_reduce(g.c3, {1, 1}, g.dim_p);
  for (int i = 0; i < g.dim_p; ++i)
    for (int l = 0; l < g.dim_p; ++l)
      if (sp.p_dual_coords[i][l] != 0) g.S.add(Monomial{bit(i), bit(l)}, sp.p_dual_coords[i][l]);
  return g;
}

GradedSubspace ideal_component(const GeneratorSet& gens, std::pair<int, int> bidegree, bool with_c3) {
  const auto [p, q] = bidegree;
  const int n = gens.dim_p;
  GradedSubspace out;
  out.bidegree = bidegree;
  out.dim_p = n;
  out.span = Echelon(component_basis(n, p, q).size());
  auto spread = [&](const std::vector<ExteriorElement>& images, int dp, int dq) {
    if (p < dp || q < dq) return;
    for (const auto& m : component_basis(n, p - dp, q - dq)) {
      const ExteriorElement mono(m);
      for (const auto& c : images) {
        const ExteriorElement prod = wedge(mono, c);
        if (!prod.is_zero()) out.span.insert(coordinates(prod, n));
      }
    }
  };
  spread(gens.c1, 2, 0);
  spread(gens.c2, 0, 2);
  if (with_c3) spread(gens.c3, 1, 1);
  return out;
}

// ---------------------------------------------------------------------------

struct InvariantEngine::Impl {
  struct QLevel {
    bool computed = false;
    std::vector<std::uint64_t> masks;  // standard monomials
    std::vector<Weight> weights;
    std::vector<RationalSparse> nf;    // normal form of every degree-n mask, by mask_rank
    std::vector<std::vector<RationalSparse>> act;  // [generator][standard monomial]
    std::size_t size() const { return masks.size(); }
  };
  struct Block {
    std::vector<std::uint32_t> globals;
    Echelon K;
  };
  struct Component {
    ComponentDims dims;
    std::map<Weight, Block> blocks;
    std::vector<std::uint32_t> local;
    std::vector<Weight> weight_of;
    std::vector<RationalSparse> inv_a, inv_b;
  };

  const SymmetricPair& sp;
  EngineOptions opt;
  int n = 0;
  int maxb = 0;
  Weight zero;
  std::vector<std::vector<std::pair<std::uint64_t, Rational>>> c1_masks;
  std::vector<std::vector<Term>> c3_terms;
  std::vector<Term> s_terms;
  std::vector<int> gen_k;
  std::vector<Weight> gen_w;
  std::vector<RationalMatrix> gen_ad;
  std::vector<QLevel> Q;
  std::vector<Component> comps;
  std::vector<RationalSparse> s_powers;  // B^{(m,m)} coordinates
  bool s_truncated = false;
  std::optional<int> s_nilpotency;

  Impl(const SymmetricPair& s, const GeneratorSet& gens, EngineOptions o) : sp(s), opt(o) {
    n = sp.dim_p();
    // k = h_sigma + root spaces is reductive, so invariance means weight zero
    // plus annihilation by the simple root vectors of [k, k].
    maxb = opt.max_bidegree < 0 ? n : std::min(opt.max_bidegree, n);
    zero.assign(sp.cartan_rank(), 0);
    for (const auto& c : gens.c1) {
      std::vector<std::pair<std::uint64_t, Rational>> ms;
      for (const auto& [m, x] : c.terms()) ms.emplace_back(m.mask1, x);
      c1_masks.push_back(std::move(ms));
    }
    for (int i = 0; i < sp.dim_k(); ++i) c3_terms.push_back(terms_of(coefficient_matrix(sp, sp.k_basis[i])));
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l)
        if (sp.p_dual_coords[i][l] != 0) s_terms.push_back({i, l, sp.p_dual_coords[i][l]});
    for (int j : sp.k_simple_e) gen_k.push_back(j);
    for (int j : sp.k_simple_f) gen_k.push_back(j);
    for (int j : gen_k) {
      gen_w.push_back(sp.k_weights[j]);
      gen_ad.push_back(sp.ad_on_p(sp.k_basis[j]));
    }

    Q.resize(n + 1);
    run_indexed(Q.size(), opt.threads, [&](std::size_t d) { build_q(static_cast<int>(d)); });
    comps.resize(static_cast<std::size_t>(maxb + 1) * (maxb + 1));
    run_indexed(comps.size(), opt.threads, [&](std::size_t i) { build_component(static_cast<int>(i) / (maxb + 1), static_cast<int>(i) % (maxb + 1)); });
    build_s_powers();
  }

  Component& comp(int p, int q) { return comps[static_cast<std::size_t>(p) * (maxb + 1) + q]; }
  const Component& comp(int p, int q) const { return comps[static_cast<std::size_t>(p) * (maxb + 1) + q]; }

  void build_q(int d) {
    QLevel& L = Q[d];
    if (binomial(n, d) > opt.ceiling) return;
    const auto all = masks_of_degree(n, d);
    Echelon ideal(all.size());
    if (d >= 2) {
      for (std::uint64_t m : masks_of_degree(n, d - 2)) {
        for (const auto& c : c1_masks) {
          std::map<std::uint32_t, Rational> acc;
          for (const auto& [t, x] : c) {
            if (m & t) continue;
            acc[static_cast<std::uint32_t>(mask_rank(m | t))] += x * mask_sign(m, t);
          }
          const RationalSparse v = to_sorted(acc);
          if (!v.empty()) ideal.insert(v);
        }
      }
    }
    const auto free = ideal.free_columns();
    std::vector<std::int64_t> pos(all.size(), -1);
    for (std::size_t i = 0; i < free.size(); ++i) {
      pos[free[i]] = static_cast<std::int64_t>(i);
      L.masks.push_back(all[free[i]]);
      Weight w = zero;
      for (int b = 0; b < n; ++b)
        if (all[free[i]] >> b & 1) w = add(w, sp.p_weights[b]);
      L.weights.push_back(std::move(w));
    }
    L.nf.resize(all.size());
    for (std::size_t r = 0; r < all.size(); ++r) {
      if (pos[r] >= 0) {
        L.nf[r] = {{static_cast<std::uint32_t>(pos[r]), Rational(1)}};
        continue;
      }
      for (const auto& [c, x] : ideal.normal_form({{static_cast<std::uint32_t>(r), Rational(1)}}))
        L.nf[r].emplace_back(static_cast<std::uint32_t>(pos[c]), x);
    }
    L.act.resize(gen_ad.size());
    for (std::size_t g = 0; g < gen_ad.size(); ++g) {
      for (std::uint64_t m : L.masks) {
        std::map<std::uint32_t, Rational> acc;
        for (const auto& [m2, x] : derive_mask(m, gen_ad[g]))
          for (const auto& [c, y] : L.nf[mask_rank(m2)]) acc[c] += x * y;
        L.act[g].push_back(to_sorted(acc));
      }
    }
    L.computed = true;
  }

  // (a^(1) b^(2)) ^ sum c e_u^(1) e_v^(2), reduced to B^{(p+1,q+1)}.
  void multiply_into(int p, int q, std::uint32_t a, std::uint32_t b, const Rational& coeff, const std::vector<Term>& terms,
                     std::map<std::uint32_t, Rational>& acc) const {
    const QLevel& P = Q[p + 1];
    const QLevel& R = Q[q + 1];
    const Monomial x{Q[p].masks[a], Q[q].masks[b]};
    const std::uint32_t width = static_cast<std::uint32_t>(R.size());
    for (const auto& t : terms) {
      if ((x.mask1 >> t.u & 1) || (x.mask2 >> t.v & 1)) continue;
      const int s = wedge_sign(x, Monomial{bit(t.u), bit(t.v)});
      const Rational f = coeff * t.c * s;
      const auto& n1 = P.nf[mask_rank(x.mask1 | bit(t.u))];
      const auto& n2 = R.nf[mask_rank(x.mask2 | bit(t.v))];
      for (const auto& [i, y] : n1)
        for (const auto& [j, z] : n2) acc[i * width + j] += f * y * z;
    }
  }

  RationalSparse gen_action(int p, int q, std::size_t g, std::uint32_t global) const {
    const std::uint32_t width = static_cast<std::uint32_t>(Q[q].size());
    const std::uint32_t a = global / width, b = global % width;
    std::map<std::uint32_t, Rational> acc;
    for (const auto& [a2, x] : Q[p].act[g][a]) acc[a2 * width + b] += x;
    for (const auto& [b2, y] : Q[q].act[g][b]) acc[a * width + b2] += y;
    return to_sorted(acc);
  }

  RationalSparse to_local(const Component& c, const RationalSparse& v) const {
    RationalSparse out;
    out.reserve(v.size());
    for (const auto& [g, x] : v) out.emplace_back(c.local[g], x);
    return out;
  }

  void build_component(int p, int q) {
    Component& c = comp(p, q);
    c.dims.p = p;
    c.dims.q = q;
    const Integer r = binomial(n, p) * binomial(n, q);
    c.dims.R = r.fits_ulong_p() ? r.get_ui() : 0;
    if (r > opt.ceiling || !Q[p].computed || !Q[q].computed) return;
    const bool has_k = p >= 1 && q >= 1;
    if (has_k && (!Q[p - 1].computed || !Q[q - 1].computed)) return;

    const std::uint32_t dp = static_cast<std::uint32_t>(Q[p].size()), dq = static_cast<std::uint32_t>(Q[q].size());
    c.local.resize(static_cast<std::size_t>(dp) * dq);
    c.weight_of.resize(c.local.size());
    for (std::uint32_t a = 0; a < dp; ++a)
      for (std::uint32_t b = 0; b < dq; ++b) {
        const std::uint32_t g = a * dq + b;
        Weight w = add(Q[p].weights[a], Q[q].weights[b]);
        Block& blk = c.blocks[w];
        c.local[g] = static_cast<std::uint32_t>(blk.globals.size());
        blk.globals.push_back(g);
        c.weight_of[g] = std::move(w);
      }
    for (auto& [w, blk] : c.blocks) blk.K = Echelon(blk.globals.size());

    if (has_k) {
      const std::uint32_t ep = static_cast<std::uint32_t>(Q[p - 1].size()), eq = static_cast<std::uint32_t>(Q[q - 1].size());
      for (std::uint32_t a = 0; a < ep; ++a)
        for (std::uint32_t b = 0; b < eq; ++b)
          for (std::size_t x = 0; x < c3_terms.size(); ++x) {
            std::map<std::uint32_t, Rational> acc;
            multiply_into(p - 1, q - 1, a, b, Rational(1), c3_terms[x], acc);
            const RationalSparse v = to_sorted(acc);
            if (v.empty()) continue;
            const Weight w = add(add(Q[p - 1].weights[a], Q[q - 1].weights[b]), sp.k_weights[x]);
            auto it = c.blocks.find(w);
            if (it == c.blocks.end()) throw Error("internal: product of weight vectors left its weight space");
            it->second.K.insert(to_local(c, v));
          }
    }

    std::uint64_t a_dim = 0;
    for (const auto& [w, blk] : c.blocks) a_dim += blk.globals.size() - blk.K.rank();
    c.dims.B = static_cast<std::uint64_t>(dp) * dq;
    c.dims.A = a_dim;
    c.dims.J = c.dims.R - a_dim;
    c.inv_a = invariants(p, q, c, true);
    c.inv_b = invariants(p, q, c, false);
    c.dims.A_k = c.inv_a.size();
    c.dims.B_k = c.inv_b.size();
    c.dims.computed = true;
  }

  std::vector<RationalSparse> invariants(int p, int q, const Component& c, bool in_a) const {
    auto it0 = c.blocks.find(zero);
    if (it0 == c.blocks.end()) return {};
    const Block& b0 = it0->second;
    std::vector<std::uint32_t> basis;
    if (in_a) {
      basis = b0.K.free_columns();
    } else {
      for (std::uint32_t i = 0; i < b0.globals.size(); ++i) basis.push_back(i);
    }
    std::vector<RationalSparse> columns;
    std::size_t rows = 0;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      RationalSparse col;
      std::size_t offset = 0;
      for (std::size_t g = 0; g < gen_w.size(); ++g) {
        const RationalSparse v = gen_action(p, q, g, b0.globals[basis[j]]);
        auto it = c.blocks.find(gen_w[g]);
        if (it == c.blocks.end()) {
          if (!v.empty()) throw Error("internal: generator image outside any weight space");
          continue;
        }
        RationalSparse loc = to_local(c, v);
        if (in_a) loc = it->second.K.normal_form(loc);
        for (const auto& [i, x] : loc) col.emplace_back(static_cast<std::uint32_t>(offset + i), x);
        offset += it->second.globals.size();
      }
      rows = offset;
      columns.push_back(std::move(col));
    }
    std::vector<RationalSparse> out;
    for (const auto& k : kernel_from_columns(columns, rows)) {
      RationalSparse v;
      for (const auto& [j, x] : k) v.emplace_back(b0.globals[basis[j]], x);
      out.push_back(std::move(v));
    }
    return out;
  }

  void build_s_powers() {
    s_powers.push_back({{0, Rational(1)}});
    for (int m = 1; m <= maxb; ++m) {
      if (s_powers.back().empty()) {
        s_powers.emplace_back();
        continue;
      }
      const Component& c = comp(m, m);
      if (!c.dims.computed) {
        s_truncated = true;
        break;
      }
      const std::uint32_t width = static_cast<std::uint32_t>(Q[m - 1].size());
      std::map<std::uint32_t, Rational> acc;
      for (const auto& [g, x] : s_powers.back()) multiply_into(m - 1, m - 1, g / width, g % width, x, s_terms, acc);
      const RationalSparse v = to_sorted(acc);
      RationalSparse out;
      if (!v.empty()) {
        const Block& b0 = c.blocks.at(zero);
        for (const auto& [i, x] : b0.K.normal_form(to_local(c, v))) out.emplace_back(b0.globals[i], x);
      }
      s_powers.push_back(std::move(out));
    }
    for (std::size_t m = 0; m < s_powers.size(); ++m)
      if (s_powers[m].empty()) {
        s_nilpotency = static_cast<int>(m);
        break;
      }
  }
};

InvariantEngine::InvariantEngine(const SymmetricPair& sp, const GeneratorSet& gens, EngineOptions options)
    : impl_(new Impl(sp, gens, options)) {}

InvariantEngine::~InvariantEngine() { delete impl_; }

int InvariantEngine::max_bidegree() const { return impl_->maxb; }

int InvariantEngine::dim_p() const { return impl_->n; }

bool InvariantEngine::computed(int p, int q) const {
  if (p < 0 || q < 0 || p > impl_->maxb || q > impl_->maxb) return false;
  return impl_->comp(p, q).dims.computed;
}

bool InvariantEngine::truncated() const {
  for (const auto& c : impl_->comps)
    if (!c.dims.computed) return true;
  for (const auto& L : impl_->Q)
    if (!L.computed) return true;
  return false;
}

const ComponentDims& InvariantEngine::dims(int p, int q) const {
  if (p < 0 || q < 0 || p > impl_->maxb || q > impl_->maxb) throw InvalidInput("bidegree outside the computed range");
  return impl_->comp(p, q).dims;
}

std::optional<std::uint64_t> InvariantEngine::quotient_dim(int n) const {
  if (n < 0 || n >= static_cast<int>(impl_->Q.size())) return std::uint64_t{0};
  if (!impl_->Q[n].computed) return std::nullopt;
  return impl_->Q[n].size();
}

const std::vector<RationalSparse>& InvariantEngine::invariant_basis(int p, int q, bool in_a) const {
  const auto& c = impl_->comp(p, q);
  if (!computed(p, q)) throw DeskScaleExceeded("component (" + std::to_string(p) + "," + std::to_string(q) + ") exceeds the ceiling");
  return in_a ? c.inv_a : c.inv_b;
}

SPowerProfile InvariantEngine::s_power_profile(int max_m) const {
  SPowerProfile out;
  for (int m = 0; m <= max_m; ++m) {
    if (m < static_cast<int>(impl_->s_powers.size())) {
      out.ranks.push_back(impl_->s_powers[m].empty() ? 0 : 1);
    } else if (impl_->s_nilpotency) {
      out.ranks.push_back(0);
    } else {
      out.truncated = true;
      break;
    }
  }
  for (std::size_t m = 0; m < out.ranks.size(); ++m)
    if (out.ranks[m] == 0) {
      out.nilpotency_order = static_cast<int>(m);
      break;
    }
  return out;
}

RationalSparse InvariantEngine::s_power(int m) const {
  if (m < static_cast<int>(impl_->s_powers.size())) return impl_->s_powers[m];
  if (impl_->s_nilpotency) return {};
  throw DeskScaleExceeded("S^" + std::to_string(m) + " lies beyond the computed range");
}

bool InvariantEngine::is_invariant(int p, int q, const RationalSparse& v, bool in_a) const {
  const auto& I = *impl_;
  if (!computed(p, q)) throw DeskScaleExceeded("component outside the computed range");
  const auto& c = I.comp(p, q);
  auto in_quotient_zero = [&](const RationalSparse& w) {
    std::map<Weight, RationalSparse> parts;
    for (const auto& [g, x] : w) parts[c.weight_of[g]].emplace_back(c.local[g], x);
    for (const auto& [wt, part] : parts) {
      if (!in_a) return false;
      if (!c.blocks.at(wt).K.contains(part)) return false;
    }
    return true;
  };
  RationalSparse nonzero_weight;
  for (const auto& [g, x] : v)
    if (c.weight_of[g] != I.zero) nonzero_weight.emplace_back(g, x);
  if (!in_quotient_zero(nonzero_weight)) return false;
  for (std::size_t gi = 0; gi < I.gen_w.size(); ++gi) {
    std::map<std::uint32_t, Rational> acc;
    for (const auto& [g, x] : v)
      for (const auto& [h, y] : I.gen_action(p, q, gi, g)) acc[h] += x * y;
    if (!in_quotient_zero(to_sorted(acc))) return false;
  }
  return true;
}

ExteriorElement InvariantEngine::representative(int p, int q, const RationalSparse& v) const {
  const auto& I = *impl_;
  const std::uint32_t width = static_cast<std::uint32_t>(I.Q.at(q).size());
  ExteriorElement out;
  for (const auto& [g, x] : v) out.add(Monomial{I.Q.at(p).masks.at(g / width), I.Q.at(q).masks.at(g % width)}, x);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::string bideg(int p, int q) { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

std::string vector_text(const RationalSparse& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].first << ":" << v[i].second.get_str();
  os << "]";
  return os.str();
}

}  // namespace

GenerationVerdict verify_generated_by_S(const InvariantEngine& engine, std::optional<int> degree_bound) {
  GenerationVerdict out;
  const int maxb = engine.max_bidegree();
  const auto profile = engine.s_power_profile(maxb);
  int bound;
  if (degree_bound) {
    bound = *degree_bound;
  } else if (profile.nilpotency_order) {
    bound = *profile.nilpotency_order + 1;
  } else {
    bound = maxb;
    out.complete = false;
  }
  if (bound > maxb) {
    // nothing lives above dim p
    if (maxb < engine.dim_p()) out.complete = false;
    bound = maxb;
  }
  out.degree_bound = bound;
  for (int p = 0; p <= bound; ++p)
    for (int q = 0; q <= bound; ++q) {
      if (!engine.computed(p, q)) {
        out.complete = false;
        continue;
      }
      const auto& basis = engine.invariant_basis(p, q, true);
      if (p != q) {
        if (!basis.empty()) {
          out.witness = "off-diagonal invariant at " + bideg(p, q) + ": " + vector_text(basis.front());
          return out;
        }
        continue;
      }
      if (p >= static_cast<int>(profile.ranks.size())) {
        out.complete = false;
        continue;
      }
      const RationalSparse sp = engine.s_power(p);
      const std::size_t expected = sp.empty() ? 0 : 1;
      if (basis.size() != expected) {
        // pick a basis vector independent of S^p
        std::string vec;
        for (const auto& b : basis) {
          Echelon e(engine.dims(p, p).B);
          if (!sp.empty()) e.insert(sp);
          if (e.insert(b)) {
            vec = vector_text(b);
            break;
          }
        }
        out.witness = "dim (A^k)" + bideg(p, p) + " = " + std::to_string(basis.size()) + " but rank S^" + std::to_string(p) +
                      " = " + std::to_string(expected) + (vec.empty() ? "" : "; invariant outside the S-powers: " + vec);
        return out;
      }
    }
  out.pass = true;
  return out;
}

HanReport han_check(const SymmetricPair& sp, const InvariantEngine& engine, const std::vector<AbelianSubspace>& xi) {
  HanReport out;
  std::map<int, std::uint64_t> predicted;
  std::set<Weight> highest;
  for (const auto& s : xi) {
    Weight w(sp.cartan_rank(), 0);
    for (const auto& mu : s.weight_support) w = add(w, mu);
    highest.insert(w);
    const Integer d = weyl_dimension(sp.k_roots, sp.dynkin_labels(w));
    predicted[static_cast<int>(s.dimension())] += d.get_ui();
  }
  out.multiplicity_free = highest.size() == xi.size();
  bool ok = out.multiplicity_free;
  std::ostringstream detail;
  for (int d = 0; d <= sp.dim_p(); ++d) {
    HanRow row;
    row.degree = d;
    row.predicted = predicted.count(d) ? predicted[d] : 0;
    const auto q = engine.quotient_dim(d);
    if (!q) {
      out.complete = false;
      continue;
    }
    row.quotient_dim = *q;
    if (row.quotient_dim != row.predicted) {
      ok = false;
      detail << "degree " << d << ": " << row.quotient_dim << " != " << row.predicted << "; ";
    }
    out.rows.push_back(row);
  }
  if (!out.multiplicity_free) detail << "repeated highest weight among " << xi.size() << " subspaces; ";
  out.pass = ok;
  if (!ok) {
    out.detail = detail.str();
  } else {
    out.detail = std::string(out.complete ? "quotient dimensions match in every degree" : "quotient dimensions match below the ceiling") +
                 "; " + std::to_string(xi.size()) + " distinct highest weights";
  }
  return out;
}

BidiagonalReport b_invariants_bidiagonal_check(const InvariantEngine& engine, const std::vector<int>& minuscule_lengths) {
  BidiagonalReport out;
  std::map<int, std::uint64_t> count;
  for (int l : minuscule_lengths) ++count[l];
  const int maxb = engine.max_bidegree();
  for (const auto& [l, c] : count)
    if (l > maxb) out.complete = false;
  std::ostringstream detail;
  bool ok = true;
  for (int p = 0; p <= maxb; ++p)
    for (int q = 0; q <= maxb; ++q) {
      if (!engine.computed(p, q)) {
        out.complete = false;
        continue;
      }
      const std::uint64_t got = engine.dims(p, q).B_k;
      const std::uint64_t want = p == q && count.count(p) ? count[p] : 0;
      if (got != want) {
        ok = false;
        detail << "dim (B^k)" << bideg(p, q) << " = " << got << ", expected " << want << "; ";
      }
    }
  out.pass = ok;
  out.detail = ok ? "diagonal invariant dimensions match the minuscule length counts" : detail.str();
  return out;
}

}  // namespace sympair
