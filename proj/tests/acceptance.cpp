// Acceptance suite: one line per criterion, nonzero exit if any fails.
#include "sympair/affine_weyl.hpp"
#include "sympair/invariant_algebra.hpp"
#include "sympair/pipeline.hpp"
#include "support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace sympair;
using namespace sympair::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) note << "failed: ";
      else note << "; ";
      note << what;
      pass = false;
    }
  }
};

SymmetricPair pair_of(const std::string& name) { return build_pair(preset_descriptor(name)); }

std::vector<std::string> hypothesis_presets() {
  std::vector<std::string> out;
  for (const auto& n : preset_names()) {
    const auto sp = pair_of(n);
    if (irreducibility_report(sp) == 1) out.push_back(n);
  }
  return out;
}

struct Run {
  SymmetricPair sp;
  GeneratorSet gens;
  InvariantEngine engine;
  explicit Run(const std::string& name) : sp(pair_of(name)), gens(build_generators(sp)), engine(sp, gens) {}
};

void criterion_1(Outcome& o) {
  const Run r("diagonal:A1");
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= 3; ++q) {
      const std::uint64_t want = p == q && p <= 1 ? 1 : 0;
      o.require(r.engine.dims(p, q).A_k == want, "dim (A^k)(" + std::to_string(p) + "," + std::to_string(q) + ")");
    }
  const auto prof = r.engine.s_power_profile(3);
  o.require(prof.ranks[1] == 1 && prof.ranks[2] == 0, "S != 0, S^2 = 0");
  o.require(verify_generated_by_S(r.engine).pass, "generated by S");
  o.require(conjectured_exponent(r.sp).value == 2, "h = 2");
  o.note << "A^k diagonal (1,1,0,0), S^2 = 0";
}

void criterion_2(Outcome& o) {
  const Run r("diagonal:A2");
  const auto prof = r.engine.s_power_profile(8);
  o.require(prof.ranks[2] == 1 && prof.ranks[3] == 0, "S^2 != 0, S^3 = 0");
  o.require(verify_generated_by_S(r.engine).pass, "generated by S");
  o.require(conjectured_exponent(r.sp).value == 3 && prof.nilpotency_order == 3, "h = 3");
  o.note << "nilpotency order " << prof.nilpotency_order.value_or(-1) << " = h";
}

void criterion_3(Outcome& o) {
  const Run r("split:A2");
  const auto v = verify_generated_by_S(r.engine);
  o.require(v.pass && v.complete, "generated by S: " + v.witness);
  for (int p = 0; p <= r.sp.dim_p(); ++p)
    for (int q = 0; q <= r.sp.dim_p(); ++q)
      if (p != q) o.require(r.engine.dims(p, q).A_k == 0, "off-diagonal invariant");
  const auto pred = conjectured_exponent(r.sp);
  const auto nil = r.engine.s_power_profile(5).nilpotency_order;
  o.note << "measured nilpotency order " << nil.value_or(-1) << ", h_g - h_k = " << pred.naive.value_or(-1)
         << " (advisory: " << pred.note << ")";
}

void criterion_4(Outcome& o) {
  int n = 0;
  for (const auto& name : hypothesis_presets()) {
    const Run r(name);
    const auto ars = build_affine(r.sp);
    std::vector<int> lengths;
    for (const auto& w : enumerate_minuscule(ars)) lengths.push_back(w.length());
    const auto b = b_invariants_bidiagonal_check(r.engine, lengths);
    o.require(b.pass && b.complete, name + ": " + b.detail);
    ++n;
  }
  o.note << n << " presets";
}

void criterion_5(Outcome& o) {
  int n = 0;
  for (const auto& name : hypothesis_presets()) {
    const auto sp = pair_of(name);
    const auto ars = build_affine(sp);
    const auto m = enumerate_minuscule(ars);
    const auto oracle = enumerate_abelian_oracle(sp);
    const auto b = check_bijection(ars, sp, m, oracle);
    o.require(b.pass, name + ": " + b.detail);
    o.require(oracle.zero_weight_certified, name + ": zero-weight obstruction");
    if (sp.is_diagonal()) o.require(oracle.subspaces.size() == (std::size_t{1} << sp.cartan_rank()), name + ": |Xi| = 2^rank");
    ++n;
  }
  o.note << n << " presets";
}

void criterion_6(Outcome& o) {
  for (const auto& name : hypothesis_presets()) {
    const auto ars = build_affine(pair_of(name));
    const auto m = enumerate_minuscule(ars);
    const auto a = order_ideal_check(ars, m);
    const auto b = minimal_coset_check(ars, m);
    o.require(a.pass, name + ": " + a.detail);
    o.require(b.pass, name + ": " + b.detail);
  }
  o.note << "descents and deletions, projected to minimal coset representatives";
}

void criterion_7(Outcome& o) {
  std::size_t triples = 0;
  for (const auto& name : hypothesis_presets()) {
    const auto ars = build_affine(pair_of(name));
    const auto m = enumerate_minuscule(ars);
    const auto a = rho_length_check(ars, m);
    const auto b = degree_defect_check(ars, m);
    o.require(a.pass, name + ": " + a.detail);
    o.require(b.pass, name + ": " + b.detail);
    for (const auto& u : m)
      for (const auto& v : m)
        for (const auto& w : m)
          if (w.length() == u.length() + v.length()) ++triples;
  }
  o.note << triples << " length-additive triples";
}

void criterion_8(Outcome& o) {
  for (const auto& name : hypothesis_presets()) {
    const Run r(name);
    const auto h = han_check(r.sp, r.engine, enumerate_abelian_oracle(r.sp).subspaces);
    o.require(h.pass && h.complete && h.multiplicity_free, name + ": " + h.detail);
  }
  o.note << "graded dimensions and distinct highest weights";
}

void criterion_9(Outcome& o) {
  std::size_t triples = 0;
  std::vector<SymmetricPair> pairs;
  for (const auto& n : preset_names()) pairs.push_back(pair_of(n));
  // Jacobi identity on all basis triples, sigma an automorphism and isometry
  for (const auto& sp : pairs) {
    const auto& t = sp.table;
    const int n = t.dim();
    std::vector<RationalVector> u;
    for (int i = 0; i < n; ++i) u.push_back(t.unit(i));
    std::vector<std::vector<RationalVector>> br(n, std::vector<RationalVector>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) br[i][j] = t.bracket(u[i], u[j]);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
          auto a = t.bracket(br[i][j], u[k]);
          const auto b = t.bracket(br[j][k], u[i]);
          const auto c = t.bracket(br[k][i], u[j]);
          for (int m = 0; m < n; ++m) a[m] += b[m] + c[m];
          o.require(is_zero(a), sp.name + ": Jacobi");
          ++triples;
        }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const auto si = sp.sigma.apply(u[i]), sj = sp.sigma.apply(u[j]);
        o.require(sp.sigma.apply(br[i][j]) == t.bracket(si, sj), sp.name + ": sigma bracket");
        o.require(t.pair(si, sj) == t.pair(u[i], u[j]), sp.name + ": sigma isometry");
      }
  }
  // equivariance of c1, c2, c3 on 100 random pairs
  std::mt19937 rng(20261014);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto& sp = pairs[trial % pairs.size()];
    RationalVector x(sp.dim_k()), y(sp.dim_k());
    for (auto& v : x) v = coef(rng);
    for (auto& v : y) v = coef(rng);
    const RationalVector xy = sp.k_coords(sp.table.bracket(sp.k_element(x), sp.k_element(y)));
    const auto [c1, c2] = compute_c1_c2(sp, xy);
    const auto [y1, y2] = compute_c1_c2(sp, y);
    o.require(c1 == act(sp, x, y1) && c2 == act(sp, x, y2), sp.name + ": c1/c2 equivariance");
    o.require(compute_c3(sp, xy) == act(sp, x, compute_c3(sp, y)), sp.name + ": c3 equivariance");
  }
  // c3 under 10 random changes of p basis
  int changes = 0;
  for (int trial = 0; changes < 10; ++trial) {
    const auto& sp = pairs[trial % pairs.size()];
    const int n = sp.dim_p();
    RationalMatrix t(n, RationalVector(n));
    for (auto& row : t)
      for (auto& v : row) v = coef(rng);
    if (matrix_rank(t) != static_cast<std::size_t>(n)) continue;
    ++changes;
    const auto other = rebased(sp, t);
    for (int i = 0; i < sp.dim_k(); ++i) {
      RationalVector x(sp.dim_k());
      x[i] = 1;
      o.require(transform(t, matrix_of(compute_c3(other, x), n)) == matrix_of(compute_c3(sp, x), n), sp.name + ": c3 basis change");
    }
  }
  // wedge associativity and graded commutativity
  std::uniform_int_distribution<int> deg(0, 2);
  for (int trial = 0; trial < 1000; ++trial) {
    const int p1 = deg(rng), q1 = deg(rng), p2 = deg(rng), q2 = deg(rng), p3 = deg(rng), q3 = deg(rng);
    const auto a = random_element(rng, 6, p1, q1, 3);
    const auto b = random_element(rng, 6, p2, q2, 3);
    const auto c = random_element(rng, 6, p3, q3, 2);
    o.require(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)), "wedge associativity");
    o.require(wedge(a, b) == wedge(b, a) * (((p1 + q1) * (p2 + q2)) % 2 ? -1 : 1), "graded commutativity");
  }
  o.note << triples << " Jacobi triples, 100 equivariance pairs, 10 basis changes, 1000 wedge cases";
}

void criterion_10(Outcome& o) {
  for (const auto& name : preset_names()) {
    RunConfig a, b;
    a.pair = b.pair = name;
    b.threads = 3;
    o.require(run_verify(a).report.dump(2) == run_verify(a).report.dump(2), name + ": repeat run");
    o.require(run_verify(a).report.dump(2) == run_verify(b).report.dump(2), name + ": worker count");
  }
  o.note << preset_names().size() << " presets, two runs each plus a multi-worker run";
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double limit_seconds;  // 0: none
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "diagonal A1 invariants and S^2 = 0", 1, criterion_1},
      {2, "diagonal A2 nilpotency order 3", 60, criterion_2},
      {3, "(sl3, so3) generated by S", 60, criterion_3},
      {4, "B invariants match minuscule lengths", 0, criterion_4},
      {5, "minuscule elements biject onto abelian subspaces", 0, criterion_5},
      {6, "minuscule elements form an order ideal", 0, criterion_6},
      {7, "rho identity and degree defect", 0, criterion_7},
      {8, "exterior quotient decomposes multiplicity free", 0, criterion_8},
      {9, "algebraic property suites", 30, criterion_9},
      {10, "deterministic reports", 0, criterion_10},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_seconds > 0) o.require(secs < c.limit_seconds, "runtime over " + std::to_string(c.limit_seconds) + " s");
    if (!o.pass) ++failures;
    char time_text[32];
    std::snprintf(time_text, sizeof time_text, "%.3f s", secs);
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << "  [" << time_text << "]  "
              << o.note.str() << "\n";
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
  return failures ? 1 : 0;
}
