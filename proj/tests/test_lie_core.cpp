#include "doctest.h"

#include "sympair/lie_core.hpp"

#include <set>

using namespace sympair;

namespace {

RootSystem rs_of(const std::string& name) { return build_root_system(cartan_matrix_for(name)); }

// Naive closure under all simple reflections, starting from the simple roots.
std::set<RootVec> brute_closure(const RootSystem& rs) {
  std::set<RootVec> all(rs.simple_roots.begin(), rs.simple_roots.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<RootVec> now(all.begin(), all.end());
    for (const auto& b : now)
      for (int i = 0; i < rs.rank(); ++i)
        if (all.insert(rs.reflect(b, i)).second) grew = true;
  }
  return all;
}

void check_jacobi_and_invariance(const StructureTable& t) {
  const int n = t.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto xy = t.bracket(t.unit(i), t.unit(j));
      for (int k = 0; k < n; ++k) {
        const auto z = t.unit(k);
        const auto yz = t.bracket(t.unit(j), z);
        REQUIRE(t.pair(xy, z) == t.pair(t.unit(i), yz));
        if (k < j) continue;
        auto a = t.bracket(xy, z);
        auto b = t.bracket(t.bracket(t.unit(j), z), t.unit(i));
        auto c = t.bracket(t.bracket(z, t.unit(i)), t.unit(j));
        for (int m = 0; m < n; ++m) REQUIRE(a[m] + b[m] + c[m] == 0);
      }
    }
}

}  // namespace

TEST_CASE("rank one and A2 closures") {
  auto a1 = build_root_system({{2}});
  CHECK(a1.positive_roots.size() == 1);
  auto a2 = rs_of("A2");
  REQUIRE(a2.positive_roots.size() == 3);
  CHECK(a2.positive_roots[2] == RootVec{1, 1});
}

TEST_CASE("G2 has six positive roots and highest root 3a1+2a2") {
  auto g2 = rs_of("G2");
  CHECK(g2.positive_roots.size() == 6);
  CHECK(g2.highest_root() == RootVec{3, 2});
  CHECK(g2.simple_norms[0] < g2.simple_norms[1]);
}

TEST_CASE("root counts match brute-force closure") {
  const std::vector<std::pair<std::string, std::size_t>> expect = {
      {"A3", 6}, {"B3", 9}, {"C3", 9}, {"D4", 12}, {"G2", 6}, {"F4", 24}, {"E6", 36}, {"E7", 63}, {"E8", 120}};
  for (const auto& [name, count] : expect) {
    auto rs = rs_of(name);
    CHECK(rs.positive_roots.size() == count);
    CHECK(brute_closure(rs).size() == 2 * count);
    for (int i = 0; i < rs.rank(); ++i) CHECK(rs.pairing(RootVec(rs.rank(), 0), i) == 0);
  }
}

TEST_CASE("simple reflections permute the roots") {
  for (auto name : {"B2", "A3", "G2", "F4"}) {
    auto rs = rs_of(name);
    for (const auto& b : rs.positive_roots)
      for (int i = 0; i < rs.rank(); ++i) {
        CHECK(rs.is_root(rs.reflect(b, i)));
        CHECK(rs.reflect(rs.reflect(b, i), i) == b);
      }
  }
}

TEST_CASE("rho pairs to one with simple coroots") {
  for (auto name : {"A1", "B3", "C4", "G2", "D5", "F4"}) {
    auto rs = rs_of(name);
    for (int i = 0; i < rs.rank(); ++i) {
      Rational s = 0;
      for (int j = 0; j < rs.rank(); ++j) s += rs.rho[j] * rs.cartan_matrix[i][j];
      CHECK(s == 1);
    }
  }
}

TEST_CASE("highest root dominates every root") {
  for (auto name : {"A4", "B4", "C3", "E6", "G2"}) {
    auto rs = rs_of(name);
    const auto& th = rs.highest_root();
    for (const auto& b : rs.positive_roots)
      for (int j = 0; j < rs.rank(); ++j) CHECK(b[j] <= th[j]);
  }
}

TEST_CASE("invalid Cartan matrices are rejected") {
  CHECK_THROWS_AS(build_root_system({{2, 1}, {1, 2}}), InvalidInput);
  CHECK_THROWS_AS(build_root_system({{2, -2}, {-2, 2}}), InvalidInput);  // affine
  CHECK_THROWS_AS(build_root_system({{3}}), InvalidInput);
  CHECK_THROWS_AS(build_root_system({{2, -1}, {0, 2}}), InvalidInput);
  CHECK_THROWS_AS(cartan_matrix_for("A9"), InvalidInput);
  CHECK_THROWS_AS(cartan_matrix_for("Q3"), InvalidInput);
}

TEST_CASE("sl2 Chevalley relations") {
  auto t = chevalley_table(rs_of("A1"));
  REQUIRE(t.dim() == 3);
  const int h = t.index("h1"), e = t.index("e(1)"), f = t.index("f(1)");
  CHECK(t.brackets[e][f] == SparseIntVec{{h, 1}});
  CHECK(t.brackets[h][e] == SparseIntVec{{e, 2}});
  CHECK(t.brackets[h][f] == SparseIntVec{{f, -2}});
}

TEST_CASE("A2 extraspecial sign") {
  auto t = chevalley_table(rs_of("A2"));
  const auto& b = t.brackets[t.index("e(1,0)")][t.index("e(0,1)")];
  REQUIRE(b.size() == 1);
  CHECK(b[0].first == t.index("e(1,1)"));
  CHECK(b[0].second == 1);
  // alpha_1 + (alpha_1 + alpha_2) is not a root.
  CHECK(t.brackets[t.index("e(1,0)")][t.index("e(1,1)")].empty());
}

TEST_CASE("structure constants have magnitude p+1") {
  for (auto name : {"B3", "G2", "F4", "C3"}) {
    auto rs = rs_of(name);
    auto t = chevalley_table(rs);
    for (int i = t.rank(); i < t.dim(); ++i)
      for (int j = t.rank(); j < t.dim(); ++j) {
        const auto& a = t.basis[i].root;
        const auto& b = t.basis[j].root;
        RootVec s(a.size()), d(a.size());
        for (std::size_t k = 0; k < a.size(); ++k) s[k] = a[k] + b[k];
        if (!rs.is_root(s)) continue;
        int p = 0;
        for (;;) {
          for (std::size_t k = 0; k < a.size(); ++k) d[k] = b[k] - (p + 1) * a[k];
          if (!rs.is_root(d)) break;
          ++p;
        }
        REQUIRE(t.brackets[i][j].size() == 1);
        CHECK(std::abs(t.brackets[i][j][0].second) == p + 1);
      }
  }
}

TEST_CASE("Jacobi identity and form invariance on all basis triples") {
  for (auto name : {"A1", "A2", "A3", "B2", "B3", "C3", "G2", "D4"}) {
    CAPTURE(name);
    check_jacobi_and_invariance(chevalley_table(rs_of(name)));
  }
}

TEST_CASE("Jacobi identity for F4") { check_jacobi_and_invariance(chevalley_table(rs_of("F4"))); }

TEST_CASE("normalized form gives the highest root norm two") {
  for (auto name : {"A2", "B3", "C3", "G2", "F4", "E6"}) {
    auto rs = rs_of(name);
    auto t = chevalley_table(rs);
    // the induced form on h* from the Cartan block of <,>
    const int r = t.rank();
    RationalMatrix g(r, RationalVector(r));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) g[i][j] = t.form[i][j];
    auto gi = inverse(g);
    // theta as a functional on h: theta(h_i) = <theta, alpha_i^vee>
    RationalVector th(r);
    for (int i = 0; i < r; ++i) th[i] = rs.pairing(rs.highest_root(), i);
    Rational n = 0;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) n += th[i] * gi[i][j] * th[j];
    CHECK(n == 2);
  }
}

TEST_CASE("direct sum of two sl2") {
  auto a = chevalley_table(rs_of("A1"));
  auto s = direct_sum(a, a);
  CHECK(s.dim() == 6);
  CHECK(s.num_factors == 2);
  for (int i = 0; i < 3; ++i)
    for (int j = 3; j < 6; ++j) {
      CHECK(s.brackets[i][j].empty());
      CHECK(s.form[i][j] == 0);
    }
  check_jacobi_and_invariance(s);
  CHECK(s.index("s2.e(1)") == 4);
  CHECK(s.basis[s.index("s2.e(1)")].root == RootVec{0, 1});
}

TEST_CASE("dual Coxeter numbers") {
  CHECK(dual_coxeter_number(rs_of("A1")) == 2);
  CHECK(dual_coxeter_number(rs_of("A2")) == 3);
  CHECK(dual_coxeter_number(rs_of("G2")) == 4);
  CHECK(dual_coxeter_number(rs_of("F4")) == 9);
  CHECK(dual_coxeter_number(rs_of("E8")) == 30);
  CHECK_THROWS_AS(dual_coxeter_number(rs_of("A1xA1")), HypothesisViolation);
}

TEST_CASE("dual Coxeter number of A_n agrees with the comark sum") {
  for (int n = 1; n <= 4; ++n) {
    auto rs = rs_of("A" + std::to_string(n));
    // comarks: coefficients of the highest short coroot, i.e. the coroot of theta
    const auto& co = rs.coroots.back();
    int sum = 1;
    for (int c : co) sum += c;
    CHECK(dual_coxeter_number(rs) == sum);
    CHECK(sum == n + 1);
  }
  for (auto name : {"B3", "C3", "G2", "D5"}) {
    auto rs = rs_of(name);
    const auto idx = *rs.positive_index(rs.highest_root());
    int sum = 1;
    for (int c : rs.coroots[idx]) sum += c;
    CHECK(dual_coxeter_number(rs) == sum);
  }
}

TEST_CASE("Weyl dimension formula") {
  auto a1 = rs_of("A1");
  CHECK(weyl_dimension(a1, {0}) == 1);
  CHECK(weyl_dimension(a1, {2}) == 3);
  CHECK(weyl_dimension(a1, {4}) == 5);
  auto a2 = rs_of("A2");
  CHECK(weyl_dimension(a2, {1, 1}) == 8);
  CHECK(weyl_dimension(a2, {3, 0}) == 10);
  auto g2 = rs_of("G2");
  CHECK(weyl_dimension(g2, {1, 0}) == 7);
  CHECK(weyl_dimension(g2, {0, 1}) == 14);
  CHECK_THROWS_AS(weyl_dimension(a1, {-1}), InvalidInput);
}
