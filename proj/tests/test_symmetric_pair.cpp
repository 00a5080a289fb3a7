#include "doctest.h"

#include "sympair/symmetric_pair.hpp"

#include <set>

using namespace sympair;

namespace {

StructureTable table_of(const std::string& name) { return chevalley_table(build_root_system(cartan_matrix_for(name))); }

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  const std::size_t n = a.size();
  RationalMatrix c(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

bool is_identity(const RationalMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

// sigma is a form-preserving automorphism on every basis pair.
void check_automorphism(const StructureTable& t, const Involution& s) {
  for (int i = 0; i < t.dim(); ++i)
    for (int j = 0; j < t.dim(); ++j) {
      const auto x = t.unit(i), y = t.unit(j);
      CHECK(s.apply(t.bracket(x, y)) == t.bracket(s.apply(x), s.apply(y)));
      CHECK(t.pair(s.apply(x), s.apply(y)) == t.pair(x, y));
    }
}

std::vector<GeneratorImage> chevalley_images(int rank) {
  std::vector<GeneratorImage> out;
  for (int i = 0; i < rank; ++i) {
    RootVec a(rank, 0);
    a[i] = 1;
    RootVec na(rank, 0);
    na[i] = -1;
    out.push_back({"e" + std::to_string(i + 1), {{root_label(na), Rational(-1)}}});
    out.push_back({"f" + std::to_string(i + 1), {{root_label(a), Rational(-1)}}});
  }
  return out;
}

bool in_span(const std::vector<RationalVector>& basis, const RationalVector& v) {
  RationalMatrix m(basis.begin(), basis.end());
  const std::size_t r = matrix_rank(m);
  m.push_back(v);
  return matrix_rank(m) == r;
}

}  // namespace

TEST_CASE("diagonal swap squares to the identity") {
  const StructureTable s = table_of("A1");
  const StructureTable t = direct_sum(s, s);
  const Involution sw = diagonal_swap(t);
  CHECK(is_identity(multiply(sw.full_matrix, sw.full_matrix)));
  check_automorphism(t, sw);
  const SymmetricPair sp = decompose(t, sw, "diag");
  CHECK(sp.dim_k() == 3);
  CHECK(sp.dim_p() == 3);
}

TEST_CASE("Chevalley involution on sl2 and sl3") {
  const StructureTable a1 = table_of("A1");
  const Involution s1 = build_involution(a1, chevalley_images(1));
  CHECK(is_identity(multiply(s1.full_matrix, s1.full_matrix)));
  check_automorphism(a1, s1);
  // h -> -h
  const auto h = a1.unit(a1.index("h1"));
  auto mh = h;
  for (auto& x : mh) x = -x;
  CHECK(s1.apply(h) == mh);
  CHECK(eigenspace_dimensions(s1) == std::pair<int, int>{1, 2});

  const StructureTable a2 = table_of("A2");
  const Involution s2 = build_involution(a2, chevalley_images(2));
  check_automorphism(a2, s2);
  CHECK(eigenspace_dimensions(s2) == std::pair<int, int>{3, 5});
}

TEST_CASE("inconsistent images are rejected naming the bracket") {
  const StructureTable a1 = table_of("A1");
  std::vector<GeneratorImage> bad = {{"e1", {{"e(1)", Rational(1)}}}, {"f1", {{"f(1)", Rational(1)}}}, {"h1", {{"h1", Rational(-1)}}}};
  try {
    build_involution(a1, bad);
    FAIL("accepted inconsistent images");
  } catch (const InvalidInput& e) {
    CHECK(std::string(e.what()).find("[h1,e(1)]") != std::string::npos);
  }
  // labels that name no basis element
  std::vector<GeneratorImage> unknown = {{"e1", {{"x(9)", Rational(1)}}}};
  CHECK_THROWS_AS(build_involution(a1, unknown), InvalidInput);
}

TEST_CASE("Chevalley involution has no split Cartan in k") {
  const StructureTable a1 = table_of("A1");
  CHECK_THROWS_AS(decompose(a1, build_involution(a1, chevalley_images(1))), HypothesisViolation);
}

TEST_CASE("preset pairs satisfy the structural invariants") {
  const std::map<std::string, std::array<int, 4>> expected = {
      {"diagonal:A1", {6, 3, 3, 1}}, {"diagonal:A2", {16, 8, 8, 1}}, {"diagonal:B2", {20, 10, 10, 1}}, {"split:A1", {3, 1, 2, 2}},
      {"split:A2", {8, 3, 5, 1}},    {"split:A3", {15, 6, 9, 1}},    {"split:B2", {10, 4, 6, 2}},    {"split:G2", {14, 6, 8, 1}},
  };
  for (const auto& name : preset_names()) {
    CAPTURE(name);
    const SymmetricPair sp = build_pair(preset_descriptor(name));
    const auto& t = sp.table;
    const auto& e = expected.at(name);
    CHECK(sp.dim_g() == e[0]);
    CHECK(sp.dim_k() == e[1]);
    CHECK(sp.dim_p() == e[2]);
    CHECK(irreducibility_report(sp) == e[3]);
    CHECK(eigenspace_dimensions(sp.sigma) == std::pair<int, int>{e[1], e[2]});
    check_automorphism(t, sp.sigma);

    // eigenvectors, orthogonality, bracket parity
    for (const auto& k : sp.k_basis) CHECK(sp.sigma.apply(k) == k);
    for (const auto& p : sp.p_basis) {
      auto mp = p;
      for (auto& x : mp) x = -x;
      CHECK(sp.sigma.apply(p) == mp);
      for (const auto& k : sp.k_basis) CHECK(t.pair(k, p) == 0);
    }
    for (const auto& a : sp.k_basis) {
      for (const auto& b : sp.k_basis) CHECK(in_span(sp.k_basis, t.bracket(a, b)));
      for (const auto& b : sp.p_basis) CHECK(in_span(sp.p_basis, t.bracket(a, b)));
    }
    for (const auto& a : sp.p_basis)
      for (const auto& b : sp.p_basis) CHECK(in_span(sp.k_basis, t.bracket(a, b)));

    // dual basis
    for (int i = 0; i < sp.dim_p(); ++i)
      for (int j = 0; j < sp.dim_p(); ++j) CHECK(t.pair(sp.p_basis[i], sp.p_dual_basis[j]) == (i == j ? 1 : 0));

    // nonzero weights have multiplicity one
    std::map<Weight, int> mult;
    for (const auto& w : sp.p_weights) ++mult[w];
    const Weight zero(sp.cartan_rank(), 0);
    for (const auto& [w, m] : mult)
      if (w != zero) CHECK(m == 1);

    // theta_p reachable from every weight by adding simple roots of k
    std::set<Weight> weights(sp.p_weights.begin(), sp.p_weights.end());
    std::set<Weight> reached = {sp.theta_p};
    std::vector<Weight> stack = {sp.theta_p};
    while (!stack.empty()) {
      const Weight w = stack.back();
      stack.pop_back();
      for (const auto& b : sp.k_simple_weights) {
        Weight d = w;
        for (std::size_t a = 0; a < d.size(); ++a) d[a] -= b[a];
        if (weights.count(d) && reached.insert(d).second) stack.push_back(d);
      }
    }
    if (sp.k_semisimple()) CHECK(reached == weights);

    // irreducible p: no nonzero element of k acts trivially
    if (e[3] == 1) {
      RationalMatrix rows;
      for (int i = 0; i < sp.dim_k(); ++i) {
        RationalVector flat;
        for (const auto& r : sp.ad_on_p(sp.k_basis[i]))
          for (const auto& x : r) flat.push_back(x);
        rows.push_back(flat);
      }
      CHECK(matrix_rank(rows) == static_cast<std::size_t>(sp.dim_k()));
    }
  }
}

TEST_CASE("weights of the small presets") {
  const SymmetricPair d = build_pair(preset_descriptor("diagonal:A1"));
  std::multiset<Weight> dw(d.p_weights.begin(), d.p_weights.end());
  CHECK(dw == std::multiset<Weight>{{1}, {0}, {-1}});
  CHECK(d.theta_p == Weight{1});
  const SymmetricPair s = build_pair(preset_descriptor("split:A2"));
  std::multiset<Weight> sw(s.p_weights.begin(), s.p_weights.end());
  CHECK(sw == std::multiset<Weight>{{2}, {1}, {0}, {-1}, {-2}});
  CHECK(s.theta_p == Weight{2});
  // five-dimensional irreducible so3-module: highest weight twice the root
  CHECK(s.dynkin_labels(s.theta_p) == std::vector<long>{4});
}

TEST_CASE("k coordinates round trip") {
  const SymmetricPair sp = build_pair(preset_descriptor("split:G2"));
  RationalVector c(sp.dim_k());
  for (int i = 0; i < sp.dim_k(); ++i) c[i] = Rational(i + 1) / 3;
  CHECK(sp.k_coords(sp.k_element(c)) == c);
}

TEST_CASE("conjectured exponent") {
  CHECK(conjectured_exponent(build_pair(preset_descriptor("diagonal:A1"))).value == 2);
  CHECK(conjectured_exponent(build_pair(preset_descriptor("diagonal:A2"))).value == 3);
  CHECK(conjectured_exponent(build_pair(preset_descriptor("diagonal:B2"))).value == 3);
  const auto s = conjectured_exponent(build_pair(preset_descriptor("split:A2")));
  CHECK_FALSE(s.value.has_value());
  CHECK(s.naive == 1);
  CHECK_FALSE(conjectured_exponent(build_pair(preset_descriptor("split:G2"))).value.has_value());
}

TEST_CASE("unknown presets and bad diagonal inputs") {
  CHECK_THROWS_AS(preset_descriptor("split:Z9"), InvalidInput);
  PairDescriptor d;
  d.cartan = cartan_matrix_for("A1xA2");
  d.diagonal = true;
  CHECK_THROWS_AS(build_pair(d), InvalidInput);
  d.cartan = cartan_matrix_for("A2xA2");
  CHECK(build_pair(d).dim_p() == 8);
}
