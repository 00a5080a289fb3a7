#include "doctest.h"

#include "sympair/affine_weyl.hpp"

#include <algorithm>
#include <set>

using namespace sympair;

namespace {

SymmetricPair pair_of(const std::string& name) { return build_pair(preset_descriptor(name)); }

const std::vector<std::string> kAffinePresets = {"diagonal:A1", "diagonal:A2", "diagonal:B2", "split:A2", "split:A3", "split:G2"};

}  // namespace

TEST_CASE("affine data of diagonal sl2 and (sl3, so3)") {
  const auto d = build_affine(pair_of("diagonal:A1"));
  CHECK(d.size() == 2);
  CHECK(d.cartan == IntMatrix{{2, -2}, {-2, 2}});
  CHECK(d.level(d.simple(0)) == 1);
  CHECK(d.level(d.simple(1)) == 0);

  const auto s = build_affine(pair_of("split:A2"));
  CHECK(s.cartan == IntMatrix{{2, -1}, {-4, 2}});
  // alpha_0 = delta - theta_p with theta_p twice the simple root of so3
  CHECK(s.finite_parts[0] == Weight{-2});
  CHECK(s.finite_parts[1] == Weight{1});
}

TEST_CASE("reflections") {
  for (const auto& name : kAffinePresets) {
    CAPTURE(name);
    const auto ars = build_affine(pair_of(name));
    for (int i = 0; i < ars.size(); ++i) {
      AffineRoot neg = ars.simple(i);
      for (auto& x : neg) x = -x;
      CHECK(ars.reflect(ars.simple(i), i) == neg);
      for (int j = 0; j < ars.size(); ++j) CHECK(ars.reflect(ars.reflect(ars.simple(j), i), i) == ars.simple(j));
    }
  }
  const auto d = build_affine(pair_of("diagonal:A1"));
  // s_0(alpha_1) = alpha_1 + 2 alpha_0 = 2 delta - alpha_1
  CHECK(d.reflect(d.simple(1), 0) == AffineRoot{2, 1});
  CHECK(d.level(AffineRoot{2, 1}) == 2);
  CHECK(d.finite_part(AffineRoot{2, 1}) == Weight{-1});
}

TEST_CASE("inversion sets") {
  const auto d = build_affine(pair_of("diagonal:A1"));
  CHECK(inversion_set(d, {}).inversions.empty());
  CHECK(inversion_set(d, {0}).inversions == std::vector<AffineRoot>{d.simple(0)});
  // s1 s0: {alpha_1, delta + alpha_1}
  const auto w = inversion_set(d, {1, 0});
  CHECK(w.inversions == std::vector<AffineRoot>{{0, 1}, {1, 2}});
  CHECK(d.level(w.inversions[1]) == 1);
  CHECK(d.finite_part(w.inversions[1]) == Weight{1});

  try {
    inversion_set(d, {0, 1, 1, 0});
    FAIL("accepted a non-reduced word");
  } catch (const NonReducedWord& e) {
    CHECK(e.reduced_word.empty());
  }
  CHECK(reduce_word(d, {1, 0, 0, 1, 0}) == std::vector<int>{0});
}

TEST_CASE("inversion sets are the positive roots made negative by the inverse") {
  for (const auto& name : kAffinePresets) {
    CAPTURE(name);
    const auto ars = build_affine(pair_of(name));
    for (const auto& w : enumerate_minuscule(ars)) {
      std::vector<int> inv(w.word.rbegin(), w.word.rend());
      CHECK(static_cast<int>(w.inversions.size()) == w.length());
      for (const auto& b : w.inversions) {
        CHECK(ars.is_positive(b));
        CHECK_FALSE(ars.is_positive(apply_word(ars, inv, b)));
        CHECK(ars.finite_part(b) != Weight(ars.k_rank ? ars.finite_parts[0].size() : 1, 0));
      }
    }
  }
}

TEST_CASE("minuscule predicate") {
  const auto d = build_affine(pair_of("diagonal:A1"));
  CHECK(is_minuscule(d, inversion_set(d, {})));
  CHECK(is_minuscule(d, inversion_set(d, {0})));
  CHECK_FALSE(is_minuscule(d, inversion_set(d, {0, 1})));
  CHECK_FALSE(is_minuscule(d, inversion_set(d, {1})));
}

TEST_CASE("minuscule enumeration") {
  const std::map<std::string, std::vector<int>> lengths = {
      {"diagonal:A1", {0, 1}},       {"diagonal:A2", {0, 1, 2, 2}},          {"diagonal:B2", {0, 1, 2, 3}},
      {"split:A2", {0, 1, 2}},       {"split:A3", {0, 1, 2, 2, 3, 3, 3}},    {"split:G2", {0, 1, 2, 2, 3}},
  };
  for (const auto& name : kAffinePresets) {
    CAPTURE(name);
    const auto sp = pair_of(name);
    const auto ars = build_affine(sp);
    const auto m = enumerate_minuscule(ars);
    std::vector<int> got;
    for (const auto& w : m) {
      got.push_back(w.length());
      CHECK(w.length() <= sp.dim_p());
      CHECK(is_minuscule(ars, w));
      for (const auto& b : inverse_inversions(ars, w)) CHECK(ars.level(b) == 1);
    }
    CHECK(got == lengths.at(name));
    CHECK(m.front().word.empty());
  }
}

TEST_CASE("ev1 images") {
  const auto sp = pair_of("diagonal:A1");
  const auto d = build_affine(sp);
  CHECK(ev1_subspace(d, inversion_set(d, {})).weight_support.empty());
  CHECK(ev1_subspace(d, inversion_set(d, {0})).weight_support == std::vector<Weight>{sp.theta_p});
  CHECK_THROWS_AS(ev1_subspace(d, inversion_set(d, {0, 1})), InvalidInput);

  for (const auto& name : kAffinePresets) {
    CAPTURE(name);
    const auto p = pair_of(name);
    const auto ars = build_affine(p);
    std::set<AbelianSubspace> seen;
    for (const auto& w : enumerate_minuscule(ars)) {
      const auto s = ev1_subspace(ars, w);
      CHECK(static_cast<int>(s.dimension()) == w.length());
      CHECK(is_b_stable_abelian(p, s));
      CHECK(seen.insert(s).second);
    }
  }
}

TEST_CASE("abelian subspace oracle") {
  const auto d1 = pair_of("diagonal:A1");
  const auto o1 = enumerate_abelian_oracle(d1);
  REQUIRE(o1.subspaces.size() == 2);
  CHECK(o1.subspaces.front().weight_support.empty());
  CHECK(o1.zero_weight_certified);

  // sl3: {}, {theta}, {theta, a1}, {theta, a2}; {theta, a1, a2} is not abelian
  const auto d2 = pair_of("diagonal:A2");
  const auto o2 = enumerate_abelian_oracle(d2);
  REQUIRE(o2.subspaces.size() == 4);
  std::multiset<std::size_t> dims;
  for (const auto& s : o2.subspaces) {
    dims.insert(s.dimension());
    if (s.dimension()) CHECK(std::count(s.weight_support.begin(), s.weight_support.end(), d2.theta_p) == 1);
  }
  CHECK(dims == std::multiset<std::size_t>{0, 1, 2, 2});
  AbelianSubspace three;
  for (const auto& w : d2.p_weights)
    if (w != Weight(2, 0) && d2.is_positive(w)) three.weight_support.push_back(w);
  std::sort(three.weight_support.begin(), three.weight_support.end());
  CHECK(three.dimension() == 3);
  CHECK_FALSE(is_b_stable_abelian(d2, three));

  for (const auto& name : kAffinePresets) {
    CAPTURE(name);
    const auto sp = pair_of(name);
    const auto o = enumerate_abelian_oracle(sp);
    CHECK(o.zero_weight_certified);
    for (const auto& s : o.subspaces) CHECK(is_b_stable_abelian(sp, s));
    if (sp.is_diagonal()) CHECK(o.subspaces.size() == (std::size_t{1} << sp.cartan_rank()));
  }
}

TEST_CASE("bijection and affine identities on every preset") {
  for (const auto& name : kAffinePresets) {
    CAPTURE(name);
    const auto sp = pair_of(name);
    const auto ars = build_affine(sp);
    const auto m = enumerate_minuscule(ars);
    const auto b = check_bijection(ars, sp, m, enumerate_abelian_oracle(sp));
    CHECK_MESSAGE(b.pass, b.detail);
    const auto oi = order_ideal_check(ars, m);
    CHECK_MESSAGE(oi.pass, oi.detail);
    const auto mc = minimal_coset_check(ars, m);
    CHECK_MESSAGE(mc.pass, mc.detail);
    const auto rho = rho_length_check(ars, m);
    CHECK_MESSAGE(rho.pass, rho.detail);
    const auto dd = degree_defect_check(ars, m);
    CHECK_MESSAGE(dd.pass, dd.detail);
    for (const auto& w : m) {
      CHECK(rho_shift(ars, w) == w.length());
      CHECK(level_sum(ars, w) == w.length());
    }
  }
}

TEST_CASE("degree defect values") {
  const auto ars = build_affine(pair_of("diagonal:A2"));
  const auto m = enumerate_minuscule(ars);
  const auto& id = m[0];
  const auto& one = m[1];
  CHECK(degree_defect(ars, id, id, id) == 0);
  CHECK(degree_defect(ars, one, one, id) == -2);
  CHECK(degree_defect_direct(ars, one, one, id) == -2);
  for (const auto& u : m)
    for (const auto& v : m)
      for (const auto& w : m) {
        CHECK(degree_defect(ars, u, v, w) == degree_defect_direct(ars, u, v, w));
        if (w.length() == u.length() + v.length()) CHECK(degree_defect(ars, u, v, w) == 0);
      }
  // both length-two elements
  CHECK(level_sum(ars, m[2]) == 2);
  CHECK(level_sum(ars, m[3]) == 2);
}

TEST_CASE("affine data needs semisimple k") {
  CHECK_THROWS_AS(build_affine(pair_of("split:B2")), HypothesisViolation);
  CHECK_THROWS_AS(build_affine(pair_of("split:A1")), HypothesisViolation);
}
