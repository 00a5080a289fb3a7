#include "sympair/exterior.hpp"

#include <bit>

namespace sympair {

namespace {

const std::vector<std::vector<std::uint64_t>>& binomials() {
  static const auto table = [] {
    std::vector<std::vector<std::uint64_t>> t(kMaxExteriorDim + 1, std::vector<std::uint64_t>(kMaxExteriorDim + 2, 0));
    for (int n = 0; n <= kMaxExteriorDim; ++n) {
      t[n][0] = 1;
      for (int k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + (k <= n - 1 ? t[n - 1][k] : 0);
    }
    return t;
  }();
  return table;
}

int bits_below(std::uint64_t mask, int bit) {
  const std::uint64_t low = bit == 0 ? 0 : (std::uint64_t{1} << bit) - 1;
  return std::popcount(mask & low);
}

}  // namespace

std::pair<int, int> Monomial::bidegree() const { return {std::popcount(mask1), std::popcount(mask2)}; }

int Monomial::degree() const { return std::popcount(mask1) + std::popcount(mask2); }

int mask_sign(std::uint64_t a, std::uint64_t b) {
  if (a & b) return 0;
  int parity = 0;
  while (b) {
    const int j = std::countr_zero(b);
    b &= b - 1;
    parity += std::popcount(j == 63 ? 0 : a >> (j + 1));
  }
  return (parity & 1) ? -1 : 1;
}

int wedge_sign(const Monomial& x, const Monomial& y) {
  const int s1 = mask_sign(x.mask1, y.mask1);
  if (s1 == 0) return 0;
  const int s2 = mask_sign(x.mask2, y.mask2);
  if (s2 == 0) return 0;
  const int cross = (std::popcount(x.mask2) * std::popcount(y.mask1)) & 1;
  return (cross ? -1 : 1) * s1 * s2;
}

std::uint64_t mask_rank(std::uint64_t mask) {
  const auto& c = binomials();
  std::uint64_t r = 0;
  int t = 1;
  while (mask) {
    const int pos = std::countr_zero(mask);
    mask &= mask - 1;
    r += c[pos][t];
    ++t;
  }
  return r;
}

std::vector<std::uint64_t> masks_of_degree(int n, int k) {
  std::vector<std::uint64_t> out;
  if (k < 0 || k > n || n > kMaxExteriorDim) return out;
  if (k == 0) return {0};
  out.reserve(binomials()[n][k]);
  std::uint64_t m = (k == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  for (;;) {
    out.push_back(m);
    if (out.size() == binomials()[n][k]) break;
    // Gosper's hack: next mask with the same popcount
    const std::uint64_t c = m & (~m + 1);
    const std::uint64_t r = m + c;
    m = (((r ^ m) >> 2) / c) | r;
  }
  return out;
}

std::vector<Monomial> component_basis(int dim_p, int p, int q) {
  std::vector<Monomial> out;
  if (dim_p < 0 || p < 0 || q < 0 || p > dim_p || q > dim_p || dim_p > kMaxExteriorDim) return out;
  const auto a = masks_of_degree(dim_p, p);
  const auto b = masks_of_degree(dim_p, q);
  out.reserve(a.size() * b.size());
  for (auto x : a)
    for (auto y : b) out.push_back({x, y});
  return out;
}

std::uint64_t component_index(int dim_p, const Monomial& m) {
  const auto& c = binomials();
  return mask_rank(m.mask1) * c[dim_p][std::popcount(m.mask2)] + mask_rank(m.mask2);
}

ExteriorElement::ExteriorElement(const Monomial& m, const Rational& c) { add(m, c); }

void ExteriorElement::add(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::pair<int, int> ExteriorElement::bidegree() const {
  if (terms_.empty()) throw InvalidInput("zero element has no bidegree");
  const auto bd = terms_.begin()->first.bidegree();
  for (const auto& [m, c] : terms_)
    if (m.bidegree() != bd) throw InvalidInput("element is not bihomogeneous");
  return bd;
}

ExteriorElement& ExteriorElement::operator+=(const ExteriorElement& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

ExteriorElement& ExteriorElement::operator-=(const ExteriorElement& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

ExteriorElement ExteriorElement::operator*(const Rational& c) const {
  ExteriorElement r;
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& [m, v] : r.terms_) v *= c;
  return r;
}

ExteriorElement wedge(const ExteriorElement& a, const ExteriorElement& b) {
  ExteriorElement r;
  for (const auto& [x, cx] : a.terms())
    for (const auto& [y, cy] : b.terms()) {
      const int s = wedge_sign(x, y);
      if (s == 0) continue;
      r.add({x.mask1 | y.mask1, x.mask2 | y.mask2}, s * cx * cy);
    }
  return r;
}

ExteriorElement degree_one(const RationalVector& v, int copy) {
  if (v.size() > static_cast<std::size_t>(kMaxExteriorDim)) throw InvalidInput("dim p exceeds 64");
  ExteriorElement r;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::uint64_t bit = std::uint64_t{1} << i;
    r.add(copy == 1 ? Monomial{bit, 0} : Monomial{0, bit}, v[i]);
  }
  return r;
}

std::vector<std::pair<std::uint64_t, Rational>> derive_mask(std::uint64_t mask, const RationalMatrix& d) {
  std::map<std::uint64_t, Rational> acc;
  std::uint64_t rest = mask;
  while (rest) {
    const int b = std::countr_zero(rest);
    rest &= rest - 1;
    const std::uint64_t without = mask & ~(std::uint64_t{1} << b);
    const int pb = bits_below(mask, b);
    for (std::size_t a = 0; a < d.size(); ++a) {
      const Rational& c = d[a][b];
      if (c == 0) continue;
      const std::uint64_t abit = std::uint64_t{1} << a;
      if (without & abit) continue;
      // move e_b to the front, replace by e_a, move e_a into place
      const int pa = bits_below(without, static_cast<int>(a));
      const Rational v = ((pa + pb) & 1) ? -c : c;
      auto [it, inserted] = acc.try_emplace(without | abit, v);
      if (!inserted) it->second += v;
    }
  }
  std::vector<std::pair<std::uint64_t, Rational>> out;
  for (auto& [m, c] : acc)
    if (c != 0) out.emplace_back(m, c);
  return out;
}

ExteriorElement derive(const ExteriorElement& x, const RationalMatrix& d) {
  ExteriorElement r;
  for (const auto& [m, c] : x.terms()) {
    for (const auto& [m1, c1] : derive_mask(m.mask1, d)) r.add({m1, m.mask2}, c * c1);
    for (const auto& [m2, c2] : derive_mask(m.mask2, d)) r.add({m.mask1, m2}, c * c2);
  }
  return r;
}

}  // namespace sympair
