#include "sympair/echelon.hpp"

#include <algorithm>

namespace sympair {

namespace {

// v <- a*v - b*row, both sorted; drops zeros.
IntSparse combine(const IntSparse& v, const Integer& a, const IntSparse& row, const Integer& b) {
  IntSparse out;
  out.reserve(v.size() + row.size());
  std::size_t i = 0, j = 0;
  while (i < v.size() || j < row.size()) {
    if (j == row.size() || (i < v.size() && v[i].first < row[j].first)) {
      out.emplace_back(v[i].first, a * v[i].second);
      ++i;
    } else if (i == v.size() || row[j].first < v[i].first) {
      out.emplace_back(row[j].first, -b * row[j].second);
      ++j;
    } else {
      Integer x = a * v[i].second - b * row[j].second;
      if (x != 0) out.emplace_back(v[i].first, std::move(x));
      ++i;
      ++j;
    }
  }
  return out;
}

Integer content(const IntSparse& v) {
  Integer g = 0;
  for (const auto& [c, x] : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void check_sorted(const IntSparse& v, std::size_t ambient) {
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].first >= ambient) throw InvalidInput("vector entry outside the ambient space");
    if (k && v[k - 1].first >= v[k].first) throw InvalidInput("sparse vector is not sorted");
  }
}

}  // namespace

IntSparse to_integer(const RationalSparse& v, Integer* denominator) {
  Integer l = 1;
  for (const auto& [c, x] : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  IntSparse out;
  out.reserve(v.size());
  for (const auto& [c, x] : v) {
    if (x == 0) continue;
    out.emplace_back(c, x.get_num() * (l / x.get_den()));
  }
  if (denominator) *denominator = l;
  return out;
}

RationalSparse to_sparse(const RationalVector& v) {
  RationalSparse out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) out.emplace_back(static_cast<std::uint32_t>(i), v[i]);
  return out;
}

RationalVector to_dense(const RationalSparse& v, std::size_t n) {
  RationalVector out(n);
  for (const auto& [c, x] : v) out.at(c) = x;
  return out;
}

IntSparse Echelon::reduce_scaled(IntSparse v, Rational& factor) const {
  factor = 1;
  std::size_t pos = 0;
  while (pos < v.size()) {
    auto it = rows_.find(v[pos].first);
    if (it == rows_.end()) {
      ++pos;
      continue;
    }
    const IntSparse& row = it->second;
    Integer a = row.front().second;
    Integer b = v[pos].second;
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    a /= g;
    b /= g;
    v = combine(v, a, row, b);
    factor *= a;
  }
  const Integer g = content(v);
  if (g > 1) {
    for (auto& [c, x] : v) x /= g;
    factor /= g;
  }
  return v;
}

IntSparse Echelon::reduce(IntSparse v) const {
  check_sorted(v, ambient_);
  Rational f;
  return reduce_scaled(std::move(v), f);
}

bool Echelon::insert(IntSparse v) {
  check_sorted(v, ambient_);
  Rational f;
  IntSparse r = reduce_scaled(std::move(v), f);
  if (r.empty()) return false;
  if (r.front().second < 0)
    for (auto& [c, x] : r) x = -x;
  const auto pivot = r.front().first;
  rows_.emplace(pivot, std::move(r));
  return true;
}

bool Echelon::insert(const RationalSparse& v) { return insert(to_integer(v)); }

RationalSparse Echelon::normal_form(const RationalSparse& v) const {
  Integer den;
  IntSparse iv = to_integer(v, &den);
  check_sorted(iv, ambient_);
  Rational f;
  IntSparse r = reduce_scaled(std::move(iv), f);
  const Rational scale = f * den;
  RationalSparse out;
  out.reserve(r.size());
  for (auto& [c, x] : r) out.emplace_back(c, Rational(x) / scale);
  return out;
}

bool Echelon::contains(const RationalSparse& v) const { return reduce(to_integer(v)).empty(); }

std::vector<std::uint32_t> Echelon::pivots() const {
  std::vector<std::uint32_t> p;
  for (const auto& [c, r] : rows_) p.push_back(c);
  return p;
}

std::vector<std::uint32_t> Echelon::free_columns() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t c = 0; c < ambient_; ++c)
    if (!rows_.count(c)) out.push_back(c);
  return out;
}

std::vector<RationalSparse> Echelon::reduced_rows() const {
  // back-substitute from the last pivot
  std::map<std::uint32_t, IntSparse> done;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    IntSparse v = it->second;
    std::size_t pos = 1;
    while (pos < v.size()) {
      auto jt = done.find(v[pos].first);
      if (jt == done.end()) {
        ++pos;
        continue;
      }
      Integer a = jt->second.front().second;
      Integer b = v[pos].second;
      Integer g;
      mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      a /= g;
      b /= g;
      v = combine(v, a, jt->second, b);
    }
    const Integer g = content(v);
    if (g > 1)
      for (auto& [c, x] : v) x /= g;
    done.emplace(it->first, std::move(v));
  }
  std::vector<RationalSparse> out;
  for (const auto& [c, v] : done) {
    RationalSparse r;
    const Integer& p = v.front().second;
    for (const auto& [col, x] : v) r.emplace_back(col, Rational(x) / p);
    out.push_back(std::move(r));
  }
  return out;
}

RationalSparse coordinates(const ExteriorElement& x, int dim_p) {
  RationalSparse out;
  for (const auto& [m, c] : x.terms()) out.emplace_back(static_cast<std::uint32_t>(component_index(dim_p, m)), c);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

ExteriorElement from_coordinates(const RationalSparse& v, int dim_p, std::pair<int, int> bidegree) {
  const auto basis = component_basis(dim_p, bidegree.first, bidegree.second);
  ExteriorElement x;
  for (const auto& [c, q] : v) x.add(basis.at(c), q);
  return x;
}

GradedSubspace span_reduce(const std::vector<ExteriorElement>& vectors, std::pair<int, int> bidegree, int dim_p) {
  GradedSubspace g;
  g.bidegree = bidegree;
  g.dim_p = dim_p;
  g.span = Echelon(component_basis(dim_p, bidegree.first, bidegree.second).size());
  for (const auto& v : vectors) {
    if (v.is_zero()) continue;
    if (v.bidegree() != bidegree) throw InvalidInput("span_reduce: element of the wrong bidegree");
    g.span.insert(coordinates(v, dim_p));
  }
  return g;
}

Echelon kernel_of_operators(const std::vector<RationalMatrix>& ops, std::size_t dim) {
  RationalMatrix stacked;
  for (const auto& m : ops) {
    if (m.size() != dim) throw InvalidInput("kernel_of_operators: operator has the wrong size");
    for (const auto& row : m) {
      if (row.size() != dim) throw InvalidInput("kernel_of_operators: operator is not square");
      stacked.push_back(row);
    }
  }
  Echelon k(dim);
  if (stacked.empty()) {
    for (std::uint32_t i = 0; i < dim; ++i) k.insert(RationalSparse{{i, Rational(1)}});
    return k;
  }
  for (const auto& v : null_space(stacked, dim)) k.insert(to_sparse(v));
  return k;
}

std::vector<RationalSparse> kernel_from_columns(const std::vector<RationalSparse>& columns, std::size_t rows) {
  const std::size_t n = columns.size();
  Echelon e(rows + n);
  for (std::size_t c = 0; c < n; ++c) {
    RationalSparse v = columns[c];
    v.emplace_back(static_cast<std::uint32_t>(rows + c), Rational(1));
    e.insert(v);
  }
  std::vector<RationalSparse> out;
  for (const auto& r : e.reduced_rows()) {
    if (r.front().first < rows) continue;
    RationalSparse k;
    for (const auto& [c, x] : r) k.emplace_back(c - static_cast<std::uint32_t>(rows), x);
    out.push_back(std::move(k));
  }
  return out;
}

std::size_t quotient_rank(const GradedSubspace& ideal, const std::vector<ExteriorElement>& candidates) {
  Echelon e = ideal.span;
  const std::size_t before = e.rank();
  for (const auto& c : candidates) {
    if (c.is_zero()) continue;
    if (c.bidegree() != ideal.bidegree) throw InvalidInput("quotient_rank: candidate of the wrong bidegree");
    e.insert(coordinates(c, ideal.dim_p));
  }
  return e.rank() - before;
}

}  // namespace sympair
