#include "sympair/rational.hpp"

#include <utility>

namespace sympair {

namespace {

// In-place reduced row echelon form; pivots are searched in the first `cols`
// columns, row operations apply to the whole row.  Returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    const Rational piv = m[row][col];
    const std::size_t width = m[row].size();
    for (std::size_t j = col; j < width; ++j) m[row][j] /= piv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t j = col; j < width; ++j) {
        if (m[row][j] != 0) m[r][j] -= f * m[row][j];
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

RationalVector solve_linear(RationalMatrix m, RationalVector b) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw InvalidInput("solve_linear: matrix not square");
    m[i].push_back(b.at(i));
  }
  auto pivots = rref(m, n);
  if (pivots.size() != n) throw Error("solve_linear: singular matrix");
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n];
  return x;
}

RationalMatrix inverse(const RationalMatrix& m) {
  const std::size_t n = m.size();
  RationalMatrix aug(n, RationalVector(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw InvalidInput("inverse: matrix not square");
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  auto pivots = rref(aug, n);
  if (pivots.size() != n) throw Error("inverse: singular matrix");
  RationalMatrix inv(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

std::vector<RationalVector> null_space(const RationalMatrix& m, std::size_t cols) {
  RationalMatrix work = m;
  for (auto& row : work) row.resize(cols);
  auto pivots = rref(work, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(cols);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -work[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t matrix_rank(const RationalMatrix& m) {
  if (m.empty()) return 0;
  RationalMatrix work = m;
  return rref(work, work.front().size()).size();
}

}  // namespace sympair
