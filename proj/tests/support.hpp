#pragma once

#include "sympair/exterior.hpp"
#include "sympair/symmetric_pair.hpp"

#include <random>

namespace sympair::testing {

// Coefficient matrix of a (1,1) element: C[a][l] at e_a^(1) e_l^(2).
inline RationalMatrix matrix_of(const ExteriorElement& x, int n) {
  RationalMatrix c(n, RationalVector(n));
  for (const auto& [m, q] : x.terms()) {
    const int a = __builtin_ctzll(m.mask1), l = __builtin_ctzll(m.mask2);
    c[a][l] = q;
  }
  return c;
}

inline RationalMatrix transform(const RationalMatrix& t, const RationalMatrix& c) {
  // t c t^T
  const std::size_t n = t.size();
  RationalMatrix out(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t a = 0; a < n; ++a) {
        if (t[i][a] == 0) continue;
        for (std::size_t l = 0; l < n; ++l)
          if (t[k][l] != 0) out[i][k] += t[i][a] * c[a][l] * t[k][l];
      }
  return out;
}

// Same pair with p basis e'_j = sum_i t[i][j] e_i and a dual basis from the Gram matrix.
inline SymmetricPair rebased(const SymmetricPair& sp, const RationalMatrix& t) {
  SymmetricPair out = sp;
  const int n = sp.dim_p(), g = sp.dim_g();
  for (int j = 0; j < n; ++j) {
    RationalVector v(g);
    for (int i = 0; i < n; ++i)
      if (t[i][j] != 0)
        for (int c = 0; c < g; ++c) v[c] += t[i][j] * sp.p_basis[i][c];
    out.p_basis[j] = v;
  }
  RationalMatrix gram(n, RationalVector(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gram[i][j] = sp.table.pair(out.p_basis[i], out.p_basis[j]);
  const RationalMatrix gi = inverse(gram);
  for (int j = 0; j < n; ++j) {
    RationalVector f(g);
    for (int l = 0; l < n; ++l) {
      out.p_dual_coords[j][l] = gi[l][j];
      for (int c = 0; c < g; ++c) f[c] += gi[l][j] * out.p_basis[l][c];
    }
    out.p_dual_basis[j] = f;
  }
  return out;
}

inline ExteriorElement random_element(std::mt19937& rng, int n, int p, int q, int terms) {
  const auto basis = component_basis(n, p, q);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  ExteriorElement x;
  for (int t = 0; t < terms; ++t) x.add(basis[pick(rng)], coef(rng));
  return x;
}

}  // namespace sympair::testing
