#pragma once

#include <random>

#include "galcoh/descriptor.hpp"

namespace galcoh::testing {

inline IntegerMatrix random_matrix(std::mt19937& rng, int rows, int cols, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  IntegerMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = d(rng);
  return m;
}

/// Random unimodular matrix together with its inverse, built from
/// elementary operations.
inline std::pair<IntegerMatrix, IntegerMatrix> random_unimodular(std::mt19937& rng, int n,
                                                                 int steps = 12) {
  IntegerMatrix g = IntegerMatrix::identity(n);
  IntegerMatrix ginv = IntegerMatrix::identity(n);
  if (n < 2) return {g, ginv};
  std::uniform_int_distribution<int> idx(0, n - 1), coef(-2, 2), kind(0, 2);
  for (int s = 0; s < steps; ++s) {
    int i = idx(rng), j = idx(rng);
    if (i == j) continue;
    switch (kind(rng)) {
      case 0: {  // row_i += c * row_j  (inverse: row_i -= c * row_j)
        int c = coef(rng);
        for (int k = 0; k < n; ++k) g.at(i, k) += c * g.at(j, k);
        for (int k = 0; k < n; ++k) ginv.at(k, j) -= c * ginv.at(k, i);
        break;
      }
      case 1:
        g.swap_rows(i, j);
        ginv.swap_cols(i, j);
        break;
      default:
        for (int k = 0; k < n; ++k) g.at(i, k) = -g.at(i, k);
        for (int k = 0; k < n; ++k) ginv.at(k, i) = -ginv.at(k, i);
        break;
    }
  }
  return {g, ginv};
}

/// Naive determinant by Laplace expansion (independent of the SNF code).
inline Int naive_det(const IntegerMatrix& m) {
  int n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m.at(0, 0);
  Int det = 0;
  for (int j = 0; j < n; ++j) {
    if (m.at(0, j) == 0) continue;
    IntegerMatrix minor(n - 1, n - 1);
    for (int r = 1; r < n; ++r) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == j) continue;
        minor.at(r - 1, cc++) = m.at(r, c);
      }
    }
    Int term = m.at(0, j) * naive_det(minor);
    if (j % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

/// The same descriptor in a different presentation of M: generators changed
/// by the unimodular g.
inline QuasiConnectedDescriptor change_presentation(const QuasiConnectedDescriptor& desc,
                                                    const IntegerMatrix& g,
                                                    const IntegerMatrix& ginv) {
  QuasiConnectedDescriptor d = desc;
  d.M.group = FgAbGroup(desc.M.group.ambient_rank(), g * desc.M.group.relations());
  d.M.sigma = g * desc.M.sigma * ginv;
  d.p = desc.p * ginv;
  d.root_lifts.clear();
  for (const IntVec& v : desc.root_lifts) d.root_lifts.push_back(g.apply(v));
  for (IntegerMatrix& w : d.family.w0_gens) w = g * w * ginv;
  if (!d.family.delta.empty()) {
    // delta is written in coordinates dual to the H^1 basis, which depends on
    // the presentation; transport it by the inverse transpose of the induced
    // map of g
    F2Space h_old = h1_gamma(desc.M), h_new = h1_gamma(d.M);
    auto f = h1_functorial(desc.M, d.M, g, h_old, h_new);
    const int n = static_cast<int>(f.size());
    // invert F (F[k][i] = f[i][k]) over F2; augmented elimination
    std::vector<std::vector<int>> a(n, std::vector<int>(2 * n, 0));
    for (int k = 0; k < n; ++k) {
      for (int i = 0; i < n; ++i) a[k][i] = f[i][k];
      a[k][n + k] = 1;
    }
    for (int col = 0; col < n; ++col) {
      int piv = col;
      while (piv < n && !a[piv][col]) ++piv;
      std::swap(a[col], a[piv]);
      for (int r = 0; r < n; ++r)
        if (r != col && a[r][col])
          for (int c = 0; c < 2 * n; ++c) a[r][c] ^= a[col][c];
    }
    for (std::vector<int>& row : d.family.delta) {
      std::vector<int> moved(n, 0);
      for (int k = 0; k < n; ++k)  // moved = Finv^T row
        for (int i = 0; i < n; ++i) moved[k] ^= a[i][n + k] & row[i];
      row = std::move(moved);
    }
  }
  return d;
}

}  // namespace galcoh::testing
