#pragma once

#include <random>

#include "zinbiel/algebra.hpp"
#include "zinbiel/matrix.hpp"

namespace zinbiel::testing {

inline Rational random_rational(std::mt19937& rng, int num_range = 9, int den_range = 4) {
  std::uniform_int_distribution<int> num(-num_range, num_range);
  std::uniform_int_distribution<int> den(1, den_range);
  return rational_of(num(rng), den(rng));
}

inline MatrixQ random_matrix(std::mt19937& rng, int rows, int cols, int zero_percent = 30) {
  std::uniform_int_distribution<int> pct(0, 99);
  MatrixQ m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      if (pct(rng) >= zero_percent) m.at(r, c) = random_rational(rng);
  return m;
}

/// Dense random structure constants, integer entries in [-3, 3] \ {0}.
inline AlgebraPresentation random_dense_algebra(std::mt19937& rng, int n) {
  AlgebraPresentation a("random-dense-" + std::to_string(n), n);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        int v = entry(rng);
        while (v == 0) v = entry(rng);
        a.gamma_at(i, j, k) = v;
      }
  return a;
}

/// Sparse random structure constants: at most `products` nonzero basis
/// products, each a single scaled basis vector.
inline AlgebraPresentation random_sparse_algebra(std::mt19937& rng, int n, int products) {
  AlgebraPresentation a("random-sparse-" + std::to_string(n), n);
  std::uniform_int_distribution<int> idx(0, n - 1);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int t = 0; t < products; ++t) {
    const int i = idx(rng), j = idx(rng), k = idx(rng);
    int v = entry(rng);
    while (v == 0) v = entry(rng);
    a.gamma_at(i, j, k) = v;
  }
  return a;
}

}  // namespace zinbiel::testing
