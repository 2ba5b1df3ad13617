#pragma once

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <vector>

#include "cpsdlab/matcore.hpp"

namespace testing_support {

// CPSDLAB_SEED pins the randomized tests; the default keeps runs reproducible.
inline std::uint64_t seed() {
  if (const char* s = std::getenv("CPSDLAB_SEED")) return std::strtoull(s, nullptr, 10);
  return 20240611ULL;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(seed());
  return engine;
}

inline cpsdlab::RealVector gaussian_vector(cpsdlab::Index n) {
  std::normal_distribution<double> dist(0.0, 1.0);
  cpsdlab::RealVector v(n);
  for (cpsdlab::Index i = 0; i < n; ++i) v(i) = dist(rng());
  return v;
}

inline double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline cpsdlab::RealMatrix gaussian_matrix(cpsdlab::Index rows, cpsdlab::Index cols) {
  cpsdlab::RealMatrix m(rows, cols);
  for (cpsdlab::Index j = 0; j < cols; ++j) m.col(j) = gaussian_vector(rows);
  return m;
}

// Gram of nonnegative vectors: psd and entrywise nonnegative.
inline cpsdlab::RealMatrix random_dnn(cpsdlab::Index n, cpsdlab::Index k) {
  cpsdlab::RealMatrix b = gaussian_matrix(k, n).cwiseAbs();
  return b.transpose() * b;
}

inline cpsdlab::ComplexMatrix random_hermitian(cpsdlab::Index n) {
  cpsdlab::ComplexMatrix m(n, n);
  for (cpsdlab::Index i = 0; i < n; ++i)
    for (cpsdlab::Index j = 0; j < n; ++j) m(i, j) = {uniform(-1, 1), uniform(-1, 1)};
  return (m + m.adjoint()) / 2.0;
}

// Example with five 4x4 psd factors, their Gram matrix and a known factorization.
inline cpsdlab::RealMatrix example_five_matrix() {
  cpsdlab::RealMatrix x(5, 5);
  x << 2, 0, 0, 1, 1,
       0, 2, 0, 1, 1,
       0, 0, 2, 1, 1,
       1, 1, 1, 3, 0,
       1, 1, 1, 0, 3;
  return x;
}

inline std::vector<cpsdlab::HermMatrix> example_five_factors() {
  using cpsdlab::RealMatrix;
  const double r2 = std::sqrt(2.0);
  const double h = 1.0 / r2;
  RealMatrix p1 = RealMatrix::Zero(4, 4), p2 = p1, p3 = p1, p4 = p1, p5 = p1;
  p1(0, 0) = r2;
  p2(1, 1) = 1;
  p2(2, 2) = 1;
  p3(3, 3) = r2;
  p4(0, 0) = h;
  p4(0, 3) = h;
  p4(3, 0) = h;
  p4(3, 3) = h;
  p4(1, 1) = 1;
  p5(0, 0) = h;
  p5(0, 3) = -h;
  p5(3, 0) = -h;
  p5(3, 3) = h;
  p5(2, 2) = 1;
  return {cpsdlab::HermMatrix(p1), cpsdlab::HermMatrix(p2), cpsdlab::HermMatrix(p3),
          cpsdlab::HermMatrix(p4), cpsdlab::HermMatrix(p5)};
}

}  // namespace testing_support
