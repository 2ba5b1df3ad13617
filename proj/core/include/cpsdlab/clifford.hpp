#pragma once

#include <vector>

#include "cpsdlab/matcore.hpp"

namespace cpsdlab {

// Largest source dimension whose generators are materialized densely
// (n = 18 gives d = 512, about 4 MiB per generator).
inline constexpr int kDefaultCliffordCap = 18;

/// Size of the Clifford representation of R^n: 2^floor(n/2), and 2 for n = 1
/// (a 1x1 generator cannot be traceless).
Index clifford_dimension(int n);

const HermMatrix& pauli_i();
const HermMatrix& pauli_x();
const HermMatrix& pauli_y();
const HermMatrix& pauli_z();

/// Generators gamma(e_1..e_n) as dense d x d Hermitian matrices built from
/// Pauli tensor words: Z^(i-1) (x) X (x) I^(l-i) for i <= l, the same words
/// with Y for the next l, and Z^l last when n = 2l + 1. They are traceless,
/// square to the identity and pairwise anticommute.
class CliffordBasis {
 public:
  int n() const { return static_cast<int>(generators_.size()); }
  Index d() const { return d_; }
  const std::vector<HermMatrix>& generators() const { return generators_; }
  const HermMatrix& generator(int i) const { return generators_.at(static_cast<std::size_t>(i)); }

 private:
  friend CliffordBasis clifford_basis(int n, int cap);
  CliffordBasis(Index d, std::vector<HermMatrix> gens) : d_(d), generators_(std::move(gens)) {}

  Index d_ = 1;
  std::vector<HermMatrix> generators_;
};

CliffordBasis clifford_basis(int n, int cap = kDefaultCliffordCap);

/// gamma(x) = sum_i x_i gamma(e_i).
HermMatrix gamma(const CliffordBasis& basis, const RealVector& x);

}  // namespace cpsdlab
