#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cpsdlab/graph.hpp"
#include "cpsdlab/lorentz.hpp"
#include "cpsdlab/matcore.hpp"

namespace cpsdlab {

inline constexpr double kCertificateTol = 1e-9;
inline constexpr double kSupportTol = 1e-10;
inline constexpr int kGraphSearchCap = 24;

struct CertificateCheck {
  std::string name;
  bool passed = false;
  double value = 0.0;     // the measured quantity
  double residual = 0.0;  // amount by which the condition is violated
};

/// Evidence that Gram(F) is doubly nonnegative but not completely positive:
/// paired vectors with a common nonzero midpoint c, orthogonal partners, an
/// odd subset J summing to |J| c, and nonnegative inner products.
struct NotCpCertificate {
  std::vector<std::pair<int, int>> pairs;
  RealVector center;
  std::vector<int> odd_subset;  // vector indices, at most one per pair
  std::vector<CertificateCheck> checks;
  bool valid = false;
};

/// Throws InvalidInput when the pairs do not partition the vectors, when J is
/// even, repeats a pair or is out of range, and when the midpoint is zero.
NotCpCertificate check_not_cp(const std::vector<RealVector>& vectors,
                              const std::vector<std::pair<int, int>>& pairs,
                              const std::vector<int>& odd_subset);

/// p_k = (1, cos(2 pi k / n), sin(2 pi k / n)) for n = 2l with l odd, l >= 3.
GramLorentzFactorization cycle_vectors(int n);
// Partners (k, k + l) for k < l.
std::vector<std::pair<int, int>> cycle_pairs(int n);
// Even indices 0, 2, ..., n - 2; they sum to l (1, 0, 0).
std::vector<int> cycle_odd_subset(int n);

/// Evidence that a DNN matrix has no factorization by positive elements of a
/// tracial von Neumann algebra, hence lies outside the closure of CS+.
struct NotVnaCertificate {
  std::vector<int> subset_i;
  std::vector<int> subset_j;
  int i_star = 0;
  int j_star = 0;
  std::vector<CertificateCheck> checks;
  bool valid = false;
};

NotVnaCertificate check_not_vna(const RealMatrix& x, const std::vector<int>& subset_i,
                                const std::vector<int>& subset_j, int i_star, int j_star);

/// A_t - lambda_t I for the cycle C_(2t+1), lambda_t = 2 cos(2 pi t / (2t+1)).
RealMatrix odd_cycle_dnn(int t);

struct VnaIndexSets {
  std::vector<int> subset_i;
  std::vector<int> subset_j;
  int i_star = 0;
  int j_star = 0;
};

/// I = V \ {1, n-1}, J = V \ {0, 2}, i* = 0, j* = 1 (0-based) for C_(2t+1).
VnaIndexSets odd_cycle_index_sets(int t);

Graph support_graph(const RealMatrix& x, double tol = kSupportTol);

struct CpsdGraphResult {
  bool cpsd = true;
  std::vector<int> witness;  // an odd cycle of length >= 5 when !cpsd
};

/// A graph is cpsd exactly when it has no odd cycle of length >= 5. The search
/// starts from the smallest vertex, visits neighbors in ascending order and
/// returns the first such cycle it closes.
CpsdGraphResult is_cpsd_graph(const Graph& g, int cap = kGraphSearchCap);

}  // namespace cpsdlab
