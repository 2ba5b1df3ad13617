#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cpsdlab/graph.hpp"
#include "cpsdlab/matcore.hpp"

namespace cpsdlab {

inline constexpr double kDefaultVerifyTol = 1e-8;
inline constexpr int kDefaultHadamardCap = 20;

/// Hermitian psd matrices P_1..P_n of a common size d; they certify
/// X_ij = Tr(P_i P_j) for X = gram().
class CpsdFactorization {
 public:
  explicit CpsdFactorization(std::vector<HermMatrix> factors, double psd_tol = kDefaultPsdTol);

  Index d() const { return factors_.front().size(); }
  std::size_t size() const { return factors_.size(); }
  const std::vector<HermMatrix>& factors() const { return factors_; }
  const HermMatrix& operator[](std::size_t i) const { return factors_[i]; }

  RealMatrix gram() const;

 private:
  std::vector<HermMatrix> factors_;
};

struct VerifyReport {
  bool ok = false;
  bool factors_psd = false;
  double max_deviation = 0.0;
};

VerifyReport verify_factorization(const RealMatrix& x, const CpsdFactorization& f,
                                  double tol = kDefaultVerifyTol);

// (sum_i sqrt(X_ii))^2 / sum_ij X_ij for entrywise nonnegative X.
double analytic_lower_bound(const RealMatrix& x);

// Best analytic bound over positive diagonal rescalings D X D, found by
// coordinate-wise multiplicative updates starting from D = I.
double scaled_analytic_bound(const RealMatrix& x, int iters = 50);

// sqrt(rank X); X must be symmetric psd.
double rank_lower_bound(const RealMatrix& x);

/// Smallest integer not below `value`, forgiving round-off just above an integer.
int certified_ceiling(double value);

/// 2^floor((rank + 1) / 2), the factor size reachable from a Gram-Lorentz
/// factorization of a rank-`rank` matrix.
int gram_lorentz_size_bound(int rank);

CpsdFactorization scale(const CpsdFactorization& f, const RealVector& diag);
// Output factor k is input factor perm[k], which certifies P X P^T.
CpsdFactorization permute(const CpsdFactorization& f, std::span<const int> perm);
// Factors P_i (+) Q_i; certifies X + Y.
CpsdFactorization add(const CpsdFactorization& f, const CpsdFactorization& g);
// Factors P_i (+) 0 followed by 0 (+) Q_j; certifies X (+) Y.
CpsdFactorization dsum(const CpsdFactorization& f, const CpsdFactorization& g);

struct HadamardRoot {
  RealMatrix signs;  // symmetric, entries +-1, positive diagonal
  RealMatrix root;   // signs o sqrt(X), psd
};

/// Searches symmetric sign patterns on the off-diagonal support of X in
/// lexicographic order (+ before -, row-major upper triangle) and returns the
/// first whose signed entrywise square root is psd.
std::optional<HadamardRoot> hadamard_sqrt_psd(const RealMatrix& x, int cap = kDefaultHadamardCap);

/// Rank-one factors x_i x_i^T from a Gram factorization of a psd root R;
/// certifies R o R with factor size rank(R).
CpsdFactorization rank_one_factorization(const RealMatrix& root);

struct SupportWitness {
  CpsdFactorization factorization;
  int bound = 0;         // n - multiplicity
  double tau = 0.0;      // least adjacency eigenvalue
  int multiplicity = 0;
};

/// Projectors onto the Gram vectors of A - tau I. Factors u and v are
/// orthogonal exactly when u and v are non-adjacent.
SupportWitness support_bound_witness(const Graph& g);

struct BoundReport {
  double lower_analytic = 0.0;
  std::optional<double> lower_scaled;
  double lower_rank = 0.0;
  int lower_combined_int = 0;
  std::optional<int> upper;
  std::string upper_provenance;
};

BoundReport bound_report(const RealMatrix& x, bool scale_search = false, int scale_iters = 50);

// Attaches `f` as an upper bound when it verifies against x; returns the
// verification outcome either way.
VerifyReport attach_upper_bound(BoundReport& report, const RealMatrix& x,
                                const CpsdFactorization& f, const std::string& provenance,
                                double tol = kDefaultVerifyTol);

}  // namespace cpsdlab
