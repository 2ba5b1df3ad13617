#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace cpsdlab {

using Complex = std::complex<double>;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using Index = Eigen::Index;

// Eigenvalue thresholds are relative to max(1, |lambda_max|).
inline constexpr double kDefaultPsdTol = 1e-9;
inline constexpr double kDefaultRankTol = 1e-8;
// Largest asymmetry absorbed by symmetrization, relative to max(1, max|entry|).
inline constexpr double kHermitianTol = 1e-12;

/// Dense square complex Hermitian matrix.
///
/// Construction from an arbitrary complex matrix symmetrizes (X + X*)/2 when
/// the asymmetry is within kHermitianTol and throws InvalidInput otherwise, so
/// every live value is exactly Hermitian with a real diagonal.
class HermMatrix {
 public:
  HermMatrix() = default;
  explicit HermMatrix(const ComplexMatrix& m);
  explicit HermMatrix(const RealMatrix& m);

  static HermMatrix zero(Index n);
  static HermMatrix identity(Index n);

  Index size() const { return m_.rows(); }
  const ComplexMatrix& matrix() const { return m_; }
  Complex operator()(Index i, Index j) const { return m_(i, j); }

  // The entrywise transpose of a Hermitian matrix is its conjugate.
  HermMatrix transpose() const;
  RealMatrix real() const { return m_.real(); }
  RealMatrix imag() const { return m_.imag(); }

  friend HermMatrix operator+(const HermMatrix& a, const HermMatrix& b);
  friend HermMatrix operator-(const HermMatrix& a, const HermMatrix& b);
  friend HermMatrix operator*(double s, const HermMatrix& a);

 private:
  struct Exact {};
  HermMatrix(Exact, ComplexMatrix m) : m_(std::move(m)) {}

  ComplexMatrix m_;
};

struct SpectralReport {
  std::vector<double> eigenvalues;  // ascending
  int rank = 0;
  bool is_psd = true;
  // Absolute threshold used for the rank count.
  double tolerance_used = 0.0;

  double lambda_min() const { return eigenvalues.empty() ? 0.0 : eigenvalues.front(); }
  double lambda_max() const { return eigenvalues.empty() ? 0.0 : eigenvalues.back(); }
};

SpectralReport spectral(const HermMatrix& x, double rank_tol = kDefaultRankTol,
                        double psd_tol = kDefaultPsdTol);
// Real symmetric input; asymmetry beyond kHermitianTol is an error.
SpectralReport spectral(const RealMatrix& x, double rank_tol = kDefaultRankTol,
                        double psd_tol = kDefaultPsdTol);

inline bool is_psd(const HermMatrix& x, double psd_tol = kDefaultPsdTol) {
  return spectral(x, kDefaultRankTol, psd_tol).is_psd;
}
inline bool is_psd(const RealMatrix& x, double psd_tol = kDefaultPsdTol) {
  return spectral(x, kDefaultRankTol, psd_tol).is_psd;
}
inline int numerical_rank(const RealMatrix& x, double rank_tol = kDefaultRankTol) {
  return spectral(x, rank_tol).rank;
}

/// Gram matrix <v_i, v_j>, conjugate-linear in the first argument.
HermMatrix gram(std::span<const RealVector> vectors);
HermMatrix gram(std::span<const ComplexVector> vectors);
RealMatrix real_gram(std::span<const RealVector> vectors);

/// Vectors u_1..u_n in R^rank(X) with Gram(u) = X, from the eigendecomposition
/// of a real symmetric psd X. Throws InvalidInput when X is not psd.
std::vector<RealVector> gram_vectors(const RealMatrix& x, double rank_tol = kDefaultRankTol);

HermMatrix kron(const HermMatrix& a, const HermMatrix& b);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

HermMatrix direct_sum(const HermMatrix& a, const HermMatrix& b);
RealMatrix direct_sum(const RealMatrix& a, const RealMatrix& b);

/// Hilbert-Schmidt inner product Tr(A B*) of two Hermitian matrices.
double trace_inner(const HermMatrix& a, const HermMatrix& b);
double frobenius_inner(const RealMatrix& a, const RealMatrix& b);

/// T(X) = (1/sqrt 2) [[Re X, -Im X], [Im X, Re X]].
RealMatrix real_embed(const HermMatrix& x);

bool is_symmetric(const RealMatrix& x, double tol = kHermitianTol);
double max_abs_deviation(const RealMatrix& a, const RealMatrix& b);

}  // namespace cpsdlab
