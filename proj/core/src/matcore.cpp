#include "cpsdlab/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cpsdlab/error.hpp"

namespace cpsdlab {
namespace {

double entry_scale(const ComplexMatrix& m) {
  return std::max(1.0, m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff());
}

template <typename Matrix>
SpectralReport report_from(const Eigen::SelfAdjointEigenSolver<Matrix>& solver,
                           double rank_tol, double psd_tol) {
  if (solver.info() != Eigen::Success) {
    fail(ErrorKind::Numerical, "Hermitian eigensolver did not converge");
  }
  SpectralReport rep;
  const auto& ev = solver.eigenvalues();
  rep.eigenvalues.assign(ev.data(), ev.data() + ev.size());
  std::sort(rep.eigenvalues.begin(), rep.eigenvalues.end());
  const double top = rep.eigenvalues.empty()
                         ? 0.0
                         : std::max(std::abs(rep.eigenvalues.front()),
                                    std::abs(rep.eigenvalues.back()));
  const double scale = std::max(1.0, top);
  rep.tolerance_used = rank_tol * scale;
  rep.rank = static_cast<int>(std::count_if(
      rep.eigenvalues.begin(), rep.eigenvalues.end(),
      [&](double l) { return l > rep.tolerance_used; }));
  rep.is_psd = rep.eigenvalues.empty() || rep.lambda_min() >= -psd_tol * scale;
  return rep;
}

}  // namespace

HermMatrix::HermMatrix(const ComplexMatrix& m) {
  require(m.rows() == m.cols(), "Hermitian matrix must be square");
  const double asym = m.size() == 0 ? 0.0 : (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (asym > kHermitianTol * entry_scale(m)) {
    fail(ErrorKind::InvalidInput,
         "matrix is not Hermitian (asymmetry " + std::to_string(asym) + ")");
  }
  m_ = (m + m.adjoint()) / 2.0;
}

HermMatrix::HermMatrix(const RealMatrix& m) : HermMatrix(ComplexMatrix(m.cast<Complex>())) {}

HermMatrix HermMatrix::zero(Index n) { return {Exact{}, ComplexMatrix::Zero(n, n)}; }

HermMatrix HermMatrix::identity(Index n) { return {Exact{}, ComplexMatrix::Identity(n, n)}; }

HermMatrix HermMatrix::transpose() const { return {Exact{}, m_.conjugate()}; }

HermMatrix operator+(const HermMatrix& a, const HermMatrix& b) {
  require(a.size() == b.size(), "size mismatch in Hermitian sum");
  return {HermMatrix::Exact{}, a.m_ + b.m_};
}

HermMatrix operator-(const HermMatrix& a, const HermMatrix& b) {
  require(a.size() == b.size(), "size mismatch in Hermitian difference");
  return {HermMatrix::Exact{}, a.m_ - b.m_};
}

HermMatrix operator*(double s, const HermMatrix& a) { return {HermMatrix::Exact{}, s * a.m_}; }

SpectralReport spectral(const HermMatrix& x, double rank_tol, double psd_tol) {
  require(rank_tol > 0 && psd_tol > 0, "spectral tolerances must be positive");
  if (x.size() == 0) return {};
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(x.matrix(), Eigen::EigenvaluesOnly);
  return report_from(solver, rank_tol, psd_tol);
}

SpectralReport spectral(const RealMatrix& x, double rank_tol, double psd_tol) {
  require(rank_tol > 0 && psd_tol > 0, "spectral tolerances must be positive");
  require(x.rows() == x.cols(), "spectral test needs a square matrix");
  require(is_symmetric(x), "spectral test needs a symmetric matrix");
  if (x.size() == 0) return {};
  RealMatrix sym = (x + x.transpose()) / 2.0;
  Eigen::SelfAdjointEigenSolver<RealMatrix> solver(sym, Eigen::EigenvaluesOnly);
  return report_from(solver, rank_tol, psd_tol);
}

namespace {

template <typename Vec>
ComplexMatrix gram_impl(std::span<const Vec> vectors) {
  require(!vectors.empty(), "Gram matrix of an empty family");
  const Index len = vectors.front().size();
  for (const auto& v : vectors) {
    require(v.size() == len, "Gram matrix of vectors with ragged lengths");
  }
  const auto n = static_cast<Index>(vectors.size());
  ComplexMatrix g(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = i; j < n; ++j) {
      Complex ip = vectors[i].template cast<Complex>().dot(vectors[j].template cast<Complex>());
      g(i, j) = ip;
      g(j, i) = std::conj(ip);
    }
    g(i, i) = g(i, i).real();
  }
  return g;
}

}  // namespace

HermMatrix gram(std::span<const RealVector> vectors) {
  return HermMatrix(gram_impl(vectors));
}

HermMatrix gram(std::span<const ComplexVector> vectors) {
  return HermMatrix(gram_impl(vectors));
}

RealMatrix real_gram(std::span<const RealVector> vectors) {
  require(!vectors.empty(), "Gram matrix of an empty family");
  const Index len = vectors.front().size();
  for (const auto& v : vectors) {
    require(v.size() == len, "Gram matrix of vectors with ragged lengths");
  }
  const auto n = static_cast<Index>(vectors.size());
  RealMatrix g(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = i; j < n; ++j) {
      g(i, j) = g(j, i) = vectors[i].dot(vectors[j]);
    }
  }
  return g;
}

std::vector<RealVector> gram_vectors(const RealMatrix& x, double rank_tol) {
  require(x.rows() == x.cols() && x.rows() > 0, "Gram factor needs a nonempty square matrix");
  require(is_symmetric(x), "Gram factor needs a symmetric matrix");
  RealMatrix sym = (x + x.transpose()) / 2.0;
  Eigen::SelfAdjointEigenSolver<RealMatrix> solver(sym);
  SpectralReport rep = report_from(solver, rank_tol, kDefaultPsdTol);
  require(rep.is_psd, "Gram factor needs a positive semidefinite matrix");

  // Eigen orders eigenvalues ascending; keep the top `rank` columns.
  const Index n = x.rows();
  const Index r = rep.rank;
  RealMatrix basis = solver.eigenvectors().rightCols(r);
  RealVector roots = solver.eigenvalues().tail(r).cwiseMax(0.0).cwiseSqrt();
  RealMatrix factor = basis * roots.asDiagonal();
  std::vector<RealVector> out;
  out.reserve(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) out.emplace_back(factor.row(i).transpose());
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

HermMatrix kron(const HermMatrix& a, const HermMatrix& b) {
  return HermMatrix(kron(a.matrix(), b.matrix()));
}

HermMatrix direct_sum(const HermMatrix& a, const HermMatrix& b) {
  ComplexMatrix out = ComplexMatrix::Zero(a.size() + b.size(), a.size() + b.size());
  out.topLeftCorner(a.size(), a.size()) = a.matrix();
  out.bottomRightCorner(b.size(), b.size()) = b.matrix();
  return HermMatrix(out);
}

RealMatrix direct_sum(const RealMatrix& a, const RealMatrix& b) {
  RealMatrix out = RealMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

double trace_inner(const HermMatrix& a, const HermMatrix& b) {
  require(a.size() == b.size(), "trace inner product of matrices with different sizes");
  // Tr(A B*) = sum_ij A_ij conj(B_ij)
  const Complex t = (a.matrix().array() * b.matrix().array().conjugate()).sum();
  if (std::abs(t.imag()) > 1e-10 * std::max(1.0, std::abs(t.real()))) {
    fail(ErrorKind::Numerical, "trace inner product has a non-negligible imaginary part");
  }
  return t.real();
}

double frobenius_inner(const RealMatrix& a, const RealMatrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "Frobenius inner product shape mismatch");
  return (a.array() * b.array()).sum();
}

RealMatrix real_embed(const HermMatrix& x) {
  const Index n = x.size();
  RealMatrix t(2 * n, 2 * n);
  const RealMatrix re = x.real();
  const RealMatrix im = x.imag();
  t.topLeftCorner(n, n) = re;
  t.topRightCorner(n, n) = -im;
  t.bottomLeftCorner(n, n) = im;
  t.bottomRightCorner(n, n) = re;
  return t / std::sqrt(2.0);
}

bool is_symmetric(const RealMatrix& x, double tol) {
  if (x.rows() != x.cols()) return false;
  if (x.size() == 0) return true;
  const double scale = std::max(1.0, x.cwiseAbs().maxCoeff());
  return (x - x.transpose()).cwiseAbs().maxCoeff() <= tol * scale;
}

double max_abs_deviation(const RealMatrix& a, const RealMatrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "shape mismatch");
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace cpsdlab
