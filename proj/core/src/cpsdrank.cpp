#include "cpsdlab/cpsdrank.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>

#include "cpsdlab/error.hpp"

namespace cpsdlab {
namespace {

constexpr double kNegativeEntryTol = 1e-12;

void require_nonnegative(const RealMatrix& x, const char* what) {
  require(x.rows() == x.cols() && x.rows() > 0, std::string(what) + ": needs a nonempty square matrix");
  require(x.minCoeff() >= -kNegativeEntryTol, std::string(what) + ": matrix has negative entries");
}

double analytic_value(const RealVector& s, const RealMatrix& x, const RealVector& d) {
  const double num = d.dot(s);
  const double den = d.dot(x * d);
  return num * num / den;
}

}  // namespace

CpsdFactorization::CpsdFactorization(std::vector<HermMatrix> factors, double psd_tol)
    : factors_(std::move(factors)) {
  require(!factors_.empty(), "factorization needs at least one factor");
  const Index d = factors_.front().size();
  require(d > 0, "factorization needs factors of positive size");
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    require(factors_[i].size() == d, "factorization factors have different sizes");
    if (!spectral(factors_[i], kDefaultRankTol, psd_tol).is_psd) {
      fail(ErrorKind::InvalidInput, "factor " + std::to_string(i) + " is not psd");
    }
  }
}

RealMatrix CpsdFactorization::gram() const {
  const auto n = static_cast<Index>(factors_.size());
  RealMatrix g(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = i; j < n; ++j) {
      g(i, j) = g(j, i) = trace_inner(factors_[static_cast<std::size_t>(i)],
                                      factors_[static_cast<std::size_t>(j)]);
    }
  }
  return g;
}

VerifyReport verify_factorization(const RealMatrix& x, const CpsdFactorization& f, double tol) {
  require(x.rows() == x.cols(), "verification target must be square");
  require(static_cast<std::size_t>(x.rows()) == f.size(),
          "verification target size does not match the factor count");
  VerifyReport rep;
  rep.factors_psd = std::all_of(f.factors().begin(), f.factors().end(),
                                [](const HermMatrix& p) { return is_psd(p); });
  rep.max_deviation = max_abs_deviation(x, f.gram());
  rep.ok = rep.factors_psd && rep.max_deviation <= tol;
  return rep;
}

double analytic_lower_bound(const RealMatrix& x) {
  require_nonnegative(x, "analytic bound");
  const double total = x.sum();
  require(total > 0, "analytic bound: matrix entries sum to zero");
  const double roots = x.diagonal().cwiseMax(0.0).cwiseSqrt().sum();
  return roots * roots / total;
}

double scaled_analytic_bound(const RealMatrix& x, int iters) {
  const double base = analytic_lower_bound(x);
  const Index n = x.rows();
  const RealVector s = x.diagonal().cwiseMax(0.0).cwiseSqrt();
  RealVector d = RealVector::Ones(n);
  double best = base;

  for (int sweep = 0; sweep < iters; ++sweep) {
    const double start = best;
    for (Index i = 0; i < n; ++i) {
      if (s(i) <= 0.0) continue;
      // f(t) = (a + t s_i)^2 / (B + 2 t g + t^2 X_ii) with d_i = t.
      const double a = d.dot(s) - d(i) * s(i);
      const double g = x.row(i).dot(d) - x(i, i) * d(i);
      const double quad = d.dot(x * d) - 2.0 * d(i) * g - x(i, i) * d(i) * d(i);
      std::vector<double> candidates = {d(i) * 2.0, d(i) * 0.5, d(i) * 1.1, d(i) / 1.1};
      const double denom = s(i) * (g - a * s(i));
      if (std::abs(denom) > 1e-300) {
        candidates.push_back((a * g - s(i) * quad) / denom);
      }
      const double old = d(i);
      double best_t = old;
      for (double t : candidates) {
        if (!(t > 0.0) || !std::isfinite(t)) continue;
        d(i) = t;
        const double val = analytic_value(s, x, d);
        if (std::isfinite(val) && val > best * (1.0 + 1e-14)) {
          best = val;
          best_t = t;
        }
      }
      d(i) = best_t;
    }
    d /= d.maxCoeff();
    if (best <= start * (1.0 + 1e-12)) break;
  }
  return std::max(best, base);
}

double rank_lower_bound(const RealMatrix& x) {
  require(x.rows() == x.cols() && x.rows() > 0, "rank bound needs a nonempty square matrix");
  SpectralReport rep = spectral(x);
  require(rep.is_psd, "rank bound: matrix is not psd");
  return std::sqrt(static_cast<double>(rep.rank));
}

int certified_ceiling(double value) { return static_cast<int>(std::ceil(value - 1e-9)); }

int gram_lorentz_size_bound(int rank) {
  require(rank >= 0, "rank must be nonnegative");
  return 1 << ((rank + 1) / 2);
}

CpsdFactorization scale(const CpsdFactorization& f, const RealVector& diag) {
  require(static_cast<std::size_t>(diag.size()) == f.size(), "scale: diagonal length mismatch");
  require(diag.size() == 0 || diag.minCoeff() > 0, "scale: diagonal entries must be positive");
  std::vector<HermMatrix> out;
  out.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out.push_back(diag(static_cast<Index>(i)) * f[i]);
  return CpsdFactorization(std::move(out));
}

CpsdFactorization permute(const CpsdFactorization& f, std::span<const int> perm) {
  require(perm.size() == f.size(), "permute: permutation length mismatch");
  std::vector<bool> seen(f.size(), false);
  std::vector<HermMatrix> out;
  out.reserve(f.size());
  for (int p : perm) {
    require(p >= 0 && static_cast<std::size_t>(p) < f.size() && !seen[static_cast<std::size_t>(p)],
            "permute: not a permutation");
    seen[static_cast<std::size_t>(p)] = true;
    out.push_back(f[static_cast<std::size_t>(p)]);
  }
  return CpsdFactorization(std::move(out));
}

CpsdFactorization add(const CpsdFactorization& f, const CpsdFactorization& g) {
  require(f.size() == g.size(), "add: factorizations have different counts");
  std::vector<HermMatrix> out;
  out.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out.push_back(direct_sum(f[i], g[i]));
  return CpsdFactorization(std::move(out));
}

CpsdFactorization dsum(const CpsdFactorization& f, const CpsdFactorization& g) {
  const HermMatrix zero_f = HermMatrix::zero(f.d());
  const HermMatrix zero_g = HermMatrix::zero(g.d());
  std::vector<HermMatrix> out;
  out.reserve(f.size() + g.size());
  for (const auto& p : f.factors()) out.push_back(direct_sum(p, zero_g));
  for (const auto& q : g.factors()) out.push_back(direct_sum(zero_f, q));
  return CpsdFactorization(std::move(out));
}

std::optional<HadamardRoot> hadamard_sqrt_psd(const RealMatrix& x, int cap) {
  require_nonnegative(x, "Hadamard root");
  require(is_symmetric(x), "Hadamard root: matrix is not symmetric");
  const Index n = x.rows();
  const RealMatrix magnitude = x.cwiseMax(0.0).cwiseSqrt();

  std::vector<std::pair<Index, Index>> support;
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      if (magnitude(i, j) > 0.0) support.emplace_back(i, j);
  const auto k = static_cast<int>(support.size());
  if (k > cap) {
    fail(ErrorKind::CapExceeded, "Hadamard root: " + std::to_string(k) +
                                     " off-diagonal support entries exceed the cap " +
                                     std::to_string(cap));
  }

  RealMatrix signs = RealMatrix::Ones(n, n);
  RealMatrix root = magnitude;
  const std::uint64_t patterns = std::uint64_t{1} << k;
  for (std::uint64_t mask = 0; mask < patterns; ++mask) {
    for (int e = 0; e < k; ++e) {
      const double s = ((mask >> (k - 1 - e)) & 1U) ? -1.0 : 1.0;
      auto [i, j] = support[static_cast<std::size_t>(e)];
      signs(i, j) = signs(j, i) = s;
      root(i, j) = root(j, i) = s * magnitude(i, j);
    }
    Eigen::SelfAdjointEigenSolver<RealMatrix> solver(root, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) continue;
    const auto& ev = solver.eigenvalues();
    const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
    if (ev.minCoeff() >= -kDefaultPsdTol * scale) return HadamardRoot{signs, root};
  }
  return std::nullopt;
}

CpsdFactorization rank_one_factorization(const RealMatrix& root) {
  const std::vector<RealVector> vecs = gram_vectors(root);
  const Index r = vecs.front().size();
  std::vector<HermMatrix> out;
  out.reserve(vecs.size());
  for (const auto& v : vecs) {
    if (r == 0) {
      out.push_back(HermMatrix::zero(1));
    } else {
      out.emplace_back(RealMatrix(v * v.transpose()));
    }
  }
  return CpsdFactorization(std::move(out));
}

SupportWitness support_bound_witness(const Graph& g) {
  require(g.n() >= 1, "support witness needs at least one vertex");
  const int n = g.n();
  if (g.edges().empty()) {
    // A = 0: coordinate projectors are pairwise orthogonal.
    std::vector<HermMatrix> factors;
    for (int i = 0; i < n; ++i) {
      RealMatrix p = RealMatrix::Zero(n, n);
      p(i, i) = 1.0;
      factors.emplace_back(p);
    }
    return {CpsdFactorization(std::move(factors)), n, 0.0, n};
  }

  const RealMatrix a = g.adjacency();
  const SpectralReport rep = spectral(a);
  const double tau = rep.lambda_min();
  const double tol = kDefaultRankTol * std::max(1.0, std::abs(rep.lambda_max()));
  const auto mult = static_cast<int>(std::count_if(rep.eigenvalues.begin(), rep.eigenvalues.end(),
                                                   [&](double l) { return l - tau <= tol; }));

  const RealMatrix shifted = a - tau * RealMatrix::Identity(n, n);
  const std::vector<RealVector> vecs = gram_vectors(shifted);
  std::vector<HermMatrix> factors;
  factors.reserve(vecs.size());
  for (const auto& v : vecs) {
    factors.emplace_back(RealMatrix(v * v.transpose() / v.squaredNorm()));
  }
  const auto dim = static_cast<int>(vecs.front().size());
  return {CpsdFactorization(std::move(factors)), dim, tau, mult};
}

BoundReport bound_report(const RealMatrix& x, bool scale_search, int scale_iters) {
  BoundReport rep;
  rep.lower_analytic = analytic_lower_bound(x);
  rep.lower_rank = rank_lower_bound(x);
  double best = std::max(rep.lower_analytic, rep.lower_rank);
  if (scale_search) {
    rep.lower_scaled = scaled_analytic_bound(x, scale_iters);
    best = std::max(best, *rep.lower_scaled);
  }
  rep.lower_combined_int = certified_ceiling(best);
  return rep;
}

VerifyReport attach_upper_bound(BoundReport& report, const RealMatrix& x,
                                const CpsdFactorization& f, const std::string& provenance,
                                double tol) {
  VerifyReport v = verify_factorization(x, f, tol);
  if (!v.ok) return v;
  const auto d = static_cast<int>(f.d());
  if (d < report.lower_combined_int) {
    fail(ErrorKind::VerificationFailed,
         "verified factorization of size " + std::to_string(d) +
             " is below the certified lower bound " + std::to_string(report.lower_combined_int));
  }
  if (!report.upper || d < *report.upper) {
    report.upper = d;
    report.upper_provenance = provenance;
  }
  return v;
}

}  // namespace cpsdlab
