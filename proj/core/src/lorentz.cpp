#include "cpsdlab/lorentz.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cpsdlab/error.hpp"

namespace cpsdlab {

LorentzVector::LorentzVector(double c, RealVector x)
    : c_(c), x_(std::move(x)), in_cone_(c_ >= x_.norm() - kConeTol) {
  require(std::isfinite(c_) && x_.allFinite(), "Lorentz vector has non-finite coordinates");
}

LorentzVector LorentzVector::from_coordinates(const RealVector& v) {
  require(v.size() >= 1, "Lorentz vector needs at least one coordinate");
  return {v(0), v.tail(v.size() - 1)};
}

RealVector LorentzVector::coordinates() const {
  RealVector out(x_.size() + 1);
  out(0) = c_;
  out.tail(x_.size()) = x_;
  return out;
}

GramLorentzFactorization::GramLorentzFactorization(std::vector<LorentzVector> vectors)
    : vectors_(std::move(vectors)) {
  require(!vectors_.empty(), "Gram-Lorentz factorization needs at least one vector");
  const int m = vectors_.front().m();
  for (std::size_t i = 0; i < vectors_.size(); ++i) {
    require(vectors_[i].m() == m, "Gram-Lorentz vectors have different ambient dimensions");
    if (!vectors_[i].in_cone()) {
      fail(ErrorKind::InvalidInput, "vector " + std::to_string(i) + " lies outside the Lorentz cone");
    }
  }
}

HermMatrix lorentz_embed(const LorentzVector& v, const CliffordBasis& basis) {
  require(v.m() - 1 == basis.n(), "Lorentz embedding: basis does not match the vector length");
  const Index d = basis.d();
  const HermMatrix g = gamma(basis, v.x());
  return (1.0 / std::sqrt(static_cast<double>(d))) * (v.c() * HermMatrix::identity(d) + g);
}

HermMatrix lorentz_embed(const LorentzVector& v, int cap) {
  if (v.m() == 1) {
    RealMatrix one(1, 1);
    one(0, 0) = v.c();
    return HermMatrix(one);
  }
  return lorentz_embed(v, clifford_basis(v.m() - 1, cap));
}

RealMatrix gl_matrix(const GramLorentzFactorization& f) {
  std::vector<RealVector> coords;
  coords.reserve(f.size());
  for (const auto& v : f.vectors()) coords.push_back(v.coordinates());
  return real_gram(coords);
}

GramLorentzFactorization gl_reduce(const GramLorentzFactorization& f, double rank_tol) {
  std::vector<RealVector> tails;
  tails.reserve(f.size());
  for (const auto& v : f.vectors()) tails.push_back(v.x());

  std::vector<RealVector> reduced;
  if (f.m() == 1) {
    reduced.assign(f.size(), RealVector::Zero(1));
  } else {
    reduced = gram_vectors(real_gram(tails), rank_tol);
    // Rank-zero tails still need one coordinate so that gamma is defined.
    if (reduced.front().size() == 0) reduced.assign(f.size(), RealVector::Zero(1));
  }

  std::vector<LorentzVector> out;
  out.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    out.emplace_back(f.vectors()[i].c(), std::move(reduced[i]));
  }
  return GramLorentzFactorization(std::move(out));
}

CpsdFactorization gl_to_cpsd(const GramLorentzFactorization& f, int cap) {
  const GramLorentzFactorization r = gl_reduce(f);
  const CliffordBasis basis = clifford_basis(r.m() - 1, cap);
  std::vector<HermMatrix> factors;
  factors.reserve(r.size());
  for (const auto& v : r.vectors()) factors.push_back(lorentz_embed(v, basis));
  return CpsdFactorization(std::move(factors));
}

GramLorentzFactorization gl2_factorize(double a, double b, double c) {
  const double tol = 1e-12 * std::max({1.0, std::abs(a), std::abs(b), std::abs(c)});
  require(a >= -tol && b >= -tol && c >= -tol, "2x2 factorization needs nonnegative entries");
  require(a * c - b * b >= -tol, "2x2 factorization needs a psd matrix");
  a = std::max(a, 0.0);
  b = std::max(b, 0.0);
  c = std::max(c, 0.0);
  // The construction puts the larger diagonal entry first.
  if (c > a) {
    const GramLorentzFactorization swapped = gl2_factorize(c, b, a);
    return GramLorentzFactorization({swapped.vectors()[1], swapped.vectors()[0]});
  }

  RealVector axis(2);
  axis << 1.0, 0.0;
  const LorentzVector first(std::sqrt(a / 2), std::sqrt(a / 2) * axis);
  if (c <= tol) {
    // Then b = 0 as well and the second row is zero.
    return GramLorentzFactorization({first, LorentzVector(0.0, RealVector::Zero(2))});
  }
  const double root = std::sqrt(a * c);
  const double t = std::clamp((2.0 * b - root) / root, -1.0, 1.0);
  RealVector tail(2);
  tail << t, std::sqrt(1.0 - t * t);
  return GramLorentzFactorization({first, LorentzVector(std::sqrt(c / 2), std::sqrt(c / 2) * tail)});
}

}  // namespace cpsdlab
