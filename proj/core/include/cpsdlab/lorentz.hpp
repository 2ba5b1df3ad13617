#pragma once

#include <vector>

#include "cpsdlab/clifford.hpp"
#include "cpsdlab/cpsdrank.hpp"
#include "cpsdlab/matcore.hpp"

namespace cpsdlab {

inline constexpr double kConeTol = 1e-10;

/// (c, x) in R x R^(m-1), with membership in the Lorentz cone c >= |x|
/// decided once at construction.
class LorentzVector {
 public:
  LorentzVector(double c, RealVector x);
  static LorentzVector from_coordinates(const RealVector& v);

  double c() const { return c_; }
  const RealVector& x() const { return x_; }
  int m() const { return static_cast<int>(x_.size()) + 1; }
  bool in_cone() const { return in_cone_; }
  RealVector coordinates() const;

 private:
  double c_;
  RealVector x_;
  bool in_cone_;
};

inline bool lorentz_member(const LorentzVector& v) { return v.in_cone(); }

class GramLorentzFactorization {
 public:
  // Throws InvalidInput on an empty list, mixed ambient dimension, or a
  // vector outside the cone by more than kConeTol.
  explicit GramLorentzFactorization(std::vector<LorentzVector> vectors);

  int m() const { return vectors_.front().m(); }
  std::size_t size() const { return vectors_.size(); }
  const std::vector<LorentzVector>& vectors() const { return vectors_; }

 private:
  std::vector<LorentzVector> vectors_;
};

/// Gamma((c, x)) = (c I_d + gamma(x)) / sqrt(d), an isometry R^m -> H^d that
/// maps the Lorentz cone onto its psd preimage.
HermMatrix lorentz_embed(const LorentzVector& v, const CliffordBasis& basis);
HermMatrix lorentz_embed(const LorentzVector& v, int cap = kDefaultCliffordCap);

RealMatrix gl_matrix(const GramLorentzFactorization& f);

/// Keeps first coordinates and re-coordinatizes the tails through the
/// eigendecomposition of their Gram matrix, so the ambient dimension becomes
/// rank(tail Gram) + 1 <= rank(X) + 2.
GramLorentzFactorization gl_reduce(const GramLorentzFactorization& f,
                                   double rank_tol = kDefaultRankTol);

/// gl_reduce followed by lorentz_embed of every vector.
CpsdFactorization gl_to_cpsd(const GramLorentzFactorization& f, int cap = kDefaultCliffordCap);

/// Two L_3 vectors with Gram [[a, b], [b, c]] for a doubly nonnegative 2x2.
GramLorentzFactorization gl2_factorize(double a, double b, double c);

}  // namespace cpsdlab
