#pragma once

#include <vector>

#include "cpsdlab/lorentz.hpp"
#include "cpsdlab/matcore.hpp"

namespace cpsdlab {

inline constexpr double kProbabilityTol = 1e-12;
inline constexpr double kBehaviorSumTol = 1e-10;
inline constexpr int kExpFamilyCap = 12;

// Outcome labels are +1 and -1; index 0 is +1.
inline int outcome_index(int a) { return a == 1 ? 0 : 1; }
inline int outcome_sign(int idx) { return idx == 0 ? 1 : -1; }

/// Conditional distribution p(ab|xy) for a two-party scenario with binary
/// outcomes. Stored in (a, b, x, y) order.
class Behavior {
 public:
  // Throws InvalidInput when an entry is below -kProbabilityTol or a
  // (x, y) slice does not sum to 1.
  Behavior(int m_a, int m_b, std::vector<double> table);

  int m_a() const { return m_a_; }
  int m_b() const { return m_b_; }
  // a and b are outcome labels (+1 or -1).
  double operator()(int a, int b, int x, int y) const { return table_[index(a, b, x, y)]; }
  const std::vector<double>& table() const { return table_; }

  std::size_t index(int a, int b, int x, int y) const;

 private:
  int m_a_;
  int m_b_;
  std::vector<double> table_;
};

struct FullCorrelation {
  RealVector cx;
  RealVector cy;
  RealMatrix cxy;
};

FullCorrelation behavior_to_full(const Behavior& p);
Behavior full_to_behavior(const FullCorrelation& c);

void require_correlation(const RealMatrix& c);

/// p_C(ab|xy) = (1 + ab c_xy) / 4.
Behavior behavior_from_correlation(const RealMatrix& c);

/// P_C = (1/4) [[J + C, J - C], [J - C, J + C]]; row a*n + x, column b*m + y
/// with the outcome index a, b in {0 (+1), 1 (-1)}.
RealMatrix behavior_matrix(const RealMatrix& c);

/// Vectors (1, a u_x)/2 ordered (outcome index, question); for an elliptope
/// C with Gram vectors u their Gram matrix is P_C.
GramLorentzFactorization behavior_gl_vectors(const std::vector<RealVector>& u);

/// Vectors (1, a u_x)/2 for the rows followed by (1, b v_y)/2 for the
/// columns, each side ordered (outcome index, question).
GramLorentzFactorization gl_behavior_factorization(const RealMatrix& c,
                                                   const std::vector<RealVector>& u,
                                                   const std::vector<RealVector>& v);

/// Checks that R, indexed like gl_behavior_factorization's vectors, has unit
/// block sums on every (x, x'), (y, y') and (x, y) block and R_{xa,yb} = p(ab|xy).
bool validate_affine_section(const RealMatrix& r, const Behavior& p, double tol = kBehaviorSumTol);

bool elliptope_member(const RealMatrix& x, double tol = kDefaultPsdTol);

struct ExtremeReport {
  bool extreme = false;
  int rank = 0;
  int span_dim = 0;  // dim span{u_i u_i^T}
  int target = 0;    // (rank + 1 choose 2)
};

/// Dimension of span{u_i u_i^T} among symmetric matrices, from the numerical
/// rank of the Gram matrix of the vectorized outer products.
int outer_product_span_dim(const std::vector<RealVector>& u, double rank_tol = kDefaultRankTol);

ExtremeReport elliptope_extreme_test(const RealMatrix& x, double rank_tol = kDefaultRankTol);

int r_max(int n);

/// Extreme point of E_n with rank r: Gram of e_1 repeated n + 1 - C(r+1, 2)
/// times, then e_2..e_r, then (e_i + e_j)/sqrt 2 for i < j.
RealMatrix elliptope_extreme_construct(int n, int r);

struct DqBound {
  double value = 0.0;
  int ceiling = 0;
};

/// sqrt(2)^floor(rank C / 2), emitted only with a matching extremality
/// certificate for C.
DqBound dq_lower_bound(const RealMatrix& c, const ExtremeReport& certificate);

struct ExpFamily {
  int n = 0;
  int questions = 0;  // N = 2n^2 + n
  RealMatrix correlation;
  RealMatrix behavior;
  std::vector<RealVector> vectors;  // w_ii then w_ij, in R^(2n)
  double lower_bound = 0.0;         // sqrt(2)^n
};

ExpFamily exponential_family(int n, int cap = kExpFamilyCap);

bool no_signaling_check(const Behavior& p, double tol = kBehaviorSumTol);

}  // namespace cpsdlab
