#include <gtest/gtest.h>

#include "cpsdlab/bell.hpp"
#include "cpsdlab/error.hpp"
#include "test_support.hpp"

using namespace cpsdlab;
using namespace testing_support;

namespace {

RealMatrix chsh_correlation() {
  RealMatrix c(2, 2);
  c << 1, 1, 1, -1;
  return c / std::sqrt(2.0);
}

// Random correlation <u_x, v_y> from unit vectors.
RealMatrix random_correlation(int m_a, int m_b, int dim, std::vector<RealVector>& u,
                              std::vector<RealVector>& v) {
  u.clear();
  v.clear();
  for (int i = 0; i < m_a; ++i) u.push_back(gaussian_vector(dim).normalized());
  for (int i = 0; i < m_b; ++i) v.push_back(gaussian_vector(dim).normalized());
  RealMatrix c(m_a, m_b);
  for (int x = 0; x < m_a; ++x)
    for (int y = 0; y < m_b; ++y) c(x, y) = u[x].dot(v[y]);
  return c;
}

}  // namespace

TEST(Behavior, ValidatesEntriesAndSlices) {
  std::vector<double> uniform(16, 0.25);
  EXPECT_NO_THROW(Behavior(2, 2, uniform));
  uniform[0] = 0.3;
  EXPECT_THROW(Behavior(2, 2, uniform), Error);
  std::vector<double> negative(4, 0.25);
  negative[0] = -0.25;
  negative[1] = 0.75;
  EXPECT_THROW(Behavior(1, 1, negative), Error);
  EXPECT_THROW(Behavior(1, 1, std::vector<double>(3, 0.25)), Error);
}

TEST(Behavior, FromCorrelationMatchesClosedForm) {
  const RealMatrix c = chsh_correlation();
  const Behavior p = behavior_from_correlation(c);
  for (int a : {1, -1})
    for (int b : {1, -1})
      for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) EXPECT_NEAR(p(a, b, x, y), (1 + a * b * c(x, y)) / 4, 1e-15);
  EXPECT_TRUE(no_signaling_check(p));
  // Tsirelson value of the CHSH expression.
  const FullCorrelation f = behavior_to_full(p);
  EXPECT_NEAR(f.cxy(0, 0) + f.cxy(0, 1) + f.cxy(1, 0) - f.cxy(1, 1), 2 * std::sqrt(2.0), 1e-12);
  EXPECT_LT(f.cx.cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Behavior, ZeroCorrelationIsUniform) {
  const Behavior p = behavior_from_correlation(RealMatrix::Zero(3, 2));
  for (double v : p.table()) EXPECT_DOUBLE_EQ(v, 0.25);
}

TEST(FullCorrelation, RoundTrip) {
  FullCorrelation f{RealVector::Constant(2, 0.2), RealVector::Constant(3, -0.1), RealMatrix::Constant(2, 3, 0.3)};
  f.cxy(1, 2) = -0.4;
  const FullCorrelation g = behavior_to_full(full_to_behavior(f));
  EXPECT_LT((g.cx - f.cx).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LT((g.cy - f.cy).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LT((g.cxy - f.cxy).cwiseAbs().maxCoeff(), 1e-15);
  f.cx(0) = 0.9;
  f.cy(0) = -0.9;
  f.cxy(0, 0) = 0.9;  // p(-1,+1|0,0) = (1 - 2.7) / 4
  EXPECT_THROW(full_to_behavior(f), Error);
}

TEST(Behavior, SignalingDetected) {
  // Alice's marginal depends on Bob's question.
  std::vector<double> t(16, 0.0);
  Behavior probe(2, 2, std::vector<double>(16, 0.25));
  auto set = [&](int a, int b, int x, int y, double v) { t[probe.index(a, b, x, y)] = v; };
  for (int x = 0; x < 2; ++x) {
    set(1, 1, x, 0, 1.0);
    set(-1, -1, x, 1, 1.0);
  }
  EXPECT_FALSE(no_signaling_check(Behavior(2, 2, t)));
}

TEST(BehaviorMatrix, BlocksMatchBehavior) {
  const RealMatrix c = chsh_correlation();
  const RealMatrix pm = behavior_matrix(c);
  const Behavior p = behavior_from_correlation(c);
  for (int ai = 0; ai < 2; ++ai)
    for (int bi = 0; bi < 2; ++bi)
      for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
          EXPECT_NEAR(pm(ai * 2 + x, bi * 2 + y), p(outcome_sign(ai), outcome_sign(bi), x, y), 1e-15);
}

TEST(GlVectors, GramIsBehaviorMatrix) {
  const ExpFamily fam = exponential_family(2);
  const GramLorentzFactorization f = behavior_gl_vectors(fam.vectors);
  EXPECT_LT(max_abs_deviation(gl_matrix(f), fam.behavior), 1e-12);
}

TEST(AffineSection, HoldsForBipartiteGlFactorization) {
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<RealVector> u, v;
    const RealMatrix c = random_correlation(3, 2, 4, u, v);
    const GramLorentzFactorization f = gl_behavior_factorization(c, u, v);
    const Behavior p = behavior_from_correlation(c);
    const RealMatrix r = gl_matrix(f);
    EXPECT_TRUE(validate_affine_section(r, p));
    RealMatrix broken = r;
    broken(0, 6) += 1e-3;
    broken(6, 0) += 1e-3;
    EXPECT_FALSE(validate_affine_section(broken, p));
  }
}

TEST(AffineSection, RejectsInconsistentVectors) {
  std::vector<RealVector> u, v;
  RealMatrix c = random_correlation(2, 2, 3, u, v);
  c(0, 0) += c(0, 0) > 0 ? -0.1 : 0.1;
  EXPECT_THROW(gl_behavior_factorization(c, u, v), Error);
}

TEST(Elliptope, RMax) {
  // Largest r with r(r+1)/2 <= n, by direct search.
  for (int n = 1; n <= 60; ++n) {
    int r = 0;
    while ((r + 1) * (r + 2) / 2 <= n) ++r;
    EXPECT_EQ(r_max(n), r) << n;
  }
}

TEST(Elliptope, ConstructedPointsAreExtreme) {
  for (int n = 1; n <= 10; ++n) {
    for (int r = 1; r <= r_max(n); ++r) {
      const RealMatrix x = elliptope_extreme_construct(n, r);
      EXPECT_TRUE(elliptope_member(x));
      const ExtremeReport rep = elliptope_extreme_test(x);
      EXPECT_EQ(rep.rank, r);
      EXPECT_TRUE(rep.extreme) << n << ' ' << r;
    }
  }
  EXPECT_THROW(elliptope_extreme_construct(3, 5), Error);
  EXPECT_THROW(elliptope_extreme_construct(3, 0), Error);
}

TEST(Elliptope, IdentityIsNotExtreme) {
  const ExtremeReport rep = elliptope_extreme_test(RealMatrix::Identity(3, 3));
  EXPECT_FALSE(rep.extreme);
  EXPECT_EQ(rep.rank, 3);
  EXPECT_EQ(rep.span_dim, 3);
  EXPECT_EQ(rep.target, 6);
  EXPECT_THROW(elliptope_extreme_test(RealMatrix::Constant(2, 2, 2.0)), Error);
}

TEST(DimensionBound, RefusesWithoutCertificate) {
  const RealMatrix id = RealMatrix::Identity(3, 3);
  EXPECT_THROW(dq_lower_bound(id, elliptope_extreme_test(id)), Error);
  const RealMatrix x = elliptope_extreme_construct(6, 3);
  ExtremeReport wrong = elliptope_extreme_test(x);
  wrong.rank = 2;
  EXPECT_THROW(dq_lower_bound(x, wrong), Error);
  const DqBound b = dq_lower_bound(x, elliptope_extreme_test(x));
  EXPECT_NEAR(b.value, std::sqrt(2.0), 1e-15);
  EXPECT_EQ(b.ceiling, 2);
}

TEST(ExpFamily, ShapesRanksAndBounds) {
  for (int n = 1; n <= 3; ++n) {
    const ExpFamily fam = exponential_family(n);
    const int q = 2 * n * n + n;
    EXPECT_EQ(fam.questions, q);
    EXPECT_EQ(fam.correlation.rows(), q);
    EXPECT_EQ(fam.behavior.rows(), 2 * q);
    EXPECT_EQ(numerical_rank(fam.correlation), 2 * n);
    EXPECT_EQ(numerical_rank(fam.behavior), 2 * n + 1);
    EXPECT_TRUE(elliptope_extreme_test(fam.correlation).extreme);
    EXPECT_NEAR(fam.lower_bound, std::pow(std::sqrt(2.0), n), 1e-12);
    EXPECT_NEAR(dq_lower_bound(fam.correlation, elliptope_extreme_test(fam.correlation)).value,
                fam.lower_bound, 1e-12);
  }
  try {
    exponential_family(13);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CapExceeded);
  }
}
