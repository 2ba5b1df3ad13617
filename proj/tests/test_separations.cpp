#include <gtest/gtest.h>

#include <numbers>

#include "cpsdlab/cpsdrank.hpp"
#include "cpsdlab/error.hpp"
#include "cpsdlab/separations.hpp"
#include "graph_oracle.hpp"
#include "test_support.hpp"

using namespace cpsdlab;
using namespace testing_support;

namespace {

std::vector<RealVector> coordinates(const GramLorentzFactorization& f) {
  std::vector<RealVector> out;
  for (const auto& v : f.vectors()) out.push_back(v.coordinates());
  return out;
}

Graph random_graph(int n, double p) {
  std::vector<Graph::Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (uniform(0, 1) < p) edges.emplace_back(u, v);
  return Graph(n, edges);
}

}  // namespace

TEST(CycleVectors, GramMatchesCosineFormula) {
  for (int n : {6, 10, 14}) {
    const GramLorentzFactorization f = cycle_vectors(n);
    const RealMatrix x = gl_matrix(f);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        EXPECT_NEAR(x(j, k), 1 + std::cos(2 * std::numbers::pi * (j - k) / n), 1e-12);
    EXPECT_TRUE(std::all_of(f.vectors().begin(), f.vectors().end(), [](const auto& v) { return v.in_cone(); }));
  }
  EXPECT_THROW(cycle_vectors(8), Error);  // l = 4 is even
  EXPECT_THROW(cycle_vectors(4), Error);
}

TEST(CycleVectors, CertifiedNotCompletelyPositive) {
  for (int n : {6, 10, 14}) {
    const NotCpCertificate cert = check_not_cp(coordinates(cycle_vectors(n)), cycle_pairs(n), cycle_odd_subset(n));
    EXPECT_TRUE(cert.valid) << n;
    for (const auto& c : cert.checks) EXPECT_TRUE(c.passed) << c.name << " residual " << c.residual;
  }
}

TEST(CycleVectors, AlsoCpsdWithSizeTwoFactors) {
  const GramLorentzFactorization f = cycle_vectors(6);
  const CpsdFactorization p = gl_to_cpsd(f);
  EXPECT_EQ(p.d(), 2);
  EXPECT_TRUE(verify_factorization(gl_matrix(f), p).ok);
}

TEST(NotCp, BrokenInputsFailOrThrow) {
  auto vecs = coordinates(cycle_vectors(6));
  const auto pairs = cycle_pairs(6);
  EXPECT_THROW(check_not_cp(vecs, pairs, {0, 2}), Error);        // even J
  EXPECT_THROW(check_not_cp(vecs, pairs, {0, 3, 4}), Error);     // 0 and 3 are partners
  EXPECT_THROW(check_not_cp(vecs, {{0, 3}, {1, 4}}, {0, 2, 4}), Error);
  vecs[1] *= 1.5;  // partners no longer share the midpoint
  EXPECT_FALSE(check_not_cp(vecs, pairs, cycle_odd_subset(6)).valid);
}

TEST(OddCycleDnn, SpectralShape) {
  for (int t = 2; t <= 5; ++t) {
    const int n = 2 * t + 1;
    const RealMatrix x = odd_cycle_dnn(t);
    EXPECT_TRUE(is_psd(x));
    EXPECT_GE(x.minCoeff(), 0.0);
    EXPECT_EQ(numerical_rank(x), n - 2);
    EXPECT_EQ(support_graph(x), Graph::cycle(n));
    EXPECT_NEAR(x(0, 0), -2 * std::cos(2 * std::numbers::pi * t / n), 1e-12);
  }
  EXPECT_NEAR(odd_cycle_dnn(2)(0, 0), (1 + std::sqrt(5.0)) / 2, 1e-12);
}

TEST(OddCycleDnn, CertifiedOutsideClosure) {
  for (int t = 2; t <= 5; ++t) {
    const VnaIndexSets s = odd_cycle_index_sets(t);
    const NotVnaCertificate cert = check_not_vna(odd_cycle_dnn(t), s.subset_i, s.subset_j, s.i_star, s.j_star);
    EXPECT_TRUE(cert.valid) << t;
    for (const auto& c : cert.checks) EXPECT_TRUE(c.passed) << c.name;
  }
}

TEST(OddCycleDnn, FullRankPerturbationLosesCertificate) {
  const RealMatrix x = odd_cycle_dnn(2) + 0.1 * RealMatrix::Identity(5, 5);
  const VnaIndexSets s = odd_cycle_index_sets(2);
  EXPECT_FALSE(check_not_vna(x, s.subset_i, s.subset_j, s.i_star, s.j_star).valid);
  EXPECT_THROW(check_not_vna(x, s.subset_i, s.subset_j, 0, 9), Error);
}

TEST(SupportGraph, Examples) {
  EXPECT_EQ(support_graph(RealMatrix::Identity(4, 4)), Graph::empty(4));
  EXPECT_EQ(support_graph(RealMatrix::Ones(3, 3)), Graph::complete(3));
}

TEST(CpsdGraph, KnownGraphs) {
  EXPECT_TRUE(is_cpsd_graph(Graph::complete(3)).cpsd);
  EXPECT_TRUE(is_cpsd_graph(Graph::complete(4)).cpsd);
  EXPECT_TRUE(is_cpsd_graph(Graph::cycle(6)).cpsd);
  EXPECT_TRUE(is_cpsd_graph(Graph(4, {{0, 1}, {1, 2}, {2, 3}})).cpsd);
  const CpsdGraphResult c5 = is_cpsd_graph(Graph::cycle(5));
  EXPECT_FALSE(c5.cpsd);
  EXPECT_EQ(c5.witness, (std::vector<int>{0, 1, 2, 3, 4}));
  const CpsdGraphResult c7 = is_cpsd_graph(Graph::cycle(7));
  EXPECT_FALSE(c7.cpsd);
  EXPECT_EQ(c7.witness.size(), 7u);
  EXPECT_FALSE(is_cpsd_graph(Graph::complete(5)).cpsd);
}

TEST(CpsdGraph, CapOnVertexCount) {
  try {
    is_cpsd_graph(Graph::cycle(25));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CapExceeded);
  }
}

TEST(CpsdGraph, AgreesWithSubsetOracle) {
  for (int trial = 0; trial < 400; ++trial) {
    const int n = uniform_int(1, 10);
    const Graph g = random_graph(n, uniform(0.1, 0.6));
    const CpsdGraphResult r = is_cpsd_graph(g);
    EXPECT_EQ(r.cpsd, !has_long_odd_cycle(g));
    if (!r.cpsd) EXPECT_TRUE(is_odd_cycle_in(g, r.witness));
  }
}
