#include "cpsdlab/bell.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cpsdlab/cpsdrank.hpp"
#include "cpsdlab/error.hpp"

namespace cpsdlab {
namespace {

constexpr double kCorrelationTol = 1e-12;
constexpr double kUnitTol = 1e-8;

void require_label(int a) { require(a == 1 || a == -1, "outcome labels are +1 and -1"); }

int binom2(int r) { return r * (r + 1) / 2; }

}  // namespace

Behavior::Behavior(int m_a, int m_b, std::vector<double> table)
    : m_a_(m_a), m_b_(m_b), table_(std::move(table)) {
  require(m_a_ >= 1 && m_b_ >= 1, "behavior needs at least one question per party");
  require(table_.size() == static_cast<std::size_t>(4 * m_a_ * m_b_),
          "behavior table has the wrong number of entries");
  for (double v : table_) {
    require(std::isfinite(v) && v >= -kProbabilityTol, "behavior has a negative probability");
  }
  for (int x = 0; x < m_a_; ++x) {
    for (int y = 0; y < m_b_; ++y) {
      double s = 0.0;
      for (int a : {1, -1})
        for (int b : {1, -1}) s += (*this)(a, b, x, y);
      if (std::abs(s - 1.0) > kBehaviorSumTol) {
        fail(ErrorKind::InvalidInput, "behavior slice (" + std::to_string(x) + ", " +
                                          std::to_string(y) + ") does not sum to 1");
      }
    }
  }
}

std::size_t Behavior::index(int a, int b, int x, int y) const {
  require_label(a);
  require_label(b);
  require(x >= 0 && x < m_a_ && y >= 0 && y < m_b_, "behavior question out of range");
  const int ai = outcome_index(a);
  const int bi = outcome_index(b);
  return static_cast<std::size_t>(((ai * 2 + bi) * m_a_ + x) * m_b_ + y);
}

FullCorrelation behavior_to_full(const Behavior& p) {
  FullCorrelation c;
  c.cx = RealVector::Zero(p.m_a());
  c.cy = RealVector::Zero(p.m_b());
  c.cxy = RealMatrix::Zero(p.m_a(), p.m_b());
  for (int a : {1, -1}) {
    for (int b : {1, -1}) {
      for (int x = 0; x < p.m_a(); ++x) {
        for (int y = 0; y < p.m_b(); ++y) c.cxy(x, y) += a * b * p(a, b, x, y);
      }
      // Marginals are read off the first question of the other party.
      for (int x = 0; x < p.m_a(); ++x) c.cx(x) += a * p(a, b, x, 0);
      for (int y = 0; y < p.m_b(); ++y) c.cy(y) += b * p(a, b, 0, y);
    }
  }
  return c;
}

Behavior full_to_behavior(const FullCorrelation& c) {
  const auto m_a = static_cast<int>(c.cx.size());
  const auto m_b = static_cast<int>(c.cy.size());
  require(c.cxy.rows() == m_a && c.cxy.cols() == m_b, "full correlation shape mismatch");
  require(m_a >= 1 && m_b >= 1, "full correlation needs at least one question per party");
  const auto in_range = [](double v) { return std::abs(v) <= 1.0 + kCorrelationTol; };
  require(std::all_of(c.cx.begin(), c.cx.end(), in_range) &&
              std::all_of(c.cy.begin(), c.cy.end(), in_range) &&
              c.cxy.cwiseAbs().maxCoeff() <= 1.0 + kCorrelationTol,
          "full correlation entries must lie in [-1, 1]");

  std::vector<double> table(static_cast<std::size_t>(4 * m_a * m_b));
  for (int ai = 0; ai < 2; ++ai) {
    for (int bi = 0; bi < 2; ++bi) {
      const int a = outcome_sign(ai);
      const int b = outcome_sign(bi);
      for (int x = 0; x < m_a; ++x) {
        for (int y = 0; y < m_b; ++y) {
          const double v = (1.0 + a * c.cx(x) + b * c.cy(y) + a * b * c.cxy(x, y)) / 4.0;
          if (v < -kProbabilityTol) {
            fail(ErrorKind::InvalidInput, "full correlation gives a negative probability");
          }
          table[static_cast<std::size_t>(((ai * 2 + bi) * m_a + x) * m_b + y)] = v;
        }
      }
    }
  }
  return Behavior(m_a, m_b, std::move(table));
}

void require_correlation(const RealMatrix& c) {
  require(c.rows() >= 1 && c.cols() >= 1, "correlation matrix must be nonempty");
  require(c.allFinite() && c.cwiseAbs().maxCoeff() <= 1.0 + kCorrelationTol,
          "correlation entries must lie in [-1, 1]");
}

Behavior behavior_from_correlation(const RealMatrix& c) {
  require_correlation(c);
  FullCorrelation full{RealVector::Zero(c.rows()), RealVector::Zero(c.cols()), c};
  return full_to_behavior(full);
}

RealMatrix behavior_matrix(const RealMatrix& c) {
  require_correlation(c);
  const Index n = c.rows();
  const Index m = c.cols();
  const RealMatrix j = RealMatrix::Ones(n, m);
  RealMatrix p(2 * n, 2 * m);
  p << j + c, j - c, j - c, j + c;
  return p / 4.0;
}

GramLorentzFactorization behavior_gl_vectors(const std::vector<RealVector>& u) {
  require(!u.empty(), "behavior vectors need at least one question");
  std::vector<LorentzVector> out;
  out.reserve(2 * u.size());
  for (int ai = 0; ai < 2; ++ai) {
    for (const auto& ux : u) {
      require(std::abs(ux.norm() - 1.0) <= kUnitTol, "behavior vectors must have unit norm");
      out.emplace_back(0.5, 0.5 * outcome_sign(ai) * ux);
    }
  }
  return GramLorentzFactorization(std::move(out));
}

GramLorentzFactorization gl_behavior_factorization(const RealMatrix& c,
                                                   const std::vector<RealVector>& u,
                                                   const std::vector<RealVector>& v) {
  require_correlation(c);
  require(static_cast<Index>(u.size()) == c.rows() && static_cast<Index>(v.size()) == c.cols(),
          "vector counts do not match the correlation shape");
  for (Index x = 0; x < c.rows(); ++x) {
    for (Index y = 0; y < c.cols(); ++y) {
      const auto& ux = u[static_cast<std::size_t>(x)];
      const auto& vy = v[static_cast<std::size_t>(y)];
      require(ux.size() == vy.size(), "row and column vectors have different lengths");
      if (std::abs(ux.dot(vy) - c(x, y)) > kUnitTol) {
        fail(ErrorKind::InvalidInput, "inner product <u_" + std::to_string(x) + ", v_" +
                                          std::to_string(y) + "> does not match the correlation");
      }
    }
  }
  std::vector<LorentzVector> all = behavior_gl_vectors(u).vectors();
  const auto cols = behavior_gl_vectors(v).vectors();
  all.insert(all.end(), cols.begin(), cols.end());
  return GramLorentzFactorization(std::move(all));
}

bool validate_affine_section(const RealMatrix& r, const Behavior& p, double tol) {
  const int m_a = p.m_a();
  const int m_b = p.m_b();
  const int size = 2 * m_a + 2 * m_b;
  require(r.rows() == size && r.cols() == size, "affine section: matrix size does not match the behavior");
  const auto row = [&](int ai, int x) { return ai * m_a + x; };
  const auto col = [&](int bi, int y) { return 2 * m_a + bi * m_b + y; };

  for (int x = 0; x < m_a; ++x) {
    for (int x2 = 0; x2 < m_a; ++x2) {
      double s = 0.0;
      for (int ai = 0; ai < 2; ++ai)
        for (int a2 = 0; a2 < 2; ++a2) s += r(row(ai, x), row(a2, x2));
      if (std::abs(s - 1.0) > tol) return false;
    }
  }
  for (int y = 0; y < m_b; ++y) {
    for (int y2 = 0; y2 < m_b; ++y2) {
      double s = 0.0;
      for (int bi = 0; bi < 2; ++bi)
        for (int b2 = 0; b2 < 2; ++b2) s += r(col(bi, y), col(b2, y2));
      if (std::abs(s - 1.0) > tol) return false;
    }
  }
  for (int x = 0; x < m_a; ++x) {
    for (int y = 0; y < m_b; ++y) {
      double s = 0.0;
      for (int ai = 0; ai < 2; ++ai) {
        for (int bi = 0; bi < 2; ++bi) {
          const double v = r(row(ai, x), col(bi, y));
          s += v;
          if (std::abs(v - p(outcome_sign(ai), outcome_sign(bi), x, y)) > tol) return false;
        }
      }
      if (std::abs(s - 1.0) > tol) return false;
    }
  }
  return true;
}

bool elliptope_member(const RealMatrix& x, double tol) {
  if (x.rows() != x.cols() || x.rows() == 0 || !is_symmetric(x)) return false;
  if ((x.diagonal().array() - 1.0).abs().maxCoeff() > tol) return false;
  return is_psd(x, tol);
}

int outer_product_span_dim(const std::vector<RealVector>& u, double rank_tol) {
  require(!u.empty(), "span dimension of an empty family");
  const Index r = u.front().size();
  const auto n = static_cast<Index>(u.size());
  const Index cols = r * (r + 1) / 2;
  if (cols == 0) return 0;
  RealMatrix w(n, cols);
  const double root2 = std::sqrt(2.0);
  for (Index i = 0; i < n; ++i) {
    require(u[static_cast<std::size_t>(i)].size() == r, "span dimension of ragged vectors");
    const RealVector& v = u[static_cast<std::size_t>(i)];
    Index k = 0;
    for (Index a = 0; a < r; ++a) {
      w(i, k++) = v(a) * v(a);
      for (Index b = a + 1; b < r; ++b) w(i, k++) = root2 * v(a) * v(b);
    }
  }
  return numerical_rank(w * w.transpose(), rank_tol);
}

ExtremeReport elliptope_extreme_test(const RealMatrix& x, double rank_tol) {
  require(elliptope_member(x), "extremality test needs a member of the elliptope");
  const std::vector<RealVector> u = gram_vectors(x, rank_tol);
  ExtremeReport rep;
  rep.rank = static_cast<int>(u.front().size());
  rep.target = binom2(rep.rank);
  rep.span_dim = outer_product_span_dim(u, rank_tol);
  rep.extreme = rep.span_dim == rep.target;
  return rep;
}

int r_max(int n) {
  require(n >= 1, "r_max needs n >= 1");
  auto r = static_cast<int>(std::floor((std::sqrt(1.0 + 8.0 * n) - 1.0) / 2.0));
  while (binom2(r + 1) <= n) ++r;
  while (binom2(r) > n) --r;
  return r;
}

RealMatrix elliptope_extreme_construct(int n, int r) {
  require(n >= 1, "elliptope size must be positive");
  if (r < 1 || r > r_max(n)) {
    fail(ErrorKind::InvalidInput, "rank " + std::to_string(r) + " is outside [1, r_max(" +
                                      std::to_string(n) + ") = " + std::to_string(r_max(n)) + "]");
  }
  std::vector<RealVector> u;
  u.reserve(static_cast<std::size_t>(n));
  const int repeats = n + 1 - binom2(r);
  for (int k = 0; k < repeats; ++k) u.push_back(RealVector::Unit(r, 0));
  for (int i = 1; i < r; ++i) u.push_back(RealVector::Unit(r, i));
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      u.push_back((RealVector::Unit(r, i) + RealVector::Unit(r, j)) / std::sqrt(2.0));
    }
  }
  return real_gram(u);
}

DqBound dq_lower_bound(const RealMatrix& c, const ExtremeReport& certificate) {
  require(c.rows() == c.cols(), "dimension bound needs a square correlation");
  if (!certificate.extreme) {
    fail(ErrorKind::InvalidInput, "dimension bound refused: extremality is not certified");
  }
  const int rank = numerical_rank(c);
  if (rank != certificate.rank) {
    fail(ErrorKind::InvalidInput, "dimension bound refused: certificate rank " +
                                      std::to_string(certificate.rank) +
                                      " does not match rank " + std::to_string(rank));
  }
  DqBound out;
  out.value = std::pow(std::sqrt(2.0), rank / 2);
  out.ceiling = certified_ceiling(out.value);
  return out;
}

ExpFamily exponential_family(int n, int cap) {
  require(n >= 1, "exponential family needs n >= 1");
  if (n > cap) {
    fail(ErrorKind::CapExceeded, "exponential family size n = " + std::to_string(n) +
                                     " exceeds the cap " + std::to_string(cap));
  }
  ExpFamily fam;
  fam.n = n;
  const int dim = 2 * n;
  fam.questions = 2 * n * n + n;
  for (int i = 0; i < dim; ++i) fam.vectors.push_back(RealVector::Unit(dim, i));
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) {
      fam.vectors.push_back((RealVector::Unit(dim, i) + RealVector::Unit(dim, j)) / std::sqrt(2.0));
    }
  }
  fam.correlation = real_gram(fam.vectors);
  fam.behavior = behavior_matrix(fam.correlation);
  fam.lower_bound = std::pow(std::sqrt(2.0), n);
  return fam;
}

bool no_signaling_check(const Behavior& p, double tol) {
  for (int a : {1, -1}) {
    for (int x = 0; x < p.m_a(); ++x) {
      const double ref = p(a, 1, x, 0) + p(a, -1, x, 0);
      for (int y = 1; y < p.m_b(); ++y) {
        if (std::abs(p(a, 1, x, y) + p(a, -1, x, y) - ref) > tol) return false;
      }
    }
  }
  for (int b : {1, -1}) {
    for (int y = 0; y < p.m_b(); ++y) {
      const double ref = p(1, b, 0, y) + p(-1, b, 0, y);
      for (int x = 1; x < p.m_a(); ++x) {
        if (std::abs(p(1, b, x, y) + p(-1, b, x, y) - ref) > tol) return false;
      }
    }
  }
  return true;
}

}  // namespace cpsdlab
