#include "cpsdlab/separations.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>
#include <set>
#include <string>

#include "cpsdlab/error.hpp"

namespace cpsdlab {
namespace {

// A check whose measured value must stay below the tolerance.
CertificateCheck at_most(std::string name, double value, double tol = kCertificateTol) {
  return {std::move(name), value <= tol, value, std::max(0.0, value - tol)};
}

// A check whose measured value must exceed the tolerance.
CertificateCheck above(std::string name, double value, double tol = kCertificateTol) {
  return {std::move(name), value > tol, value, std::max(0.0, tol - value)};
}

bool all_passed(const std::vector<CertificateCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

RealMatrix principal(const RealMatrix& x, const std::vector<int>& idx) {
  const auto k = static_cast<Index>(idx.size());
  RealMatrix out(k, k);
  for (Index a = 0; a < k; ++a)
    for (Index b = 0; b < k; ++b) out(a, b) = x(idx[a], idx[b]);
  return out;
}

void require_cycle_size(int n) {
  require(n % 2 == 0 && n >= 6 && (n / 2) % 2 == 1,
          "cycle family needs n = 2l with l odd and l >= 3");
}

bool bipartite(const Graph& g) {
  std::vector<int> color(static_cast<std::size_t>(g.n()), -1);
  for (int s = 0; s < g.n(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int w : g.neighbors(u)) {
        if (color[w] < 0) {
          color[w] = 1 - color[u];
          q.push(w);
        } else if (color[w] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

// Biconnected blocks by edge; block[u][v] is -1 for non-edges.
class Blocks {
 public:
  explicit Blocks(const Graph& g)
      : g_(g),
        n_(g.n()),
        disc_(static_cast<std::size_t>(n_), -1),
        low_(static_cast<std::size_t>(n_), 0),
        block_(static_cast<std::size_t>(n_), std::vector<int>(static_cast<std::size_t>(n_), -1)) {
    for (int s = 0; s < n_; ++s)
      if (disc_[s] < 0) visit(s, -1);
  }

  int of(int u, int v) const { return block_[u][v]; }
  int count() const { return count_; }

 private:
  void visit(int u, int parent) {
    disc_[u] = low_[u] = timer_++;
    for (int w : g_.neighbors(u)) {
      if (w == parent) continue;
      if (disc_[w] < 0) {
        stack_.emplace_back(u, w);
        visit(w, u);
        low_[u] = std::min(low_[u], low_[w]);
        if (low_[w] >= disc_[u]) pop_block(u, w);
      } else if (disc_[w] < disc_[u]) {
        stack_.emplace_back(u, w);
        low_[u] = std::min(low_[u], disc_[w]);
      }
    }
  }

  void pop_block(int u, int w) {
    while (true) {
      auto [a, b] = stack_.back();
      stack_.pop_back();
      block_[a][b] = block_[b][a] = count_;
      if (a == u && b == w) break;
    }
    ++count_;
  }

  const Graph& g_;
  int n_;
  int timer_ = 0;
  int count_ = 0;
  std::vector<int> disc_;
  std::vector<int> low_;
  std::vector<std::vector<int>> block_;
  std::vector<std::pair<int, int>> stack_;
};

class OddCycleSearch {
 public:
  OddCycleSearch(const Graph& g, const Blocks& blocks, std::vector<bool> usable_block)
      : g_(g), blocks_(blocks), usable_(std::move(usable_block)),
        on_path_(static_cast<std::size_t>(g.n()), false) {}

  std::vector<int> run() {
    for (int s = 0; s < g_.n(); ++s) {
      for (int v : g_.neighbors(s)) {
        if (v <= s) continue;
        const int b = blocks_.of(s, v);
        if (!usable_[static_cast<std::size_t>(b)]) continue;
        path_ = {s, v};
        on_path_[s] = on_path_[v] = true;
        const bool found = extend(s, b);
        on_path_[s] = on_path_[v] = false;
        if (found) return path_;
      }
    }
    return {};
  }

 private:
  bool extend(int s, int b) {
    const int u = path_.back();
    const auto len = path_.size();
    if (len >= 5 && len % 2 == 1 && g_.adjacent(u, s) && blocks_.of(u, s) == b) return true;
    for (int w : g_.neighbors(u)) {
      if (w <= s || on_path_[w] || blocks_.of(u, w) != b) continue;
      path_.push_back(w);
      on_path_[w] = true;
      if (extend(s, b)) return true;
      on_path_[w] = false;
      path_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  const Blocks& blocks_;
  std::vector<bool> usable_;
  std::vector<bool> on_path_;
  std::vector<int> path_;
};

}  // namespace

NotCpCertificate check_not_cp(const std::vector<RealVector>& vectors,
                              const std::vector<std::pair<int, int>>& pairs,
                              const std::vector<int>& odd_subset) {
  const auto n = static_cast<int>(vectors.size());
  require(n >= 2 && n % 2 == 0, "not-CP certificate needs an even, nonzero number of vectors");
  require(static_cast<int>(pairs.size()) * 2 == n, "pairs must partition the vectors");
  const Index len = vectors.front().size();
  for (const auto& v : vectors) require(v.size() == len, "certificate vectors have different lengths");

  std::vector<int> pair_of(static_cast<std::size_t>(n), -1);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    for (int i : {pairs[k].first, pairs[k].second}) {
      require(i >= 0 && i < n && pair_of[i] < 0, "pairs must partition the vectors");
      pair_of[i] = static_cast<int>(k);
    }
  }
  require(odd_subset.size() % 2 == 1, "the subset J must have odd cardinality");
  std::set<int> used_pairs;
  for (int j : odd_subset) {
    require(j >= 0 && j < n, "subset index out of range");
    require(used_pairs.insert(pair_of[j]).second, "the subset J takes two vectors from one pair");
  }

  NotCpCertificate cert;
  cert.pairs = pairs;
  cert.odd_subset = odd_subset;
  cert.center = RealVector::Zero(len);
  for (const auto& [i, k] : pairs) cert.center += (vectors[i] + vectors[k]) / 2.0;
  cert.center /= static_cast<double>(pairs.size());
  const double center_norm = cert.center.norm();
  if (center_norm <= kCertificateTol) {
    fail(ErrorKind::InvalidInput, "the common midpoint c is zero");
  }

  double midpoint = 0.0;
  double orthogonal = 0.0;
  for (const auto& [i, k] : pairs) {
    midpoint = std::max(midpoint, ((vectors[i] + vectors[k]) / 2.0 - cert.center).cwiseAbs().maxCoeff());
    orthogonal = std::max(orthogonal, std::abs(vectors[i].dot(vectors[k])));
  }
  RealVector subset_sum = RealVector::Zero(len);
  for (int j : odd_subset) subset_sum += vectors[j];
  const double odd_sum =
      (subset_sum - static_cast<double>(odd_subset.size()) * cert.center).cwiseAbs().maxCoeff();
  const double min_inner = real_gram(vectors).minCoeff();

  cert.checks = {
      at_most("common-midpoint", midpoint),
      above("nonzero-midpoint", center_norm),
      at_most("orthogonal-partners", orthogonal),
      at_most("odd-subset-sum", odd_sum),
      at_most("nonnegative-inner-products", std::max(0.0, -min_inner)),
  };
  cert.valid = all_passed(cert.checks);
  return cert;
}

GramLorentzFactorization cycle_vectors(int n) {
  require_cycle_size(n);
  std::vector<LorentzVector> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / n;
    RealVector x(2);
    x << std::cos(theta), std::sin(theta);
    out.emplace_back(1.0, x);
  }
  return GramLorentzFactorization(std::move(out));
}

std::vector<std::pair<int, int>> cycle_pairs(int n) {
  require_cycle_size(n);
  const int l = n / 2;
  std::vector<std::pair<int, int>> out;
  for (int k = 0; k < l; ++k) out.emplace_back(k, k + l);
  return out;
}

std::vector<int> cycle_odd_subset(int n) {
  require_cycle_size(n);
  std::vector<int> out;
  for (int k = 0; k < n; k += 2) out.push_back(k);
  return out;
}

NotVnaCertificate check_not_vna(const RealMatrix& x, const std::vector<int>& subset_i,
                                const std::vector<int>& subset_j, int i_star, int j_star) {
  require(x.rows() == x.cols() && x.rows() > 0, "not-VNA certificate needs a square matrix");
  require(is_symmetric(x), "not-VNA certificate needs a symmetric matrix");
  require(x.minCoeff() >= -1e-12 && is_psd(x), "not-VNA certificate needs a DNN matrix");
  const auto n = static_cast<int>(x.rows());
  for (const auto* subset : {&subset_i, &subset_j}) {
    require(!subset->empty(), "index subsets must be nonempty");
    std::set<int> seen;
    for (int i : *subset) {
      require(i >= 0 && i < n, "subset index out of range");
      require(seen.insert(i).second, "subset has a repeated index");
    }
  }
  require(std::find(subset_i.begin(), subset_i.end(), i_star) != subset_i.end(),
          "i* must belong to I");
  require(std::find(subset_j.begin(), subset_j.end(), j_star) != subset_j.end(),
          "j* must belong to J");

  NotVnaCertificate cert{subset_i, subset_j, i_star, j_star, {}, false};
  const int rank = numerical_rank(x);
  const int rank_i = numerical_rank(principal(x, subset_i));
  const int rank_j = numerical_rank(principal(x, subset_j));

  double orth_i = 0.0;
  for (int i : subset_i)
    if (i != i_star) orth_i = std::max(orth_i, std::abs(x(i_star, i)));
  double orth_j = 0.0;
  for (int j : subset_j)
    if (j != j_star) orth_j = std::max(orth_j, std::abs(x(j_star, j)));
  const double det = x(i_star, i_star) * x(j_star, j_star) - x(i_star, j_star) * x(j_star, i_star);

  cert.checks = {
      above("nonzero-vectors", x.diagonal().minCoeff()),
      at_most("span-I", std::abs(rank_i - rank), 0.0),
      at_most("span-J", std::abs(rank_j - rank), 0.0),
      at_most("orthogonal-pivot-I", orth_i),
      at_most("orthogonal-pivot-J", orth_j),
      above("pivots-not-parallel", det),
      above("pivots-not-orthogonal", std::abs(x(i_star, j_star))),
  };
  cert.valid = all_passed(cert.checks);
  return cert;
}

RealMatrix odd_cycle_dnn(int t) {
  require(t >= 2, "odd cycle family needs t >= 2");
  const int n = 2 * t + 1;
  const double lambda = 2.0 * std::cos(2.0 * std::numbers::pi * t / n);
  return Graph::cycle(n).adjacency() - lambda * RealMatrix::Identity(n, n);
}

VnaIndexSets odd_cycle_index_sets(int t) {
  require(t >= 2, "odd cycle family needs t >= 2");
  const int n = 2 * t + 1;
  VnaIndexSets s;
  for (int v = 0; v < n; ++v) {
    if (v != 1 && v != n - 1) s.subset_i.push_back(v);
    if (v != 0 && v != 2) s.subset_j.push_back(v);
  }
  s.i_star = 0;
  s.j_star = 1;
  return s;
}

Graph support_graph(const RealMatrix& x, double tol) {
  require(x.rows() == x.cols(), "support graph needs a square matrix");
  require(is_symmetric(x), "support graph needs a symmetric matrix");
  const auto n = static_cast<int>(x.rows());
  std::vector<Graph::Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (std::abs(x(u, v)) > tol) edges.emplace_back(u, v);
  return Graph(n, edges);
}

CpsdGraphResult is_cpsd_graph(const Graph& g, int cap) {
  if (g.n() > cap) {
    fail(ErrorKind::CapExceeded, "graph search is capped at " + std::to_string(cap) + " vertices");
  }
  if (bipartite(g)) return {true, {}};

  // Every cycle lies inside one block, so only non-bipartite blocks are searched.
  const Blocks blocks(g);
  std::vector<std::vector<Graph::Edge>> block_edges(static_cast<std::size_t>(blocks.count()));
  for (const auto& [u, v] : g.edges()) block_edges[blocks.of(u, v)].emplace_back(u, v);
  std::vector<bool> usable;
  usable.reserve(block_edges.size());
  for (const auto& edges : block_edges) usable.push_back(!bipartite(Graph(g.n(), edges)));

  OddCycleSearch search(g, blocks, std::move(usable));
  std::vector<int> cycle = search.run();
  if (cycle.empty()) return {true, {}};
  return {false, std::move(cycle)};
}

}  // namespace cpsdlab
