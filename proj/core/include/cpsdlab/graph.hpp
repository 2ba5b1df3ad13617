#pragma once

#include <set>
#include <utility>
#include <vector>

#include "cpsdlab/matcore.hpp"

namespace cpsdlab {

/// Simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  using Edge = std::pair<int, int>;

  Graph() = default;
  // Edges are normalized to (min, max); loops, duplicates and out-of-range
  // endpoints are rejected.
  Graph(int n, const std::vector<Edge>& edges);

  static Graph cycle(int n);
  static Graph complete(int n);
  static Graph empty(int n) { return Graph(n, {}); }

  int n() const { return n_; }
  const std::set<Edge>& edges() const { return edges_; }
  bool adjacent(int u, int v) const;
  const std::vector<int>& neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }
  RealMatrix adjacency() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::set<Edge> edges_;
  std::vector<std::vector<int>> adj_;  // sorted ascending
};

}  // namespace cpsdlab
