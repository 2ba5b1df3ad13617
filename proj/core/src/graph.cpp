#include "cpsdlab/graph.hpp"

#include <algorithm>
#include <string>

#include "cpsdlab/error.hpp"

namespace cpsdlab {

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n), adj_(static_cast<std::size_t>(n)) {
  require(n >= 0, "graph needs a nonnegative vertex count");
  for (auto [u, v] : edges) {
    require(u >= 0 && v >= 0 && u < n && v < n,
            "edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range");
    require(u != v, "graph loops are not allowed");
    Edge e{std::min(u, v), std::max(u, v)};
    require(edges_.insert(e).second, "duplicate edge (" + std::to_string(e.first) + ", " +
                                         std::to_string(e.second) + ")");
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

Graph Graph::cycle(int n) {
  require(n >= 3, "cycle graph needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph Graph::complete(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, edges);
}

bool Graph::adjacent(int u, int v) const {
  return edges_.count({std::min(u, v), std::max(u, v)}) > 0;
}

RealMatrix Graph::adjacency() const {
  RealMatrix a = RealMatrix::Zero(n_, n_);
  for (auto [u, v] : edges_) a(u, v) = a(v, u) = 1.0;
  return a;
}

}  // namespace cpsdlab
