#include "lngraph/bn_graph.hpp"

#include <algorithm>

#include "lngraph/errors.hpp"

namespace lngraph {

std::string to_string(const BnVertex& v) {
  if (v.kind() == BnVertex::Kind::Singleton) return "{" + std::to_string(v.a) + "}";
  return "{" + std::to_string(v.a) + "," + std::to_string(v.b) + "}";
}

void SimpleGraph::finalize() {
  adjacency.assign(vertex_count, {});
  for (const auto& [u, v] : edges) {
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
  }
  for (auto& list : adjacency) std::sort(list.begin(), list.end());
}

BnGraph build_bn(int n, int order_cap) {
  if (n < 3) throw UnsupportedOrderError("n must be >= 3");
  if (n > order_cap) {
    throw UnsupportedOrderError("n = " + std::to_string(n) +
                                " exceeds the order cap " +
                                std::to_string(order_cap));
  }

  BnGraph g(n);
  g.vertices_.reserve(n + n * (n - 1) / 2);
  for (int i = 1; i <= n; ++i) g.vertices_.push_back(BnVertex::singleton(i));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) g.vertices_.push_back(BnVertex::pair(i, j));

  // Pair {i,j} sits at index n + rank of (i,j) among lexicographic
  // pairs; rows 1..i-1 contribute (n-1) + ... + (n-i+1) entries.
  const auto pair_index = [n](int i, int j) {
    if (i > j) std::swap(i, j);
    return n + (i - 1) * n - (i - 1) * i / 2 + (j - i - 1);
  };

  // Edge k must correspond to the L(n) vertex of rank k: enumerate heads
  // ascending, then tails ascending, exactly the lexicographic order of
  // (head, tail).
  g.edges_.reserve(static_cast<size_t>(n) * (n - 1));
  for (int head = 1; head <= n; ++head) {
    for (int tail = 1; tail <= n; ++tail) {
      if (tail == head) continue;
      g.edges_.emplace_back(head - 1, pair_index(head, tail));
    }
  }

  g.adjacency_.assign(g.vertices_.size(), {});
  for (const auto& [u, v] : g.edges_) {
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (auto& list : g.adjacency_) std::sort(list.begin(), list.end());
  return g;
}

int BnGraph::degree(int vertex_index) const {
  if (vertex_index < 0 || vertex_index >= vertex_count()) {
    throw ParameterError("degree: vertex index out of range");
  }
  return static_cast<int>(adjacency_[vertex_index].size());
}

Vertex BnGraph::edge_label(int edge_index) const {
  if (edge_index < 0 || edge_index >= edge_count()) {
    throw ParameterError("edge_label: edge index out of range");
  }
  const auto& [s, p] = edges_[edge_index];
  const BnVertex& singleton = vertices_[s];
  const BnVertex& pair = vertices_[p];
  const int head = singleton.a;
  const int tail = pair.a == head ? pair.b : pair.a;
  return Vertex{head, tail};
}

SimpleGraph BnGraph::to_simple() const {
  SimpleGraph g;
  g.vertex_count = vertex_count();
  g.edges = edges_;
  for (auto& [u, v] : g.edges)
    if (u > v) std::swap(u, v);
  g.finalize();
  return g;
}

SimpleGraph line_graph(const SimpleGraph& g) {
  SimpleGraph lg;
  lg.vertex_count = static_cast<int>(g.edges.size());

  // Bucket edge indices by endpoint; edges sharing an endpoint become
  // pairwise adjacent line-graph vertices.
  std::vector<std::vector<int>> incident(g.vertex_count);
  for (int k = 0; k < lg.vertex_count; ++k) {
    incident[g.edges[k].first].push_back(k);
    incident[g.edges[k].second].push_back(k);
  }
  for (const auto& bucket : incident) {
    for (size_t x = 0; x < bucket.size(); ++x) {
      for (size_t y = x + 1; y < bucket.size(); ++y) {
        lg.edges.emplace_back(std::min(bucket[x], bucket[y]),
                              std::max(bucket[x], bucket[y]));
      }
    }
  }
  std::sort(lg.edges.begin(), lg.edges.end());
  lg.edges.erase(std::unique(lg.edges.begin(), lg.edges.end()), lg.edges.end());
  lg.finalize();
  return lg;
}

}  // namespace lngraph
