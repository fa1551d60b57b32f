#ifndef LNGRAPH_LN_GRAPH_HPP
#define LNGRAPH_LN_GRAPH_HPP

#include <utility>
#include <vector>

#include "lngraph/vertex.hpp"

namespace lngraph {

/// The graph L(n) = L(B(n)) on the n(n-1) ordered pairs (i,j), i != j.
/// Immutable once built; safe for concurrent read-only use.
///
/// Vertices (i,j) and (r,s) are adjacent iff i = r (same clique) or
/// (r,s) = (j,i) (the swap). The sets C_i = { (i,j) : j != i } are
/// (n-1)-cliques partitioning the vertex set; between two cliques there
/// is exactly one edge, the bridge ((a,b),(b,a)).
class LnGraph {
 public:
  int n() const { return n_; }

  /// Number of vertices, n(n-1).
  int order() const { return n_ * (n_ - 1); }

  /// Number of edges, n(n-1)^2/2.
  long long size() const {
    return static_cast<long long>(n_) * (n_ - 1) * (n_ - 1) / 2;
  }

  bool contains(Vertex v) const { return vertex_in_range(v, n_); }

  /// Always n-1 for a valid vertex.
  int degree(Vertex v) const;

  /// Validated adjacency test; O(1).
  bool adjacent(Vertex a, Vertex b) const;

  /// Neighbors of v in ascending lexicographic order.
  const std::vector<Vertex>& neighbors(Vertex v) const;

  /// All vertices in ascending lexicographic order.
  const std::vector<Vertex>& vertices() const { return vertices_; }

  /// Members of C_c in ascending order.
  const std::vector<Vertex>& clique(CliqueId c) const;

  /// The clique containing v: C_head.
  CliqueId clique_of(Vertex v) const;

  /// The unique clique not containing v in which v has a neighbor:
  /// C_tail, reached through the swap (tail, head).
  CliqueId companion_clique(Vertex v) const;

  /// The unique adjacent pair between distinct cliques a and b,
  /// returned as ((a,b), (b,a)).
  std::pair<Vertex, Vertex> bridge(CliqueId a, CliqueId b) const;

  int rank_of(Vertex v) const { return vertex_rank(v, n_); }
  Vertex vertex_at(int rank) const { return vertex_at_rank(rank, n_); }

  friend LnGraph build_ln(int n, int order_cap);

 private:
  explicit LnGraph(int n);

  int n_ = 0;
  std::vector<Vertex> vertices_;
  std::vector<std::vector<Vertex>> neighbors_;  // by rank, sorted
  std::vector<std::vector<Vertex>> cliques_;    // cliques_[i-1] = C_i
};

/// Builds L(n) directly from the adjacency rule (no intermediate B(n)).
/// Throws UnsupportedOrderError for n < 3 or n > order_cap.
LnGraph build_ln(int n, int order_cap = kDefaultOrderCap);

}  // namespace lngraph

#endif
