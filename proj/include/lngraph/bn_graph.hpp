#ifndef LNGRAPH_BN_GRAPH_HPP
#define LNGRAPH_BN_GRAPH_HPP

#include <string>
#include <utility>
#include <vector>

#include "lngraph/vertex.hpp"

namespace lngraph {

/// A vertex of B(n): a 1- or 2-subset of {1..n}. For singletons b is 0;
/// for pairs a < b.
struct BnVertex {
  enum class Kind { Singleton, Pair };

  int a = 0;
  int b = 0;

  Kind kind() const { return b == 0 ? Kind::Singleton : Kind::Pair; }
  auto operator<=>(const BnVertex&) const = default;

  static BnVertex singleton(int x) { return BnVertex{x, 0}; }
  static BnVertex pair(int x, int y) {
    return x < y ? BnVertex{x, y} : BnVertex{y, x};
  }
};

std::string to_string(const BnVertex& v);

/// A plain undirected simple graph on vertices 0..vertex_count-1.
/// Used as the domain and codomain of the line-graph operator.
struct SimpleGraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;     // u < v, no duplicates
  std::vector<std::vector<int>> adjacency;    // sorted neighbor lists

  void finalize();  // builds adjacency from edges
};

/// B(n): vertices are the 1- and 2-subsets of {1..n}; {v,w} is an edge
/// iff one contains the other. Immutable once built.
class BnGraph {
 public:
  int n() const { return n_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  /// Singletons {1}..{n} first, then pairs in lexicographic order.
  const std::vector<BnVertex>& vertices() const { return vertices_; }

  /// Edges as index pairs into vertices(); each edge joins a singleton
  /// to a pair containing it. Listed so that edge k corresponds to the
  /// L(n) vertex of rank k under the canonical relabeling.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  int degree(int vertex_index) const;

  /// Canonical relabeling of edge k: ({i},{i,j}) becomes (i,j).
  Vertex edge_label(int edge_index) const;

  /// View as a plain graph, for the line-graph operator.
  SimpleGraph to_simple() const;

  friend BnGraph build_bn(int n, int order_cap);

 private:
  explicit BnGraph(int n) : n_(n) {}

  int n_ = 0;
  std::vector<BnVertex> vertices_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adjacency_;
};

/// Builds B(n). Throws UnsupportedOrderError for n < 3 or n > order_cap.
BnGraph build_bn(int n, int order_cap = kDefaultOrderCap);

/// The line graph: one vertex per edge of g, adjacent iff the edges
/// share an endpoint in g.
SimpleGraph line_graph(const SimpleGraph& g);

}  // namespace lngraph

#endif
