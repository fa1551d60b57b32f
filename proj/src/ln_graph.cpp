#include "lngraph/ln_graph.hpp"

#include <algorithm>

#include "lngraph/errors.hpp"

namespace lngraph {

namespace {

void require_vertex(const LnGraph& g, Vertex v, const char* what) {
  if (!g.contains(v)) {
    throw ParameterError(std::string(what) + ": vertex " + to_string(v) +
                         " is not a vertex of L(" + std::to_string(g.n()) +
                         ")");
  }
}

}  // namespace

LnGraph::LnGraph(int n) : n_(n) {}

LnGraph build_ln(int n, int order_cap) {
  if (n < 3) throw UnsupportedOrderError("n must be >= 3");
  if (n > order_cap) {
    throw UnsupportedOrderError("n = " + std::to_string(n) +
                                " exceeds the order cap " +
                                std::to_string(order_cap));
  }

  LnGraph g(n);
  g.vertices_.reserve(static_cast<size_t>(n) * (n - 1));
  g.cliques_.assign(n, {});
  for (int head = 1; head <= n; ++head) {
    auto& clique = g.cliques_[head - 1];
    clique.reserve(n - 1);
    for (int tail = 1; tail <= n; ++tail) {
      if (tail == head) continue;
      g.vertices_.push_back(Vertex{head, tail});
      clique.push_back(Vertex{head, tail});
    }
  }

  g.neighbors_.resize(g.vertices_.size());
  for (const Vertex v : g.vertices_) {
    auto& nbrs = g.neighbors_[vertex_rank(v, n)];
    nbrs.reserve(n - 1);
    for (int k = 1; k <= n; ++k) {
      if (k == v.head || k == v.tail) continue;
      nbrs.push_back(Vertex{v.head, k});
    }
    nbrs.push_back(outside_neighbor(v));
    std::sort(nbrs.begin(), nbrs.end());
  }
  return g;
}

int LnGraph::degree(Vertex v) const {
  require_vertex(*this, v, "degree");
  return static_cast<int>(neighbors_[rank_of(v)].size());
}

bool LnGraph::adjacent(Vertex a, Vertex b) const {
  require_vertex(*this, a, "adjacent");
  require_vertex(*this, b, "adjacent");
  return vertices_adjacent(a, b);
}

const std::vector<Vertex>& LnGraph::neighbors(Vertex v) const {
  require_vertex(*this, v, "neighbors");
  return neighbors_[rank_of(v)];
}

const std::vector<Vertex>& LnGraph::clique(CliqueId c) const {
  if (c.index < 1 || c.index > n_) {
    throw ParameterError("clique index " + std::to_string(c.index) +
                         " out of range 1.." + std::to_string(n_));
  }
  return cliques_[c.index - 1];
}

CliqueId LnGraph::clique_of(Vertex v) const {
  require_vertex(*this, v, "clique_of");
  return CliqueId{v.head};
}

CliqueId LnGraph::companion_clique(Vertex v) const {
  require_vertex(*this, v, "companion_clique");
  return CliqueId{v.tail};
}

std::pair<Vertex, Vertex> LnGraph::bridge(CliqueId a, CliqueId b) const {
  clique(a);
  clique(b);
  if (a == b) {
    throw ParameterError("bridge: cliques must be distinct, got C_" +
                         std::to_string(a.index) + " twice");
  }
  return {Vertex{a.index, b.index}, Vertex{b.index, a.index}};
}

}  // namespace lngraph
