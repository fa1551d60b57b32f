#include "lngraph/metrics.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <vector>

namespace lngraph {

namespace {

constexpr int kUnreached = std::numeric_limits<int>::max();

std::vector<int> bfs_distances(const LnGraph& g, int source_rank) {
  std::vector<int> dist(g.order(), kUnreached);
  dist[source_rank] = 0;
  std::queue<int> queue;
  queue.push(source_rank);
  while (!queue.empty()) {
    const int at = queue.front();
    queue.pop();
    for (const Vertex nb : g.neighbors(g.vertex_at(at))) {
      const int r = g.rank_of(nb);
      if (dist[r] == kUnreached) {
        dist[r] = dist[at] + 1;
        queue.push(r);
      }
    }
  }
  return dist;
}

// Shortest cycle through the BFS tree of `root`: any non-tree edge (u,x)
// seen while expanding u closes a cycle of length d(u)+d(x)+1. The
// minimum over all roots is the girth.
int shortest_cycle_from(const LnGraph& g, int root) {
  std::vector<int> dist(g.order(), kUnreached);
  std::vector<int> parent(g.order(), -1);
  dist[root] = 0;
  std::queue<int> queue;
  queue.push(root);
  int best = kUnreached;
  while (!queue.empty()) {
    const int at = queue.front();
    queue.pop();
    for (const Vertex nb : g.neighbors(g.vertex_at(at))) {
      const int r = g.rank_of(nb);
      if (dist[r] == kUnreached) {
        dist[r] = dist[at] + 1;
        parent[r] = at;
        queue.push(r);
      } else if (r != parent[at]) {
        best = std::min(best, dist[at] + dist[r] + 1);
      }
    }
  }
  return best;
}

}  // namespace

GraphMetrics metrics(const LnGraph& g) {
  GraphMetrics m;
  m.order = g.order();
  m.size = g.size();

  m.min_degree = std::numeric_limits<int>::max();
  m.max_degree = 0;
  for (const Vertex v : g.vertices()) {
    const int d = g.degree(v);
    m.min_degree = std::min(m.min_degree, d);
    m.max_degree = std::max(m.max_degree, d);
  }

  int diameter = 0;
  bool connected = true;
  int girth = kUnreached;
  for (int r = 0; r < g.order(); ++r) {
    const std::vector<int> dist = bfs_distances(g, r);
    for (const int d : dist) {
      if (d == kUnreached) {
        connected = false;
      } else {
        diameter = std::max(diameter, d);
      }
    }
    girth = std::min(girth, shortest_cycle_from(g, r));
  }
  m.connected = connected;
  m.diameter = diameter;
  m.girth = girth == kUnreached ? 0 : girth;
  return m;
}

}  // namespace lngraph
