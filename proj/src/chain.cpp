#include "lngraph/chain.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "lngraph/errors.hpp"

namespace lngraph {

CliqueChainPath chain_path(const LnGraph& g, Vertex v, Vertex w, int t) {
  if (!g.contains(v) || !g.contains(w)) {
    throw ParameterError("chain_path: endpoints must be vertices of the graph");
  }
  if (v == w) throw ParameterError("chain_path: endpoints must be distinct");
  if (v.head != w.head) {
    throw ParameterError("chain_path: endpoints must share a clique, got " +
                         to_string(v) + " and " + to_string(w));
  }
  const int n = g.n();
  if (t < 2 || t > n - 1) {
    throw ParameterError("chain_path: t = " + std::to_string(t) +
                         " outside 2.." + std::to_string(n - 1));
  }

  const int i = v.head;
  const int j = v.tail;
  const int k = w.tail;

  // Clique sequence m_1..m_t: C_j first and C_k last are forced by the
  // bridge edges at v and w; the middle t-2 cliques are the smallest
  // indices not in {i,j,k}, ascending.
  std::vector<int> through;
  through.reserve(t);
  through.push_back(j);
  for (int c = 1; c <= n && static_cast<int>(through.size()) < t - 1; ++c) {
    if (c == i || c == j || c == k) continue;
    through.push_back(c);
  }
  through.push_back(k);

  // Clique C_{m_s} contributes (m_s, m_{s-1}) then (m_s, m_{s+1}), with
  // m_0 = m_{t+1} = i; consecutive vertices alternate between swap
  // bridges and same-head clique steps.
  CliqueChainPath path;
  path.t = t;
  path.vertices.reserve(2 * t + 2);
  path.clique_trace.reserve(t);
  path.vertices.push_back(v);
  for (int s = 0; s < t; ++s) {
    const int prev = s == 0 ? i : through[s - 1];
    const int next = s == t - 1 ? i : through[s + 1];
    path.vertices.push_back(Vertex{through[s], prev});
    path.vertices.push_back(Vertex{through[s], next});
    path.clique_trace.push_back(CliqueId{through[s]});
  }
  path.vertices.push_back(w);
  return path;
}

std::vector<Vertex> expand_in_clique(const LnGraph& g,
                                     const std::vector<Vertex>& path,
                                     int position,
                                     const std::vector<Vertex>& extra) {
  if (position < 0 || position + 1 >= static_cast<int>(path.size())) {
    throw ParameterError("expand_in_clique: position out of range");
  }
  const Vertex left = path[position];
  const Vertex right = path[position + 1];
  if (!g.contains(left) || !g.contains(right) || left.head != right.head ||
      !vertices_adjacent(left, right)) {
    throw ParameterError(
        "expand_in_clique: anchor pair must be adjacent members of one "
        "clique");
  }
  const std::set<Vertex> on_path(path.begin(), path.end());
  for (const Vertex x : extra) {
    if (!g.contains(x) || x.head != left.head) {
      throw ParameterError("expand_in_clique: " + to_string(x) +
                           " is not in clique C_" +
                           std::to_string(left.head));
    }
    if (on_path.count(x)) {
      throw ParameterError("expand_in_clique: " + to_string(x) +
                           " already lies on the path");
    }
  }
  for (size_t a = 0; a < extra.size(); ++a) {
    for (size_t b = a + 1; b < extra.size(); ++b) {
      if (extra[a] == extra[b]) {
        throw ParameterError("expand_in_clique: duplicate splice vertex " +
                             to_string(extra[a]));
      }
    }
  }

  std::vector<Vertex> result;
  result.reserve(path.size() + extra.size());
  result.insert(result.end(), path.begin(), path.begin() + position + 1);
  result.insert(result.end(), extra.begin(), extra.end());
  result.insert(result.end(), path.begin() + position + 1, path.end());
  return result;
}

int ExpansionPlan::total() const {
  int sum = 0;
  for (const auto& [c, count] : counts) sum += count;
  return sum;
}

int ExpansionPlan::count_for(CliqueId c) const {
  for (const auto& [id, count] : counts) {
    if (id == c) return count;
  }
  return 0;
}

ExpansionPlan allocate_insertions(
    const std::vector<std::pair<CliqueId, int>>& slots, int total) {
  if (total < 0) throw ParameterError("allocate_insertions: negative total");
  long long aggregate = 0;
  for (const auto& [c, capacity] : slots) {
    if (capacity < 0) {
      throw ParameterError("allocate_insertions: negative capacity for C_" +
                           std::to_string(c.index));
    }
    aggregate += capacity;
  }
  if (total > aggregate) {
    throw ParameterError("allocate_insertions: total " + std::to_string(total) +
                         " exceeds aggregate capacity " +
                         std::to_string(aggregate));
  }

  ExpansionPlan plan;
  plan.counts.reserve(slots.size());
  int remaining = total;
  for (const auto& [c, capacity] : slots) {
    const int take = std::min(remaining, capacity);
    plan.counts.emplace_back(c, take);
    remaining -= take;
  }
  return plan;
}

}  // namespace lngraph
