#ifndef LNGRAPH_CHAIN_HPP
#define LNGRAPH_CHAIN_HPP

#include <utility>
#include <vector>

#include "lngraph/certificate.hpp"
#include "lngraph/ln_graph.hpp"

namespace lngraph {

/// Builds the canonical path of length 2t+1 from v to w (both in one
/// clique, v != w) through t other cliques, two vertices per clique:
///
///   (i,j), (j,i), (j,m2), (m2,j), (m2,m3), ..., (k,m_{t-1}), (k,i), (i,k)
///
/// for v = (i,j), w = (i,k). The first and last intermediate cliques are
/// forced (C_j and C_k); the t-2 middle ones are the smallest indices of
/// {1..n} minus {i,j,k}, ascending. Requires 2 <= t <= n-1.
/// Throws ParameterError on same-vertex, different-clique, or t out of
/// range.
CliqueChainPath chain_path(const LnGraph& g, Vertex v, Vertex w, int t);

/// Splices `extra` between path[position] and path[position+1], which
/// must be adjacent members of one clique; every splice vertex must lie
/// in that clique and be absent from the path. Splice order is the given
/// order; callers pass ascending sequences for canonical output.
/// Inside a clique all vertices are mutually adjacent, so the result is
/// again a simple path. Throws ParameterError otherwise.
std::vector<Vertex> expand_in_clique(const LnGraph& g,
                                     const std::vector<Vertex>& path,
                                     int position,
                                     const std::vector<Vertex>& extra);

/// Per-slot insertion counts produced by allocate_insertions.
struct ExpansionPlan {
  std::vector<std::pair<CliqueId, int>> counts;  // slot order preserved

  int total() const;
  int count_for(CliqueId c) const;  // 0 if absent
};

/// Greedy fill in slot order: the first slot takes min(total, capacity),
/// the remainder flows on. Throws ParameterError when total exceeds the
/// aggregate capacity or a capacity is negative.
ExpansionPlan allocate_insertions(
    const std::vector<std::pair<CliqueId, int>>& slots, int total);

}  // namespace lngraph

#endif
