#include "lngraph/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <string>
#include <vector>

#include "lngraph/bn_graph.hpp"
#include "lngraph/errors.hpp"

namespace lngraph {

const char* to_string(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::Yes: return "yes";
    case SearchOutcome::No: return "no";
    case SearchOutcome::Unknown: return "unknown";
  }
  return "?";
}

namespace {

std::vector<int> bfs_from(const LnGraph& g, Vertex source) {
  std::vector<int> dist(g.order(), -1);
  dist[g.rank_of(source)] = 0;
  std::vector<int> frontier{g.rank_of(source)};
  while (!frontier.empty()) {
    std::vector<int> next_frontier;
    for (const int at : frontier) {
      for (const Vertex nb : g.neighbors(g.vertex_at(at))) {
        const int r = g.rank_of(nb);
        if (dist[r] == -1) {
          dist[r] = dist[at] + 1;
          next_frontier.push_back(r);
        }
      }
    }
    frontier = std::move(next_frontier);
  }
  return dist;
}

// Exhaustive DFS over simple paths from `from` with exactly `length`
// edges, ending at `target`. Neighbors are explored in ascending order;
// each expansion counts against the budget. Branches whose graph
// distance to the target already exceeds the remaining edge count
// cannot complete and are cut.
class PathSearch {
 public:
  PathSearch(const LnGraph& g, Vertex target, long long budget)
      : g_(g), target_(target), remaining_budget_(budget),
        dist_to_target_(bfs_from(g, target)), visited_(g.order(), false) {}

  bool exhausted() const { return exhausted_; }

  bool run(Vertex from, int length) {
    visited_[g_.rank_of(from)] = true;
    const bool found = expand(from, length);
    visited_[g_.rank_of(from)] = false;
    return found;
  }

 private:
  bool expand(Vertex at, int remaining) {
    if (remaining_budget_-- <= 0) {
      exhausted_ = true;
      return false;
    }
    if (remaining == 0) return at == target_;
    for (const Vertex next : g_.neighbors(at)) {
      const int r = g_.rank_of(next);
      if (visited_[r]) continue;
      if (dist_to_target_[r] > remaining - 1) continue;
      visited_[r] = true;
      const bool found = expand(next, remaining - 1);
      visited_[r] = false;
      if (found || exhausted_) return found;
    }
    return false;
  }

  const LnGraph& g_;
  Vertex target_;
  long long remaining_budget_;
  std::vector<int> dist_to_target_;
  bool exhausted_ = false;
  std::vector<bool> visited_;
};

// Exhaustive DFS for a simple cycle of exact length through the anchor:
// a simple path of length-1 edges from the anchor whose last vertex is
// an anchor neighbor. Cut once every anchor neighbor is consumed, since
// no branch below can close the cycle.
class CycleSearch {
 public:
  CycleSearch(const LnGraph& g, Vertex anchor, long long budget)
      : g_(g), anchor_(anchor), remaining_budget_(budget),
        visited_(g.order(), false), closing_(g.order(), false) {
    for (const Vertex nb : g.neighbors(anchor)) {
      closing_[g.rank_of(nb)] = true;
    }
    open_closers_ = static_cast<int>(g.neighbors(anchor).size());
  }

  bool exhausted() const { return exhausted_; }

  bool run(int length) {
    visited_[g_.rank_of(anchor_)] = true;
    return expand(anchor_, length - 1);
  }

 private:
  bool expand(Vertex at, int remaining) {
    if (remaining_budget_-- <= 0) {
      exhausted_ = true;
      return false;
    }
    if (remaining == 0) return closing_[g_.rank_of(at)];
    if (open_closers_ == 0) return false;
    for (const Vertex next : g_.neighbors(at)) {
      const int r = g_.rank_of(next);
      if (visited_[r]) continue;
      visited_[r] = true;
      if (closing_[r]) --open_closers_;
      const bool found = expand(next, remaining - 1);
      visited_[r] = false;
      if (closing_[r]) ++open_closers_;
      if (found || exhausted_) return found;
    }
    return false;
  }

  const LnGraph& g_;
  Vertex anchor_;
  long long remaining_budget_;
  bool exhausted_ = false;
  int open_closers_ = 0;
  std::vector<bool> visited_;
  std::vector<bool> closing_;
};

SearchOutcome outcome_of(bool found, bool exhausted) {
  if (found) return SearchOutcome::Yes;
  return exhausted ? SearchOutcome::Unknown : SearchOutcome::No;
}

}  // namespace

SearchOutcome exists_path_of_length(const LnGraph& g, Vertex u, Vertex v,
                                    int length, SearchBudget budget) {
  if (!g.contains(u) || !g.contains(v)) {
    throw ParameterError("exists_path_of_length: invalid vertex");
  }
  if (length < 1) {
    throw ParameterError("exists_path_of_length: length must be >= 1");
  }
  PathSearch search(g, v, budget.node_expansions);
  const bool found = search.run(u, length);
  return outcome_of(found, search.exhausted());
}

SearchOutcome exists_cycle_of_length_through(const LnGraph& g, Vertex v,
                                             int length, SearchBudget budget) {
  if (!g.contains(v)) {
    throw ParameterError("exists_cycle_of_length_through: invalid vertex");
  }
  if (length < 3) {
    throw ParameterError("exists_cycle_of_length_through: length must be >= 3");
  }
  CycleSearch search(g, v, budget.node_expansions);
  const bool found = search.run(length);
  return outcome_of(found, search.exhausted());
}

SearchOutcome edge_cycle_membership(const LnGraph& g, Vertex a, Vertex b,
                                    int length, SearchBudget budget) {
  if (!g.adjacent(a, b)) {
    throw ParameterError("edge_cycle_membership: {" + to_string(a) + ", " +
                         to_string(b) + "} is not an edge");
  }
  if (length < 3) {
    throw ParameterError("edge_cycle_membership: length must be >= 3");
  }
  // An l-cycle with a and b consecutive is the edge plus a simple b-a
  // path of l-1 >= 2 edges.
  return exists_path_of_length(g, b, a, length - 1, budget);
}

bool cross_validate_line_graph(int n) {
  const BnGraph bn = build_bn(n);
  const LnGraph ln = build_ln(n);
  const SimpleGraph lg = line_graph(bn.to_simple());

  if (lg.vertex_count != ln.order()) return false;

  // Relabel line-graph vertex k (edge k of B(n)) to its (head, tail)
  // rank, then compare neighbor sets exactly.
  std::vector<int> rank_of_edge(lg.vertex_count);
  std::vector<bool> seen(lg.vertex_count, false);
  for (int k = 0; k < lg.vertex_count; ++k) {
    const Vertex label = bn.edge_label(k);
    if (!vertex_in_range(label, n)) return false;
    const int r = vertex_rank(label, n);
    if (seen[r]) return false;  // relabeling must be a bijection
    seen[r] = true;
    rank_of_edge[k] = r;
  }

  for (int k = 0; k < lg.vertex_count; ++k) {
    std::vector<int> relabeled;
    relabeled.reserve(lg.adjacency[k].size());
    for (const int other : lg.adjacency[k]) {
      relabeled.push_back(rank_of_edge[other]);
    }
    std::sort(relabeled.begin(), relabeled.end());

    const Vertex here = ln.vertex_at(rank_of_edge[k]);
    std::vector<int> expected;
    expected.reserve(ln.neighbors(here).size());
    for (const Vertex nb : ln.neighbors(here)) {
      expected.push_back(ln.rank_of(nb));
    }
    std::sort(expected.begin(), expected.end());
    if (relabeled != expected) return false;
  }
  return true;
}

namespace {

struct ClaimResult {
  std::string description;
  SearchOutcome outcome;
};

// Worst case over all anchors: any Yes refutes, otherwise any Unknown
// taints, otherwise No.
SearchOutcome no_cycle_anywhere(const LnGraph& g, int length,
                                SearchBudget budget) {
  bool unknown = false;
  for (const Vertex v : g.vertices()) {
    const SearchOutcome o = exists_cycle_of_length_through(g, v, length, budget);
    if (o == SearchOutcome::Yes) return SearchOutcome::Yes;
    if (o == SearchOutcome::Unknown) unknown = true;
  }
  return unknown ? SearchOutcome::Unknown : SearchOutcome::No;
}

}  // namespace

SurveyReport negatives_survey(const LnGraph& g, SearchBudget budget) {
  const int n = g.n();
  if (n < 4) {
    throw UnsupportedOrderError("negatives survey requires n >= 4");
  }

  SurveyReport report;
  report.kind = "negatives";
  report.n = n;
  const auto started = std::chrono::steady_clock::now();

  std::vector<ClaimResult> claims;
  if (n == 4) {
    claims.push_back({"no 4-cycle anywhere", no_cycle_anywhere(g, 4, budget)});
    claims.push_back({"no 5-cycle anywhere", no_cycle_anywhere(g, 5, budget)});
  }
  if (n == 5) {
    claims.push_back({"no 5-cycle anywhere", no_cycle_anywhere(g, 5, budget)});
  }
  const Vertex u{1, 2};
  const Vertex v{2, 1};
  claims.push_back({"no path of length 3 between (1,2) and (2,1)",
                    exists_path_of_length(g, u, v, 3, budget)});
  claims.push_back({"no path of length 4 between (1,2) and (2,1)",
                    exists_path_of_length(g, u, v, 4, budget)});
  claims.push_back({"edge {(1,2),(2,1)} on no 3-cycle",
                    edge_cycle_membership(g, u, v, 3, budget)});
  claims.push_back({"edge {(1,2),(2,1)} on no 4-cycle",
                    edge_cycle_membership(g, u, v, 4, budget)});

  for (const ClaimResult& claim : claims) {
    ++report.total;
    switch (claim.outcome) {
      case SearchOutcome::No:
        ++report.passed;
        report.notes.emplace_back(claim.description, "confirmed");
        break;
      case SearchOutcome::Yes:
        ++report.failed;
        report.notes.emplace_back(claim.description, "refuted");
        report.record_failure(claim.description + ": refuted by search");
        break;
      case SearchOutcome::Unknown:
        ++report.unknown;
        report.notes.emplace_back(claim.description, "unknown");
        report.record_failure(claim.description + ": budget exhausted");
        break;
    }
  }

  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - started)
                          .count();
  return report;
}

}  // namespace lngraph
