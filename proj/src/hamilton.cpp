#include "lngraph/hamilton.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <string>

#include "lngraph/chain.hpp"
#include "lngraph/errors.hpp"
#include "lngraph/verify.hpp"

namespace lngraph {

namespace {

// Ascending members of clique c, skipping `skip`.
std::vector<Vertex> block_interior(const LnGraph& g, CliqueId c,
                                   const std::vector<Vertex>& skip) {
  std::vector<Vertex> interior;
  for (const Vertex x : g.clique(c)) {
    if (std::find(skip.begin(), skip.end(), x) == skip.end()) {
      interior.push_back(x);
    }
  }
  return interior;
}

// Endpoints share a clique: run the full-length chain from v to a third
// clique-mate w1, blow every chain clique up to all n-1 members, then
// sweep the rest of the home clique and end at w.
PathCertificate same_clique_path(const LnGraph& g, Vertex v, Vertex w) {
  const int n = g.n();
  const CliqueId home = g.clique_of(v);
  Vertex w1{};
  for (const Vertex x : g.clique(home)) {
    if (x != v && x != w) {
      w1 = x;
      break;
    }
  }

  const CliqueChainPath chain = chain_path(g, v, w1, n - 1);
  std::vector<Vertex> seq = chain.vertices;
  for (int s = n - 1; s >= 1; --s) {
    const CliqueId c = chain.clique_trace[s - 1];
    std::vector<Vertex> extra =
        block_interior(g, c, {seq[2 * s - 1], seq[2 * s]});
    seq = expand_in_clique(g, seq, 2 * s - 1, extra);
  }
  for (const Vertex x : block_interior(g, home, {v, w, w1})) {
    seq.push_back(x);
  }
  seq.push_back(w);
  return PathCertificate{n, {v, w}, std::move(seq)};
}

// Orders the middle cliques ascending, then repairs: the first must not
// be the companion clique of v, the last not the companion clique of w,
// or an endpoint would coincide with its block's exit bridge vertex.
// The offender swaps with the nearest position that satisfies both
// constraints. With one middle slot per side only at n = 4 can both
// fail; callers fall back to search then.
std::optional<std::vector<CliqueId>> repaired_middles(
    std::vector<CliqueId> middles, CliqueId forbidden_first,
    CliqueId forbidden_last) {
  const int count = static_cast<int>(middles.size());
  const auto legal = [&] {
    return middles.front() != forbidden_first &&
           middles.back() != forbidden_last;
  };
  if (middles.front() == forbidden_first) {
    for (int p = 1; p < count; ++p) {
      std::swap(middles[0], middles[p]);
      if (legal()) break;
      std::swap(middles[0], middles[p]);
    }
  }
  if (middles.back() == forbidden_last) {
    for (int q = count - 2; q >= 0; --q) {
      std::swap(middles[count - 1], middles[q]);
      if (legal()) break;
      std::swap(middles[count - 1], middles[q]);
    }
  }
  if (!legal()) return std::nullopt;
  return middles;
}

// Endpoints in distinct cliques: one pass over all n cliques, entering
// and leaving each through its bridge vertices and consuming it as a
// contiguous ascending block.
std::optional<PathCertificate> cross_clique_path(const LnGraph& g, Vertex v,
                                                 Vertex w) {
  const int n = g.n();
  const CliqueId first = g.clique_of(v);
  const CliqueId last = g.clique_of(w);

  std::vector<CliqueId> middles;
  middles.reserve(n - 2);
  for (int c = 1; c <= n; ++c) {
    if (c != first.index && c != last.index) middles.push_back(CliqueId{c});
  }
  const auto repaired = repaired_middles(
      std::move(middles), g.companion_clique(v), g.companion_clique(w));
  if (!repaired) return std::nullopt;

  std::vector<CliqueId> tour;
  tour.reserve(n);
  tour.push_back(first);
  tour.insert(tour.end(), repaired->begin(), repaired->end());
  tour.push_back(last);

  std::vector<Vertex> seq;
  seq.reserve(g.order());
  for (int idx = 0; idx < n; ++idx) {
    const CliqueId c = tour[idx];
    const Vertex entry =
        idx == 0 ? v : g.bridge(tour[idx - 1], c).second;
    const Vertex exit =
        idx == n - 1 ? w : g.bridge(c, tour[idx + 1]).first;
    seq.push_back(entry);
    for (const Vertex x : block_interior(g, c, {entry, exit})) {
      seq.push_back(x);
    }
    seq.push_back(exit);
  }
  return PathCertificate{n, {v, w}, std::move(seq)};
}

// Plain backtracking Hamiltonian path search, neighbors in ascending
// order. Only reachable at n = 4 (12 vertices), where it is instant.
std::optional<PathCertificate> exhaustive_path(const LnGraph& g, Vertex v,
                                               Vertex w) {
  const int order = g.order();
  std::vector<bool> visited(order, false);
  std::vector<Vertex> stack;
  stack.reserve(order);

  const auto dfs = [&](auto&& self, Vertex at) -> bool {
    visited[g.rank_of(at)] = true;
    stack.push_back(at);
    if (static_cast<int>(stack.size()) == order) {
      if (at == w) return true;
    } else {
      for (const Vertex next : g.neighbors(at)) {
        // w must stay available as the final vertex.
        if (visited[g.rank_of(next)]) continue;
        if (next == w && static_cast<int>(stack.size()) != order - 1) continue;
        if (self(self, next)) return true;
      }
    }
    visited[g.rank_of(at)] = false;
    stack.pop_back();
    return false;
  };

  if (!dfs(dfs, v)) return std::nullopt;
  return PathCertificate{g.n(), {v, w}, std::move(stack)};
}

}  // namespace

HamiltonPathResult hamilton_path(const LnGraph& g, Vertex v, Vertex w) {
  const int n = g.n();
  if (n < 4) {
    throw UnsupportedOrderError("hamilton_path requires n >= 4");
  }
  if (!g.contains(v) || !g.contains(w)) {
    throw ParameterError("hamilton_path: endpoints must be vertices of L(" +
                         std::to_string(n) + ")");
  }
  if (v == w) {
    throw ParameterError("hamilton_path: endpoints must be distinct");
  }

  if (g.clique_of(v) == g.clique_of(w)) {
    return {same_clique_path(g, v, w), HamiltonMethod::SameClique};
  }
  if (auto cert = cross_clique_path(g, v, w)) {
    return {std::move(*cert), HamiltonMethod::CrossClique};
  }
  // No legal clique order; possible only at n = 4.
  auto cert = exhaustive_path(g, v, w);
  if (!cert) {
    throw std::runtime_error("no Hamiltonian path found between " +
                             to_string(v) + " and " + to_string(w));
  }
  return {std::move(*cert), HamiltonMethod::ExhaustiveSearch};
}

namespace {

// Pair k (0-based, lexicographic by ranks) of the N(N-1)/2 unordered
// vertex pairs.
std::pair<int, int> unrank_pair(long long k, int order) {
  int u = 0;
  long long rest = k;
  while (rest >= order - 1 - u) {
    rest -= order - 1 - u;
    ++u;
  }
  return {u, u + 1 + static_cast<int>(rest)};
}

}  // namespace

SurveyReport hamilton_survey(const LnGraph& g,
                             std::optional<long long> sample_pairs,
                             std::uint64_t seed) {
  const int n = g.n();
  if (n < 4) {
    throw UnsupportedOrderError("hamilton survey requires n >= 4");
  }

  SurveyReport report;
  report.kind = "hamilton";
  report.n = n;
  const auto started = std::chrono::steady_clock::now();

  const int order = g.order();
  const long long all_pairs =
      static_cast<long long>(order) * (order - 1) / 2;

  std::vector<long long> chosen;
  if (sample_pairs && *sample_pairs < all_pairs) {
    if (*sample_pairs < 0) {
      throw ParameterError("hamilton survey: negative sample size");
    }
    // Partial Fisher-Yates over the pair indices; mt19937_64 plus plain
    // modulo keeps the draw identical across platforms.
    std::vector<long long> indices(all_pairs);
    for (long long i = 0; i < all_pairs; ++i) indices[i] = i;
    std::mt19937_64 rng(seed);
    for (long long i = 0; i < *sample_pairs; ++i) {
      const long long j = i + static_cast<long long>(rng() % (all_pairs - i));
      std::swap(indices[i], indices[j]);
    }
    chosen.assign(indices.begin(), indices.begin() + *sample_pairs);
    std::sort(chosen.begin(), chosen.end());
  } else {
    chosen.resize(all_pairs);
    for (long long i = 0; i < all_pairs; ++i) chosen[i] = i;
  }

  long long fallback_paths = 0;
  for (const long long k : chosen) {
    const auto [ur, vr] = unrank_pair(k, order);
    const Vertex u = g.vertex_at(ur);
    const Vertex v = g.vertex_at(vr);
    ++report.total;
    std::string problem;
    try {
      const HamiltonPathResult result = hamilton_path(g, u, v);
      if (result.method == HamiltonMethod::ExhaustiveSearch) ++fallback_paths;
      const VerificationResult check = verify_path(g, result.cert);
      if (!check.ok) {
        problem = "verifier: " + check.summary();
      } else if (!result.cert.hamiltonian()) {
        problem =
            "built " + std::to_string(result.cert.vertices.size()) +
            " of " + std::to_string(order) + " vertices";
      }
    } catch (const std::exception& e) {
      problem = e.what();
    }
    if (problem.empty()) {
      ++report.passed;
    } else {
      ++report.failed;
      report.record_failure("u=" + to_string(u) + " v=" + to_string(v) + ": " +
                            problem);
    }
  }

  report.notes.emplace_back("pairs_available", std::to_string(all_pairs));
  report.notes.emplace_back("fallback_paths", std::to_string(fallback_paths));
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - started)
                          .count();
  return report;
}

}  // namespace lngraph
