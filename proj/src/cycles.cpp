#include "lngraph/cycles.hpp"

#include <algorithm>
#include <chrono>
#include <string>

#include "lngraph/chain.hpp"
#include "lngraph/errors.hpp"
#include "lngraph/verify.hpp"

namespace lngraph {

namespace {

// The `count` smallest members of the clique not among `used`.
std::vector<Vertex> spare_members(const LnGraph& g, CliqueId c, int count,
                                  const std::vector<Vertex>& used) {
  std::vector<Vertex> spare;
  spare.reserve(count);
  for (const Vertex x : g.clique(c)) {
    if (static_cast<int>(spare.size()) == count) break;
    if (std::find(used.begin(), used.end(), x) == used.end()) {
      spare.push_back(x);
    }
  }
  return spare;
}

}  // namespace

CycleCertificate cycle_through(const LnGraph& g, Vertex v, int m) {
  const int n = g.n();
  if (n < 6) {
    throw UnsupportedOrderError(
        "cycle_through requires n >= 6; L(4) and L(5) miss short cycle "
        "lengths");
  }
  if (!g.contains(v)) {
    throw ParameterError("cycle_through: " + to_string(v) +
                         " is not a vertex of L(" + std::to_string(n) + ")");
  }
  if (m < 3 || m > n * (n - 1)) {
    throw ParameterError("cycle length m = " + std::to_string(m) +
                         " outside 3.." + std::to_string(n * (n - 1)));
  }

  CycleCertificate cert;
  cert.n = n;
  cert.anchor = v;

  if (m <= 5) {
    // In-clique cycle: v and its m-1 smallest clique-mates.
    cert.vertices.push_back(v);
    for (const Vertex x : g.clique(g.clique_of(v))) {
      if (static_cast<int>(cert.vertices.size()) == m) break;
      if (x != v) cert.vertices.push_back(x);
    }
    return cert;
  }

  // Skeleton: the chain from v to its smallest clique-mate w, closed by
  // the in-clique edge w-v. t = 2 serves 6..3(n-1); t = n-1 serves the
  // rest (its 2n-cycle never overshoots since 2n < 3(n-1)+1 for n >= 6).
  const CliqueId home = g.clique_of(v);
  Vertex w{};
  for (const Vertex x : g.clique(home)) {
    if (x != v) {
      w = x;
      break;
    }
  }
  const int t = m <= 3 * (n - 1) ? 2 : n - 1;
  const CliqueChainPath chain = chain_path(g, v, w, t);
  const int skeleton_len = 2 * t + 2;

  std::vector<std::pair<CliqueId, int>> slots;
  slots.emplace_back(home, n - 3);
  for (const CliqueId c : chain.clique_trace) slots.emplace_back(c, n - 3);
  const ExpansionPlan plan = allocate_insertions(slots, m - skeleton_len);

  // Splice the intermediate cliques back to front so anchor positions
  // stay valid; clique s occupies positions 2s-1 and 2s of the chain.
  std::vector<Vertex> seq = chain.vertices;
  for (int s = t; s >= 1; --s) {
    const int count = plan.counts[s].second;
    if (count == 0) continue;
    const CliqueId c = chain.clique_trace[s - 1];
    seq = expand_in_clique(g, seq, 2 * s - 1,
                           spare_members(g, c, count, chain.vertices));
  }
  // The home clique grows along the closing edge w-v: append after w.
  const int home_count = plan.counts[0].second;
  for (const Vertex x : spare_members(g, home, home_count, {v, w})) {
    seq.push_back(x);
  }

  cert.vertices = std::move(seq);
  return cert;
}

SurveyReport pancyclicity_survey(const LnGraph& g) {
  const int n = g.n();
  if (n < 6) {
    throw UnsupportedOrderError("pancyclicity survey requires n >= 6");
  }

  SurveyReport report;
  report.kind = "pancyclic";
  report.n = n;
  const auto started = std::chrono::steady_clock::now();

  const int order = g.order();
  for (const Vertex v : g.vertices()) {
    for (int m = 3; m <= order; ++m) {
      ++report.total;
      std::string problem;
      try {
        const CycleCertificate cert = cycle_through(g, v, m);
        const VerificationResult check = verify_cycle(g, cert);
        if (!check.ok) {
          problem = "verifier: " + check.summary();
        } else if (cert.length() != m) {
          problem = "built length " + std::to_string(cert.length());
        } else if (cert.vertices.front() != v) {
          problem = "anchor misplaced";
        }
      } catch (const std::exception& e) {
        problem = e.what();
      }
      if (problem.empty()) {
        ++report.passed;
      } else {
        ++report.failed;
        report.record_failure("v=" + to_string(v) + " m=" + std::to_string(m) +
                              ": " + problem);
      }
    }
  }

  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - started)
                          .count();
  return report;
}

}  // namespace lngraph
