#ifndef LNGRAPH_TESTS_MUTATION_SUITE_HPP
#define LNGRAPH_TESTS_MUTATION_SUITE_HPP

// Deterministic certificate-mutation suite shared by the unit tests and
// the acceptance run. Expected violations are recomputed here from the
// raw adjacency formula, independently of the verifier's bookkeeping,
// so a mislocalized report shows up as a mismatch.

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lngraph/chain.hpp"
#include "lngraph/cycles.hpp"
#include "lngraph/hamilton.hpp"
#include "lngraph/verify.hpp"

namespace mutation_suite {

using lngraph::CycleCertificate;
using lngraph::LnGraph;
using lngraph::PathCertificate;
using lngraph::Vertex;
using lngraph::Violation;
using lngraph::ViolationReason;

inline std::vector<Violation> expected_violations(
    const LnGraph& g, const std::vector<Vertex>& seq, bool is_cycle,
    Vertex first_claim, Vertex last_claim) {
  std::vector<Violation> out;
  const int count = static_cast<int>(seq.size());
  if ((is_cycle && count < 3) || (!is_cycle && count < 2)) {
    out.push_back({0, ViolationReason::WrongLength});
    return out;
  }
  std::map<Vertex, int> seen;
  for (int i = 0; i < count; ++i) {
    if (!g.contains(seq[i])) {
      out.push_back({i, ViolationReason::UnknownVertex});
      continue;
    }
    if (!seen.emplace(seq[i], i).second) {
      out.push_back({i, ViolationReason::DuplicateVertex});
    }
  }
  for (int i = 0; i + 1 < count; ++i) {
    if (!g.contains(seq[i]) || !g.contains(seq[i + 1])) continue;
    if (!lngraph::vertices_adjacent(seq[i], seq[i + 1])) {
      out.push_back({i, ViolationReason::NotAdjacent});
    }
  }
  if (seq.front() != first_claim) {
    out.push_back({0, ViolationReason::WrongEndpoint});
  }
  if (!is_cycle && seq.back() != last_claim) {
    out.push_back({count - 1, ViolationReason::WrongEndpoint});
  }
  if (is_cycle && g.contains(seq.front()) && g.contains(seq.back()) &&
      !lngraph::vertices_adjacent(seq.back(), seq.front())) {
    out.push_back({count - 1, ViolationReason::NotClosed});
  }
  return out;
}

struct SuiteResult {
  int attempted = 0;
  int rejected_correctly = 0;
  std::vector<std::string> mismatches;

  bool ok(int want) const {
    return rejected_correctly == want && mismatches.empty();
  }
};

// Runs `count` deterministic mutations (vertex swaps, truncations,
// endpoint changes) of valid certificates and checks each is rejected
// with exactly the independently expected violations.
inline SuiteResult run_rejection_suite(int count) {
  const LnGraph g4 = lngraph::build_ln(4);
  const LnGraph g5 = lngraph::build_ln(5);
  const LnGraph g6 = lngraph::build_ln(6);

  struct PathBase {
    const LnGraph* g;
    PathCertificate cert;
  };
  struct CycleBase {
    const LnGraph* g;
    CycleCertificate cert;
  };

  std::vector<CycleBase> cycles;
  for (const Vertex v : {Vertex{1, 2}, Vertex{3, 5}, Vertex{6, 1}}) {
    for (const int m : {3, 4, 6, 9, 17, 30}) {
      cycles.push_back({&g6, lngraph::cycle_through(g6, v, m)});
    }
  }

  std::vector<PathBase> paths;
  for (const int t : {2, 3, 5}) {
    paths.push_back(
        {&g6, lngraph::chain_path(g6, {1, 2}, {1, 4}, t).to_certificate(6)});
  }
  paths.push_back({&g5, lngraph::hamilton_path(g5, {1, 2}, {1, 3}).cert});
  paths.push_back({&g5, lngraph::hamilton_path(g5, {1, 2}, {3, 4}).cert});
  paths.push_back({&g4, lngraph::hamilton_path(g4, {1, 2}, {2, 1}).cert});
  paths.push_back({&g4, lngraph::hamilton_path(g4, {1, 3}, {2, 3}).cert});

  std::mt19937_64 rng(2024);
  const auto pick = [&rng](size_t bound) {
    return static_cast<size_t>(rng() % bound);
  };

  SuiteResult result;
  int produced = 0;
  int step = 0;
  while (produced < count) {
    const int kind = step % 3;
    const bool use_path = (step % 2) == 0;
    ++step;

    const LnGraph* g = nullptr;
    std::vector<Vertex> seq;
    bool is_cycle = false;
    Vertex first_claim{};
    Vertex last_claim{};
    std::string label;

    if (use_path) {
      const PathBase& base = paths[pick(paths.size())];
      g = base.g;
      seq = base.cert.vertices;
      first_claim = base.cert.endpoints.first;
      last_claim = base.cert.endpoints.second;
      label = "path";
    } else {
      const CycleBase& base = cycles[pick(cycles.size())];
      g = base.g;
      seq = base.cert.vertices;
      is_cycle = true;
      first_claim = base.cert.anchor;
      last_claim = base.cert.anchor;
      label = "cycle";
    }

    if (kind == 0 && seq.size() >= 2) {
      const size_t a = pick(seq.size());
      size_t b = pick(seq.size());
      if (a == b) b = (b + 1) % seq.size();
      std::swap(seq[a], seq[b]);
      label += " swap";
    } else if (kind == 1 && seq.size() >= 2) {
      seq.pop_back();
      label += " truncate";
    } else {
      // Move the declared endpoint (or anchor) somewhere else.
      const Vertex actual = seq.front();
      Vertex other = actual;
      for (const Vertex v : g->vertices()) {
        if (v != actual) {
          other = v;
          break;
        }
      }
      first_claim = other;
      label += " endpoint";
    }

    const std::vector<Violation> expected =
        expected_violations(*g, seq, is_cycle, first_claim, last_claim);
    if (expected.empty()) continue;  // mutation happened to stay valid
    ++produced;
    ++result.attempted;

    lngraph::VerificationResult verdict;
    if (is_cycle) {
      CycleCertificate cert{g->n(), first_claim, seq};
      verdict = lngraph::verify_cycle(*g, cert);
    } else {
      PathCertificate cert{g->n(), {first_claim, last_claim}, seq};
      verdict = lngraph::verify_path(*g, cert);
    }

    auto reported = verdict.violations;
    auto wanted = expected;
    const auto order = [](const Violation& x, const Violation& y) {
      return std::pair(x.index, static_cast<int>(x.reason)) <
             std::pair(y.index, static_cast<int>(y.reason));
    };
    std::sort(reported.begin(), reported.end(), order);
    std::sort(wanted.begin(), wanted.end(), order);

    if (verdict.ok || reported != wanted) {
      std::ostringstream why;
      why << label << ": expected";
      for (const Violation& v : wanted)
        why << " " << to_string(v.reason) << "@" << v.index;
      why << ", got" << (verdict.ok ? " ok" : "");
      for (const Violation& v : reported)
        why << " " << to_string(v.reason) << "@" << v.index;
      result.mismatches.push_back(why.str());
    } else {
      ++result.rejected_correctly;
    }
  }
  return result;
}

}  // namespace mutation_suite

#endif
