#include "lngraph/verify.hpp"

#include <map>
#include <sstream>

#include "lngraph/errors.hpp"

namespace lngraph {

const char* to_string(ViolationReason r) {
  switch (r) {
    case ViolationReason::NotAdjacent: return "not-adjacent";
    case ViolationReason::DuplicateVertex: return "duplicate-vertex";
    case ViolationReason::WrongEndpoint: return "wrong-endpoint";
    case ViolationReason::WrongLength: return "wrong-length";
    case ViolationReason::NotClosed: return "not-closed";
    case ViolationReason::UnknownVertex: return "unknown-vertex";
  }
  return "?";
}

std::string VerificationResult::summary() const {
  std::ostringstream out;
  for (const Violation& v : violations) {
    out << to_string(v.reason) << " at index " << v.index << "\n";
  }
  return out.str();
}

namespace {

void require_same_n(const LnGraph& g, int cert_n) {
  if (cert_n != g.n()) {
    throw ParameterError("certificate n = " + std::to_string(cert_n) +
                         " does not match graph n = " + std::to_string(g.n()));
  }
}

// Range, duplicate and adjacency checks shared by paths and cycles.
// Adjacency of a pair is only judged when both members are in range.
void check_sequence(const LnGraph& g, const std::vector<Vertex>& seq,
                    std::vector<Violation>& out) {
  std::map<Vertex, int> first_seen;
  for (int i = 0; i < static_cast<int>(seq.size()); ++i) {
    if (!g.contains(seq[i])) {
      out.push_back({i, ViolationReason::UnknownVertex});
      continue;
    }
    auto [it, inserted] = first_seen.emplace(seq[i], i);
    if (!inserted) out.push_back({i, ViolationReason::DuplicateVertex});
  }
  for (int i = 0; i + 1 < static_cast<int>(seq.size()); ++i) {
    if (!g.contains(seq[i]) || !g.contains(seq[i + 1])) continue;
    if (!vertices_adjacent(seq[i], seq[i + 1])) {
      out.push_back({i, ViolationReason::NotAdjacent});
    }
  }
}

}  // namespace

VerificationResult verify_path(const LnGraph& g, const PathCertificate& cert) {
  require_same_n(g, cert.n);
  VerificationResult result;
  const auto& seq = cert.vertices;
  if (seq.size() < 2) {
    result.violations.push_back({0, ViolationReason::WrongLength});
    result.ok = false;
    return result;
  }
  check_sequence(g, seq, result.violations);
  if (seq.front() != cert.endpoints.first) {
    result.violations.push_back({0, ViolationReason::WrongEndpoint});
  }
  if (seq.back() != cert.endpoints.second) {
    result.violations.push_back(
        {static_cast<int>(seq.size()) - 1, ViolationReason::WrongEndpoint});
  }
  result.ok = result.violations.empty();
  return result;
}

VerificationResult verify_cycle(const LnGraph& g, const CycleCertificate& cert) {
  require_same_n(g, cert.n);
  VerificationResult result;
  const auto& seq = cert.vertices;
  if (seq.size() < 3) {
    result.violations.push_back({0, ViolationReason::WrongLength});
    result.ok = false;
    return result;
  }
  check_sequence(g, seq, result.violations);
  if (seq.front() != cert.anchor) {
    result.violations.push_back({0, ViolationReason::WrongEndpoint});
  }
  const int last = static_cast<int>(seq.size()) - 1;
  if (g.contains(seq.front()) && g.contains(seq.back()) &&
      !vertices_adjacent(seq.back(), seq.front())) {
    result.violations.push_back({last, ViolationReason::NotClosed});
  }
  result.ok = result.violations.empty();
  return result;
}

}  // namespace lngraph
