#ifndef LNGRAPH_VERIFY_HPP
#define LNGRAPH_VERIFY_HPP

#include <string>
#include <vector>

#include "lngraph/certificate.hpp"
#include "lngraph/ln_graph.hpp"

namespace lngraph {

enum class ViolationReason {
  NotAdjacent,      // index = first vertex of the offending pair
  DuplicateVertex,  // index = the repeated (later) occurrence
  WrongEndpoint,    // index = 0 or last, whichever end disagrees
  WrongLength,      // index = 0
  NotClosed,        // index = last
  UnknownVertex,    // index = the out-of-range vertex
};

const char* to_string(ViolationReason r);

struct Violation {
  int index = 0;
  ViolationReason reason{};

  bool operator==(const Violation&) const = default;
};

struct VerificationResult {
  bool ok = false;
  std::vector<Violation> violations;

  std::string summary() const;  // one violation per line
};

/// Checks that cert.vertices is a simple path in g between the declared
/// endpoints: every vertex in range, no repeats, consecutive vertices
/// adjacent, ends matching. Pure; all problems surface as violations.
/// Throws ParameterError if cert.n != g.n().
VerificationResult verify_path(const LnGraph& g, const PathCertificate& cert);

/// As verify_path, plus closure (last adjacent to first), length >= 3,
/// and anchor at index 0.
VerificationResult verify_cycle(const LnGraph& g, const CycleCertificate& cert);

}  // namespace lngraph

#endif
