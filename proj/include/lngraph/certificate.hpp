#ifndef LNGRAPH_CERTIFICATE_HPP
#define LNGRAPH_CERTIFICATE_HPP

#include <utility>
#include <vector>

#include "lngraph/vertex.hpp"

namespace lngraph {

/// Claim: `vertices` is a simple path in L(n) from endpoints.first to
/// endpoints.second. Machine-checkable against the graph alone.
struct PathCertificate {
  int n = 0;
  std::pair<Vertex, Vertex> endpoints;
  std::vector<Vertex> vertices;

  /// Edge count of the claimed path.
  int length() const { return static_cast<int>(vertices.size()) - 1; }
  bool hamiltonian() const {
    return static_cast<int>(vertices.size()) == n * (n - 1);
  }
};

/// Claim: `vertices` is a simple cycle in L(n) through the anchor, which
/// sits at index 0; the last vertex closes back to the first.
struct CycleCertificate {
  int n = 0;
  Vertex anchor;
  std::vector<Vertex> vertices;

  /// Cycle length = number of vertices.
  int length() const { return static_cast<int>(vertices.size()); }
};

/// A path that starts and ends in one clique and threads t other
/// cliques, two consecutive vertices per clique; edge count 2t+1.
struct CliqueChainPath {
  std::vector<Vertex> vertices;
  std::vector<CliqueId> clique_trace;  // the t intermediate cliques, in order
  int t = 0;

  PathCertificate to_certificate(int n) const {
    return PathCertificate{n, {vertices.front(), vertices.back()}, vertices};
  }
};

}  // namespace lngraph

#endif
