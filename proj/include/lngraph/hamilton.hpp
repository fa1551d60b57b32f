#ifndef LNGRAPH_HAMILTON_HPP
#define LNGRAPH_HAMILTON_HPP

#include <cstdint>
#include <optional>

#include "lngraph/certificate.hpp"
#include "lngraph/ln_graph.hpp"
#include "lngraph/survey.hpp"

namespace lngraph {

/// How a Hamiltonian path was obtained.
enum class HamiltonMethod {
  SameClique,        // endpoints share a clique: chain + final clique block
  CrossClique,       // endpoints in distinct cliques: ordered clique tour
  ExhaustiveSearch,  // n = 4 fallback when no legal clique order exists
};

struct HamiltonPathResult {
  PathCertificate cert;
  HamiltonMethod method{};
};

/// Builds a Hamiltonian v-w path for any distinct pair, n >= 4.
///
/// Same clique C: thread all other cliques with the t = n-1 chain from v
/// to the smallest clique-mate w1 (not w), fully expand each clique on
/// the chain, then finish with the rest of C and w.
///
/// Distinct cliques: visit all n cliques in one pass, entering and
/// leaving through bridge pairs, consuming each clique as one contiguous
/// block. The middle cliques are taken ascending, repaired minimally so
/// that the first one is not the companion clique of v and the last one
/// is not the companion clique of w (otherwise an endpoint would collide
/// with its block's exit bridge vertex). At n = 4 the two-slot middle can
/// make that impossible; those pairs fall back to exhaustive search over
/// the 12-vertex graph.
///
/// Throws ParameterError for v = w, UnsupportedOrderError for n < 4.
HamiltonPathResult hamilton_path(const LnGraph& g, Vertex v, Vertex w);

inline constexpr std::uint64_t kDefaultSampleSeed = 1;

/// Verifies hamilton_path over all unordered vertex pairs, or over a
/// deterministic pseudo-random sample of `sample_pairs` of them drawn
/// with the given seed. Also tallies construction methods, so callers
/// can assert the n = 4 fallback never fires elsewhere.
SurveyReport hamilton_survey(
    const LnGraph& g, std::optional<long long> sample_pairs = std::nullopt,
    std::uint64_t seed = kDefaultSampleSeed);

}  // namespace lngraph

#endif
