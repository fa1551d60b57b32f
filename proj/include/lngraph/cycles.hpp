#ifndef LNGRAPH_CYCLES_HPP
#define LNGRAPH_CYCLES_HPP

#include "lngraph/certificate.hpp"
#include "lngraph/ln_graph.hpp"
#include "lngraph/survey.hpp"

namespace lngraph {

/// Builds an m-cycle through v, for any 3 <= m <= n(n-1), n >= 6.
///
/// Three regimes:
///   3 <= m <= 5            in-clique cycle: v plus the m-1 smallest
///                          clique-mates, closed inside C_head(v);
///   6 <= m <= 3(n-1)       close the t=2 chain from v to its smallest
///                          clique-mate into a 6-cycle, then grow it by
///                          splicing up to n-3 vertices into each of the
///                          three cliques on it;
///   3(n-1) < m <= n(n-1)   same with the t=n-1 chain (a 2n-cycle
///                          touching every clique).
///
/// Throws UnsupportedOrderError for n < 6 and ParameterError for m out
/// of range. The result always starts at v and passes verify_cycle.
CycleCertificate cycle_through(const LnGraph& g, Vertex v, int m);

/// Runs cycle_through for every vertex and every m in 3..n(n-1) and
/// verifies each certificate independently. Builder or verifier
/// failures land in the report instead of aborting the sweep.
SurveyReport pancyclicity_survey(const LnGraph& g);

}  // namespace lngraph

#endif
