#ifndef LNGRAPH_ORACLE_HPP
#define LNGRAPH_ORACLE_HPP

#include "lngraph/ln_graph.hpp"
#include "lngraph/survey.hpp"

namespace lngraph {

/// Answer of an exhaustive search. Unknown means the node-expansion
/// budget ran out; it is never collapsed into No.
enum class SearchOutcome { Yes, No, Unknown };

const char* to_string(SearchOutcome o);

struct SearchBudget {
  long long node_expansions = 100'000'000;
};

/// Whether a simple u-v path with exactly `length` edges exists.
/// Exhaustive DFS with visited-set pruning, neighbors in lexicographic
/// order; intended for small n. Throws ParameterError for invalid
/// vertices or length < 1.
SearchOutcome exists_path_of_length(const LnGraph& g, Vertex u, Vertex v,
                                    int length, SearchBudget budget = {});

/// Whether a simple cycle of exactly `length` >= 3 through v exists.
SearchOutcome exists_cycle_of_length_through(const LnGraph& g, Vertex v,
                                             int length,
                                             SearchBudget budget = {});

/// Whether some simple cycle of exactly `length` contains the edge
/// {a, b}, the two endpoints consecutive. Throws ParameterError if
/// {a, b} is not an edge or length < 3.
SearchOutcome edge_cycle_membership(const LnGraph& g, Vertex a, Vertex b,
                                    int length, SearchBudget budget = {});

/// True iff build_ln(n) and line_graph(build_bn(n)) have identical
/// adjacency under the canonical edge relabeling ({i},{i,j}) -> (i,j).
bool cross_validate_line_graph(int n);

/// Confirms the non-existence claims that apply to this n, each by
/// exhaustive search:
///   n = 4   no 4-cycle, no 5-cycle anywhere;
///   n = 5   no 5-cycle anywhere;
///   n >= 4  no simple path of length 3 or 4 between (1,2) and (2,1),
///           and the edge {(1,2),(2,1)} on no 3-cycle and no 4-cycle.
/// A claim passes only when the search answers No; Unknown is reported
/// separately. Throws UnsupportedOrderError for n < 4.
SurveyReport negatives_survey(const LnGraph& g, SearchBudget budget = {});

}  // namespace lngraph

#endif
