#ifndef LNGRAPH_EXPORT_HPP
#define LNGRAPH_EXPORT_HPP

#include <string>

#include "lngraph/bn_graph.hpp"
#include "lngraph/ln_graph.hpp"

namespace lngraph {

/// One edge per line, "i,j k,l", smaller endpoint first, lines in
/// lexicographic order, each edge once.
std::string to_edge_list(const LnGraph& g);

/// Undirected DOT; node id "i_j" (quoted), label "[i,ij]".
std::string to_dot(const LnGraph& g);

/// One edge per line, "i i,j": the singleton element, then the pair.
std::string to_edge_list(const BnGraph& g);

/// Undirected DOT; ids "s_i" / "p_i_j", labels "{i}" / "{i,j}".
std::string to_dot(const BnGraph& g);

}  // namespace lngraph

#endif
