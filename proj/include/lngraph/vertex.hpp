#ifndef LNGRAPH_VERTEX_HPP
#define LNGRAPH_VERTEX_HPP

#include <compare>
#include <string>

namespace lngraph {

/// Largest n accepted by graph builders unless a caller raises the cap
/// explicitly; keeps the dense structures affordable.
inline constexpr int kDefaultOrderCap = 50;

/// A vertex of L(n): the pair (head, tail) stands for the B(n) edge
/// joining the singleton {head} to the 2-subset {head, tail}.
/// Valid vertices have 1 <= head, tail <= n and head != tail.
struct Vertex {
  int head = 0;
  int tail = 0;

  auto operator<=>(const Vertex&) const = default;
};

/// Identifier of the clique C_index = { (index, j) : j != index }.
struct CliqueId {
  int index = 0;

  auto operator<=>(const CliqueId&) const = default;
};

constexpr bool vertex_in_range(Vertex v, int n) {
  return v.head >= 1 && v.head <= n && v.tail >= 1 && v.tail <= n &&
         v.head != v.tail;
}

/// Adjacency rule of L(n): same head with different tails, or the
/// swapped pair (i,j) -- (j,i). Symmetric and irreflexive.
constexpr bool vertices_adjacent(Vertex a, Vertex b) {
  if (a == b) return false;
  if (a.head == b.head) return true;
  return a.tail == b.head && a.head == b.tail;
}

/// The swap partner (j,i) of (i,j): its unique neighbor outside C_i.
constexpr Vertex outside_neighbor(Vertex v) { return Vertex{v.tail, v.head}; }

/// Rank of v in the lexicographic vertex order of L(n), 0-based.
constexpr int vertex_rank(Vertex v, int n) {
  return (v.head - 1) * (n - 1) + (v.tail < v.head ? v.tail - 1 : v.tail - 2);
}

/// Inverse of vertex_rank.
constexpr Vertex vertex_at_rank(int rank, int n) {
  const int head = rank / (n - 1) + 1;
  int tail = rank % (n - 1) + 1;
  if (tail >= head) ++tail;
  return Vertex{head, tail};
}

/// "1,2" form used on the command line and in reports.
std::string to_string(Vertex v);

/// "[1,12]" form: head, then the 2-subset written head-then-tail.
std::string vertex_label(Vertex v);

}  // namespace lngraph

#endif
