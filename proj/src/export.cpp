#include "lngraph/export.hpp"

#include <sstream>

namespace lngraph {

std::string to_edge_list(const LnGraph& g) {
  std::ostringstream out;
  for (const Vertex v : g.vertices()) {
    for (const Vertex nb : g.neighbors(v)) {
      if (v < nb) out << to_string(v) << " " << to_string(nb) << "\n";
    }
  }
  return out.str();
}

std::string to_dot(const LnGraph& g) {
  std::ostringstream out;
  out << "graph L" << g.n() << " {\n";
  for (const Vertex v : g.vertices()) {
    out << "  \"" << v.head << "_" << v.tail << "\" [label=\""
        << vertex_label(v) << "\"];\n";
  }
  for (const Vertex v : g.vertices()) {
    for (const Vertex nb : g.neighbors(v)) {
      if (v < nb) {
        out << "  \"" << v.head << "_" << v.tail << "\" -- \"" << nb.head
            << "_" << nb.tail << "\";\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

std::string to_edge_list(const BnGraph& g) {
  std::ostringstream out;
  for (const auto& [s, p] : g.edges()) {
    const BnVertex& singleton = g.vertices()[s];
    const BnVertex& pair = g.vertices()[p];
    out << singleton.a << " " << pair.a << "," << pair.b << "\n";
  }
  return out.str();
}

std::string to_dot(const BnGraph& g) {
  std::ostringstream out;
  out << "graph B" << g.n() << " {\n";
  for (const BnVertex& v : g.vertices()) {
    if (v.kind() == BnVertex::Kind::Singleton) {
      out << "  \"s_" << v.a << "\" [label=\"{" << v.a << "}\"];\n";
    } else {
      out << "  \"p_" << v.a << "_" << v.b << "\" [label=\"{" << v.a << ","
          << v.b << "}\"];\n";
    }
  }
  const auto id_of = [](const BnVertex& v) {
    if (v.kind() == BnVertex::Kind::Singleton)
      return "s_" + std::to_string(v.a);
    return "p_" + std::to_string(v.a) + "_" + std::to_string(v.b);
  };
  for (const auto& [s, p] : g.edges()) {
    out << "  \"" << id_of(g.vertices()[s]) << "\" -- \""
        << id_of(g.vertices()[p]) << "\";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace lngraph
