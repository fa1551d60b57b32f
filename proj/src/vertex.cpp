#include "lngraph/vertex.hpp"

namespace lngraph {

std::string to_string(Vertex v) {
  return std::to_string(v.head) + "," + std::to_string(v.tail);
}

std::string vertex_label(Vertex v) {
  return "[" + std::to_string(v.head) + "," + std::to_string(v.head) +
         std::to_string(v.tail) + "]";
}

}  // namespace lngraph
