#include "carousel/formats.hpp"

#include <sstream>
#include <stdexcept>

namespace carousel {

namespace {

constexpr VertexId kGraph6MaxVertices = 258047;

void append_graph6_size(std::string& out, VertexId n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
}

}  // namespace

const char* to_string(GraphFileFormat f) {
  switch (f) {
    case GraphFileFormat::graph6: return "graph6";
    case GraphFileFormat::dimacs: return "dimacs";
    case GraphFileFormat::dot: return "dot";
  }
  return "?";
}

std::optional<GraphFileFormat> graph_format_from_string(std::string_view name) {
  if (name == "graph6") return GraphFileFormat::graph6;
  if (name == "dimacs") return GraphFileFormat::dimacs;
  if (name == "dot") return GraphFileFormat::dot;
  return std::nullopt;
}

std::string to_graph6(const Graph& g) {
  const VertexId n = g.vertex_count();
  if (n < 1) throw std::invalid_argument("graph6 requires at least one vertex");
  if (n > kGraph6MaxVertices) {
    throw std::invalid_argument("graph too large for the supported graph6 sizes");
  }
  std::string out;
  append_graph6_size(out, n);

  int bit_pos = 5;
  unsigned chunk = 0;
  // upper triangle, column-major: (0,1), (0,2), (1,2), (0,3), ...
  for (VertexId v = 2; v <= n; ++v) {
    for (VertexId u = 1; u < v; ++u) {
      if (g.adjacent(u, v)) chunk |= 1u << bit_pos;
      if (--bit_pos < 0) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = 0;
        bit_pos = 5;
      }
    }
  }
  if (bit_pos != 5) out.push_back(static_cast<char>(chunk + 63));
  return out;
}

Graph from_graph6(std::string_view text) {
  // strip an optional header and trailing whitespace
  if (text.rfind(">>graph6<<", 0) == 0) text.remove_prefix(10);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' ||
                           text.back() == ' ')) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw std::invalid_argument("empty graph6 text");

  std::size_t pos = 0;
  auto next = [&]() -> unsigned {
    if (pos >= text.size()) throw std::invalid_argument("truncated graph6 text");
    const unsigned c = static_cast<unsigned char>(text[pos++]);
    if (c < 63 || c > 126) throw std::invalid_argument("invalid graph6 byte");
    return c - 63;
  };

  VertexId n = 0;
  unsigned first = next();
  if (first < 63) {
    n = first;
  } else {
    const unsigned a = next();
    if (a == 63) throw std::invalid_argument("graph6 sizes above 258047 are not supported");
    n = (static_cast<VertexId>(a) << 12) | (static_cast<VertexId>(next()) << 6) |
        static_cast<VertexId>(next());
  }
  if (n < 1) throw std::invalid_argument("graph6 with no vertices");

  std::vector<std::pair<VertexId, VertexId>> edges;
  int bit_pos = -1;
  unsigned chunk = 0;
  for (VertexId v = 2; v <= n; ++v) {
    for (VertexId u = 1; u < v; ++u) {
      if (bit_pos < 0) {
        chunk = next();
        bit_pos = 5;
      }
      if ((chunk >> bit_pos) & 1u) edges.emplace_back(u, v);
      --bit_pos;
    }
  }
  if (pos != text.size()) throw std::invalid_argument("trailing bytes in graph6 text");
  return Graph::from_edges(n, edges, "graph6");
}

std::string to_dimacs(const Graph& g) {
  const auto edges = g.edge_list();
  std::ostringstream out;
  out << "p edge " << g.vertex_count() << " " << edges.size() << "\n";
  for (const auto& [u, v] : edges) out << "e " << u << " " << v << "\n";
  return out.str();
}

std::string to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  std::vector<bool> touched(static_cast<std::size_t>(g.vertex_count()) + 1, false);
  for (const auto& [u, v] : g.edge_list()) {
    out << "  " << u << " -- " << v << ";\n";
    touched[static_cast<std::size_t>(u)] = true;
    touched[static_cast<std::size_t>(v)] = true;
  }
  for (VertexId v = 1; v <= g.vertex_count(); ++v) {
    if (!touched[static_cast<std::size_t>(v)]) out << "  " << v << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string export_graph(const Graph& g, GraphFileFormat format) {
  switch (format) {
    case GraphFileFormat::graph6: return to_graph6(g);
    case GraphFileFormat::dimacs: return to_dimacs(g);
    case GraphFileFormat::dot: return to_dot(g);
  }
  throw std::invalid_argument("unknown export format");
}

}  // namespace carousel
