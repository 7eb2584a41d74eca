#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "carousel/graph.hpp"

namespace carousel {

enum class GraphFileFormat { graph6, dimacs, dot };

const char* to_string(GraphFileFormat f);
std::optional<GraphFileFormat> graph_format_from_string(std::string_view name);

/// Header-free graph6: N(n) followed by the upper triangle read column by
/// column, packed into 6-bit chunks offset by 63.  Supports n <= 258047.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

std::string to_dimacs(const Graph& g);
std::string to_dot(const Graph& g);

std::string export_graph(const Graph& g, GraphFileFormat format);

}  // namespace carousel
