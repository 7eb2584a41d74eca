#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "carousel/graph.hpp"

namespace carousel {

inline constexpr std::int64_t kDefaultRankwidthCap = 10;
inline constexpr std::int64_t kDefaultCertifyCap = 24;

/// Cubic tree whose leaves are in bijection with V(G).  Nodes are 1-based;
/// leaf_vertex[node] is the graph vertex at a leaf and 0 for internal nodes.
struct TreeDecomposition {
  std::int64_t node_count = 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> edges;
  std::vector<VertexId> leaf_vertex;  // size node_count + 1; index 0 unused

  std::vector<std::vector<std::int64_t>> adjacency() const;
};

/// Checks connectivity, acyclicity, internal degree 3 and the leaf
/// bijection with V(G); throws std::invalid_argument on violation.
void validate_tree(const TreeDecomposition& tree, const Graph& g);

/// Leaf vertex sets of the two components of T - e.
std::pair<std::vector<VertexId>, std::vector<VertexId>> edge_leaf_partition(
    const TreeDecomposition& tree, std::size_t edge_index);

std::size_t edge_width(const Graph& g, const TreeDecomposition& tree,
                       std::size_t edge_index);
std::size_t width(const Graph& g, const TreeDecomposition& tree);

/// An edge whose induced leaf partition is balanced, found by following the
/// orientation toward larger components until it stalls.  Such an edge
/// always exists for a valid tree.
std::size_t balanced_edge(const Graph& g, const TreeDecomposition& tree);

struct RankwidthResult {
  std::size_t width = 0;
  std::optional<TreeDecomposition> tree;  // absent when |V| <= 1
};

/// Minimum width over every labeled cubic tree, enumerated by iterative
/// leaf insertion with memoized cut ranks and monotone pruning.
RankwidthResult rankwidth_exact(const Graph& g,
                                std::int64_t cap = kDefaultRankwidthCap);

struct CertificateReport {
  std::size_t min_balanced_rank = 0;
  Bipartition witness_partition;
  std::uint64_t partitions_examined = 0;
};

/// Minimum cut rank over all balanced bipartitions (one vertex pinned to Y
/// to kill the Y/Z symmetry).  The rankwidth is at least this value.  When
/// r_max is given the scan may stop early at any balanced partition of rank
/// below it.
CertificateReport certify_lower_bound(const Graph& g,
                                      std::optional<std::size_t> r_max = std::nullopt,
                                      std::int64_t cap = kDefaultCertifyCap);

std::string write_tree_text(const TreeDecomposition& tree);
TreeDecomposition parse_tree_text(const std::string& text);

}  // namespace carousel
