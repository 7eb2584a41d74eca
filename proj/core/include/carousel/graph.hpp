#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "carousel/gf2.hpp"

namespace carousel {

struct CarouselSpec;

using VertexId = std::int64_t;  // 1-based

inline constexpr VertexId kDefaultMaterializeCap = 50000;

/// Immutable graph with a total symmetric irreflexive adjacency oracle.
/// Backed either by a closed-form rule (cheap at huge orders) or by stored
/// neighbor bit-sets.  Copies share the underlying representation.
class Graph {
 public:
  /// Rule is only ever called with 1 <= u < v <= n; the symmetric closure
  /// and irreflexivity are applied by the wrapper.
  using AdjRule = std::function<bool(VertexId, VertexId)>;

  Graph() = default;

  static Graph from_rule(VertexId vertex_count, AdjRule rule, std::string origin);
  static Graph from_edges(VertexId vertex_count,
                          const std::vector<std::pair<VertexId, VertexId>>& edges,
                          std::string origin);

  VertexId vertex_count() const;
  bool adjacent(VertexId u, VertexId v) const;
  bool is_materialized() const;
  const std::string& origin() const;

  /// The construction blueprint when this graph was carousel-built.
  std::shared_ptr<const CarouselSpec> carousel_spec() const;
  Graph with_carousel_spec(std::shared_ptr<const CarouselSpec> spec) const;

  /// Explicit-neighbor-set copy, equal on every pair.  Throws when the
  /// vertex count exceeds the cap.
  Graph materialized(VertexId cap = kDefaultMaterializeCap) const;

  std::vector<VertexId> neighbors(VertexId v) const;
  std::vector<std::pair<VertexId, VertexId>> edge_list() const;

 private:
  struct Impl;
  explicit Graph(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Two-sided partition of V(G), stored as a Y-membership bit-set.
class Bipartition {
 public:
  Bipartition() = default;
  Bipartition(VertexId vertex_count, const std::vector<VertexId>& y_vertices);

  static Bipartition from_y_predicate(VertexId vertex_count,
                                      const std::function<bool(VertexId)>& in_y);

  VertexId vertex_count() const { return n_; }
  bool in_y(VertexId v) const;
  VertexId y_size() const { return y_size_; }
  VertexId z_size() const { return n_ - y_size_; }
  std::vector<VertexId> y_vertices() const;
  std::vector<VertexId> z_vertices() const;
  Bipartition swapped() const;

  /// |Y ∩ {lo..hi}| via word-level popcounts.
  VertexId y_count_in_range(VertexId lo, VertexId hi) const;

 private:
  VertexId n_ = 0;
  VertexId y_size_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// The 0/1 matrix with rows indexed by y, columns by z, and entry 1 exactly
/// on edges.  Both sets are iterated in ascending id order; they must be
/// disjoint and within range.
Gf2Matrix cut_matrix(const Graph& g, std::vector<VertexId> y, std::vector<VertexId> z);

/// Same matrix but in exactly the order given (used to re-check witnesses).
Gf2Matrix cut_matrix_ordered(const Graph& g, const std::vector<VertexId>& rows,
                             const std::vector<VertexId>& cols);

std::size_t partition_rank(const Graph& g, const Bipartition& p);

/// N/3 <= |Y|, |Z| <= 2N/3 with both bounds inclusive, decided in exact
/// integer arithmetic.
bool is_balanced(VertexId vertex_count, VertexId y_size);
bool is_balanced(const Graph& g, const Bipartition& p);

}  // namespace carousel
