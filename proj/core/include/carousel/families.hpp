#pragma once

#include <cstdint>
#include <vector>

#include "carousel/carousel.hpp"
#include "carousel/graph.hpp"

namespace carousel {

inline constexpr std::int64_t kDefaultDilworthCap = 2000;
inline constexpr std::int64_t kDefaultEvenHoleCap = 24;

struct SplitConstruction {
  Graph graph;
  std::vector<VertexId> clique_side;  // X_1 ∪ X_3
  std::vector<VertexId> stable_side;  // X_2 ∪ X_4
  CarouselSpec spec;
};

/// Even carousel on 4 sets whose gaps are three regular crossings and one
/// expanding crossing, with X_1 ∪ X_3 forced complete and X_2 ∪ X_4 forced
/// edgeless.  The result is a split graph.
SplitConstruction build_split_dilworth2(std::int64_t s);

struct RingPartition {
  std::vector<std::vector<VertexId>> parts;
};

struct RingConstruction {
  Graph graph;
  RingPartition partition;
  CarouselSpec spec;
};

/// Carousel on n cliques with every gap a crossing: regular crossings on
/// gaps 1..n-1 and an expanding (n even) or skew expanding (n odd) crossing
/// on the wrap-around gap; no long-range edges.
RingConstruction build_ring(std::int64_t n, std::int64_t s);

/// K induces a complete graph and S an edgeless one; K, S must partition V.
bool is_split(const Graph& g, const std::vector<VertexId>& clique_side,
              const std::vector<VertexId>& stable_side);

/// Largest set of vertices pairwise incomparable under the vicinal
/// preorder x <= y iff N(x) ⊆ N[y]; computed as a minimum chain cover of
/// the condensed order via bipartite matching.
std::int64_t dilworth_number(const Graph& g, std::int64_t cap = kDefaultDilworthCap);

/// The three ring conditions over the given clique partition: nested
/// neighborhoods inside every part, neighborhoods confined to the adjacent
/// parts, and a vertex per part dominating both neighbor parts.
bool is_ring(const Graph& g, const RingPartition& partition);

/// No induced cycle of even length at least 4, by exhaustive chordless
/// cycle enumeration.
bool is_even_hole_free(const Graph& g, std::int64_t cap = kDefaultEvenHoleCap);

}  // namespace carousel
