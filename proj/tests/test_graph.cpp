#include <random>
#include <stdexcept>

#include "carousel/carousel.hpp"
#include "carousel/formats.hpp"
#include "carousel/graph.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace carousel;

namespace {

Graph complete_graph(VertexId n) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId u = 1; u <= n; ++u) {
    for (VertexId v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges, "complete");
}

Graph cycle_graph(VertexId n) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId v = 1; v <= n; ++v) edges.emplace_back(v, v % n + 1);
  return Graph::from_edges(n, edges, "cycle");
}

}  // namespace

TEST_SUITE_BEGIN("graph");

TEST_CASE("cut matrix reads edges off the oracle") {
  const Graph p3 = Graph::from_edges(3, {{1, 2}, {2, 3}}, "path");
  const Gf2Matrix m = cut_matrix(p3, {1}, {2, 3});
  CHECK(m.row_count() == 1);
  CHECK(m.row_string(1) == "10");

  const Graph k4 = complete_graph(4);
  const Gf2Matrix m2 = cut_matrix(k4, {1, 3}, {2, 4});
  CHECK(m2.row_string(1) == "11");
  CHECK(m2.row_string(2) == "11");

  CHECK_THROWS_AS(cut_matrix(k4, {1, 2}, {2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(cut_matrix(k4, {1, 5}, {2}), std::invalid_argument);
}

TEST_CASE("cut matrix of a crossing gap") {
  CarouselSpec spec;
  spec.n = 3;
  spec.s = 2;
  spec.flavor = CarouselFlavor::even;
  spec.kinds = {TripleKind::regular_crossing, TripleKind::regular_matching,
                TripleKind::expanding_crossing};
  const Graph g = build(spec);
  const Gf2Matrix m = cut_matrix(g, {1, 2, 3}, {4, 5, 6});  // X_1 against X_2
  for (std::size_t j = 1; j <= 3; ++j) {
    for (std::size_t jp = 1; jp <= 3; ++jp) {
      CHECK(m.at(j, jp) == (j + jp >= 4));
    }
  }
}

TEST_CASE("partition rank") {
  const Graph k4 = complete_graph(4);
  CHECK(partition_rank(k4, Bipartition(4, {1, 2})) == 1);
  CHECK(partition_rank(k4, Bipartition(4, {2})) == 1);

  const Graph c5 = cycle_graph(5);
  CHECK(partition_rank(c5, Bipartition(5, {1, 2})) == 2);

  CHECK(partition_rank(k4, Bipartition(4, {})) == 0);

  // symmetric in the two sides
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = oracle::random_graph(7, 0.5, rng);
    const Bipartition p(7, {1, 3, 4});
    CHECK(partition_rank(g, p) == partition_rank(g, p.swapped()));
  }
}

TEST_CASE("balancedness uses exact inclusive bounds") {
  CHECK(is_balanced(9, 3));
  CHECK_FALSE(is_balanced(9, 2));
  CHECK(is_balanced(6, 4));
  CHECK_FALSE(is_balanced(6, 5));
  for (VertexId n = 2; n <= 40; ++n) {
    for (VertexId y = 0; y <= n; ++y) {
      CHECK(is_balanced(n, y) == is_balanced(n, n - y));
    }
  }
}

TEST_CASE("materialize agrees with the rule on every pair") {
  CarouselSpec spec;
  spec.n = 3;
  spec.s = 2;
  spec.flavor = CarouselFlavor::even;
  spec.kinds = {TripleKind::regular_crossing, TripleKind::regular_matching,
                TripleKind::expanding_crossing};
  spec.intra_set = IntraSetPolicy::clique;
  const Graph g = build(spec);
  CHECK_FALSE(g.is_materialized());
  const Graph dense = g.materialized();
  CHECK(dense.is_materialized());
  for (VertexId u = 1; u <= g.vertex_count(); ++u) {
    for (VertexId v = 1; v <= g.vertex_count(); ++v) {
      if (u != v) CHECK(dense.adjacent(u, v) == g.adjacent(u, v));
    }
  }
  CHECK_THROWS_AS(g.materialized(5), std::invalid_argument);
  CHECK(dense.carousel_spec() != nullptr);
}

TEST_CASE("graph6 encodes the documented examples") {
  CHECK(to_graph6(complete_graph(3)) == "Bw");
  CHECK(to_graph6(Graph::from_edges(1, {}, "one")) == "@");
  CHECK(to_graph6(complete_graph(4)) == "C~");
}

TEST_CASE("graph6 round trip") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<VertexId> size(1, 70);
    const Graph g = oracle::random_graph(size(rng), 0.4, rng);
    const Graph back = from_graph6(to_graph6(g));
    REQUIRE(back.vertex_count() == g.vertex_count());
    for (VertexId u = 1; u <= g.vertex_count(); ++u) {
      for (VertexId v = u + 1; v <= g.vertex_count(); ++v) {
        CHECK(back.adjacent(u, v) == g.adjacent(u, v));
      }
    }
  }
  CHECK_THROWS_AS(from_graph6(""), std::invalid_argument);
  CHECK_THROWS_AS(from_graph6("B"), std::invalid_argument);
}

TEST_CASE("dimacs and dot exports") {
  const std::string dimacs = to_dimacs(complete_graph(3));
  CHECK(dimacs == "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");
  const std::string dot = to_dot(Graph::from_edges(3, {{1, 2}}, "path"));
  CHECK(dot.find("1 -- 2;") != std::string::npos);
  CHECK(dot.find("  3;") != std::string::npos);
}

TEST_CASE("submatrix monotonicity of the cut rank") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = oracle::random_graph(8, 0.5, rng);
    const std::vector<VertexId> y{1, 2, 3, 4};
    const std::vector<VertexId> z{5, 6, 7, 8};
    const std::size_t full = gf2_rank(cut_matrix(g, y, z));
    CHECK(gf2_rank(cut_matrix(g, {1, 3}, z)) <= full);
    CHECK(gf2_rank(cut_matrix(g, {2}, {5, 8})) <= full);
  }
}

TEST_CASE("bipartition bit counting") {
  const Bipartition p(10, {1, 4, 5, 9});
  CHECK(p.y_size() == 4);
  CHECK(p.z_size() == 6);
  CHECK(p.y_count_in_range(1, 10) == 4);
  CHECK(p.y_count_in_range(4, 5) == 2);
  CHECK(p.y_count_in_range(6, 8) == 0);
  CHECK(p.y_vertices() == std::vector<VertexId>{1, 4, 5, 9});
  const Bipartition q = p.swapped();
  CHECK(q.y_size() == 6);
  CHECK_FALSE(q.in_y(4));
  CHECK(q.in_y(2));
  CHECK_THROWS_AS(Bipartition(3, {1, 1}), std::invalid_argument);
}

TEST_SUITE_END();
