// Test-side oracles, kept independent of the library kernels they check.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

#include "carousel/certify.hpp"
#include "carousel/decomposition.hpp"
#include "carousel/graph.hpp"

namespace oracle {

/// Plain row-list Gaussian elimination over the integers mod 2; no packing,
/// no shared code with the library kernel.
inline std::size_t naive_rank(std::vector<std::vector<int>> rows) {
  if (rows.empty() || rows[0].empty()) return 0;
  const std::size_t n_rows = rows.size();
  const std::size_t n_cols = rows[0].size();
  std::size_t rank = 0;
  std::size_t next_row = 0;
  for (std::size_t c = 0; c < n_cols && next_row < n_rows; ++c) {
    std::size_t pivot = n_rows;
    for (std::size_t r = next_row; r < n_rows; ++r) {
      if (rows[r][c] % 2 != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == n_rows) continue;
    std::swap(rows[pivot], rows[next_row]);
    for (std::size_t r = 0; r < n_rows; ++r) {
      if (r != next_row && rows[r][c] % 2 != 0) {
        for (std::size_t t = 0; t < n_cols; ++t) {
          rows[r][t] = (rows[r][t] + rows[next_row][t]) % 2;
        }
      }
    }
    ++next_row;
    ++rank;
  }
  return rank;
}

inline std::vector<std::vector<int>> to_rows(const carousel::Gf2Matrix& m) {
  std::vector<std::vector<int>> rows(m.row_count(), std::vector<int>(m.col_count(), 0));
  for (std::size_t i = 1; i <= m.row_count(); ++i) {
    for (std::size_t j = 1; j <= m.col_count(); ++j) {
      if (m.at(i, j)) rows[i - 1][j - 1] = 1;
    }
  }
  return rows;
}

inline std::vector<std::vector<int>> cut_rows(const carousel::Graph& g,
                                              const std::vector<carousel::VertexId>& y,
                                              const std::vector<carousel::VertexId>& z) {
  std::vector<std::vector<int>> rows(y.size(), std::vector<int>(z.size(), 0));
  for (std::size_t i = 0; i < y.size(); ++i) {
    for (std::size_t j = 0; j < z.size(); ++j) {
      if (g.adjacent(y[i], z[j])) rows[i][j] = 1;
    }
  }
  return rows;
}

/// Second, independent enumeration of balanced bipartitions: by |Y| in
/// increasing size, combinations in lexicographic order, ranks from the
/// naive eliminator.
inline std::size_t brute_min_balanced_rank(const carousel::Graph& g) {
  const carousel::VertexId n = g.vertex_count();
  if (n < 2 || n > 30) throw std::invalid_argument("brute oracle size out of range");
  std::size_t best = SIZE_MAX;
  for (carousel::VertexId y_size = 1; y_size < n; ++y_size) {
    if (!carousel::is_balanced(n, y_size)) continue;
    std::vector<int> pick(static_cast<std::size_t>(n), 0);
    for (carousel::VertexId i = 0; i < y_size; ++i) pick[static_cast<std::size_t>(i)] = 1;
    // lexicographic combinations via prev_permutation on the indicator
    std::sort(pick.begin(), pick.end(), std::greater<int>());
    do {
      std::vector<carousel::VertexId> y, z;
      for (carousel::VertexId v = 1; v <= n; ++v) {
        (pick[static_cast<std::size_t>(v - 1)] ? y : z).push_back(v);
      }
      best = std::min(best, naive_rank(cut_rows(g, y, z)));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  if (best == SIZE_MAX) throw std::logic_error("no balanced bipartition");
  return best;
}

inline carousel::Graph random_graph(std::int64_t n, double edge_prob, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(edge_prob);
  std::vector<std::pair<carousel::VertexId, carousel::VertexId>> edges;
  for (carousel::VertexId u = 1; u <= n; ++u) {
    for (carousel::VertexId v = u + 1; v <= n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return carousel::Graph::from_edges(n, edges, "random");
}

/// Random cubic tree over leaves 1..n by random leaf insertion.
inline carousel::TreeDecomposition random_cubic_tree(std::int64_t n, std::mt19937_64& rng) {
  if (n < 2) throw std::invalid_argument("need at least 2 leaves");
  carousel::TreeDecomposition tree;
  tree.edges = {{1, 2}};
  std::int64_t next_internal = n + 1;
  for (std::int64_t leaf = 3; leaf <= n; ++leaf) {
    std::uniform_int_distribution<std::size_t> pick(0, tree.edges.size() - 1);
    const std::size_t e = pick(rng);
    const auto [a, b] = tree.edges[e];
    const std::int64_t mid = next_internal++;
    tree.edges[e] = {a, mid};
    tree.edges.emplace_back(mid, b);
    tree.edges.emplace_back(mid, leaf);
  }
  tree.node_count = n == 2 ? 2 : 2 * n - 2;
  tree.leaf_vertex.assign(static_cast<std::size_t>(tree.node_count) + 1, 0);
  for (std::int64_t v = 1; v <= n; ++v) tree.leaf_vertex[static_cast<std::size_t>(v)] = v;
  return tree;
}

/// Witness re-verification that goes straight to the adjacency oracle and
/// the naive eliminator.
inline bool reverify_witness(const carousel::Graph& g, const carousel::RankWitness& w) {
  const std::size_t nr = w.row_vertices.size();
  const std::size_t nc = w.col_vertices.size();
  if (nr == 0 || nc == 0) return false;
  std::vector<std::vector<int>> rows = cut_rows(g, w.row_vertices, w.col_vertices);
  using carousel::WitnessPattern;
  if (w.pattern != WitnessPattern::raw) {
    if (nr != nc) return false;
    for (std::size_t i = 0; i < nr; ++i) {
      for (std::size_t j = 0; j < nc; ++j) {
        const int v = rows[i][j];
        switch (w.pattern) {
          case WitnessPattern::diagonal:
            if (v != (i == j ? 1 : 0)) return false;
            break;
          case WitnessPattern::antidiagonal:
            if (v != (i == j ? 0 : 1)) return false;
            break;
          case WitnessPattern::triangular:
            if (v != (i >= j ? 1 : 0)) return false;
            break;
          case WitnessPattern::near_triangular:
            if (i > j && v != 1) return false;
            if (i < j && v != 0) return false;
            break;
          case WitnessPattern::raw:
            break;
        }
      }
    }
  }
  return naive_rank(rows) >= static_cast<std::size_t>(w.claimed_rank_lb);
}

}  // namespace oracle
