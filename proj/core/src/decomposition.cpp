#include "carousel/decomposition.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace carousel {

namespace {

/// Rank of the 0/1 matrix whose rows are the given words, via basis
/// insertion keyed by lowest set bit.  Stops early once the rank reaches
/// `stop_at`.
std::size_t word_rank(const std::vector<std::uint64_t>& rows, std::size_t stop_at) {
  std::uint64_t basis[64] = {};
  std::size_t rank = 0;
  for (std::uint64_t w : rows) {
    if (rank >= stop_at) return rank;
    while (w != 0) {
      const int b = std::countr_zero(w);
      if (basis[b] == 0) {
        basis[b] = w;
        ++rank;
        break;
      }
      w ^= basis[b];
    }
  }
  return rank;
}

}  // namespace

std::vector<std::vector<std::int64_t>> TreeDecomposition::adjacency() const {
  std::vector<std::vector<std::int64_t>> adj(static_cast<std::size_t>(node_count) + 1);
  for (const auto& [a, b] : edges) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  return adj;
}

void validate_tree(const TreeDecomposition& tree, const Graph& g) {
  const std::int64_t m = tree.node_count;
  if (m < 2) throw std::invalid_argument("a tree decomposition needs at least 2 nodes");
  if (static_cast<std::int64_t>(tree.edges.size()) != m - 1) {
    throw std::invalid_argument("a tree on m nodes has m-1 edges");
  }
  if (static_cast<std::int64_t>(tree.leaf_vertex.size()) != m + 1) {
    throw std::invalid_argument("leaf_vertex must have node_count + 1 entries");
  }
  const auto adj = tree.adjacency();
  // connectivity
  std::vector<bool> seen(static_cast<std::size_t>(m) + 1, false);
  std::vector<std::int64_t> stack{1};
  seen[1] = true;
  std::int64_t reached = 0;
  while (!stack.empty()) {
    const std::int64_t u = stack.back();
    stack.pop_back();
    ++reached;
    for (std::int64_t v : adj[static_cast<std::size_t>(u)]) {
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = true;
        stack.push_back(v);
      }
    }
  }
  if (reached != m) throw std::invalid_argument("tree is not connected");

  std::vector<VertexId> leaves;
  for (std::int64_t u = 1; u <= m; ++u) {
    const std::size_t deg = adj[static_cast<std::size_t>(u)].size();
    const VertexId lv = tree.leaf_vertex[static_cast<std::size_t>(u)];
    if (deg == 1) {
      if (lv < 1 || lv > g.vertex_count()) {
        throw std::invalid_argument("leaf without a valid graph vertex");
      }
      leaves.push_back(lv);
    } else if (deg == 3) {
      if (lv != 0) throw std::invalid_argument("internal node carries a graph vertex");
    } else {
      throw std::invalid_argument("internal nodes must have degree exactly 3");
    }
  }
  std::sort(leaves.begin(), leaves.end());
  if (static_cast<VertexId>(leaves.size()) != g.vertex_count()) {
    throw std::invalid_argument("leaf count does not match the graph");
  }
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    if (leaves[i] != static_cast<VertexId>(i + 1)) {
      throw std::invalid_argument("leaves are not a bijection with V(G)");
    }
  }
}

std::pair<std::vector<VertexId>, std::vector<VertexId>> edge_leaf_partition(
    const TreeDecomposition& tree, std::size_t edge_index) {
  if (edge_index >= tree.edges.size()) throw std::invalid_argument("foreign tree edge");
  const auto [a, b] = tree.edges[edge_index];
  const auto adj = tree.adjacency();
  std::vector<bool> seen(static_cast<std::size_t>(tree.node_count) + 1, false);
  std::vector<std::int64_t> stack{a};
  seen[static_cast<std::size_t>(a)] = true;
  std::vector<VertexId> side_a;
  while (!stack.empty()) {
    const std::int64_t u = stack.back();
    stack.pop_back();
    if (tree.leaf_vertex[static_cast<std::size_t>(u)] != 0) {
      side_a.push_back(tree.leaf_vertex[static_cast<std::size_t>(u)]);
    }
    for (std::int64_t v : adj[static_cast<std::size_t>(u)]) {
      if ((u == a && v == b) || seen[static_cast<std::size_t>(v)]) continue;
      seen[static_cast<std::size_t>(v)] = true;
      stack.push_back(v);
    }
  }
  std::vector<VertexId> side_b;
  for (std::int64_t u = 1; u <= tree.node_count; ++u) {
    const VertexId lv = tree.leaf_vertex[static_cast<std::size_t>(u)];
    if (lv != 0 && !std::count(side_a.begin(), side_a.end(), lv)) side_b.push_back(lv);
  }
  std::sort(side_a.begin(), side_a.end());
  std::sort(side_b.begin(), side_b.end());
  return {side_a, side_b};
}

std::size_t edge_width(const Graph& g, const TreeDecomposition& tree,
                       std::size_t edge_index) {
  auto [ya, zb] = edge_leaf_partition(tree, edge_index);
  return gf2_rank(cut_matrix_ordered(g, ya, zb));
}

std::size_t width(const Graph& g, const TreeDecomposition& tree) {
  validate_tree(tree, g);
  std::size_t best = 0;
  for (std::size_t e = 0; e < tree.edges.size(); ++e) {
    best = std::max(best, edge_width(g, tree, e));
  }
  return best;
}

std::size_t balanced_edge(const Graph& g, const TreeDecomposition& tree) {
  validate_tree(tree, g);
  if (g.vertex_count() < 2) throw std::invalid_argument("need at least 2 vertices");
  const VertexId total = g.vertex_count();
  const auto adj = tree.adjacency();

  // leaf count on the b side of each oriented pair (a,b), computed by a
  // rooted pass from node 1
  std::unordered_map<std::uint64_t, VertexId> side_count;
  auto key = [](std::int64_t a, std::int64_t b) {
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
  };
  {
    // post-order over the tree rooted at node 1
    std::vector<std::pair<std::int64_t, std::int64_t>> order;  // (node, parent)
    std::vector<std::pair<std::int64_t, std::int64_t>> stack{{1, 0}};
    while (!stack.empty()) {
      auto [u, parent] = stack.back();
      stack.pop_back();
      order.emplace_back(u, parent);
      for (std::int64_t v : adj[static_cast<std::size_t>(u)]) {
        if (v != parent) stack.emplace_back(v, u);
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      auto [u, parent] = *it;
      VertexId cnt = tree.leaf_vertex[static_cast<std::size_t>(u)] != 0 ? 1 : 0;
      for (std::int64_t v : adj[static_cast<std::size_t>(u)]) {
        if (v != parent) cnt += side_count[key(u, v)];
      }
      if (parent != 0) side_count[key(parent, u)] = cnt;
    }
    for (const auto& [a, b] : tree.edges) {
      if (!side_count.count(key(a, b))) side_count[key(a, b)] = total - side_count[key(b, a)];
      if (!side_count.count(key(b, a))) side_count[key(b, a)] = total - side_count[key(a, b)];
    }
  }

  auto oriented_away = [&](std::int64_t u, std::int64_t v) {
    // edge points u -> v when the side containing u holds less than a third
    const VertexId far_side = side_count.at(key(u, v));
    const VertexId near_side = total - far_side;
    return 2 * near_side < far_side;
  };
  auto edge_index_of = [&](std::int64_t a, std::int64_t b) -> std::size_t {
    for (std::size_t e = 0; e < tree.edges.size(); ++e) {
      const auto& [x, y] = tree.edges[e];
      if ((x == a && y == b) || (x == b && y == a)) return e;
    }
    throw std::logic_error("edge lookup failed");
  };

  std::int64_t u = 1;
  for (std::int64_t step = 0; step <= tree.node_count; ++step) {
    std::int64_t out = 0;
    for (std::int64_t v : adj[static_cast<std::size_t>(u)]) {
      if (oriented_away(u, v)) {
        out = v;
        break;
      }
    }
    if (out != 0) {
      u = out;
      continue;
    }
    for (std::int64_t v : adj[static_cast<std::size_t>(u)]) {
      if (!oriented_away(u, v) && !oriented_away(v, u)) return edge_index_of(u, v);
    }
    // every incident edge points inward: a sink, which the cubic structure
    // rules out
    throw std::logic_error("no balanced edge found; tree invariant violated");
  }
  throw std::logic_error("orientation walk failed to terminate");
}

namespace {

/// Exhaustive enumeration of labeled cubic trees by leaf insertion; each
/// new leaf subdivides one existing edge, producing every tree once.
class RankwidthSearch {
 public:
  RankwidthSearch(const Graph& g, std::int64_t n)
      : n_(n), adj_mask_(static_cast<std::size_t>(n) + 1, 0) {
    for (VertexId u = 1; u <= n; ++u) {
      for (VertexId v = 1; v <= n; ++v) {
        if (u != v && g.adjacent(u, v)) {
          adj_mask_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << (v - 1);
        }
      }
    }
  }

  RankwidthResult run() {
    best_ = std::numeric_limits<std::size_t>::max();
    edges_.clear();
    edges_.emplace_back(1, 2);
    if (n_ == 2) {
      best_ = partial_width(2);
      best_edges_ = edges_;
    } else {
      insert(3);
    }
    TreeDecomposition tree;
    tree.node_count = n_ == 2 ? 2 : 2 * n_ - 2;
    tree.edges = best_edges_;
    tree.leaf_vertex.assign(static_cast<std::size_t>(tree.node_count) + 1, 0);
    for (std::int64_t v = 1; v <= n_; ++v) {
      tree.leaf_vertex[static_cast<std::size_t>(v)] = v;
    }
    return RankwidthResult{best_, std::move(tree)};
  }

 private:
  void insert(std::int64_t m) {
    const std::size_t edge_count = edges_.size();
    const std::int64_t internal = n_ + (m - 2);  // fresh internal node id
    for (std::size_t e = 0; e < edge_count; ++e) {
      const auto saved = edges_[e];
      edges_[e] = {saved.first, internal};
      edges_.emplace_back(internal, saved.second);
      edges_.emplace_back(internal, m);

      const std::size_t w = partial_width(m);
      if (w < best_) {
        if (m == n_) {
          best_ = w;
          best_edges_ = edges_;
        } else {
          insert(m + 1);
        }
      }

      edges_.pop_back();
      edges_.pop_back();
      edges_[e] = saved;
    }
  }

  /// Width of the current tree over inserted leaves 1..m; cut ranks are
  /// cached per (m, leaf subset).
  std::size_t partial_width(std::int64_t m) {
    const std::size_t node_limit = static_cast<std::size_t>(n_ + std::max<std::int64_t>(m - 2, 0)) + 1;
    std::vector<std::vector<std::int64_t>> adj(node_limit);
    for (const auto& [a, b] : edges_) {
      adj[static_cast<std::size_t>(a)].push_back(b);
      adj[static_cast<std::size_t>(b)].push_back(a);
    }
    const std::uint64_t universe = (m >= 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << m) - 1);
    std::size_t widest = 0;
    // rooted at leaf 1; the mask of the far side of (parent,child) is the
    // subtree mask of the child
    std::vector<std::uint64_t> subtree(node_limit, 0);
    std::vector<std::pair<std::int64_t, std::int64_t>> order;
    std::vector<std::pair<std::int64_t, std::int64_t>> stack{{1, 0}};
    while (!stack.empty()) {
      auto [u, parent] = stack.back();
      stack.pop_back();
      order.emplace_back(u, parent);
      for (std::int64_t v : adj[static_cast<std::size_t>(u)]) {
        if (v != parent) stack.emplace_back(v, u);
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      auto [u, parent] = *it;
      std::uint64_t mask = (u <= n_) ? (std::uint64_t{1} << (u - 1)) : 0;
      for (std::int64_t v : adj[static_cast<std::size_t>(u)]) {
        if (v != parent) mask |= subtree[static_cast<std::size_t>(v)];
      }
      subtree[static_cast<std::size_t>(u)] = mask;
      if (parent != 0) {
        widest = std::max(widest, cut_rank_cached(m, mask, universe));
        if (widest >= best_) return widest;  // can only grow from here
      }
    }
    return widest;
  }

  std::size_t cut_rank_cached(std::int64_t m, std::uint64_t side, std::uint64_t universe) {
    const std::uint64_t canon = std::min(side, universe & ~side);
    const std::uint64_t cache_key = (static_cast<std::uint64_t>(m) << 48) | canon;
    auto it = cache_.find(cache_key);
    if (it != cache_.end()) return it->second;
    std::vector<std::uint64_t> rows;
    const std::uint64_t cols = universe & ~canon;
    std::uint64_t remaining = canon;
    while (remaining) {
      const int v = std::countr_zero(remaining);
      remaining &= remaining - 1;
      rows.push_back(adj_mask_[static_cast<std::size_t>(v) + 1] & cols);
    }
    const std::size_t r = word_rank(rows, std::numeric_limits<std::size_t>::max());
    cache_.emplace(cache_key, r);
    return r;
  }

  std::int64_t n_;
  std::vector<std::uint64_t> adj_mask_;
  std::vector<std::pair<std::int64_t, std::int64_t>> edges_;
  std::vector<std::pair<std::int64_t, std::int64_t>> best_edges_;
  std::size_t best_ = 0;
  std::unordered_map<std::uint64_t, std::size_t> cache_;
};

}  // namespace

RankwidthResult rankwidth_exact(const Graph& g, std::int64_t cap) {
  const VertexId n = g.vertex_count();
  if (n <= 1) return RankwidthResult{0, std::nullopt};
  if (n > cap || n > 40) {
    throw std::invalid_argument("rankwidth cap exceeded: " + std::to_string(n) +
                                " > " + std::to_string(std::min<std::int64_t>(cap, 40)));
  }
  RankwidthSearch search(g, n);
  return search.run();
}

CertificateReport certify_lower_bound(const Graph& g, std::optional<std::size_t> r_max,
                                      std::int64_t cap) {
  const VertexId n = g.vertex_count();
  if (n < 2) throw std::invalid_argument("need at least 2 vertices");
  if (n > cap || n > 62) {
    throw std::invalid_argument("certificate cap exceeded: " + std::to_string(n) +
                                " > " + std::to_string(std::min<std::int64_t>(cap, 62)));
  }
  std::vector<std::uint64_t> adj_mask(static_cast<std::size_t>(n) + 1, 0);
  for (VertexId u = 1; u <= n; ++u) {
    for (VertexId v = 1; v <= n; ++v) {
      if (u != v && g.adjacent(u, v)) {
        adj_mask[static_cast<std::size_t>(u)] |= std::uint64_t{1} << (v - 1);
      }
    }
  }

  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::uint64_t best_mask = 0;
  std::uint64_t examined = 0;
  const std::uint64_t limit = std::uint64_t{1} << (n - 1);
  for (std::uint64_t m = 0; m < limit; ++m) {
    const std::uint64_t y_mask = (m << 1) | 1u;  // vertex 1 pinned to Y
    const VertexId y_size = std::popcount(y_mask);
    if (!is_balanced(n, y_size)) continue;
    ++examined;
    const std::uint64_t z_mask = ~y_mask & ((std::uint64_t{1} << n) - 1);
    std::vector<std::uint64_t> rows;
    std::uint64_t remaining = y_mask;
    while (remaining) {
      const int v = std::countr_zero(remaining);
      remaining &= remaining - 1;
      rows.push_back(adj_mask[static_cast<std::size_t>(v) + 1] & z_mask);
    }
    const std::size_t r = word_rank(rows, best);
    if (r < best) {
      best = r;
      best_mask = y_mask;
      if (r_max && best < *r_max) break;
    }
  }
  if (best == std::numeric_limits<std::size_t>::max()) {
    throw std::logic_error("no balanced bipartition exists");
  }
  CertificateReport report;
  report.min_balanced_rank = best;
  report.witness_partition = Bipartition::from_y_predicate(
      n, [&](VertexId v) { return (best_mask >> (v - 1)) & 1u; });
  report.partitions_examined = examined;
  return report;
}

std::string write_tree_text(const TreeDecomposition& tree) {
  // rooted at node 1; parents reconstructed from the edge list
  const auto adj = tree.adjacency();
  std::vector<std::int64_t> parent(static_cast<std::size_t>(tree.node_count) + 1, -1);
  std::vector<std::int64_t> stack{1};
  parent[1] = 0;
  while (!stack.empty()) {
    const std::int64_t u = stack.back();
    stack.pop_back();
    for (std::int64_t v : adj[static_cast<std::size_t>(u)]) {
      if (parent[static_cast<std::size_t>(v)] == -1) {
        parent[static_cast<std::size_t>(v)] = u;
        stack.push_back(v);
      }
    }
  }
  std::ostringstream out;
  out << "nodes = " << tree.node_count << "\n";
  out << "parents =";
  for (std::int64_t u = 1; u <= tree.node_count; ++u) {
    out << " " << parent[static_cast<std::size_t>(u)];
  }
  out << "\nleaves =";
  for (std::int64_t u = 1; u <= tree.node_count; ++u) {
    if (tree.leaf_vertex[static_cast<std::size_t>(u)] != 0) {
      out << " " << u << ":" << tree.leaf_vertex[static_cast<std::size_t>(u)];
    }
  }
  out << "\n";
  return out.str();
}

TreeDecomposition parse_tree_text(const std::string& text) {
  TreeDecomposition tree;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string key, eq;
    if (!(ls >> key)) continue;
    ls >> eq;
    if (eq != "=") throw std::invalid_argument("bad tree line: " + line);
    if (key == "nodes") {
      ls >> tree.node_count;
      tree.leaf_vertex.assign(static_cast<std::size_t>(tree.node_count) + 1, 0);
    } else if (key == "parents") {
      std::int64_t p;
      std::int64_t u = 1;
      while (ls >> p) {
        if (p != 0) tree.edges.emplace_back(p, u);
        ++u;
      }
      if (u != tree.node_count + 1) throw std::invalid_argument("parent array length mismatch");
    } else if (key == "leaves") {
      std::string pair;
      while (ls >> pair) {
        const auto colon = pair.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("bad leaf entry: " + pair);
        const std::int64_t node = std::stoll(pair.substr(0, colon));
        const VertexId vertex = std::stoll(pair.substr(colon + 1));
        tree.leaf_vertex.at(static_cast<std::size_t>(node)) = vertex;
      }
    } else {
      throw std::invalid_argument("unknown tree key: " + key);
    }
  }
  return tree;
}

}  // namespace carousel
