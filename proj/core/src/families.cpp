#include "carousel/families.hpp"

#include <algorithm>
#include <stdexcept>

namespace carousel {

namespace {

std::vector<std::vector<bool>> neighbor_table(const Graph& g) {
  const VertexId n = g.vertex_count();
  std::vector<std::vector<bool>> nb(static_cast<std::size_t>(n) + 1,
                                    std::vector<bool>(static_cast<std::size_t>(n) + 1, false));
  for (VertexId u = 1; u <= n; ++u) {
    for (VertexId v = u + 1; v <= n; ++v) {
      if (g.adjacent(u, v)) {
        nb[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
        nb[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
      }
    }
  }
  return nb;
}

}  // namespace

SplitConstruction build_split_dilworth2(std::int64_t s) {
  if (s < 1) throw std::invalid_argument("s must be at least 1");
  CarouselSpec spec;
  spec.n = 4;
  spec.s = s;
  spec.flavor = CarouselFlavor::even;
  spec.kinds = {TripleKind::regular_crossing, TripleKind::regular_crossing,
                TripleKind::regular_crossing, TripleKind::expanding_crossing};
  spec.intra_set = IntraSetPolicy::empty;
  spec.long_range = LongRangePolicy::empty;

  // X_1 ∪ X_3 complete, X_2 ∪ X_4 edgeless; consecutive gaps stay with the
  // carousel rule
  auto override_rule = [](std::int64_t i, std::int64_t, std::int64_t i2,
                          std::int64_t) -> std::optional<bool> {
    const bool clique_pair = (i == 1 || i == 3) && (i2 == 1 || i2 == 3);
    const bool stable_pair = (i == 2 || i == 4) && (i2 == 2 || i2 == 4);
    if (clique_pair) return true;
    if (stable_pair) return false;
    return std::nullopt;
  };

  SplitConstruction out{build(spec, override_rule), {}, {}, spec};
  const std::int64_t k = spec.k();
  for (std::int64_t i : {1, 3}) {
    for (std::int64_t j = 1; j <= k; ++j) {
      out.clique_side.push_back((i - 1) * k + j);
    }
  }
  for (std::int64_t i : {2, 4}) {
    for (std::int64_t j = 1; j <= k; ++j) {
      out.stable_side.push_back((i - 1) * k + j);
    }
  }
  std::sort(out.clique_side.begin(), out.clique_side.end());
  std::sort(out.stable_side.begin(), out.stable_side.end());
  return out;
}

RingConstruction build_ring(std::int64_t n, std::int64_t s) {
  if (n < 3) throw std::invalid_argument("n must be at least 3");
  if (s < 1) throw std::invalid_argument("s must be at least 1");
  CarouselSpec spec;
  spec.n = n;
  spec.s = s;
  spec.flavor = n % 2 == 0 ? CarouselFlavor::even : CarouselFlavor::odd;
  spec.kinds.assign(static_cast<std::size_t>(n - 1), TripleKind::regular_crossing);
  spec.kinds.push_back(n % 2 == 0 ? TripleKind::expanding_crossing
                                  : TripleKind::skew_expanding_crossing);
  spec.intra_set = IntraSetPolicy::clique;
  spec.long_range = LongRangePolicy::empty;

  RingConstruction out{build(spec), {}, spec};
  const std::int64_t k = spec.k();
  out.partition.parts.resize(static_cast<std::size_t>(n));
  for (std::int64_t i = 1; i <= n; ++i) {
    for (std::int64_t j = 1; j <= k; ++j) {
      out.partition.parts[static_cast<std::size_t>(i - 1)].push_back((i - 1) * k + j);
    }
  }
  return out;
}

bool is_split(const Graph& g, const std::vector<VertexId>& clique_side,
              const std::vector<VertexId>& stable_side) {
  std::vector<VertexId> all = clique_side;
  all.insert(all.end(), stable_side.begin(), stable_side.end());
  std::sort(all.begin(), all.end());
  if (static_cast<VertexId>(all.size()) != g.vertex_count()) {
    throw std::invalid_argument("sides do not partition V(G)");
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i] != static_cast<VertexId>(i + 1)) {
      throw std::invalid_argument("sides do not partition V(G)");
    }
  }
  for (std::size_t a = 0; a < clique_side.size(); ++a) {
    for (std::size_t b = a + 1; b < clique_side.size(); ++b) {
      if (!g.adjacent(clique_side[a], clique_side[b])) return false;
    }
  }
  for (std::size_t a = 0; a < stable_side.size(); ++a) {
    for (std::size_t b = a + 1; b < stable_side.size(); ++b) {
      if (g.adjacent(stable_side[a], stable_side[b])) return false;
    }
  }
  return true;
}

std::int64_t dilworth_number(const Graph& g, std::int64_t cap) {
  const VertexId n = g.vertex_count();
  if (n < 1) throw std::invalid_argument("empty graph");
  if (n > cap) {
    throw std::invalid_argument("dilworth cap exceeded: " + std::to_string(n) + " > " +
                                std::to_string(cap));
  }
  const Graph dense = g.is_materialized() ? g : g.materialized(cap);
  const std::size_t words = static_cast<std::size_t>((n + 63) / 64);
  std::vector<std::vector<std::uint64_t>> open(static_cast<std::size_t>(n) + 1,
                                               std::vector<std::uint64_t>(words, 0));
  std::vector<std::vector<std::uint64_t>> closed = open;
  for (VertexId u = 1; u <= n; ++u) {
    for (VertexId v = u + 1; v <= n; ++v) {
      if (dense.adjacent(u, v)) {
        open[static_cast<std::size_t>(u)][(v - 1) / 64] |= std::uint64_t{1} << ((v - 1) % 64);
        open[static_cast<std::size_t>(v)][(u - 1) / 64] |= std::uint64_t{1} << ((u - 1) % 64);
      }
    }
  }
  for (VertexId u = 1; u <= n; ++u) {
    closed[static_cast<std::size_t>(u)] = open[static_cast<std::size_t>(u)];
    closed[static_cast<std::size_t>(u)][(u - 1) / 64] |= std::uint64_t{1} << ((u - 1) % 64);
  }

  // x <= y in the vicinal preorder iff N(x) ⊆ N[y]
  auto below = [&](VertexId x, VertexId y) {
    const auto& nx = open[static_cast<std::size_t>(x)];
    const auto& cy = closed[static_cast<std::size_t>(y)];
    for (std::size_t w = 0; w < words; ++w) {
      if (nx[w] & ~cy[w]) return false;
    }
    return true;
  };

  // condense mutually comparable vertices into classes
  std::vector<std::int64_t> cls(static_cast<std::size_t>(n) + 1, -1);
  std::vector<VertexId> representative;
  for (VertexId v = 1; v <= n; ++v) {
    if (cls[static_cast<std::size_t>(v)] != -1) continue;
    const std::int64_t id = static_cast<std::int64_t>(representative.size());
    representative.push_back(v);
    cls[static_cast<std::size_t>(v)] = id;
    for (VertexId u = v + 1; u <= n; ++u) {
      if (cls[static_cast<std::size_t>(u)] == -1 && below(v, u) && below(u, v)) {
        cls[static_cast<std::size_t>(u)] = id;
      }
    }
  }
  const std::int64_t m = static_cast<std::int64_t>(representative.size());

  // strict order between class representatives (already transitively closed)
  std::vector<std::vector<bool>> less(static_cast<std::size_t>(m),
                                      std::vector<bool>(static_cast<std::size_t>(m), false));
  for (std::int64_t a = 0; a < m; ++a) {
    for (std::int64_t b = 0; b < m; ++b) {
      if (a != b && below(representative[static_cast<std::size_t>(a)],
                          representative[static_cast<std::size_t>(b)])) {
        less[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
      }
    }
  }

  // maximum antichain = classes minus a maximum matching of the chain graph
  std::vector<std::int64_t> match_right(static_cast<std::size_t>(m), -1);
  std::vector<bool> visited;
  auto augment = [&](auto&& self, std::int64_t a) -> bool {
    for (std::int64_t b = 0; b < m; ++b) {
      if (!less[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] ||
          visited[static_cast<std::size_t>(b)]) {
        continue;
      }
      visited[static_cast<std::size_t>(b)] = true;
      if (match_right[static_cast<std::size_t>(b)] == -1 ||
          self(self, match_right[static_cast<std::size_t>(b)])) {
        match_right[static_cast<std::size_t>(b)] = a;
        return true;
      }
    }
    return false;
  };
  std::int64_t matched = 0;
  for (std::int64_t a = 0; a < m; ++a) {
    visited.assign(static_cast<std::size_t>(m), false);
    if (augment(augment, a)) ++matched;
  }
  return m - matched;
}

bool is_ring(const Graph& g, const RingPartition& partition) {
  const std::int64_t n = static_cast<std::int64_t>(partition.parts.size());
  if (n < 3) throw std::invalid_argument("a ring needs at least 3 parts");
  std::vector<VertexId> all;
  for (const auto& part : partition.parts) {
    all.insert(all.end(), part.begin(), part.end());
  }
  std::sort(all.begin(), all.end());
  if (static_cast<VertexId>(all.size()) != g.vertex_count()) {
    throw std::invalid_argument("parts do not partition V(G)");
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i] != static_cast<VertexId>(i + 1)) {
      throw std::invalid_argument("parts do not partition V(G)");
    }
  }

  const VertexId count = g.vertex_count();
  const auto nb = neighbor_table(g);
  std::vector<std::int64_t> part_of(static_cast<std::size_t>(count) + 1, 0);
  for (std::int64_t i = 0; i < n; ++i) {
    for (VertexId v : partition.parts[static_cast<std::size_t>(i)]) {
      part_of[static_cast<std::size_t>(v)] = i;
    }
  }

  for (std::int64_t i = 0; i < n; ++i) {
    const auto& part = partition.parts[static_cast<std::size_t>(i)];
    // clique
    for (std::size_t a = 0; a < part.size(); ++a) {
      for (std::size_t b = a + 1; b < part.size(); ++b) {
        if (!g.adjacent(part[a], part[b])) return false;
      }
    }
    // nested neighborhoods within the part
    for (std::size_t a = 0; a < part.size(); ++a) {
      for (std::size_t b = a + 1; b < part.size(); ++b) {
        const VertexId x = part[a], y = part[b];
        bool x_in_y = true, y_in_x = true;
        for (VertexId w = 1; w <= count; ++w) {
          if (w != y && nb[static_cast<std::size_t>(x)][static_cast<std::size_t>(w)] &&
              !nb[static_cast<std::size_t>(y)][static_cast<std::size_t>(w)]) {
            x_in_y = false;
          }
          if (w != x && nb[static_cast<std::size_t>(y)][static_cast<std::size_t>(w)] &&
              !nb[static_cast<std::size_t>(x)][static_cast<std::size_t>(w)]) {
            y_in_x = false;
          }
        }
        if (!x_in_y && !y_in_x) return false;
      }
    }
    // confinement to the adjacent parts
    const std::int64_t prev = (i + n - 1) % n;
    const std::int64_t next = (i + 1) % n;
    for (VertexId v : part) {
      for (VertexId w = 1; w <= count; ++w) {
        if (!nb[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)]) continue;
        const std::int64_t pw = part_of[static_cast<std::size_t>(w)];
        if (pw != i && pw != prev && pw != next) return false;
      }
    }
    // a vertex dominating both neighbor parts
    bool dominating = false;
    for (VertexId v : part) {
      bool covers = true;
      for (std::int64_t side : {prev, next}) {
        for (VertexId w : partition.parts[static_cast<std::size_t>(side)]) {
          if (!nb[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)]) {
            covers = false;
            break;
          }
        }
        if (!covers) break;
      }
      if (covers) {
        dominating = true;
        break;
      }
    }
    if (!dominating) return false;
  }
  return true;
}

bool is_even_hole_free(const Graph& g, std::int64_t cap) {
  const VertexId n = g.vertex_count();
  if (n > cap) {
    throw std::invalid_argument("even-hole cap exceeded: " + std::to_string(n) + " > " +
                                std::to_string(cap));
  }
  const auto nb = neighbor_table(g);
  std::vector<VertexId> path;
  std::vector<bool> on_path(static_cast<std::size_t>(n) + 1, false);

  // chordless cycles with the least vertex first and the second vertex
  // below the last, each counted once
  auto extend = [&](auto&& self) -> bool {
    const VertexId start = path.front();
    const VertexId last = path.back();
    for (VertexId v = start + 1; v <= n; ++v) {
      if (on_path[static_cast<std::size_t>(v)] ||
          !nb[static_cast<std::size_t>(last)][static_cast<std::size_t>(v)]) {
        continue;
      }
      bool chord = false;
      for (std::size_t t = 1; t + 1 < path.size(); ++t) {
        if (nb[static_cast<std::size_t>(v)][static_cast<std::size_t>(path[t])]) {
          chord = true;
          break;
        }
      }
      if (chord) continue;
      if (path.size() == 1) {
        path.push_back(v);
        on_path[static_cast<std::size_t>(v)] = true;
        if (self(self)) return true;
        on_path[static_cast<std::size_t>(v)] = false;
        path.pop_back();
        continue;
      }
      if (nb[static_cast<std::size_t>(v)][static_cast<std::size_t>(start)]) {
        if (path.size() + 1 >= 4 && (path.size() + 1) % 2 == 0 && path[1] < v) {
          return true;  // found an even hole
        }
      } else {
        path.push_back(v);
        on_path[static_cast<std::size_t>(v)] = true;
        if (self(self)) return true;
        on_path[static_cast<std::size_t>(v)] = false;
        path.pop_back();
      }
    }
    return false;
  };

  for (VertexId p0 = 1; p0 <= n; ++p0) {
    path.assign(1, p0);
    std::fill(on_path.begin(), on_path.end(), false);
    on_path[static_cast<std::size_t>(p0)] = true;
    if (extend(extend)) return false;
  }
  return true;
}

}  // namespace carousel
