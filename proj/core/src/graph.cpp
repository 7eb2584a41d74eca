#include "carousel/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "carousel/carousel.hpp"

namespace carousel {

struct Graph::Impl {
  VertexId n = 0;
  AdjRule rule;                               // empty when materialized
  std::vector<std::vector<std::uint64_t>> rows;  // neighbor bit-sets, 0-based
  bool materialized = false;
  std::string origin;
  std::shared_ptr<const CarouselSpec> spec;

  bool adj(VertexId u, VertexId v) const {
    if (u == v) return false;
    if (u > v) std::swap(u, v);
    if (materialized) {
      const std::uint64_t word = rows[static_cast<std::size_t>(u - 1)]
                                     [static_cast<std::size_t>((v - 1) / 64)];
      return (word >> ((v - 1) % 64)) & 1u;
    }
    return rule(u, v);
  }
};

namespace {

void check_vertex(VertexId v, VertexId n) {
  if (v < 1 || v > n) throw std::invalid_argument("vertex id out of range");
}

}  // namespace

Graph Graph::from_rule(VertexId vertex_count, AdjRule rule, std::string origin) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  auto impl = std::make_shared<Impl>();
  impl->n = vertex_count;
  impl->rule = std::move(rule);
  impl->origin = std::move(origin);
  return Graph(std::move(impl));
}

Graph Graph::from_edges(VertexId vertex_count,
                        const std::vector<std::pair<VertexId, VertexId>>& edges,
                        std::string origin) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  auto impl = std::make_shared<Impl>();
  impl->n = vertex_count;
  impl->materialized = true;
  impl->origin = std::move(origin);
  const std::size_t words = static_cast<std::size_t>((vertex_count + 63) / 64);
  impl->rows.assign(static_cast<std::size_t>(vertex_count),
                    std::vector<std::uint64_t>(words, 0));
  for (const auto& [u, v] : edges) {
    check_vertex(u, vertex_count);
    check_vertex(v, vertex_count);
    if (u == v) throw std::invalid_argument("loop edge");
    impl->rows[u - 1][(v - 1) / 64] |= std::uint64_t{1} << ((v - 1) % 64);
    impl->rows[v - 1][(u - 1) / 64] |= std::uint64_t{1} << ((u - 1) % 64);
  }
  return Graph(std::move(impl));
}

VertexId Graph::vertex_count() const { return impl_ ? impl_->n : 0; }

bool Graph::adjacent(VertexId u, VertexId v) const {
  if (!impl_) throw std::logic_error("empty graph");
  check_vertex(u, impl_->n);
  check_vertex(v, impl_->n);
  return impl_->adj(u, v);
}

bool Graph::is_materialized() const { return impl_ && impl_->materialized; }

const std::string& Graph::origin() const {
  static const std::string empty;
  return impl_ ? impl_->origin : empty;
}

std::shared_ptr<const CarouselSpec> Graph::carousel_spec() const {
  return impl_ ? impl_->spec : nullptr;
}

Graph Graph::with_carousel_spec(std::shared_ptr<const CarouselSpec> spec) const {
  if (!impl_) throw std::logic_error("empty graph");
  auto copy = std::make_shared<Impl>(*impl_);
  copy->spec = std::move(spec);
  return Graph(std::move(copy));
}

Graph Graph::materialized(VertexId cap) const {
  if (!impl_) throw std::logic_error("empty graph");
  if (impl_->n > cap) {
    throw std::invalid_argument("materialize cap exceeded: " +
                                std::to_string(impl_->n) + " > " + std::to_string(cap));
  }
  if (impl_->materialized) return *this;
  auto out = std::make_shared<Impl>();
  out->n = impl_->n;
  out->materialized = true;
  out->origin = impl_->origin;
  out->spec = impl_->spec;
  const std::size_t words = static_cast<std::size_t>((impl_->n + 63) / 64);
  out->rows.assign(static_cast<std::size_t>(impl_->n),
                   std::vector<std::uint64_t>(words, 0));
  for (VertexId u = 1; u <= impl_->n; ++u) {
    for (VertexId v = u + 1; v <= impl_->n; ++v) {
      if (impl_->rule(u, v)) {
        out->rows[u - 1][(v - 1) / 64] |= std::uint64_t{1} << ((v - 1) % 64);
        out->rows[v - 1][(u - 1) / 64] |= std::uint64_t{1} << ((u - 1) % 64);
      }
    }
  }
  return Graph(std::move(out));
}

std::vector<VertexId> Graph::neighbors(VertexId v) const {
  if (!impl_) throw std::logic_error("empty graph");
  check_vertex(v, impl_->n);
  std::vector<VertexId> out;
  for (VertexId u = 1; u <= impl_->n; ++u) {
    if (u != v && impl_->adj(v, u)) out.push_back(u);
  }
  return out;
}

std::vector<std::pair<VertexId, VertexId>> Graph::edge_list() const {
  if (!impl_) return {};
  std::vector<std::pair<VertexId, VertexId>> out;
  for (VertexId u = 1; u <= impl_->n; ++u) {
    for (VertexId v = u + 1; v <= impl_->n; ++v) {
      if (impl_->adj(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

Bipartition::Bipartition(VertexId vertex_count, const std::vector<VertexId>& y_vertices)
    : n_(vertex_count), bits_(static_cast<std::size_t>((vertex_count + 63) / 64), 0) {
  for (VertexId v : y_vertices) {
    check_vertex(v, n_);
    std::uint64_t& word = bits_[(v - 1) / 64];
    const std::uint64_t mask = std::uint64_t{1} << ((v - 1) % 64);
    if (word & mask) throw std::invalid_argument("duplicate vertex in Y");
    word |= mask;
    ++y_size_;
  }
}

Bipartition Bipartition::from_y_predicate(VertexId vertex_count,
                                          const std::function<bool(VertexId)>& in_y) {
  Bipartition p;
  p.n_ = vertex_count;
  p.bits_.assign(static_cast<std::size_t>((vertex_count + 63) / 64), 0);
  for (VertexId v = 1; v <= vertex_count; ++v) {
    if (in_y(v)) {
      p.bits_[(v - 1) / 64] |= std::uint64_t{1} << ((v - 1) % 64);
      ++p.y_size_;
    }
  }
  return p;
}

bool Bipartition::in_y(VertexId v) const {
  check_vertex(v, n_);
  return (bits_[(v - 1) / 64] >> ((v - 1) % 64)) & 1u;
}

std::vector<VertexId> Bipartition::y_vertices() const {
  std::vector<VertexId> out;
  out.reserve(static_cast<std::size_t>(y_size_));
  for (VertexId v = 1; v <= n_; ++v) {
    if (in_y(v)) out.push_back(v);
  }
  return out;
}

std::vector<VertexId> Bipartition::z_vertices() const {
  std::vector<VertexId> out;
  out.reserve(static_cast<std::size_t>(z_size()));
  for (VertexId v = 1; v <= n_; ++v) {
    if (!in_y(v)) out.push_back(v);
  }
  return out;
}

Bipartition Bipartition::swapped() const {
  Bipartition p(*this);
  for (auto& w : p.bits_) w = ~w;
  // clear padding past n_
  const int tail = static_cast<int>(n_ % 64);
  if (tail != 0 && !p.bits_.empty()) {
    p.bits_.back() &= (std::uint64_t{1} << tail) - 1;
  }
  p.y_size_ = n_ - y_size_;
  return p;
}

VertexId Bipartition::y_count_in_range(VertexId lo, VertexId hi) const {
  if (lo > hi) return 0;
  if (lo < 1 || hi > n_) throw std::invalid_argument("bad range");
  VertexId count = 0;
  std::size_t w_lo = static_cast<std::size_t>((lo - 1) / 64);
  std::size_t w_hi = static_cast<std::size_t>((hi - 1) / 64);
  for (std::size_t w = w_lo; w <= w_hi; ++w) {
    std::uint64_t word = bits_[w];
    if (w == w_lo) {
      word &= ~std::uint64_t{0} << ((lo - 1) % 64);
    }
    if (w == w_hi) {
      const int tail = static_cast<int>((hi - 1) % 64);
      if (tail != 63) word &= (std::uint64_t{1} << (tail + 1)) - 1;
    }
    count += std::popcount(word);
  }
  return count;
}

Gf2Matrix cut_matrix(const Graph& g, std::vector<VertexId> y, std::vector<VertexId> z) {
  std::sort(y.begin(), y.end());
  std::sort(z.begin(), z.end());
  for (std::size_t i = 1; i < y.size(); ++i) {
    if (y[i] == y[i - 1]) throw std::invalid_argument("duplicate vertex in Y");
  }
  for (std::size_t i = 1; i < z.size(); ++i) {
    if (z[i] == z[i - 1]) throw std::invalid_argument("duplicate vertex in Z");
  }
  std::vector<VertexId> overlap;
  std::set_intersection(y.begin(), y.end(), z.begin(), z.end(),
                        std::back_inserter(overlap));
  if (!overlap.empty()) throw std::invalid_argument("Y and Z overlap");
  return cut_matrix_ordered(g, y, z);
}

Gf2Matrix cut_matrix_ordered(const Graph& g, const std::vector<VertexId>& rows,
                             const std::vector<VertexId>& cols) {
  Gf2Matrix m(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (g.adjacent(rows[i], cols[j])) m.set(i + 1, j + 1, true);
    }
  }
  return m;
}

std::size_t partition_rank(const Graph& g, const Bipartition& p) {
  if (p.vertex_count() != g.vertex_count()) {
    throw std::invalid_argument("partition does not match graph");
  }
  return gf2_rank(cut_matrix_ordered(g, p.y_vertices(), p.z_vertices()));
}

bool is_balanced(VertexId vertex_count, VertexId y_size) {
  return 3 * y_size >= vertex_count && 3 * y_size <= 2 * vertex_count;
}

bool is_balanced(const Graph& g, const Bipartition& p) {
  if (p.vertex_count() != g.vertex_count()) {
    throw std::invalid_argument("partition does not match graph");
  }
  return is_balanced(g.vertex_count(), p.y_size());
}

}  // namespace carousel
