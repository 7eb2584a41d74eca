#include "carousel/certify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace carousel {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

double to_unit(std::uint64_t h) { return static_cast<double>(h >> 11) * 0x1.0p-53; }

/// 2^e >= rhs, exactly, for any e >= 0.
bool pow2_at_least(std::int64_t e, std::uint64_t rhs) {
  if (e >= 64) return true;
  return (std::uint64_t{1} << e) >= rhs;
}

std::shared_ptr<const CarouselSpec> require_spec(const Graph& g) {
  auto spec = g.carousel_spec();
  if (!spec) throw std::invalid_argument("graph was not carousel-built");
  return spec;
}

}  // namespace

MinOrder min_order(std::int64_t n, std::int64_t r, CarouselFlavor flavor) {
  if (n < 3) throw std::invalid_argument("n must be at least 3");
  if (r < 2) throw std::invalid_argument("r must be at least 2");
  const std::int64_t c = flavor == CarouselFlavor::even ? 8 : 16;
  for (std::int64_t q = 1;; ++q) {
    const std::int64_t e = q + c * r - 1;
    const std::uint64_t rhs =
        10ull * static_cast<std::uint64_t>(n + 1) *
        static_cast<std::uint64_t>(q + c * r + 1) * static_cast<std::uint64_t>(r);
    if (pow2_at_least(e, rhs)) {
      // once true the inequality stays true: the left side doubles while
      // the right side grows linearly
      const std::uint64_t rhs_next =
          10ull * static_cast<std::uint64_t>(n + 1) *
          static_cast<std::uint64_t>(q + 1 + c * r + 1) * static_cast<std::uint64_t>(r);
      if (!pow2_at_least(e + 1, rhs_next)) {
        throw std::logic_error("order inequality is not monotone");
      }
      return MinOrder{q, q + c * r + 1};
    }
  }
}

std::vector<Block> blocks(const Bipartition& p, const std::vector<VertexId>& ordered_set) {
  if (ordered_set.empty()) throw std::invalid_argument("blocks of an empty set");
  std::vector<Block> out;
  for (std::int64_t pos = 1; pos <= static_cast<std::int64_t>(ordered_set.size()); ++pos) {
    const BlockSide side =
        p.in_y(ordered_set[static_cast<std::size_t>(pos - 1)]) ? BlockSide::y : BlockSide::z;
    if (out.empty() || out.back().side != side) {
      out.push_back(Block{pos, pos, side});
    } else {
      out.back().end = pos;
    }
  }
  return out;
}

std::int64_t label_index(const std::vector<VertexId>& members, const Bipartition& p,
                         std::int64_t r) {
  if (r < 1) throw std::invalid_argument("label threshold r must be at least 1");
  std::int64_t in_y = 0;
  for (VertexId v : members) {
    if (p.in_y(v)) ++in_y;
  }
  return (in_y + r - 1) / r;
}

std::int64_t part_label(const CarouselSpec& spec, const Bipartition& p, PartRef part,
                        std::int64_t r) {
  if (r < 1) throw std::invalid_argument("label threshold r must be at least 1");
  if (part.i < 1 || part.i > spec.n || part.j < 1 || part.j > spec.s) {
    throw std::invalid_argument("part ref out of range");
  }
  const std::int64_t k = spec.k();
  const VertexId base = (part.i - 1) * k;
  auto [lo, hi] = part_position_range(part.j);
  if (part.barred) {
    const std::int64_t blo = k - hi + 1;
    const std::int64_t bhi = k - lo + 1;
    lo = blo;
    hi = bhi;
  }
  const VertexId in_y = p.y_count_in_range(base + lo, base + hi);
  return (in_y + r - 1) / r;
}

const char* to_string(WitnessPattern pattern) {
  switch (pattern) {
    case WitnessPattern::diagonal: return "diagonal";
    case WitnessPattern::antidiagonal: return "antidiagonal";
    case WitnessPattern::triangular: return "triangular";
    case WitnessPattern::near_triangular: return "near_triangular";
    case WitnessPattern::raw: return "raw";
  }
  return "?";
}

std::optional<WitnessPattern> witness_pattern_from_string(std::string_view name) {
  if (name == "raw") return WitnessPattern::raw;
  if (auto cls = pattern_class_from_string(name)) {
    switch (*cls) {
      case PatternClass::diagonal: return WitnessPattern::diagonal;
      case PatternClass::antidiagonal: return WitnessPattern::antidiagonal;
      case PatternClass::triangular: return WitnessPattern::triangular;
      case PatternClass::near_triangular: return WitnessPattern::near_triangular;
    }
  }
  return std::nullopt;
}

namespace {

std::optional<PatternClass> to_pattern_class(WitnessPattern p) {
  switch (p) {
    case WitnessPattern::diagonal: return PatternClass::diagonal;
    case WitnessPattern::antidiagonal: return PatternClass::antidiagonal;
    case WitnessPattern::triangular: return PatternClass::triangular;
    case WitnessPattern::near_triangular: return PatternClass::near_triangular;
    case WitnessPattern::raw: return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

bool verify_witness(const Graph& g, const RankWitness& w) {
  if (w.row_vertices.empty() || w.col_vertices.empty()) return false;
  const Gf2Matrix m = cut_matrix_ordered(g, w.row_vertices, w.col_vertices);
  if (auto cls = to_pattern_class(w.pattern)) {
    if (m.row_count() != m.col_count()) return false;
    if (!matches_pattern(m, *cls)) return false;
  }
  return gf2_rank(m) >= static_cast<std::size_t>(w.claimed_rank_lb);
}

RankWitness make_witness(const Graph& g, std::vector<VertexId> rows,
                         std::vector<VertexId> cols, WitnessPattern pattern,
                         std::int64_t claimed_rank_lb) {
  RankWitness w{std::move(rows), std::move(cols), pattern, claimed_rank_lb};
  if (!verify_witness(g, w)) {
    throw std::logic_error("rank witness failed re-verification at construction");
  }
  return w;
}

std::string write_witness_text(const RankWitness& w) {
  std::ostringstream out;
  out << "pattern = " << to_string(w.pattern) << "\n";
  out << "claimed_rank_lb = " << w.claimed_rank_lb << "\n";
  out << "rows =";
  for (VertexId v : w.row_vertices) out << " " << v;
  out << "\ncols =";
  for (VertexId v : w.col_vertices) out << " " << v;
  out << "\n";
  return out.str();
}

RankWitness parse_witness_text(const std::string& text) {
  RankWitness w;
  std::istringstream in(text);
  std::string line;
  bool saw_pattern = false;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string key, eq;
    if (!(ls >> key)) continue;
    ls >> eq;
    if (eq != "=") throw std::invalid_argument("bad witness line: " + line);
    if (key == "pattern") {
      std::string name;
      ls >> name;
      auto p = witness_pattern_from_string(name);
      if (!p) throw std::invalid_argument("unknown witness pattern: " + name);
      w.pattern = *p;
      saw_pattern = true;
    } else if (key == "claimed_rank_lb") {
      ls >> w.claimed_rank_lb;
    } else if (key == "rows") {
      VertexId v;
      while (ls >> v) w.row_vertices.push_back(v);
    } else if (key == "cols") {
      VertexId v;
      while (ls >> v) w.col_vertices.push_back(v);
    } else {
      throw std::invalid_argument("unknown witness key: " + key);
    }
  }
  if (!saw_pattern) throw std::invalid_argument("witness text missing pattern");
  return w;
}

std::optional<RankWitness> block_witness(const Graph& g, const Bipartition& p,
                                         std::int64_t r) {
  if (r < 1) throw std::invalid_argument("r must be at least 1");
  const auto spec = require_spec(g);
  if (spec->kinds.front() != TripleKind::regular_crossing) {
    throw std::invalid_argument("block witness needs a regular crossing on the first gap");
  }
  const std::int64_t k = spec->k();

  // stream the blocks of X_1; only the first 8r block starts matter
  struct Opened {
    std::int64_t start;
    bool in_y;
  };
  std::vector<Opened> opened;
  opened.reserve(static_cast<std::size_t>(8 * r));
  bool prev = false;
  for (std::int64_t pos = 1; pos <= k; ++pos) {
    const bool side = p.in_y(pos);  // set 1 occupies ids 1..k
    if (pos == 1 || side != prev) {
      opened.push_back(Opened{pos, side});
      if (static_cast<std::int64_t>(opened.size()) == 8 * r) break;
    }
    prev = side;
  }
  if (static_cast<std::int64_t>(opened.size()) < 8 * r) return std::nullopt;

  const auto image_id = [&](std::int64_t pos) { return k + (k - pos + 1); };  // set 2

  // majority side among the reflected representatives of all 8r blocks
  std::int64_t image_in_y = 0;
  for (const Opened& b : opened) {
    if (p.in_y(image_id(b.start))) ++image_in_y;
  }
  const bool tau_is_y = image_in_y >= static_cast<std::int64_t>(opened.size()) - image_in_y;

  std::vector<VertexId> rows, cols;
  for (std::int64_t t = 0; t < 4 * r && static_cast<std::int64_t>(rows.size()) < 2 * r; ++t) {
    const Opened& a = opened[static_cast<std::size_t>(2 * t)];
    const Opened& b = opened[static_cast<std::size_t>(2 * t + 1)];
    const VertexId img_a = image_id(a.start);
    const VertexId img_b = image_id(b.start);
    VertexId image = 0;
    if (p.in_y(img_a) == tau_is_y && p.in_y(img_b) == tau_is_y) {
      image = std::min(img_a, img_b);
    } else if (p.in_y(img_a) == tau_is_y) {
      image = img_a;
    } else if (p.in_y(img_b) == tau_is_y) {
      image = img_b;
    } else {
      continue;
    }
    // representative in X_1 on the side opposite the image side
    const VertexId rep = (a.in_y != tau_is_y) ? a.start : b.start;
    rows.push_back(rep);
    cols.push_back(image);
  }
  if (static_cast<std::int64_t>(rows.size()) < 2 * r) {
    throw std::logic_error("block witness pair selection fell short");
  }
  return make_witness(g, std::move(rows), std::move(cols),
                      WitnessPattern::near_triangular,
                      static_cast<std::int64_t>(pattern_rank_floor(
                          PatternClass::near_triangular, static_cast<std::size_t>(2 * r))));
}

namespace {

struct GapShape {
  TripleKind kind;
  bool cross;
  std::int64_t target_set;
  std::int64_t target_part;
  bool target_barred;
  std::int64_t gap_bound;  // allowed label drift
};

GapShape gap_shape(const CarouselSpec& spec, std::int64_t gap_index,
                   std::int64_t part_index, bool source_barred) {
  if (gap_index < 1 || gap_index > spec.n) {
    throw std::invalid_argument("gap index out of range");
  }
  if (part_index < 1 || part_index > spec.s) {
    throw std::invalid_argument("part index out of range");
  }
  const TripleKind kind = spec.kinds[static_cast<std::size_t>(gap_index - 1)];
  GapShape shape{kind, is_cross(kind), 0, 0, false, 0};
  if (gap_index < spec.n) {
    shape.target_set = gap_index + 1;
    shape.target_part = part_index;
    shape.target_barred = source_barred != shape.cross;
    shape.gap_bound = 1;
  } else {
    if (part_index > spec.s - 1) {
      throw std::invalid_argument("the wrap-around gap needs a part of index below s");
    }
    shape.target_set = 1;
    shape.target_part = part_index + 1;
    shape.gap_bound = 2;
    if (is_skew_expanding(kind)) {
      shape.target_barred = source_barred != shape.cross;
    } else {
      // size-doubling parallel triples are stated for unbarred sources and
      // crossings for barred ones, both landing on the unbarred target
      if (source_barred != shape.cross) {
        throw std::invalid_argument("unsupported bar variant for the expanding gap");
      }
      shape.target_barred = false;
    }
  }
  return shape;
}

}  // namespace

PropagationResult propagation_check(const Graph& g, const Bipartition& p,
                                    std::int64_t r, std::int64_t gap_index,
                                    std::int64_t part_index, bool source_barred) {
  if (r < 1) throw std::invalid_argument("r must be at least 1");
  const auto spec = require_spec(g);
  const GapShape shape = gap_shape(*spec, gap_index, part_index, source_barred);
  const std::int64_t k = spec->k();

  PropagationResult result;
  result.source = PartRef{gap_index, part_index, source_barred};
  result.target = PartRef{shape.target_set, shape.target_part, shape.target_barred};
  result.source_label = part_label(*spec, p, result.source, r);
  result.target_label = part_label(*spec, p, result.target, r);
  const std::int64_t drift = result.target_label - result.source_label;
  result.labels_compatible = drift >= -shape.gap_bound && drift <= shape.gap_bound;
  if (result.labels_compatible) return result;

  // The proofs pair every source vertex with its counterpart across the
  // gap; a label jump forces r+1 pairs lying on opposite sides, and their
  // cut matrix is one of the structured patterns.
  const bool want_src_in_y = result.target_label < result.source_label;
  const auto [lo, hi] = part_position_range(part_index);
  const VertexId src_base = (gap_index - 1) * k;
  const VertexId tgt_base = (shape.target_set - 1) * k;
  const auto reflect = [&](std::int64_t pos) { return k - pos + 1; };

  std::vector<VertexId> rows, cols;
  for (std::int64_t pos = lo; pos <= hi && static_cast<std::int64_t>(rows.size()) < r + 1;
       ++pos) {
    const VertexId sv = src_base + (source_barred ? reflect(pos) : pos);
    if (p.in_y(sv) != want_src_in_y) continue;
    if (gap_index < spec->n) {
      const VertexId tv = tgt_base + (shape.target_barred ? reflect(pos) : pos);
      if (p.in_y(tv) == want_src_in_y) continue;
      rows.push_back(sv);
      cols.push_back(tv);
    } else {
      for (std::int64_t c : expanding_image(pos, k)) {
        const VertexId tv = tgt_base + (shape.target_barred ? reflect(c) : c);
        if (p.in_y(tv) != want_src_in_y) {
          rows.push_back(sv);
          cols.push_back(tv);
          break;
        }
      }
    }
  }
  if (static_cast<std::int64_t>(rows.size()) < r + 1) return result;  // no witness found

  // orient so the cut matrix lands exactly on a declared pattern
  const Gf2Matrix forward = cut_matrix_ordered(g, rows, cols);
  for (PatternClass cls : {PatternClass::diagonal, PatternClass::antidiagonal,
                           PatternClass::triangular}) {
    if (matches_pattern(forward, cls)) {
      result.witness = make_witness(
          g, rows, cols, *witness_pattern_from_string(to_string(cls)),
          static_cast<std::int64_t>(pattern_rank_floor(cls, forward.row_count())));
      return result;
    }
  }
  std::reverse(rows.begin(), rows.end());
  std::reverse(cols.begin(), cols.end());
  const Gf2Matrix backward = cut_matrix_ordered(g, rows, cols);
  for (PatternClass cls : {PatternClass::diagonal, PatternClass::antidiagonal,
                           PatternClass::triangular}) {
    if (matches_pattern(backward, cls)) {
      result.witness = make_witness(
          g, rows, cols, *witness_pattern_from_string(to_string(cls)),
          static_cast<std::int64_t>(pattern_rank_floor(cls, backward.row_count())));
      return result;
    }
  }
  throw std::logic_error("propagation pairs did not form a structured pattern");
}

PropagationResult propagation_check(const Graph& g, const Bipartition& p,
                                    std::int64_t r, std::int64_t gap_index,
                                    std::int64_t part_index) {
  const auto spec = require_spec(g);
  const bool barred = set_role(*spec, gap_index) == SetRole::bottom;
  return propagation_check(g, p, r, gap_index, part_index, barred);
}

std::optional<UniformWindowHit> uniform_label_window(const Graph& g, const Bipartition& p,
                                                     std::int64_t r, std::int64_t q) {
  if (r < 1 || q < 1) throw std::invalid_argument("r and q must be at least 1");
  const auto spec = require_spec(g);
  const bool even = spec->flavor == CarouselFlavor::even;
  const std::int64_t window = even ? 8 * r : 16 * r;
  const std::int64_t last = even ? q + window - 1 : q + window - 2;
  const std::int64_t deepest = even ? last : last + 1;
  if (deepest > spec->s) {
    throw std::invalid_argument("scan window reaches past the top part");
  }
  for (std::int64_t t = q; t <= last; ++t) {
    auto [lo, hi] = part_position_range(t);  // set 1 occupies ids 1..k
    std::int64_t size = hi - lo + 1;
    VertexId in_y = p.y_count_in_range(lo, hi);
    if (!even) {
      auto [lo2, hi2] = part_position_range(t + 1);
      size += hi2 - lo2 + 1;
      in_y += p.y_count_in_range(lo2, hi2);
    }
    if (in_y == 0) return UniformWindowHit{t, BlockSide::z};
    if (in_y == size) return UniformWindowHit{t, BlockSide::y};
  }
  return std::nullopt;
}

const char* to_string(CertifyMethod method) {
  switch (method) {
    case CertifyMethod::blocks: return "blocks";
    case CertifyMethod::propagation: return "propagation";
    case CertifyMethod::probe: return "probe";
  }
  return "?";
}

namespace {

std::vector<VertexId> sample_side(const Bipartition& p, bool want_y, std::size_t count,
                                  std::uint64_t& state) {
  const VertexId n = p.vertex_count();
  std::vector<VertexId> out;
  const std::size_t available =
      static_cast<std::size_t>(want_y ? p.y_size() : p.z_size());
  count = std::min(count, available);
  std::size_t attempts = 0;
  const std::size_t attempt_limit = 256 * (count + 1);
  while (out.size() < count && attempts < attempt_limit) {
    ++attempts;
    state = splitmix64(state);
    const VertexId v = static_cast<VertexId>(state % static_cast<std::uint64_t>(n)) + 1;
    if (p.in_y(v) != want_y) continue;
    if (std::find(out.begin(), out.end(), v) != out.end()) continue;
    out.push_back(v);
  }
  return out;
}

}  // namespace

PartitionCertificate certify_partition(const Graph& g, const Bipartition& p,
                                       std::int64_t r, std::uint64_t probe_seed,
                                       int probe_rounds) {
  PartitionCertificate cert;
  if (!is_balanced(g, p)) {
    cert.balanced = false;
    return cert;
  }
  const auto spec = require_spec(g);

  if (auto w = block_witness(g, p, r)) {
    cert.certified = true;
    cert.method = CertifyMethod::blocks;
    cert.witness = std::move(w);
    return cert;
  }

  for (std::int64_t gap = 1; gap <= spec->n; ++gap) {
    const TripleKind kind = spec->kinds[static_cast<std::size_t>(gap - 1)];
    const std::int64_t top_part = gap < spec->n ? spec->s : spec->s - 1;
    for (std::int64_t j = 1; j <= top_part; ++j) {
      for (bool barred : {false, true}) {
        if (gap == spec->n && is_expanding(kind) && barred != is_cross(kind)) continue;
        const PropagationResult res = propagation_check(g, p, r, gap, j, barred);
        if (res.witness) {
          cert.certified = true;
          cert.method = CertifyMethod::propagation;
          cert.witness = res.witness;
          return cert;
        }
      }
    }
  }

  std::uint64_t state = splitmix64(probe_seed ^ 0x70726f6265ull);
  const std::size_t d = static_cast<std::size_t>(2 * r);
  for (int round = 0; round < probe_rounds; ++round) {
    const std::vector<VertexId> rows = sample_side(p, true, d, state);
    const std::vector<VertexId> cols = sample_side(p, false, d, state);
    if (rows.empty() || cols.empty()) continue;
    const Gf2Matrix m = cut_matrix_ordered(g, rows, cols);
    if (gf2_rank(m) >= static_cast<std::size_t>(r)) {
      cert.certified = true;
      cert.method = CertifyMethod::probe;
      cert.witness = make_witness(g, rows, cols, WitnessPattern::raw, r);
      return cert;
    }
  }
  return cert;
}

Bipartition sampled_partition(const Graph& g, std::uint64_t seed, std::int64_t index) {
  const VertexId n = g.vertex_count();
  if (n < 2) throw std::invalid_argument("need at least 2 vertices");
  for (std::uint64_t attempt = 0; attempt < 64; ++attempt) {
    const std::uint64_t h =
        splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(index) * 0x51ed27ull + attempt));
    const double frac = 0.34 + 0.32 * to_unit(splitmix64(h ^ 0xf4acf00dull));
    Bipartition p = Bipartition::from_y_predicate(n, [&](VertexId v) {
      return to_unit(splitmix64(h ^ splitmix64(static_cast<std::uint64_t>(v)))) < frac;
    });
    if (is_balanced(n, p.y_size())) return p;
  }
  throw std::runtime_error("failed to draw a balanced bipartition");
}

std::int64_t SampledReport::certified_count() const {
  std::int64_t count = 0;
  for (const TrialReport& t : entries) {
    if (t.certified) ++count;
  }
  return count;
}

SampledReport sampled_certificate(const Graph& g, std::int64_t r, std::int64_t trials,
                                  std::uint64_t seed, int threads) {
  if (trials < 0) throw std::invalid_argument("negative trial count");
  SampledReport report;
  report.r = r;
  report.trials = trials;
  report.entries.resize(static_cast<std::size_t>(trials));
  if (trials == 0) return report;

  const int workers = std::max(1, std::min<int>(threads, static_cast<int>(trials)));
  auto run_range = [&](std::int64_t begin, std::int64_t end) {
    for (std::int64_t i = begin; i < end; ++i) {
      const Bipartition p = sampled_partition(g, seed, i);
      const PartitionCertificate cert =
          certify_partition(g, p, r, splitmix64(seed ^ static_cast<std::uint64_t>(i)));
      TrialReport& entry = report.entries[static_cast<std::size_t>(i)];
      entry.index = i;
      entry.y_size = p.y_size();
      entry.certified = cert.certified;
      entry.method = cert.method;
      entry.witness = cert.witness;
    }
  };
  if (workers == 1) {
    run_range(0, trials);
  } else {
    std::vector<std::thread> pool;
    const std::int64_t chunk = (trials + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const std::int64_t begin = w * chunk;
      const std::int64_t end = std::min<std::int64_t>(trials, begin + chunk);
      if (begin < end) pool.emplace_back(run_range, begin, end);
    }
    for (std::thread& t : pool) t.join();
  }
  return report;
}

std::string write_report_text(const SampledReport& report) {
  std::ostringstream out;
  out << "r = " << report.r << "\n";
  out << "trials = " << report.trials << "\n";
  for (const TrialReport& t : report.entries) {
    out << "trial " << t.index << ": " << (t.certified ? "certified" : "uncertified");
    out << " y_size=" << t.y_size;
    if (t.method) out << " method=" << to_string(*t.method);
    if (t.witness) {
      out << " pattern=" << to_string(t.witness->pattern)
          << " bound=" << t.witness->claimed_rank_lb;
    }
    out << "\n";
  }
  out << "certified = " << report.certified_count() << "/" << report.trials << "\n";
  return out.str();
}

}  // namespace carousel
