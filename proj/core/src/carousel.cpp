#include "carousel/carousel.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>

namespace carousel {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Counter-based pseudorandom edge decision for (seed, lo, hi), lo < hi.
bool seeded_pair_edge(std::uint64_t seed, VertexId lo, VertexId hi, double density) {
  std::uint64_t h = splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(lo)));
  h = splitmix64(h ^ splitmix64(static_cast<std::uint64_t>(hi)));
  const double u = static_cast<double>(h >> 11) * 0x1.0p-53;
  return u < density;
}

std::int64_t checked_pow2(std::int64_t e) {
  if (e < 0 || e > 62) throw std::invalid_argument("order parameter too large");
  return std::int64_t{1} << e;
}

}  // namespace

const char* to_string(CarouselFlavor flavor) {
  return flavor == CarouselFlavor::even ? "even" : "odd";
}

std::optional<CarouselFlavor> flavor_from_string(std::string_view name) {
  if (name == "even") return CarouselFlavor::even;
  if (name == "odd") return CarouselFlavor::odd;
  return std::nullopt;
}

const char* to_string(IntraSetPolicy p) {
  switch (p) {
    case IntraSetPolicy::empty: return "empty";
    case IntraSetPolicy::clique: return "clique";
    case IntraSetPolicy::seeded_random: return "seeded_random";
  }
  return "?";
}

const char* to_string(LongRangePolicy p) {
  return p == LongRangePolicy::empty ? "empty" : "seeded_random";
}

std::optional<IntraSetPolicy> intra_policy_from_string(std::string_view name) {
  if (name == "empty") return IntraSetPolicy::empty;
  if (name == "clique") return IntraSetPolicy::clique;
  if (name == "seeded_random") return IntraSetPolicy::seeded_random;
  return std::nullopt;
}

std::optional<LongRangePolicy> long_range_policy_from_string(std::string_view name) {
  if (name == "empty") return LongRangePolicy::empty;
  if (name == "seeded_random") return LongRangePolicy::seeded_random;
  return std::nullopt;
}

std::int64_t CarouselSpec::k() const {
  const std::int64_t base = checked_pow2(s) - 1;
  return flavor == CarouselFlavor::even ? base : 2 * base;
}

VertexId CarouselSpec::vertex_count() const { return n * k(); }

VertexId to_vertex_id(const CarouselSpec& spec, VertexRef ref) {
  const std::int64_t k = spec.k();
  if (ref.set_index < 1 || ref.set_index > spec.n || ref.position < 1 ||
      ref.position > k) {
    throw std::invalid_argument("vertex ref out of range");
  }
  return (ref.set_index - 1) * k + ref.position;
}

VertexRef to_vertex_ref(const CarouselSpec& spec, VertexId id) {
  const std::int64_t k = spec.k();
  if (id < 1 || id > spec.vertex_count()) {
    throw std::invalid_argument("vertex id out of range");
  }
  return VertexRef{(id - 1) / k + 1, (id - 1) % k + 1};
}

std::vector<std::string> validate_spec(const CarouselSpec& spec) {
  std::vector<std::string> errors;
  if (spec.n < 3) errors.push_back("set_count: n must be at least 3");
  const bool s_ok = spec.s >= 1 && spec.s <= 62;
  if (spec.s < 1) errors.push_back("order: s must be at least 1");
  if (spec.s > 62) errors.push_back("order: s too large for 64-bit positions");
  if (static_cast<std::int64_t>(spec.kinds.size()) != spec.n) {
    errors.push_back("kinds: expected exactly n triple kinds");
    return errors;
  }
  if (spec.kinds.empty()) return errors;

  if (spec.kinds.front() != TripleKind::regular_crossing) {
    errors.push_back("first_gap: kinds[1] must be regular_crossing");
  }
  for (std::int64_t i = 2; i <= spec.n - 1; ++i) {
    if (!is_regular(spec.kinds[static_cast<std::size_t>(i - 1)])) {
      errors.push_back("interior_gap: kinds[" + std::to_string(i) + "] must be regular");
    }
  }
  const TripleKind last = spec.kinds.back();
  std::int64_t cross_count = 0;
  for (TripleKind kind : spec.kinds) {
    if (is_cross(kind)) ++cross_count;
  }
  if (spec.flavor == CarouselFlavor::even) {
    if (!is_expanding(last)) {
      errors.push_back("last_gap: even flavor requires an expanding (non-skew) kind");
    }
    if (cross_count % 2 != 0) {
      errors.push_back("cross_parity: crossing count " + std::to_string(cross_count) +
                       " is odd, even flavor requires an even count");
    }
  } else {
    if (!is_skew_expanding(last)) {
      errors.push_back("last_gap: odd flavor requires a skew expanding kind");
    }
    if (cross_count % 2 != 1) {
      errors.push_back("cross_parity: crossing count " + std::to_string(cross_count) +
                       " is even, odd flavor requires an odd count");
    }
  }
  if (s_ok) {
    const std::int64_t k = spec.k();
    for (TripleKind kind : spec.kinds) {
      try {
        validate_kind(kind, k);
      } catch (const std::exception& e) {
        errors.push_back(std::string("kind_cardinality: ") + e.what());
      }
    }
  }
  if (spec.intra_set == IntraSetPolicy::seeded_random ||
      spec.long_range == LongRangePolicy::seeded_random) {
    if (!(spec.density >= 0.0 && spec.density <= 1.0)) {
      errors.push_back("density: must lie in [0, 1]");
    }
  }
  return errors;
}

Graph build(const CarouselSpec& spec, PairOverride override_rule) {
  const std::vector<std::string> errors = validate_spec(spec);
  if (!errors.empty()) {
    std::string msg = "invalid carousel spec:";
    for (const std::string& e : errors) msg += " [" + e + "]";
    throw std::invalid_argument(msg);
  }
  auto shared = std::make_shared<const CarouselSpec>(spec);
  const std::int64_t n = spec.n;
  const std::int64_t k = spec.k();

  auto rule = [shared, n, k, override_rule](VertexId u, VertexId v) -> bool {
    const std::int64_t i = (u - 1) / k + 1, j = (u - 1) % k + 1;
    const std::int64_t i2 = (v - 1) / k + 1, j2 = (v - 1) % k + 1;
    if (override_rule) {
      if (auto forced = override_rule(i, j, i2, j2)) return *forced;
    }
    if (i == i2) {
      switch (shared->intra_set) {
        case IntraSetPolicy::empty: return false;
        case IntraSetPolicy::clique: return true;
        case IntraSetPolicy::seeded_random:
          return seeded_pair_edge(shared->seed, u, v, shared->density);
      }
    }
    if (i2 == i % n + 1) {
      return triple_adjacent(shared->kinds[static_cast<std::size_t>(i - 1)], k, j, j2);
    }
    if (i == i2 % n + 1) {
      return triple_adjacent(shared->kinds[static_cast<std::size_t>(i2 - 1)], k, j2, j);
    }
    switch (shared->long_range) {
      case LongRangePolicy::empty: return false;
      case LongRangePolicy::seeded_random:
        return seeded_pair_edge(shared->seed, u, v, shared->density);
    }
    return false;
  };

  Graph g = Graph::from_rule(spec.vertex_count(), std::move(rule),
                             "carousel(n=" + std::to_string(n) + ",s=" +
                                 std::to_string(spec.s) + "," + to_string(spec.flavor) + ")");
  return g.with_carousel_spec(std::move(shared));
}

std::pair<std::int64_t, std::int64_t> part_position_range(std::int64_t j) {
  return {checked_pow2(j - 1), checked_pow2(j) - 1};
}

std::vector<VertexId> part_vertices(const CarouselSpec& spec, PartRef part) {
  if (part.i < 1 || part.i > spec.n || part.j < 1 || part.j > spec.s) {
    throw std::invalid_argument("part ref out of range");
  }
  const auto [lo, hi] = part_position_range(part.j);
  std::vector<VertexId> out;
  out.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (std::int64_t p = lo; p <= hi; ++p) {
    const std::int64_t pos = part.barred ? bar_position(spec, p) : p;
    out.push_back(to_vertex_id(spec, VertexRef{part.i, pos}));
  }
  return out;
}

const char* to_string(SetRole role) { return role == SetRole::top ? "top" : "bottom"; }

SetRole set_role(const CarouselSpec& spec, std::int64_t i) {
  if (i < 1 || i > spec.n) throw std::invalid_argument("set index out of range");
  std::int64_t flips = 0;
  for (std::int64_t g = 1; g < i; ++g) {
    if (is_cross(spec.kinds[static_cast<std::size_t>(g - 1)])) ++flips;
  }
  return flips % 2 == 0 ? SetRole::top : SetRole::bottom;
}

std::int64_t bar_position(const CarouselSpec& spec, std::int64_t j) {
  const std::int64_t k = spec.k();
  if (j < 1 || j > k) throw std::invalid_argument("position out of range");
  return k - j + 1;
}

VertexRef bar(const CarouselSpec& spec, VertexRef ref) {
  return VertexRef{ref.set_index, bar_position(spec, ref.position)};
}

std::string write_spec_text(const CarouselSpec& spec) {
  std::ostringstream out;
  out << "n = " << spec.n << "\n";
  out << "s = " << spec.s << "\n";
  out << "flavor = " << to_string(spec.flavor) << "\n";
  out << "kinds = ";
  for (std::size_t i = 0; i < spec.kinds.size(); ++i) {
    if (i) out << ", ";
    out << to_string(spec.kinds[i]);
  }
  out << "\n";
  out << "intra_set = " << to_string(spec.intra_set) << "\n";
  out << "long_range = " << to_string(spec.long_range) << "\n";
  out << "seed = " << spec.seed << "\n";
  std::ostringstream d;
  d.precision(17);
  d << spec.density;
  out << "density = " << d.str() << "\n";
  return out.str();
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

CarouselSpec parse_spec_text(const std::string& text) {
  CarouselSpec spec;
  spec.kinds.clear();
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("bad spec line: " + t);
    const std::string key = trim(t.substr(0, eq));
    const std::string value = trim(t.substr(eq + 1));
    if (key == "n") {
      spec.n = std::stoll(value);
    } else if (key == "s") {
      spec.s = std::stoll(value);
    } else if (key == "flavor") {
      auto f = flavor_from_string(value);
      if (!f) throw std::invalid_argument("unknown flavor: " + value);
      spec.flavor = *f;
    } else if (key == "kinds") {
      std::istringstream ks(value);
      std::string item;
      while (std::getline(ks, item, ',')) {
        const std::string name = trim(item);
        auto kind = triple_kind_from_string(name);
        if (!kind) throw std::invalid_argument("unknown triple kind: " + name);
        spec.kinds.push_back(*kind);
      }
    } else if (key == "intra_set") {
      auto p = intra_policy_from_string(value);
      if (!p) throw std::invalid_argument("unknown intra_set policy: " + value);
      spec.intra_set = *p;
    } else if (key == "long_range") {
      auto p = long_range_policy_from_string(value);
      if (!p) throw std::invalid_argument("unknown long_range policy: " + value);
      spec.long_range = *p;
    } else if (key == "seed") {
      spec.seed = std::stoull(value);
    } else if (key == "density") {
      spec.density = std::stod(value);
    } else {
      throw std::invalid_argument("unknown spec key: " + key);
    }
  }
  return spec;
}

void save_spec_file(const CarouselSpec& spec, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write spec file: " + path);
  out << write_spec_text(spec);
}

CarouselSpec load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read spec file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec_text(buf.str());
}

}  // namespace carousel
