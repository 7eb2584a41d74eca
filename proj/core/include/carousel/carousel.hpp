#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "carousel/graph.hpp"
#include "carousel/triples.hpp"

namespace carousel {

enum class CarouselFlavor { even, odd };

const char* to_string(CarouselFlavor flavor);
std::optional<CarouselFlavor> flavor_from_string(std::string_view name);

enum class IntraSetPolicy { empty, clique, seeded_random };
enum class LongRangePolicy { empty, seeded_random };

const char* to_string(IntraSetPolicy p);
const char* to_string(LongRangePolicy p);
std::optional<IntraSetPolicy> intra_policy_from_string(std::string_view name);
std::optional<LongRangePolicy> long_range_policy_from_string(std::string_view name);

/// Blueprint of a carousel: n sets of cardinality k arranged cyclically,
/// kinds[i-1] governing the pair (X_i, X_{i+1}) and kinds[n-1] the pair
/// (X_n, X_1).  Edges inside a set and between non-consecutive sets follow
/// the policies; seeded_random draws from a counter-based hash of
/// (seed, min id, max id) so the oracle needs no stored state.
struct CarouselSpec {
  std::int64_t n = 3;
  std::int64_t s = 1;
  CarouselFlavor flavor = CarouselFlavor::even;
  std::vector<TripleKind> kinds;
  IntraSetPolicy intra_set = IntraSetPolicy::empty;
  LongRangePolicy long_range = LongRangePolicy::empty;
  std::uint64_t seed = 0;
  double density = 0.5;

  std::int64_t k() const;             // 2^s - 1 (even) or 2(2^s - 1) (odd)
  VertexId vertex_count() const;      // n * k
};

struct VertexRef {
  std::int64_t set_index = 0;  // 1..n
  std::int64_t position = 0;   // 1..k
  bool operator==(const VertexRef&) const = default;
};

VertexId to_vertex_id(const CarouselSpec& spec, VertexRef ref);
VertexRef to_vertex_ref(const CarouselSpec& spec, VertexId id);

/// All violated validity clauses, by name; empty means the spec is valid.
std::vector<std::string> validate_spec(const CarouselSpec& spec);

/// Optional per-pair override used by the family constructions.  Returning
/// nullopt falls through to the carousel rule; set indices are 1..n and the
/// call is made once per unordered pair with (i,j) <= (i2,j2) in id order.
using PairOverride = std::function<std::optional<bool>(
    std::int64_t i, std::int64_t j, std::int64_t i2, std::int64_t j2)>;

/// Implicit graph on n*k vertices; id = (i-1)*k + j.  Throws on an invalid
/// spec.  The result carries the spec as provenance.
Graph build(const CarouselSpec& spec, PairOverride override_rule = nullptr);

struct PartRef {
  std::int64_t i = 1;      // set index, 1..n
  std::int64_t j = 1;      // part index, 1..s
  bool barred = false;
  bool operator==(const PartRef&) const = default;
};

/// Vertices of X_{i,j} = {x_i^{2^{j-1}}, ..., x_i^{2^j - 1}}, or of its
/// reflection under the bar involution (in the order induced by it).
std::vector<VertexId> part_vertices(const CarouselSpec& spec, PartRef part);

/// Position range of an unbarred part: [2^{j-1}, 2^j - 1].
std::pair<std::int64_t, std::int64_t> part_position_range(std::int64_t j);

enum class SetRole { top, bottom };
const char* to_string(SetRole role);

/// X_1 is a top set; the role flips across every cross triple.
SetRole set_role(const CarouselSpec& spec, std::int64_t i);

/// Position reflection j -> k - j + 1 inside a set; an involution.
std::int64_t bar_position(const CarouselSpec& spec, std::int64_t j);
VertexRef bar(const CarouselSpec& spec, VertexRef ref);

/// Flat key-value text format (keys: n, s, flavor, kinds, intra_set,
/// long_range, seed, density).
std::string write_spec_text(const CarouselSpec& spec);
CarouselSpec parse_spec_text(const std::string& text);
void save_spec_file(const CarouselSpec& spec, const std::string& path);
CarouselSpec load_spec_file(const std::string& path);

}  // namespace carousel
