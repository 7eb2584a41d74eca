#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace carousel {

/// The nine adjacency patterns a consecutive set pair can follow.
enum class TripleKind {
  regular_matching,
  regular_antimatching,
  regular_crossing,
  expanding_matching,
  expanding_antimatching,
  expanding_crossing,
  skew_expanding_matching,
  skew_expanding_antimatching,
  skew_expanding_crossing,
};

bool is_regular(TripleKind kind);
bool is_expanding(TripleKind kind);       // non-skew expanding
bool is_skew_expanding(TripleKind kind);
bool is_parallel(TripleKind kind);        // matching or antimatching
bool is_cross(TripleKind kind);           // any crossing

const char* to_string(TripleKind kind);
std::optional<TripleKind> triple_kind_from_string(std::string_view name);

/// Regular and expanding kinds accept any k >= 1; skew kinds require
/// k == 2 (mod 4).  Throws std::invalid_argument otherwise.
void validate_kind(TripleKind kind, std::int64_t k);

/// Edge predicate for ordered sets X = {u^1..u^k} (rows, index j) and
/// X' = {v^1..v^k} (columns, index j').  Not symmetric in (j, j').
bool triple_adjacent(TripleKind kind, std::int64_t k, std::int64_t j,
                     std::int64_t j_prime);

/// Column indices an expanding parallel triple pairs with row j:
/// {2j, 2j+1} restricted to [1, k].
std::vector<std::int64_t> expanding_image(std::int64_t j, std::int64_t k);

}  // namespace carousel
