#include "carousel/triples.hpp"

#include <stdexcept>
#include <string>

namespace carousel {

bool is_regular(TripleKind kind) {
  return kind == TripleKind::regular_matching ||
         kind == TripleKind::regular_antimatching ||
         kind == TripleKind::regular_crossing;
}

bool is_expanding(TripleKind kind) {
  return kind == TripleKind::expanding_matching ||
         kind == TripleKind::expanding_antimatching ||
         kind == TripleKind::expanding_crossing;
}

bool is_skew_expanding(TripleKind kind) {
  return kind == TripleKind::skew_expanding_matching ||
         kind == TripleKind::skew_expanding_antimatching ||
         kind == TripleKind::skew_expanding_crossing;
}

bool is_cross(TripleKind kind) {
  return kind == TripleKind::regular_crossing ||
         kind == TripleKind::expanding_crossing ||
         kind == TripleKind::skew_expanding_crossing;
}

bool is_parallel(TripleKind kind) { return !is_cross(kind); }

const char* to_string(TripleKind kind) {
  switch (kind) {
    case TripleKind::regular_matching: return "regular_matching";
    case TripleKind::regular_antimatching: return "regular_antimatching";
    case TripleKind::regular_crossing: return "regular_crossing";
    case TripleKind::expanding_matching: return "expanding_matching";
    case TripleKind::expanding_antimatching: return "expanding_antimatching";
    case TripleKind::expanding_crossing: return "expanding_crossing";
    case TripleKind::skew_expanding_matching: return "skew_expanding_matching";
    case TripleKind::skew_expanding_antimatching: return "skew_expanding_antimatching";
    case TripleKind::skew_expanding_crossing: return "skew_expanding_crossing";
  }
  return "?";
}

std::optional<TripleKind> triple_kind_from_string(std::string_view name) {
  for (TripleKind kind : {
           TripleKind::regular_matching, TripleKind::regular_antimatching,
           TripleKind::regular_crossing, TripleKind::expanding_matching,
           TripleKind::expanding_antimatching, TripleKind::expanding_crossing,
           TripleKind::skew_expanding_matching,
           TripleKind::skew_expanding_antimatching,
           TripleKind::skew_expanding_crossing,
       }) {
    if (name == to_string(kind)) return kind;
  }
  return std::nullopt;
}

void validate_kind(TripleKind kind, std::int64_t k) {
  if (k < 1) throw std::invalid_argument("triple cardinality k must be at least 1");
  if (is_skew_expanding(kind)) {
    if (k % 4 != 2) {
      throw std::invalid_argument(std::string(to_string(kind)) +
                                  " requires k == 2 (mod 4), got k=" + std::to_string(k));
    }
    // The three row ranges must tile {1..k} exactly.
    const std::int64_t a = (k - 2) / 4;
    const std::int64_t b = (3 * k + 2) / 4;
    if (!(a >= 0 && a + 1 <= b && b <= k)) {
      throw std::logic_error("skew row ranges do not partition 1..k");
    }
  }
}

bool triple_adjacent(TripleKind kind, std::int64_t k, std::int64_t j,
                     std::int64_t j_prime) {
  validate_kind(kind, k);
  if (j < 1 || j > k || j_prime < 1 || j_prime > k) {
    throw std::invalid_argument("triple position out of range");
  }
  switch (kind) {
    case TripleKind::regular_matching:
      return j == j_prime;
    case TripleKind::regular_antimatching:
      return j != j_prime;
    case TripleKind::regular_crossing:
      return j + j_prime >= k + 1;
    case TripleKind::expanding_matching:
      return j_prime == 2 * j || j_prime == 2 * j + 1;
    case TripleKind::expanding_antimatching:
      return j_prime != 2 * j && j_prime != 2 * j + 1;
    case TripleKind::expanding_crossing:
      return 2 * j + j_prime >= 2 * k + 2;
    case TripleKind::skew_expanding_matching:
      if (j <= (k - 2) / 4) return j_prime == 2 * j || j_prime == 2 * j + 1;
      if (j <= (3 * k + 2) / 4) return false;
      return j_prime == 2 * j - k - 2 || j_prime == 2 * j - k - 1;
    case TripleKind::skew_expanding_antimatching:
      // First and third row ranges coincide with the skew matching; only
      // the middle range is complete.
      if (j <= (k - 2) / 4) return j_prime == 2 * j || j_prime == 2 * j + 1;
      if (j <= (3 * k + 2) / 4) return true;
      return j_prime == 2 * j - k - 2 || j_prime == 2 * j - k - 1;
    case TripleKind::skew_expanding_crossing:
      if (j <= (k - 2) / 4) return 2 * j + j_prime >= k;
      if (j <= k / 2) return j_prime >= k / 2 + 1;
      if (j <= (3 * k + 2) / 4) return j_prime >= k / 2 - 1;
      return 2 * j + j_prime - 2 >= 2 * k;
  }
  return false;
}

std::vector<std::int64_t> expanding_image(std::int64_t j, std::int64_t k) {
  if (j < 1 || j > k) throw std::invalid_argument("expanding_image position out of range");
  std::vector<std::int64_t> out;
  if (2 * j <= k) out.push_back(2 * j);
  if (2 * j + 1 <= k) out.push_back(2 * j + 1);
  return out;
}

}  // namespace carousel
