#include <stdexcept>

#include "carousel/triples.hpp"
#include "doctest.h"
#include "triple_tables.hpp"

using namespace carousel;

namespace {

std::string triple_row(TripleKind kind, std::int64_t k, std::int64_t j) {
  std::string row;
  for (std::int64_t jp = 1; jp <= k; ++jp) {
    row.push_back(triple_adjacent(kind, k, j, jp) ? '1' : '0');
  }
  return row;
}

}  // namespace

TEST_SUITE_BEGIN("triples");

TEST_CASE("kind validation") {
  CHECK_NOTHROW(validate_kind(TripleKind::skew_expanding_crossing, 6));
  CHECK_THROWS_AS(validate_kind(TripleKind::skew_expanding_matching, 8),
                  std::invalid_argument);
  CHECK_NOTHROW(validate_kind(TripleKind::regular_matching, 1));
  CHECK_THROWS_AS(validate_kind(TripleKind::regular_matching, 0), std::invalid_argument);
  CHECK_THROWS_AS(validate_kind(TripleKind::skew_expanding_antimatching, 4),
                  std::invalid_argument);
}

TEST_CASE("classification helpers") {
  CHECK(is_regular(TripleKind::regular_crossing));
  CHECK(is_expanding(TripleKind::expanding_matching));
  CHECK_FALSE(is_expanding(TripleKind::skew_expanding_matching));
  CHECK(is_skew_expanding(TripleKind::skew_expanding_crossing));
  CHECK(is_parallel(TripleKind::regular_antimatching));
  CHECK(is_parallel(TripleKind::skew_expanding_matching));
  CHECK(is_cross(TripleKind::expanding_crossing));
  CHECK_FALSE(is_cross(TripleKind::expanding_antimatching));
}

TEST_CASE("name round trip") {
  for (TripleKind kind : {TripleKind::regular_matching, TripleKind::skew_expanding_crossing,
                          TripleKind::expanding_antimatching}) {
    CHECK(triple_kind_from_string(to_string(kind)) == kind);
  }
  CHECK_FALSE(triple_kind_from_string("bogus"));
}

TEST_CASE("crossing and expanding formulas at the documented points") {
  CHECK(triple_adjacent(TripleKind::regular_crossing, 3, 1, 3));
  CHECK_FALSE(triple_adjacent(TripleKind::regular_crossing, 3, 1, 2));

  CHECK(triple_adjacent(TripleKind::expanding_matching, 7, 3, 6));
  CHECK_FALSE(triple_adjacent(TripleKind::expanding_matching, 7, 3, 5));
  for (std::int64_t jp = 1; jp <= 7; ++jp) {
    CHECK_FALSE(triple_adjacent(TripleKind::expanding_matching, 7, 5, jp));
  }

  CHECK_FALSE(triple_adjacent(TripleKind::expanding_antimatching, 7, 3, 6));
  CHECK(triple_adjacent(TripleKind::expanding_antimatching, 7, 3, 4));

  CHECK(triple_adjacent(TripleKind::skew_expanding_matching, 6, 1, 2));
  for (std::int64_t jp = 1; jp <= 6; ++jp) {
    CHECK_FALSE(triple_adjacent(TripleKind::skew_expanding_matching, 6, 3, jp));
  }
  CHECK(triple_adjacent(TripleKind::skew_expanding_matching, 6, 6, 4));

  CHECK(triple_adjacent(TripleKind::skew_expanding_crossing, 6, 2, 4));

  CHECK_THROWS_AS(triple_adjacent(TripleKind::regular_matching, 3, 0, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(triple_adjacent(TripleKind::regular_matching, 3, 1, 4),
                  std::invalid_argument);
}

TEST_CASE("hand-transcribed tables for the three smallest valid k") {
  for (const fixtures::TripleTable& table : fixtures::triple_tables()) {
    REQUIRE(static_cast<std::int64_t>(table.rows.size()) == table.k);
    for (std::int64_t j = 1; j <= table.k; ++j) {
      CAPTURE(to_string(table.kind));
      CAPTURE(table.k);
      CAPTURE(j);
      CHECK(triple_row(table.kind, table.k, j) ==
            table.rows[static_cast<std::size_t>(j - 1)]);
    }
  }
}

TEST_CASE("regular matching and antimatching are complements up to k=64") {
  for (std::int64_t k = 1; k <= 64; ++k) {
    for (std::int64_t j = 1; j <= k; ++j) {
      for (std::int64_t jp = 1; jp <= k; ++jp) {
        CHECK(triple_adjacent(TripleKind::regular_matching, k, j, jp) !=
              triple_adjacent(TripleKind::regular_antimatching, k, j, jp));
      }
    }
  }
}

TEST_CASE("regular kinds reproduce the pattern matrices up to k=64") {
  for (std::int64_t k = 1; k <= 64; ++k) {
    for (std::int64_t j = 1; j <= k; ++j) {
      for (std::int64_t jp = 1; jp <= k; ++jp) {
        CHECK(triple_adjacent(TripleKind::regular_matching, k, j, jp) == (j == jp));
        CHECK(triple_adjacent(TripleKind::regular_antimatching, k, j, jp) == (j != jp));
        CHECK(triple_adjacent(TripleKind::regular_crossing, k, j, jp) == (j + jp >= k + 1));
      }
    }
  }
}

TEST_CASE("skew row bands tile the index range") {
  for (std::int64_t k : {2, 6, 10, 14, 62}) {
    const std::int64_t a = (k - 2) / 4;
    const std::int64_t b = (3 * k + 2) / 4;
    CHECK(a >= 0);
    CHECK(a + 1 <= b);
    CHECK(b <= k);
    // every row falls in exactly one band
    for (std::int64_t j = 1; j <= k; ++j) {
      const int in_first = j <= a ? 1 : 0;
      const int in_mid = (j > a && j <= b) ? 1 : 0;
      const int in_last = j > b ? 1 : 0;
      CHECK(in_first + in_mid + in_last == 1);
    }
  }
}

TEST_CASE("expanding image names the paired columns") {
  CHECK(expanding_image(3, 7) == std::vector<std::int64_t>{6, 7});
  CHECK(expanding_image(4, 7).empty());
  CHECK(expanding_image(1, 3) == std::vector<std::int64_t>{2, 3});
  CHECK_THROWS_AS(expanding_image(0, 3), std::invalid_argument);
  // the image is exactly the expanding matching's neighborhood
  for (std::int64_t k : {1, 2, 7, 16}) {
    for (std::int64_t j = 1; j <= k; ++j) {
      std::vector<std::int64_t> nbrs;
      for (std::int64_t jp = 1; jp <= k; ++jp) {
        if (triple_adjacent(TripleKind::expanding_matching, k, j, jp)) nbrs.push_back(jp);
      }
      CHECK(nbrs == expanding_image(j, k));
    }
  }
}

TEST_SUITE_END();
