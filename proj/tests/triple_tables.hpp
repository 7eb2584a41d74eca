// Hand-transcribed adjacency tables for every triple kind at its three
// smallest valid cardinalities.  Row j is printed as a string of k bits,
// bit j' giving the edge u^j v^{j'}.  Transcribed entry by entry from the
// closed-form definitions; regenerating them through triple_adjacent would
// defeat their purpose.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "carousel/triples.hpp"

namespace fixtures {

struct TripleTable {
  carousel::TripleKind kind;
  std::int64_t k;
  std::vector<std::string> rows;
};

inline std::vector<TripleTable> triple_tables() {
  using carousel::TripleKind;
  return {
      {TripleKind::regular_matching, 1, {"1"}},
      {TripleKind::regular_matching, 2, {"10", "01"}},
      {TripleKind::regular_matching, 3, {"100", "010", "001"}},

      {TripleKind::regular_antimatching, 1, {"0"}},
      {TripleKind::regular_antimatching, 2, {"01", "10"}},
      {TripleKind::regular_antimatching, 3, {"011", "101", "110"}},

      {TripleKind::regular_crossing, 1, {"1"}},
      {TripleKind::regular_crossing, 2, {"01", "11"}},
      {TripleKind::regular_crossing, 3, {"001", "011", "111"}},

      {TripleKind::expanding_matching, 1, {"0"}},
      {TripleKind::expanding_matching, 2, {"01", "00"}},
      {TripleKind::expanding_matching, 3, {"011", "000", "000"}},

      {TripleKind::expanding_antimatching, 1, {"1"}},
      {TripleKind::expanding_antimatching, 2, {"10", "11"}},
      {TripleKind::expanding_antimatching, 3, {"100", "111", "111"}},

      {TripleKind::expanding_crossing, 1, {"0"}},
      {TripleKind::expanding_crossing, 2, {"00", "01"}},
      {TripleKind::expanding_crossing, 3, {"000", "000", "011"}},

      // rows 1..(k-2)/4 pair with {2j, 2j+1}; the middle band is empty;
      // rows (3k+2)/4+1..k pair with {2j-k-2, 2j-k-1}
      {TripleKind::skew_expanding_matching, 2, {"00", "00"}},
      {TripleKind::skew_expanding_matching, 6,
       {"011000", "000000", "000000", "000000", "000000", "000110"}},
      {TripleKind::skew_expanding_matching, 10,
       {"0110000000", "0001100000", "0000000000", "0000000000", "0000000000",
        "0000000000", "0000000000", "0000000000", "0000011000", "0000000110"}},

      // identical outer bands, complete middle band
      {TripleKind::skew_expanding_antimatching, 2, {"11", "11"}},
      {TripleKind::skew_expanding_antimatching, 6,
       {"011000", "111111", "111111", "111111", "111111", "000110"}},
      {TripleKind::skew_expanding_antimatching, 10,
       {"0110000000", "0001100000", "1111111111", "1111111111", "1111111111",
        "1111111111", "1111111111", "1111111111", "0000011000", "0000000110"}},

      // four row bands: 2j+j' >= k, then j' >= k/2+1, then j' >= k/2-1,
      // then 2j+j'-2 >= 2k
      {TripleKind::skew_expanding_crossing, 2, {"01", "11"}},
      {TripleKind::skew_expanding_crossing, 6,
       {"000111", "000111", "000111", "011111", "011111", "011111"}},
      {TripleKind::skew_expanding_crossing, 10,
       {"0000000111", "0000011111", "0000011111", "0000011111", "0000011111",
        "0001111111", "0001111111", "0001111111", "0001111111", "0111111111"}},
  };
}

}  // namespace fixtures
