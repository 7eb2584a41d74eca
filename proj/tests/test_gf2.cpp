#include <random>
#include <stdexcept>

#include "carousel/gf2.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace carousel;

TEST_SUITE_BEGIN("gf2");

TEST_CASE("rank of pattern matrices") {
  CHECK(gf2_rank(pattern_matrix(PatternClass::diagonal, 3)) == 3);
  CHECK(gf2_rank(pattern_matrix(PatternClass::antidiagonal, 3)) == 2);
  CHECK(gf2_rank(Gf2Matrix()) == 0);
  CHECK(gf2_rank(Gf2Matrix(4, 4)) == 0);
}

TEST_CASE("pattern generators") {
  const Gf2Matrix tri = pattern_matrix(PatternClass::triangular, 2);
  CHECK(tri.row_string(1) == "10");
  CHECK(tri.row_string(2) == "11");

  const Gf2Matrix one = pattern_matrix(PatternClass::diagonal, 1);
  CHECK(one.row_count() == 1);
  CHECK(one.at(1, 1));

  const std::vector<bool> bits{false, true, false, true};
  const Gf2Matrix near = pattern_matrix(PatternClass::near_triangular, 4, &bits);
  CHECK(near.row_string(1) == "0000");
  CHECK(near.row_string(2) == "1100");
  CHECK(near.row_string(3) == "1100");
  CHECK(near.row_string(4) == "1111");
  CHECK(gf2_rank(near) >= 2);

  CHECK_THROWS_AS(pattern_matrix(PatternClass::near_triangular, 4), std::invalid_argument);
  CHECK_THROWS_AS(pattern_matrix(PatternClass::diagonal, 2, &bits), std::invalid_argument);
  CHECK_THROWS_AS(pattern_matrix(PatternClass::diagonal, 0), std::invalid_argument);
}

TEST_CASE("diagonal, antidiagonal and triangular ranks for r up to 64") {
  for (std::size_t r = 1; r <= 64; ++r) {
    CHECK(gf2_rank(pattern_matrix(PatternClass::diagonal, r)) == r);
    CHECK(gf2_rank(pattern_matrix(PatternClass::triangular, r)) == r);
    const std::size_t anti = gf2_rank(pattern_matrix(PatternClass::antidiagonal, r));
    CHECK(anti == (r % 2 == 1 ? r - 1 : r));
    CHECK(pattern_rank_floor(PatternClass::antidiagonal, r) == anti);
  }
}

TEST_CASE("near-triangular matrices have rank at least half their size") {
  for (std::size_t r = 1; r <= 4; ++r) {
    const std::size_t size = 2 * r;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << size); ++mask) {
      std::vector<bool> bits(size);
      for (std::size_t i = 0; i < size; ++i) bits[i] = (mask >> i) & 1;
      const Gf2Matrix m = pattern_matrix(PatternClass::near_triangular, size, &bits);
      CHECK(gf2_rank(m) >= r);
    }
  }
}

TEST_CASE("packed rank equals the naive eliminator") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 400; ++trial) {
    std::uniform_int_distribution<std::size_t> dim(1, 64);
    const std::size_t rows = dim(rng), cols = dim(rng);
    Gf2Matrix m(rows, cols);
    std::bernoulli_distribution coin(0.5);
    for (std::size_t i = 1; i <= rows; ++i) {
      for (std::size_t j = 1; j <= cols; ++j) {
        if (coin(rng)) m.set(i, j, true);
      }
    }
    CHECK(gf2_rank(m) == oracle::naive_rank(oracle::to_rows(m)));
  }
}

TEST_CASE("rank is invariant under transpose and monotone on submatrices") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    Gf2Matrix m(6, 8);
    std::bernoulli_distribution coin(0.4);
    for (std::size_t i = 1; i <= 6; ++i) {
      for (std::size_t j = 1; j <= 8; ++j) {
        if (coin(rng)) m.set(i, j, true);
      }
    }
    const std::size_t r = gf2_rank(m);
    CHECK(gf2_rank(m.transposed()) == r);
    CHECK(gf2_rank(m.submatrix({1, 3, 5}, {2, 4, 6, 8})) <= r);
  }
}

TEST_CASE("pattern matching ignores only the near-triangular diagonal") {
  std::vector<bool> bits{true, false};
  const Gf2Matrix near = pattern_matrix(PatternClass::near_triangular, 2, &bits);
  CHECK(matches_pattern(near, PatternClass::near_triangular));
  CHECK_FALSE(matches_pattern(near, PatternClass::diagonal));
  CHECK(matches_pattern(pattern_matrix(PatternClass::diagonal, 3), PatternClass::diagonal));
  CHECK_FALSE(matches_pattern(pattern_matrix(PatternClass::diagonal, 3), PatternClass::near_triangular));
  CHECK(matches_pattern(pattern_matrix(PatternClass::triangular, 3), PatternClass::near_triangular));
}

TEST_CASE("entry access is 1-based and bounds-checked") {
  Gf2Matrix m(2, 3);
  m.set(1, 3, true);
  CHECK(m.at(1, 3));
  CHECK_FALSE(m.at(2, 3));
  CHECK_THROWS_AS(m.at(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(m.at(1, 4), std::invalid_argument);
  CHECK_THROWS_AS(m.set(3, 1, true), std::invalid_argument);
}

TEST_SUITE_END();
