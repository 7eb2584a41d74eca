#include "carousel/gf2.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace carousel {

namespace {

constexpr std::size_t kWordBits = 64;

void check_index(std::size_t i, std::size_t bound, const char* what) {
  if (i < 1 || i > bound) {
    throw std::invalid_argument(std::string(what) + " index out of range");
  }
}

}  // namespace

Gf2Matrix::Gf2Matrix(std::size_t n_rows, std::size_t n_cols)
    : n_rows_(n_rows),
      n_cols_(n_cols),
      words_per_row_((n_cols + kWordBits - 1) / kWordBits),
      bits_(n_rows * words_per_row_, 0) {}

bool Gf2Matrix::at(std::size_t i, std::size_t j) const {
  check_index(i, n_rows_, "row");
  check_index(j, n_cols_, "column");
  const std::size_t bit = j - 1;
  return (bits_[(i - 1) * words_per_row_ + bit / kWordBits] >> (bit % kWordBits)) & 1u;
}

void Gf2Matrix::set(std::size_t i, std::size_t j, bool value) {
  check_index(i, n_rows_, "row");
  check_index(j, n_cols_, "column");
  const std::size_t bit = j - 1;
  std::uint64_t& word = bits_[(i - 1) * words_per_row_ + bit / kWordBits];
  const std::uint64_t mask = std::uint64_t{1} << (bit % kWordBits);
  if (value) {
    word |= mask;
  } else {
    word &= ~mask;
  }
}

Gf2Matrix Gf2Matrix::transposed() const {
  Gf2Matrix out(n_cols_, n_rows_);
  for (std::size_t i = 1; i <= n_rows_; ++i) {
    for (std::size_t j = 1; j <= n_cols_; ++j) {
      if (at(i, j)) out.set(j, i, true);
    }
  }
  return out;
}

Gf2Matrix Gf2Matrix::submatrix(const std::vector<std::size_t>& rows,
                               const std::vector<std::size_t>& cols) const {
  Gf2Matrix out(rows.size(), cols.size());
  for (std::size_t a = 0; a < rows.size(); ++a) {
    for (std::size_t b = 0; b < cols.size(); ++b) {
      if (at(rows[a], cols[b])) out.set(a + 1, b + 1, true);
    }
  }
  return out;
}

const std::uint64_t* Gf2Matrix::row_data(std::size_t i) const {
  check_index(i, n_rows_, "row");
  return bits_.data() + (i - 1) * words_per_row_;
}

std::uint64_t* Gf2Matrix::row_data(std::size_t i) {
  check_index(i, n_rows_, "row");
  return bits_.data() + (i - 1) * words_per_row_;
}

std::string Gf2Matrix::row_string(std::size_t i) const {
  std::string s;
  s.reserve(n_cols_);
  for (std::size_t j = 1; j <= n_cols_; ++j) s.push_back(at(i, j) ? '1' : '0');
  return s;
}

std::string Gf2Matrix::to_string() const {
  std::string s;
  for (std::size_t i = 1; i <= n_rows_; ++i) {
    s += row_string(i);
    s += '\n';
  }
  return s;
}

std::size_t gf2_rank(Gf2Matrix m) {
  const std::size_t rows = m.row_count();
  const std::size_t cols = m.col_count();
  const std::size_t words = m.words_per_row();
  if (rows == 0 || cols == 0) return 0;

  std::size_t rank = 0;
  std::size_t pivot_row = 0;  // 0-based row index of the next pivot slot
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    const std::size_t w = c / kWordBits;
    const std::uint64_t mask = std::uint64_t{1} << (c % kWordBits);

    std::size_t found = rows;
    for (std::size_t r = pivot_row; r < rows; ++r) {
      if (m.row_data(r + 1)[w] & mask) {
        found = r;
        break;
      }
    }
    if (found == rows) continue;

    if (found != pivot_row) {
      std::uint64_t* a = m.row_data(found + 1);
      std::uint64_t* b = m.row_data(pivot_row + 1);
      for (std::size_t t = 0; t < words; ++t) std::swap(a[t], b[t]);
    }
    const std::uint64_t* pivot = m.row_data(pivot_row + 1);
    for (std::size_t r = pivot_row + 1; r < rows; ++r) {
      std::uint64_t* row = m.row_data(r + 1);
      if (row[w] & mask) {
        for (std::size_t t = w; t < words; ++t) row[t] ^= pivot[t];
      }
    }
    ++pivot_row;
    ++rank;
  }
  return rank;
}

const char* to_string(PatternClass cls) {
  switch (cls) {
    case PatternClass::diagonal: return "diagonal";
    case PatternClass::antidiagonal: return "antidiagonal";
    case PatternClass::triangular: return "triangular";
    case PatternClass::near_triangular: return "near_triangular";
  }
  return "?";
}

std::optional<PatternClass> pattern_class_from_string(std::string_view name) {
  if (name == "diagonal") return PatternClass::diagonal;
  if (name == "antidiagonal") return PatternClass::antidiagonal;
  if (name == "triangular") return PatternClass::triangular;
  if (name == "near_triangular") return PatternClass::near_triangular;
  return std::nullopt;
}

Gf2Matrix pattern_matrix(PatternClass cls, std::size_t r,
                         const std::vector<bool>* diagonal_bits) {
  if (r < 1) throw std::invalid_argument("pattern size must be at least 1");
  if (cls == PatternClass::near_triangular) {
    if (diagonal_bits == nullptr || diagonal_bits->size() != r) {
      throw std::invalid_argument("near_triangular requires diagonal bits of length r");
    }
  } else if (diagonal_bits != nullptr) {
    throw std::invalid_argument("diagonal bits only apply to near_triangular");
  }

  Gf2Matrix m(r, r);
  for (std::size_t i = 1; i <= r; ++i) {
    for (std::size_t j = 1; j <= r; ++j) {
      bool v = false;
      switch (cls) {
        case PatternClass::diagonal: v = (i == j); break;
        case PatternClass::antidiagonal: v = (i != j); break;
        case PatternClass::triangular: v = (i >= j); break;
        case PatternClass::near_triangular:
          v = (i > j) || (i == j && (*diagonal_bits)[i - 1]);
          break;
      }
      if (v) m.set(i, j, true);
    }
  }
  return m;
}

std::size_t pattern_rank_floor(PatternClass cls, std::size_t size) {
  switch (cls) {
    case PatternClass::diagonal:
    case PatternClass::triangular:
      return size;
    case PatternClass::antidiagonal:
      return (size % 2 == 1) ? size - 1 : size;
    case PatternClass::near_triangular:
      return size / 2;
  }
  return 0;
}

bool matches_pattern(const Gf2Matrix& m, PatternClass cls) {
  if (m.row_count() != m.col_count()) return false;
  const std::size_t r = m.row_count();
  for (std::size_t i = 1; i <= r; ++i) {
    for (std::size_t j = 1; j <= r; ++j) {
      const bool v = m.at(i, j);
      switch (cls) {
        case PatternClass::diagonal:
          if (v != (i == j)) return false;
          break;
        case PatternClass::antidiagonal:
          if (v != (i != j)) return false;
          break;
        case PatternClass::triangular:
          if (v != (i >= j)) return false;
          break;
        case PatternClass::near_triangular:
          if (i > j && !v) return false;
          if (i < j && v) return false;
          break;
      }
    }
  }
  return true;
}

}  // namespace carousel
