#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace carousel {

/// Dense 0/1 matrix with rows packed into 64-bit words.  All public
/// indices are 1-based; rank and entry access are exact over GF(2).
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t n_rows, std::size_t n_cols);

  std::size_t row_count() const { return n_rows_; }
  std::size_t col_count() const { return n_cols_; }

  bool at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, bool value);

  Gf2Matrix transposed() const;

  /// Submatrix picking the given 1-based rows/columns in the given order.
  Gf2Matrix submatrix(const std::vector<std::size_t>& rows,
                      const std::vector<std::size_t>& cols) const;

  std::size_t words_per_row() const { return words_per_row_; }
  const std::uint64_t* row_data(std::size_t i) const;
  std::uint64_t* row_data(std::size_t i);

  std::string row_string(std::size_t i) const;
  std::string to_string() const;

  bool operator==(const Gf2Matrix&) const = default;

 private:
  std::size_t n_rows_ = 0;
  std::size_t n_cols_ = 0;
  std::size_t words_per_row_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Rank over GF(2).  Row reduction with XOR row updates; pivots are chosen
/// at the lowest-index nonzero column, then the lowest-index row.
std::size_t gf2_rank(Gf2Matrix m);

enum class PatternClass { diagonal, antidiagonal, triangular, near_triangular };

const char* to_string(PatternClass cls);
std::optional<PatternClass> pattern_class_from_string(std::string_view name);

/// The r x r matrix of the given class.  diagonal_bits must be supplied
/// exactly when cls == near_triangular, and must have length r.
Gf2Matrix pattern_matrix(PatternClass cls, std::size_t r,
                         const std::vector<bool>* diagonal_bits = nullptr);

/// Least GF(2) rank any size x size matrix of the class can have:
/// diagonal/triangular -> size, antidiagonal -> size-1 when size is odd,
/// near-triangular -> floor(size/2).
std::size_t pattern_rank_floor(PatternClass cls, std::size_t size);

/// True when every constrained entry of the square matrix m matches cls
/// (near-triangular leaves the main diagonal unconstrained).
bool matches_pattern(const Gf2Matrix& m, PatternClass cls);

}  // namespace carousel
