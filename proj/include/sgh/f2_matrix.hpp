#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace sgh {

/// Packed vector over F2.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const noexcept { return size_; }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
  bool none() const;
  std::size_t count() const;
  /// Index of the lowest set bit, or size() if none.
  std::size_t lowest() const;
  std::vector<std::uint32_t> support() const;

  BitVector& operator^=(const BitVector& other);
  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Sparse matrix over F2, column-major; each column is a sorted list of rows.
class F2Matrix {
 public:
  F2Matrix() = default;
  F2Matrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

  static F2Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return columns_.size(); }

  bool get(std::size_t r, std::size_t c) const;
  void flip(std::size_t r, std::size_t c);
  const std::vector<std::uint32_t>& column(std::size_t c) const { return columns_[c]; }
  /// Replaces a column; `rows` need not be sorted, duplicates cancel.
  void set_column(std::size_t c, std::vector<std::uint32_t> rows);

  BitVector column_bits(std::size_t c) const;
  /// Applies the matrix to a vector of length cols().
  BitVector apply(const BitVector& v) const;

  std::size_t nonzeros() const;
  bool is_zero() const { return nonzeros() == 0; }

  F2Matrix operator*(const F2Matrix& rhs) const;
  F2Matrix operator+(const F2Matrix& rhs) const;
  friend bool operator==(const F2Matrix&, const F2Matrix&) = default;

  /// Sub-matrix on the given row and column index lists (in that order).
  F2Matrix block(const std::vector<std::size_t>& row_ids, const std::vector<std::size_t>& col_ids) const;

  /// First (col, row) where the two matrices differ, scanning column-major.
  std::optional<std::pair<std::size_t, std::size_t>> first_difference(const F2Matrix& other) const;

 private:
  std::size_t rows_ = 0;
  std::vector<std::vector<std::uint32_t>> columns_;
};

/// Rank over F2 by elimination on packed bit rows.
std::size_t f2_rank(const F2Matrix& m);

}  // namespace sgh
