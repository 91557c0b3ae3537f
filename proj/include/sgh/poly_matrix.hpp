#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "sgh/bigrading.hpp"
#include "sgh/f2_matrix.hpp"
#include "sgh/poly.hpp"

namespace sgh {

/// Sparse matrix with entries in F2[V_1, ..., V_m], column-major. Column c is
/// the image of generator c.
class PolyMatrix {
 public:
  using Column = std::map<std::uint32_t, Poly>;

  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

  /// p * Id.
  static PolyMatrix scalar(std::size_t n, const Poly& p);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return columns_.size(); }

  const Poly& at(std::size_t r, std::size_t c) const;
  void add(std::size_t r, std::size_t c, const Poly& p);
  const Column& column(std::size_t c) const { return columns_.at(c); }
  void set_column(std::size_t c, Column col);

  std::size_t nonzeros() const;
  bool is_zero() const { return nonzeros() == 0; }

  PolyMatrix operator*(const PolyMatrix& rhs) const;
  PolyMatrix operator+(const PolyMatrix& rhs) const;
  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

  PolyMatrix block(const std::vector<std::size_t>& row_ids, const std::vector<std::size_t>& col_ids) const;

  /// Constant terms only (every V_i = 0).
  F2Matrix specialize_at_zero() const;
  PolyMatrix with_zero_variables(const std::vector<bool>& zeroed) const;
  /// Renames variable i to new_index[i] in every entry.
  PolyMatrix relabeled(const std::vector<int>& new_index) const;

  /// First (col, row) where the two matrices differ.
  std::optional<std::pair<std::size_t, std::size_t>> first_difference(const PolyMatrix& other) const;

 private:
  std::size_t rows_ = 0;
  std::vector<Column> columns_;
};

/// Degree of a map between graded generator sets: every term mu * y in the
/// image of x must satisfy gr(y) + bidegree(mu) - gr(x) = degree.
struct MapDegree {
  std::optional<Bigrading> degree;  // nullopt for the zero map
  bool homogeneous = true;
  std::string witness;               // first offending entry when not homogeneous
};

MapDegree map_degree(const PolyMatrix& m, const std::vector<Bigrading>& source,
                     const std::vector<Bigrading>& target);

}  // namespace sgh
