#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sgh {

/// A unit square of the grid. Rows run bottom-to-top, columns left-to-right.
/// Square (r, c) is bounded by horizontal circles r, r+1 and vertical circles
/// c, c+1 (mod n).
struct Square {
  int row = 0;
  int col = 0;

  friend auto operator<=>(const Square&, const Square&) = default;
};

std::string to_string(Square s);

enum class Axis { rows, columns };

/// A planar grid diagram of a spatial graph: exactly one X per row and column,
/// at least one O per row and column, never an X and an O on the same square.
/// O labels 1..m follow lexicographic (row, col) order.
class Diagram {
 public:
  /// Validates and throws ValidationError naming the violated invariant.
  static Diagram from_markings(int size, std::vector<Square> xs, std::vector<Square> os);

  int size() const noexcept { return size_; }
  int o_count() const noexcept { return static_cast<int>(os_.size()); }

  /// Column of the X in each row.
  const std::vector<int>& x_columns() const noexcept { return x_col_; }
  /// O squares in label order; label of os()[i] is i + 1.
  const std::vector<Square>& os() const noexcept { return os_; }
  /// X squares ordered by row.
  std::vector<Square> xs() const;

  Square x_in_row(int row) const { return {row, x_col_.at(row)}; }
  int x_row_in_column(int col) const { return x_row_.at(col); }
  bool has_x(Square s) const;
  bool has_o(Square s) const { return o_label(s).has_value(); }
  std::optional<int> o_label(Square s) const;
  Square o_square(int label) const { return os_.at(label - 1); }

  /// O labels in a row / column, ascending.
  std::vector<int> o_labels_in_row(int row) const;
  std::vector<int> o_labels_in_column(int col) const;

  friend bool operator==(const Diagram&, const Diagram&) = default;

 private:
  Diagram() = default;

  int size_ = 0;
  std::vector<int> x_col_;
  std::vector<int> x_row_;
  std::vector<Square> os_;
};

/// Parses the line-based diagram format:
///
///     # comment
///     grid <n>
///     x <row> <col>
///     o <row> <col>
///
/// Throws ParseError on syntax errors and ValidationError on invariant
/// violations.
Diagram parse_diagram(std::string_view text);
Diagram load_diagram(const std::string& path);

/// `grid`, then `x` lines by row, then `o` lines in label order.
std::string serialize(const Diagram& d);

/// Translates every marking by k (mod n) along the axis.
Diagram cyclic_shift(const Diagram& d, Axis axis, int k);

/// Moves every marking from (r, c) to (c, r). Reverses all edge orientations.
Diagram reflect_diagonal(const Diagram& d);

}  // namespace sgh
