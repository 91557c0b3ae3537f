#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace sgh {

inline constexpr std::size_t kDefaultStateCap = 40320;  // 8!

/// A lattice point on the torus: horizontal circle, vertical circle.
struct LatticePoint {
  int horizontal = 0;
  int vertical = 0;

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

/// All grid states of an n x n grid, as permutations (horizontal circle i ->
/// vertical circle s[i]) in lexicographic order. The position in that order is
/// the generator id.
class StateSpace {
 public:
  /// Throws CapError when n! exceeds `cap`.
  static StateSpace enumerate(int n, std::size_t cap = kDefaultStateCap);

  int grid_size() const noexcept { return n_; }
  std::size_t size() const noexcept { return count_; }
  std::span<const std::uint8_t> state(std::size_t id) const {
    return {flat_.data() + id * static_cast<std::size_t>(n_), static_cast<std::size_t>(n_)};
  }
  /// Lexicographic rank of a permutation of 0..n-1.
  std::size_t index_of(std::span<const std::uint8_t> perm) const;
  bool contains_point(std::size_t id, LatticePoint p) const {
    return state(id)[p.horizontal] == p.vertical;
  }

 private:
  int n_ = 0;
  std::size_t count_ = 0;
  std::vector<std::uint8_t> flat_;
  std::vector<std::size_t> factorial_;
};

std::size_t factorial(int n);

}  // namespace sgh
