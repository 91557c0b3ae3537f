#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>

namespace sgh {

/// (Maslov, Alexander). Relative gradings only: every complex is pinned at
/// some base generator.
struct Bigrading {
  int maslov = 0;
  int alexander = 0;

  Bigrading operator+(Bigrading o) const { return {maslov + o.maslov, alexander + o.alexander}; }
  Bigrading operator-(Bigrading o) const { return {maslov - o.maslov, alexander - o.alexander}; }
  friend auto operator<=>(const Bigrading&, const Bigrading&) = default;
};

inline std::string to_string(Bigrading g) {
  return "(" + std::to_string(g.maslov) + "," + std::to_string(g.alexander) + ")";
}

/// Dimension per bigrading; zero entries are never stored.
using BigradedDims = std::map<Bigrading, std::size_t>;

std::size_t total_dimension(const BigradedDims& t);
BigradedDims shifted(const BigradedDims& t, Bigrading by);

/// Tensor with W^k, W spanned by generators in bigradings (0,0) and (-1,-1).
BigradedDims tensor_w(const BigradedDims& t, int power);

/// Exact division of the Poincare polynomial by (1 + u)^power, u the
/// (-1,-1) shift. nullopt if the division leaves a remainder or produces a
/// negative coefficient.
std::optional<BigradedDims> divide_by_w(const BigradedDims& t, int power);

/// True iff b is a translate of a. The translation is forced by the least keys.
bool equal_up_to_shift(const BigradedDims& a, const BigradedDims& b);

}  // namespace sgh
