#include "sgh/bigrading.hpp"

#include <cstdint>
#include <vector>

namespace sgh {

std::size_t total_dimension(const BigradedDims& t) {
  std::size_t sum = 0;
  for (const auto& [g, dim] : t) sum += dim;
  return sum;
}

BigradedDims shifted(const BigradedDims& t, Bigrading by) {
  BigradedDims out;
  for (const auto& [g, dim] : t) out[g + by] = dim;
  return out;
}

BigradedDims tensor_w(const BigradedDims& t, int power) {
  BigradedDims cur = t;
  for (int i = 0; i < power; ++i) {
    BigradedDims next = cur;
    for (const auto& [g, dim] : cur) next[g - Bigrading{1, 1}] += dim;
    cur = std::move(next);
  }
  return cur;
}

namespace {

std::optional<BigradedDims> divide_once(const BigradedDims& t) {
  // Work one diagonal (constant M - A) at a time: p_M = q_M + q_{M+1}.
  std::map<int, std::map<int, std::int64_t>> diagonals;
  for (const auto& [g, dim] : t) diagonals[g.maslov - g.alexander][g.maslov] = static_cast<std::int64_t>(dim);

  BigradedDims out;
  for (const auto& [diag, entries] : diagonals) {
    const int top = entries.rbegin()->first;
    const int bottom = entries.begin()->first;
    auto p = [&](int m) {
      auto it = entries.find(m);
      return it == entries.end() ? std::int64_t{0} : it->second;
    };
    std::int64_t above = 0;
    for (int m = top; m > bottom; --m) {
      std::int64_t q = p(m) - above;
      if (q < 0) return std::nullopt;
      if (q > 0) out[{m, m - diag}] = static_cast<std::size_t>(q);
      above = q;
    }
    if (p(bottom) != above) return std::nullopt;
  }
  return out;
}

}  // namespace

std::optional<BigradedDims> divide_by_w(const BigradedDims& t, int power) {
  BigradedDims cur = t;
  for (int i = 0; i < power; ++i) {
    auto next = divide_once(cur);
    if (!next) return std::nullopt;
    cur = std::move(*next);
  }
  return cur;
}

bool equal_up_to_shift(const BigradedDims& a, const BigradedDims& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  Bigrading by = a.begin()->first - b.begin()->first;
  return shifted(b, by) == a;
}

}  // namespace sgh
