#pragma once

// Conversions from library matrices into the oracle's representation, used
// only to compare the two.

#include <string>

#include "brute_force.hpp"
#include "sgh/bigrading.hpp"
#include "sgh/f2_matrix.hpp"
#include "sgh/poly_matrix.hpp"

namespace oracle {

inline Matrix from_library(const sgh::PolyMatrix& mtx, int m) {
  Matrix out;
  for (std::size_t c = 0; c < mtx.cols(); ++c)
    for (const auto& [r, p] : mtx.column(c)) {
      if (p.terms().empty()) continue;
      Polynomial poly;
      for (const auto& mono : p.terms()) {
        Exponents e(m, 0);
        for (int k = 0; k < m; ++k) e[k] = static_cast<int>(mono.exponent(k));
        poly.insert(e);
      }
      out[{static_cast<int>(r), static_cast<int>(c)}] = poly;
    }
  return out;
}

inline Dense from_library(const sgh::F2Matrix& mtx) {
  Dense out(mtx.rows(), std::vector<unsigned char>(mtx.cols(), 0));
  for (std::size_t r = 0; r < mtx.rows(); ++r)
    for (std::size_t c = 0; c < mtx.cols(); ++c) out[r][c] = mtx.get(r, c) ? 1 : 0;
  return out;
}

inline std::map<std::pair<int, int>, int> from_library(const sgh::BigradedDims& t) {
  std::map<std::pair<int, int>, int> out;
  for (const auto& [g, dim] : t) out[{g.maslov, g.alexander}] = static_cast<int>(dim);
  return out;
}

/// First differing entry, or an empty string when equal.
inline std::string first_difference(const Matrix& a, const Matrix& b) {
  for (const auto& [rc, p] : a) {
    auto it = b.find(rc);
    if (it == b.end() || it->second != p)
      return "(" + std::to_string(rc.first) + "," + std::to_string(rc.second) + "): " + to_string(p) + " vs " +
             (it == b.end() ? std::string("0") : to_string(it->second));
  }
  for (const auto& [rc, p] : b)
    if (!a.count(rc))
      return "(" + std::to_string(rc.first) + "," + std::to_string(rc.second) + "): 0 vs " + to_string(p);
  return {};
}

}  // namespace oracle
