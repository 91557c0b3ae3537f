#include "sgh/poly_matrix.hpp"

#include <stdexcept>

namespace sgh {

namespace {
const Poly kZero;
}

PolyMatrix PolyMatrix::scalar(std::size_t n, const Poly& p) {
  PolyMatrix m(n, n);
  if (p.is_zero()) return m;
  for (std::size_t i = 0; i < n; ++i) m.columns_[i].emplace(static_cast<std::uint32_t>(i), p);
  return m;
}

const Poly& PolyMatrix::at(std::size_t r, std::size_t c) const {
  const auto& col = columns_.at(c);
  auto it = col.find(static_cast<std::uint32_t>(r));
  return it == col.end() ? kZero : it->second;
}

void PolyMatrix::add(std::size_t r, std::size_t c, const Poly& p) {
  if (r >= rows_) throw std::out_of_range("PolyMatrix row out of range");
  if (p.is_zero()) return;
  auto& col = columns_.at(c);
  auto [it, inserted] = col.try_emplace(static_cast<std::uint32_t>(r), p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) col.erase(it);
  }
}

void PolyMatrix::set_column(std::size_t c, Column col) {
  for (auto it = col.begin(); it != col.end();) {
    if (it->first >= rows_) throw std::out_of_range("PolyMatrix row out of range");
    it = it->second.is_zero() ? col.erase(it) : std::next(it);
  }
  columns_.at(c) = std::move(col);
}

std::size_t PolyMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& rhs) const {
  if (cols() != rhs.rows()) throw std::invalid_argument("PolyMatrix product dimension mismatch");
  PolyMatrix out(rows_, rhs.cols());
  for (std::size_t j = 0; j < rhs.cols(); ++j) {
    for (const auto& [k, right] : rhs.columns_[j]) {
      for (const auto& [r, left] : columns_[k]) out.add(r, j, left * right);
    }
  }
  return out;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols() != rhs.cols()) throw std::invalid_argument("PolyMatrix sum dimension mismatch");
  PolyMatrix out = *this;
  for (std::size_t j = 0; j < rhs.cols(); ++j)
    for (const auto& [r, p] : rhs.columns_[j]) out.add(r, j, p);
  return out;
}

PolyMatrix PolyMatrix::block(const std::vector<std::size_t>& row_ids,
                             const std::vector<std::size_t>& col_ids) const {
  std::vector<std::int64_t> local(rows_, -1);
  for (std::size_t i = 0; i < row_ids.size(); ++i) local.at(row_ids[i]) = static_cast<std::int64_t>(i);
  PolyMatrix out(row_ids.size(), col_ids.size());
  for (std::size_t j = 0; j < col_ids.size(); ++j)
    for (const auto& [r, p] : columns_.at(col_ids[j]))
      if (local[r] >= 0) out.columns_[j].emplace(static_cast<std::uint32_t>(local[r]), p);
  return out;
}

F2Matrix PolyMatrix::specialize_at_zero() const {
  F2Matrix out(rows_, cols());
  for (std::size_t j = 0; j < cols(); ++j) {
    std::vector<std::uint32_t> col;
    for (const auto& [r, p] : columns_[j])
      if (p.constant_term()) col.push_back(r);
    out.set_column(j, std::move(col));
  }
  return out;
}

PolyMatrix PolyMatrix::with_zero_variables(const std::vector<bool>& zeroed) const {
  PolyMatrix out(rows_, cols());
  for (std::size_t j = 0; j < cols(); ++j)
    for (const auto& [r, p] : columns_[j]) out.add(r, j, p.with_zero_variables(zeroed));
  return out;
}

PolyMatrix PolyMatrix::relabeled(const std::vector<int>& new_index) const {
  PolyMatrix out(rows_, cols());
  for (std::size_t j = 0; j < cols(); ++j)
    for (const auto& [r, p] : columns_[j]) out.add(r, j, relabel(p, new_index));
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> PolyMatrix::first_difference(const PolyMatrix& other) const {
  if (rows_ != other.rows_ || cols() != other.cols()) return std::pair<std::size_t, std::size_t>{0, 0};
  for (std::size_t j = 0; j < cols(); ++j) {
    if (columns_[j] == other.columns_[j]) continue;
    const auto& a = columns_[j];
    const auto& b = other.columns_[j];
    for (const auto& [r, p] : a)
      if (other.at(r, j) != p) return std::pair<std::size_t, std::size_t>{j, r};
    for (const auto& [r, p] : b)
      if (at(r, j) != p) return std::pair<std::size_t, std::size_t>{j, r};
  }
  return std::nullopt;
}

MapDegree map_degree(const PolyMatrix& m, const std::vector<Bigrading>& source,
                     const std::vector<Bigrading>& target) {
  MapDegree out;
  for (std::size_t x = 0; x < m.cols(); ++x) {
    for (const auto& [y, p] : m.column(x)) {
      for (const auto& mono : p.terms()) {
        Bigrading d = target.at(y) + mono.bidegree() - source.at(x);
        if (!out.degree) {
          out.degree = d;
        } else if (*out.degree != d) {
          out.homogeneous = false;
          out.witness = "generator " + std::to_string(x) + " -> " + std::to_string(y) + " term " +
                        mono.to_string() + " has degree " + to_string(d) + ", expected " +
                        to_string(*out.degree);
          return out;
        }
      }
    }
  }
  return out;
}

}  // namespace sgh
