#include "sgh/f2_matrix.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace sgh {

bool BitVector::none() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t BitVector::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::size_t BitVector::lowest() const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] != 0) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
  return size_;
}

std::vector<std::uint32_t> BitVector::support() const {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w != 0) {
      out.push_back(static_cast<std::uint32_t>(i * 64 + std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.size_ != size_) throw std::invalid_argument("BitVector size mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

F2Matrix F2Matrix::identity(std::size_t n) {
  F2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.columns_[i] = {static_cast<std::uint32_t>(i)};
  return m;
}

bool F2Matrix::get(std::size_t r, std::size_t c) const {
  const auto& col = columns_.at(c);
  return std::binary_search(col.begin(), col.end(), static_cast<std::uint32_t>(r));
}

void F2Matrix::flip(std::size_t r, std::size_t c) {
  if (r >= rows_) throw std::out_of_range("F2Matrix row out of range");
  auto& col = columns_.at(c);
  auto key = static_cast<std::uint32_t>(r);
  auto it = std::lower_bound(col.begin(), col.end(), key);
  if (it != col.end() && *it == key) {
    col.erase(it);
  } else {
    col.insert(it, key);
  }
}

void F2Matrix::set_column(std::size_t c, std::vector<std::uint32_t> rows) {
  std::sort(rows.begin(), rows.end());
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < rows.size();) {
    std::size_t j = i;
    while (j < rows.size() && rows[j] == rows[i]) ++j;
    if ((j - i) % 2 == 1) {
      if (rows[i] >= rows_) throw std::out_of_range("F2Matrix row out of range");
      out.push_back(rows[i]);
    }
    i = j;
  }
  columns_.at(c) = std::move(out);
}

BitVector F2Matrix::column_bits(std::size_t c) const {
  BitVector v(rows_);
  for (auto r : columns_.at(c)) v.set(r);
  return v;
}

BitVector F2Matrix::apply(const BitVector& v) const {
  if (v.size() != cols()) throw std::invalid_argument("F2Matrix::apply size mismatch");
  BitVector out(rows_);
  for (auto c : v.support())
    for (auto r : columns_[c]) out.flip(r);
  return out;
}

std::size_t F2Matrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

F2Matrix F2Matrix::operator*(const F2Matrix& rhs) const {
  if (cols() != rhs.rows()) throw std::invalid_argument("F2Matrix product dimension mismatch");
  F2Matrix out(rows_, rhs.cols());
  std::vector<std::uint8_t> parity(rows_, 0);
  std::vector<std::uint32_t> touched;
  for (std::size_t j = 0; j < rhs.cols(); ++j) {
    touched.clear();
    for (auto k : rhs.columns_[j]) {
      for (auto r : columns_[k]) {
        if (parity[r] == 0) touched.push_back(r);
        parity[r] ^= 1;
      }
    }
    std::vector<std::uint32_t> col;
    for (auto r : touched) {
      if (parity[r] != 0) col.push_back(r);
      parity[r] = 0;
    }
    std::sort(col.begin(), col.end());
    out.columns_[j] = std::move(col);
  }
  return out;
}

F2Matrix F2Matrix::operator+(const F2Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols() != rhs.cols()) throw std::invalid_argument("F2Matrix sum dimension mismatch");
  F2Matrix out(rows_, cols());
  for (std::size_t j = 0; j < cols(); ++j) {
    std::set_symmetric_difference(columns_[j].begin(), columns_[j].end(), rhs.columns_[j].begin(),
                                  rhs.columns_[j].end(), std::back_inserter(out.columns_[j]));
  }
  return out;
}

F2Matrix F2Matrix::block(const std::vector<std::size_t>& row_ids, const std::vector<std::size_t>& col_ids) const {
  std::vector<std::int64_t> local(rows_, -1);
  for (std::size_t i = 0; i < row_ids.size(); ++i) local.at(row_ids[i]) = static_cast<std::int64_t>(i);
  F2Matrix out(row_ids.size(), col_ids.size());
  for (std::size_t j = 0; j < col_ids.size(); ++j) {
    std::vector<std::uint32_t> col;
    for (auto r : columns_.at(col_ids[j]))
      if (local[r] >= 0) col.push_back(static_cast<std::uint32_t>(local[r]));
    out.set_column(j, std::move(col));
  }
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> F2Matrix::first_difference(const F2Matrix& other) const {
  if (rows_ != other.rows_ || cols() != other.cols()) return std::pair<std::size_t, std::size_t>{0, 0};
  for (std::size_t j = 0; j < cols(); ++j) {
    if (columns_[j] == other.columns_[j]) continue;
    std::vector<std::uint32_t> diff;
    std::set_symmetric_difference(columns_[j].begin(), columns_[j].end(), other.columns_[j].begin(),
                                  other.columns_[j].end(), std::back_inserter(diff));
    return std::pair<std::size_t, std::size_t>{j, diff.front()};
  }
  return std::nullopt;
}

std::size_t f2_rank(const F2Matrix& m) {
  std::vector<BitVector> rows(m.rows(), BitVector(m.cols()));
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (auto r : m.column(c)) rows[r].set(c);

  // pivot_row[c] = index of the reduced row whose lowest bit is c
  std::vector<std::int64_t> pivot_row(m.cols(), -1);
  std::size_t rank = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto& row = rows[i];
    for (std::size_t lead = row.lowest(); lead < row.size(); lead = row.lowest()) {
      if (pivot_row[lead] < 0) {
        pivot_row[lead] = static_cast<std::int64_t>(i);
        ++rank;
        break;
      }
      row ^= rows[pivot_row[lead]];
    }
  }
  return rank;
}

}  // namespace sgh
