#include "sgh/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace sgh {

Monomial Monomial::variable(int index) {
  if (index < 0) throw std::out_of_range("negative variable index");
  Monomial m;
  m.exps_.assign(index + 1, 0);
  m.exps_[index] = 1;
  return m;
}

Monomial Monomial::from_exponents(std::vector<std::uint16_t> exps) {
  Monomial m;
  m.exps_ = std::move(exps);
  m.trim();
  return m;
}

std::uint32_t Monomial::exponent(int index) const {
  return index >= 0 && index < static_cast<int>(exps_.size()) ? exps_[index] : 0;
}

std::uint32_t Monomial::total_degree() const {
  std::uint32_t sum = 0;
  for (auto e : exps_) sum += e;
  return sum;
}

Bigrading Monomial::bidegree() const {
  const int d = static_cast<int>(total_degree());
  return {-2 * d, -d};
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.exps_.assign(std::max(exps_.size(), other.exps_.size()), 0);
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += exps_[i];
  for (std::size_t i = 0; i < other.exps_.size(); ++i) out.exps_[i] += other.exps_[i];
  return out;
}

void Monomial::trim() {
  while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
}

std::string Monomial::to_string() const {
  if (is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    out += "V" + std::to_string(i + 1);
    if (exps_[i] > 1) out += "^" + std::to_string(exps_[i]);
  }
  return out;
}

Monomial relabel(const Monomial& m, const std::vector<int>& new_index) {
  Monomial out;
  for (std::size_t i = 0; i < m.exps_.size(); ++i) {
    if (m.exps_[i] == 0) continue;
    const int j = new_index.at(i);
    if (static_cast<int>(out.exps_.size()) <= j) out.exps_.resize(j + 1, 0);
    out.exps_[j] += m.exps_[i];
  }
  out.trim();
  return out;
}

bool Poly::constant_term() const {
  return !terms_.empty() && terms_.front().is_one();
}

void Poly::add(const Monomial& m) {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m);
  if (it != terms_.end() && *it == m) {
    terms_.erase(it);
  } else {
    terms_.insert(it, m);
  }
}

Poly& Poly::operator+=(const Poly& other) {
  std::vector<Monomial> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(), other.terms_.end(),
                                std::back_inserter(merged));
  terms_ = std::move(merged);
  return *this;
}

Poly Poly::operator+(const Poly& other) const {
  Poly out = *this;
  out += other;
  return out;
}

Poly Poly::operator*(const Poly& other) const {
  std::vector<Monomial> products;
  products.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : other.terms_) products.push_back(a * b);
  std::sort(products.begin(), products.end());
  Poly out;
  for (std::size_t i = 0; i < products.size();) {
    std::size_t j = i;
    while (j < products.size() && products[j] == products[i]) ++j;
    if ((j - i) % 2 == 1) out.terms_.push_back(products[i]);
    i = j;
  }
  return out;
}

Poly Poly::with_zero_variables(const std::vector<bool>& zeroed) const {
  Poly out;
  for (const auto& m : terms_) {
    bool killed = false;
    for (int i = 0; i < m.variable_span() && !killed; ++i)
      killed = m.exponent(i) > 0 && i < static_cast<int>(zeroed.size()) && zeroed[i];
    if (!killed) out.terms_.push_back(m);
  }
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& m : terms_) {
    if (!out.empty()) out += " + ";
    out += m.to_string();
  }
  return out;
}

Poly relabel(const Poly& p, const std::vector<int>& new_index) {
  Poly out;
  for (const auto& m : p.terms()) out.add(relabel(m, new_index));
  return out;
}

}  // namespace sgh
