#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "sgh/bigrading.hpp"

namespace sgh {

/// V_1^{e_1} ... V_m^{e_m}. Variable indices are 0-based internally; O label
/// i corresponds to variable i - 1. Trailing zero exponents are never stored,
/// so equal monomials compare equal regardless of how they were built.
class Monomial {
 public:
  Monomial() = default;  // the constant 1
  static Monomial variable(int index);
  static Monomial from_exponents(std::vector<std::uint16_t> exps);

  std::uint32_t exponent(int index) const;
  std::uint32_t total_degree() const;
  bool is_one() const noexcept { return exps_.empty(); }
  int variable_span() const noexcept { return static_cast<int>(exps_.size()); }

  /// M(V_i) = -2, A(V_i) = -1.
  Bigrading bidegree() const;

  Monomial operator*(const Monomial& other) const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

  /// "1", "V1", "V2^2V5", ... using 1-based labels.
  std::string to_string() const;

 private:
  void trim();
  std::vector<std::uint16_t> exps_;

  friend class Poly;
  friend Monomial relabel(const Monomial&, const std::vector<int>&);
};

/// Polynomial over F2: a set of monomials, addition is symmetric difference.
class Poly {
 public:
  Poly() = default;
  Poly(const Monomial& m) : terms_{m} {}  // NOLINT(google-explicit-constructor)
  static Poly one() { return Poly(Monomial{}); }
  static Poly variable(int index) { return Poly(Monomial::variable(index)); }

  bool is_zero() const noexcept { return terms_.empty(); }
  const std::vector<Monomial>& terms() const noexcept { return terms_; }
  bool constant_term() const;

  void add(const Monomial& m);
  Poly& operator+=(const Poly& other);
  Poly operator+(const Poly& other) const;
  Poly operator*(const Poly& other) const;

  /// Drops every monomial that involves one of the given variables.
  Poly with_zero_variables(const std::vector<bool>& zeroed) const;

  friend bool operator==(const Poly&, const Poly&) = default;

  std::string to_string() const;

 private:
  std::vector<Monomial> terms_;  // sorted, no duplicates
};

/// Renames variable i to new_index[i].
Monomial relabel(const Monomial& m, const std::vector<int>& new_index);
Poly relabel(const Poly& p, const std::vector<int>& new_index);

}  // namespace sgh
