#include "sgh/state_space.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "sgh/errors.hpp"

namespace sgh {

std::size_t factorial(int n) {
  std::size_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::size_t>(i);
  return f;
}

StateSpace StateSpace::enumerate(int n, std::size_t cap) {
  if (n < 1 || n > 20) throw CapError("grid size " + std::to_string(n) + " is not supported");
  const std::size_t count = factorial(n);
  if (count > cap)
    throw CapError("state space " + std::to_string(count) + " exceeds cap " + std::to_string(cap));

  StateSpace s;
  s.n_ = n;
  s.count_ = count;
  s.factorial_.resize(n + 1);
  for (int i = 0; i <= n; ++i) s.factorial_[i] = factorial(i);
  s.flat_.reserve(count * n);
  std::vector<std::uint8_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::uint8_t{0});
  do {
    s.flat_.insert(s.flat_.end(), perm.begin(), perm.end());
  } while (std::next_permutation(perm.begin(), perm.end()));
  return s;
}

std::size_t StateSpace::index_of(std::span<const std::uint8_t> perm) const {
  // Lehmer code.
  std::size_t rank = 0;
  for (int i = 0; i < n_; ++i) {
    std::size_t smaller = 0;
    for (int j = i + 1; j < n_; ++j)
      if (perm[j] < perm[i]) ++smaller;
    rank += smaller * factorial_[n_ - 1 - i];
  }
  return rank;
}

}  // namespace sgh
