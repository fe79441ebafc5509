#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>

#include <boost/rational.hpp>

namespace tlsra {

using Ratio = boost::rational<std::int64_t>;

// Largest k for which the closed forms below fit in 64-bit rationals.
inline constexpr std::size_t kMaxBoundK = 20;

// Approximation guarantee of the greedy for parameter k >= 2:
// 1/(k-1) + sum_{i=1}^{k-1} 1/i^2.
inline Ratio greedy_upper_bound(std::size_t k) {
  if (k < 2 || k > kMaxBoundK) throw std::out_of_range("greedy_upper_bound: k outside [2, 20]");
  const auto kk = static_cast<std::int64_t>(k);
  Ratio sum(1, kk - 1);
  for (std::int64_t i = 1; i < kk; ++i) sum += Ratio(1, i * i);
  return sum;
}

// |U_k(I_t)| / |U_OPT(I_t)| on the worst-case family, k >= 3, t >= 1.
inline Ratio worst_case_ratio(std::size_t k, std::size_t t) {
  const auto kk = static_cast<std::int64_t>(k);
  const auto tt = static_cast<std::int64_t>(t);
  return Ratio(kk * tt + 2 * (kk - 1) * tt, 1 + 2 * (kk - 1) * tt);
}

// Limit of worst_case_ratio as t grows: (3k-2)/(2k-2).
inline Ratio worst_case_limit(std::size_t k) {
  const auto kk = static_cast<std::int64_t>(k);
  return Ratio(3 * kk - 2, 2 * kk - 2);
}

inline double to_double(const Ratio& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace tlsra
