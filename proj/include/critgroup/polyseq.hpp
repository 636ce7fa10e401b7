#pragma once

#include "critgroup/bigint.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace critgroup::polyseq {

/// f_{-1}, f_0, ..., f_{n_max} of f_n = x f_{n-1} - y^2 f_{n-2}, with
/// f_{-1} = 0 and f_0 = 1. Element k of the result is f_{k-1}.
inline std::vector<BigInt> f_table(std::int64_t n_max, const BigInt& x, const BigInt& y) {
  if (n_max < -1) throw std::out_of_range("f index must be >= -1, got " + std::to_string(n_max));
  std::vector<BigInt> t;
  t.reserve(static_cast<std::size_t>(n_max + 2));
  t.emplace_back(0);
  if (n_max >= 0) t.emplace_back(1);
  const BigInt y2 = y * y;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const std::size_t k = static_cast<std::size_t>(n + 1);
    t.push_back(x * t[k - 1] - y2 * t[k - 2]);
  }
  return t;
}

/// Tridiagonal determinant sequence f_n(x, y), evaluated bottom-up.
inline BigInt f(std::int64_t n, const BigInt& x, const BigInt& y) {
  if (n < -1) throw std::out_of_range("f index must be >= -1, got " + std::to_string(n));
  if (n == -1) return 0;
  const BigInt y2 = y * y;
  BigInt prev = 0, cur = 1;
  for (std::int64_t k = 1; k <= n; ++k) {
    BigInt next = x * cur - y2 * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// sum_{i=0}^{floor(n/2)} (-1)^i C(n-i, i) x^{n-2i} y^{2i}
inline BigInt f_closed(std::int64_t n, const BigInt& x, const BigInt& y) {
  if (n < 0) throw std::out_of_range("f_closed index must be >= 0, got " + std::to_string(n));
  const auto un = static_cast<unsigned long>(n);
  BigInt sum = 0;
  for (unsigned long i = 0; 2 * i <= un; ++i) {
    BigInt term = binomial(un - i, i) * pow(x, un - 2 * i) * pow(y, 2 * i);
    if (i % 2) sum -= term;
    else sum += term;
  }
  return sum;
}

namespace detail {
inline void check_p_indices(std::int64_t m, std::int64_t n) {
  if (m < 0) throw std::out_of_range("p index m must be >= 0, got " + std::to_string(m));
  if (n < 1) throw std::out_of_range("p ring size n must be >= 1, got " + std::to_string(n));
}
}  // namespace detail

/// p^n_m(x, y) = (x + n y) p^n_{m-1}(x, y) + y x^{m-1}, p^n_0 = 0.
inline BigInt p(std::int64_t m, std::int64_t n, const BigInt& x, const BigInt& y) {
  detail::check_p_indices(m, n);
  const BigInt step = x + BigInt(static_cast<long>(n)) * y;
  BigInt value = 0;
  BigInt x_power = 1;  // x^{k-1}
  for (std::int64_t k = 1; k <= m; ++k) {
    value = step * value + y * x_power;
    x_power *= x;
  }
  return value;
}

/// sum_{i=1}^{m} n^{i-1} C(m, i) x^{m-i} y^i
inline BigInt p_closed(std::int64_t m, std::int64_t n, const BigInt& x, const BigInt& y) {
  detail::check_p_indices(m, n);
  const auto um = static_cast<unsigned long>(m);
  const BigInt nn = static_cast<long>(n);
  BigInt sum = 0;
  for (unsigned long i = 1; i <= um; ++i) sum += pow(nn, i - 1) * binomial(um, i) * pow(x, um - i) * pow(y, i);
  return sum;
}

}  // namespace critgroup::polyseq
