#pragma once
// Plain box enumeration of the lattice sum with an arbitrary membership test.
#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

inline long double box_sum(std::size_t n, std::int64_t m, std::int64_t cutoff, const std::vector<double>& x,
                           const std::function<bool(const std::vector<std::int64_t>&)>& member) {
  std::vector<std::int64_t> a(n, 1);
  long double total = 0, factorial = 1, px = 1;
  for (std::size_t i = 1; i <= n; ++i) factorial *= i;
  for (double v : x) px *= v;
  while (true) {
    if (member(a)) {
      long double lin = m;
      for (std::size_t i = 0; i < n; ++i) lin += a[i] * x[i];
      total += m * factorial * px / std::pow(lin, static_cast<long double>(n + 1));
    }
    std::size_t d = 0;
    while (d < n && ++a[d] > cutoff) a[d++] = 1;
    if (d == n) break;
  }
  return total;
}

}  // namespace oracle
