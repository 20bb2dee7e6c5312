#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "chebyperm/integers.hpp"
#include "chebyperm/matrices.hpp"

namespace chebyperm {

// Size limits for the permanent engines.  Requests beyond a limit raise
// CapacityError so a mistyped argument fails fast instead of running for
// hours.  The enumeration budget counts column selections before any
// zero-entry pruning.
struct EngineLimits {
  long long enumeration_budget = 100'000'000;
  int ryser_max_n = 30;
  int band_window_max = 25;  // max DP window width 2d + 1
};

// Number of injections from m rows into n columns: n (n-1) ... (n-m+1).
inline BigInt injection_count(long long m, long long n) {
  BigInt c = 1;
  for (long long i = 0; i < m; ++i) c *= (n - i);
  return c;
}

namespace detail {

template <typename T>
struct PermanentResult {
  using type = BigInt;
  static type one() { return 1; }
};

template <>
struct PermanentResult<IntPolynomial> {
  using type = IntPolynomial;
  static type one() { return IntPolynomial::constant(1); }
};

template <typename T>
inline bool entry_is_zero(const T& v) {
  return v == 0;
}
inline bool entry_is_zero(const IntPolynomial& v) { return v.is_zero(); }

template <typename T>
inline bool entry_is_one(const T& v) {
  return v == 1;
}
inline bool entry_is_one(const IntPolynomial& v) {
  return v.degree() == 0 && v.coefficient(0) == 1;
}

}  // namespace detail

// Permanent of an m x n matrix, m <= n: the sum over all injective column
// selections of the product of selected entries.  Direct enumeration with
// zero-entry pruning; this is the ground-truth oracle for the other engines
// and the only one accepting polynomial entries.
template <typename T>
typename detail::PermanentResult<T>::type permanent_enumerate(const Matrix<T>& m,
                                                              const EngineLimits& limits = {}) {
  using R = typename detail::PermanentResult<T>::type;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  if (rows > cols) throw std::domain_error("permanent: more rows than columns");
  if (rows == 0) return detail::PermanentResult<T>::one();
  if (injection_count(static_cast<long long>(rows), static_cast<long long>(cols)) >
      limits.enumeration_budget)
    throw CapacityError("permanent enumeration: selection count exceeds budget");

  R total{};
  std::vector<R> prod(rows + 1);
  prod[0] = detail::PermanentResult<T>::one();
  std::vector<char> used(cols, 0);
  const auto dfs = [&](auto&& self, std::size_t row) -> void {
    if (row == rows) {
      total += prod[rows];
      return;
    }
    for (std::size_t j = 0; j < cols; ++j) {
      if (used[j]) continue;
      const T& e = m(row, j);
      if (detail::entry_is_zero(e)) continue;
      used[j] = 1;
      prod[row + 1] = prod[row];
      if (!detail::entry_is_one(e)) prod[row + 1] *= e;
      self(self, row + 1);
      used[j] = 0;
    }
  };
  dfs(dfs, 0);
  return total;
}

// Inclusion-exclusion permanent of a square matrix, walking column subsets
// in Gray-code order so each step updates the row sums by a single column.
// The subset range splits into contiguous chunks when workers > 1; partial
// sums are exact integers, so the reduction order cannot change the result.
inline BigInt permanent_ryser(const IntMatrix& a, int workers = 1,
                              const EngineLimits& limits = {}) {
  if (a.rows() != a.cols()) throw std::domain_error("ryser: matrix must be square");
  const int n = static_cast<int>(a.rows());
  if (n > limits.ryser_max_n) throw CapacityError("ryser: matrix size exceeds limit");
  if (n == 0) return 1;
  const std::uint64_t count = (std::uint64_t(1) << n) - 1;  // subsets 1 .. 2^n - 1

  const auto range_sum = [&](std::uint64_t lo, std::uint64_t hi) {
    std::vector<long long> rowsum(n, 0);
    std::uint64_t g = lo ^ (lo >> 1);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (g >> j & 1) rowsum[i] += a(i, j);
    BigInt local = 0;
    for (std::uint64_t k = lo;; ++k) {
      if (k != lo) {
        const int j = std::countr_zero(k);
        g ^= std::uint64_t(1) << j;
        const long long sgn = (g >> j & 1) ? 1 : -1;
        for (int i = 0; i < n; ++i) rowsum[i] += sgn * a(i, j);
      }
      BigInt prod = 1;
      bool zero = false;
      for (int i = 0; i < n && !zero; ++i) {
        if (rowsum[i] == 0)
          zero = true;
        else
          prod *= rowsum[i];
      }
      if (!zero) {
        if (std::popcount(g) & 1)
          local -= prod;
        else
          local += prod;
      }
      if (k == hi) break;
    }
    return local;
  };

  BigInt total = 0;
  const std::uint64_t nw = std::min<std::uint64_t>(std::max(workers, 1), count);
  if (nw <= 1) {
    total = range_sum(1, count);
  } else {
    std::vector<BigInt> part(nw);
    std::vector<std::thread> pool;
    const std::uint64_t step = count / nw;
    for (std::uint64_t w = 0; w < nw; ++w) {
      const std::uint64_t lo = 1 + w * step;
      const std::uint64_t hi = (w + 1 == nw) ? count : lo + step - 1;
      pool.emplace_back([&range_sum, &part, w, lo, hi] { part[w] = range_sum(lo, hi); });
    }
    for (auto& t : pool) t.join();
    for (const auto& p : part) total += p;
  }
  return n % 2 == 0 ? total : -total;
}

// Permanent of the band matrix by a column sweep.  The DP state is the
// occupancy bitmask of the 2d + 1 rows reachable from the current column;
// rows outside 1..n are premarked occupied, so boundary columns need no
// special casing.  When the window moves, the row leaving it must already
// be covered or the state dies.  Time is proportional to n * 2^(2d).
inline BigInt permanent_band_dp(long long d, long long n, const EngineLimits& limits = {}) {
  if (d < 0) throw std::domain_error("band dp: d must be non-negative");
  if (n < 1) throw std::domain_error("band dp: n must be positive");
  const long long de = std::min(d, n - 1);  // wider bands leave the matrix all-ones
  const int w = static_cast<int>(2 * de + 1);
  if (w > limits.band_window_max) throw CapacityError("band dp: window 2d + 1 exceeds limit");
  const std::uint32_t full = (std::uint32_t(1) << w) - 1;

  std::uint32_t init = 0;
  for (int k = 0; k < w; ++k) {
    const long long row = 1 - de + k;
    if (row < 1 || row > n) init |= std::uint32_t(1) << k;
  }
  std::unordered_map<std::uint32_t, BigInt> cur;
  cur.emplace(init, 1);
  for (long long j = 1; j <= n; ++j) {
    std::unordered_map<std::uint32_t, BigInt> next;
    const bool top_outside = j + de + 1 > n;
    for (const auto& [mask, cnt] : cur) {
      std::uint32_t free = ~mask & full;
      while (free) {
        const int k = std::countr_zero(free);
        free &= free - 1;
        const std::uint32_t nm = mask | (std::uint32_t(1) << k);
        if (!(nm & 1)) continue;  // row j - d leaves the window uncovered
        std::uint32_t moved = nm >> 1;
        if (top_outside) moved |= std::uint32_t(1) << (w - 1);
        next[moved] += cnt;
      }
    }
    cur = std::move(next);
  }
  const auto it = cur.find(full);
  return it == cur.end() ? BigInt(0) : it->second;
}

// Exact count of permutations of 1..n with every displacement at most d.
// Engine choice: band DP when the window fits, then Ryser, then enumeration.
inline BigInt ball_volume(long long d, long long n, const EngineLimits& limits = {},
                          int workers = 1) {
  if (d < 0) throw std::domain_error("ball volume: d must be non-negative");
  if (n < 1) throw std::domain_error("ball volume: n must be positive");
  const long long de = std::min(d, n - 1);
  if (2 * de + 1 <= limits.band_window_max) return permanent_band_dp(de, n, limits);
  if (n <= limits.ryser_max_n) return permanent_ryser(build_band_matrix(de, n), workers, limits);
  if (injection_count(n, n) <= limits.enumeration_budget)
    return permanent_enumerate(build_band_matrix(de, n), limits);
  throw CapacityError("ball volume: d, n exceed every engine limit");
}

}  // namespace chebyperm
