#ifndef IE_TESTS_ORACLES_HPP
#define IE_TESTS_ORACLES_HPP

// Test-only oracles, kept independent of the library paths they check.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ie/bigint.hpp"
#include "ie/poly.hpp"

namespace ie::testing {

// Rooted-tree counts r_1..r_n from the Euler-transform recurrence
//   r_{m+1} = (1/m) sum_{k=1..m} ( sum_{d|k} d*r_d ) r_{m+1-k},
// no enumeration involved.
inline std::vector<BigInt> tree_counts_by_recurrence(int n) {
  std::vector<BigInt> r(static_cast<std::size_t>(n) + 1, BigInt(0));
  if (n >= 1) r[1] = 1;
  for (int m = 1; m < n; ++m) {
    BigInt acc = 0;
    for (int k = 1; k <= m; ++k) {
      BigInt c = 0;
      for (int d = 1; d <= k; ++d) {
        if (k % d == 0) c += d * r[static_cast<std::size_t>(d)];
      }
      acc += c * r[static_cast<std::size_t>(m + 1 - k)];
    }
    if (acc % m != 0) throw std::logic_error("tree-count recurrence not integral");
    r[static_cast<std::size_t>(m + 1)] = acc / m;
  }
  return r;
}

// Laplace expansion along the first row; exponential but independent of the
// fraction-free elimination it checks.
inline LambdaPoly cofactor_det(const PolyMatrix& m) {
  if (m.rows != m.cols) throw std::logic_error("cofactor_det requires a square matrix");
  if (m.rows == 0) return LambdaPoly(1);
  if (m.rows == 1) return m.at(0, 0);
  LambdaPoly det;
  for (std::size_t j = 0; j < m.cols; ++j) {
    if (m.at(0, j).is_zero()) continue;
    PolyMatrix minor(m.rows - 1, m.cols - 1);
    for (std::size_t i = 1; i < m.rows; ++i) {
      std::size_t cc = 0;
      for (std::size_t k = 0; k < m.cols; ++k) {
        if (k == j) continue;
        minor.at(i - 1, cc++) = m.at(i, k);
      }
    }
    LambdaPoly term = m.at(0, j) * cofactor_det(minor);
    if (j % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

// Deterministic RNG for seeded property tests.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d649bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }

  long long range(long long lo, long long hi) {  // inclusive
    return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

}  // namespace ie::testing

#endif
