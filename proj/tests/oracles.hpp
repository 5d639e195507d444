#ifndef KAPPA_TESTS_ORACLES_HPP
#define KAPPA_TESTS_ORACLES_HPP

// Brute-force reference computations used only by tests. Nothing here calls
// into the library code paths it is used to check.

#include "kappa/arith.hpp"

#include <cstdint>
#include <functional>
#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <vector>

namespace kappa::oracle {

/// sigma_k by enumerating every k-subset of values (bitmask over <= 20 values).
inline Integer subset_elementary_symmetric(std::size_t k, const std::vector<Integer>& values) {
  const std::size_t m = values.size();
  Integer total = 0;
  for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
    Integer prod = 1;
    for (std::size_t j = 0; j < m; ++j) {
      if (mask & (1U << j)) prod *= values[j];
    }
    total += prod;
  }
  return total;
}

inline Integer big(std::int64_t x) { return Integer(std::to_string(x)); }

/// (-1)^i sigma_{2i}(a_1, -a_1, ..., a_n, -a_n) by subset enumeration.
inline Integer doubled_by_enumeration(std::size_t i, const std::vector<std::int64_t>& a) {
  std::vector<Integer> doubled;
  for (auto x : a) {
    doubled.push_back(big(x));
    doubled.push_back(-big(x));
  }
  Integer s = subset_elementary_symmetric(2 * i, doubled);
  return i % 2 == 0 ? s : Integer(-s);
}

/// sigma_i(a_1^2, ..., a_n^2) by subset enumeration.
inline Integer squares_by_enumeration(std::size_t i, const std::vector<std::int64_t>& a) {
  std::vector<Integer> sq;
  for (auto x : a) sq.push_back(big(x) * big(x));
  return subset_elementary_symmetric(i, sq);
}

/// Every real SU(2) representation (multiset of admissible irreducible
/// dimensions) with total dimension exactly `dim`, as dimension lists.
inline void enumerate_real_reps(unsigned dim, const std::function<void(const std::vector<unsigned>&)>& visit) {
  std::vector<unsigned> parts;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned remaining, unsigned max_part) {
    if (remaining == 0) {
      visit(parts);
      return;
    }
    for (unsigned d = std::min(remaining, max_part); d >= 1; --d) {
      if (d % 4 == 2) continue;
      parts.push_back(d);
      rec(remaining - d, d);
      parts.pop_back();
    }
  };
  rec(dim, dim);
}

/// Torus weights of a real representation computed independently: V^{2m+1}
/// has complex weights -2m..2m step 2, V^{4q} has -(2q-1)..(2q-1) step 2
/// twice; each +-w pair is one real plane of weight |w|, and zero weights
/// pair into trivial planes.
inline std::vector<std::uint64_t> torus_planes(const std::vector<unsigned>& dims) {
  std::map<std::int64_t, int> count;
  for (auto d : dims) {
    const int copies = (d % 2 == 1) ? 1 : 2;
    const std::int64_t top = (d % 2 == 1) ? std::int64_t(d) - 1 : std::int64_t(d) / 2 - 1;
    for (int c = 0; c < copies; ++c) {
      for (std::int64_t w = -top; w <= top; w += 2) ++count[w];
    }
  }
  std::vector<std::uint64_t> planes;
  for (const auto& [w, c] : count) {
    if (w > 0) planes.insert(planes.end(), c, static_cast<std::uint64_t>(w));
  }
  planes.insert(planes.end(), count[0] / 2, 0);
  std::sort(planes.rbegin(), planes.rend());
  return planes;
}

/// Search for k in [0, w_even + w_odd] with m_even = w_even - k and m_odd = w_odd - k.
inline std::optional<std::uint64_t> betti_brute_force(std::int64_t w_even, std::int64_t w_odd, std::int64_t m_even,
                                                      std::int64_t m_odd) {
  for (std::int64_t k = 0; k <= w_even + w_odd; ++k) {
    if (m_even == w_even - k && m_odd == w_odd - k) return static_cast<std::uint64_t>(k);
  }
  return std::nullopt;
}

}  // namespace kappa::oracle

#endif  // KAPPA_TESTS_ORACLES_HPP
