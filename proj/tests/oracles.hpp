#ifndef BLOCKSEP_TESTS_ORACLES_HPP
#define BLOCKSEP_TESTS_ORACLES_HPP

// Test-only reference computations. None of these call into the library; they
// use plain machine integers and naive algorithms so they fail independently.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using Poly = std::vector<long long>;

/// Dense truncated product, sizes fixed at order+1.
inline Poly mul(const Poly& a, const Poly& b, std::size_t order) {
  Poly r(order + 1, 0);
  for (std::size_t i = 0; i <= order && i < a.size(); ++i)
    for (std::size_t k = 0; i + k <= order && k < b.size(); ++k) r[i + k] += a[i] * b[k];
  return r;
}

inline Poly add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

/// Partition numbers by the coin-change DP.
inline std::vector<std::uint64_t> partition_numbers(std::size_t n_max) {
  std::vector<std::uint64_t> p(n_max + 1, 0);
  p[0] = 1;
  for (std::size_t part = 1; part <= n_max; ++part)
    for (std::size_t n = part; n <= n_max; ++n) p[n] += p[n - part];
  return p;
}

/// Calls visit(parts) for every partition of n as a non-increasing vector.
template <typename Visit>
void for_each_partition(std::size_t n, Visit&& visit) {
  std::vector<std::size_t> parts;
  auto rec = [&](auto&& self, std::size_t remaining, std::size_t max_part) -> void {
    if (remaining == 0) {
      visit(parts);
      return;
    }
    for (std::size_t d = std::min(remaining, max_part); d >= 1; --d) {
      parts.push_back(d);
      self(self, remaining - d, d);
      parts.pop_back();
    }
  };
  rec(rec, n, n);
}

inline std::size_t distinct_parts(const std::vector<std::size_t>& parts) {
  std::size_t r = 0;
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (i == 0 || parts[i] != parts[i - 1]) ++r;
  return r;
}

/// Counts of overpartitions of n whose overlined distinct parts are never
/// adjacent in size order, indexed by number of overlined parts.
inline std::vector<std::uint64_t> block_separated_by_overlines(std::size_t n) {
  std::vector<std::uint64_t> by_m(1, 0);
  for_each_partition(n, [&](const std::vector<std::size_t>& parts) {
    const std::size_t r = distinct_parts(parts);
    for (std::uint64_t mask = 0; mask < (1ull << r); ++mask) {
      bool ok = true;
      for (std::size_t i = 0; i + 1 < r; ++i)
        if (((mask >> i) & 1) && ((mask >> (i + 1)) & 1)) ok = false;
      if (!ok) continue;
      std::size_t m = 0;
      for (std::size_t i = 0; i < r; ++i) m += (mask >> i) & 1;
      if (by_m.size() <= m) by_m.resize(m + 1, 0);
      ++by_m[m];
    }
  });
  return by_m;
}

inline std::uint64_t block_separated(std::size_t n) {
  std::uint64_t t = 0;
  for (auto c : block_separated_by_overlines(n)) t += c;
  return t;
}

inline std::uint64_t overpartitions(std::size_t n) {
  std::uint64_t t = 0;
  for_each_partition(n, [&](const std::vector<std::size_t>& parts) {
    t += 1ull << distinct_parts(parts);
  });
  return t;
}

/// Binary words of length r without "11", from all 2^r words.
inline std::vector<std::vector<int>> words_avoiding_11(std::size_t r) {
  std::vector<std::vector<int>> out;
  for (std::uint64_t x = 0; x < (1ull << r); ++x) {
    std::vector<int> w(r);
    // Most significant bit first so the list comes out lexicographic.
    for (std::size_t i = 0; i < r; ++i) w[i] = static_cast<int>((x >> (r - 1 - i)) & 1);
    bool ok = true;
    for (std::size_t i = 0; i + 1 < r; ++i)
      if (w[i] && w[i + 1]) ok = false;
    if (ok) out.push_back(std::move(w));
  }
  return out;
}

/// Random polynomial with small signed coefficients.
inline Poly random_poly(std::mt19937_64& rng, std::size_t order, int bound = 9) {
  std::uniform_int_distribution<int> d(-bound, bound);
  Poly p(order + 1);
  for (auto& c : p) c = d(rng);
  return p;
}

}  // namespace oracle

#endif  // BLOCKSEP_TESTS_ORACLES_HPP
