#ifndef BLOCKSEP_ENUMERATE_HPP
#define BLOCKSEP_ENUMERATE_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "fibonacci.hpp"
#include "integer.hpp"

// Brute-force ground truth. Nothing here touches q-series.

namespace blocksep {

struct Block {
  std::size_t part;
  std::size_t multiplicity;

  friend bool operator==(const Block&, const Block&) = default;
};

/// d_1^{m_1} + ... + d_r^{m_r} with d_1 > ... > d_r and every m_i >= 1.
class BlockPartition {
 public:
  BlockPartition() = default;

  explicit BlockPartition(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      if (blocks_[i].part == 0 || blocks_[i].multiplicity == 0)
        throw usage_error("BlockPartition: parts and multiplicities must be positive");
      if (i > 0 && blocks_[i - 1].part <= blocks_[i].part)
        throw usage_error("BlockPartition: parts must be strictly decreasing");
    }
  }

  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }

  std::size_t weight() const noexcept {
    std::size_t w = 0;
    for (const auto& b : blocks_) w += b.part * b.multiplicity;
    return w;
  }

  /// "2+2+1"; the empty partition renders as "()".
  std::string str() const {
    std::string s;
    for (const auto& b : blocks_)
      for (std::size_t k = 0; k < b.multiplicity; ++k) {
        if (!s.empty()) s += '+';
        s += std::to_string(b.part);
      }
    return s.empty() ? "()" : s;
  }

  friend bool operator==(const BlockPartition&, const BlockPartition&) = default;

 private:
  std::vector<Block> blocks_;
};

/// A skeleton with a legal overlining of its blocks.
class DecoratedPartition {
 public:
  DecoratedPartition(BlockPartition skeleton, DecorationWord decoration)
      : skeleton_(std::move(skeleton)), decoration_(std::move(decoration)) {
    if (skeleton_.block_count() != decoration_.size())
      throw usage_error("DecoratedPartition: decoration length must equal block count");
  }

  const BlockPartition& skeleton() const noexcept { return skeleton_; }
  const DecorationWord& decoration() const noexcept { return decoration_; }

  /// Overlined first occurrences carry a trailing '~': "2~+2+1".
  std::string str() const {
    std::string s;
    const auto& blocks = skeleton_.blocks();
    for (std::size_t i = 0; i < blocks.size(); ++i)
      for (std::size_t k = 0; k < blocks[i].multiplicity; ++k) {
        if (!s.empty()) s += '+';
        s += std::to_string(blocks[i].part);
        if (k == 0 && decoration_.overlined(i)) s += '~';
      }
    return s.empty() ? "()" : s;
  }

  friend bool operator==(const DecoratedPartition&, const DecoratedPartition&) = default;

 private:
  BlockPartition skeleton_;
  DecorationWord decoration_;
};

/// Caps are configuration; exceeding one raises resource_limit_error.
struct EnumerationLimits {
  std::size_t partition_cap = 60;   // skeleton enumeration / weighted counting
  std::size_t listing_cap = 20;     // explicit listing of decorated partitions
  std::size_t oracle_cap = 30;      // explicit decoration enumeration (no Fibonacci)
  std::size_t decoration_cap = default_decoration_cap;
};

namespace detail {

// Visits every partition of n in block form, largest part first and, within a
// part, largest multiplicity first.
template <typename Visit>
void for_each_block_partition(std::size_t n, Visit&& visit) {
  std::vector<Block> blocks;
  auto rec = [&](auto&& self, std::size_t remaining, std::size_t max_part) -> void {
    if (remaining == 0) {
      visit(static_cast<const std::vector<Block>&>(blocks));
      return;
    }
    for (std::size_t d = std::min(remaining, max_part); d >= 1; --d) {
      for (std::size_t m = remaining / d; m >= 1; --m) {
        blocks.push_back({d, m});
        self(self, remaining - d * m, d - 1);
        blocks.pop_back();
      }
    }
  };
  rec(rec, n, n);
}

// Number of skeletons of n with exactly r blocks, indexed by r.
inline std::vector<std::uint64_t> block_count_histogram(std::size_t n) {
  std::vector<std::uint64_t> hist(1);
  for_each_block_partition(n, [&](const std::vector<Block>& blocks) {
    if (hist.size() <= blocks.size()) hist.resize(blocks.size() + 1);
    ++hist[blocks.size()];
  });
  return hist;
}

}  // namespace detail

inline std::vector<BlockPartition> enumerate_block_partitions(std::size_t n,
                                                              const EnumerationLimits& lim = {}) {
  if (n > lim.partition_cap)
    throw resource_limit_error("enumerate_block_partitions", n, lim.partition_cap);
  std::vector<BlockPartition> out;
  detail::for_each_block_partition(
      n, [&](const std::vector<Block>& blocks) { out.emplace_back(blocks); });
  return out;
}

/// b(n) as sum over skeletons of F_{r+2}.
inline Integer count_block_separated(std::size_t n, const EnumerationLimits& lim = {}) {
  if (n > lim.partition_cap)
    throw resource_limit_error("count_block_separated", n, lim.partition_cap);
  const auto hist = detail::block_count_histogram(n);
  Integer total = 0;
  for (std::size_t r = 0; r < hist.size(); ++r) total += Integer(hist[r]) * decoration_count(r);
  return total;
}

/// p̄(n) as sum over skeletons of 2^r.
inline Integer count_overpartitions(std::size_t n, const EnumerationLimits& lim = {}) {
  if (n > lim.partition_cap)
    throw resource_limit_error("count_overpartitions", n, lim.partition_cap);
  const auto hist = detail::block_count_histogram(n);
  Integer total = 0;
  for (std::size_t r = 0; r < hist.size(); ++r) total += Integer(hist[r]) << r;
  return total;
}

/// Every block-separated overpartition of n: skeleton-major, decorations in
/// lexicographic order.
inline std::vector<DecoratedPartition> list_block_separated(std::size_t n,
                                                            const EnumerationLimits& lim = {}) {
  if (n > lim.listing_cap) throw resource_limit_error("list_block_separated", n, lim.listing_cap);
  std::vector<DecoratedPartition> out;
  detail::for_each_block_partition(n, [&](const std::vector<Block>& blocks) {
    BlockPartition skeleton(blocks);
    for (auto& word : enumerate_decorations(blocks.size(), lim.decoration_cap))
      out.emplace_back(skeleton, std::move(word));
  });
  return out;
}

/// Counts by number of overlined blocks, found by trying all 2^r overlinings
/// of every skeleton and discarding those with two adjacent overlined blocks.
inline std::vector<Integer> count_bivariate_oracle(std::size_t n,
                                                   const EnumerationLimits& lim = {}) {
  if (n > lim.oracle_cap) throw resource_limit_error("count_bivariate_oracle", n, lim.oracle_cap);
  std::vector<std::uint64_t> by_m(1);
  detail::for_each_block_partition(n, [&](const std::vector<Block>& blocks) {
    const std::size_t r = blocks.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r); ++mask) {
      if (mask & (mask >> 1)) continue;
      const auto m = static_cast<std::size_t>(std::popcount(mask));
      if (by_m.size() <= m) by_m.resize(m + 1);
      ++by_m[m];
    }
  });
  return {by_m.begin(), by_m.end()};
}

/// b(n) from the explicit enumeration above.
inline Integer count_block_separated_explicit(std::size_t n, const EnumerationLimits& lim = {}) {
  Integer total = 0;
  for (const auto& c : count_bivariate_oracle(n, lim)) total += c;
  return total;
}

}  // namespace blocksep

#endif  // BLOCKSEP_ENUMERATE_HPP
