#ifndef BLOCKSEP_FIBONACCI_HPP
#define BLOCKSEP_FIBONACCI_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "integer.hpp"

namespace blocksep {

// Fibonacci convention throughout: F_0 = 0, F_1 = F_2 = 1.
// F_{r+2} counts decorations of r blocks.

inline constexpr std::size_t default_decoration_cap = 25;

/// F_k.
inline Integer fib(std::size_t k) {
  Integer a = 0, b = 1;
  for (std::size_t i = 0; i < k; ++i) {
    Integer next = a + b;
    a = std::move(b);
    b = std::move(next);
  }
  return a;
}

/// Number of legal decorations of r blocks, F_{r+2}.
inline Integer decoration_count(std::size_t r) { return fib(r + 2); }

/// Overlining pattern on r blocks (largest part first); bit i set means block i
/// is overlined. No two adjacent bits may be set.
class DecorationWord {
 public:
  DecorationWord() = default;

  explicit DecorationWord(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      if (bits_[i] > 1) throw usage_error("DecorationWord: bits must be 0 or 1");
      if (i + 1 < bits_.size() && bits_[i] == 1 && bits_[i + 1] == 1)
        throw usage_error("DecorationWord: adjacent overlined blocks at positions " +
                          std::to_string(i + 1) + "," + std::to_string(i + 2));
    }
  }

  static DecorationWord parse(std::string_view text) {
    std::vector<std::uint8_t> bits;
    for (char c : text) {
      if (c != '0' && c != '1') throw usage_error("DecorationWord: expected only 0/1 characters");
      bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return DecorationWord(std::move(bits));
  }

  std::size_t size() const noexcept { return bits_.size(); }
  bool overlined(std::size_t i) const { return bits_.at(i) == 1; }
  const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

  std::size_t overlined_count() const noexcept {
    std::size_t m = 0;
    for (auto b : bits_) m += b;
    return m;
  }

  std::string str() const {
    std::string s;
    for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
    return s;
  }

  friend auto operator<=>(const DecorationWord&, const DecorationWord&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// All legal words of length r in lexicographic order (0 < 1).
inline std::vector<DecorationWord> enumerate_decorations(std::size_t r,
                                                         std::size_t cap = default_decoration_cap) {
  if (r > cap) throw resource_limit_error("enumerate_decorations", r, cap);
  std::vector<DecorationWord> out;
  std::vector<std::uint8_t> bits(r);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == r) {
      out.emplace_back(bits);
      return;
    }
    bits[i] = 0;
    self(self, i + 1);
    if (i == 0 || bits[i - 1] == 0) {
      bits[i] = 1;
      self(self, i + 1);
      bits[i] = 0;
    }
  };
  rec(rec, 0);
  return out;
}

/// Row n of Pascal's triangle, built additively.
inline std::vector<Integer> pascal_row(std::size_t n) {
  std::vector<Integer> row{1};
  for (std::size_t i = 1; i <= n; ++i) {
    row.push_back(1);
    for (std::size_t k = i - 1; k >= 1; --k) row[k] += row[k - 1];
  }
  return row;
}

inline Integer binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  return pascal_row(n)[k];
}

/// F_{r+2}(y) = sum_m C(r-m+1, m) y^m; coefficient m counts decorations with
/// exactly m overlined blocks (independent m-sets of the path P_r).
struct FibPolynomial {
  std::size_t r = 0;
  std::vector<Integer> coeffs_by_m;

  Integer evaluate(const Integer& y) const {
    Integer acc = 0;
    for (auto it = coeffs_by_m.rbegin(); it != coeffs_by_m.rend(); ++it) acc = acc * y + *it;
    return acc;
  }
};

inline FibPolynomial fib_polynomial(std::size_t r) {
  std::vector<std::vector<Integer>> rows;
  rows.reserve(r + 2);
  rows.push_back({1});
  for (std::size_t n = 1; n <= r + 1; ++n) {
    std::vector<Integer> row(n + 1);
    row[0] = row[n] = 1;
    for (std::size_t k = 1; k < n; ++k) row[k] = rows[n - 1][k - 1] + rows[n - 1][k];
    rows.push_back(std::move(row));
  }
  FibPolynomial p{r, {}};
  for (std::size_t m = 0; m <= (r + 1) / 2; ++m) p.coeffs_by_m.push_back(rows[r - m + 1][m]);
  return p;
}

/// Overlined positions, 1-indexed; an independent set of the path P_r.
inline std::vector<std::size_t> word_to_independent_set(const DecorationWord& w) {
  std::vector<std::size_t> set;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w.overlined(i)) set.push_back(i + 1);
  return set;
}

inline DecorationWord independent_set_to_word(const std::vector<std::size_t>& set, std::size_t r) {
  std::vector<std::uint8_t> bits(r);
  for (std::size_t v : set) {
    if (v == 0 || v > r) throw usage_error("independent_set_to_word: vertex out of range");
    if (bits[v - 1]) throw usage_error("independent_set_to_word: repeated vertex");
    bits[v - 1] = 1;
  }
  return DecorationWord(std::move(bits));
}

/// Tiles of the decoration board. The board is the word followed by one
/// sentinel plain cell, so a word of length r tiles a board of length r+1;
/// an overlined block always pairs with the plain cell to its right.
enum class Tile { plain, overlined_pair };

inline std::vector<Tile> word_to_tiling(const DecorationWord& w) {
  std::vector<Tile> tiles;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w.overlined(i)) {
      tiles.push_back(Tile::overlined_pair);
      ++i;  // the paired plain cell (possibly the sentinel)
    } else {
      tiles.push_back(Tile::plain);
    }
  }
  // The sentinel is still uncovered unless the last block was overlined.
  if (w.size() == 0 || !w.overlined(w.size() - 1)) tiles.push_back(Tile::plain);
  return tiles;
}

inline DecorationWord tiling_to_word(const std::vector<Tile>& tiles) {
  std::string cells;
  for (Tile t : tiles) cells += (t == Tile::plain) ? "0" : "10";
  if (cells.empty() || cells.back() != '0')
    throw usage_error("tiling_to_word: tiling must end on the sentinel plain cell");
  cells.pop_back();
  return DecorationWord::parse(cells);
}

/// Number of ways to cut w followed by the sentinel into "0" and "10" tiles.
inline Integer tiling_decompositions(const DecorationWord& w) {
  std::string cells = w.str() + "0";
  std::vector<Integer> ways(cells.size() + 1);
  ways[0] = 1;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (ways[i] == 0) continue;
    if (cells[i] == '0') ways[i + 1] += ways[i];
    if (i + 1 < cells.size() && cells[i] == '1' && cells[i + 1] == '0') ways[i + 2] += ways[i];
  }
  return ways[cells.size()];
}

/// Tilings of the length-r decoration board (r cells plus sentinel) by unit
/// and domino tiles, counted by a direct DP over the board length.
inline Integer tiling_count(std::size_t r) {
  const std::size_t board = r + 1;
  std::vector<Integer> t(board + 1);
  t[0] = 1;
  for (std::size_t len = 1; len <= board; ++len) {
    t[len] = t[len - 1];
    if (len >= 2) t[len] += t[len - 2];
  }
  return t[board];
}

inline std::string tiling_str(const std::vector<Tile>& tiles) {
  std::string s;
  for (Tile t : tiles) s += (t == Tile::plain) ? "[0]" : "[10]";
  return s;
}

}  // namespace blocksep

#endif  // BLOCKSEP_FIBONACCI_HPP
