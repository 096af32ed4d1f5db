#ifndef BLOCKSEP_TRANSFER_HPP
#define BLOCKSEP_TRANSFER_HPP

#include <array>
#include <cstddef>
#include <utility>

#include "qseries.hpp"

namespace blocksep {

/// Automaton state after the most recent present block.
enum class BlockState : std::size_t { plain = 0, overlined = 1 };

/// 2x2 matrix of series indexed by (from_state, to_state).
class TransferMatrix {
 public:
  TransferMatrix(TruncatedSeries s00, TruncatedSeries s01, TruncatedSeries s10,
                 TruncatedSeries s11)
      : entries_{{{std::move(s00), std::move(s01)}, {std::move(s10), std::move(s11)}}} {
    const std::size_t n = entries_[0][0].order();
    for (const auto& row : entries_)
      for (const auto& e : row)
        if (e.order() != n) throw usage_error("TransferMatrix: entries must share one order");
  }

  static TransferMatrix identity(std::size_t order) {
    return {TruncatedSeries::one(order), TruncatedSeries::zero(order),
            TruncatedSeries::zero(order), TruncatedSeries::one(order)};
  }

  std::size_t order() const noexcept { return entries_[0][0].order(); }

  const TruncatedSeries& operator()(std::size_t from, std::size_t to) const {
    return entries_.at(from).at(to);
  }
  const TruncatedSeries& operator()(BlockState from, BlockState to) const {
    return (*this)(static_cast<std::size_t>(from), static_cast<std::size_t>(to));
  }

  friend bool operator==(const TransferMatrix&, const TransferMatrix&) = default;

 private:
  std::array<std::array<TruncatedSeries, 2>, 2> entries_;
};

/// Row vector (f0, f1): weight of histories ending in state 0 / state 1.
struct StatePair {
  TruncatedSeries f0;
  TruncatedSeries f1;

  StatePair(TruncatedSeries plain, TruncatedSeries overlined)
      : f0(std::move(plain)), f1(std::move(overlined)) {
    detail::require_same_order(f0, f1, "StatePair");
  }

  /// (1, 0): nothing placed yet, last block vacuously plain.
  static StatePair start(std::size_t order) {
    return {TruncatedSeries::one(order), TruncatedSeries::zero(order)};
  }

  std::size_t order() const noexcept { return f0.order(); }
  TruncatedSeries total() const { return f0 + f1; }

  friend bool operator==(const StatePair&, const StatePair&) = default;
};

/// M_j = [[1 + S_j, S_j], [S_j, 1]]:
///   0 -> 0 absent or plain block, 0 -> 1 overlined block,
///   1 -> 0 plain block,           1 -> 1 absent only.
inline TransferMatrix transfer_matrix(std::size_t j, std::size_t order) {
  detail::require_positive_part(j, "transfer_matrix");
  TruncatedSeries s = s_block(j, order);
  return {geometric_inverse(j, order), s, s, TruncatedSeries::one(order)};
}

/// (1 - q^j) M_j = [[1, q^j], [q^j, 1 - q^j]].
inline TransferMatrix normalized_matrix(std::size_t j, std::size_t order) {
  detail::require_positive_part(j, "normalized_matrix");
  TruncatedSeries qj = TruncatedSeries::monomial(j, order);
  return {TruncatedSeries::one(order), qj, qj, one_minus_q_pow(j, order)};
}

inline StatePair apply_matrix(const StatePair& v, const TransferMatrix& m) {
  if (v.order() != m.order()) throw usage_error("apply_matrix: order mismatch");
  return {v.f0 * m(0, 0) + v.f1 * m(1, 0), v.f0 * m(0, 1) + v.f1 * m(1, 1)};
}

/// v · M_1 · M_2 ··· M_{last_part}, folded left to right.
inline StatePair transfer_product(StatePair v, std::size_t last_part) {
  const std::size_t n = v.order();
  for (std::size_t j = 1; j <= last_part; ++j) v = apply_matrix(v, transfer_matrix(j, n));
  return v;
}

/// Generating function of block-separated overpartitions, coefficients b(0..order).
/// M_j is the identity mod q^{order+1} for j > order, so the scan stops there.
inline TruncatedSeries matrix_product_gf(std::size_t order) {
  return transfer_product(StatePair::start(order), order).total();
}

}  // namespace blocksep

#endif  // BLOCKSEP_TRANSFER_HPP
