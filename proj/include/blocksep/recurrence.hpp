#ifndef BLOCKSEP_RECURRENCE_HPP
#define BLOCKSEP_RECURRENCE_HPP

#include <cstddef>
#include <utility>

#include "qseries.hpp"
#include "transfer.hpp"

namespace blocksep {

/// Normalized pair after n steps of
///   F0' = F0 + q^n F1
///   F1' = q^n F0 + (1 - q^n) F1
/// from (1, 0), i.e. (1, 0) · M̂_1 ··· M̂_steps at the given order.
inline StatePair normalized_recurrence(std::size_t steps, std::size_t order) {
  TruncatedSeries f0 = TruncatedSeries::one(order);
  TruncatedSeries f1 = TruncatedSeries::zero(order);
  for (std::size_t n = 1; n <= steps && n <= order; ++n) {
    TruncatedSeries next0 = f0;
    TruncatedSeries next1 = f1;
    for (std::size_t k = n; k <= order; ++k) {
      next0.coeff(k) += f1[k - n];
      next1.coeff(k) += f0[k - n] - f1[k - n];
    }
    f0 = std::move(next0);
    f1 = std::move(next1);
  }
  return {std::move(f0), std::move(f1)};
}

inline StatePair normalized_recurrence(std::size_t order) {
  return normalized_recurrence(order, order);
}

/// b(0..order) as (1/(q)_inf) · (F̂0 + F̂1).
inline TruncatedSeries euler_factorized_gf(std::size_t order) {
  return euler_inverse(order) * normalized_recurrence(order).total();
}

}  // namespace blocksep

#endif  // BLOCKSEP_RECURRENCE_HPP
