#ifndef BLOCKSEP_SYMFUN_HPP
#define BLOCKSEP_SYMFUN_HPP

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "fibonacci.hpp"
#include "qseries.hpp"

namespace blocksep {

/// Largest r with 1 + 2 + ... + r <= order. Any r distinct parts weigh at
/// least r(r+1)/2, so e_r vanishes mod q^{order+1} beyond this.
inline std::size_t max_block_count(std::size_t order) {
  std::size_t r = 0;
  while ((r + 1) * (r + 2) / 2 <= order) ++r;
  return r;
}

/// e_0..e_{r_max} of the block series (S_1, ..., S_order), one pass over j
/// with the triangular update e_r += e_{r-1} S_j (r descending).
inline std::vector<TruncatedSeries> elementary_symmetric_series(std::size_t r_max,
                                                                std::size_t order) {
  std::vector<TruncatedSeries> e(r_max + 1, TruncatedSeries::zero(order));
  e[0] = TruncatedSeries::one(order);
  for (std::size_t j = 1; j <= order; ++j) {
    const TruncatedSeries s = s_block(j, order);
    for (std::size_t r = r_max; r >= 1; --r) {
      if (!e[r - 1].is_zero()) e[r] = e[r] + e[r - 1] * s;
    }
  }
  return e;
}

using BlockWeight = std::function<Integer(std::size_t)>;

/// sum_r weight(r) e_r: every skeleton with r blocks is counted weight(r) times.
inline TruncatedSeries weighted_gf(std::size_t order, const BlockWeight& weight) {
  const std::size_t r_max = max_block_count(order);
  const auto e = elementary_symmetric_series(r_max, order);
  TruncatedSeries acc = TruncatedSeries::zero(order);
  for (std::size_t r = 0; r <= r_max; ++r) acc = acc + series_scale(e[r], weight(r));
  return acc;
}

/// b(0..order) as sum_r F_{r+2} e_r.
inline TruncatedSeries fibonacci_weighted_gf(std::size_t order) {
  return weighted_gf(order, [](std::size_t r) { return fib(r + 2); });
}

/// b(n, m): block-separated overpartitions of n with exactly m overlined
/// blocks. Rows are stored densely with trailing zeros trimmed (row 0 is [1]).
class BivariateTriangle {
 public:
  BivariateTriangle(std::size_t order, std::vector<std::vector<Integer>> rows)
      : order_(order), rows_(std::move(rows)) {
    if (rows_.size() != order_ + 1) throw usage_error("BivariateTriangle: need order+1 rows");
    for (auto& row : rows_) {
      while (row.size() > 1 && row.back() == 0) row.pop_back();
      if (row.empty()) row.push_back(0);
    }
  }

  std::size_t order() const noexcept { return order_; }
  const std::vector<Integer>& row(std::size_t n) const { return rows_.at(n); }

  Integer at(std::size_t n, std::size_t m) const {
    const auto& r = row(n);
    return m < r.size() ? r[m] : Integer(0);
  }

  /// Specialization y = 1.
  Integer row_sum(std::size_t n) const {
    Integer s = 0;
    for (const auto& v : row(n)) s += v;
    return s;
  }

  /// Coefficients b(0..order, m); m = 0 is the specialization y = 0.
  std::vector<Integer> column(std::size_t m) const {
    std::vector<Integer> c;
    for (std::size_t n = 0; n <= order_; ++n) c.push_back(at(n, m));
    return c;
  }

  friend bool operator==(const BivariateTriangle&, const BivariateTriangle&) = default;

 private:
  std::size_t order_;
  std::vector<std::vector<Integer>> rows_;
};

/// Coefficient of q^n y^m in sum_r F_{r+2}(y) e_r.
inline BivariateTriangle bivariate_gf(std::size_t order) {
  const std::size_t r_max = max_block_count(order);
  const auto e = elementary_symmetric_series(r_max, order);
  std::vector<std::vector<Integer>> rows(order + 1);
  for (std::size_t r = 0; r <= r_max; ++r) {
    const FibPolynomial poly = fib_polynomial(r);
    for (std::size_t n = 0; n <= order; ++n) {
      if (e[r][n] == 0) continue;
      auto& row = rows[n];
      if (row.size() < poly.coeffs_by_m.size()) row.resize(poly.coeffs_by_m.size());
      for (std::size_t m = 0; m < poly.coeffs_by_m.size(); ++m)
        row[m] += poly.coeffs_by_m[m] * e[r][n];
    }
  }
  return {order, std::move(rows)};
}

}  // namespace blocksep

#endif  // BLOCKSEP_SYMFUN_HPP
