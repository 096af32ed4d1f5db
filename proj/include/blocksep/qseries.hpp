#ifndef BLOCKSEP_QSERIES_HPP
#define BLOCKSEP_QSERIES_HPP

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "integer.hpp"

namespace blocksep {

/// Formal power series in q truncated after q^order.
///
/// The order travels with the value: arithmetic between series of different
/// orders is rejected with usage_error instead of silently re-truncating.
/// Coefficients are signed; intermediate series of the normalized recurrence
/// carry negative terms.
class TruncatedSeries {
 public:
  /// The zero series of the given order.
  explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

  /// Takes at most order+1 coefficients; missing high terms are zero.
  TruncatedSeries(std::size_t order, std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() > order + 1) {
      throw usage_error("TruncatedSeries: " + std::to_string(coeffs_.size()) +
                        " coefficients do not fit order " + std::to_string(order));
    }
    coeffs_.resize(order + 1);
  }

  TruncatedSeries(std::size_t order, std::initializer_list<long long> coeffs)
      : TruncatedSeries(order, std::vector<Integer>(coeffs.begin(), coeffs.end())) {}

  static TruncatedSeries zero(std::size_t order) { return TruncatedSeries(order); }

  static TruncatedSeries one(std::size_t order) { return monomial(0, order); }

  /// c·q^k, or zero if k > order.
  static TruncatedSeries monomial(std::size_t k, std::size_t order, Integer c = 1) {
    TruncatedSeries s(order);
    if (k <= order) s.coeffs_[k] = std::move(c);
    return s;
  }

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  std::span<const Integer> coeffs() const noexcept { return coeffs_; }

  const Integer& operator[](std::size_t k) const { return coeffs_.at(k); }

  /// Mutable access for in-place construction; the length never changes.
  Integer& coeff(std::size_t k) { return coeffs_.at(k); }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Integer> coeffs_;
};

namespace detail {

inline void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b,
                               const char* op) {
  if (a.order() != b.order()) {
    throw usage_error(std::string(op) + ": order mismatch (" + std::to_string(a.order()) +
                      " vs " + std::to_string(b.order()) + ")");
  }
}

inline std::vector<std::size_t> support(const TruncatedSeries& s) {
  std::vector<std::size_t> idx;
  const auto c = s.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k] != 0) idx.push_back(k);
  return idx;
}

inline void require_positive_part(std::size_t j, const char* op) {
  if (j == 0) throw usage_error(std::string(op) + ": part size must be >= 1");
}

}  // namespace detail

inline TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
  detail::require_same_order(a, b, "series_add");
  TruncatedSeries r = a;
  for (std::size_t k = 0; k <= r.order(); ++k) r.coeff(k) += b[k];
  return r;
}

inline TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  detail::require_same_order(a, b, "series_sub");
  TruncatedSeries r = a;
  for (std::size_t k = 0; k <= r.order(); ++k) r.coeff(k) -= b[k];
  return r;
}

inline TruncatedSeries series_scale(const TruncatedSeries& a, const Integer& c) {
  TruncatedSeries r = a;
  for (std::size_t k = 0; k <= r.order(); ++k) r.coeff(k) *= c;
  return r;
}

/// Truncated Cauchy product. Schoolbook convolution that only visits nonzero
/// coefficients, so multiplying by the sparse block series q^j/(1-q^j) costs
/// O(N^2/j) rather than O(N^2).
inline TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  detail::require_same_order(a, b, "series_mul");
  const std::size_t n = a.order();
  auto sa = detail::support(a);
  auto sb = detail::support(b);
  const TruncatedSeries* outer = &a;
  const TruncatedSeries* inner = &b;
  if (sb.size() < sa.size()) {
    std::swap(sa, sb);
    std::swap(outer, inner);
  }
  TruncatedSeries r(n);
  for (std::size_t i : sa) {
    const Integer& x = (*outer)[i];
    for (std::size_t k : sb) {
      if (i + k > n) break;
      r.coeff(i + k) += x * (*inner)[k];
    }
  }
  return r;
}

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  return series_add(a, b);
}
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  return series_sub(a, b);
}
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  return series_mul(a, b);
}

/// 1 - q^j at the given order.
inline TruncatedSeries one_minus_q_pow(std::size_t j, std::size_t order) {
  TruncatedSeries s = TruncatedSeries::one(order);
  if (j <= order) s.coeff(j) -= 1;
  return s;
}

/// 1/(1-q^j): coefficient of q^k is 1 iff j divides k.
inline TruncatedSeries geometric_inverse(std::size_t j, std::size_t order) {
  detail::require_positive_part(j, "geometric_inverse");
  TruncatedSeries s(order);
  for (std::size_t k = 0; k <= order; k += j) s.coeff(k) = 1;
  return s;
}

/// Block series S_j = q^j/(1-q^j): one block of part size j with multiplicity >= 1.
inline TruncatedSeries s_block(std::size_t j, std::size_t order) {
  detail::require_positive_part(j, "s_block");
  TruncatedSeries s(order);
  for (std::size_t k = j; k <= order; k += j) s.coeff(k) = 1;
  return s;
}

/// 1/(q)_inf as the product of 1/(1-q^j), j = 1..order.
inline TruncatedSeries euler_inverse_product(std::size_t order) {
  TruncatedSeries s = TruncatedSeries::one(order);
  for (std::size_t j = 1; j <= order; ++j) s = series_mul(s, geometric_inverse(j, order));
  return s;
}

/// 1/(q)_inf from Euler's pentagonal recurrence
/// p(n) = sum_{k>=1} (-1)^{k+1} [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)].
inline TruncatedSeries euler_inverse_pentagonal(std::size_t order) {
  TruncatedSeries s(order);
  s.coeff(0) = 1;
  for (std::size_t n = 1; n <= order; ++n) {
    Integer acc = 0;
    for (std::size_t k = 1;; ++k) {
      const std::size_t g1 = k * (3 * k - 1) / 2;
      if (g1 > n) break;
      const std::size_t g2 = k * (3 * k + 1) / 2;
      Integer term = s[n - g1];
      if (g2 <= n) term += s[n - g2];
      if (k % 2 == 1)
        acc += term;
      else
        acc -= term;
    }
    s.coeff(n) = std::move(acc);
  }
  return s;
}

/// 1/(q)_inf truncated at order; coefficients are the partition numbers p(n).
/// Both routes are evaluated and must agree exactly.
inline TruncatedSeries euler_inverse(std::size_t order) {
  TruncatedSeries by_pentagonal = euler_inverse_pentagonal(order);
  if (by_pentagonal != euler_inverse_product(order)) {
    throw std::logic_error("euler_inverse: product and pentagonal routes disagree at order " +
                           std::to_string(order));
  }
  return by_pentagonal;
}

/// prod_{j>=1} (1+q^j)/(1-q^j); coefficients are the overpartition numbers.
inline TruncatedSeries overpartition_product(std::size_t order) {
  TruncatedSeries s = TruncatedSeries::one(order);
  for (std::size_t j = 1; j <= order; ++j) {
    TruncatedSeries plus = TruncatedSeries::one(order);
    plus.coeff(j) += 1;
    s = series_mul(s, plus);
  }
  return series_mul(s, euler_inverse_pentagonal(order));
}

inline std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s) {
  bool first = true;
  const auto c = s.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    Integer mag = c[k] < 0 ? Integer(-c[k]) : c[k];
    if (first)
      os << (c[k] < 0 ? "-" : "");
    else
      os << (c[k] < 0 ? " - " : " + ");
    first = false;
    if (k == 0 || mag != 1) os << mag;
    if (k >= 1) os << 'q';
    if (k >= 2) os << '^' << k;
  }
  if (first) os << '0';
  return os << " + O(q^" << s.order() + 1 << ')';
}

}  // namespace blocksep

#endif  // BLOCKSEP_QSERIES_HPP
