#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "blocksep/qseries.hpp"
#include "oracles.hpp"

using blocksep::Integer;
using blocksep::TruncatedSeries;
using blocksep::usage_error;

namespace {

TruncatedSeries from_poly(const oracle::Poly& p, std::size_t order) {
  std::vector<Integer> c(p.begin(), p.end());
  c.resize(order + 1);
  return {order, std::move(c)};
}

TruncatedSeries series(std::size_t order, std::initializer_list<long long> c) {
  return TruncatedSeries(order, c);
}

}  // namespace

TEST(TruncatedSeries, LengthIsOrderPlusOne) {
  EXPECT_EQ(TruncatedSeries(0).coeffs().size(), 1u);
  EXPECT_EQ(TruncatedSeries(7).coeffs().size(), 8u);
  EXPECT_EQ(series(4, {1, 2}).coeffs().size(), 5u);
  EXPECT_THROW(series(1, {1, 2, 3}), usage_error);
}

TEST(TruncatedSeries, Printing) {
  std::ostringstream os;
  os << series(3, {1, -2, 0, 1});
  EXPECT_EQ(os.str(), "1 - 2q + q^3 + O(q^4)");
}

TEST(SeriesAdd, Examples) {
  EXPECT_EQ(series(1, {1, 1}) + series(1, {1, 1}), series(1, {2, 2}));
  const auto a = series(3, {4, -1, 0, 7});
  EXPECT_EQ(a + TruncatedSeries::zero(3), a);
  EXPECT_EQ(series(1, {1, -1}) + series(1, {0, 1}), series(1, {1}));
}

TEST(SeriesAdd, OrderMismatchIsUsageError) {
  EXPECT_THROW(series_add(TruncatedSeries(2), TruncatedSeries(3)), usage_error);
  EXPECT_THROW(series_mul(TruncatedSeries(2), TruncatedSeries(3)), usage_error);
}

TEST(SeriesMul, Examples) {
  EXPECT_EQ(series(2, {1, 1}) * series(2, {1, 1}), series(2, {1, 2, 1}));
  const auto a = series(4, {3, 0, -5, 1, 2});
  EXPECT_EQ(a * TruncatedSeries::one(4), a);
  EXPECT_EQ(series(2, {1, 1, 1}) * series(2, {1, -1}), series(2, {1}));
}

TEST(SeriesMul, MatchesDenseOracle) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = rng() % 33;
    auto pa = oracle::random_poly(rng, n);
    auto pb = oracle::random_poly(rng, n);
    // Sparsify some inputs so both loop orders get exercised.
    if (trial % 3 == 0)
      for (std::size_t k = 0; k < pa.size(); ++k)
        if (k % 4) pa[k] = 0;
    EXPECT_EQ(from_poly(pa, n) * from_poly(pb, n), from_poly(oracle::mul(pa, pb, n), n));
  }
}

TEST(SeriesMul, RingLaws) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = rng() % 33;
    const auto a = from_poly(oracle::random_poly(rng, n), n);
    const auto b = from_poly(oracle::random_poly(rng, n), n);
    const auto c = from_poly(oracle::random_poly(rng, n), n);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
  }
}

TEST(GeometricInverse, Examples) {
  EXPECT_EQ(blocksep::geometric_inverse(1, 3), series(3, {1, 1, 1, 1}));
  EXPECT_EQ(blocksep::geometric_inverse(2, 5), series(5, {1, 0, 1, 0, 1, 0}));
  EXPECT_THROW(blocksep::geometric_inverse(0, 5), usage_error);
}

TEST(GeometricInverse, InverseOfOneMinusQj) {
  for (std::size_t n = 1; n <= 64; ++n)
    for (std::size_t j = 1; j <= n; ++j)
      ASSERT_EQ(blocksep::geometric_inverse(j, n) * blocksep::one_minus_q_pow(j, n),
                TruncatedSeries::one(n))
          << "j=" << j << " N=" << n;
}

TEST(SBlock, Examples) {
  EXPECT_EQ(blocksep::s_block(1, 3), series(3, {0, 1, 1, 1}));
  EXPECT_EQ(blocksep::s_block(3, 3), series(3, {0, 0, 0, 1}));
  EXPECT_EQ(blocksep::s_block(5, 3), TruncatedSeries::zero(3));
  EXPECT_THROW(blocksep::s_block(0, 3), usage_error);
}

TEST(SBlock, OnePlusBlockIsGeometricInverse) {
  for (std::size_t n = 1; n <= 64; ++n)
    for (std::size_t j = 1; j <= n; ++j)
      ASSERT_EQ(TruncatedSeries::one(n) + blocksep::s_block(j, n), blocksep::geometric_inverse(j, n));
}

TEST(EulerInverse, TableValues) {
  EXPECT_EQ(blocksep::euler_inverse(10), series(10, {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42}));
  EXPECT_EQ(blocksep::euler_inverse(0), series(0, {1}));
}

TEST(EulerInverse, TimesEulerProductIsOne) {
  const std::size_t n = 40;
  TruncatedSeries prod = TruncatedSeries::one(n);
  for (std::size_t j = 1; j <= n; ++j) prod = prod * blocksep::one_minus_q_pow(j, n);
  EXPECT_EQ(blocksep::euler_inverse(n) * prod, TruncatedSeries::one(n));
}

TEST(EulerInverse, MatchesCoinChangeOracle) {
  const auto p = oracle::partition_numbers(40);
  const auto s = blocksep::euler_inverse(40);
  for (std::size_t n = 0; n <= 40; ++n) EXPECT_EQ(s[n], Integer(p[n])) << n;
}

TEST(EulerInverse, ProductAndPentagonalAgreeTo500) {
  EXPECT_EQ(blocksep::euler_inverse_product(500), blocksep::euler_inverse_pentagonal(500));
  // p(200), a classic checkpoint.
  EXPECT_EQ(blocksep::euler_inverse_pentagonal(200)[200], Integer("3972999029388"));
}

TEST(OverpartitionProduct, TableValues) {
  EXPECT_EQ(blocksep::overpartition_product(10),
            series(10, {1, 2, 4, 8, 14, 24, 40, 64, 100, 154, 232}));
  for (std::size_t n = 0; n <= 20; ++n)
    EXPECT_EQ(blocksep::overpartition_product(20)[n], Integer(oracle::overpartitions(n)));
}
