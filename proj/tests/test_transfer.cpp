#include <gtest/gtest.h>

#include "blocksep/qseries.hpp"
#include "blocksep/transfer.hpp"
#include "oracles.hpp"

using namespace blocksep;

namespace {

TruncatedSeries series(std::size_t order, std::initializer_list<long long> c) {
  return TruncatedSeries(order, c);
}

}  // namespace

TEST(TransferMatrix, EntriesFromBlockSeries) {
  for (std::size_t n = 0; n <= 12; ++n)
    for (std::size_t j = 1; j <= 15; ++j) {
      const auto m = transfer_matrix(j, n);
      EXPECT_EQ(m(0, 0), TruncatedSeries::one(n) + s_block(j, n));
      EXPECT_EQ(m(0, 1), s_block(j, n));
      EXPECT_EQ(m(1, 0), s_block(j, n));
      EXPECT_EQ(m(1, 1), TruncatedSeries::one(n));
      EXPECT_EQ(m(BlockState::plain, BlockState::overlined), m(0, 1));
    }
}

TEST(TransferMatrix, Examples) {
  const auto m1 = transfer_matrix(1, 3);
  EXPECT_EQ(m1, TransferMatrix(series(3, {1, 1, 1, 1}), series(3, {0, 1, 1, 1}),
                               series(3, {0, 1, 1, 1}), series(3, {1})));
  EXPECT_EQ(transfer_matrix(2, 3), TransferMatrix(series(3, {1, 0, 1}), series(3, {0, 0, 1}),
                                                  series(3, {0, 0, 1}), series(3, {1})));
  EXPECT_EQ(transfer_matrix(7, 3), TransferMatrix::identity(3));
  EXPECT_THROW(transfer_matrix(0, 3), usage_error);
}

TEST(TransferMatrix, MixedOrdersRejected) {
  EXPECT_THROW(TransferMatrix(TruncatedSeries(2), TruncatedSeries(2), TruncatedSeries(3),
                              TruncatedSeries(2)),
               usage_error);
}

TEST(NormalizedMatrix, Examples) {
  EXPECT_EQ(normalized_matrix(1, 2), TransferMatrix(series(2, {1}), series(2, {0, 1}),
                                                    series(2, {0, 1}), series(2, {1, -1})));
  EXPECT_EQ(normalized_matrix(5, 3), TransferMatrix::identity(3));
  EXPECT_THROW(normalized_matrix(0, 3), usage_error);
}

TEST(NormalizedMatrix, IsOneMinusQjTimesTransfer) {
  for (std::size_t n = 0; n <= 20; ++n)
    for (std::size_t j = 1; j <= 22; ++j) {
      const auto m = transfer_matrix(j, n);
      const auto f = one_minus_q_pow(j, n);
      const auto h = normalized_matrix(j, n);
      for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b) ASSERT_EQ(f * m(a, b), h(a, b));
    }
}

TEST(ApplyMatrix, WorkedExampleAtOrderThree) {
  auto v = apply_matrix(StatePair::start(3), transfer_matrix(1, 3));
  EXPECT_EQ(v.f0, series(3, {1, 1, 1, 1}));
  EXPECT_EQ(v.f1, series(3, {0, 1, 1, 1}));
  v = apply_matrix(v, transfer_matrix(2, 3));
  EXPECT_EQ(v.f0, series(3, {1, 1, 2, 3}));
  EXPECT_EQ(v.f1, series(3, {0, 1, 2, 2}));
  v = apply_matrix(v, transfer_matrix(3, 3));
  EXPECT_EQ(v.f0, series(3, {1, 1, 2, 4}));
  EXPECT_EQ(v.f1, series(3, {0, 1, 2, 3}));
  EXPECT_EQ(v.total(), series(3, {1, 2, 4, 7}));
}

TEST(ApplyMatrix, OrderMismatch) {
  EXPECT_THROW(apply_matrix(StatePair::start(3), transfer_matrix(1, 4)), usage_error);
  EXPECT_THROW(StatePair(TruncatedSeries(1), TruncatedSeries(2)), usage_error);
}

TEST(MatrixProductGf, Examples) {
  EXPECT_EQ(matrix_product_gf(3), series(3, {1, 2, 4, 7}));
  EXPECT_EQ(matrix_product_gf(10), series(10, {1, 2, 4, 7, 12, 19, 31, 47, 72, 107, 157}));
  EXPECT_EQ(matrix_product_gf(0), series(0, {1}));
}

TEST(MatrixProductGf, MatchesBruteForceOracle) {
  const auto b = matrix_product_gf(20);
  for (std::size_t n = 0; n <= 20; ++n) EXPECT_EQ(b[n], Integer(oracle::block_separated(n))) << n;
}

TEST(MatrixProductGf, CutoffAtOrderIsSufficient) {
  for (std::size_t n : {0u, 1u, 5u, 17u, 50u})
    EXPECT_EQ(matrix_product_gf(n), transfer_product(StatePair::start(n), 2 * n).total());
}

TEST(MatrixProductGf, StartStateMatters) {
  const auto from_plain = transfer_product(StatePair::start(3), 3).total();
  const auto from_overlined =
      transfer_product(StatePair(TruncatedSeries::zero(3), TruncatedSeries::one(3)), 3).total();
  EXPECT_NE(from_plain, from_overlined);
}

TEST(MatrixProductGf, MonotoneAndSandwiched) {
  const std::size_t n = 120;
  const auto b = matrix_product_gf(n);
  const auto p = euler_inverse(n);
  const auto pbar = overpartition_product(n);
  for (std::size_t k = 0; k <= n; ++k) {
    if (k > 0) {
      EXPECT_GE(b[k], b[k - 1]);
    }
    EXPECT_LE(p[k], b[k]);
    EXPECT_LE(b[k], pbar[k]);
  }
}
