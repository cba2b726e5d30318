#include "tau2/closed_form.hpp"

#include <gtest/gtest.h>

#include <thread>

#include "support/dvv_oracle.hpp"

namespace tau2 {
namespace {

ExactRational q(long p, long d) { return make_rational(p, d); }

TEST(DifferenceTest, Values) {
  EXPECT_EQ(b_value(1, 0), q(-2, 5));
  EXPECT_EQ(b_value(2, 0), q(-2, 11));
  EXPECT_EQ(b_value(2, 1), q(2, 33));
}

TEST(DifferenceTest, DomainIsEnforced) {
  EXPECT_THROW(b_value(1, 1), RangeError);
  EXPECT_THROW(b_value(2, 2), RangeError);
  EXPECT_THROW(b_value(2, -1), RangeError);
  EXPECT_THROW(b_value(0, 0), RangeError);
  EXPECT_NO_THROW(b_value(30, half_range(30) - 1));
}

TEST(DifferenceTest, SignPattern) {
  for (long g = 1; g <= 50; ++g) {
    for (long k = 0; in_difference_domain(g, k); ++k) {
      const int sign = sgn(b_value(g, k));
      switch (k % 3) {
        case 2: {
          const long j = (k + 1) / 3;
          ASSERT_EQ(sign, (g > 2 * j) - (g < 2 * j)) << g << ',' << k;
          break;
        }
        case 0: ASSERT_LT(sign, 0) << g << ',' << k; break;
        default: ASSERT_GT(sign, 0) << g << ',' << k; break;
      }
    }
  }
}

TEST(NormalizedTest, Values) {
  for (long g = 1; g <= 3; ++g) EXPECT_EQ(a_closed(g, 0), 1);
  EXPECT_EQ(a_closed(2, 1), q(9, 11));
  EXPECT_EQ(a_closed(2, 2), q(29, 33));
  EXPECT_EQ(a_closed(1, 1), q(3, 5));
  EXPECT_EQ(a_closed(2, 5), 1);
  EXPECT_THROW(a_closed(2, 6), RangeError);
  EXPECT_THROW(a_closed(0, 0), RangeError);
}

TEST(NormalizedTest, RowMatchesPointwise) {
  for (long g = 1; g <= 12; ++g) {
    const auto row = a_closed_row(g);
    ASSERT_EQ(static_cast<long>(row.size()), row_size(g));
    for (long k = 0; k < row_size(g); ++k) ASSERT_EQ(row[k], a_closed(g, k));
  }
}

TEST(NormalizedTest, Telescoping) {
  for (long g = 1; g <= 30; ++g) {
    for (long k = 0; in_difference_domain(g, k); ++k) {
      ASSERT_EQ(a_closed(g, k + 1) - a_closed(g, k), b_value(g, k)) << g << ',' << k;
    }
  }
}

TEST(NormalizedTest, SecondValue) {
  for (long g = 1; g <= 100; ++g) ASSERT_EQ(a_closed(g, 1), q(6 * g - 3, 6 * g - 1)) << g;
}

TEST(NormalizedTest, Symmetry) {
  for (long g = 1; g <= 30; ++g) {
    const auto row = a_closed_row(g);
    for (long k = 0; k < row_size(g); ++k) ASSERT_EQ(row[k], a_closed(g, 3 * g - 1 - k));
  }
}

TEST(NormalizedTest, StrictBounds) {
  for (long g = 2; g <= 30; ++g) {
    const auto row = a_closed_row(g);
    for (long k = 2; k <= 3 * g - 3; ++k) {
      ASSERT_GT(row[k], q(6 * g - 3, 6 * g - 1)) << g << ',' << k;
      ASSERT_LT(row[k], 1) << g << ',' << k;
    }
  }
}

TEST(NormalizeTest, Values) {
  EXPECT_EQ(normalize(2, 0, q(1, 1152)), 1);
  EXPECT_EQ(normalize(2, 2, q(29, 5760)), q(29, 33));
  EXPECT_EQ(normalize(1, 1, q(1, 24)), q(3, 5));
  EXPECT_EQ(denormalize(2, 2, q(29, 33)), q(29, 5760));
}

TEST(ClosedCorrelatorTest, Values) {
  EXPECT_EQ(two_point_closed(2, 0), q(1, 1152));
  EXPECT_EQ(two_point_closed(2, 2), q(29, 5760));
  EXPECT_EQ(two_point_closed(1, 1), q(1, 24));
  EXPECT_EQ(two_point_closed(1, 2), q(1, 24));
}

TEST(ClosedCorrelatorTest, RoundTripThroughNormalization) {
  for (long g = 1; g <= 20; ++g) {
    const auto row = two_point_closed_row(g);
    for (long k = 0; k < row_size(g); ++k) {
      ASSERT_EQ(row[k], two_point_closed(g, k));
      ASSERT_EQ(normalize(g, k, row[k]), a_closed(g, k));
    }
  }
}

TEST(ClosedCorrelatorTest, MatchesDvvOracle) {
  testing::DvvOracle oracle;
  for (long g = 1; g <= 6; ++g) {
    for (long k = 0; k < row_size(g); ++k) ASSERT_EQ(two_point_closed(g, k), oracle({k, 3 * g - 1 - k}));
  }
}

TEST(ClosedCorrelatorTest, ConcurrentRowsAgree) {
  // Threads race to grow the shared factorial memos from different genera.
  std::vector<std::vector<ExactRational>> rows(4);
  std::vector<std::thread> workers;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    workers.emplace_back([&rows, i] { rows[i] = two_point_closed_row(150 + static_cast<long>(i) * 10); });
  }
  for (auto& w : workers) w.join();
  for (std::size_t i = 0; i < rows.size(); ++i) EXPECT_EQ(rows[i], two_point_closed_row(150 + static_cast<long>(i) * 10));
}

}  // namespace
}  // namespace tau2
