#include <gtest/gtest.h>

#include <cmath>

#include "dpl/arithmetic.hpp"
#include "dpl/curves.hpp"

using namespace dpl;

namespace {
constexpr auto k1 = ExceptionalCase::kOne;
constexpr auto k2 = ExceptionalCase::kTwo;
constexpr auto k3 = ExceptionalCase::kThree;
}  // namespace

TEST(Arithmetic, PrimePowers) {
  std::vector<std::int64_t> qs;
  for (const auto& p : prime_powers_up_to(10)) qs.push_back(p.q);
  EXPECT_EQ(qs, (std::vector<std::int64_t>{2, 3, 4, 5, 7, 8, 9}));
  EXPECT_EQ(prime_power(4).p, 2);
  EXPECT_EQ(prime_power(9).p, 3);
  EXPECT_EQ(prime_power(1024).k, 10);
  EXPECT_FALSE(is_prime_power(6));
  EXPECT_FALSE(is_prime_power(1));
  EXPECT_THROW(prime_power(12), ArithmeticError);
  EXPECT_THROW(prime_power(0), ArithmeticError);
}

TEST(Arithmetic, SurfacePointFloor) {
  EXPECT_EQ(min_surface_points(9, k1), 37);
  EXPECT_EQ(min_surface_points(9, k2), 46);
  EXPECT_EQ(min_surface_points(4, k3), 17);
}

TEST(Arithmetic, RamificationCeiling) {
  EXPECT_EQ(ramification_point_bound(9, k1, false).ceil(), 23);
  EXPECT_EQ(ramification_point_bound(8, k2, true).ceil(), 17);
  EXPECT_EQ(ramification_point_bound(4, k3, true).ceil(), 9);
  EXPECT_EQ(ramification_point_bound(9, k1, false).str(), "23");
  EXPECT_EQ(ramification_point_bound(7, k1, false).str(), "9+4*sqrt(7)");
  EXPECT_THROW(ramification_point_bound(9, k1, true), ArithmeticError);
  EXPECT_THROW(ramification_point_bound(8, k1, false), ArithmeticError);
}

TEST(Arithmetic, ExactSquareRootCeiling) {
  // ceil(4 sqrt(q)) against a wide float check away from integers
  for (std::int64_t q = 2; q < 5000; ++q) {
    const SqrtBound b{0, 4, q};
    const double f = 4.0 * std::sqrt(static_cast<double>(q));
    if (std::abs(f - std::round(f)) > 1e-6) EXPECT_EQ(b.ceil(), static_cast<std::int64_t>(std::ceil(f))) << q;
  }
  EXPECT_EQ((SqrtBound{1, 4, 9}).ceil(), 13);
}

TEST(Arithmetic, Waypoints) {
  EXPECT_EQ(off_ramification_lower_bound(9, k1, false), 14);
  EXPECT_EQ(off_ramification_lower_bound(16, k1, true), 144);
  EXPECT_EQ(off_ramification_lower_bound(9, k2, false), 24);
  EXPECT_EQ(off_ramification_lower_bound(8, k2, true), 16);
  EXPECT_EQ(off_ramification_lower_bound(5, k3, false), 14);
  EXPECT_EQ(off_ramification_lower_bound(4, k3, true), 8);
}

TEST(Arithmetic, RequiredPointsFromFreeCurves) {
  EXPECT_EQ(required_point_count(k1), 9);
  EXPECT_EQ(required_point_count(k2), 6);
  EXPECT_EQ(required_point_count(k3), 3);
  const std::vector<std::pair<ExceptionalCase, Configuration>> reps = {
      {k1, registry_representative("A1")},
      {k2, registry_representative("A2", "", {}, {true})},
      {k3, registry_representative("4A1", "no-tri-curve", {{0, 1, 2, 3}})}};
  for (const auto& [c, cfg] : reps)
    EXPECT_EQ(required_point_count(c), static_cast<int>(free_minus1_curves(cfg).size()) / 4 + 1);
}

TEST(Arithmetic, Thresholds) {
  const std::vector<std::tuple<ExceptionalCase, std::int64_t, std::int64_t>> want = {{k1, 9, 8}, {k2, 8, 7}, {k3, 4, 3}};
  for (const auto& [c, q0, fail] : want) {
    const auto t = unirationality_threshold(c, 20000);
    EXPECT_EQ(t.q0, q0);
    EXPECT_EQ(t.last_failure, fail);
    EXPECT_TRUE(t.monotone);
    EXPECT_LT(off_ramification_lower_bound(fail, c), required_point_count(c));
  }
  // the odd branch alone would need q >= 9 in case 2; q = 8 passes in char 2
  EXPECT_LT(off_ramification_lower_bound(7, k2), 6);
  EXPECT_GE(off_ramification_lower_bound(8, k2), 6);
}

TEST(Arithmetic, TableRows) {
  const auto rows = arithmetic_table(k3, 10);
  ASSERT_EQ(rows.size(), 7u);
  EXPECT_EQ(rows[2].q.q, 4);
  EXPECT_EQ(rows[2].min_x, 17);
  EXPECT_EQ(rows[2].min_off_r, 8);
  EXPECT_TRUE(rows[2].ok);
  EXPECT_FALSE(rows[1].ok);
}

TEST(Arithmetic, CaseParsing) {
  EXPECT_EQ(parse_case("2"), k2);
  EXPECT_THROW(parse_case("4"), ArithmeticError);
  EXPECT_EQ(arithmetic_case(k1).min_trace, -4);
  EXPECT_EQ(arithmetic_case(k3).min_trace, 0);
}
