#include <mclift/linalg.hpp>
#include <mclift/rational.hpp>

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace mclift;

namespace {

linalg::RationalMatrix from_dense(const oracle::Dense& d, std::size_t cols) {
  linalg::RationalMatrix m(d.size(), cols);
  for (std::size_t r = 0; r < d.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = d[r][c];
  return m;
}

oracle::Dense random_dense(std::mt19937& rng, std::size_t rows, std::size_t cols, int zero_bias) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 5);
  std::uniform_int_distribution<int> coin(0, 9);
  oracle::Dense d(rows, std::vector<Rational>(cols, Rational(0)));
  for (auto& row : d)
    for (auto& x : row)
      if (coin(rng) >= zero_bias) x = make_rational(num(rng), den(rng));
  return d;
}

}  // namespace

TEST(Rational, ParsesGrammar) {
  EXPECT_EQ(*parse_rational("-1"), Rational(-1));
  EXPECT_EQ(*parse_rational("1/3"), make_rational(1, 3));
  EXPECT_EQ(*parse_rational("-2/4"), make_rational(-1, 2));
  EXPECT_EQ(parse_rational("2/4")->get_str(), "1/2");
  EXPECT_FALSE(parse_rational("1/0"));
  EXPECT_FALSE(parse_rational("1/-3"));
  EXPECT_FALSE(parse_rational("+1"));
  EXPECT_FALSE(parse_rational("1.5"));
  EXPECT_FALSE(parse_rational(""));
  EXPECT_FALSE(parse_rational("-"));
  EXPECT_FALSE(parse_rational("3/"));
}

TEST(Rational, MakeRationalIsCanonical) {
  Rational q = make_rational(6, -4);
  EXPECT_EQ(q.get_num(), -3);
  EXPECT_EQ(q.get_den(), 2);
}

TEST(Linalg, NullSpaceOfKnownMatrix) {
  linalg::RationalMatrix m(2, 3);
  m(0, 0) = 1; m(0, 1) = 2; m(0, 2) = 3;
  m(1, 0) = 2; m(1, 1) = 4; m(1, 2) = 6;
  auto k = linalg::null_space(m);
  ASSERT_EQ(k.size(), 2u);
  // free columns 1 and 2, in column order
  EXPECT_EQ(k[0], (linalg::Vector{-2, 1, 0}));
  EXPECT_EQ(k[1], (linalg::Vector{-3, 0, 1}));
}

TEST(Linalg, MatchesGaussJordanOracleOnRandomMatrices) {
  std::mt19937 rng(20241018);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 7;
    const std::size_t cols = 1 + rng() % 8;
    auto d = random_dense(rng, rows, cols, static_cast<int>(rng() % 8));
    const auto m = from_dense(d, cols);
    const auto kernel = linalg::null_space(m);
    const auto expected = oracle::null_space(d, cols);
    ASSERT_EQ(linalg::rank(m), oracle::rank(d));
    ASSERT_EQ(kernel.size(), expected.size());
    // identical reduced-echelon normal form, not just the same span
    EXPECT_EQ(kernel, expected);
    for (const auto& v : kernel)
      for (std::size_t r = 0; r < rows; ++r) {
        Rational sum = 0;
        for (std::size_t c = 0; c < cols; ++c) sum += d[r][c] * v[c];
        EXPECT_EQ(sum, 0);
      }
  }
}

TEST(Linalg, SolveReportsConsistencyAndNullity) {
  linalg::RationalMatrix a(2, 2);
  a(0, 0) = 1; a(0, 1) = 1;
  a(1, 0) = 2; a(1, 1) = 2;
  std::vector<Rational> ok{3, 6};
  std::vector<Rational> bad{3, 7};
  auto s1 = linalg::solve(a, ok);
  EXPECT_TRUE(s1.consistent);
  EXPECT_EQ(s1.nullity, 1u);
  EXPECT_EQ(s1.particular[0] + s1.particular[1], 3);
  EXPECT_FALSE(linalg::solve(a, bad).consistent);

  linalg::RationalMatrix b(2, 2);
  b(0, 0) = 2; b(0, 1) = 1;
  b(1, 0) = 1; b(1, 1) = 3;
  std::vector<Rational> rhs{make_rational(1, 2), 0};
  auto s2 = linalg::solve(b, rhs);
  ASSERT_TRUE(s2.consistent);
  EXPECT_EQ(s2.nullity, 0u);
  EXPECT_EQ(s2.particular[0], make_rational(3, 10));
  EXPECT_EQ(s2.particular[1], make_rational(-1, 10));
}

TEST(Linalg, EmptyShapes) {
  linalg::RationalMatrix none(0, 3);
  EXPECT_EQ(linalg::null_space(none).size(), 3u);
  EXPECT_EQ(linalg::rank(none), 0u);
}
