// Copyright 2026 The rdvlp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rendezvous/rational.h"

#include <gtest/gtest.h>

#include <cstdint>
#include <limits>
#include <random>

namespace rendezvous {
namespace {

TEST(RationalTest, CanonicalForm) {
  EXPECT_EQ(Rational(6, -4).ToString(), "-3/2");
  EXPECT_EQ(Rational(0, -7).ToString(), "0");
  EXPECT_EQ(Rational(10, 5).ToString(), "2");
  EXPECT_THROW(Rational(1, 0), RationalError);
}

TEST(RationalTest, Parse) {
  EXPECT_EQ(Rational::Parse("68/9"), Rational(68, 9));
  EXPECT_EQ(Rational::Parse("-3/6"), Rational(-1, 2));
  EXPECT_EQ(Rational::Parse("0.618"), Rational(618, 1000));
  EXPECT_EQ(Rational::Parse("1e-3"), Rational(1, 1000));
  EXPECT_EQ(Rational::Parse("17"), Rational(17));
  EXPECT_EQ(Rational::Parse("007/2"), Rational(7, 2));
  EXPECT_THROW(Rational::Parse("1/0"), RationalError);
  EXPECT_THROW(Rational::Parse("abc"), RationalError);
  EXPECT_THROW(Rational::Parse(""), RationalError);
}

TEST(RationalTest, Decimal) {
  EXPECT_EQ(Rational(13, 8).ToDecimal(), "1.625");
  EXPECT_EQ(Rational(68, 9).ToDecimal(), "7.55555555556");
  EXPECT_EQ(Rational(-2, 3).ToDecimal(4), "-0.6667");
  EXPECT_EQ(Rational(0).ToDecimal(), "0");
}

// Exact reference: every operation is compared with GMP's mpq_class, which
// does not share the int64 fast path.
TEST(RationalTest, MatchesGmpOnRandomOperands) {
  std::mt19937_64 rng(12345);
  const int64_t big = std::numeric_limits<int64_t>::max();
  std::vector<int64_t> pool = {0, 1, -1, 2, 3, big, -big, big - 1, 1LL << 62,
                               -(1LL << 62), 1LL << 32, 999999937};
  auto draw = [&]() -> int64_t {
    if (rng() % 3 == 0) return pool[rng() % pool.size()];
    return static_cast<int64_t>(rng() >> (rng() % 64));
  };
  for (int iter = 0; iter < 20000; ++iter) {
    int64_t an = draw(), ad = draw(), bn = draw(), bd = draw();
    if (ad == 0) ad = 1;
    if (bd == 0) bd = 1;
    Rational a(an, ad), b(bn, bd);
    mpq_class qa(mpz_class(std::to_string(an)), mpz_class(std::to_string(ad)));
    mpq_class qb(mpz_class(std::to_string(bn)), mpz_class(std::to_string(bd)));
    qa.canonicalize();
    qb.canonicalize();
    ASSERT_EQ(a.to_mpq(), qa);
    ASSERT_EQ((a + b).to_mpq(), mpq_class(qa + qb));
    ASSERT_EQ((a - b).to_mpq(), mpq_class(qa - qb));
    ASSERT_EQ((a * b).to_mpq(), mpq_class(qa * qb));
    if (!b.is_zero()) ASSERT_EQ((a / b).to_mpq(), mpq_class(qa / qb));
    ASSERT_EQ(a < b, qa < qb);
    ASSERT_EQ(a == b, qa == qb);
    // Round trip through the big representation and back.
    Rational c = (a * b) / (b.is_zero() ? Rational(1) : b);
    if (!b.is_zero()) ASSERT_EQ(c, a);
    ASSERT_EQ(Rational::Parse((a + b).ToString()), a + b);
  }
}

TEST(RationalTest, HashAgreesWithEquality) {
  const Rational huge = Rational(1LL << 62) * Rational(1LL << 62);
  const Rational back = huge / Rational(1LL << 62);
  EXPECT_EQ(back, Rational(1LL << 62));
  EXPECT_EQ(back.Hash(), Rational(1LL << 62).Hash());
}

}  // namespace
}  // namespace rendezvous
