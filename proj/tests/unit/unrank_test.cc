// Copyright 2026 The lambdagen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lambdagen/unrank.h"

#include <gtest/gtest.h>

#include <map>
#include <set>
#include <string>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

#include "lambdagen/errors.h"
#include "oracles.h"

namespace lambdagen {
namespace {

Term I(std::uint64_t i) { return Term::Index(i); }
Term L(const Term& body) { return Term::Abs(body); }

double ChiSquareQuantile(int dof, double p) {
  return boost::math::quantile(boost::math::chi_squared(dof), p);
}

TEST(UnrankPlain, Examples) {
  EXPECT_EQ(UnrankPlain(2, 1), I(1));
  EXPECT_EQ(UnrankPlain(6, 4), I(5));
  EXPECT_EQ(UnrankPlain(6, 1), L(L(I(1))));
}

TEST(UnrankPlain, RangeErrors) {
  EXPECT_THROW(UnrankPlain(6, 0), RangeError);
  EXPECT_THROW(UnrankPlain(6, 5), RangeError);
  EXPECT_THROW(UnrankPlain(0, 1), RangeError);
  EXPECT_THROW(UnrankBounded(0, 5, 1), RangeError);
}

TEST(RankPlain, Examples) {
  EXPECT_EQ(RankPlain(I(5)), 4);
  EXPECT_EQ(RankPlain(L(L(I(1)))), 1);
  EXPECT_EQ(RankPlain(I(1)), 1);
}

TEST(UnrankPlain, BijectionUpTo14) {
  for (std::size_t n = 0; n <= 14; ++n) {
    const BigNat total = CountPlain(n);
    std::set<Term> seen;
    for (BigNat k = 1; k <= total; ++k) {
      const Term t = UnrankPlain(n, k);
      EXPECT_EQ(TermSize(t), n);
      EXPECT_EQ(RankPlain(t), k);
      seen.insert(t);
    }
    EXPECT_EQ(seen.size(), total);
  }
}

TEST(UnrankPlain, RankOrderMatchesGrammarOrder) {
  for (int n = 2; n <= 13; ++n) {
    const auto& expected = oracle::AllTerms(n);
    for (std::size_t k = 1; k <= expected.size(); ++k) {
      EXPECT_EQ(PrintTerm(UnrankPlain(n, k)), oracle::Print(expected[k - 1]))
          << "n=" << n << " k=" << k;
    }
  }
}

TEST(RankPlain, LargeRandomTermsRoundtrip) {
  RandomState rng(11);
  for (std::size_t n : {50, 200, 1000}) {
    for (int i = 0; i < 5; ++i) {
      const Term t = RandomByRank(n, rng);
      EXPECT_EQ(TermSize(t), n);
      EXPECT_EQ(UnrankPlain(n, RankPlain(t)), t);
    }
  }
}

TEST(UnrankBounded, Examples) {
  EXPECT_EQ(UnrankBounded(0, 4, 1), L(I(1)));
  EXPECT_EQ(UnrankBounded(0, 6, 1), L(L(I(1))));
  for (std::size_t m : {7, 8, 50}) {
    for (BigNat k = 1; k <= CountPlain(8); ++k) {
      EXPECT_EQ(UnrankBounded(m, 8, k), UnrankPlain(8, k));
    }
  }
}

TEST(UnrankBounded, BijectionOntoBoundedTerms) {
  for (std::size_t m = 0; m <= 2; ++m) {
    for (std::size_t n = 0; n <= 12; ++n) {
      std::set<std::string> expected;
      for (const auto& t : oracle::AllTerms(n)) {
        if (oracle::Excess(t) <= static_cast<int>(m)) {
          expected.insert(oracle::Print(t));
        }
      }
      std::set<std::string> got;
      const BigNat total = CountBounded(m, n);
      for (BigNat k = 1; k <= total; ++k) {
        const Term t = UnrankBounded(m, n, k);
        EXPECT_LE(FreeIndexExcess(t), m);
        EXPECT_EQ(TermSize(t), n);
        got.insert(PrintTerm(t));
      }
      EXPECT_EQ(got, expected) << "m=" << m << " n=" << n;
    }
  }
}

TEST(Enumerate, Examples) {
  EXPECT_EQ(Enumerate(2), std::vector<Term>{I(1)});
  EXPECT_EQ(Enumerate(4), (std::vector<Term>{L(I(1)), I(3)}));
  const std::vector<Term> nine = Enumerate(9);
  EXPECT_EQ(std::set<Term>(nine.begin(), nine.end()).size(), 14u);
  EXPECT_THROW(Enumerate(17), CapExceededError);
  EXPECT_EQ(Enumerate(17, 17).size(), CountPlain(17));
}

TEST(Enumerate, AgreesWithUnrank) {
  for (std::size_t n = 0; n <= 14; ++n) {
    const std::vector<Term> all = Enumerate(n);
    ASSERT_EQ(all.size(), CountPlain(n));
    for (std::size_t k = 0; k < all.size(); ++k) {
      EXPECT_EQ(all[k], UnrankPlain(n, k + 1));
    }
  }
}

TEST(RandomByRank, Examples) {
  RandomState rng(3);
  EXPECT_EQ(RandomByRank(2, rng), I(1));
  EXPECT_THROW(RandomByRank(0, rng), DomainError);
  EXPECT_THROW(RandomByRank(1, rng), DomainError);
}

TEST(RandomByRank, UniformAtSizeNine) {
  RandomState rng(2024);
  constexpr int kDraws = 14000;
  std::map<BigNat, int> freq;
  for (int i = 0; i < kDraws; ++i) ++freq[RankPlain(RandomByRank(9, rng))];
  ASSERT_EQ(freq.size(), 14u);
  const double expected = kDraws / 14.0;
  double chi2 = 0;
  for (const auto& [rank, count] : freq) {
    EXPECT_NEAR(count, expected, 5 * std::sqrt(1000.0 * 13 / 14));
    chi2 += (count - expected) * (count - expected) / expected;
  }
  EXPECT_LT(chi2, ChiSquareQuantile(13, 0.999));
}

TEST(RandomState, UniformBelowIsUniformAndBounded) {
  RandomState rng(5);
  std::vector<int> freq(7);
  for (int i = 0; i < 70000; ++i) {
    const BigNat v = rng.UniformBelow(7);
    ASSERT_LT(v, 7);
    ++freq[static_cast<int>(v)];
  }
  double chi2 = 0;
  for (int c : freq) chi2 += (c - 10000.0) * (c - 10000.0) / 10000.0;
  EXPECT_LT(chi2, ChiSquareQuantile(6, 0.999));
  const BigNat huge = CountPlain(500);
  for (int i = 0; i < 100; ++i) EXPECT_LT(rng.UniformBelow(huge), huge);
}

TEST(RandomState, SameSeedSameStream) {
  RandomState a(99), b(99);
  for (int i = 0; i < 100; ++i) {
    const double u = a.Uniform();
    EXPECT_EQ(u, b.Uniform());
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

}  // namespace
}  // namespace lambdagen
