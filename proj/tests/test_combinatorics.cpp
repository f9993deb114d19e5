#include <gtest/gtest.h>

#include "oracles/brute_force.hpp"
#include "szego/combinatorics.hpp"

using namespace szego;

TEST(MultiIndex, StatisticsAndFormat) {
  const auto p = MultiIndex::parse("1:2,3:1");
  EXPECT_EQ(p.degree(), 5);
  EXPECT_EQ(p.size(), 3);
  EXPECT_EQ(p.length(), 2);
  EXPECT_EQ(p.to_string(), "1:2,3:1");
  EXPECT_EQ(MultiIndex::parse(""), MultiIndex());
  EXPECT_EQ(MultiplicityVector::parse("0:1,2:1")[0], 1);
}

TEST(MultiIndex, ParseErrorsNameToken) {
  for (const char* bad : {"1:1,1:2", "2:1,1:1", "0:1", "1:0", "1", "a:1", "1:1,"}) {
    try {
      MultiIndex::parse(bad);
      FAIL() << bad;
    } catch (const ParseError& e) {
      EXPECT_NE(std::string(e.what()).find('\''), std::string::npos) << e.what();
    }
  }
  EXPECT_THROW(MultiplicityVector::parse("-1:1"), ParseError);
}

TEST(Partitions, Counts) {
  const int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
  for (int d = 0; d <= 12; ++d) EXPECT_EQ(partitions(d).size(), static_cast<std::size_t>(expected[d])) << d;
}

TEST(Partitions, OrderAndContents) {
  const auto p3 = partitions(3);
  ASSERT_EQ(p3.size(), 3u);
  EXPECT_EQ(p3[0], MultiIndex::parse("1:3"));
  EXPECT_EQ(p3[1], MultiIndex::parse("1:1,2:1"));
  EXPECT_EQ(p3[2], MultiIndex::parse("3:1"));
  EXPECT_EQ(partitions(0), std::vector<MultiIndex>{MultiIndex()});
  for (const auto& L : partitions(9)) EXPECT_EQ(L.degree(), 9);
}

TEST(HaarWeight, Values) {
  EXPECT_EQ(haar_weight(MultiIndex::parse("1:5")), Rat(1, 120));
  EXPECT_EQ(haar_weight(MultiIndex::parse("5:1")), Rat(1, 5));
}

TEST(HaarWeight, SumsToOneAndOddHalf) {
  for (int d = 0; d <= 12; ++d) {
    Rat total(0), odd(0);
    for (const auto& L : partitions(d)) {
      total += haar_weight(L);
      if (L.size() % 2) odd += haar_weight(L);
    }
    EXPECT_EQ(total, Rat(1)) << d;
    if (d >= 2) EXPECT_EQ(odd, Rat(1, 2)) << d;
  }
}

TEST(FWeight, Examples) {
  for (const auto& L : partitions(6)) EXPECT_EQ(f_weight(MultiIndex::delta(6), L), 1);
  EXPECT_EQ(f_weight(MultiIndex::parse("1:1,2:1"), MultiIndex::parse("1:3")), 3);
  EXPECT_EQ(f_weight(MultiIndex::parse("1:2"), MultiIndex::parse("2:1")), 0);
  EXPECT_EQ(f_weight(MultiIndex::parse("1:2"), MultiIndex::parse("1:3")), 0);
}

TEST(FWeight, MatchesDirectDecompositionSum) {
  for (int d = 1; d <= 6; ++d) {
    for (const auto& p : partitions(d)) {
      std::map<MultiIndex, BigInt> direct;
      for (const auto& dec : decompositions(p)) {
        const MultiIndex L = dec.total();
        BigInt num(1), den(1);
        for (const auto& [u, c] : L.entries()) num *= factorial(static_cast<unsigned long>(c));
        for (const auto& part : dec.parts)
          for (const auto& [u, c] : part.J.entries()) den *= factorial(static_cast<unsigned long>(c));
        direct[L] += num / den;
      }
      for (const auto& L : partitions(d)) {
        EXPECT_EQ(f_weight(p, L), direct.count(L) ? direct[L] : BigInt(0)) << p << " " << L;
      }
    }
  }
}

TEST(FWeight, SupportConstraint) {
  for (int d = 1; d <= 7; ++d)
    for (const auto& p : partitions(d))
      for (const auto& L : partitions(d))
        if (L.max_support() > p.max_support()) EXPECT_EQ(f_weight(p, L), 0) << p << " " << L;
}

TEST(GapSequences, Examples) {
  const auto g1 = gap_sequences(1, 3);
  ASSERT_EQ(g1.size(), 3u);
  EXPECT_EQ(g1[0].pairs, (std::vector<std::pair<int, int>>{{1, 0}}));
  EXPECT_EQ(g1[1].pairs, (std::vector<std::pair<int, int>>{{2, 1}}));
  EXPECT_EQ(g1[2].pairs, (std::vector<std::pair<int, int>>{{3, 2}}));
  const auto g2 = gap_sequences(2, 3);
  ASSERT_EQ(g2.size(), 3u);
  EXPECT_EQ(g2[0].pairs, (std::vector<std::pair<int, int>>{{2, 0}}));
  EXPECT_EQ(g2[1].pairs, (std::vector<std::pair<int, int>>{{3, 1}}));
  EXPECT_EQ(g2[2].pairs, (std::vector<std::pair<int, int>>{{3, 2}, {1, 0}}));
  EXPECT_TRUE(gap_sequences(1, 0).empty());
  EXPECT_THROW(gap_sequences(0, 3), std::invalid_argument);
}

TEST(GapSequences, MatchNaiveEnumerationAndAreSorted) {
  for (int n = 1; n <= 5; ++n) {
    for (int N = 0; N <= 9; ++N) {
      const auto got = gap_sequences(n, N);
      std::vector<oracle::Pairs> flat;
      for (const auto& g : got) {
        EXPECT_TRUE(g.valid());
        EXPECT_EQ(g.degree(), n);
        flat.push_back(g.pairs);
      }
      EXPECT_TRUE(std::is_sorted(got.begin(), got.end()));
      std::sort(flat.begin(), flat.end());
      EXPECT_EQ(flat, oracle::naive_gap_sequences(n, N)) << n << " " << N;
    }
  }
}

TEST(GapSequences, MonotoneInMaxIndex) {
  for (int N = 1; N <= 8; ++N) {
    const auto small = gap_sequences(3, N - 1);
    const auto big = gap_sequences(3, N);
    for (const auto& g : small) EXPECT_NE(std::find(big.begin(), big.end(), g), big.end());
  }
}
