#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "blockinv/block.hpp"
#include "blockinv/partition.hpp"
#include "oracles.hpp"

#include "blockinv/error.hpp"

#include <algorithm>
#include <random>

using namespace blockinv;

TEST_CASE("partition counts") {
  CHECK(partition_count(0) == 1);
  CHECK(partition_count(5) == 7);
  CHECK(partition_count(100) == Nat("190569292"));
  for (unsigned n = 0; n <= 60; ++n) CHECK(partition_count(n) == oracle::partitions(n));
  auto row = partition_counts(30);
  REQUIRE(row.size() == 31);
  for (unsigned n = 0; n <= 30; ++n) CHECK(row[n] == oracle::partitions(n));
}

TEST_CASE("partition counts past the memo cap") {
  const unsigned old = partition_memo_cap();
  set_partition_memo_cap(10);
  CHECK(partition_count(50) == Nat(204226));
  set_partition_memo_cap(old);
  CHECK(partition_count(50) == Nat(204226));
}

TEST_CASE("multipartitions against split enumeration") {
  for (unsigned s = 1; s <= 8; ++s)
    for (unsigned t = 0; t <= 12; ++t) {
      CAPTURE(s);
      CAPTURE(t);
      CHECK(multipartition_count(s, t) == oracle::multipartitions(s, t));
    }
}

TEST_CASE("multipartition small values") {
  CHECK(multipartition_count(1UL, 6) == 11);
  CHECK(multipartition_count(2UL, 2) == 5);
  CHECK(multipartition_count(3UL, 2) == 9);
  CHECK(multipartition_count(0UL, 0) == 1);
  CHECK(multipartition_count(0UL, 3) == 0);
  // k(s, 1) = s for a large s
  CHECK(multipartition_count(Nat("1000000000000"), 1) == Nat("1000000000000"));
  auto row = multipartition_row(Nat(3), 5);
  for (unsigned t = 0; t <= 5; ++t) CHECK(row[t] == oracle::multipartitions(3, t));
}

TEST_CASE("convolution recurrence k(s,t) = sum_j pi(j) k(s-1,t-j)") {
  for (unsigned long s = 2; s <= 40; s += 7)
    for (unsigned t = 0; t <= 25; ++t) {
      Nat sum = 0;
      for (unsigned j = 0; j <= t; ++j) sum += partition_count(j) * multipartition_count(s - 1, t - j);
      CHECK(multipartition_count(s, t) == sum);
    }
}

TEST_CASE("splits") {
  auto s = enumerate_splits(3, 2);
  REQUIRE(s.size() == 6);
  CHECK(s.front() == Split{0, 0, 2});
  CHECK(s.back() == Split{2, 0, 0});
  CHECK(enumerate_splits(1, 4) == std::vector<Split>{{4}});
  CHECK_THROWS_AS(enumerate_splits(0, 1), Error);
}

TEST_CASE("ell-decompositions against digit recursion") {
  for (unsigned ell : {2u, 3u})
    for (unsigned w = 0; w <= 80; ++w) {
      auto got = enumerate_ell_decompositions(ell, w);
      auto want = oracle::decompositions(ell, w);
      REQUIRE(got.size() == want.size());
      std::vector<std::vector<unsigned>> g;
      for (const auto& d : got) {
        CHECK(d.value() == w);
        g.push_back(d.digits);
      }
      std::sort(want.begin(), want.end(), [](const auto& x, const auto& y) {
        // lexicographic with t_0 first, shorter vectors padded by zeros
        const std::size_t n = std::max(x.size(), y.size());
        for (std::size_t i = 0; i < n; ++i) {
          unsigned a = i < x.size() ? x[i] : 0, b = i < y.size() ? y[i] : 0;
          if (a != b) return a < b;
        }
        return false;
      });
      CHECK(g == want);
      CHECK(ell_decomposition_count(ell, w) == Nat(static_cast<unsigned long>(want.size())));
    }
  CHECK(enumerate_ell_decompositions(3, 0).size() == 1);
  CHECK(enumerate_ell_decompositions(3, 0)[0].digits.empty());
  CHECK(ell_decomposition_count(3, 3) == 2);
  CHECK(ell_decomposition_count(3, 200) == Nat(static_cast<unsigned long>(oracle::decompositions(3, 200).size())));
  CHECK(ell_decomposition_count(2, 200) == Nat(static_cast<unsigned long>(oracle::decompositions(2, 200).size())));
}

TEST_CASE("adic digits and binomials") {
  CHECK(ell_adic_digits(3, 0).empty());
  CHECK(ell_adic_digits(3, 3) == std::vector<unsigned>{0, 1});
  CHECK(ell_adic_digits(3, 27) == std::vector<unsigned>{0, 0, 0, 1});
  CHECK(ell_adic_digits(2, 13) == std::vector<unsigned>{1, 0, 1, 1});
  CHECK(binomial(9, 6) == 84);
  CHECK(binomial(8, 5) == 56);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(3, 5) == 0);
}

TEST_CASE("weighted decomposition sums against brute force, 200 random instances") {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<unsigned> ell_d(2, 3), len_d(1, 4), weight_d(1, 9), w_d(0, 25);
  for (int n = 0; n < 200; ++n) {
    const unsigned ell = ell_d(rng), w = w_d(rng);
    std::vector<unsigned> weights(len_d(rng));
    for (auto& x : weights) x = weight_d(rng);
    LevelWeights lw;
    for (std::size_t i = 0; i + 1 < weights.size(); ++i) lw.head.push_back(Nat(weights[i]));
    lw.tail_repeat = weights.back();
    CAPTURE(ell);
    CAPTURE(w);
    CHECK(weighted_decomposition_sum(ell, lw, w) == oracle::weighted_sum(ell, weights, w));
  }
}
