#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "blockinv/block.hpp"
#include "blockinv/error.hpp"
#include "blockinv/partition.hpp"
#include "oracles.hpp"

using namespace blockinv;

namespace {

unsigned pw(unsigned b, unsigned e) {
  unsigned r = 1;
  while (e--) r *= b;
  return r;
}

// weights per level straight from the generic formula
std::vector<unsigned> gl3_weights(unsigned a, unsigned d) { return {d + (pw(3, a) - 1) / d, (pw(3, a) - pw(3, a - 1)) / d}; }

std::vector<unsigned> gl2_weights(unsigned a, unsigned at) {
  return {pw(2, a), pw(2, a + at - 1) - pw(2, a - 1), pw(2, a + at - 2)};
}

}  // namespace

TEST_CASE("golden values") {
  CHECK(k_B_gl3(1, 1, 3) == 24);
  CHECK(k_B_gl3(1, 1, 6) == 270);
  CHECK(k_B_gl3(1, 1, 9) == 2043);
  CHECK(k_B(BlockParams::gl2_one_plus_four(3, 2)) == 48);
  const std::pair<unsigned, unsigned> t3[] = {{1, 2}, {2, 12}, {4, 94}, {8, 2908}};
  for (auto [w, k] : t3) CHECK(k_B(BlockParams::gl2_three_mod_four(3, w)) == k);
  const std::pair<unsigned, unsigned> t2[] = {{1, 2}, {2, 8}, {3, 16}};
  for (auto [w, k] : t2) CHECK(k_B(BlockParams::gl2_three_mod_four(2, w)) == k);
  CHECK(k0_B_gl3(1, 1, 3) == 9);
  CHECK(k0_B_gl3(1, 1, 6) == 54);
  CHECK(k0_B_gl3(1, 1, 9) == 27);
}

TEST_CASE("k(B) against decomposition enumeration") {
  for (unsigned a = 1; a <= 3; ++a)
    for (unsigned d = 1; d <= 2; ++d)
      for (unsigned w = 1; w <= 14; ++w) {
        CAPTURE(a);
        CAPTURE(d);
        CAPTURE(w);
        CHECK(k_B_gl3(a, d, w) == oracle::weighted_sum(3, gl3_weights(a, d), w));
      }
  for (unsigned a = 2; a <= 4; ++a)
    for (unsigned w = 1; w <= 12; ++w)
      CHECK(k_B(BlockParams::gl2_one_plus_four(a, w)) == oracle::weighted_sum(2, gl2_weights(a, 1), w));
  for (unsigned at = 2; at <= 4; ++at)
    for (unsigned w = 1; w <= 12; ++w)
      CHECK(k_B(BlockParams::gl2_three_mod_four(at, w)) == oracle::weighted_sum(2, gl2_weights(1, at), w));
}

TEST_CASE("k0(B) as a product over the digits") {
  // a = 1, d = 1: k0(B) = k(3, a_0) prod_{i>=1} k(3^{i+1}, a_i)
  for (unsigned w = 1; w <= 40; ++w) {
    const auto A = ell_adic_digits(3, w);
    Nat want = oracle::multipartitions(3, A[0]);
    for (std::size_t i = 1; i < A.size(); ++i) want *= oracle::multipartitions(pw(3, i + 1), A[i]);
    CAPTURE(w);
    CHECK(k0_B_gl3(1, 1, w) == want);
  }
  for (unsigned a = 1; a <= 3; ++a)
    for (unsigned d = 1; d <= 2; ++d)
      for (unsigned w = 1; w <= 30; ++w) CHECK(k0_B_gl3(a, d, w) <= k_B_gl3(a, d, w));
  // 2^{sum a_i (i + 1)} in the 3 mod 4 case
  for (unsigned w = 1; w <= 30; ++w) {
    const auto A = ell_adic_digits(2, w);
    unsigned long e = 0;
    for (std::size_t i = 0; i < A.size(); ++i) e += A[i] * (i + 1);
    CHECK(k0_B(BlockParams::gl2_three_mod_four(3, w)) == pow_ui(2, e));
  }
}

TEST_CASE("l(B) lower bound") {
  for (unsigned w = 1; w <= 30; ++w) {
    CHECK(l_B_lower(BlockParams::gl3(1, 1, w)) >= partition_count(w));
    CHECK(l_B_lower(BlockParams::gl3(2, 2, w)) >= multipartition_count(2UL, w));
  }
}

TEST_CASE("parameters from q and n") {
  auto p = derive_params(1, Nat(4), 9, 3);
  CHECK(p.a == 1);
  CHECK(p.d == 1);
  CHECK(p.w == 9);
  p = derive_params(1, Nat(2), 10, 3);  // 2 = -1 mod 3, 2^2 - 1 = 3
  CHECK(p.d == 2);
  CHECK(p.a == 1);
  CHECK(p.w == 5);
  p = derive_params(-1, Nat(2), 6, 3);  // eps q = -2 = 1 mod 3, -3
  CHECK(p.d == 1);
  CHECK(p.a == 1);
  p = derive_params(1, Nat(5), 4, 2);
  CHECK(p.case2 == Case2::OnePlusFour);
  CHECK(p.a == 2);
  p = derive_params(1, Nat(7), 4, 2);
  CHECK(p.case2 == Case2::ThreeMod4);
  CHECK(p.a == 1);
  CHECK(*p.atilde == 3);
  CHECK_THROWS_AS(derive_params(1, Nat(9), 3, 3), DomainError);
  CHECK_THROWS_AS(derive_params(2, Nat(5), 3, 3), DomainError);
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(BlockParams::gl3(0, 1, 3), DomainError);
  CHECK_THROWS_AS(BlockParams::gl3(1, 3, 3), DomainError);
  CHECK_THROWS_AS(BlockParams::gl2_one_plus_four(1, 3), DomainError);
  CHECK_THROWS_AS(BlockParams::gl2_three_mod_four(1, 3), DomainError);
}

TEST_CASE("SL quantities") {
  auto sp = sl_params(2, 27);
  CHECK(sp.m == 2);
  CHECK(sp.delta == 1);
  CHECK(sl_params(1, 1).delta == 1);  // 3^0
  CHECK(sl_params(3, 6).m == 1);
  CHECK(sl_params(3, 6).delta == 0);
  CHECK(k_B_sl_w3_exact(1) == 16);
  CHECK(k_B_sl_upper(1, 6) == 117);
  CHECK(k_B_sl_upper(1, 9) == 843);
  // the same bound with b_1 = 1 would give ceil(2234/3) = 745
  CHECK(oracle::weighted_sum(3, {3, 1}, 9) == 1748);
  CHECK(*l_B_sl_exact(1, 3) == 5);
  for (unsigned a = 1; a <= 3; ++a)
    for (unsigned w = 1; w <= 20; ++w)
      if (w % 3) CHECK(k_B_sl_coprime(a, w) * pow_ui(3, a) == k_B_gl3(a, 1, w));
  CHECK_THROWS_AS(k_B_sl_upper_rat(1, 4), DomainError);
}
