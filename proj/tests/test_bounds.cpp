#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "blockinv/bound_expr.hpp"
#include "blockinv/error.hpp"

#include <cmath>

using namespace blockinv;

namespace {

Rat q(long n, long d = 1) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

BoundSum one(BoundExpr e) { return {e}; }

}  // namespace

TEST_CASE("rationals compare exactly") {
  CHECK(compare(one(BoundExpr::constant(q(1, 3))), one(BoundExpr::constant(q(2, 6)))) == 0);
  CHECK(compare(one(BoundExpr::constant(q(1, 3))), one(BoundExpr::constant(q(1, 2)))) == -1);
  CHECK(*exact_value(BoundExpr::power(3, 2, q(1, 2))) == q(9, 2));
  CHECK(*exact_value(BoundExpr::power(2, -3)) == q(1, 8));
  CHECK_FALSE(exact_value(BoundExpr::power(2, q(1, 2))).has_value());
}

TEST_CASE("single powers compare exactly") {
  // 2^(1/2) < 3^(1/3) since 2^3 < 3^2
  CHECK(compare(one(BoundExpr::power(2, q(1, 2))), one(BoundExpr::power(3, q(1, 3)))) == -1);
  // 4^(1/2) = 2 exactly
  CHECK(compare(one(BoundExpr::power(4, q(1, 2))), one(BoundExpr::constant(2))) == 0);
  // 8^(1/3) = 2^1
  CHECK(compare(one(BoundExpr::power(8, q(1, 3))), one(BoundExpr::power(2, 1))) == 0);
  // 9 * 3^(-1/2) = 3^(3/2)
  CHECK(compare(one(BoundExpr::power(3, q(-1, 2), 9)), one(BoundExpr::power(3, q(3, 2)))) == 0);
  // rational base: 1.4^(n + 1.2)
  CHECK(compare(one(BoundExpr::constant(7)), one(BoundExpr::power(q(7, 5), q(5 + 6, 5)))) == 1);
  CHECK(compare(one(BoundExpr::power(q(7, 5), 2)), one(BoundExpr::constant(q(49, 25)))) == 0);
  // a huge exponent still decides
  CHECK(compare(one(BoundExpr::power(2, 4000)), one(BoundExpr::power(3, q(7571, 3)))) == 1);
}

TEST_CASE("sums and square-root exponents use enclosures") {
  BoundSum s = {BoundExpr::power(3, q(5, 2)), BoundExpr::power(3, q(1, 2))};
  // 3^2.5 + 3^0.5 = 10 sqrt 3 = sqrt 300 > 17
  CHECK(compare(s, one(BoundExpr::constant(17))) == 1);
  CHECK(compare(s, one(BoundExpr::constant(18))) == -1);
  BoundExpr e = BoundExpr::power(3, 5);
  e.sqrt_term = SqrtTerm{1, 1};  // 3^(5 + sqrt 3)
  const double v = std::pow(3.0, 5 + std::sqrt(3.0));
  CHECK(compare(one(e), one(BoundExpr::constant(Rat(static_cast<long>(v))))) == 1);
  CHECK(compare(one(e), one(BoundExpr::constant(Rat(static_cast<long>(v) + 1)))) == -1);
}

TEST_CASE("identical irrational values stay undecided") {
  BoundExpr e = BoundExpr::power(3, 0);
  e.sqrt_term = SqrtTerm{1, 1};
  BoundSum x = {e, BoundExpr::power(2, q(1, 2))};
  BoundSum y = {BoundExpr::power(2, q(1, 2)), e};
  CHECK_FALSE(compare(x, y, 256).has_value());
}

TEST_CASE("verdict helpers") {
  CHECK(compare_le(Rat(8), BoundExpr::power(2, 3)) == Verdict::Holds);
  CHECK(compare_le(Rat(9), BoundExpr::power(2, 3)) == Verdict::Fails);
  CHECK(compare_ge(Rat(2), BoundExpr::power(3, q(1, 2))) == Verdict::Holds);
  CHECK(std::string(verdict_name(Verdict::Undecided)) == "undecided");
}

TEST_CASE("text") {
  CHECK(BoundExpr::power(3, q(41, 6), q(19, 18)).to_string() == "19/18 * 3^(41/6)");
  CHECK(to_string(BoundSum{BoundExpr::constant(2), BoundExpr::power(2, 3)}) == "2 + 2^(3)");
  CHECK(std::abs(log2_approx(one(BoundExpr::power(2, 10))) - 10) < 1e-9);
}
