#pragma once

#include "blockinv/bigint.hpp"

#include <optional>
#include <string>
#include <vector>

namespace blockinv {

/// Extra additive exponent term r * sqrt(base^s).
struct SqrtTerm {
  Rat r;
  Rat s;
  friend bool operator==(const SqrtTerm&, const SqrtTerm&) = default;
};

/// coeff * base^(exponent [+ r * sqrt(base^s)]), coeff >= 0, base > 0.
/// base 1 encodes a plain rational constant. A rational base lets constants
/// such as 1.4^(n + 1.2) stay exact; log_3(r) summands in exponents are folded
/// into coeff.
struct BoundExpr {
  Rat coeff{1};
  Rat base{1};
  Rat exponent{0};
  std::optional<SqrtTerm> sqrt_term;

  static BoundExpr constant(const Rat& c);
  static BoundExpr power(const Rat& base, const Rat& exponent, const Rat& coeff = Rat(1));

  BoundExpr scaled(const Rat& c) const;
  bool has_sqrt() const { return sqrt_term.has_value(); }

  /// e.g. "19/18 * 3^(41/6)" or "3^(5 + sqrt(3^1))".
  std::string to_string() const;

  friend bool operator==(const BoundExpr&, const BoundExpr&) = default;
};

/// A finite sum of nonnegative terms.
using BoundSum = std::vector<BoundExpr>;

std::string to_string(const BoundSum& s);

enum class Verdict { Holds, Fails, Undecided };

const char* verdict_name(Verdict v);

/// Value of e as an exact rational, if it is one.
std::optional<Rat> exact_value(const BoundExpr& e);

/// Sign of x - y, or nullopt if the enclosures never separated up to
/// max_bits of working precision. Single terms without a square root are
/// compared exactly by raising both sides to a common exponent denominator;
/// sums whose terms are all rational are summed exactly; everything else is
/// decided with outward-rounded interval enclosures refined from 64 bits up
/// to max_bits.
std::optional<int> compare(const BoundSum& x, const BoundSum& y, unsigned max_bits = 1024);

/// n <= e and n >= e.
Verdict compare_le(const Rat& n, const BoundExpr& e, unsigned max_bits = 1024);
Verdict compare_ge(const Rat& n, const BoundExpr& e, unsigned max_bits = 1024);

/// Approximate log2 of the sum, for margin notes only.
double log2_approx(const BoundSum& s);

}  // namespace blockinv
