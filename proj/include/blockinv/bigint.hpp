#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace blockinv {

/// Arbitrary-precision nonnegative counts. Negative values never appear in
/// counting code; signed intermediates (e.g. the signed value of eps*q) are
/// carried in the same type.
using Nat = mpz_class;

/// Exact rationals, always kept canonical.
using Rat = mpq_class;

Nat pow_ui(unsigned long base, unsigned long exp);
Nat pow_nat(const Nat& base, unsigned long exp);
Rat pow_rat(const Rat& base, long exp);

/// Largest e with p^e | n. n must be nonzero.
unsigned long valuation(const Nat& n, unsigned long p);

bool is_power_of(unsigned long n, unsigned long p);

Nat floor_rat(const Rat& x);
Nat ceil_rat(const Rat& x);

std::string to_string(const Nat& n);
std::string to_string(const Rat& x);

/// Accepts "7", "-3", "47/20" and finite decimals such as "2.35" or "-0.8".
Rat parse_rat(std::string_view text);

/// Nearest double, for human-readable margins only; never used in decisions.
double approx(const Rat& x);

}  // namespace blockinv
