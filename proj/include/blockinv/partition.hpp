#pragma once

#include "blockinv/bigint.hpp"

#include <cstddef>
#include <vector>

namespace blockinv {

/// One ell-decomposition (t_0, ..., t_k) of t: sum t_i * ell^i == t with a
/// nonzero last entry. The decomposition of 0 is the empty tuple.
struct LDecomp {
  unsigned ell = 2;
  std::vector<unsigned> digits;

  unsigned long value() const;
  friend bool operator==(const LDecomp&, const LDecomp&) = default;
};

/// Ordered tuple (t_1, ..., t_s) of nonnegative integers.
using Split = std::vector<unsigned>;

/// Number of partitions of t, by the pentagonal-number recurrence. Values up
/// to the memo cap are kept in a process-wide table; larger arguments are
/// computed in a per-call table.
Nat partition_count(unsigned t);

/// pi(0), ..., pi(tmax).
std::vector<Nat> partition_counts(unsigned tmax);

void set_partition_memo_cap(unsigned cap);
unsigned partition_memo_cap();

/// k(s, t): number of s-multipartitions of t, the degree-t coefficient of
/// P(x)^s where P is the partition generating series.
Nat multipartition_count(const Nat& s, unsigned t);
Nat multipartition_count(unsigned long s, unsigned t);

/// k(s, 0), ..., k(s, tmax). s == 0 gives the series of the empty product.
std::vector<Nat> multipartition_row(const Nat& s, unsigned tmax);

/// All s-splits of t in lexicographic order.
std::vector<Split> enumerate_splits(unsigned s, unsigned t);

/// W_t in lexicographic order of digit vectors (t_0 first).
std::vector<LDecomp> enumerate_ell_decompositions(unsigned ell, unsigned t);

/// p_ell(t) via p(w) = sum_j p((w - (a_0 + ell*j)) / ell), independent of the
/// enumeration.
Nat ell_decomposition_count(unsigned ell, unsigned t);

/// ell-adic digits of w, least significant first. w == 0 gives no digits.
std::vector<unsigned> ell_adic_digits(unsigned ell, unsigned long w);

Nat binomial(unsigned long n, unsigned long k);

}  // namespace blockinv
