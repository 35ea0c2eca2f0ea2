#pragma once

#include "blockinv/bigint.hpp"

#include <optional>
#include <string>
#include <vector>

namespace blockinv {

/// Residue class of eps*q modulo 4; only meaningful for ell == 2.
enum class Case2 { NotApplicable, OnePlusFour, ThreeMod4 };

const char* case_name(Case2 c);

/// Parameters of the principal ell-block of GL_{wd}(eps*q).
///
/// ell == 2, OnePlusFour: a >= 2, atilde == 1.
/// ell == 2, ThreeMod4:   a == 1, atilde >= 2.
/// ell == 3:              d in {1, 2}, a >= 1, no atilde.
struct BlockParams {
  unsigned ell = 3;
  Case2 case2 = Case2::NotApplicable;
  unsigned a = 1;
  std::optional<unsigned> atilde;
  unsigned d = 1;
  unsigned w = 1;
  std::vector<unsigned> digits;  // ell-adic digits of w

  static BlockParams gl3(unsigned a, unsigned d, unsigned w);
  static BlockParams gl2_one_plus_four(unsigned a, unsigned w);
  static BlockParams gl2_three_mod_four(unsigned atilde, unsigned w);

  /// Throws DomainError if any invariant above is broken.
  void validate() const;

  /// Compact label, e.g. "ell=2 case=3mod4 a=1 atilde=3 w=8".
  std::string label() const;

  unsigned digit(std::size_t i) const { return i < digits.size() ? digits[i] : 0; }

  friend bool operator==(const BlockParams&, const BlockParams&) = default;
};

/// Multipartition parameters per level of the ell-adic decomposition sum:
/// level i uses head[i] while i < head.size(), tail_repeat afterwards.
struct LevelWeights {
  std::vector<Nat> head;
  Nat tail_repeat;

  const Nat& at(std::size_t level) const { return level < head.size() ? head[level] : tail_repeat; }
};

/// d, a, atilde and the mod-4 case from eps*q (signed), w = floor(n / d).
/// q must be coprime to ell; whether q is a prime power is not checked.
BlockParams derive_params(int epsilon, const Nat& q, unsigned long n, unsigned ell);

LevelWeights level_weights(const BlockParams& params);

/// sum over W_w of prod_i k(weights.at(i), w_i), via the recursion over the
/// lowest digit. F(0) == 1.
Nat weighted_decomposition_sum(unsigned ell, const LevelWeights& weights, unsigned w);

Nat k_B_gl2(const BlockParams& params);
Nat k_B_gl3(unsigned a, unsigned d, unsigned w);
Nat k_B(const BlockParams& params);

/// ell == 2: 2^{sum a_i (a + i)}; equals 2^{sum a_i (i + 1)} in the 3 mod 4
/// case where a == 1.
Nat k0_B_gl2(const BlockParams& params);
/// prod_{i >= 0} k(b * 3^i, a_i).
Nat k0_B_gl3(unsigned a, unsigned d, unsigned w);
Nat k0_B(const BlockParams& params);

/// Certified lower bound for l(B): k(d, w) for ell == 3, pi(w) for ell == 2,
/// never below p_ell(w).
Nat l_B_lower(const BlockParams& params);

/// b = d + (3^a - 1)/d and b_1 = 2 * 3^{a-1} / d.
Nat gl3_b(unsigned a, unsigned d);
Nat gl3_b1(unsigned a, unsigned d);

// --- unipotent 3-blocks of SL_n(eps*q) with 3 | q - eps ---------------------

struct SLParams {
  unsigned a = 1;
  unsigned w = 1;
  unsigned m = 0;      // 3^m = min(w_3, 3^a)
  unsigned delta = 0;  // 1 iff w is a power of 3 (3^0 included)
  std::vector<unsigned> digits;
};

SLParams sl_params(unsigned a, unsigned w);

/// The bound (k(3,a,1,w) + sum_{j=1}^m p_3(w/3^j) 3^{2j + aw/3^j}) / 3^a as an
/// exact rational.
Rat k_B_sl_upper_rat(unsigned a, unsigned w);
/// Ceiling of k_B_sl_upper_rat. Requires 3 | w.
Nat k_B_sl_upper(unsigned a, unsigned w);

/// (k(3^a, 3) + 3^{2+a} - 3^{a-1}) / 3^a; throws InternalError if inexact.
Nat k_B_sl_w3_exact(unsigned a);

/// k(B~)/3^a for 3 not dividing w; throws InternalError if inexact.
Nat k_B_sl_coprime(unsigned a, unsigned w);

/// Tabulated exact l(B) values for SL (currently a = 1, w = 3 -> 5).
std::optional<Nat> l_B_sl_exact(unsigned a, unsigned w);

}  // namespace blockinv
