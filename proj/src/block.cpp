#include "blockinv/block.hpp"

#include "blockinv/error.hpp"
#include "blockinv/partition.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace blockinv {

const char* case_name(Case2 c) {
  switch (c) {
    case Case2::OnePlusFour: return "1mod4";
    case Case2::ThreeMod4: return "3mod4";
    case Case2::NotApplicable: break;
  }
  return "-";
}

BlockParams BlockParams::gl3(unsigned a, unsigned d, unsigned w) {
  BlockParams p;
  p.ell = 3;
  p.case2 = Case2::NotApplicable;
  p.a = a;
  p.d = d;
  p.w = w;
  p.digits = ell_adic_digits(3, w);
  p.validate();
  return p;
}

BlockParams BlockParams::gl2_one_plus_four(unsigned a, unsigned w) {
  BlockParams p;
  p.ell = 2;
  p.case2 = Case2::OnePlusFour;
  p.a = a;
  p.atilde = 1;
  p.d = 1;
  p.w = w;
  p.digits = ell_adic_digits(2, w);
  p.validate();
  return p;
}

BlockParams BlockParams::gl2_three_mod_four(unsigned atilde, unsigned w) {
  BlockParams p;
  p.ell = 2;
  p.case2 = Case2::ThreeMod4;
  p.a = 1;
  p.atilde = atilde;
  p.d = 1;
  p.w = w;
  p.digits = ell_adic_digits(2, w);
  p.validate();
  return p;
}

void BlockParams::validate() const {
  if (w < 1) throw DomainError("weight w must be positive");
  if (digits != ell_adic_digits(ell, w)) throw DomainError("digits inconsistent with w");
  if (ell == 3) {
    if (d != 1 && d != 2) throw DomainError("ell=3 requires d in {1,2}");
    if (a < 1) throw DomainError("ell=3 requires a >= 1");
    if (case2 != Case2::NotApplicable || atilde) throw DomainError("ell=3 takes no mod-4 case or atilde");
    return;
  }
  if (ell != 2) throw DomainError("ell must be 2 or 3");
  if (d != 1) throw DomainError("ell=2 requires d=1");
  if (!atilde) throw DomainError("ell=2 requires atilde");
  switch (case2) {
    case Case2::OnePlusFour:
      if (a < 2 || *atilde != 1) throw DomainError("eps*q = 1 mod 4 requires a >= 2 and atilde = 1");
      return;
    case Case2::ThreeMod4:
      if (a != 1 || *atilde < 2) throw DomainError("eps*q = 3 mod 4 requires a = 1 and atilde >= 2");
      return;
    case Case2::NotApplicable: break;
  }
  throw DomainError("ell=2 requires a mod-4 case");
}

std::string BlockParams::label() const {
  std::ostringstream os;
  os << "ell=" << ell;
  if (ell == 2) os << " case=" << case_name(case2);
  os << " a=" << a;
  if (atilde) os << " atilde=" << *atilde;
  if (ell == 3) os << " d=" << d;
  os << " w=" << w;
  return os.str();
}

BlockParams derive_params(int epsilon, const Nat& q, unsigned long n, unsigned ell) {
  if (epsilon != 1 && epsilon != -1) throw DomainError("epsilon must be +1 or -1");
  if (ell != 2 && ell != 3) throw DomainError("ell must be 2 or 3");
  if (q <= 0) throw DomainError("q must be positive");
  if (mpz_divisible_ui_p(q.get_mpz_t(), ell)) throw DomainError("ell divides q");
  const Nat eq = epsilon * q;
  BlockParams p;
  p.ell = ell;
  if (ell == 3) {
    unsigned long r = mpz_fdiv_ui(eq.get_mpz_t(), 3);
    p.d = r == 1 ? 1 : 2;
    Nat x = p.d == 1 ? Nat(eq - 1) : Nat(eq * eq - 1);
    if (x == 0) throw DomainError("(eps*q)^d - 1 vanishes");
    p.a = static_cast<unsigned>(valuation(x, 3));
  } else {
    p.d = 1;
    if (eq - 1 == 0 || eq + 1 == 0) throw DomainError("eps*q = +-1 has no 2-adic data");
    p.case2 = mpz_fdiv_ui(eq.get_mpz_t(), 4) == 1 ? Case2::OnePlusFour : Case2::ThreeMod4;
    p.a = static_cast<unsigned>(valuation(eq - 1, 2));
    p.atilde = static_cast<unsigned>(valuation(eq + 1, 2));
  }
  if (n < p.d) throw DomainError("n must be at least d");
  p.w = static_cast<unsigned>(n / p.d);
  p.digits = ell_adic_digits(ell, p.w);
  p.validate();
  return p;
}

Nat gl3_b(unsigned a, unsigned d) {
  if (d != 1 && d != 2) throw DomainError("d must be 1 or 2");
  return Nat(d) + Nat(pow_ui(3, a) - 1) / d;
}

Nat gl3_b1(unsigned a, unsigned d) {
  if (d != 1 && d != 2) throw DomainError("d must be 1 or 2");
  return Nat(2 * pow_ui(3, a - 1)) / d;
}

LevelWeights level_weights(const BlockParams& params) {
  params.validate();
  if (params.ell == 3) return LevelWeights{{gl3_b(params.a, params.d)}, gl3_b1(params.a, params.d)};

  const unsigned a = params.a, at = *params.atilde;
  // Literal weights: 2^a, 2^{a+at-1} - 2^{a-1}, then 2^{a+at-2}.
  LevelWeights literal{{pow_ui(2, a), pow_ui(2, a + at - 1) - pow_ui(2, a - 1)}, pow_ui(2, a + at - 2)};
  LevelWeights special;
  if (params.case2 == Case2::OnePlusFour)
    special = LevelWeights{{pow_ui(2, a), pow_ui(2, a - 1)}, pow_ui(2, a - 1)};
  else
    special = LevelWeights{{Nat(2), pow_ui(2, at) - 1}, pow_ui(2, at - 1)};
  if (literal.head != special.head || literal.tail_repeat != special.tail_repeat)
    throw InternalError("level weights disagree with the case-specific form");
  return special;
}

Nat weighted_decomposition_sum(unsigned ell, const LevelWeights& weights, unsigned w) {
  if (ell < 2) throw DomainError("ell must be at least 2");
  if (w == 0) return 1;
  const std::size_t depth = weights.head.size();
  std::vector<std::vector<Nat>> rows;
  for (std::size_t lvl = 0; lvl <= depth; ++lvl) rows.push_back(multipartition_row(weights.at(lvl), w));

  std::map<std::pair<unsigned, std::size_t>, Nat> memo;
  auto rec = [&](auto&& self, unsigned t, std::size_t lvl) -> Nat {
    if (t == 0) return 1;
    auto key = std::make_pair(t, lvl);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const std::size_t next = lvl < depth ? lvl + 1 : depth;
    Nat sum = 0;
    for (unsigned w0 = t % ell; w0 <= t; w0 += ell) sum += rows[lvl][w0] * self(self, (t - w0) / ell, next);
    memo.emplace(key, sum);
    return sum;
  };
  return rec(rec, w, 0);
}

Nat k_B_gl2(const BlockParams& params) {
  if (params.ell != 2) throw DomainError("k_B_gl2 requires ell = 2");
  return weighted_decomposition_sum(2, level_weights(params), params.w);
}

Nat k_B_gl3(unsigned a, unsigned d, unsigned w) {
  if (a < 1) throw DomainError("a must be positive");
  LevelWeights lw{{gl3_b(a, d)}, gl3_b1(a, d)};
  return weighted_decomposition_sum(3, lw, w);
}

Nat k_B(const BlockParams& params) {
  return params.ell == 2 ? k_B_gl2(params) : k_B_gl3(params.a, params.d, params.w);
}

Nat k0_B_gl2(const BlockParams& params) {
  if (params.ell != 2) throw DomainError("k0_B_gl2 requires ell = 2");
  params.validate();
  unsigned long e = 0;
  for (std::size_t i = 0; i < params.digits.size(); ++i) e += params.digits[i] * (params.a + i);
  return pow_ui(2, e);
}

Nat k0_B_gl3(unsigned a, unsigned d, unsigned w) {
  const Nat b = gl3_b(a, d);
  Nat prod = 1;
  const auto digits = ell_adic_digits(3, w);
  for (std::size_t i = 0; i < digits.size(); ++i)
    if (digits[i] != 0) prod *= multipartition_count(Nat(b * pow_ui(3, i)), digits[i]);
  return prod;
}

Nat k0_B(const BlockParams& params) {
  return params.ell == 2 ? k0_B_gl2(params) : k0_B_gl3(params.a, params.d, params.w);
}

Nat l_B_lower(const BlockParams& params) {
  params.validate();
  Nat best = std::max(partition_count(params.w), ell_decomposition_count(params.ell, params.w));
  if (params.ell == 3) best = std::max(best, multipartition_count(Nat(params.d), params.w));
  return best;
}

SLParams sl_params(unsigned a, unsigned w) {
  if (a < 1 || w < 1) throw DomainError("sl_params requires a, w >= 1");
  SLParams sp;
  sp.a = a;
  sp.w = w;
  sp.m = std::min<unsigned>(static_cast<unsigned>(valuation(Nat(w), 3)), a);
  sp.delta = is_power_of(w, 3) ? 1 : 0;
  sp.digits = ell_adic_digits(3, w);
  return sp;
}

Rat k_B_sl_upper_rat(unsigned a, unsigned w) {
  if (w % 3 != 0) throw DomainError("k_B_sl_upper requires 3 | w");
  const SLParams sp = sl_params(a, w);
  Nat total = k_B_gl3(a, 1, w);
  unsigned long pj = 1;
  for (unsigned j = 1; j <= sp.m; ++j) {
    pj *= 3;
    const unsigned long part = w / pj;
    total += ell_decomposition_count(3, static_cast<unsigned>(part)) * pow_ui(3, 2 * j + a * part);
  }
  Rat r(total, pow_ui(3, a));
  r.canonicalize();
  return r;
}

Nat k_B_sl_upper(unsigned a, unsigned w) { return ceil_rat(k_B_sl_upper_rat(a, w)); }

Nat k_B_sl_w3_exact(unsigned a) {
  if (a < 1) throw DomainError("a must be positive");
  const Nat num = multipartition_count(pow_ui(3, a), 3) + pow_ui(3, 2 + a) - pow_ui(3, a - 1);
  const Nat den = pow_ui(3, a);
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    throw InternalError("k(B) for SL at w=3 is not integral");
  return num / den;
}

Nat k_B_sl_coprime(unsigned a, unsigned w) {
  if (w % 3 == 0) throw DomainError("k_B_sl_coprime requires 3 not dividing w");
  const Nat num = k_B_gl3(a, 1, w);
  const Nat den = pow_ui(3, a);
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    throw InternalError("k(B~)/3^a is not integral for a=" + std::to_string(a) + " w=" + std::to_string(w));
  return num / den;
}

std::optional<Nat> l_B_sl_exact(unsigned a, unsigned w) {
  if (a == 1 && w == 3) return Nat(5);
  return std::nullopt;
}

}  // namespace blockinv
