#pragma once

// Slow reference computations used as test oracles. None of them share code
// with the library beyond the Nat type and the element table of a group.

#include "blockinv/bigint.hpp"
#include "blockinv/perm_group.hpp"

#include <functional>
#include <map>
#include <vector>

namespace oracle {

using blockinv::Nat;

// partitions of n with every part <= maxpart
inline Nat partitions_bounded(unsigned n, unsigned maxpart) {
  static std::map<std::pair<unsigned, unsigned>, Nat> memo;
  if (n == 0) return 1;
  if (maxpart == 0) return 0;
  if (maxpart > n) maxpart = n;
  auto key = std::make_pair(n, maxpart);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  Nat r = partitions_bounded(n, maxpart - 1) + partitions_bounded(n - maxpart, maxpart);
  memo[key] = r;
  return r;
}

inline Nat partitions(unsigned n) { return partitions_bounded(n, n); }

// sum over s-splits (t_1..t_s) of t of prod pi(t_i)
inline Nat multipartitions(unsigned s, unsigned t) {
  static std::map<std::pair<unsigned, unsigned>, Nat> memo;
  if (s == 0) return t == 0 ? 1 : 0;
  auto key = std::make_pair(s, t);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  Nat total = 0;
  for (unsigned first = 0; first <= t; ++first) total += partitions(first) * multipartitions(s - 1, t - first);
  memo[key] = total;
  return total;
}

// every digit vector (t_0, t_1, ...) with sum t_i ell^i == w, trailing zeros trimmed
inline std::vector<std::vector<unsigned>> decompositions(unsigned ell, unsigned w) {
  std::vector<unsigned long> powers{1};
  while (powers.back() * ell <= w) powers.push_back(powers.back() * ell);
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur(powers.size(), 0);
  std::function<void(int, unsigned long)> rec = [&](int level, unsigned long rest) {
    if (level < 0) {
      if (rest != 0) return;
      auto v = cur;
      while (!v.empty() && v.back() == 0) v.pop_back();
      out.push_back(v);
      return;
    }
    for (unsigned c = 0; c * powers[level] <= rest; ++c) {
      cur[level] = c;
      rec(level - 1, rest - c * powers[level]);
    }
    cur[level] = 0;
  };
  rec(static_cast<int>(powers.size()) - 1, w);
  return out;
}

// sum over W_w of prod_i k(weight(i), t_i), weights given per level with the
// last entry repeated.
inline Nat weighted_sum(unsigned ell, const std::vector<unsigned>& weights, unsigned w) {
  Nat total = 0;
  for (const auto& dec : decompositions(ell, w)) {
    Nat term = 1;
    for (std::size_t i = 0; i < dec.size(); ++i)
      term *= multipartitions(weights[std::min(i, weights.size() - 1)], dec[i]);
    total += term;
  }
  return total;
}

// k(G) = #{(x, y) : xy = yx} / |G|
inline Nat commuting_class_count(const blockinv::PermGroup& g) {
  const auto& els = g.elements();
  const std::size_t n = els.size(), deg = els.degree();
  unsigned long long pairs = 0;
  for (std::size_t i = 0; i < n; ++i) {
    auto x = els.at(i);
    for (std::size_t j = 0; j < n; ++j) {
      auto y = els.at(j);
      bool ok = true;
      for (std::size_t k = 0; k < deg && ok; ++k) ok = x[y[k]] == y[x[k]];
      pairs += ok;
    }
  }
  return Nat(static_cast<unsigned long>(pairs / n));
}

}  // namespace oracle
