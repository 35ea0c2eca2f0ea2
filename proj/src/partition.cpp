#include "blockinv/partition.hpp"

#include "blockinv/error.hpp"

#include <map>
#include <mutex>

namespace blockinv {

unsigned long LDecomp::value() const {
  unsigned long v = 0, p = 1;
  for (unsigned d : digits) {
    v += d * p;
    p *= ell;
  }
  return v;
}

namespace {

std::mutex g_partition_mutex;
std::vector<Nat> g_partition_table{Nat(1)};
unsigned g_partition_cap = 512;

// Extends tbl (pi(0..tbl.size()-1)) up to pi(tmax).
void extend_partition_table(std::vector<Nat>& tbl, unsigned tmax) {
  tbl.reserve(tmax + 1);
  for (unsigned long n = tbl.size(); n <= tmax; ++n) {
    Nat sum = 0;
    for (unsigned long k = 1;; ++k) {
      unsigned long g1 = k * (3 * k - 1) / 2;
      if (g1 > n) break;
      unsigned long g2 = k * (3 * k + 1) / 2;
      if (k % 2 == 1) {
        sum += tbl[n - g1];
        if (g2 <= n) sum += tbl[n - g2];
      } else {
        sum -= tbl[n - g1];
        if (g2 <= n) sum -= tbl[n - g2];
      }
    }
    tbl.push_back(std::move(sum));
  }
}

// c = a * b mod x^(n+1)
std::vector<Nat> truncated_mul(const std::vector<Nat>& a, const std::vector<Nat>& b, unsigned n) {
  std::vector<Nat> c(n + 1, Nat(0));
  for (unsigned i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; i + j <= n; ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

std::mutex g_row_mutex;
std::map<Nat, std::vector<Nat>> g_row_cache;
constexpr std::size_t kRowCacheLimit = 4096;

}  // namespace

void set_partition_memo_cap(unsigned cap) {
  std::lock_guard lock(g_partition_mutex);
  g_partition_cap = cap;
  if (g_partition_table.size() > static_cast<std::size_t>(cap) + 1) g_partition_table.resize(cap + 1);
}

unsigned partition_memo_cap() {
  std::lock_guard lock(g_partition_mutex);
  return g_partition_cap;
}

std::vector<Nat> partition_counts(unsigned tmax) {
  {
    std::lock_guard lock(g_partition_mutex);
    if (tmax <= g_partition_cap) {
      if (g_partition_table.size() <= tmax) extend_partition_table(g_partition_table, tmax);
      return {g_partition_table.begin(), g_partition_table.begin() + tmax + 1};
    }
  }
  std::vector<Nat> local{Nat(1)};
  extend_partition_table(local, tmax);
  return local;
}

Nat partition_count(unsigned t) {
  {
    std::lock_guard lock(g_partition_mutex);
    if (t < g_partition_table.size()) return g_partition_table[t];
  }
  return partition_counts(t)[t];
}

std::vector<Nat> multipartition_row(const Nat& s, unsigned tmax) {
  if (s < 0) throw DomainError("multipartition_row: negative s");
  {
    std::lock_guard lock(g_row_mutex);
    if (auto it = g_row_cache.find(s); it != g_row_cache.end() && it->second.size() > tmax)
      return {it->second.begin(), it->second.begin() + tmax + 1};
  }
  std::vector<Nat> base = partition_counts(tmax);
  std::vector<Nat> acc(tmax + 1, Nat(0));
  acc[0] = 1;
  std::size_t bits = mpz_sizeinbase(s.get_mpz_t(), 2);
  if (s != 0) {
    // Square-and-multiply from the top bit down.
    for (std::size_t b = bits; b-- > 0;) {
      acc = truncated_mul(acc, acc, tmax);
      if (mpz_tstbit(s.get_mpz_t(), b)) acc = truncated_mul(acc, base, tmax);
    }
  }
  std::lock_guard lock(g_row_mutex);
  if (g_row_cache.size() >= kRowCacheLimit) g_row_cache.clear();
  auto& slot = g_row_cache[s];
  if (slot.size() < acc.size()) slot = acc;
  return acc;
}

Nat multipartition_count(const Nat& s, unsigned t) { return multipartition_row(s, t)[t]; }

Nat multipartition_count(unsigned long s, unsigned t) { return multipartition_count(Nat(s), t); }

std::vector<Split> enumerate_splits(unsigned s, unsigned t) {
  if (s == 0) throw DomainError("enumerate_splits: s must be positive");
  std::vector<Split> out;
  Split cur(s, 0);
  auto rec = [&](auto&& self, unsigned pos, unsigned rest) -> void {
    if (pos + 1 == s) {
      cur[pos] = rest;
      out.push_back(cur);
      return;
    }
    for (unsigned v = 0; v <= rest; ++v) {
      cur[pos] = v;
      self(self, pos + 1, rest - v);
    }
  };
  rec(rec, 0, t);
  return out;
}

std::vector<LDecomp> enumerate_ell_decompositions(unsigned ell, unsigned t) {
  if (ell < 2) throw DomainError("enumerate_ell_decompositions: ell must be at least 2");
  std::vector<LDecomp> out;
  std::vector<unsigned> cur;
  auto rec = [&](auto&& self, unsigned long rest) -> void {
    if (rest == 0) {
      out.push_back(LDecomp{ell, cur});
      return;
    }
    for (unsigned long w0 = rest % ell; w0 <= rest; w0 += ell) {
      cur.push_back(static_cast<unsigned>(w0));
      self(self, (rest - w0) / ell);
      cur.pop_back();
    }
  };
  rec(rec, t);
  return out;
}

Nat ell_decomposition_count(unsigned ell, unsigned t) {
  if (ell < 2) throw DomainError("ell_decomposition_count: ell must be at least 2");
  std::vector<Nat> p(t + 1, Nat(0));
  p[0] = 1;
  for (unsigned long w = 1; w <= t; ++w) {
    unsigned long a0 = w % ell;
    for (unsigned long j = 0; a0 + ell * j <= w; ++j) p[w] += p[(w - (a0 + ell * j)) / ell];
  }
  return p[t];
}

std::vector<unsigned> ell_adic_digits(unsigned ell, unsigned long w) {
  if (ell < 2) throw DomainError("ell_adic_digits: ell must be at least 2");
  std::vector<unsigned> digits;
  for (; w > 0; w /= ell) digits.push_back(static_cast<unsigned>(w % ell));
  return digits;
}

Nat binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  Nat r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace blockinv
