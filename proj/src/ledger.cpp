#include "blockinv/ledger.hpp"

#include "blockinv/block.hpp"
#include "blockinv/defect.hpp"
#include "blockinv/error.hpp"
#include "blockinv/group_spec.hpp"
#include "blockinv/partition.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace blockinv {

std::string to_string(const Instance& inst) {
  std::string out;
  for (const auto& [k, v] : inst) {
    if (!out.empty()) out += ' ';
    out += k + "=" + std::to_string(v);
  }
  return out;
}

namespace {

enum class Kind { Exact, Upper, Lower };
enum class Rel { LE, GE, EQ };

struct Side {
  BoundSum value;
  Kind kind = Kind::Exact;
};

struct Eval {
  Side lhs;
  Rel rel;
  BoundSum rhs;
};

class Args {
 public:
  explicit Args(const Instance& inst) : inst_(inst) {}
  long operator[](const char* key) const {
    for (const auto& [k, v] : inst_)
      if (k == key) return v;
    throw InternalError(std::string("lemma grid lacks key ") + key);
  }
  unsigned u(const char* key) const { return static_cast<unsigned>((*this)[key]); }

 private:
  const Instance& inst_;
};

using EvalFn = std::function<std::optional<Eval>(const Args&, std::size_t)>;
using ExcFn = std::function<bool(const Args&)>;

struct Lemma {
  LemmaInfo info;
  EvalFn eval;
  ExcFn exception;
};

// --- expression helpers ------------------------------------------------------

Rat q(long n, long d = 1) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

Rat rat(const Nat& n) { return Rat(n); }

Rat ratio(const Nat& n, const Nat& d) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

BoundSum K(const Rat& r) { return {BoundExpr::constant(r)}; }
BoundSum K(const Nat& n) { return {BoundExpr::constant(Rat(n))}; }

BoundSum pw(long base, const Rat& exp, const Rat& coeff = Rat(1)) {
  return {BoundExpr::power(Rat(base), exp, coeff)};
}

BoundSum operator+(BoundSum x, const BoundSum& y) {
  x.insert(x.end(), y.begin(), y.end());
  return x;
}

Side exact(BoundSum s) { return {std::move(s), Kind::Exact}; }
Side exact(const Nat& n) { return {K(n), Kind::Exact}; }
Side exact(const Rat& r) { return {K(r), Kind::Exact}; }
Side sourced(const SourcedCount& c) {
  return {K(c.value), c.source == CountSource::Exact ? Kind::Exact : Kind::Lower};
}
Side sourced(const Rat& v, CountSource s) { return {K(v), s == CountSource::Exact ? Kind::Exact : Kind::Lower}; }

std::optional<Eval> le(Side l, BoundSum r) { return Eval{std::move(l), Rel::LE, std::move(r)}; }
std::optional<Eval> ge(Side l, BoundSum r) { return Eval{std::move(l), Rel::GE, std::move(r)}; }
std::optional<Eval> eq(Side l, BoundSum r) { return Eval{std::move(l), Rel::EQ, std::move(r)}; }

std::vector<unsigned> digits(unsigned ell, unsigned w) { return ell_adic_digits(ell, w); }
unsigned dig(const std::vector<unsigned>& a, std::size_t i) { return i < a.size() ? a[i] : 0; }

long digit_sum(const std::vector<unsigned>& a, std::size_t from) {
  long s = 0;
  for (std::size_t i = from; i < a.size(); ++i) s += a[i];
  return s;
}

long nonzero_count(const std::vector<unsigned>& a, std::size_t from) {
  long s = 0;
  for (std::size_t i = from; i < a.size(); ++i) s += a[i] != 0;
  return s;
}

// sum_{i >= from} a_i * f(i)
Rat weighted(const std::vector<unsigned>& a, std::size_t from, const std::function<Rat(long)>& f) {
  Rat s = 0;
  for (std::size_t i = from; i < a.size(); ++i)
    if (a[i]) s += Rat(a[i]) * f(static_cast<long>(i));
  return s;
}

Nat pw2(unsigned long e) { return pow_ui(2, e); }
Nat pw3(unsigned long e) { return pow_ui(3, e); }

Nat p3(unsigned w) { return ell_decomposition_count(3, w); }
Nat pi(unsigned w) { return partition_count(w); }

unsigned v3(unsigned w) { return static_cast<unsigned>(valuation(Nat(w), 3)); }
unsigned sl_m(unsigned a, unsigned w) { return std::min(a, v3(w)); }
unsigned sl_delta(unsigned w) { return is_power_of(w, 3) ? 1 : 0; }

// 3^{3^{(i-1)/2}} * 3^{base_exp}; even i carries the irrational part as a
// square-root term.
BoundSum nr_bound(long i, const Rat& base_exp) {
  BoundExpr e;
  e.base = 3;
  if (i % 2 == 1) {
    e.exponent = base_exp + rat(pw3(static_cast<unsigned long>((i - 1) / 2)));
  } else {
    e.exponent = base_exp;
    e.sqrt_term = SqrtTerm{Rat(1), Rat(i - 1)};
  }
  return {e};
}

BlockParams gl2a(unsigned a, unsigned w) { return BlockParams::gl2_one_plus_four(a, w); }
BlockParams gl2t(unsigned t, unsigned w) { return BlockParams::gl2_three_mod_four(t, w); }

// (y, c) fed into the recursion lemma for the 3 mod 4 case.
std::pair<Rat, Rat> recb_yc(unsigned at) {
  if (at == 2) return {q(3, 5), Rat(1)};
  if (at == 3) return {Rat(1), Rat(3)};
  return {Rat(1), q(3, 2)};
}

Nat recb_hyp_sum(unsigned at, unsigned t) {
  LevelWeights lw;
  lw.head = {pw2(at) - 1};
  lw.tail_repeat = pw2(at - 1);
  return weighted_decomposition_sum(2, lw, t);
}

// --- the registry -------------------------------------------------------------

std::vector<Lemma> build_registry() {
  std::vector<Lemma> R;
  auto add = [&](std::string id, std::string statement, std::string grid, EvalFn fn, ExcFn exc = {},
                 std::string exc_text = {}) {
    R.push_back({{std::move(id), std::move(statement), std::move(grid), std::move(exc_text)}, std::move(fn),
                 std::move(exc)});
  };

  // multipartition basics
  add("multipartitionsbasics_i", "k(s,t) <= s^t for s >= 3, t >= 1", "s=3..12; t=1..40",
      [](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["s"] < 3 || x["t"] < 1) return {};
        return le(exact(multipartition_count(x.u("s"), x.u("t"))), pw(x["s"], x["t"]));
      });
  add("multipartitionsbasics_ii", "k(s,t1+t2) <= k(s,t1) k(s,t2) for s >= 3, t1,t2 >= 1",
      "s=3..6; t1=1..20; t2=1..20", [](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["s"] < 3 || x["t1"] < 1 || x["t2"] < 1) return {};
        const unsigned long s = x.u("s");
        return le(exact(multipartition_count(s, x.u("t1") + x.u("t2"))),
                  K(Nat(multipartition_count(s, x.u("t1")) * multipartition_count(s, x.u("t2")))));
      });
  add("multipartitionsbasics_k2", "k(2,t+1) <= 2 k(2,t) for t >= 2 (s read as 2)", "t=2..60",
      [](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["t"] < 2) return {};
        return le(exact(multipartition_count(2UL, x.u("t") + 1)), K(Nat(2 * multipartition_count(2UL, x.u("t")))));
      });
  add("k3aw2_t1", "k(s,1) = s", "s=1..60", [](const Args& x, std::size_t) -> std::optional<Eval> {
    return eq(exact(multipartition_count(x.u("s"), 1)), K(Rat(x["s"])));
  });
  add("k3aw2_t2", "k(s,2) = s^2/2 + 3s/2", "s=1..60", [](const Args& x, std::size_t) -> std::optional<Eval> {
    const long s = x["s"];
    return eq(exact(multipartition_count(x.u("s"), 2)), K(q(s * s, 2) + q(3 * s, 2)));
  });
  add("k3aw2_t3", "k(s,3) = s^3/6 + 3s^2/2 + 4s/3", "s=1..60",
      [](const Args& x, std::size_t) -> std::optional<Eval> {
        const long s = x["s"];
        return eq(exact(multipartition_count(x.u("s"), 3)), K(q(s * s * s, 6) + q(3 * s * s, 2) + q(4 * s, 3)));
      });
  add("multipartitions_k2", "k(2,w) <= 2^(w + 0.35)", "w=0..60",
      [](const Args& x, std::size_t) -> std::optional<Eval> {
        return le(exact(multipartition_count(2UL, x.u("w"))), pw(2, x["w"] + q(7, 20)));
      });
  add("multipartitions_k2a", "k(2^a,w) <= 2^((a - 4/3) w + 3) for a >= 3", "a=3..6; w=0..60",
      [](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["a"] < 3) return {};
        const long a = x["a"], w = x["w"];
        return le(exact(multipartition_count(pw2(x.u("a")), x.u("w"))), pw(2, (a - q(4, 3)) * w + 3));
      });
  add("multipartitions_k2a_strong", "k(2^a,w) <= 2^((a - 4/3) w + 2) for a >= 5", "a=5..6; w=0..60",
      [](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["a"] < 5) return {};
        const long a = x["a"], w = x["w"];
        return le(exact(multipartition_count(pw2(x.u("a")), x.u("w"))), pw(2, (a - q(4, 3)) * w + 2));
      });
  add("multipartitions_kb", "k(b,w) <= 3^((a - 5/6) w + 2 - log_3 d) for a >= 2", "a=2..6; d=1,2; w=0..60",
      [](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["a"] < 2 || (x["d"] != 1 && x["d"] != 2)) return {};
        const long a = x["a"], w = x["w"];
        return le(exact(multipartition_count(gl3_b(x.u("a"), x.u("d")), x.u("w"))),
                  pw(3, (a - q(5, 6)) * w + 2, q(1, x["d"])));
      });
  add("multipartitions_kb_strong", "k(b,w) <= 3^((a - 5/6) w - log_3 d) for a >= 3, w >= 9",
      "a=3..6; d=1,2; w=9..60", [](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["a"] < 3 || x["w"] < 9 || (x["d"] != 1 && x["d"] != 2)) return {};
        const long a = x["a"], w = x["w"];
        return le(exact(multipartition_count(gl3_b(x.u("a"), x.u("d")), x.u("w"))),
                  pw(3, (a - q(5, 6)) * w, q(1, x["d"])));
      });
  add("kcxw", "k(cx,w) <= binom(x+w-1,w) c^w for c >= 3, x >= 1", "c=3..6; x=1..8; w=0..30",
      [](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["c"] < 3 || x["x"] < 1) return {};
        const unsigned long c = x.u("c"), xx = x.u("x"), w = x.u("w");
        return le(exact(multipartition_count(c * xx, x.u("w"))), K(Nat(binomial(xx + w - 1, w) * pow_ui(c, w))));
      });
  add("binom_w3", "binom(w+3,w) <= 2^(2w/3 + 3)", "w=0..60", [](const Args& x, std::size_t) -> std::optional<Eval> {
    return le(exact(binomial(x.u("w") + 3, x.u("w"))), pw(2, q(2 * x["w"], 3) + 3));
  });
  add("binom_w3_strong", "binom(w+3,w) <= 2^(2w/3 + 1.6) for w >= 10", "w=10..60",
      [](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["w"] < 10) return {};
        return le(exact(binomial(x.u("w") + 3, x.u("w"))), pw(2, q(2 * x["w"], 3) + q(8, 5)));
      });
  add("pi_bound", "pi(n) <= 1.4^(n + 1.2) for n >= 1", "n=1..60",
      [](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["n"] < 1) return {};
        return le(exact(pi(x.u("n"))), {BoundExpr::power(q(7, 5), x["n"] + q(6, 5))});
      });
  add("bound34_k3", "k(3,w) <= 3^(w/2 + 9/4) for w >= 1", "w=1..60",
      [](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["w"] < 1) return {};
        return le(exact(multipartition_count(3UL, x.u("w"))), pw(3, q(x["w"], 2) + q(9, 4)));
      });
  add("bound34_k4", "k(4,w) <= 2^(1.2w + 2) for w >= 1", "w=1..60",
      [](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["w"] < 1) return {};
        return le(exact(multipartition_count(4UL, x.u("w"))), pw(2, q(6 * x["w"], 5) + 2));
      });
  add("k3_a2", "k(3,w) <= 2^(1.2w + 0.9)", "w=0..60", [](const Args& x, std::size_t) -> std::optional<Eval> {
    return le(exact(multipartition_count(3UL, x.u("w"))), pw(2, q(6 * x["w"], 5) + q(9, 10)));
  });

  // l-decompositions
  add(
      "plw_p3", "p_3(w) <= 3^(w/6) for w != 3", "w=1..60",
      [](const Args& x, std::size_t) -> std::optional<Eval> { return le(exact(p3(x.u("w"))), pw(3, q(x["w"], 6))); },
      [](const Args& x) { return x["w"] == 3; }, "w=3: p_3(3) = 2 > 3^(1/2), excluded by the hypothesis");
  add("plw_p2", "p_2(w) <= 2^(w/3 + 1)", "w=0..60", [](const Args& x, std::size_t) -> std::optional<Eval> {
    return le(exact(ell_decomposition_count(2, x.u("w"))), pw(2, q(x["w"], 3) + 1));
  });
  add(
      "plw_rec", "p_l(w) <= (w/l) p_l(floor(w/l)) for w >= 1", "ell=2,3; w=1..60",
      [](const Args& x, std::size_t) -> std::optional<Eval> {
        const unsigned ell = x.u("ell"), w = x.u("w");
        if ((ell != 2 && ell != 3) || w < 1) return {};
        return le(exact(ell_decomposition_count(ell, w)),
                  K(Rat(ell_decomposition_count(ell, w / ell)) * q(static_cast<long>(w), static_cast<long>(ell))));
      },
      [](const Args& x) {
        const long ell = x["ell"], w = x["w"];
        return (ell == 2 && w <= 3) || (ell == 3 && w <= 8);
      },
      "small w where the recurrence bound is false: ell=2, w <= 3; ell=3, w <= 8");
  add("plw_bijection", "p_l(w) = sum_j p_l((w - a_0 - l j)/l), with p_l(w) counted by enumeration",
      "ell=2,3; w=0..60", [](const Args& x, std::size_t) -> std::optional<Eval> {
        const unsigned ell = x.u("ell"), w = x.u("w");
        if (ell != 2 && ell != 3) return {};
        const Nat enumerated(static_cast<unsigned long>(enumerate_ell_decompositions(ell, w).size()));
        Nat total = 0;
        const unsigned a0 = w % ell;
        for (unsigned j = 0; a0 + ell * j <= w; ++j) total += ell_decomposition_count(ell, (w - a0 - ell * j) / ell);
        return eq(exact(enumerated), K(total));
      });
  add("lB_kdw", "l(B) >= k(d,w) >= p_3(w)", "d=1,2; w=1..60", [](const Args& x, std::size_t) -> std::optional<Eval> {
    if (x["d"] != 1 && x["d"] != 2) return {};
    return ge(exact(multipartition_count(x.u("d"), x.u("w"))), K(p3(x.u("w"))));
  });

  // height zero characters
  add("k0_lower", "k0(B) >= 3^(sum_{i>=1} a_i (a + i - 1 - log_3 d))", "a=1..6; d=1,2; w=1..60",
      [](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["d"] != 1 && x["d"] != 2) return {};
        const auto A = digits(3, x.u("w"));
        const long a = x["a"];
        const Rat e = weighted(A, 1, [&](long i) -> Rat { return Rat(a + i - 1); });
        return ge(exact(k0_B_gl3(x.u("a"), x.u("d"), x.u("w"))),
                  pw(3, e, Rat(1, pow_ui(static_cast<unsigned long>(x["d"]), digit_sum(A, 1)))));
      });
  add("betterboundk0B", "a = 1: k0(B) >= 3^(sum a_i i + #{i >= 1 : a_i != 0})", "d=1,2; w=1..60",
      [](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["d"] != 1 && x["d"] != 2) return {};
        const auto A = digits(3, x.u("w"));
        const Rat e = weighted(A, 1, [](long i) -> Rat { return Rat(i); }) + nonzero_count(A, 1);
        return ge(exact(k0_B_gl3(1, x.u("d"), x.u("w"))), pw(3, e));
      });

  // k(B) upper bounds
  add("bound23_l2", "l = 2, a >= 4: k(B) <= 2^((a-1) w + 3/2)", "a=4..6; w=1..60",
      [](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["a"] < 4) return {};
        return le(exact(k_B(gl2a(x.u("a"), x.u("w")))), pw(2, Rat((x["a"] - 1) * x["w"]) + q(3, 2)));
      });
  add("bound23_l2_weak", "l = 2, a >= 3: k(B) <= 2^((a-1) w + 3)", "a=3..6; w=1..60",
      [](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["a"] < 3) return {};
        return le(exact(k_B(gl2a(x.u("a"), x.u("w")))), pw(2, Rat((x["a"] - 1) * x["w"] + 3)));
      });
  add("bound23_l3_term",
      "l = 3, a >= 2: k(b,w_0) prod_{i>=1} k(b_1,w_i) <= 3^((a - 5/6) w + 2 - log_3 d) for every decomposition",
      "a=2..6; d=1,2; w=1..60", [](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["a"] < 2 || (x["d"] != 1 && x["d"] != 2)) return {};
        const Nat b = gl3_b(x.u("a"), x.u("d")), b1 = gl3_b1(x.u("a"), x.u("d"));
        Nat best = 0;
        for (const auto& dec : enumerate_ell_decompositions(3, x.u("w"))) {
          Nat term = 1;
          for (std::size_t i = 0; i < dec.digits.size(); ++i)
            term *= multipartition_count(i == 0 ? b : b1, dec.digits[i]);
          best = std::max(best, term);
        }
        return le(exact(best), pw(3, (x["a"] - q(5, 6)) * x["w"] + 2, q(1, x["d"])));
      });
  add("bound23_l3", "l = 3, a >= 2: k(B) <= p_3(w) 3^((a - 5/6) w + 2 - log_3 d)", "a=2..6; d=1,2; w=1..60",
      [](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["a"] < 2 || (x["d"] != 1 && x["d"] != 2)) return {};
        return le(exact(k_B_gl3(x.u("a"), x.u("d"), x.u("w"))),
                  pw(3, (x["a"] - q(5, 6)) * x["w"] + 2, ratio(p3(x.u("w")), Nat(x["d"]))));
      });
  add("bound165_l2", "l = 2, a = 2: k^w(B) <= 2^(1.4w + 1.65)", "w=1..60",
      [](const Args& x, std::size_t) -> std::optional<Eval> {
        return le(exact(k_B(gl2a(2, x.u("w")))), pw(2, q(7 * x["w"], 5) + q(33, 20)));
      });
  add("bound165_l3", "l = 3, a = 1: k^w(B) <= 3^((w + 7)/2)", "d=1,2; w=1..60",
      [](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["d"] != 1 && x["d"] != 2) return {};
        return le(exact(k_B_gl3(1, x.u("d"), x.u("w"))), pw(3, q(x["w"] + 7, 2)));
      });
  add("bound165_min", "l = 3, a = 1: k^w(B) <= 3^w", "d=1,2; w=1..60",
      [](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["d"] != 1 && x["d"] != 2) return {};
        return le(exact(k_B_gl3(1, x.u("d"), x.u("w"))), pw(3, Rat(x["w"])));
      });
  add("weven", "3 mod 4: k^(2j+1)(B) <= 2 k^(2j)(B) (the factor 2 the derivation produces)", "atilde=2..6; j=0..29",
      [](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["atilde"] < 2) return {};
        const LevelWeights lw = level_weights(gl2t(x.u("atilde"), 1));
        const unsigned j = x.u("j");
        return le(exact(weighted_decomposition_sum(2, lw, 2 * j + 1)),
                  K(Nat(2 * weighted_decomposition_sum(2, lw, 2 * j))));
      });
  add("weven_k2", "k(2,2j+1) <= 2 k(2,2j)", "j=0..30", [](const Args& x, std::size_t) -> std::optional<Eval> {
    const unsigned j = x.u("j");
    return le(exact(multipartition_count(2UL, 2 * j + 1)), K(Nat(2 * multipartition_count(2UL, 2 * j))));
  });

  // defect groups, l = 3 and l = 2 with eps q = 1 mod 4
  add(
      "nrcharacters_kD", "k(D_{i,3}) >= 3^(3^((i-1)/2)) 3^((3^i + 1)/2)", "i=1..6",
      [](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["i"] < 1) return {};
        const long i = x["i"];
        return ge(exact(class_count(iterated_wreath(3, 1, x.u("i")))),
                  nr_bound(i, ratio(pw3(x.u("i")) + 1, Nat(2))));
      },
      [](const Args& x) { return x["i"] == 1; }, "i=1: k(D_{1,3}) = 17 < 27; the literal bound needs i >= 2");
  add("nrcharacters_kDprime", "k(D_{i,3}') >= 3^(3^((i-1)/2)) 3^((3^i + 1)/2 - i)", "i=1..6",
      [](const Args& x, std::size_t cap) -> std::optional<Eval> {
        if (x["i"] < 1) return {};
        const long i = x["i"];
        return ge(sourced(derived_class_count_lower(iterated_wreath(3, 1, x.u("i")), cap)),
                  nr_bound(i, ratio(pw3(x.u("i")) + 1, Nat(2)) - i));
      });
  add("eq_kD3", "k(D) >= l^((a - 1/(l-1)) w + (1/(l-1)) sum_{i>=1} a_i)", "ell=2,3; a=1..6; w=1..60",
      [](const Args& x, std::size_t) -> std::optional<Eval> {
        const long ell = x["ell"], a = x["a"], w = x["w"];
        if ((ell != 2 && ell != 3) || a < (ell == 2 ? 2 : 1)) return {};
        const BlockParams p = ell == 2 ? gl2a(x.u("a"), x.u("w")) : BlockParams::gl3(x.u("a"), 1, x.u("w"));
        const auto A = digits(x.u("ell"), x.u("w"));
        return ge(sourced(k_D(p)), pw(ell, (a - q(1, ell - 1)) * w + q(digit_sum(A, 1), ell - 1)));
      });
  add("eq_kD3_factor", "k(D_{i,l^a}) >= l^(a l^i) / l^((l^i - 1)/(l-1))", "ell=2,3; a=1..6; i=1..6",
      [](const Args& x, std::size_t) -> std::optional<Eval> {
        const long ell = x["ell"], a = x["a"];
        if ((ell != 2 && ell != 3) || a < (ell == 2 ? 2 : 1) || x["i"] < 1) return {};
        const Nat li = pow_ui(x.u("ell"), x.u("i"));
        return ge(exact(class_count(iterated_wreath(x.u("ell"), x.u("a"), x.u("i")))),
                  pw(ell, Rat(a * li) - ratio(li - 1, Nat(ell - 1))));
      });
  add("eq_kDprime3", "l | w: k(D') >= l^((a - 1/(l-1)) w - sum a_i (a + i - (2l-1)/(l-1)))",
      "ell=2,3; a=1..6; w=1..60", [](const Args& x, std::size_t cap) -> std::optional<Eval> {
        const long ell = x["ell"], a = x["a"], w = x["w"];
        if ((ell != 2 && ell != 3) || a < (ell == 2 ? 2 : 1) || w % ell != 0) return {};
        const BlockParams p = ell == 2 ? gl2a(x.u("a"), x.u("w")) : BlockParams::gl3(x.u("a"), 1, x.u("w"));
        const auto A = digits(x.u("ell"), x.u("w"));
        const Rat c = q(2 * ell - 1, ell - 1);
        const Rat e = (a - q(1, ell - 1)) * w - weighted(A, 1, [&](long i) -> Rat { return Rat(a + i) - c; });
        return ge(sourced(k_D_prime(p, cap)), pw(ell, e));
      });
  add("eq_kDprime3_factor", "k(D_{i,l^a}') >= l^(a(l^i - 1) - (l^i - l)/(l-1) - i + 1)", "ell=2,3; a=1..6; i=1..6",
      [](const Args& x, std::size_t cap) -> std::optional<Eval> {
        const long ell = x["ell"], a = x["a"], i = x["i"];
        if ((ell != 2 && ell != 3) || a < (ell == 2 ? 2 : 1) || i < 1) return {};
        const Nat li = pow_ui(x.u("ell"), x.u("i"));
        const Rat e = Rat(a * (li - 1)) - ratio(li - ell, Nat(ell - 1)) - i + 1;
        return ge(sourced(derived_class_count_lower(iterated_wreath(x.u("ell"), x.u("a"), x.u("i")), cap)),
                  pw(ell, e));
      });
  add("eq_kDprime31", "l = 3, a = 1, 3 | w: k(D') >= 3^(2w/3 + sum a_i (1/2 - i))", "w=3..60:3",
      [](const Args& x, std::size_t cap) -> std::optional<Eval> {
        if (x["w"] % 3 != 0) return {};
        const auto A = digits(3, x.u("w"));
        const Rat e = q(2 * x["w"], 3) + weighted(A, 1, [](long i) -> Rat { return q(1, 2) - i; });
        return ge(sourced(k_D_prime(BlockParams::gl3(1, 1, x.u("w")), cap)), pw(3, e));
      });
  add("eq_kD31", "l = 3, a = 1, 3 | w: k(D) >= 3^(2w/3 + (1/2) sum a_i)", "w=3..60:3",
      [](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["w"] % 3 != 0) return {};
        const auto A = digits(3, x.u("w"));
        return ge(sourced(k_D(BlockParams::gl3(1, 1, x.u("w")))), pw(3, q(2 * x["w"], 3) + q(digit_sum(A, 1), 2)));
      });

  // Sylow 2-subgroups for eps q = 3 mod 4
  add("sylowb_kP1", "k(P_1) = 2", "atilde=2..6", [](const Args& x, std::size_t) -> std::optional<Eval> {
    if (x["atilde"] < 2) return {};
    return eq(exact(class_count(sylow_3mod4(x.u("atilde"), 0))), K(Nat(2)));
  });
  add("sylowb_kP2", "k(P_2) = 2^atilde + 3", "atilde=2..6", [](const Args& x, std::size_t) -> std::optional<Eval> {
    if (x["atilde"] < 2) return {};
    return eq(exact(class_count(sylow_3mod4(x.u("atilde"), 1))), K(Nat(pw2(x.u("atilde")) + 3)));
  });
  auto kP4_closed = [](unsigned at) -> Nat { return Nat(pw2(2 * at - 1) + 9 * pw2(at - 1) + 9); };
  add("sylowb_kP4", "k(P_4) = 2^(2 atilde - 1) + 9 2^(atilde - 1) + 9", "atilde=2..6",
      [=](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["atilde"] < 2) return {};
        return eq(exact(class_count(sylow_3mod4(x.u("atilde"), 2))), K(kP4_closed(x.u("atilde"))));
      });
  add("sylowb_kP4_mp", "k(2^atilde + 3, 2) = 2^(2 atilde - 1) + 9 2^(atilde - 1) + 9", "atilde=2..6",
      [=](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["atilde"] < 2) return {};
        return eq(exact(multipartition_count(Nat(pw2(x.u("atilde")) + 3), 2)), K(kP4_closed(x.u("atilde"))));
      });
  add("sylowb_kP2i_mid", "k(P_{2^i}) >= k(P_4)^(2^(i-2)) / 2^(2^(i-2) - 1) for i >= 2", "atilde=2..6; i=2..6",
      [](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["atilde"] < 2 || x["i"] < 2) return {};
        const unsigned long e = 1UL << (x.u("i") - 2);
        const Nat kp4 = class_count(sylow_3mod4(x.u("atilde"), 2));
        return ge(exact(class_count(sylow_3mod4(x.u("atilde"), x.u("i")))), K(ratio(pow_nat(kp4, e), pw2(e - 1))));
      });
  add("sylowb_kP2i", "k(P_{2^i}) >= 2^((atilde - 1) 2^(i-1) + 1) for i >= 2", "atilde=2..6; i=2..6",
      [](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["atilde"] < 2 || x["i"] < 2) return {};
        return ge(exact(class_count(sylow_3mod4(x.u("atilde"), x.u("i")))),
                  pw(2, Rat((x["atilde"] - 1) * (1L << (x["i"] - 1)) + 1)));
      });
  add("sylowb_kP1prime", "k(P_1') = 1", "atilde=2..6", [](const Args& x, std::size_t cap) -> std::optional<Eval> {
    if (x["atilde"] < 2) return {};
    return eq(exact(brute_derived_class_count(sylow_3mod4(x.u("atilde"), 0), cap)), K(Nat(1)));
  });
  add("sylowb_kP2prime", "k(P_2') = 2^atilde", "atilde=2..6", [](const Args& x, std::size_t cap) -> std::optional<Eval> {
    if (x["atilde"] < 2) return {};
    return eq(exact(brute_derived_class_count(sylow_3mod4(x.u("atilde"), 1), cap)), K(pw2(x.u("atilde"))));
  });
  add("sylowb_kP2i_prime_mid", "k(P_{2^i}') >= k(P_{2^(i-1)})^2 / 2^i for i >= 2 (P_{2^i}' has index 2^i in P_{2^(i-1)}^2)",
      "atilde=2..6; i=2..6", [](const Args& x, std::size_t cap) -> std::optional<Eval> {
        if (x["atilde"] < 2 || x["i"] < 2) return {};
        const Nat prev = class_count(sylow_3mod4(x.u("atilde"), x.u("i") - 1));
        return ge(sourced(derived_class_count_lower(sylow_3mod4(x.u("atilde"), x.u("i")), cap)),
                  K(ratio(Nat(prev * prev), pw2(x.u("i")))));
      });
  add("sylowb_kP2i_prime", "k(P_{2^i}') >= 2^((atilde - 1) 2^(i-1) - i + 2) for i >= 2", "atilde=2..6; i=2..6",
      [](const Args& x, std::size_t cap) -> std::optional<Eval> {
        if (x["atilde"] < 2 || x["i"] < 2) return {};
        return ge(sourced(derived_class_count_lower(sylow_3mod4(x.u("atilde"), x.u("i")), cap)),
                  pw(2, Rat((x["atilde"] - 1) * (1L << (x["i"] - 1)) - x["i"] + 2)));
      });

  // recursion lemma for eps q = 3 mod 4, at the (y, c) the proofs use
  add("recb_hyp", "sum_{W_t} k(2^atilde - 1, w_0) prod k(2^(atilde-1), w_i) <= 2^((atilde - y) t + c)",
      "atilde=2..6; t=0..60", [](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["atilde"] < 2) return {};
        const auto [y, c] = recb_yc(x.u("atilde"));
        return le(exact(recb_hyp_sum(x.u("atilde"), x.u("t"))), pw(2, (x["atilde"] - y) * x["t"] + c));
      });
  add("recb_conclusion",
      "k(B) <= 2^((atilde - y)(w - a_0)/2 + a_0 + 0.35 + c) sum_{j=0}^{(w-a_0)/2} (2^(2 + y - atilde))^j",
      "atilde=2..6; w=1..60", [](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["atilde"] < 2) return {};
        const auto [y, c] = recb_yc(x.u("atilde"));
        const long w = x["w"], a0 = w % 2, at = x["atilde"];
        const Rat head = (at - y) * q(w - a0, 2) + a0 + q(7, 20) + c;
        BoundSum rhs;
        for (long j = 0; j <= (w - a0) / 2; ++j) rhs = rhs + pw(2, head + j * (2 + y - at));
        return le(exact(k_B(gl2t(x.u("atilde"), x.u("w")))), rhs);
      });
  add("recb_geom_a4", "atilde >= 4: k(B) <= 2^((atilde - 1)(w - a_0)/2 + a_0 + 2.85)", "atilde=4..6; w=1..60",
      [](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["atilde"] < 4) return {};
        const long w = x["w"], a0 = w % 2;
        return le(exact(k_B(gl2t(x.u("atilde"), x.u("w")))),
                  pw(2, (x["atilde"] - 1) * q(w - a0, 2) + a0 + q(57, 20)));
      });
  add("kD_a4", "k(D) >= 2^((atilde - 1)(w - a_0)/2 + sum_{i>=0} a_i)", "atilde=2..6; w=1..60",
      [](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["atilde"] < 2) return {};
        const long w = x["w"], a0 = w % 2;
        const auto A = digits(2, x.u("w"));
        return ge(sourced(k_D(gl2t(x.u("atilde"), x.u("w")))),
                  pw(2, (x["atilde"] - 1) * q(w - a0, 2) + digit_sum(A, 0)));
      });
  add("kDprime_a4", "k(D') >= 2^((atilde - 1)(w - a_0)/2 - sum_{i>=1} (i - 2) a_i)", "atilde=2..6; w=1..60",
      [](const Args& x, std::size_t cap) -> std::optional<Eval> {
        if (x["atilde"] < 2) return {};
        const long w = x["w"], a0 = w % 2;
        const auto A = digits(2, x.u("w"));
        return ge(sourced(k_D_prime(gl2t(x.u("atilde"), x.u("w")), cap)),
                  pw(2, (x["atilde"] - 1) * q(w - a0, 2) - weighted(A, 1, [](long i) -> Rat { return Rat(i - 2); })));
      });
  add("a4_c2", "atilde >= 4, w >= 4: 2^((atilde-1)(w-a_0)/2 + a_0 + 2.85) <= pi(w) 2^((atilde-1)(w-a_0)/2 + sum a_i)",
      "atilde=4..6; w=4..60", [](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["atilde"] < 4 || x["w"] < 4) return {};
        const long w = x["w"], a0 = w % 2;
        const auto A = digits(2, x.u("w"));
        const Rat base = (x["atilde"] - 1) * q(w - a0, 2);
        return le(exact(pw(2, base + a0 + q(57, 20))), pw(2, base + digit_sum(A, 0), rat(pi(x.u("w")))));
      });
  add("a4_c1", "atilde >= 4, w >= 2: 2^(... + a_0 + 2.85) <= 2^((atilde-1)(w-a_0)/2 + a_0 + 3 sum_{i>=1} a_i)",
      "atilde=4..6; w=2..60", [](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["atilde"] < 4 || x["w"] < 2) return {};
        const long w = x["w"], a0 = w % 2;
        const auto A = digits(2, x.u("w"));
        const Rat base = (x["atilde"] - 1) * q(w - a0, 2) + a0;
        return le(exact(pw(2, base + q(57, 20))), pw(2, base + 3 * digit_sum(A, 1)));
      });
  add("a4_c1_last", "k0(B) k(D') >= 2^((atilde-1)(w-a_0)/2 + a_0 + 3 sum_{i>=1} a_i)", "atilde=2..6; w=1..60",
      [](const Args& x, std::size_t cap) -> std::optional<Eval> {
        if (x["atilde"] < 2) return {};
        const long w = x["w"], a0 = w % 2;
        const auto A = digits(2, x.u("w"));
        const BlockParams p = gl2t(x.u("atilde"), x.u("w"));
        const SourcedCount kd = k_D_prime(p, cap);
        return ge(sourced(Rat(Nat(k0_B(p) * kd.value)), kd.source),
                  pw(2, (x["atilde"] - 1) * q(w - a0, 2) + a0 + 3 * digit_sum(A, 1)));
      });

  // atilde = 3
  add("kB3", "atilde = 3: k(B) <= ((w - a_0)/2 + 1) 2^(w + 3.35)", "w=1..60",
      [](const Args& x, std::size_t) -> std::optional<Eval> {
        const long w = x["w"], a0 = w % 2;
        return le(exact(k_B(gl2t(3, x.u("w")))), pw(2, w + q(67, 20), q(w - a0, 2) + 1));
      });
  add("kB3_w11", "atilde = 3, w >= 11: k(B) <= 2^(1.3w + 2.7)", "w=11..60",
      [](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["w"] < 11) return {};
        return le(exact(k_B(gl2t(3, x.u("w")))), pw(2, q(13 * x["w"], 10) + q(27, 10)));
      });
  add("kB3_lin", "w >= 11: (w - a_0)/2 + 1 <= 2^(0.3w - 0.65)", "w=11..60",
      [](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["w"] < 11) return {};
        const long w = x["w"], a0 = w % 2;
        return le(exact(q(w - a0, 2) + 1), pw(2, q(3 * w, 10) - q(13, 20)));
      });
  add("kDb3_mid", "atilde = 3: k(D) >= 2^a_0 11^a_1 prod_{i>=2} (2^(1.3 2^i + 1))^a_i", "w=1..60",
      [](const Args& x, std::size_t) -> std::optional<Eval> {
        const auto A = digits(2, x.u("w"));
        const Rat coeff = Rat(Nat(pw2(dig(A, 0)) * pow_ui(11, dig(A, 1))));
        return ge(sourced(k_D(gl2t(3, x.u("w")))),
                  pw(2, weighted(A, 2, [](long i) -> Rat { return q(13 * (1L << i), 10) + 1; }), coeff));
      });
  add("kDb3", "atilde = 3: k(D) >= 2^(1.3w - 0.3 a_0 + 0.85 a_1 + sum_{i>=2} a_i)", "w=1..60",
      [](const Args& x, std::size_t) -> std::optional<Eval> {
        const auto A = digits(2, x.u("w"));
        const Rat e = q(13 * x["w"], 10) - q(3 * dig(A, 0), 10) + q(17 * dig(A, 1), 20) + digit_sum(A, 2);
        return ge(sourced(k_D(gl2t(3, x.u("w")))), pw(2, e));
      });
  add("kDprimeb3", "atilde = 3: k(D') >= 2^(1.3(w - a_0) + 0.4 a_1 + 0.8 a_2 - sum_{i>=3} (i-2) a_i)", "w=1..60",
      [](const Args& x, std::size_t cap) -> std::optional<Eval> {
        const auto A = digits(2, x.u("w"));
        const Rat e = q(13 * (x["w"] - dig(A, 0)), 10) + q(2 * dig(A, 1), 5) + q(4 * dig(A, 2), 5) -
                      weighted(A, 3, [](long i) -> Rat { return Rat(i - 2); });
        return ge(sourced(k_D_prime(gl2t(3, x.u("w")), cap)), pw(2, e));
      });
  auto dobby_exp = [](const std::vector<unsigned>& A, long w) -> Rat {
    return q(13 * w, 10) - q(3 * dig(A, 0), 10) + q(12 * dig(A, 1), 5) + q(4 * dig(A, 2), 5) + 3 * digit_sum(A, 2);
  };
  add("dobby_mid", "atilde = 3, w >= 11: 2^(1.3w + 2.7) <= 2^(1.3w - 0.3 a_0 + 2.4 a_1 + 0.8 a_2 + 3 sum_{i>=2} a_i)",
      "w=11..60", [=](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["w"] < 11) return {};
        return le(exact(pw(2, q(13 * x["w"], 10) + q(27, 10))), pw(2, dobby_exp(digits(2, x.u("w")), x["w"])));
      });
  add("dobby", "atilde = 3: k0(B) k(D') >= 2^(1.3w - 0.3 a_0 + 2.4 a_1 + 0.8 a_2 + 3 sum_{i>=2} a_i)", "w=1..60",
      [=](const Args& x, std::size_t cap) -> std::optional<Eval> {
        const BlockParams p = gl2t(3, x.u("w"));
        const SourcedCount kd = k_D_prime(p, cap);
        return ge(sourced(Rat(Nat(k0_B(p) * kd.value)), kd.source), pw(2, dobby_exp(digits(2, x.u("w")), x["w"])));
      });
  add("a3_c2", "atilde = 3, w >= 11: 2^(1.3w + 2.7) <= pi(w) 2^(1.3w - 0.3 a_0 + 0.85 a_1 + sum_{i>=2} a_i)",
      "w=11..60", [](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["w"] < 11) return {};
        const auto A = digits(2, x.u("w"));
        const Rat e = q(13 * x["w"], 10) - q(3 * dig(A, 0), 10) + q(17 * dig(A, 1), 20) + digit_sum(A, 2);
        return le(exact(pw(2, q(13 * x["w"], 10) + q(27, 10))), pw(2, e, rat(pi(x.u("w")))));
      });

  // atilde = 2
  add("a2_kB", "atilde = 2: k(B) <= 2^(w + 2.95)", "w=1..60", [](const Args& x, std::size_t) -> std::optional<Eval> {
    return le(exact(k_B(gl2t(2, x.u("w")))), pw(2, x["w"] + q(59, 20)));
  });
  add("toffi2_mid", "atilde = 2: k(D) >= 2^a_0 7^a_1 prod_{i>=2} (2^(2^i + 1))^a_i", "w=1..60",
      [](const Args& x, std::size_t) -> std::optional<Eval> {
        const auto A = digits(2, x.u("w"));
        const Rat coeff = Rat(Nat(pw2(dig(A, 0)) * pow_ui(7, dig(A, 1))));
        return ge(sourced(k_D(gl2t(2, x.u("w")))), pw(2, weighted(A, 2, [](long i) -> Rat { return Rat((1L << i) + 1); }), coeff));
      });
  add("toffi2", "atilde = 2: k(D) >= 2^(w + 0.8 a_1 + sum_{i>=2} a_i)", "w=1..60",
      [](const Args& x, std::size_t) -> std::optional<Eval> {
        const auto A = digits(2, x.u("w"));
        return ge(sourced(k_D(gl2t(2, x.u("w")))), pw(2, x["w"] + q(4 * dig(A, 1), 5) + digit_sum(A, 2)));
      });
  add("toffi3_mid", "atilde = 2: k(D') >= 2^(2 a_1) 2^(4.45 a_2) prod_{i>=3} (2^(2^i - i + 2))^a_i", "w=1..60",
      [](const Args& x, std::size_t cap) -> std::optional<Eval> {
        const auto A = digits(2, x.u("w"));
        const Rat e = Rat(2 * dig(A, 1)) + q(89 * dig(A, 2), 20) + weighted(A, 3, [](long i) -> Rat { return Rat((1L << i) - i + 2); });
        return ge(sourced(k_D_prime(gl2t(2, x.u("w")), cap)), pw(2, e));
      });
  add("toffi3", "atilde = 2: k(D') >= 2^(w - a_0 + 0.45 a_2 - sum_{i>=3} (i-2) a_i)", "w=1..60",
      [](const Args& x, std::size_t cap) -> std::optional<Eval> {
        const auto A = digits(2, x.u("w"));
        const Rat e = Rat(x["w"] - dig(A, 0)) + q(9 * dig(A, 2), 20) - weighted(A, 3, [](long i) -> Rat { return Rat(i - 2); });
        return ge(sourced(k_D_prime(gl2t(2, x.u("w")), cap)), pw(2, e));
      });
  add("toffi", "atilde = 2, w >= 4: 2^(w + 2.95) <= 2^(w + 2 a_1 + 0.45 a_2 + 3 sum_{i>=2} a_i)", "w=4..60",
      [](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["w"] < 4) return {};
        const auto A = digits(2, x.u("w"));
        const Rat e = Rat(x["w"] + 2 * dig(A, 1)) + q(9 * dig(A, 2), 20) + 3 * digit_sum(A, 2);
        return le(exact(pw(2, x["w"] + q(59, 20))), pw(2, e));
      });
  add(
      "toffi_literal", "atilde = 2, w >= 4: k(B) <= 2^(w + 0.95) as displayed", "w=4..60",
      [](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["w"] < 4) return {};
        return le(exact(k_B(gl2t(2, x.u("w")))), pw(2, x["w"] + q(19, 20)));
      },
      [](const Args& x) { return x["w"] <= 12; },
      "w <= 12: the displayed constant 0.95 is below what the proof derives (2.95); k^4(B) = 46 > 2^4.95");
  add("toffi_c1_last", "atilde = 2: k0(B) k(D') >= 2^(w + 2 a_1 + 0.45 a_2 + 3 sum_{i>=2} a_i)", "w=1..60",
      [](const Args& x, std::size_t cap) -> std::optional<Eval> {
        const auto A = digits(2, x.u("w"));
        const BlockParams p = gl2t(2, x.u("w"));
        const SourcedCount kd = k_D_prime(p, cap);
        const Rat e = Rat(x["w"] + 2 * dig(A, 1)) + q(9 * dig(A, 2), 20) + 3 * digit_sum(A, 2);
        return ge(sourced(Rat(Nat(k0_B(p) * kd.value)), kd.source), pw(2, e));
      });
  add("a2_c2", "atilde = 2, w >= 4: 2^(w + 2.95) <= pi(w) 2^(w + 0.8 a_1 + sum_{i>=2} a_i)", "w=4..60",
      [](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["w"] < 4) return {};
        const auto A = digits(2, x.u("w"));
        return le(exact(pw(2, x["w"] + q(59, 20))),
                  pw(2, x["w"] + q(4 * dig(A, 1), 5) + digit_sum(A, 2), rat(pi(x.u("w")))));
      });

  // GL, l = 3, a >= 2
  auto gl3_c1_rhs = [](long a, long d, long w) {
    const auto A = digits(3, static_cast<unsigned>(w));
    const long S = digit_sum(A, 1);
    return pw(3, (a - q(1, 2)) * w + q(3 * S, 2), Rat(1, pow_ui(static_cast<unsigned long>(d), S)));
  };
  add(
      "gl3_c1_chain", "a >= 2, 3 | w: p_3(w) 3^((a - 5/6) w + 2 - log_3 d) <= 3^((a - 1/2) w + (3/2 - log_3 d) sum a_i)",
      "a=2..6; d=1,2; w=3..60:3",
      [=](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["a"] < 2 || x["w"] % 3 != 0 || (x["d"] != 1 && x["d"] != 2)) return {};
        return le(exact(pw(3, (x["a"] - q(5, 6)) * x["w"] + 2, ratio(p3(x.u("w")), Nat(x["d"])))),
                  gl3_c1_rhs(x["a"], x["d"], x["w"]));
      },
      [](const Args& x) { return x["w"] == 3; },
      "w=3: inserting p_3(3) = 2 leaves a factor 2/sqrt(3) > 1; (C1) itself still holds there");
  add("gl3_c1_last", "a >= 2, 3 | w: k0(B) k(D') >= 3^((a - 1/2) w + (3/2 - log_3 d) sum a_i)",
      "a=2..6; d=1,2; w=3..60:3", [=](const Args& x, std::size_t cap) -> std::optional<Eval> {
        if (x["a"] < 2 || x["w"] % 3 != 0 || (x["d"] != 1 && x["d"] != 2)) return {};
        const BlockParams p = BlockParams::gl3(x.u("a"), x.u("d"), x.u("w"));
        const SourcedCount kd = k_D_prime(p, cap);
        return ge(sourced(Rat(Nat(k0_B(p) * kd.value)), kd.source), gl3_c1_rhs(x["a"], x["d"], x["w"]));
      });
  add(
      "gl3_c2_chain", "a >= 2, 3 | w: p_3(w) 3^((a - 5/6) w + 2 - log_3 d) <= pi(w) 3^((a - 1/2) w + (1/2) sum a_i)",
      "a=2..6; d=1,2; w=3..60:3",
      [](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["a"] < 2 || x["w"] % 3 != 0 || (x["d"] != 1 && x["d"] != 2)) return {};
        const auto A = digits(3, x.u("w"));
        return le(exact(pw(3, (x["a"] - q(5, 6)) * x["w"] + 2, ratio(p3(x.u("w")), Nat(x["d"])))),
                  pw(3, (x["a"] - q(1, 2)) * x["w"] + q(digit_sum(A, 1), 2), rat(pi(x.u("w")))));
      },
      [](const Args& x) { return x["w"] == 3 && x["d"] == 1; },
      "w=3, d=1: inserting p_3(3) = 2 leaves a factor 2/sqrt(3) > 1; (C2) itself still holds there");
  add("gl3_c2_last", "a >= 2, 3 | w: l(B) k(D) >= pi(w) 3^((a - 1/2) w + (1/2) sum a_i)", "a=2..6; d=1,2; w=3..60:3",
      [](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["a"] < 2 || x["w"] % 3 != 0 || (x["d"] != 1 && x["d"] != 2)) return {};
        const BlockParams p = BlockParams::gl3(x.u("a"), x.u("d"), x.u("w"));
        const auto A = digits(3, x.u("w"));
        const SourcedCount kd = k_D(p);
        return ge(sourced(Rat(Nat(l_B_lower(p) * kd.value)), CountSource::LowerBound),
                  pw(3, (x["a"] - q(1, 2)) * x["w"] + q(digit_sum(A, 1), 2), rat(pi(x.u("w")))));
      });

  // GL, l = 3, a = 1
  auto a1_c1_exp = [](long w) -> Rat {
    const auto A = digits(3, static_cast<unsigned>(w));
    return q(2 * w, 3) + q(digit_sum(A, 1), 2) + nonzero_count(A, 1);
  };
  add("gl3_a1_c1", "a = 1, 3 | w, w >= 12: 3^((w+7)/2) <= 3^(2w/3 + (1/2) sum a_i + #{a_i != 0})", "w=12..60:3",
      [=](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["w"] % 3 != 0 || x["w"] < 12) return {};
        return le(exact(pw(3, q(x["w"] + 7, 2))), pw(3, a1_c1_exp(x["w"])));
      });
  add("gl3_a1_c1_last", "a = 1, 3 | w: k0(B) k(D') >= 3^(2w/3 + (1/2) sum a_i + #{a_i != 0})", "d=1,2; w=3..60:3",
      [=](const Args& x, std::size_t cap) -> std::optional<Eval> {
        if (x["w"] % 3 != 0 || (x["d"] != 1 && x["d"] != 2)) return {};
        const BlockParams p = BlockParams::gl3(1, x.u("d"), x.u("w"));
        const SourcedCount kd = k_D_prime(p, cap);
        return ge(sourced(Rat(Nat(k0_B(p) * kd.value)), kd.source), pw(3, a1_c1_exp(x["w"])));
      });
  add("gl3_a1_c2", "a = 1, 3 | w, w >= 6: 3^((w+7)/2) <= pi(w) 3^(2w/3 + (1/2) sum a_i)", "w=6..60:3",
      [](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["w"] % 3 != 0 || x["w"] < 6) return {};
        const auto A = digits(3, x.u("w"));
        return le(exact(pw(3, q(x["w"] + 7, 2))), pw(3, q(2 * x["w"], 3) + q(digit_sum(A, 1), 2), rat(pi(x.u("w")))));
      });
  add("gl3_a1_c2_last", "a = 1, 3 | w: l(B) k(D) >= pi(w) 3^(2w/3 + (1/2) sum a_i)", "d=1,2; w=3..60:3",
      [](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["w"] % 3 != 0 || (x["d"] != 1 && x["d"] != 2)) return {};
        const BlockParams p = BlockParams::gl3(1, x.u("d"), x.u("w"));
        const auto A = digits(3, x.u("w"));
        return ge(sourced(Rat(Nat(l_B_lower(p) * k_D(p).value)), CountSource::LowerBound),
                  pw(3, q(2 * x["w"], 3) + q(digit_sum(A, 1), 2), rat(pi(x.u("w")))));
      });
  add("gl3_a1_small", "a = 1: k^3(B) = 24 < 3^3, k^6(B) = 270 < 3^6, k^9(B) = 2043 < 3^7", "w=3,6,9",
      [](const Args& x, std::size_t) -> std::optional<Eval> {
        const long w = x["w"];
        if (w != 3 && w != 6 && w != 9) return {};
        return le(exact(k_B_gl3(1, 1, x.u("w"))), pw(3, Rat(w == 9 ? 7 : w)));
      });

  // GL, l = 2, eps q = 1 mod 4
  add("l2_c1", "a >= 3, w even: 2^((a-1) w + 3) <= 2^((a-1) w + 3 sum_{i>=1} a_i)", "a=3..6; w=2..60:2",
      [](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["a"] < 3 || x["w"] % 2 != 0) return {};
        const auto A = digits(2, x.u("w"));
        const long base = (x["a"] - 1) * x["w"];
        return le(exact(pw(2, Rat(base + 3))), pw(2, Rat(base + 3 * digit_sum(A, 1))));
      });
  add("l2_c1_last", "a >= 3, w even: k0(B) k(D') >= 2^((a-1) w + 3 sum_{i>=1} a_i)", "a=3..6; w=2..60:2",
      [](const Args& x, std::size_t cap) -> std::optional<Eval> {
        if (x["a"] < 3 || x["w"] % 2 != 0) return {};
        const BlockParams p = gl2a(x.u("a"), x.u("w"));
        const auto A = digits(2, x.u("w"));
        const SourcedCount kd = k_D_prime(p, cap);
        return ge(sourced(Rat(Nat(k0_B(p) * kd.value)), kd.source),
                  pw(2, Rat((x["a"] - 1) * x["w"] + 3 * digit_sum(A, 1))));
      });
  add("l2_c2", "a >= 3, w >= 4 even: 2^((a-1) w + 3) <= pi(w) 2^((a-1) w + sum a_i)", "a=3..6; w=4..60:2",
      [](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["a"] < 3 || x["w"] % 2 != 0 || x["w"] < 4) return {};
        const auto A = digits(2, x.u("w"));
        const long base = (x["a"] - 1) * x["w"];
        return le(exact(pw(2, Rat(base + 3))), pw(2, Rat(base + digit_sum(A, 1)), rat(pi(x.u("w")))));
      });
  add("l2_c2_last", "a >= 3, w even: l(B) k(D) >= pi(w) 2^((a-1) w + sum a_i)", "a=3..6; w=2..60:2",
      [](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["a"] < 3 || x["w"] % 2 != 0) return {};
        const BlockParams p = gl2a(x.u("a"), x.u("w"));
        const auto A = digits(2, x.u("w"));
        return ge(sourced(Rat(Nat(l_B_lower(p) * k_D(p).value)), CountSource::LowerBound),
                  pw(2, Rat((x["a"] - 1) * x["w"] + digit_sum(A, 1)), rat(pi(x.u("w")))));
      });
  add("l2a2_kD_factor", "k(D_{i,4}) >= 2^(1.4 2^i + 1)", "i=1..6", [](const Args& x, std::size_t) -> std::optional<Eval> {
    if (x["i"] < 1) return {};
    return ge(exact(class_count(iterated_wreath(2, 2, x.u("i")))), pw(2, q(7 * (1L << x["i"]), 5) + 1));
  });
  add("l2a2_kDprime_factor", "k(D_{1,4}') >= 2^2 and k(D_{i,4}') >= 2^(1.4 2^i - i + 1) for i >= 2", "i=1..6",
      [](const Args& x, std::size_t cap) -> std::optional<Eval> {
        if (x["i"] < 1) return {};
        const long i = x["i"];
        const Rat e = i == 1 ? Rat(2) : q(7 * (1L << i), 5) - i + 1;
        return ge(sourced(derived_class_count_lower(iterated_wreath(2, 2, x.u("i")), cap)), pw(2, e));
      });
  add("l2a2_kD", "a = 2: k(D) >= 2^(1.4w + sum_{i>=1} a_i)", "w=2..60:2",
      [](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["w"] % 2 != 0) return {};
        const auto A = digits(2, x.u("w"));
        return ge(sourced(k_D(gl2a(2, x.u("w")))), pw(2, q(7 * x["w"], 5) + digit_sum(A, 1)));
      });
  add("l2a2_kDprime", "a = 2: k(D') >= 2^(1.4w + sum_{i>=2} a_i (1 - i) - 0.8 a_1)", "w=2..60:2",
      [](const Args& x, std::size_t cap) -> std::optional<Eval> {
        if (x["w"] % 2 != 0) return {};
        const auto A = digits(2, x.u("w"));
        const Rat e = q(7 * x["w"], 5) + weighted(A, 2, [](long i) -> Rat { return Rat(1 - i); }) - q(4 * dig(A, 1), 5);
        return ge(sourced(k_D_prime(gl2a(2, x.u("w")), cap)), pw(2, e));
      });
  auto l2a2_c1_exp = [](long w) -> Rat {
    const auto A = digits(2, static_cast<unsigned>(w));
    return q(7 * w, 5) + 3 * digit_sum(A, 2) + q(11 * dig(A, 1), 5);
  };
  add("l2a2_c1", "a = 2, w even: 2^(1.4w + 1.65) <= 2^(1.4w + 3 sum_{i>=2} a_i + 2.2 a_1)", "w=2..60:2",
      [=](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["w"] % 2 != 0) return {};
        return le(exact(pw(2, q(7 * x["w"], 5) + q(33, 20))), pw(2, l2a2_c1_exp(x["w"])));
      });
  add("l2a2_c1_last", "a = 2, w even: k0(B) k(D') >= 2^(1.4w + 3 sum_{i>=2} a_i + 2.2 a_1)", "w=2..60:2",
      [=](const Args& x, std::size_t cap) -> std::optional<Eval> {
        if (x["w"] % 2 != 0) return {};
        const BlockParams p = gl2a(2, x.u("w"));
        const SourcedCount kd = k_D_prime(p, cap);
        return ge(sourced(Rat(Nat(k0_B(p) * kd.value)), kd.source), pw(2, l2a2_c1_exp(x["w"])));
      });
  add("l2a2_c2", "a = 2, w >= 2: 2^(1.4w + 1.65) <= pi(w) 2^(1.4w + 1)", "w=2..60",
      [](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["w"] < 2) return {};
        return le(exact(pw(2, q(7 * x["w"], 5) + q(33, 20))), pw(2, q(7 * x["w"], 5) + 1, rat(pi(x.u("w")))));
      });
  add("l2a2_c2_last", "a = 2, w even: l(B) k(D) >= pi(w) 2^(1.4w + 1)", "w=2..60:2",
      [](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["w"] % 2 != 0) return {};
        const BlockParams p = gl2a(2, x.u("w"));
        return ge(sourced(Rat(Nat(l_B_lower(p) * k_D(p).value)), CountSource::LowerBound),
                  pw(2, q(7 * x["w"], 5) + 1, rat(pi(x.u("w")))));
      });

  // SL / SU, 3 | q - eps
  add("abschaetzung_sl", "a >= 2, w >= 6, 3 | w, 1 <= j <= min(a, v_3(w)): 3j + aw/3^j <= (a - 5/6) w",
      "a=2..6; w=6..60:3; j=1..6", [](const Args& x, std::size_t) -> std::optional<Eval> {
        const long a = x["a"], w = x["w"], j = x["j"];
        if (a < 2 || w < 6 || w % 3 != 0 || j < 1 || j > static_cast<long>(sl_m(x.u("a"), x.u("w")))) return {};
        return le(exact(Rat(3 * j) + ratio(Nat(a * w), pw3(x.u("j")))), K((a - q(5, 6)) * w));
      });
  add("kBsl_1", "a >= 2, w >= 6, 3 | w: the k(B) upper bound <= p_3(w) 3^(a(w-1) - 5w/6 + log_3(19/18) + 2)",
      "a=2..6; w=6..60:3", [](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["a"] < 2 || x["w"] < 6 || x["w"] % 3 != 0) return {};
        const long a = x["a"], w = x["w"];
        return le(exact(k_B_sl_upper_rat(x.u("a"), x.u("w"))),
                  pw(3, Rat(a * (w - 1)) - q(5 * w, 6) + 2, rat(p3(x.u("w"))) * q(19, 18)));
      });
  add("kBsl_2", "a >= 2, w >= 6, 3 | w: p_3(w) 3^(a(w-1) - 5w/6 + c) <= 3^(a(w-1) - 2w/3 + c), c = log_3(19/18) + 2",
      "a=2..6; w=6..60:3", [](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["a"] < 2 || x["w"] < 6 || x["w"] % 3 != 0) return {};
        const long a = x["a"], w = x["w"];
        return le(exact(pw(3, Rat(a * (w - 1)) - q(5 * w, 6) + 2, rat(p3(x.u("w"))) * q(19, 18))),
                  pw(3, Rat(a * (w - 1)) - q(2 * w, 3) + 2, q(19, 18)));
      });
  add("kBsl_termwise", "k(3,a,1,x) <= p_3(x) 3^(a x)", "a=1..6; x=0..60",
      [](const Args& x, std::size_t) -> std::optional<Eval> {
        return le(exact(k_B_gl3(x.u("a"), 1, x.u("x"))), pw(3, Rat(x["a"] * x["x"]), rat(p3(x.u("x")))));
      });
  add("kDbar", "3 | w: k(D~)/3^(a+m) >= 3^(a(w-1) - w/2 - m + (1/2) sum a_i)", "a=2..6; w=3..60:3",
      [](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["a"] < 1 || x["w"] % 3 != 0) return {};
        const long a = x["a"], w = x["w"], m = sl_m(x.u("a"), x.u("w"));
        const auto A = digits(3, x.u("w"));
        return ge(exact(ratio(class_count(sl_tilde_defect(x.u("a"), x.u("w"))), pw3(static_cast<unsigned long>(a + m)))),
                  pw(3, Rat(a * (w - 1)) - q(w, 2) - m + q(digit_sum(A, 1), 2)));
      });
  add("sl_c2_quot", "a >= 2, w >= 6, 3 | w: (pi(w)/p_3(w)) 3^(w/3 - m - log_3(19/18) + (1/2) sum a_i - 2) >= 1",
      "a=2..6; w=6..60:3", [](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["a"] < 2 || x["w"] < 6 || x["w"] % 3 != 0) return {};
        const long w = x["w"], m = sl_m(x.u("a"), x.u("w"));
        const auto A = digits(3, x.u("w"));
        return le(exact(K(Rat(1))), pw(3, q(w, 3) - m + q(digit_sum(A, 1), 2) - 2,
                                       ratio(pi(x.u("w")), p3(x.u("w"))) * q(18, 19)));
      });
  add("kDbar_prime", "3 | w: k(D~')/3^(m+delta) >= 3^((a - 1/2) w - sum a_i (a + i - 5/2) - m - delta)",
      "a=2..6; w=3..60:3", [](const Args& x, std::size_t cap) -> std::optional<Eval> {
        if (x["a"] < 1 || x["w"] % 3 != 0) return {};
        const long a = x["a"], w = x["w"], m = sl_m(x.u("a"), x.u("w")), delta = sl_delta(x.u("w"));
        const auto A = digits(3, x.u("w"));
        const SourcedCount t = derived_class_count_lower(sl_tilde_defect(x.u("a"), x.u("w")), cap);
        const Rat e = (a - q(1, 2)) * w - weighted(A, 1, [&](long i) -> Rat { return Rat(a + i) - q(5, 2); }) - m - delta;
        return ge(sourced(ratio(t.value, pw3(static_cast<unsigned long>(m + delta))), t.source), pw(3, e));
      });
  add("k0_sl", "3 | w: k0(B~)/3^a >= 3^(sum_{i>=1} a_i (a + i - 1) - a)", "a=1..6; w=3..60:3",
      [](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["a"] < 1 || x["w"] % 3 != 0) return {};
        const long a = x["a"];
        const auto A = digits(3, x.u("w"));
        return ge(exact(ratio(k0_B_gl3(x.u("a"), 1, x.u("w")), pw3(x.u("a")))),
                  pw(3, weighted(A, 1, [&](long i) -> Rat { return Rat(a + i - 1); }) - a));
      });
  add("sl_c1_quot", "a >= 2, 3 | w, w >= 6, w != 9: 3^(w/6 + (3/2) sum a_i - log_3(19/18) - m - 2 - delta) >= 1",
      "a=2..6; w=6..60:3", [](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["a"] < 2 || x["w"] < 6 || x["w"] % 3 != 0 || x["w"] == 9) return {};
        const long w = x["w"], m = sl_m(x.u("a"), x.u("w")), delta = sl_delta(x.u("w"));
        const auto A = digits(3, x.u("w"));
        return le(exact(K(Rat(1))), pw(3, q(w, 6) + q(3 * digit_sum(A, 1), 2) - m - 2 - delta, q(18, 19)));
      },
      [](const Args& x) { return x["w"] == 27 && x["a"] >= 3; },
      "w=27, a >= 3: m = 3, delta = 1 and the exponent is exactly -log_3(19/18)");
  add("sl_w9_k3a19", "a >= 3: k(3,a,1,9) <= 3^(9a - 6)", "a=3..6", [](const Args& x, std::size_t) -> std::optional<Eval> {
    if (x["a"] < 3) return {};
    return le(exact(k_B_gl3(x.u("a"), 1, 9)), pw(3, Rat(9 * x["a"] - 6)));
  });
  add("sl_w9_kB_chain", "a >= 3: (3^(9a-6) + 2 3^(2+3a) + 3^(4+a))/3^a <= 2 3^(8a-6)", "a=3..6",
      [](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["a"] < 3) return {};
        const unsigned a = x.u("a");
        return le(exact(ratio(Nat(pw3(9 * a - 6) + 2 * pw3(2 + 3 * a) + pw3(4 + a)), pw3(a))), K(Nat(2 * pw3(8 * a - 6))));
      });
  add("sl_w9_kB", "a >= 3, w = 9: the k(B) upper bound <= 2 3^(8a-6)", "a=3..6",
      [](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["a"] < 3) return {};
        return le(exact(k_B_sl_upper_rat(x.u("a"), 9)), K(Nat(2 * pw3(8 * x.u("a") - 6))));
      });
  add("sl_w9_kDbarprime", "a >= 2, w = 9: k(Dbar') >= 3^(8a - 7)", "a=2..6",
      [](const Args& x, std::size_t cap) -> std::optional<Eval> {
        if (x["a"] < 2) return {};
        return ge(sourced(sl_k_Dbar_prime_lower(x.u("a"), 9, cap)), pw(3, Rat(8 * x["a"] - 7)));
      });
  add("sl_w9_a2", "a = 2, w = 9: k(B) <= 45687", "a=2", [](const Args& x, std::size_t) -> std::optional<Eval> {
    if (x["a"] != 2) return {};
    return le(exact(k_B_sl_upper(2, 9)), K(Nat(45687)));
  });
  add("sl_w3_k3a3", "a >= 2: k(3^a,3) <= 0.35 3^(3a)", "a=2..6", [](const Args& x, std::size_t) -> std::optional<Eval> {
    if (x["a"] < 2) return {};
    return le(exact(multipartition_count(pw3(x.u("a")), 3)), pw(3, Rat(3 * x["a"]), q(7, 20)));
  });
  add("sl_w3_kB", "a >= 2, w = 3: k(B) = (k(3^a,3) + 3^(2+a) - 3^(a-1))/3^a <= 5 3^(2a-2)", "a=2..6",
      [](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["a"] < 2) return {};
        return le(exact(k_B_sl_w3_exact(x.u("a"))), K(Nat(5 * pw3(2 * x.u("a") - 2))));
      });
  add("sl_w3_kB_chain", "a >= 2: 0.35 3^(2a) + 9 - 1/3 <= 5 3^(2a-2)", "a=2..6",
      [](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["a"] < 2) return {};
        return le(exact(pw(3, Rat(2 * x["a"]), q(7, 20)) + K(q(26, 3))), K(Nat(5 * pw3(2 * x.u("a") - 2))));
      });
  add("sl_w3_kDbar", "a >= 2, w = 3: k(Dbar) >= 3^(2a-2)", "a=2..6", [](const Args& x, std::size_t) -> std::optional<Eval> {
    if (x["a"] < 2) return {};
    return ge(sourced(sl_k_Dbar_lower(x.u("a"), 3)), pw(3, Rat(2 * x["a"] - 2)));
  });
  add("sl_w3_kDbarprime", "a >= 2, w = 3: k(Dbar') >= 3^(2a-2)", "a=2..6",
      [](const Args& x, std::size_t cap) -> std::optional<Eval> {
        if (x["a"] < 2) return {};
        return ge(sourced(sl_k_Dbar_prime_lower(x.u("a"), 3, cap)), pw(3, Rat(2 * x["a"] - 2)));
      });

  // SL / SU, a = 1
  add("kDa1wleq10", "a = 1, 3 | w: k(D~)/9 >= 3^(2w/3 + (1/2) sum a_i - 2)", "w=6..60:3",
      [](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["w"] % 3 != 0) return {};
        const auto A = digits(3, x.u("w"));
        return ge(exact(ratio(class_count(sl_tilde_defect(1, x.u("w"))), Nat(9))),
                  pw(3, q(2 * x["w"], 3) + q(digit_sum(A, 1), 2) - 2));
      });
  add("kbsla1", "a = 1, 3 | w, w >= 6: the k(B) upper bound <= 3^(w/2 + 5/2) + 3^(1 + w/2)", "w=6..60:3",
      [](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["w"] % 3 != 0 || x["w"] < 6) return {};
        return le(exact(k_B_sl_upper_rat(1, x.u("w"))), pw(3, q(x["w"] + 5, 2)) + pw(3, q(x["w"] + 2, 2)));
      });
  add("kbsla1_sum", "3^(w/2 + 5/2) + 3^(1 + w/2) <= 3^(w/2 + 2.67)", "w=6..60:3",
      [](const Args& x, std::size_t) -> std::optional<Eval> {
        return le(exact(pw(3, q(x["w"] + 5, 2)) + pw(3, q(x["w"] + 2, 2))), pw(3, q(x["w"], 2) + q(267, 100)));
      });
  add("sl_a1_c2_lB", "w >= 15: pi(w) >= 3^4.67", "w=15..60:3", [](const Args& x, std::size_t) -> std::optional<Eval> {
    if (x["w"] < 15) return {};
    return ge(exact(pi(x.u("w"))), pw(3, q(467, 100)));
  });
  add("sl_a1_c2", "a = 1, 3 | w, w >= 9: pi(w) 3^(2w/3 + (1/2) sum a_i - 2) >= 3^(w/2 + 2.67)", "w=9..60:3",
      [](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["w"] % 3 != 0 || x["w"] < 9) return {};
        const auto A = digits(3, x.u("w"));
        return ge(exact(pw(3, q(2 * x["w"], 3) + q(digit_sum(A, 1), 2) - 2, rat(pi(x.u("w"))))),
                  pw(3, q(x["w"], 2) + q(267, 100)));
      });
  add("sl_a1_w6_kB", "a = 1, w = 6: k(B) <= (k(3,1,1,6) + 3^4)/3 = 117", "w=6",
      [](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["w"] != 6) return {};
        return eq(exact(k_B_sl_upper(1, 6)), K(Nat(117)));
      });
  add("sl_a1_w6_kDbar", "a = 1, w = 6: k(Dbar) >= 3^3", "w=6", [](const Args& x, std::size_t) -> std::optional<Eval> {
    if (x["w"] != 6) return {};
    return ge(sourced(sl_k_Dbar_lower(1, 6)), pw(3, Rat(3)));
  });
  add("sl_a1_w6_lB", "a = 1, w = 6: l(Bbar) >= k(1,6) = 11", "w=6", [](const Args& x, std::size_t) -> std::optional<Eval> {
    if (x["w"] != 6) return {};
    return eq(exact(multipartition_count(1UL, 6)), K(Nat(11)));
  });
  add(
      "sl_a1_w6_k0", "a = 1, w = 6: k0(B) >= k0(B~)/3 = k(3^3,2)/3 = 135 as displayed", "w=6",
      [](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["w"] != 6) return {};
        return ge(exact(ratio(k0_B_gl3(1, 1, 6), Nat(3))), K(Nat(135)));
      },
      [](const Args& x) { return x["w"] == 6; },
      "w=6: k0(B~) = k(3^2,2) = 54 (digit a_1 = 2 sits at 3^1), so k0(B~)/3 = 18, not 135");
  add("kDprime_sl_a1", "a = 1, 3 | w: k(D~')/3^(1+delta) >= 3^(2w/3 + sum a_i (1/2 - i) - 1 - delta)", "w=6..60:3",
      [](const Args& x, std::size_t cap) -> std::optional<Eval> {
        if (x["w"] % 3 != 0) return {};
        const long delta = sl_delta(x.u("w"));
        const auto A = digits(3, x.u("w"));
        const SourcedCount t = derived_class_count_lower(sl_tilde_defect(1, x.u("w")), cap);
        const Rat e = q(2 * x["w"], 3) + weighted(A, 1, [](long i) -> Rat { return q(1, 2) - i; }) - 1 - delta;
        return ge(sourced(ratio(t.value, pw3(static_cast<unsigned long>(1 + delta))), t.source), pw(3, e));
      });
  add("sl_a1_c1_quot", "a = 1, 3 | w, w >= 12: 3^(w/6 - 4.67 + (1/2) sum a_i + #{a_i != 0} - delta) >= 1", "w=12..60:3",
      [](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["w"] % 3 != 0 || x["w"] < 12) return {};
        const auto A = digits(3, x.u("w"));
        const Rat e = q(x["w"], 6) - q(467, 100) + q(digit_sum(A, 1), 2) + nonzero_count(A, 1) - sl_delta(x.u("w"));
        return le(exact(K(Rat(1))), pw(3, e));
      });
  add("sl_a1_w9_kDbarprime", "a = 1, w = 9: k(D_{1,3})^3/81 >= 3^3.5", "w=9",
      [](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["w"] != 9) return {};
        const Nat k = class_count(iterated_wreath(3, 1, 1));
        return ge(exact(ratio(Nat(k * k * k), Nat(81))), pw(3, q(7, 2)));
      });
  add(
      "sl_a1_w9_kB", "a = 1, w = 9: the k(B) upper bound <= 745 as displayed", "w=9",
      [](const Args& x, std::size_t) -> std::optional<Eval> {
        if (x["w"] != 9) return {};
        return le(exact(k_B_sl_upper(1, 9)), K(Nat(745)));
      },
      [](const Args& x) { return x["w"] == 9; },
      "w=9: the bound evaluates to ceil((2043 + 2 3^5)/3) = 843; 745 matches b_1 = 1 instead of 2");
  add("sl_a1_w3_kB", "a = 1, w = 3: k(B) = 16", "w=3", [](const Args& x, std::size_t) -> std::optional<Eval> {
    if (x["w"] != 3) return {};
    return eq(exact(k_B_sl_w3_exact(1)), K(Nat(16)));
  });
  add("sl_a1_w3_order", "a = 1, w = 3: |D~| = 81", "w=3", [](const Args& x, std::size_t) -> std::optional<Eval> {
    if (x["w"] != 3) return {};
    return eq(exact(group_order(sl_tilde_defect(1, 3))), K(Nat(81)));
  });
  add("sl_a1_w3_kDtildeprime", "a = 1, w = 3: |D~'| = 9 and D~' is abelian, k(D~') = 9", "w=3",
      [](const Args& x, std::size_t cap) -> std::optional<Eval> {
        if (x["w"] != 3) return {};
        return eq(exact(brute_derived_class_count(sl_tilde_defect(1, 3), cap)), K(Nat(9)));
      });

  std::sort(R.begin(), R.end(), [](const Lemma& x, const Lemma& y) { return x.info.id < y.info.id; });
  for (std::size_t i = 1; i < R.size(); ++i)
    if (R[i].info.id == R[i - 1].info.id) throw InternalError("duplicate lemma id " + R[i].info.id);
  return R;
}

const std::vector<Lemma>& registry() {
  static const std::vector<Lemma> r = build_registry();
  return r;
}

std::string side_text(const BoundSum& s) {
  if (s.size() == 1)
    if (auto v = exact_value(s[0])) return to_string(*v);
  return to_string(s);
}

const char* rel_text(Rel r) {
  switch (r) {
    case Rel::LE: return "<=";
    case Rel::GE: return ">=";
    case Rel::EQ: return "=";
  }
  return "?";
}

const char* kind_text(Kind k) {
  switch (k) {
    case Kind::Exact: return "exact";
    case Kind::Upper: return "upper_bound";
    case Kind::Lower: return "lower_bound";
  }
  return "?";
}

Verdict decide(const Eval& e, std::optional<int> c) {
  if (!c) return Verdict::Undecided;
  switch (e.rel) {
    case Rel::EQ:
      if (e.lhs.kind != Kind::Exact) return Verdict::Undecided;
      return *c == 0 ? Verdict::Holds : Verdict::Fails;
    case Rel::LE:
      if (*c <= 0) return e.lhs.kind == Kind::Lower ? Verdict::Undecided : Verdict::Holds;
      return e.lhs.kind == Kind::Exact || e.lhs.kind == Kind::Lower ? Verdict::Fails : Verdict::Undecided;
    case Rel::GE:
      if (*c >= 0) return e.lhs.kind == Kind::Upper ? Verdict::Undecided : Verdict::Holds;
      return e.lhs.kind == Kind::Exact || e.lhs.kind == Kind::Upper ? Verdict::Fails : Verdict::Undecided;
  }
  return Verdict::Undecided;
}

std::string margin(const Eval& e) {
  if (e.rel == Rel::EQ) return "";
  const double l = log2_approx(e.lhs.value), r = log2_approx(e.rhs);
  if (!std::isfinite(l) || !std::isfinite(r)) return "";
  const double m = e.rel == Rel::LE ? r - l : l - r;
  char buf[64];
  std::snprintf(buf, sizeof buf, "log2 margin %.3f", m);
  return buf;
}

void expand(const std::vector<std::pair<std::string, std::vector<long>>>& axes, std::size_t k, Instance& cur,
            std::vector<Instance>& out) {
  if (k == axes.size()) {
    out.push_back(cur);
    return;
  }
  for (long v : axes[k].second) {
    cur.emplace_back(axes[k].first, v);
    expand(axes, k + 1, cur, out);
    cur.pop_back();
  }
}

void run_lemma(const Lemma& L, const KeyValueGrid& overrides, bool strict, std::size_t cap,
               std::vector<InequalityReport>& out) {
  KeyValueGrid g = parse_grid(L.info.default_grid);
  for (const auto& [k, items] : overrides.entries()) {
    if (g.has(k)) {
      g.set(k, items);
    } else if (strict) {
      throw DomainError("lemma " + L.info.id + " has no grid key '" + k + "' (keys: " + L.info.default_grid + ")");
    }
  }
  std::vector<std::pair<std::string, std::vector<long>>> axes;
  for (const auto& [k, items] : g.entries()) {
    // Overrides were validated against the default grid, so values parse here.
    KeyValueGrid one;
    one.set(k, items);
    axes.emplace_back(k, one.ints(k));
  }
  std::vector<Instance> insts;
  Instance cur;
  expand(axes, 0, cur, insts);
  for (const Instance& inst : insts) {
    const Args args(inst);
    InequalityReport r;
    r.lemma_id = L.info.id;
    r.instance = inst;
    try {
      auto e = L.eval(args, cap);
      if (!e) continue;  // outside the hypothesis
      r.lhs = side_text(e->lhs.value);
      r.lhs_kind = kind_text(e->lhs.kind);
      r.relation = rel_text(e->rel);
      r.rhs = side_text(e->rhs);
      r.verdict = decide(*e, compare(e->lhs.value, e->rhs));
      r.margin_note = margin(*e);
      if (r.verdict == Verdict::Undecided && e->lhs.kind != Kind::Exact)
        r.margin_note += (r.margin_note.empty() ? "" : "; ") + std::string("left side is only a bound");
    } catch (const InternalError& ex) {
      r.verdict = Verdict::Fails;
      r.margin_note = std::string("implementation invariant failed: ") + ex.what();
    } catch (const Error& ex) {
      r.verdict = Verdict::Undecided;
      r.margin_note = ex.what();
    }
    r.expected_exception = L.exception && L.exception(args);
    out.push_back(std::move(r));
  }
}

}  // namespace

std::vector<LemmaInfo> list_lemmas() {
  std::vector<LemmaInfo> out;
  for (const auto& L : registry()) out.push_back(L.info);
  return out;
}

std::vector<InequalityReport> check_lemma(const std::string& id, const KeyValueGrid& overrides, std::size_t cap) {
  std::vector<InequalityReport> out;
  if (id == "all") {
    for (const auto& L : registry()) run_lemma(L, overrides, false, cap, out);
    return out;
  }
  for (const auto& L : registry()) {
    if (L.info.id == id) {
      run_lemma(L, overrides, true, cap, out);
      return out;
    }
  }
  throw UnknownLemma(id);
}

LedgerSummary summarize(const std::vector<InequalityReport>& reports) {
  LedgerSummary s;
  for (const auto& r : reports) {
    if (r.expected_exception) {
      if (r.verdict == Verdict::Fails) ++s.expected_exceptions;
      else if (r.verdict == Verdict::Holds) ++s.resolved_exceptions;
      else ++s.undecided;
      continue;
    }
    switch (r.verdict) {
      case Verdict::Holds: ++s.holds; break;
      case Verdict::Fails: ++s.fails; break;
      case Verdict::Undecided: ++s.undecided; break;
    }
  }
  return s;
}

int ledger_exit_code(const std::vector<InequalityReport>& reports) {
  const LedgerSummary s = summarize(reports);
  if (s.fails) return 1;
  if (s.undecided) return 2;
  return 0;
}

std::string emit_ledger(const std::vector<InequalityReport>& reports, const std::string& format) {
  using ojson = nlohmann::ordered_json;
  const LedgerSummary s = summarize(reports);
  if (format == "json") {
    ojson arr = ojson::array();
    for (const auto& r : reports) {
      ojson inst = ojson::object();
      for (const auto& [k, v] : r.instance) inst[k] = v;
      arr.push_back(ojson{{"lemma", r.lemma_id},
                          {"instance", inst},
                          {"lhs", r.lhs},
                          {"lhs_kind", r.lhs_kind},
                          {"relation", r.relation},
                          {"rhs", r.rhs},
                          {"verdict", verdict_name(r.verdict)},
                          {"expected_exception", r.expected_exception},
                          {"margin", r.margin_note}});
    }
    ojson doc;
    doc["reports"] = std::move(arr);
    doc["summary"] = ojson{{"instances", reports.size()},
                           {"holds", s.holds},
                           {"fails", s.fails},
                           {"undecided", s.undecided},
                           {"expected_exceptions", s.expected_exceptions},
                           {"resolved_exceptions", s.resolved_exceptions},
                           {"exit_code", ledger_exit_code(reports)}};
    return doc.dump(2) + "\n";
  }
  auto csv = [](const std::string& f) {
    if (f.find_first_of(",\"\n") == std::string::npos) return f;
    std::string o = "\"";
    for (char c : f) {
      if (c == '"') o += '"';
      o += c;
    }
    return o + "\"";
  };
  if (format == "csv") {
    std::ostringstream os;
    os << "lemma,instance,lhs,lhs_kind,relation,rhs,verdict,expected_exception,margin\n";
    for (const auto& r : reports)
      os << r.lemma_id << ',' << csv(to_string(r.instance)) << ',' << csv(r.lhs) << ',' << r.lhs_kind << ','
         << r.relation << ',' << csv(r.rhs) << ',' << verdict_name(r.verdict) << ','
         << (r.expected_exception ? "yes" : "no") << ',' << csv(r.margin_note) << '\n';
    return os.str();
  }
  if (format == "markdown" || format == "md") {
    std::ostringstream os;
    os << "| lemma | instances | holds | fails | undecided | documented exceptions | min log2 margin |\n";
    os << "|---|---|---|---|---|---|---|\n";
    std::size_t i = 0;
    while (i < reports.size()) {
      std::size_t j = i;
      std::size_t h = 0, f = 0, u = 0, ex = 0;
      double minm = std::numeric_limits<double>::infinity();
      for (; j < reports.size() && reports[j].lemma_id == reports[i].lemma_id; ++j) {
        const auto& r = reports[j];
        if (r.expected_exception) ++ex;
        else if (r.verdict == Verdict::Holds) ++h;
        else if (r.verdict == Verdict::Fails) ++f;
        else ++u;
        const std::string key = "log2 margin ";
        if (!r.expected_exception && r.margin_note.rfind(key, 0) == 0)
          minm = std::min(minm, std::stod(r.margin_note.substr(key.size())));
      }
      char buf[32] = "";
      if (std::isfinite(minm)) std::snprintf(buf, sizeof buf, "%.3f", minm);
      os << "| " << reports[i].lemma_id << " | " << (j - i) << " | " << h << " | " << f << " | " << u << " | " << ex
         << " | " << buf << " |\n";
      i = j;
    }
    bool header = false;
    for (const auto& r : reports) {
      if (r.verdict == Verdict::Holds && !r.expected_exception) continue;
      if (!header) {
        os << "\n| lemma | instance | lhs | relation | rhs | verdict | documented |\n|---|---|---|---|---|---|---|\n";
        header = true;
      }
      os << "| " << r.lemma_id << " | " << to_string(r.instance) << " | " << r.lhs << " | " << r.relation << " | "
         << r.rhs << " | " << verdict_name(r.verdict) << " | " << (r.expected_exception ? "yes" : "no") << " |\n";
    }
    os << "\n" << reports.size() << " instances: " << s.holds << " hold, " << s.fails << " fail, " << s.undecided
       << " undecided, " << s.expected_exceptions << " documented exceptions\n";
    return os.str();
  }
  throw Error(ErrorCode::InvalidArgument, "unknown format '" + format + "' (json, csv, markdown)");
}

}  // namespace blockinv
