#include "blockinv/bound_expr.hpp"

#include "blockinv/error.hpp"

#include <mpfr.h>

#include <cmath>
#include <limits>
#include <numeric>

namespace blockinv {

BoundExpr BoundExpr::constant(const Rat& c) {
  BoundExpr e;
  e.coeff = c;
  return e;
}

BoundExpr BoundExpr::power(const Rat& base, const Rat& exponent, const Rat& coeff) {
  BoundExpr e;
  e.coeff = coeff;
  e.base = base;
  e.exponent = exponent;
  return e;
}

BoundExpr BoundExpr::scaled(const Rat& c) const {
  BoundExpr e = *this;
  e.coeff *= c;
  return e;
}

std::string BoundExpr::to_string() const {
  const bool trivial_power = base == 1 || (exponent == 0 && !sqrt_term);
  if (trivial_power) return blockinv::to_string(coeff);
  std::string exp;
  if (exponent != 0 || !sqrt_term) exp = blockinv::to_string(exponent);
  if (sqrt_term) {
    if (!exp.empty()) exp += " + ";
    if (sqrt_term->r != 1) exp += blockinv::to_string(sqrt_term->r) + "*";
    exp += "sqrt(" + blockinv::to_string(base) + "^" + blockinv::to_string(sqrt_term->s) + ")";
  }
  std::string out;
  if (coeff != 1) out = blockinv::to_string(coeff) + " * ";
  const std::string b = blockinv::to_string(base);
  out += (base.get_den() == 1 ? b : "(" + b + ")") + "^(" + exp + ")";
  return out;
}

std::string to_string(const BoundSum& s) {
  if (s.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += " + ";
    out += s[i].to_string();
  }
  return out;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::Undecided: return "undecided";
  }
  return "?";
}

namespace {

// Exact evaluation is skipped once a power would exceed this many bits.
constexpr double kExactBitBudget = 8.0e6;

void check_term(const BoundExpr& e) {
  if (e.coeff < 0) throw DomainError("bound coefficient must be nonnegative");
  if (e.base <= 0) throw DomainError("bound base must be positive");
}

double bits_of(const Rat& base) {
  const double n = static_cast<double>(mpz_sizeinbase(base.get_num_mpz_t(), 2));
  const double d = static_cast<double>(mpz_sizeinbase(base.get_den_mpz_t(), 2));
  return n + d;
}

std::optional<long> small_long(const Nat& n) {
  if (!n.fits_slong_p()) return std::nullopt;
  return n.get_si();
}

// c^Q * base^(e*Q) as an exact rational; nullopt if too large.
std::optional<Rat> raised(const BoundExpr& t, unsigned long q) {
  Rat eq = t.exponent * Rat(Nat(static_cast<unsigned long>(q)));
  eq.canonicalize();
  if (eq.get_den() != 1) throw InternalError("common denominator mismatch");
  auto e = small_long(eq.get_num());
  if (!e) return std::nullopt;
  if (t.base != 1 && std::abs(static_cast<double>(*e)) * bits_of(t.base) > kExactBitBudget) return std::nullopt;
  if (static_cast<double>(q) * bits_of(t.coeff) > kExactBitBudget) return std::nullopt;
  Rat c = pow_rat(t.coeff, static_cast<long>(q));
  return c * (t.base == 1 ? Rat(1) : pow_rat(t.base, *e));
}

std::optional<int> compare_single_exact(const BoundExpr& x, const BoundExpr& y) {
  if (x.coeff == 0 || y.coeff == 0) return cmp(x.coeff, y.coeff) < 0 ? -1 : (cmp(x.coeff, y.coeff) > 0 ? 1 : 0);
  const Nat dx = x.base == 1 ? Nat(1) : Nat(x.exponent.get_den());
  const Nat dy = y.base == 1 ? Nat(1) : Nat(y.exponent.get_den());
  Nat l;
  mpz_lcm(l.get_mpz_t(), dx.get_mpz_t(), dy.get_mpz_t());
  if (!l.fits_ulong_p() || l > 1000000) return std::nullopt;
  BoundExpr xx = x, yy = y;
  if (xx.base == 1) xx.exponent = 0;
  if (yy.base == 1) yy.exponent = 0;
  auto X = raised(xx, l.get_ui());
  auto Y = raised(yy, l.get_ui());
  if (!X || !Y) return std::nullopt;
  const int c = cmp(*X, *Y);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

// Exact q-th root of a nonnegative integer, if any.
std::optional<Nat> exact_root(const Nat& n, unsigned long q) {
  Nat r;
  if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), q) != 0) return r;
  return std::nullopt;
}

// --- outward-rounded interval arithmetic ------------------------------------

class Interval {
 public:
  explicit Interval(mpfr_prec_t prec) {
    mpfr_init2(lo, prec);
    mpfr_init2(hi, prec);
  }
  ~Interval() {
    mpfr_clear(lo);
    mpfr_clear(hi);
  }
  Interval(const Interval&) = delete;
  Interval& operator=(const Interval&) = delete;

  mpfr_t lo, hi;
};

void set_rat(Interval& out, const Rat& q) {
  mpfr_set_q(out.lo, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(out.hi, q.get_mpq_t(), MPFR_RNDU);
}

void add(Interval& out, const Interval& x, const Interval& y) {
  mpfr_add(out.lo, x.lo, y.lo, MPFR_RNDD);
  mpfr_add(out.hi, x.hi, y.hi, MPFR_RNDU);
}

// Applies a binary op monotone in each argument: extremes sit at corners.
template <class Op>
void corners(Interval& out, const Interval& x, const Interval& y, Op op, mpfr_prec_t prec) {
  mpfr_t t;
  mpfr_init2(t, prec);
  const mpfr_srcptr xs[2] = {x.lo, x.hi};
  const mpfr_srcptr ys[2] = {y.lo, y.hi};
  bool first = true;
  for (auto a : xs) {
    for (auto b : ys) {
      op(t, a, b, MPFR_RNDD);
      if (first || mpfr_less_p(t, out.lo)) mpfr_set(out.lo, t, MPFR_RNDD);
      op(t, a, b, MPFR_RNDU);
      if (first || mpfr_greater_p(t, out.hi)) mpfr_set(out.hi, t, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(t);
}

void mul(Interval& out, const Interval& x, const Interval& y, mpfr_prec_t prec) {
  corners(out, x, y, [](mpfr_ptr r, mpfr_srcptr a, mpfr_srcptr b, mpfr_rnd_t m) { mpfr_mul(r, a, b, m); }, prec);
}

void pow(Interval& out, const Interval& b, const Interval& e, mpfr_prec_t prec) {
  if (mpfr_sgn(b.lo) <= 0) throw InternalError("interval power with nonpositive base");
  corners(out, b, e, [](mpfr_ptr r, mpfr_srcptr a, mpfr_srcptr c, mpfr_rnd_t m) { mpfr_pow(r, a, c, m); }, prec);
}

void enclose(Interval& out, const BoundExpr& t, mpfr_prec_t prec) {
  Interval b(prec), e(prec), tmp(prec), c(prec);
  set_rat(b, t.base);
  set_rat(e, t.exponent);
  if (t.sqrt_term) {
    Interval s(prec), bs(prec), r(prec), term(prec);
    set_rat(s, t.sqrt_term->s);
    pow(bs, b, s, prec);
    mpfr_sqrt(bs.lo, bs.lo, MPFR_RNDD);
    mpfr_sqrt(bs.hi, bs.hi, MPFR_RNDU);
    set_rat(r, t.sqrt_term->r);
    mul(term, r, bs, prec);
    add(tmp, e, term);
    mpfr_set(e.lo, tmp.lo, MPFR_RNDD);
    mpfr_set(e.hi, tmp.hi, MPFR_RNDU);
  }
  pow(tmp, b, e, prec);
  set_rat(c, t.coeff);
  mul(out, c, tmp, prec);
}

void enclose_sum(Interval& out, const BoundSum& s, mpfr_prec_t prec) {
  mpfr_set_zero(out.lo, 1);
  mpfr_set_zero(out.hi, 1);
  Interval t(prec), acc(prec);
  for (const auto& term : s) {
    enclose(t, term, prec);
    add(acc, out, t);
    mpfr_set(out.lo, acc.lo, MPFR_RNDD);
    mpfr_set(out.hi, acc.hi, MPFR_RNDU);
  }
}

}  // namespace

std::optional<Rat> exact_value(const BoundExpr& e) {
  check_term(e);
  if (e.sqrt_term) {
    // Rational only if the square root and the whole exponent are rational.
    BoundExpr inner = BoundExpr::power(e.base, e.sqrt_term->s);
    auto v = exact_value(inner);
    if (!v) return std::nullopt;
    auto rn = exact_root(v->get_num(), 2);
    auto rd = exact_root(v->get_den(), 2);
    if (!rn || !rd) return std::nullopt;
    BoundExpr flat = e;
    flat.sqrt_term.reset();
    Rat sq(*rn, *rd);
    sq.canonicalize();
    flat.exponent += e.sqrt_term->r * sq;
    return exact_value(flat);
  }
  if (e.coeff == 0 || e.base == 1) return e.coeff;
  const Nat& p = e.exponent.get_num();
  const Nat& q = e.exponent.get_den();
  if (!q.fits_ulong_p()) return std::nullopt;
  auto ps = small_long(p);
  if (!ps || std::abs(static_cast<double>(*ps)) * bits_of(e.base) > kExactBitBudget) return std::nullopt;
  const unsigned long pa = static_cast<unsigned long>(std::labs(*ps));
  Nat num = pow_nat(e.base.get_num(), pa), den = pow_nat(e.base.get_den(), pa);
  if (*ps < 0) std::swap(num, den);
  auto rn = exact_root(num, q.get_ui());
  auto rd = exact_root(den, q.get_ui());
  if (!rn || !rd) return std::nullopt;
  Rat v(*rn, *rd);
  v.canonicalize();
  return e.coeff * v;
}

std::optional<int> compare(const BoundSum& x, const BoundSum& y, unsigned max_bits) {
  for (const auto& t : x) check_term(t);
  for (const auto& t : y) check_term(t);

  if (x.size() == 1 && y.size() == 1 && !x[0].sqrt_term && !y[0].sqrt_term)
    if (auto c = compare_single_exact(x[0], y[0])) return c;

  auto exact_sum = [](const BoundSum& s) -> std::optional<Rat> {
    Rat total = 0;
    for (const auto& t : s) {
      auto v = exact_value(t);
      if (!v) return std::nullopt;
      total += *v;
    }
    return total;
  };
  if (auto ex = exact_sum(x)) {
    if (auto ey = exact_sum(y)) {
      const int c = cmp(*ex, *ey);
      return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
  }

  for (mpfr_prec_t prec = 64; prec <= static_cast<mpfr_prec_t>(max_bits); prec *= 2) {
    Interval ix(prec), iy(prec);
    enclose_sum(ix, x, prec);
    enclose_sum(iy, y, prec);
    if (mpfr_less_p(ix.hi, iy.lo)) return -1;
    if (mpfr_greater_p(ix.lo, iy.hi)) return 1;
  }
  return std::nullopt;
}

Verdict compare_le(const Rat& n, const BoundExpr& e, unsigned max_bits) {
  auto c = compare({BoundExpr::constant(n)}, {e}, max_bits);
  if (!c) return Verdict::Undecided;
  return *c <= 0 ? Verdict::Holds : Verdict::Fails;
}

Verdict compare_ge(const Rat& n, const BoundExpr& e, unsigned max_bits) {
  auto c = compare({BoundExpr::constant(n)}, {e}, max_bits);
  if (!c) return Verdict::Undecided;
  return *c >= 0 ? Verdict::Holds : Verdict::Fails;
}

double log2_approx(const BoundSum& s) {
  Interval v(64);
  enclose_sum(v, s, 64);
  if (mpfr_sgn(v.lo) <= 0 && mpfr_sgn(v.hi) <= 0) return -std::numeric_limits<double>::infinity();
  mpfr_t l;
  mpfr_init2(l, 64);
  mpfr_log2(l, v.hi, MPFR_RNDN);
  const double out = mpfr_get_d(l, MPFR_RNDN);
  mpfr_clear(l);
  return out;
}

}  // namespace blockinv
