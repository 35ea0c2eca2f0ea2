#include "blockinv/conjecture.hpp"

#include "blockinv/error.hpp"
#include "blockinv/partition.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace blockinv {

const char* conj_verdict_name(ConjVerdict v) {
  switch (v) {
    case ConjVerdict::Verified: return "verified";
    case ConjVerdict::Inconclusive: return "inconclusive";
    case ConjVerdict::Violated: return "violated";
  }
  return "?";
}

const char* value_kind_name(ValueKind k) {
  switch (k) {
    case ValueKind::Exact: return "exact";
    case ValueKind::UpperBound: return "upper_bound";
    case ValueKind::LowerBound: return "lower_bound";
  }
  return "?";
}

std::string ConjectureReport::label() const {
  if (mode == Mode::SL) return "mode=sl a=" + std::to_string(params.a) + " w=" + std::to_string(params.w);
  return "mode=gl " + params.label();
}

namespace {

// k(B) against the product of two factors, each exact or a lower bound.
ConjVerdict decide(const Quantity& kB, const Nat& x, bool x_exact, const Nat& y, bool y_exact, std::string& reason) {
  const Nat rhs = x * y;
  const std::string rel = to_string(kB.value) + (kB.value <= rhs ? " <= " : " > ") + to_string(x) + "*" +
                          to_string(y) + " = " + to_string(rhs);
  reason = rel;
  if (kB.value <= rhs) return ConjVerdict::Verified;
  if (kB.kind == ValueKind::Exact && x_exact && y_exact) return ConjVerdict::Violated;
  reason += " (bounds not sharp enough)";
  return ConjVerdict::Inconclusive;
}

void finish(ConjectureReport& r) {
  r.c1 = decide(r.kB, r.k0B.value, r.k0B.kind == ValueKind::Exact, r.kDprime.value,
                r.kDprime.source == CountSource::Exact, r.c1_reason);
  r.c2 = decide(r.kB, r.lB.value, r.lB.kind == ValueKind::Exact, r.kD.value, r.kD.source == CountSource::Exact,
                r.c2_reason);
}

template <class F>
ConjectureReport guarded(ConjectureReport base, F&& body) {
  try {
    body(base);
    finish(base);
  } catch (const InternalError& e) {
    base.error = e.what();
    base.c1 = base.c2 = ConjVerdict::Violated;
    base.c1_reason = base.c2_reason = std::string("implementation invariant failed: ") + e.what();
  } catch (const std::exception& e) {
    base.error = e.what();
    base.c1 = base.c2 = ConjVerdict::Inconclusive;
    base.c1_reason = base.c2_reason = e.what();
  }
  return base;
}

}  // namespace

ConjectureReport check_conjecture(const BlockParams& params, std::size_t cap) {
  params.validate();
  ConjectureReport r;
  r.mode = Mode::GL;
  r.params = params;
  return guarded(std::move(r), [&](ConjectureReport& rep) {
    rep.kB = {k_B(params), ValueKind::Exact, "decomposition sum"};
    rep.k0B = {k0_B(params), ValueKind::Exact, "height-zero formula"};
    rep.lB = {l_B_lower(params), ValueKind::LowerBound,
              params.ell == 3 ? "max(k(d,w), pi(w), p_3(w))" : "max(pi(w), p_2(w))"};
    rep.kD = k_D(params);
    rep.kDprime = k_D_prime(params, cap);
  });
}

ConjectureReport check_conjecture_sl(unsigned a, unsigned w, std::size_t cap) {
  ConjectureReport r;
  r.mode = Mode::SL;
  r.params = BlockParams::gl3(a, 1, w);
  r.sl = sl_params(a, w);
  return guarded(std::move(r), [&](ConjectureReport& rep) {
    if (w % 3 != 0)
      rep.kB = {k_B_sl_coprime(a, w), ValueKind::Exact, "k(B~)/3^a"};
    else if (w == 3)
      rep.kB = {k_B_sl_w3_exact(a), ValueKind::Exact, "(k(3^a,3) + 3^(2+a) - 3^(a-1))/3^a"};
    else
      rep.kB = {k_B_sl_upper(a, w), ValueKind::UpperBound, "ceil((k(3,a,1,w) + sum_j p_3(w/3^j) 3^(2j+aw/3^j))/3^a)"};

    if (w == 3)
      rep.k0B = {Nat(6), ValueKind::Exact, "tabulated k0(B) = 6"};
    else if (w == 9)
      rep.k0B = {Nat(18), ValueKind::Exact, "tabulated k0(B) = 18"};
    else {
      Rat k0(k0_B_gl3(a, 1, w), pow_ui(3, a));
      k0.canonicalize();
      rep.k0B = {ceil_rat(k0), ValueKind::LowerBound, "k0(B~)/3^a"};
    }

    if (auto l = l_B_sl_exact(a, w))
      rep.lB = {*l, ValueKind::Exact, "tabulated l(B)"};
    else if (w == 3)
      rep.lB = {Nat(5), ValueKind::LowerBound, "tabulated l(B) >= 5"};
    else
      rep.lB = {partition_count(w), ValueKind::LowerBound, "pi(w)"};

    if (a == 1 && w == 3) {
      // The original inequalities for SL itself: |D~'| = 9 gives |D'| = 3.
      const Nat tilde_prime = brute_derived_class_count(sl_tilde_defect(1, 3), cap);
      if (tilde_prime != 9) throw InternalError("expected k(D~') = 9 at a=1, w=3");
      rep.kDprime = {Nat(3), CountSource::Exact, "|D'| = |D~'|/3 = 3"};
      rep.kD = {Nat(9), CountSource::LowerBound, "k(D) >= k(Dbar) = 9"};
      return;
    }
    rep.kD = sl_k_Dbar_lower(a, w);
    rep.kDprime = sl_k_Dbar_prime_lower(a, w, cap);
    if (w == 3) {
      const Nat floor_w3 = pow_ui(3, 2 * a - 2);
      rep.kD.value = std::max(rep.kD.value, floor_w3);
      rep.kDprime.value = std::max(rep.kDprime.value, floor_w3);
    }
  });
}

ConjectureReport check_point(const GridPoint& p, std::size_t cap) {
  return p.mode == Mode::SL ? check_conjecture_sl(p.params.a, p.params.w, cap) : check_conjecture(p.params, cap);
}

std::vector<ConjectureReport> sweep(const SweepGrid& grid, unsigned workers) {
  const std::vector<GridPoint> pts = grid.points();
  std::vector<ConjectureReport> out(pts.size());
  if (pts.empty()) return out;
  workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(pts.size()));
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (std::size_t i = next++; i < pts.size(); i = next++) out[i] = check_point(pts[i], grid.cap);
  };
  if (workers == 1) {
    run();
    return out;
  }
  std::vector<std::thread> pool;
  for (unsigned k = 0; k < workers; ++k) pool.emplace_back(run);
  for (auto& t : pool) t.join();
  return out;
}

int exit_code(const std::vector<ConjectureReport>& reports) {
  bool inconclusive = false;
  for (const auto& r : reports) {
    if (r.c1 == ConjVerdict::Violated || r.c2 == ConjVerdict::Violated) return 1;
    if (r.c1 == ConjVerdict::Inconclusive || r.c2 == ConjVerdict::Inconclusive) inconclusive = true;
  }
  return inconclusive ? 2 : 0;
}

}  // namespace blockinv
