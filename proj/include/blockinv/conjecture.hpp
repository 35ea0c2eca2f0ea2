#pragma once

#include "blockinv/bigint.hpp"
#include "blockinv/block.hpp"
#include "blockinv/defect.hpp"
#include "blockinv/grid.hpp"

#include <string>
#include <vector>

namespace blockinv {

enum class ConjVerdict { Verified, Inconclusive, Violated };

const char* conj_verdict_name(ConjVerdict v);

/// How a block invariant entered the report.
enum class ValueKind { Exact, UpperBound, LowerBound };

const char* value_kind_name(ValueKind k);

struct Quantity {
  Nat value;
  ValueKind kind = ValueKind::Exact;
  std::string detail;
};

struct ConjectureReport {
  Mode mode = Mode::GL;
  BlockParams params;  // SL: gl3(a, 1, w)
  SLParams sl;         // filled in SL mode only

  Quantity kB;
  Quantity k0B;
  Quantity lB;  // always a lower bound unless tabulated
  SourcedCount kD;
  SourcedCount kDprime;

  ConjVerdict c1 = ConjVerdict::Inconclusive;
  ConjVerdict c2 = ConjVerdict::Inconclusive;
  std::string c1_reason;
  std::string c2_reason;
  std::string error;  // non-empty if evaluation aborted

  std::string label() const;
};

/// (C1) k(B) <= k0(B) k(D') and (C2) k(B) <= l(B) k(D) for the principal
/// block of GL.
ConjectureReport check_conjecture(const BlockParams& params, std::size_t cap = kDefaultBruteCap);

/// The reduced SL/SU inequalities for the unipotent 3-block with 3^a || q - eps:
/// (C1') k(B) <= k0(B) k(Dbar') and (C2') k(B) <= l(B) k(Dbar), and for
/// a = 1, w = 3 the original (C1)/(C2) for SL itself.
ConjectureReport check_conjecture_sl(unsigned a, unsigned w, std::size_t cap = kDefaultBruteCap);

ConjectureReport check_point(const GridPoint& p, std::size_t cap);

/// Evaluates every grid point on up to `workers` threads; the result order is
/// the grid order regardless of scheduling.
std::vector<ConjectureReport> sweep(const SweepGrid& grid, unsigned workers = 1);

/// 0 if all Verified, 2 if some Inconclusive and none Violated, 1 otherwise.
int exit_code(const std::vector<ConjectureReport>& reports);

}  // namespace blockinv
