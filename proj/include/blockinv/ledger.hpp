#pragma once

#include "blockinv/bound_expr.hpp"
#include "blockinv/grid.hpp"
#include "blockinv/perm_group.hpp"

#include <string>
#include <utility>
#include <vector>

namespace blockinv {

/// One grid point of a lemma: parameter names in grid order.
using Instance = std::vector<std::pair<std::string, long>>;

std::string to_string(const Instance& inst);

struct InequalityReport {
  std::string lemma_id;
  Instance instance;
  std::string lhs;       // exact integer/rational, or a bound expression
  std::string lhs_kind;  // exact, upper_bound, lower_bound
  std::string relation;  // "<=", ">=", "="
  std::string rhs;
  Verdict verdict = Verdict::Undecided;
  bool expected_exception = false;
  std::string margin_note;
};

struct LemmaInfo {
  std::string id;
  std::string statement;
  std::string default_grid;
  std::string exceptions;  // empty if none are registered
};

/// Registry in id order.
std::vector<LemmaInfo> list_lemmas();

/// Runs one lemma, or every lemma for id "all", over its default grid with
/// the keys of `overrides` replacing the matching default ranges. For a single
/// lemma an override key it does not use is an error; for "all" such keys are
/// skipped per lemma. Reports are ordered by lemma id, then grid order.
/// Throws UnknownLemma.
std::vector<InequalityReport> check_lemma(const std::string& id, const KeyValueGrid& overrides = {},
                                          std::size_t cap = kDefaultBruteCap);

struct LedgerSummary {
  std::size_t holds = 0;
  std::size_t fails = 0;       // unexpected failures
  std::size_t undecided = 0;
  std::size_t expected_exceptions = 0;  // registered exceptions that fail as documented
  std::size_t resolved_exceptions = 0;  // registered exceptions that turned out to hold
};

LedgerSummary summarize(const std::vector<InequalityReport>& reports);

/// 0 if nothing failed unexpectedly and nothing is undecided, 2 if something
/// is undecided but nothing failed, 1 otherwise.
int ledger_exit_code(const std::vector<InequalityReport>& reports);

/// format: json, csv or markdown.
std::string emit_ledger(const std::vector<InequalityReport>& reports, const std::string& format);

}  // namespace blockinv
