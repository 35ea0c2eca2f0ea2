#include "blockinv/blockinv.h"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr int kUsage = 64;

struct Failure {
  int code;
};

void check(blockinv_status s) {
  if (s == BLOCKINV_OK) return;
  std::cerr << "blockinv: " << blockinv_status_name(s) << ": " << blockinv_last_error() << "\n";
  // Bad input is a usage problem; anything else is an internal error.
  const bool input = s == BLOCKINV_INVALID_ARGUMENT || s == BLOCKINV_DOMAIN || s == BLOCKINV_PARSE ||
                     s == BLOCKINV_UNKNOWN_LEMMA || s == BLOCKINV_IO || s == BLOCKINV_CAP_EXCEEDED;
  throw Failure{input ? kUsage : 1};
}

void print(char* s) {
  std::fputs(s, stdout);
  blockinv_string_free(s);
}

// --cap wins over BLOCKINV_CAP; 0 leaves the choice to the library (or grid).
std::size_t resolve_cap(std::optional<std::size_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("BLOCKINV_CAP"); env && *env) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0' || v == 0) {
      std::cerr << "blockinv: BLOCKINV_CAP must be a positive integer, got '" << env << "'\n";
      throw Failure{kUsage};
    }
    return static_cast<std::size_t>(v);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Block invariants and the (C1)/(C2) inequalities for GL/GU and SL/SU"};
  app.require_subcommand(1);

  std::optional<std::size_t> cap;
  std::string format = "json";

  auto* compute = app.add_subcommand("compute", "Invariants and verdicts for one block");
  unsigned ell = 3, a = 1, d = 1, w = 1;
  std::optional<unsigned> atilde;
  std::string case2, mode = "gl";
  compute->add_option("--ell", ell, "2 or 3")->required()->check(CLI::IsMember({2u, 3u}));
  compute->add_option("--case", case2, "eps q mod 4 for ell = 2")->check(CLI::IsMember({"1mod4", "3mod4"}));
  compute->add_option("--a", a, "3^a || (eps q)^d - 1, or 2^a || q - eps for ell = 2")->required();
  compute->add_option("--atilde", atilde, "2^atilde = (q + eps)_2, 3 mod 4 case");
  compute->add_option("--d", d, "order of eps q mod 3 (ell = 3)")->check(CLI::IsMember({1u, 2u}));
  compute->add_option("--w", w, "weight")->required();
  compute->add_option("--mode", mode, "gl or sl")->check(CLI::IsMember({"gl", "sl"}));
  compute->add_option("--format", format, "json, csv or markdown");
  compute->add_option("--cap", cap, "brute-force element cap");

  auto* sweep = app.add_subcommand("sweep", "Check (C1)/(C2) over a parameter grid");
  std::string grid;
  unsigned workers = 1;
  sweep->add_option("--grid", grid, "grid file or inline key=value ranges (empty: default grid)");
  sweep->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
  sweep->add_option("--cap", cap, "brute-force element cap");
  sweep->add_option("--format", format, "json, csv or markdown");

  auto* bounds = app.add_subcommand("bounds", "Machine-check the lemma inequalities");
  std::string lemma, overrides;
  bool list = false;
  std::string bounds_format = "markdown";
  bounds->add_option("--lemma", lemma, "lemma id or all");
  bounds->add_option("--grid", overrides, "ranges replacing the lemma's default grid");
  bounds->add_flag("--list", list, "list lemma ids as json");
  bounds->add_option("--format", bounds_format, "json, csv or markdown");
  bounds->add_option("--cap", cap, "brute-force element cap");

  auto* group = app.add_subcommand("group", "Query the group engine");
  std::string spec, op;
  group->add_option("--spec", spec, "e.g. wr(c(3),3) or prod(sd(3)^2,c(4))")->required();
  group->add_option("--op", op, "order, classes, brute-classes or derived-classes")->required();
  group->add_option("--cap", cap, "brute-force element cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    const std::size_t c = resolve_cap(cap);
    if (*compute) {
      blockinv_reports* r = nullptr;
      if (mode == "sl") {
        if (ell != 3) {
          std::cerr << "blockinv: sl mode needs --ell 3\n";
          return kUsage;
        }
        check(blockinv_check_sl(a, w, c, &r));
      } else {
        blockinv_params* p = nullptr;
        if (ell == 3) {
          check(blockinv_params_gl3(a, d, w, &p));
        } else {
          if (case2.empty()) {
            std::cerr << "blockinv: --case is required for --ell 2\n";
            return kUsage;
          }
          if (case2 == "3mod4") {
            if (!atilde) {
              std::cerr << "blockinv: --atilde is required for --case 3mod4\n";
              return kUsage;
            }
            check(blockinv_params_gl2(BLOCKINV_CASE_3MOD4, *atilde, w, &p));
          } else {
            check(blockinv_params_gl2(BLOCKINV_CASE_1MOD4, a, w, &p));
          }
        }
        const blockinv_status s = blockinv_check(p, c, &r);
        blockinv_params_free(p);
        check(s);
      }
      char* out = nullptr;
      const blockinv_status s = blockinv_reports_emit(r, format.c_str(), &out);
      const int rc = blockinv_reports_exit_code(r);
      blockinv_reports_free(r);
      check(s);
      print(out);
      return rc;
    }
    if (*sweep) {
      blockinv_reports* r = nullptr;
      check(blockinv_sweep(grid.c_str(), workers, c, &r));
      char* out = nullptr;
      const blockinv_status s = blockinv_reports_emit(r, format.c_str(), &out);
      const int rc = blockinv_reports_exit_code(r);
      blockinv_reports_free(r);
      check(s);
      print(out);
      return rc;
    }
    if (*bounds) {
      if (list) {
        char* out = nullptr;
        check(blockinv_lemma_list(&out));
        print(out);
        return 0;
      }
      if (lemma.empty()) {
        std::cerr << "blockinv: bounds needs --lemma <id|all> or --list\n";
        return kUsage;
      }
      blockinv_ledger* l = nullptr;
      check(blockinv_bounds_check(lemma.c_str(), overrides.c_str(), c, &l));
      char* out = nullptr;
      const blockinv_status s = blockinv_ledger_emit(l, bounds_format.c_str(), &out);
      const int rc = blockinv_ledger_exit_code(l);
      blockinv_ledger_free(l);
      check(s);
      print(out);
      return rc;
    }
    if (*group) {
      char* out = nullptr;
      int exact = 1;
      check(blockinv_group_query(spec.c_str(), op.c_str(), c, &out, &exact));
      if (!exact) std::fputs(">= ", stdout);
      print(out);
      std::fputs("\n", stdout);
      return 0;
    }
  } catch (const Failure& f) {
    return f.code;
  }
  return kUsage;
}
