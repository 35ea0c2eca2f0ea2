#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "blockinv/blockinv.h"

#include <json.hpp>

#include <string>
#include <thread>

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  blockinv_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("invariants through handles") {
  blockinv_params* p = nullptr;
  REQUIRE(blockinv_params_gl3(1, 1, 9, &p) == BLOCKINV_OK);
  char *kb = nullptr, *k0 = nullptr, *lb = nullptr;
  REQUIRE(blockinv_params_invariants(p, &kb, &k0, &lb) == BLOCKINV_OK);
  CHECK(take(kb) == "2043");
  CHECK(take(k0) == "27");
  CHECK(std::stoul(take(lb)) >= 30);

  blockinv_reports* r = nullptr;
  REQUIRE(blockinv_check(p, 0, &r) == BLOCKINV_OK);
  CHECK(blockinv_reports_count(r) == 1);
  char* v = nullptr;
  REQUIRE(blockinv_reports_field(r, 0, "c1", &v) == BLOCKINV_OK);
  CHECK(take(v) == "verified");
  CHECK(blockinv_reports_field(r, 1, "c1", &v) == BLOCKINV_INVALID_ARGUMENT);
  CHECK(blockinv_reports_field(r, 0, "nope", &v) == BLOCKINV_INVALID_ARGUMENT);
  CHECK(blockinv_reports_exit_code(r) == 0);
  blockinv_reports_free(r);
  blockinv_params_free(p);
}

TEST_CASE("2-blocks and SL") {
  blockinv_params* p = nullptr;
  REQUIRE(blockinv_params_gl2(BLOCKINV_CASE_3MOD4, 3, 8, &p) == BLOCKINV_OK);
  char* kb = nullptr;
  REQUIRE(blockinv_params_invariants(p, &kb, nullptr, nullptr) == BLOCKINV_OK);
  CHECK(take(kb) == "2908");
  blockinv_params_free(p);
  REQUIRE(blockinv_params_gl2(BLOCKINV_CASE_1MOD4, 3, 2, &p) == BLOCKINV_OK);
  REQUIRE(blockinv_params_invariants(p, &kb, nullptr, nullptr) == BLOCKINV_OK);
  CHECK(take(kb) == "48");
  blockinv_params_free(p);

  blockinv_reports* r = nullptr;
  REQUIRE(blockinv_check_sl(1, 3, 0, &r) == BLOCKINV_OK);
  char* v = nullptr;
  REQUIRE(blockinv_reports_field(r, 0, "kB", &v) == BLOCKINV_OK);
  CHECK(take(v) == "16");
  REQUIRE(blockinv_reports_field(r, 0, "k0B", &v) == BLOCKINV_OK);
  CHECK(take(v) == "6");
  blockinv_reports_free(r);
}

TEST_CASE("errors") {
  blockinv_params* p = nullptr;
  CHECK(blockinv_params_gl3(1, 3, 3, &p) == BLOCKINV_DOMAIN);
  CHECK(p == nullptr);
  CHECK(std::string(blockinv_last_error()).find("d") != std::string::npos);
  CHECK(blockinv_params_gl3(1, 1, 3, nullptr) == BLOCKINV_INVALID_ARGUMENT);
  CHECK(blockinv_params_gl2(static_cast<blockinv_case>(7), 2, 3, &p) == BLOCKINV_INVALID_ARGUMENT);

  blockinv_reports* r = nullptr;
  CHECK(blockinv_sweep("a=1..", 1, 0, &r) == BLOCKINV_PARSE);
  CHECK(blockinv_last_error_offset() == 5);
  CHECK(blockinv_sweep("ell=3; w=1..3", 1, 0, &r) == BLOCKINV_OK);
  CHECK(blockinv_last_error_offset() == static_cast<size_t>(-1));
  char* out = nullptr;
  CHECK(blockinv_reports_emit(r, "yaml", &out) == BLOCKINV_INVALID_ARGUMENT);
  blockinv_reports_free(r);

  blockinv_ledger* l = nullptr;
  CHECK(blockinv_bounds_check("no_such", nullptr, 0, &l) == BLOCKINV_UNKNOWN_LEMMA);
  CHECK(blockinv_group_query("wr(c(3),4)", "order", 0, &out, nullptr) == BLOCKINV_PARSE);
  CHECK(blockinv_group_query("c(3)", "size", 0, &out, nullptr) == BLOCKINV_INVALID_ARGUMENT);
  CHECK(blockinv_group_query("wr(wr(c(3),3),3)", "brute-classes", 1000, &out, nullptr) == BLOCKINV_CAP_EXCEEDED);
  CHECK(std::string(blockinv_status_name(BLOCKINV_CAP_EXCEEDED)) == "cap_exceeded");
  // null handles are tolerated by the free functions
  blockinv_reports_free(nullptr);
  blockinv_ledger_free(nullptr);
  blockinv_params_free(nullptr);
  blockinv_string_free(nullptr);
}

TEST_CASE("errors are per thread") {
  blockinv_params* p = nullptr;
  CHECK(blockinv_params_gl3(0, 1, 3, &p) == BLOCKINV_DOMAIN);
  std::string other;
  std::thread t([&] {
    blockinv_params* q = nullptr;
    blockinv_params_gl3(1, 1, 3, &q);
    other = blockinv_last_error();
    blockinv_params_free(q);
  });
  t.join();
  CHECK(other.empty());
  CHECK_FALSE(std::string(blockinv_last_error()).empty());
}

TEST_CASE("sweep, ledger and groups") {
  blockinv_reports* r = nullptr;
  REQUIRE(blockinv_sweep("ell=3; a=1; d=1; w=1..6", 2, 0, &r) == BLOCKINV_OK);
  CHECK(blockinv_reports_count(r) == 6);
  char* out = nullptr;
  REQUIRE_MESSAGE(blockinv_reports_emit(r, "json", &out) == BLOCKINV_OK, std::string(blockinv_last_error()));
  auto j = nlohmann::json::parse(take(out));
  CHECK(j["summary"]["verified"] == 6);
  blockinv_reports_free(r);

  blockinv_ledger* l = nullptr;
  REQUIRE(blockinv_bounds_check("plw_p3", "w=1..10", 0, &l) == BLOCKINV_OK);
  CHECK(blockinv_ledger_count(l) == 10);
  CHECK(blockinv_ledger_exit_code(l) == 0);
  REQUIRE(blockinv_ledger_emit(l, "csv", &out) == BLOCKINV_OK);
  CHECK(take(out).find("plw_p3,w=3,2,exact,<=,3^(1/2),fails,yes") != std::string::npos);
  blockinv_ledger_free(l);

  REQUIRE(blockinv_lemma_list(&out) == BLOCKINV_OK);
  auto lemmas = nlohmann::json::parse(take(out));
  CHECK(lemmas.size() >= 100);

  int exact = -1;
  REQUIRE(blockinv_group_query("wr(c(3),3)", "classes", 0, &out, &exact) == BLOCKINV_OK);
  CHECK(take(out) == "17");
  REQUIRE(blockinv_group_query("sd(16)", "brute-classes", 0, &out, nullptr) == BLOCKINV_OK);
  CHECK(take(out) == "7");
  REQUIRE(blockinv_group_query("sd(32)", "derived-classes", 0, &out, &exact) == BLOCKINV_OK);
  CHECK(take(out) == "8");
  CHECK(exact == 1);
  REQUIRE(blockinv_group_query("wr(wr(c(3),3),3)", "derived-classes", 0, &out, &exact) == BLOCKINV_OK);
  CHECK(exact == 0);
  blockinv_string_free(out);
}
