#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "blockinv/error.hpp"
#include "blockinv/ledger.hpp"

#include <json.hpp>

#include <set>

using namespace blockinv;

TEST_CASE("registry") {
  const auto lemmas = list_lemmas();
  CHECK(lemmas.size() >= 100);
  std::set<std::string> ids;
  for (std::size_t i = 0; i < lemmas.size(); ++i) {
    ids.insert(lemmas[i].id);
    if (i) CHECK(lemmas[i - 1].id < lemmas[i].id);
    CHECK_FALSE(lemmas[i].statement.empty());
    CHECK_NOTHROW(parse_grid(lemmas[i].default_grid));
  }
  CHECK(ids.size() == lemmas.size());
  for (const char* id : {"plw_p3", "bound165_l3", "abschaetzung_sl", "nrcharacters_kD", "multipartitionsbasics_k2"})
    CHECK(ids.count(id) == 1);
}

TEST_CASE("p_3(3) is the registered exception") {
  auto r = check_lemma("plw_p3");
  REQUIRE(r.size() == 60);
  for (const auto& x : r) {
    const bool w3 = x.instance[0].second == 3;
    CHECK(x.expected_exception == w3);
    CHECK(x.verdict == (w3 ? Verdict::Fails : Verdict::Holds));
  }
  CHECK(ledger_exit_code(r) == 0);
}

TEST_CASE("nrcharacters at i = 1") {
  auto r = check_lemma("nrcharacters_kD");
  REQUIRE(r.size() == 6);
  CHECK(r[0].lhs == "17");
  CHECK(r[0].verdict == Verdict::Fails);
  CHECK(r[0].expected_exception);
  for (std::size_t i = 1; i < r.size(); ++i) CHECK(r[i].verdict == Verdict::Holds);
}

TEST_CASE("overrides") {
  KeyValueGrid g = parse_grid("w=1..40");
  auto r = check_lemma("bound165_l3", g);
  CHECK(r.size() == 80);
  for (const auto& x : r) CHECK(x.verdict == Verdict::Holds);
  // w=3 only
  r = check_lemma("plw_p3", parse_grid("w=3"));
  REQUIRE(r.size() == 1);
  CHECK(r[0].verdict == Verdict::Fails);
  CHECK(summarize(r).expected_exceptions == 1);
  // points outside the hypothesis are skipped, not reported
  r = check_lemma("abschaetzung_sl", parse_grid("a=2; w=6; j=1..6"));
  CHECK(r.size() == 1);
  CHECK_THROWS_AS(check_lemma("plw_p3", parse_grid("zz=1")), DomainError);
  CHECK_THROWS_AS(check_lemma("no_such_lemma"), UnknownLemma);
}

TEST_CASE("an unregistered failure sets exit code 1") {
  auto r = check_lemma("multipartitionsbasics_i", parse_grid("s=3; t=2"));
  CHECK(ledger_exit_code(r) == 0);
  r = check_lemma("k3aw2_t2", parse_grid("s=1..5"));
  CHECK(ledger_exit_code(r) == 0);
  InequalityReport bad;
  bad.lemma_id = "x";
  bad.verdict = Verdict::Fails;
  r.push_back(bad);
  CHECK(ledger_exit_code(r) == 1);
  r.back().verdict = Verdict::Undecided;
  CHECK(ledger_exit_code(r) == 2);
}

TEST_CASE("whole ledger") {
  auto r = check_lemma("all");
  const auto s = summarize(r);
  CHECK(s.fails == 0);
  CHECK(s.undecided == 0);
  CHECK(s.resolved_exceptions == 0);
  CHECK(s.expected_exceptions > 0);
  CHECK(ledger_exit_code(r) == 0);
  std::set<std::string> with_exceptions;
  for (const auto& x : r)
    if (x.expected_exception) with_exceptions.insert(x.lemma_id);
  CHECK(with_exceptions == std::set<std::string>{"gl3_c1_chain", "gl3_c2_chain", "nrcharacters_kD", "plw_p3",
                                                 "plw_rec", "sl_a1_w6_k0", "sl_a1_w9_kB", "sl_c1_quot",
                                                 "toffi_literal"});
}

TEST_CASE("emit") {
  auto r = check_lemma("k3aw2_t1", parse_grid("s=1..3"));
  auto j = nlohmann::json::parse(emit_ledger(r, "json"));
  CHECK(j["reports"].size() == 3);
  CHECK(j["reports"][2]["lhs"] == "3");
  CHECK(j["reports"][2]["instance"]["s"] == 3);
  CHECK(j["summary"]["exit_code"] == 0);
  const std::string csv = emit_ledger(r, "csv");
  CHECK(csv.rfind("lemma,instance,lhs", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
  const std::string md = emit_ledger(r, "markdown");
  CHECK(md.find("| k3aw2_t1 | 3 | 3 | 0 | 0 | 0 |") != std::string::npos);
  CHECK_THROWS_AS(emit_ledger(r, "xml"), Error);
}
