#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "blockinv/conjecture.hpp"
#include "blockinv/error.hpp"
#include "blockinv/grid.hpp"
#include "blockinv/report.hpp"

#include <json.hpp>

using namespace blockinv;

TEST_CASE("GL, ell = 3, a = 1, w = 3") {
  auto r = check_conjecture(BlockParams::gl3(1, 1, 3));
  CHECK(r.kB.value == 24);
  CHECK(r.k0B.value == 9);
  CHECK(r.c1 == ConjVerdict::Verified);
  CHECK(r.c2 == ConjVerdict::Verified);
  CHECK(r.error.empty());
}

TEST_CASE("SL, a = 1, w = 3") {
  auto r = check_conjecture_sl(1, 3);
  CHECK(r.kB.value == 16);
  CHECK(r.k0B.value == 6);
  CHECK(r.kDprime.value == 3);
  CHECK(r.lB.value == 5);
  CHECK(r.kD.value >= 9);
  CHECK(r.c1 == ConjVerdict::Verified);
  CHECK(r.c2 == ConjVerdict::Verified);
}

TEST_CASE("3 mod 4, atilde = 2, w = 1 holds with equality in (C2)") {
  auto r = check_conjecture(BlockParams::gl2_three_mod_four(2, 1));
  CHECK(r.kB.value == 2);
  CHECK(r.kD.value == 2);
  CHECK(r.lB.value * r.kD.value == 2);
  CHECK(r.c2 == ConjVerdict::Verified);
}

TEST_CASE("a tiny cap forces lower bounds, never a wrong verdict") {
  auto exact = check_conjecture(BlockParams::gl3(2, 1, 6));
  auto capped = check_conjecture(BlockParams::gl3(2, 1, 6), 10);
  CHECK(capped.kDprime.value <= exact.kDprime.value);
  CHECK(capped.c1 != ConjVerdict::Violated);
  CHECK(exact.c1 == ConjVerdict::Verified);
}

TEST_CASE("grid parsing") {
  auto g = parse_grid("mode=gl; ell=3; a=1..3; d=1,2\nw=6..60:3 # comment");
  CHECK(g.ints("a") == std::vector<long>{1, 2, 3});
  CHECK(g.ints("w").size() == 19);
  CHECK(g.strings("mode") == std::vector<std::string>{"gl"});
  auto s = SweepGrid::from(g);
  CHECK(s.points().size() == 3 * 2 * 19);
  try {
    parse_grid("a=1..x").ints("a");
    FAIL("no parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 5);  // the "x"
  }
  CHECK_THROWS_AS(SweepGrid::from(parse_grid("colour=red")), Error);
  CHECK_THROWS_AS(SweepGrid::from(parse_grid("ell=5")), Error);
  CHECK(SweepGrid::from(parse_grid("w=")).points().empty());
}

TEST_CASE("sweep order and workers") {
  auto g = SweepGrid::from(parse_grid("ell=2; case=1mod4,3mod4; a=2..3; atilde=2..3; w=1..8"));
  auto pts = g.points();
  REQUIRE(pts.size() == 32);
  CHECK(pts.front().params.case2 == Case2::OnePlusFour);
  CHECK(pts.back().params.case2 == Case2::ThreeMod4);
  CHECK(pts[1].params.w == 2);
  auto one = sweep(g, 1), three = sweep(g, 3);
  CHECK(emit_report(one, ReportFormat::Json) == emit_report(three, ReportFormat::Json));
  CHECK(exit_code(one) == 0);
}

TEST_CASE("SL sweep") {
  auto r = sweep(SweepGrid::from(parse_grid("mode=sl; a=1..3; w=3,6,9,12")));
  CHECK(r.size() == 12);
  CHECK(exit_code(r) == 0);
}

TEST_CASE("exit codes") {
  std::vector<ConjectureReport> r(2);
  r[0].c1 = r[0].c2 = r[1].c1 = r[1].c2 = ConjVerdict::Verified;
  CHECK(exit_code(r) == 0);
  r[1].c2 = ConjVerdict::Inconclusive;
  CHECK(exit_code(r) == 2);
  r[0].c1 = ConjVerdict::Violated;
  CHECK(exit_code(r) == 1);
  CHECK(exit_code({}) == 0);
}

TEST_CASE("reports") {
  auto r = sweep(SweepGrid::from(parse_grid("ell=2; case=3mod4; atilde=3; w=1,2,4,8")));
  const std::string md = emit_report(r, ReportFormat::Markdown);
  for (const char* row : {"| 1 | 2 |", "| 2 | 12 |", "| 4 | 94 |", "| 8 | 2908 |"}) CHECK(md.find(row) != std::string::npos);
  r = sweep(SweepGrid::from(parse_grid("ell=2; case=3mod4; atilde=2; w=1..3")));
  const std::string md2 = emit_report(r, ReportFormat::Markdown);
  for (const char* row : {"| 1 | 2 |", "| 2 | 8 |", "| 3 | 16 |"}) CHECK(md2.find(row) != std::string::npos);

  auto j = nlohmann::json::parse(emit_report(r, ReportFormat::Json));
  CHECK(j["reports"].size() == 3);
  CHECK(j["reports"][2]["kB"]["value"] == "16");
  CHECK(j["summary"]["exit_code"] == 0);
  CHECK(nlohmann::json::parse(j.dump()) == j);
  // ell = 3 has no case; it must come out as null
  auto j3 = nlohmann::json::parse(emit_report(sweep(SweepGrid::from(parse_grid("ell=3; a=1; w=1..2"))), ReportFormat::Json));
  CHECK(j3["reports"][0]["case"].is_null());
  CHECK(j3["reports"][1]["kB"]["value"] == "9");
  const std::string csv = emit_report(r, ReportFormat::Csv);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
  CHECK(parse_report_format("md") == ReportFormat::Markdown);
  CHECK_THROWS_AS(parse_report_format("yaml"), Error);
  CHECK(emit_report({}, ReportFormat::Markdown).find("0 points") != std::string::npos);
}
