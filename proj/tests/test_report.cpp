#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "bcov/fixtures.hpp"
#include "bcov/svg.hpp"

using namespace bcov;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string golden_path(const std::string& name) {
  return std::string(BCOV_SOURCE_DIR) + "/tests/golden/" + name + ".json";
}

}  // namespace

TEST_CASE("rational and interval json round trips") {
  for (const char* s : {"0", "1", "-7", "3/2", "-22/7", "1000000000000000/7"}) {
    Rat r = rat_from_json(Json(s), "x");
    CHECK(rat_json(r).get<std::string>() == s);
  }
  CHECK_THROWS_AS(rat_from_json(Json("1.5"), "slope"), InputError);
  CHECK_THROWS_AS(rat_from_json(Json(3), "slope"), InputError);
  try {
    rat_from_json(Json("abc"), "intercept");
    FAIL("expected InputError");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("intercept") != std::string::npos);
  }

  QInterval iv{Rat("-1/3"), Rat("22/7")};
  QInterval back = interval_from_json(interval_json(iv), "iv");
  CHECK(back.lo == iv.lo);
  CHECK(back.hi == iv.hi);
}

TEST_CASE("fixture registry") {
  auto names = fixture_names();
  CHECK(names.size() == 6);
  for (const char* required : {"notbranched-i", "notbranched-ii-pl", "x-cross",
                               "bezout-n2-regular", "bezout-n3-collapse", "finite-x"})
    CHECK(std::find(names.begin(), names.end(), required) != names.end());
  CHECK_THROWS_AS(load_fixture("no-such-fixture"), InputError);
  CHECK_THROWS_AS(load_fixture("../../etc/passwd"), InputError);
  CHECK_THROWS_AS(plcov_fixture("bezout-n2-regular"), InputError);  // wrong kind

  setenv("BCOV_FIXTURES_DIR", "/nonexistent", 1);
  CHECK_THROWS_AS(load_fixture("x-cross"), InputError);
  unsetenv("BCOV_FIXTURES_DIR");
  CHECK_NOTHROW(load_fixture("x-cross"));
}

TEST_CASE("plcov json round trip with exact rationals") {
  for (const char* n : {"notbranched-i", "notbranched-ii-pl", "x-cross"}) {
    PLCovering cov = plcov_fixture(n);
    PLCovering back = plcov_from_json(plcov_to_json(cov));
    REQUIRE(back.base.size() == cov.base.size());
    for (std::size_t i = 0; i < cov.base.size(); ++i) {
      CHECK(back.base[i].lo == cov.base[i].lo);
      CHECK(back.base[i].hi == cov.base[i].hi);
    }
    REQUIRE(back.segments.size() == cov.segments.size());
    for (std::size_t i = 0; i < cov.segments.size(); ++i) {
      CHECK(back.segments[i].x_lo == cov.segments[i].x_lo);
      CHECK(back.segments[i].x_hi == cov.segments[i].x_hi);
      CHECK(back.segments[i].slope == cov.segments[i].slope);
      CHECK(back.segments[i].intercept == cov.segments[i].intercept);
    }
  }
  CHECK_THROWS_AS(plcov_from_json(Json{{"base", Json::array()}}), InputError);
}

TEST_CASE("branch report json round trip") {
  for (const char* n : {"notbranched-i", "notbranched-ii-pl", "x-cross"}) {
    BranchReport rep = analyze(plcov_fixture(n));
    Json j = branch_report_to_json(rep);
    BranchReport back = branch_report_from_json(j);
    CHECK(branch_report_to_json(back) == j);
    CHECK(back.is_quasi == rep.is_quasi);
    CHECK(back.is_branched == rep.is_branched);
    CHECK(back.B == rep.B);
    CHECK(back.R == rep.R);
    REQUIRE(back.b.size() == rep.b.size());
    for (std::size_t i = 0; i < rep.b.size(); ++i) {
      CHECK(back.b[i].p == rep.b[i].p);
      CHECK(back.b[i].index == rep.b[i].index);
    }
  }
}

TEST_CASE("bezout analysis json round trip") {
  for (const char* n : {"bezout-n2-regular", "bezout-n3-collapse"}) {
    BezoutAnalysis a = analyze_point(bezout_fixture(n));
    CHECK(a.exact);
    Json j = bezout_to_json(a);
    BezoutAnalysis back = bezout_from_json(j);
    CHECK(bezout_to_json(back) == j);
    CHECK(back.fiber_exact == a.fiber_exact);
  }
  /* irrational fiber travels as intervals */
  BezoutAnalysis irr = analyze_point(SigmaPoint(2, {Rat(0), Rat(-2)}));
  CHECK(irr.hyperbolic);
  CHECK_FALSE(irr.exact);
  REQUIRE(irr.fiber_iv.size() == 2);
  Json j = bezout_to_json(irr);
  CHECK(j.at("fiber_mode") == "interval");
  BezoutAnalysis back = bezout_from_json(j);
  CHECK(bezout_to_json(back) == j);
  REQUIRE(back.fiber_iv.size() == 2);
  CHECK(back.fiber_iv[0][0].lo == irr.fiber_iv[0][0].lo);
}

TEST_CASE("finite map json round trip and validation") {
  FinMap m = fintop_fixture("finite-x");
  CHECK(is_quasi_covering(m).ok);
  CHECK(is_branched_covering(m).is_branched);
  Json j = finmap_to_json(m);
  FinMap back = finmap_from_json(j);
  CHECK(finmap_to_json(back) == j);
  CHECK(back.X.up == m.X.up);
  CHECK(back.Y.up == m.Y.up);
  CHECK(back.f == m.f);

  Json bad = j;
  bad.erase("map");
  CHECK_THROWS_AS(finmap_from_json(bad), InputError);
  bad = j;
  bad["domain"][0][0] = 0;  // not reflexive
  CHECK_THROWS_AS(finmap_from_json(bad), InputError);
  bad = j;
  bad["map"][0] = 9;
  CHECK_THROWS_AS(finmap_from_json(bad), InputError);
}

TEST_CASE("fuzz summary json round trip") {
  FuzzSummary s = fuzz(42, 500, 6);
  Json j = fuzz_summary_to_json(s);
  FuzzSummary back = fuzz_summary_from_json(j);
  CHECK(fuzz_summary_to_json(back) == j);
  CHECK(back.trials == s.trials);
  CHECK(back.quasi == s.quasi);
  CHECK(back.lemma_counts == s.lemma_counts);
}

TEST_CASE("lemma verdict serialization") {
  FinMap m = fintop_fixture("finite-x");
  Json j = lemma_verdict_to_json(check_lemma("genbranch", m));
  CHECK(j.at("lemma") == "genbranch");
  CHECK(j.at("qualifying") == true);
  CHECK(j.at("holds") == true);
}

TEST_CASE("report envelope") {
  Json env = make_envelope("plcov check", std::nullopt, 12.5, Json{{"x", 1}});
  CHECK(env.at("tool") == "bcov");
  CHECK(env.at("schema") == 1);
  CHECK(env.at("command") == "plcov check");
  CHECK_FALSE(env.contains("seed"));
  CHECK(env.at("payload").at("x") == 1);
  Json env2 = make_envelope("fintop fuzz", 42, 1.0, Json::object());
  CHECK(env2.at("seed") == 42);
}

TEST_CASE("fixture payloads match golden files byte for byte") {
  for (const char* n : {"notbranched-i", "notbranched-ii-pl", "x-cross"}) {
    Json j = branch_report_to_json(analyze(plcov_fixture(n)));
    CHECK(j.dump(2) + "\n" == slurp(golden_path(n)));
  }
  for (const char* n : {"bezout-n2-regular", "bezout-n3-collapse"}) {
    Json j = bezout_to_json(analyze_point(bezout_fixture(n)));
    CHECK(j.dump(2) + "\n" == slurp(golden_path(n)));
  }
  Json j = finmap_to_json(fintop_fixture("finite-x"));
  CHECK(j.dump(2) + "\n" == slurp(golden_path("finite-x")));
}

TEST_CASE("svg rendering") {
  PLCovering xc = plcov_fixture("x-cross");
  BranchReport xr = analyze(xc);
  std::string svg = render_svg(xc, xr);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("crimson") != std::string::npos);
  std::size_t markers = 0;
  for (std::size_t p = svg.find("crimson"); p != std::string::npos;
       p = svg.find("crimson", p + 1))
    ++markers;
  CHECK(markers == 1);

  /* no branch points, no markers */
  PLCovering plain;
  plain.base = {{Rat(0), Rat(1)}};
  plain.segments = {{Rat(0), Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0), Rat(1)}};
  BranchReport pr = analyze(plain);
  CHECK(pr.B.empty());
  CHECK(render_svg(plain, pr).find("crimson") == std::string::npos);

  std::string out = std::string(BCOV_SOURCE_DIR) + "/build/test_out.svg";
  emit_svg(xc, xr, out);
  CHECK(slurp(out) == render_svg(xc, xr));
  CHECK_THROWS_AS(emit_svg(xc, xr, "/nonexistent-dir/out.svg"), InputError);
}
