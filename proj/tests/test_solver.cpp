#include <gtest/gtest.h>

#include <regex>

#include "straightknot/error.hpp"
#include "straightknot/families.hpp"
#include "straightknot/solver.hpp"
#include "test_util.hpp"

using namespace sk;

namespace {

SolveResult solve(const std::string& name, int n_max, int threads = 1, int n_min = 0) {
  SolveOptions o;
  o.n_max = n_max;
  o.n_min = n_min;
  o.threads = threads;
  return straight_number(sktest::knot(name), &sktest::table(), o);
}

void check_witness(const SolveResult& r, const Diagram& target) {
  ASSERT_TRUE(r.witness);
  StraightCode w = validate_straight(*r.witness);
  EXPECT_EQ(w.n, r.value);
  Diagram d = straight_to_diagram(w);
  EXPECT_EQ(fingerprint(d), fingerprint(target));
  EXPECT_TRUE(straight_decomposable(d).has_value());
}

size_t count(const std::string& s, const std::string& pat) {
  std::regex re(pat);
  return std::distance(std::sregex_iterator(s.begin(), s.end(), re), std::sregex_iterator());
}

}  // namespace

TEST(StraightNumber, Trefoil) {
  auto r = solve("3_1", 5);
  EXPECT_EQ(r.status, SolveStatus::Found);
  EXPECT_EQ(r.value, 3);
  check_witness(r, sktest::knot("3_1"));
}

TEST(StraightNumber, Knot818) {
  auto r = solve("8_18", 10);
  EXPECT_EQ(r.status, SolveStatus::Found);
  EXPECT_EQ(r.value, 10);
  check_witness(r, sktest::knot("8_18"));
  ASSERT_EQ(r.levels.size(), 3u);
  EXPECT_TRUE(r.levels[0].exhausted && !r.levels[0].found);
  EXPECT_TRUE(r.levels[1].exhausted && !r.levels[1].found);
  EXPECT_EQ(r.levels[0].level, 8);
  EXPECT_TRUE(r.levels[2].found);
}

TEST(StraightNumber, Knot932) {
  auto r = solve("9_32", 10);
  EXPECT_EQ(r.status, SolveStatus::Found);
  EXPECT_EQ(r.value, 10);
  check_witness(r, sktest::knot("9_32"));
}

TEST(StraightNumber, BudgetGivesLowerBound) {
  auto r = solve("8_18", 9);
  EXPECT_EQ(r.status, SolveStatus::LowerBoundOnly);
  EXPECT_EQ(r.value, 10);
  EXPECT_FALSE(r.witness);
  for (auto& l : r.levels) EXPECT_TRUE(l.exhausted);
  try {
    solve("8_18", 7);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DomainError);
  }
}

TEST(StraightNumber, AmbiguousOnDuplicateNames) {
  KnotRecord a = *sktest::table().find("3_1");
  KnotRecord b = a;
  b.name = "also_3_1";
  Table t = Table::from_records({a, b});
  SolveOptions o;
  o.n_max = 4;
  o.threads = 1;
  auto r = straight_number(a.diagram, &t, o);
  EXPECT_EQ(r.status, SolveStatus::Ambiguous);
  EXPECT_EQ(r.value, 3);
  EXPECT_EQ(r.candidates, (std::vector<std::string>{"3_1", "also_3_1"}));
}

TEST(StraightNumber, NoTableStillFinds) {
  SolveOptions o;
  o.n_max = 6;
  o.threads = 1;
  auto r = straight_number(sktest::knot("5_2"), nullptr, o);
  EXPECT_EQ(r.status, SolveStatus::Found);
  EXPECT_EQ(r.value, 5);
}

TEST(StraightNumber, DeterministicAcrossWorkers) {
  for (auto name : {"7_7", "8_18", "9_32"}) {
    auto r1 = solve(name, 10, 1);
    for (int th : {4, 8}) {
      auto r = solve(name, 10, th);
      EXPECT_EQ(r.status, r1.status) << name;
      EXPECT_EQ(r.value, r1.value) << name;
      ASSERT_TRUE(r.witness && r1.witness);
      EXPECT_EQ(canonicalize(*r.witness), canonicalize(*r1.witness)) << name;
      EXPECT_EQ(r.witness->to_string(), r1.witness->to_string()) << name;
    }
  }
}

TEST(StraightNumber, NothingBelowCrossingNumber) {
  for (const auto& rec : sktest::table().records()) {
    if (rec.crossing_number > 7) continue;
    int c = rec.crossing_number;
    auto below = solve(rec.name, c - 1, 1, c - 1);
    EXPECT_EQ(below.status, SolveStatus::LowerBoundOnly) << rec.name;
    auto r = solve(rec.name, c + 3);
    EXPECT_NE(r.status, SolveStatus::LowerBoundOnly) << rec.name;
    EXPECT_GE(r.value, c) << rec.name;
    if (r.witness) check_witness(r, rec.diagram);
  }
}

TEST(StraightNumber, LowerBoundReason) {
  std::string why;
  EXPECT_EQ(straight_lower_bound(sktest::knot("8_18"), &why), 8);
  EXPECT_FALSE(why.empty());
  EXPECT_EQ(straight_lower_bound(sktest::knot("8_19")), 3);
  EXPECT_EQ(straight_lower_bound(validate_pd({})), 3);
}

TEST(ResolveThreads, EnvOverride) {
  EXPECT_EQ(resolve_threads(3), 3);
  setenv("STRAIGHTKNOT_THREADS", "5", 1);
  EXPECT_EQ(resolve_threads(0), 5);
  unsetenv("STRAIGHTKNOT_THREADS");
  EXPECT_GE(resolve_threads(0), 1);
}

TEST(PerfectlyStraight, Examples) {
  const Table* t = &sktest::table();
  auto p77 = is_perfectly_straight(sktest::knot("7_7"), t);
  EXPECT_TRUE(p77.value);
  EXPECT_FALSE(straight_decomposable(sktest::knot("7_7")).has_value());
  EXPECT_FALSE(is_perfectly_straight(sktest::knot("8_18"), t).value);
  auto w = is_perfectly_straight(weaving(3, 5), t);
  EXPECT_FALSE(w.value);
  ASSERT_FALSE(w.evidence.levels.empty());
  EXPECT_TRUE(w.evidence.levels.back().exhausted);
  EXPECT_EQ(w.evidence.levels.back().level, 10);
}

TEST(VerifyWeaving, Reports) {
  auto r = verify_weaving(3, 4);
  EXPECT_EQ(r.crossings, 8);
  EXPECT_EQ(r.bound, 7);
  EXPECT_EQ(r.max_simple_arc, 6);
  EXPECT_EQ(r.traversal_count, 6);
  EXPECT_EQ(r.flype_candidates, 0);
  EXPECT_TRUE(r.not_perfectly_straight);
  EXPECT_FALSE(r.decomposable);
  EXPECT_FALSE(r.ok());
  auto r45 = verify_weaving(4, 5);
  EXPECT_EQ(r45.bound, 10);
  EXPECT_EQ(r45.crossings, 15);
  EXPECT_TRUE(r45.not_perfectly_straight);
  try {
    verify_weaving(3, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DomainError);
  }
}

TEST(VerifyTemplate, BaseCase) {
  auto r = verify_template({}, &sktest::table(), 1);
  EXPECT_EQ(r.crossings, 9);
  EXPECT_EQ(r.witness_crossings, 10);
  EXPECT_TRUE(r.witness_matches);
  EXPECT_TRUE(r.lower_level.exhausted);
  EXPECT_FALSE(r.lower_level.found);
  ASSERT_TRUE(r.straight_number);
  EXPECT_EQ(*r.straight_number, 10);
  try {
    verify_template({{1, 1, 1, 2, 1, 1}}, nullptr);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SpecInvalid);
  }
}

TEST(RenderSvg, KinkAndWitness932) {
  std::string k = render_svg(StraightCode::parse("1; 1; UD; 1"));
  EXPECT_EQ(count(k, "class=\"gap\""), 1u);
  EXPECT_EQ(count(k, "class=\"arc\""), 2u);
  auto w = StraightCode::parse("10; 2 5 8 7 6 1 10 3 4 9; UDUDUDUUDUD; 1010110110");
  std::string s = render_svg(w);
  EXPECT_EQ(count(s, "class=\"gap\""), 10u);
  EXPECT_EQ(count(s, "class=\"arc\""), 11u);
  EXPECT_EQ(s, render_svg(w));
  EXPECT_EQ(s.rfind("<svg", 0), 0u);
  EXPECT_NE(s.find("</svg>"), std::string::npos);
}

TEST(Report, JsonHasCertificates) {
  auto r = solve("8_18", 10);
  std::string j = solve_report_json(r);
  EXPECT_NE(j.find("\"status\": \"Found\""), std::string::npos);
  EXPECT_EQ(count(j, "\"exhausted\": true"), 2u);
}
