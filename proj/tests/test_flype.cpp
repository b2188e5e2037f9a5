#include <gtest/gtest.h>

#include <set>

#include "straightknot/error.hpp"
#include "straightknot/families.hpp"
#include "straightknot/flype.hpp"
#include "test_util.hpp"

using namespace sk;

namespace {

// components of the shadow after deleting the given edges
int oracle_components(const Diagram& d, const std::array<int, 4>& cut) {
  const int n = d.crossings();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::function<int(int)> find = [&](int x) { return p[x] == x ? x : p[x] = find(p[x]); };
  std::map<int, std::vector<int>> at;
  for (int c = 0; c < n; ++c)
    for (int e : d.pd[c]) at[e].push_back(c);
  for (auto& [e, cs] : at)
    if (std::find(cut.begin(), cut.end(), e) == cut.end()) p[find(cs[0])] = find(cs[1]);
  std::set<int> roots;
  for (int c = 0; c < n; ++c) roots.insert(find(c));
  return static_cast<int>(roots.size());
}

void check_cuts(const Diagram& d) {
  for (const auto& c : four_cuts(d)) {
    EXPECT_TRUE(disconnects(d, c.edges));
    std::vector<int> all = c.inside;
    all.insert(all.end(), c.outside.begin(), c.outside.end());
    std::sort(all.begin(), all.end());
    std::vector<int> want(d.crossings());
    std::iota(want.begin(), want.end(), 0);
    EXPECT_EQ(all, want);
    EXPECT_LE(c.inside.size(), c.outside.size());
    if (!c.inside.empty()) EXPECT_EQ(oracle_components(d, c.edges), 2);
    CutKind k = c.inside.empty() ? CutKind::Trivial
                : c.inside.size() == 1 ? CutKind::SingleCrossing
                                       : CutKind::TangleTangle;
    EXPECT_EQ(c.kind, k);
  }
}

}  // namespace

TEST(FourCuts, Trefoil) {
  Diagram t = sktest::trefoil();
  auto cuts = four_cuts(t);
  int single = 0, tangle = 0;
  for (auto& c : cuts) {
    single += c.kind == CutKind::SingleCrossing;
    tangle += c.kind == CutKind::TangleTangle;
  }
  // a 1|2 split of three crossings has a one-crossing side
  EXPECT_EQ(single, 3);
  EXPECT_EQ(tangle, 0);
  check_cuts(t);
}

TEST(FourCuts, WeavingOnlySingleCrossing) {
  for (auto [n, m] : std::vector<std::pair<int, int>>{{3, 4}, {3, 5}, {4, 5}}) {
    Diagram w = weaving(n, m);
    auto cuts = four_cuts(w);
    EXPECT_FALSE(cuts.empty());
    for (auto& c : cuts) EXPECT_NE(c.kind, CutKind::TangleTangle) << n << "," << m;
    check_cuts(w);
  }
}

TEST(FourCuts, Degenerate) {
  EXPECT_TRUE(four_cuts(validate_pd({})).empty());
  for (auto& c : four_cuts(straight_to_diagram(StraightCode::parse("1; 1; UD; 1")))) EXPECT_EQ(c.kind, CutKind::Trivial);
}

TEST(FourCuts, NonPrimeRejected) {
  Diagram granny = braid_closure({3, {{1, 3}, {2, 3}}});
  try {
    four_cuts(granny);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonPrime);
  }
}

TEST(FourCuts, TableInvariants) {
  for (const auto& r : sktest::table().records())
    if (r.crossing_number <= 9) check_cuts(r.diagram);
}

TEST(FlypeCandidates, TrefoilOnlyTrivial) {
  auto c = flype_candidates(sktest::trefoil());
  EXPECT_FALSE(c.empty());
  for (auto& f : c) EXPECT_FALSE(f.nontrivial);
}

TEST(FlypeCandidates, WeavingGridEmpty) {
  for (auto [n, m] : std::vector<std::pair<int, int>>{{3, 4}, {3, 5}, {4, 5}, {3, 7}, {4, 7}, {5, 6}}) {
    int nontrivial = 0;
    for (auto& f : flype_candidates(weaving(n, m))) nontrivial += f.nontrivial;
    EXPECT_EQ(nontrivial, 0) << n << "," << m;
    EXPECT_TRUE(flype_candidates(weaving(n, m)).empty()) << n << "," << m;
  }
}

TEST(FlypeCandidates, NineThirtyTwoDeterministic) {
  Diagram k = template_knot({});
  auto a = flype_candidates(k);
  auto b = flype_candidates(k);
  ASSERT_EQ(a.size(), b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].flyper, b[i].flyper);
    EXPECT_EQ(a[i].cut, b[i].cut);
    EXPECT_EQ(a[i].cycle, b[i].cycle);
  }
  EXPECT_EQ(flype_report_json(k), flype_report_json(k));
  int nontrivial = 0;
  for (auto& f : a) {
    nontrivial += f.nontrivial;
    EXPECT_EQ(std::count(f.tangle.begin(), f.tangle.end(), f.flyper), 0);
    EXPECT_EQ(std::count(f.rest.begin(), f.rest.end(), f.flyper), 0);
    EXPECT_EQ(f.tangle.size() + f.rest.size() + 1, static_cast<size_t>(k.crossings()));
  }
  EXPECT_GT(nontrivial, 0);
}
