#include <gtest/gtest.h>

#include <fstream>
#include <nlohmann/json.hpp>

#include "straightknot/error.hpp"
#include "straightknot/families.hpp"
#include "straightknot/transfer.hpp"
#include "test_util.hpp"

using namespace sk;

namespace {

struct Oracle {
  std::string name;
  int64_t det;
  int sig;
  Laurent alex, jones;
};

const std::vector<Oracle>& oracles() {
  static const std::vector<Oracle> v = [] {
    std::vector<Oracle> out;
    std::ifstream in(SK_ORACLE_PATH);
    std::string line;
    auto poly = [](const nlohmann::json& j) {
      return Laurent(j["offset"].get<int>(), j["coeffs"].get<std::vector<int64_t>>());
    };
    while (std::getline(in, line)) {
      auto j = nlohmann::json::parse(line);
      out.push_back({j["name"], j["determinant"], j["signature"], poly(j["alexander"]), poly(j["jones"])});
    }
    return out;
  }();
  return v;
}

std::vector<Diagram> sample_diagrams() {
  std::vector<Diagram> out;
  for (int n = 1; n <= 7; ++n)
    for (auto& c : sktest::sample_codes(n, 60, 100 + n)) out.push_back(straight_to_diagram(c));
  for (const auto& r : sktest::table().records())
    if (r.crossing_number <= 8) out.push_back(r.diagram);
  return out;
}

const Laurent kA = Laurent::monomial(1, 1);

}  // namespace

TEST(Laurent, ArithmeticAndText) {
  Laurent p(-4, {1, 0, -1, 1, 0, 0, 0, 0, 1});
  EXPECT_EQ(p.serialize(), "offset=-4; coeffs=[1,0,-1,1,0,0,0,0,1]");
  EXPECT_EQ(Laurent::parse(p.serialize()), p);
  Laurent q = Laurent(-1, {1, 1});
  EXPECT_EQ((q * q).coeffs(), (std::vector<int64_t>{1, 2, 1}));
  EXPECT_EQ((q * q).exact_div(q), q);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(p.substitute(-1).min_exp(), -4);
  EXPECT_EQ(Laurent(0, {1, 1}).pow(3).eval_pm1(1), 8);
}

TEST(Laurent, OverflowIsReported) {
  Laurent big = Laurent::constant(int64_t{1} << 62);
  try {
    big + big;
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Overflow);
  }
  EXPECT_THROW(checked_mul(int64_t{1} << 40, int64_t{1} << 40), Error);
}

TEST(Bracket, UnknotAndKinks) {
  EXPECT_EQ(kauffman_bracket(validate_pd({})), Laurent::constant(1));
  Laurent d = Laurent(-2, {-1, 0, 0, 0, -1});
  // two-state expansion of a kink: A d + A^-1, or A + A^-1 d
  Laurent left = kA * d + Laurent::monomial(1, -1);
  Laurent right = kA + Laurent::monomial(1, -1) * d;
  Laurent b1 = kauffman_bracket(straight_to_diagram(StraightCode::parse("1; 1; UD; 1")));
  Laurent b0 = kauffman_bracket(straight_to_diagram(StraightCode::parse("1; 1; UD; 0")));
  EXPECT_TRUE((b1 == left && b0 == right) || (b1 == right && b0 == left));
  EXPECT_TRUE(b1 == Laurent::monomial(-1, 3) || b1 == Laurent::monomial(-1, -3));
  EXPECT_EQ(b0, b1.substitute(-1));
}

TEST(Bracket, StateSumCap) {
  try {
    kauffman_bracket(weaving(3, 8), 12);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BudgetExceeded);
  }
}

TEST(Bracket, ContractionEqualsStateSum) {
  for (const auto& r : sktest::table().records())
    if (r.crossing_number <= 10) EXPECT_EQ(bracket(r.diagram), kauffman_bracket(r.diagram)) << r.name;
}

TEST(Bracket, TransferEqualsStateSumExhaustive) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& c : sktest::all_codes(n))
      ASSERT_EQ(bracket_transfer(c), kauffman_bracket(straight_to_diagram(c))) << c.to_string();
}

TEST(Bracket, TransferEqualsStateSumSampled) {
  for (int n = 8; n <= 10; ++n)
    for (const auto& c : sktest::sample_codes(n, 25, 1000 + n))
      EXPECT_EQ(bracket_transfer(c), kauffman_bracket(straight_to_diagram(c))) << c.to_string();
}

TEST(Bracket, TransferMatchesWitness932) {
  auto c = StraightCode::parse("10; 2 5 8 7 6 1 10 3 4 9; UDUDUDUUDUD; 1010110110");
  Diagram d = straight_to_diagram(c);
  Laurent v = jones_from_bracket(bracket_transfer(c), d.writhe());
  EXPECT_EQ(jones_canonical(v), fingerprint(sktest::knot("9_32")).jones);
}

TEST(Bracket, ModularSweepMatchesJones) {
  const uint64_t a = 0x2545F4914F6CDD1DULL % ModP::P, ai = ModP::inv(a);
  for (int n = 3; n <= 7; ++n)
    for (const auto& c : sktest::sample_codes(n, 40, 50 + n)) {
      Laurent v = jones(straight_to_diagram(c));
      uint64_t want = v.eval_mod(ModP::pow(ai, 4), ModP::pow(a, 4), ModP::P);
      EXPECT_EQ(normalized_bracket_mod(make_plan(c.shadow()), c.overs, a), want) << c.to_string();
    }
}

TEST(Jones, UnknotAndMirror) {
  EXPECT_EQ(jones(validate_pd({})), Laurent::constant(1));
  EXPECT_EQ(jones(straight_to_diagram(StraightCode::parse("1; 1; UD; 1"))), Laurent::constant(1));
  Diagram t = sktest::trefoil();
  EXPECT_EQ(jones(mirror(t)), jones(t).substitute(-1));
  EXPECT_NE(jones(t), jones(mirror(t)));
}

TEST(Jones, Weaving34Is818) {
  EXPECT_EQ(jones_canonical(jones(weaving(3, 4))), jones_canonical(jones(sktest::knot("8_18"))));
}

TEST(Alexander, Examples) {
  EXPECT_EQ(alexander(validate_pd({})), Laurent::constant(1));
  EXPECT_EQ(alexander(sktest::trefoil()), Laurent(-1, {1, -1, 1}));
  EXPECT_EQ(alexander(sktest::knot("4_1")), Laurent(-1, {-1, 3, -1}));
}

TEST(Determinant, Examples) {
  EXPECT_EQ(determinant(validate_pd({})), 1);
  EXPECT_EQ(determinant(sktest::trefoil()), 3);
  EXPECT_EQ(determinant_goeritz(sktest::trefoil()), 3);
  EXPECT_EQ(matrix_determinant({{2, 1}, {1, 2}}), 3);
  EXPECT_EQ(matrix_determinant({}), 1);
}

TEST(Signature, Examples) {
  EXPECT_EQ(signature(validate_pd({})), 0);
  Diagram t = sktest::trefoil();
  EXPECT_EQ(std::abs(signature(t)), 2);
  EXPECT_EQ(signature(mirror(t)), -signature(t));
  EXPECT_EQ(signature(sktest::knot("4_1")), 0);
  EXPECT_EQ(matrix_signature({{0, 1}, {1, 0}}), 0);
  EXPECT_EQ(matrix_signature({{1, 0, 0}, {0, 0, 0}, {0, 0, -3}}), 0);
  EXPECT_EQ(matrix_signature({{2, 1}, {1, 2}}), 2);
}

TEST(Oracle, TableMatchesKnotInfo) {
  const auto& t = sktest::table();
  ASSERT_EQ(oracles().size(), t.records().size());
  for (const auto& o : oracles()) {
    const KnotRecord* r = t.find(o.name);
    ASSERT_NE(r, nullptr) << o.name;
    const Diagram& d = r->diagram;
    EXPECT_EQ(determinant(d), o.det) << o.name;
    EXPECT_EQ(signature(d, 0), o.sig) << o.name;
    EXPECT_EQ(signature(d, 1), o.sig) << o.name;
    EXPECT_EQ(alexander(d), normalize_alexander(o.alex)) << o.name;
    EXPECT_EQ(jones(d), o.jones) << o.name;
  }
}

TEST(Properties, AlexanderPalindromicAndNormalized) {
  for (const auto& d : sample_diagrams()) {
    Laurent a = alexander(d);
    EXPECT_EQ(a.substitute(-1), a);
    EXPECT_EQ(a.eval_pm1(1), 1);
  }
}

TEST(Properties, DeterminantRoutesAgree) {
  for (const auto& d : sample_diagrams()) {
    EXPECT_EQ(determinant_alexander(d), determinant_goeritz(d)) << pd_to_string(d.pd);
    EXPECT_EQ(determinant_goeritz(d), std::llabs(matrix_determinant(goeritz_matrix(d, 1))));
  }
}

TEST(Properties, MirrorAntisymmetry) {
  for (const auto& d : sample_diagrams()) {
    Diagram m = mirror(d);
    EXPECT_EQ(jones(m), jones(d).substitute(-1));
    EXPECT_EQ(signature(m), -signature(d));
    EXPECT_EQ(signature(d, 0), signature(d, 1));
    EXPECT_EQ(fingerprint(m), fingerprint(d));
  }
}

TEST(Fingerprint, Presentations) {
  EXPECT_EQ(fingerprint(weaving(3, 4)), fingerprint(sktest::knot("8_18")));
  EXPECT_EQ(fingerprint(weaving(3, 5)), fingerprint(sktest::knot("10_123")));
  Diagram right = straight_to_diagram(StraightCode::parse("10; 2 5 8 7 6 1 10 3 4 9; UDUDUDUUDUD; 1010110110"));
  EXPECT_EQ(fingerprint(template_knot({})), fingerprint(right));
  EXPECT_EQ(fingerprint(template_knot({})), fingerprint(sktest::knot("9_32")));
}

TEST(Fingerprint, TextRoundTripAndDeterminism) {
  Fingerprint f = fingerprint(sktest::knot("9_32"));
  EXPECT_EQ(Fingerprint::parse(f.serialize()), f);
  EXPECT_EQ(fingerprint(sktest::knot("9_32")).serialize(), f.serialize());
}
