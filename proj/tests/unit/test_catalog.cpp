#include <doctest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "pingpong/case_file.hpp"
#include "pingpong/catalog.hpp"
#include "pingpong/word.hpp"

using namespace pingpong;

namespace {

Rat q(long n, long d) { return Rat(BigInt(n), BigInt(d)); }

const CaseSpec& get(const char* id) { return *find_case(builtin_catalog(), id); }

}  // namespace

TEST_CASE("builtin catalog rows") {
  const auto& cat = builtin_catalog();
  REQUIRE(cat.size() == 15);
  CHECK(cat.front().id == "c01");
  CHECK(cat.back().id == "sl2");

  const CaseSpec& c01 = get("c01");
  CHECK(c01.params == std::vector<Rat>{q(1, 5), q(2, 5), q(3, 5), q(4, 5)});
  CHECK(*c01.d == 5);
  CHECK(*c01.k == 5);
  CHECK(c01.expected.kind == Expected::Kind::Split);
  CHECK(c01.expected.splitting->str() == "Z*Z/5");

  const CaseSpec& c09 = get("c09");
  CHECK(*c09.d == 1);
  CHECK(*c09.k == 2);
  CHECK(c09.expected.kind == Expected::Kind::Relation);
  CHECK(c09.relation_word->str() == Word::parse("(R T)^8").str());

  const CaseSpec& c13 = get("c13");
  CHECK(*c13.d == 4);
  CHECK(*c13.k == 4);
  CHECK(c13.expected.kind == Expected::Kind::Unknown);

  const CaseSpec& demo = get("sl2");
  CHECK(demo.dim == 2);
  CHECK(!demo.d);
  CHECK(demo.expected.splitting->str() == "Z*Z/3");

  int split = 0, relation = 0, unknown = 0;
  for (const auto& c : cat) {
    CHECK_NOTHROW(validate_case(c));
    if (c.dim != 4) continue;
    split += c.expected.kind == Expected::Kind::Split;
    relation += c.expected.kind == Expected::Kind::Relation;
    unknown += c.expected.kind == Expected::Kind::Unknown;
  }
  CHECK(split == 7);
  CHECK(relation == 5);
  CHECK(unknown == 2);
  CHECK(find_case(cat, "nope") == nullptr);
}

TEST_CASE("case validation") {
  CaseSpec c = get("c01");
  c.params = {q(2, 5), q(1, 5), q(3, 5), q(4, 5)};
  CHECK_THROWS_AS(validate_case(c), Error);
  c.params = {q(1, 5), q(2, 5), q(3, 5), q(3, 5)};
  CHECK_THROWS_AS(validate_case(c), Error);
  c.params = {q(1, 5), q(4, 5)};
  CHECK_THROWS_AS(validate_case(c), Error);
  c = get("c01");
  c.k = 0;
  CHECK_THROWS_AS(validate_case(c), Error);
  CHECK_THROWS_AS(exploration_case(0, 3), Error);
}

TEST_CASE("splitting and expectation descriptors round-trip") {
  for (const Splitting& s : {Splitting::free(), Splitting::free_times_finite(5), Splitting::amalgam(8)}) {
    CHECK(Splitting::parse(s.str()) == s);
  }
  CHECK(Splitting::amalgam(12).str() == "(ZxZ/2)*_{Z/2}Z/12");
  CHECK_THROWS_AS(Splitting::parse("Z*Q"), ParseError);
  CHECK(Expected::parse("split:Z*Z").splitting == Splitting::free());
  CHECK(Expected::parse("relation:(R T)^8").relation_text == "(R T)^8");
  CHECK(Expected::parse("unknown").kind == Expected::Kind::Unknown);
  CHECK_THROWS_AS(Expected::parse("maybe"), ParseError);
}

TEST_CASE("generators match the displayed matrices") {
  const GroupGens g = build_generators(5, 5);
  CHECK(g.R.row(1) == Vec{0, -4, -1, 1});
  CHECK(g.B == Mat{{-1, 0, 0, 0}, {0, 1, 0, -1}, {-5, 0, 1, 0}, {0, 0, 0, -1}});
  CHECK(g.U == Mat{{1, 1, 0, 0}, {0, 1, 0, 0}, {5, 5, 1, 0}, {0, -5, -1, 1}});
  CHECK(g.T == Mat{{1, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  CHECK(g.R == g.T * g.U);

  const GroupGens s = sl2_generators();
  CHECK(s.U == Mat{{3, 4}, {-1, -1}});
  CHECK(s.T == Mat{{1, 3}, {0, 1}});
  CHECK(s.R == Mat{{0, 1}, {-1, -1}});
  CHECK(build_generators(get("sl2")).R == s.R);
}

TEST_CASE("power structure examples") {
  const PowerStructure a = detect_power_structure(build_generators(5, 5));
  CHECK(a.p == 5);
  CHECK(a.sigma == 1);
  CHECK(a.Z.is_zero());
  CHECK(*a.finite_order == 5);
  CHECK(a.nilpotency_degree == 0);

  const PowerStructure b = detect_power_structure(build_generators(2, 4));
  CHECK(b.p == 4);
  CHECK(b.sigma == -1);
  CHECK(*b.finite_order == 8);
  CHECK(b.minus_identity());

  const PowerStructure c = detect_power_structure(build_generators(16, 8));
  CHECK(c.p == 1);
  CHECK(c.sigma == -1);
  CHECK(c.infinite());
  CHECK(c.nilpotency_degree == 4);

  const PowerStructure d = detect_power_structure(build_generators(12, 7));
  CHECK(d.p == 6);
  CHECK(d.sigma == 1);
  CHECK(d.nilpotency_degree == 2);

  const PowerStructure e = detect_power_structure(sl2_generators());
  CHECK(*e.finite_order == 3);

  CHECK_THROWS_AS(detect_power_structure(build_generators(16, 8), 0), Error);
}

TEST_CASE("power structure is consistent for every case") {
  for (const auto& c : builtin_catalog()) {
    const GroupGens g = build_generators(c);
    const PowerStructure ps = detect_power_structure(g);
    const Mat lhs = ps.sigma == 1 ? g.R.pow(ps.p) : -g.R.pow(ps.p);
    CHECK(nilpotent_exp(ps.Z) == lhs);
    if (ps.finite_order) {
      CHECK(g.R.pow(*ps.finite_order).is_identity());
      for (long m = 1; m < *ps.finite_order; ++m) CHECK_FALSE(g.R.pow(m).is_identity());
    }
  }
}

TEST_CASE("charpoly from parameters") {
  CHECK(charpoly_from_params({q(1, 2), q(1, 2), q(1, 2), q(1, 2)}) == IntPoly({1, 4, 6, 4, 1}));
  CHECK(charpoly_from_params({q(1, 5), q(2, 5), q(3, 5), q(4, 5)}) == IntPoly({1, 1, 1, 1, 1}));
  CHECK(charpoly_from_params({q(1, 8), q(3, 8), q(5, 8), q(7, 8)}) == IntPoly({1, 0, 0, 0, 1}));
  CHECK(charpoly_from_params({q(1, 3), q(2, 3)}) == IntPoly({1, 1, 1}));
  CHECK_THROWS_AS(charpoly_from_params({q(1, 5), q(4, 5)}), IncompleteOrbit);
}

TEST_CASE("structure report over the catalog") {
  for (const auto& c : builtin_catalog()) {
    const StructureReport rep = verify_structure(c);
    for (const auto& chk : rep.checks) {
      if (chk.name == kParamsCharpolyCheck) continue;
      CHECK_MESSAGE(chk.passed, c.id << ": " << chk.name);
    }
    CHECK(rep.rank_T_minus_I == 1);
  }
  const StructureReport c04 = verify_structure(get("c04"));
  const Mat rpi = build_generators(16, 8).R + Mat::identity(4);
  CHECK(rpi.rank() == 3);
  CHECK_FALSE(rpi.pow(3).is_zero());
  CHECK(rpi.pow(4).is_zero());
  CHECK(c04.unipotent_part_rank == 3);
}

TEST_CASE("parameter labels of the two swapped rows") {
  // The labels agree with charpoly(R) except for c08 and c10, whose (d, k)
  // produce each other's characteristic polynomial.
  for (const auto& c : builtin_catalog()) {
    const StructureReport rep = verify_structure(c);
    const bool swapped = c.id == "c08" || c.id == "c10";
    CHECK_MESSAGE(rep.find(kParamsCharpolyCheck)->passed == !swapped, c.id);
  }
  CHECK(charpoly(build_generators(get("c08")).R) == charpoly_from_params(get("c10").params).to_rational());
  CHECK(charpoly(build_generators(get("c10")).R) == charpoly_from_params(get("c08").params).to_rational());
}

TEST_CASE("words parse, reduce and print") {
  const Word w = Word::parse("(R^6 T)^2 (R^6 T^-1)^2");
  CHECK(w.str() == "R^6 T R^6 T R^6 T^-1 R^6 T^-1");
  CHECK(w.size() == 8);
  CHECK(Word::parse("R R^-1").empty());
  CHECK(Word::parse("R R^-1").str() == "1");
  CHECK(Word::parse("R^2 R^3 T").str() == "R^5 T");
  CHECK(Word::parse(" ( R T ) ^ 8 ").size() == 16);
  CHECK(Word::parse("(R T)^-1").str() == "T^-1 R^-1");
  CHECK(w.inverse() * w == Word());
  CHECK(w.pow(0).empty());
  for (const char* bad : {"", "R^", "(R T", "X", "R^x", "R)"}) CHECK_THROWS_AS(Word::parse(bad), ParseError);
}

TEST_CASE("word evaluation is a homomorphism (random property)") {
  const GroupGens g = build_generators(5, 5);
  std::mt19937_64 rng(11);
  auto random_word = [&rng] {
    std::vector<Syllable> s;
    const int len = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < len; ++i) {
      const long e = static_cast<long>(rng() % 7) - 3;
      s.push_back({rng() % 2 ? Letter::R : Letter::T, e == 0 ? 1 : e});
    }
    return Word(s);
  };
  for (int trial = 0; trial < 100; ++trial) {
    const Word a = random_word(), b = random_word();
    CHECK(eval_word(a * b, g.R, g.T) == eval_word(a, g.R, g.T) * eval_word(b, g.R, g.T));
    CHECK((eval_word(a.inverse(), g.R, g.T) * eval_word(a, g.R, g.T)).is_identity());
  }
}

TEST_CASE("case file parsing") {
  const auto cases = load_case_file(std::string(PINGPONG_TEST_DATA_DIR) + "/sample_cases.txt");
  REQUIRE(cases.size() == 5);
  CHECK(cases[0].id == "quintic");
  CHECK(*cases[0].d == 5);
  CHECK(cases[1].expected.splitting == Splitting::amalgam(8));
  CHECK(cases[2].relation_word->size() == 16);
  CHECK(cases[3].expected.kind == Expected::Kind::Unknown);
  CHECK(cases[4].dim == 2);
  CHECK(!cases[4].d);

  for (const auto& c : builtin_catalog()) {
    std::istringstream in(format_case_line(c));
    const auto back = parse_case_file(in);
    REQUIRE(back.size() == 1);
    CHECK(back[0].id == c.id);
    CHECK(back[0].params == c.params);
    CHECK(back[0].d == c.d);
    CHECK(back[0].expected.str() == c.expected.str());
  }
}

TEST_CASE("case file errors carry line numbers") {
  auto error_of = [](const std::string& text) {
    std::istringstream in(text);
    try {
      parse_case_file(in);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(error_of("# c\nx 4 1/5 2/5 3/5 4/5 5 5\n").find("line 2") != std::string::npos);
  CHECK(error_of("x 3 1/5 2/5 3/5 5 5 unknown\n").find("line 1") != std::string::npos);
  CHECK(error_of("x 4 1/5 2/5 3/5 4/5 5 5 unknown\nx 4 1/5 2/5 3/5 4/5 5 5 unknown\n").find("line 2") !=
        std::string::npos);
  CHECK(error_of("x 4 1/5 2/5 3/5 4/0 5 5 unknown\n").find("line 1") != std::string::npos);
  CHECK(error_of("x 4 1/5 2/5 3/5 4/5 5 5 split:Z*Q\n").find("line 1") != std::string::npos);
  CHECK_THROWS_AS(load_case_file("/nonexistent/cases.txt"), Error);
}
