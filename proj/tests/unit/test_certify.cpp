#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "pingpong/certify.hpp"

using namespace pingpong;

namespace {

const CaseSpec& get(const char* id) { return *find_case(builtin_catalog(), id); }

}  // namespace

TEST_CASE("verdicts over the builtin catalog") {
  for (const auto& c : builtin_catalog()) {
    const Verdict v = verify_case(c);
    switch (c.expected.kind) {
      case Expected::Kind::Split:
        CHECK_MESSAGE(v.kind == Verdict::Kind::Pass, c.id);
        CHECK_MESSAGE(v.splitting == c.expected.splitting, c.id);
        CHECK(v.certificate.all_passed());
        break;
      case Expected::Kind::Relation:
        CHECK_MESSAGE(v.kind == Verdict::Kind::Fail, c.id);
        CHECK(v.failing.has_value());
        CHECK_FALSE(v.splitting.has_value());
        break;
      case Expected::Kind::Unknown:
        CHECK_MESSAGE(v.kind == Verdict::Kind::Inconclusive, c.id);
        break;
    }
  }
}

TEST_CASE("c01 certificate lists residues 1..4 with row-split patterns") {
  const Verdict v = verify_case(get("c01"));
  const auto& cert = v.certificate;
  REQUIRE(cert.residues.size() == 4);
  for (long j = 1; j <= 4; ++j) CHECK(cert.residues[static_cast<std::size_t>(j - 1)] == Residue{j, std::nullopt});
  CHECK(cert.H == AmalgamatedSubgroup::Trivial);
  int disjointness = 0;
  for (const auto& cc : cert.checks) {
    if (cc.condition != Condition::I) continue;
    ++disjointness;
    CHECK(cc.pattern->verdict == SignVerdict::RowSplit);
  }
  CHECK(disjointness == 16);
  CHECK(cert.assumptions.size() == 1);
}

TEST_CASE("amalgam cases exclude the central residue") {
  for (const char* id : {"c02", "c03"}) {
    const Verdict v = verify_case(get(id));
    const long p = v.certificate.power->p;
    CHECK(v.certificate.H == AmalgamatedSubgroup::PlusMinusIdentity);
    CHECK(v.certificate.residues.size() == static_cast<std::size_t>(2 * p - 2));
    for (const auto& r : v.certificate.residues) CHECK(r.j != p);
  }
}

TEST_CASE("residue sets") {
  PowerStructure ps;
  ps.p = 3;
  ps.sigma = -1;
  ps.Z = Mat::zero(4);
  ps.Z(0, 1) = 1;
  ps.nilpotency_degree = 2;
  const auto rs = residue_set(ps);
  CHECK(rs.size() == 6);
  CHECK(rs.front() == Residue{1, Branch::NonNeg});
  CHECK(rs.back() == Residue{-1, Branch::NonPos});
  ps.p = 1;
  const auto one = residue_set(ps);
  CHECK(one == std::vector<Residue>{{0, Branch::Pos}, {0, Branch::Neg}});
}

TEST_CASE("c04 certificate reports thresholds and checked ranges") {
  const Verdict v = verify_case(get("c04"));
  REQUIRE(v.kind == Verdict::Kind::Pass);
  long max_threshold = 0;
  for (const auto& cc : v.certificate.checks) {
    if (!cc.branch) continue;
    REQUIRE(cc.threshold.has_value());
    max_threshold = std::max(max_threshold, *cc.threshold);
    CHECK(static_cast<long>(cc.checked.size()) == std::max(0L, *cc.threshold - 1));
    CHECK(cc.family->degree() <= 3);
  }
  CHECK(max_threshold > 0);
  CHECK(max_threshold < 100);
}

TEST_CASE("N-side checks agree with their mirrored M-side counterparts") {
  for (const auto& c : builtin_catalog()) {
    const Verdict v = verify_case(c);
    for (const auto& cc : v.certificate.checks) {
      if (cc.symmetry_agrees) CHECK(*cc.symmetry_agrees);
    }
  }
}

TEST_CASE("recorded conditions carry justifications") {
  const Verdict v = verify_case(get("c02"));
  bool saw_ii = false, saw_h = false;
  for (const auto& cc : v.certificate.checks) {
    if (cc.condition == Condition::II) saw_ii = !cc.justification.empty();
    if (cc.condition == Condition::HStability) saw_h = cc.justification.find("negation") != std::string::npos;
  }
  CHECK(saw_ii);
  CHECK(saw_h);
}

TEST_CASE("failing cases name their first failing condition") {
  const Verdict v = verify_case(get("c09"));
  REQUIRE(v.failing.has_value());
  CHECK(v.failing->condition == Condition::I);
  CHECK_FALSE(v.failing->passed);
  CHECK(v.failure_reason.find("(i)") != std::string::npos);
}

TEST_CASE("verification is deterministic") {
  const Verdict a = verify_case(get("c05"));
  const Verdict b = verify_case(get("c05"));
  REQUIRE(a.certificate.checks.size() == b.certificate.checks.size());
  for (std::size_t i = 0; i < a.certificate.checks.size(); ++i) {
    const auto& x = a.certificate.checks[i];
    const auto& y = b.certificate.checks[i];
    CHECK(x.target == y.target);
    CHECK(x.family == y.family);
    CHECK(x.threshold == y.threshold);
  }
}

TEST_CASE("exploration cases reproduce catalog verdicts") {
  CHECK(verify_case(exploration_case(5, 5)).splitting == Splitting::free_times_finite(5));
  CHECK(verify_case(exploration_case(16, 8)).splitting == Splitting::free());
  const Verdict v = verify_case(exploration_case(7, 3));
  CHECK(v.kind != Verdict::Kind::Fail);
}

TEST_CASE("a small p_max yields an inconclusive verdict") {
  const Verdict v = verify_case(get("c03"), 3);
  CHECK(v.kind == Verdict::Kind::Inconclusive);
  CHECK(v.failure_reason.find("structure") != std::string::npos);
}

TEST_CASE("brute-force point oracle confirms a finite and an infinite certificate") {
  for (const char* id : {"c01", "c04", "sl2"}) {
    const auto stats = testing::brute_force_certificate(get(id), 40, 8, 17);
    CHECK(stats.points > 0);
    CHECK_MESSAGE(stats.violations == 0, id << " " << (stats.examples.empty() ? "" : stats.examples.front()));
  }
}

TEST_CASE("point oracle detects a false claim") {
  const GroupGens g = build_generators(5, 5);
  const ConePair k = build_cones(g);
  testing::PointStats stats;
  // R maps C+ to a set disjoint from C+, so containment must fail
  testing::check_points(g.R, k.M, k.M, testing::Claim::Contained, 50, 3, stats, "R");
  CHECK(stats.violations == 50);
}
