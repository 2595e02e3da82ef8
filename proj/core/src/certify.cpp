#include "pingpong/certify.hpp"

#include <algorithm>

namespace pingpong {

std::string to_string(Condition c) {
  switch (c) {
    case Condition::I:
      return "i";
    case Condition::II:
      return "ii";
    case Condition::IV:
      return "iv";
    case Condition::V:
      return "v";
    case Condition::VI:
      return "vi";
    case Condition::VII:
      return "vii";
    case Condition::HStability:
      return "H-stability";
  }
  return "?";
}

std::string to_string(const Residue& r) {
  std::string s = "j=" + std::to_string(r.j);
  if (r.branch) s += " " + to_string(*r.branch);
  return s;
}

std::string to_string(AmalgamatedSubgroup h) {
  return h == AmalgamatedSubgroup::Trivial ? "trivial" : "plus-minus-identity";
}

std::string to_string(Verdict::Kind k) {
  switch (k) {
    case Verdict::Kind::Pass:
      return "Pass";
    case Verdict::Kind::Fail:
      return "Fail";
    case Verdict::Kind::Inconclusive:
      return "Inconclusive";
  }
  return "?";
}

bool PingPongCertificate::all_passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

const ConditionCheck* PingPongCertificate::first_failure() const {
  for (const auto& c : checks) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

Splitting splitting_from_structure(const PowerStructure& ps) {
  if (ps.infinite()) return Splitting::free();
  if (ps.minus_identity()) return Splitting::amalgam(static_cast<int>(*ps.finite_order));
  return Splitting::free_times_finite(static_cast<int>(*ps.finite_order));
}

std::vector<Residue> residue_set(const PowerStructure& ps) {
  std::vector<Residue> out;
  if (ps.finite_order) {
    for (long j = 1; j < *ps.finite_order; ++j) {
      if (ps.minus_identity() && j == ps.p) continue;  // R^p = -I lies in H
      out.push_back({j, std::nullopt});
    }
    return out;
  }
  if (ps.p == 1) {
    out.push_back({0, Branch::Pos});
    out.push_back({0, Branch::Neg});
    return out;
  }
  for (long j = 1; j <= ps.p; ++j) out.push_back({j, Branch::NonNeg});
  for (long j = -ps.p; j <= -1; ++j) out.push_back({j, Branch::NonPos});
  return out;
}

ResidueFamily family_for(Side target, const Mat& L, long j, Side source, const GroupGens& gens,
                         const PowerStructure& ps, const ConePair& cones) {
  const Mat& left = target == Side::M ? cones.M_inv : cones.N_inv;
  const Mat& right = source == Side::M ? cones.M : cones.N;
  const Mat head = left * L * gens.R.pow(j);
  if (ps.finite_order) return {MatPoly(head * right), 1};
  return {head * exp_family(ps.Z) * right, ps.sigma};
}

namespace {

std::string side_name(Side s) { return s == Side::M ? "M" : "N"; }

Side other(Side s) { return s == Side::M ? Side::N : Side::M; }

std::string product_name(Side target, const std::string& l, Side source) {
  std::string s = side_name(target) + "^-1 ";
  if (!l.empty()) s += l + " ";
  return s + "R^j " + side_name(source);
}

bool condition_holds(Condition c, const SignPattern& p) {
  switch (c) {
    case Condition::I:
      return p.certifies_disjoint();
    case Condition::IV:
    case Condition::V:
      return p.verdict == SignVerdict::AllNonneg;
    case Condition::VI:
    case Condition::VII:
      return p.certifies_uniform();
    default:
      return true;
  }
}

Residue mirrored(const Residue& r, const PowerStructure& ps) {
  Residue m{-r.j, std::nullopt};
  if (ps.finite_order) {
    m.j = (*ps.finite_order - r.j) % *ps.finite_order;
    return m;
  }
  switch (*r.branch) {
    case Branch::NonNeg:
      m.branch = Branch::NonPos;
      break;
    case Branch::Pos:
      m.branch = Branch::Neg;
      break;
    case Branch::NonPos:
      m.branch = Branch::NonNeg;
      break;
    case Branch::Neg:
      m.branch = Branch::Pos;
      break;
  }
  return m;
}

class CaseVerifier {
 public:
  CaseVerifier(const GroupGens& gens, const PowerStructure& ps, const ConePair& cones)
      : gens_(gens), ps_(ps), cones_(cones), T_inv_(gens.T.inverse()) {}

  ConditionCheck check(Condition cond, Side target, const Mat& L, const std::string& l_name, const Residue& r,
                       Side source) const {
    ConditionCheck cc;
    cc.condition = cond;
    cc.target = product_name(target, l_name, source);
    cc.residue = r.j;
    cc.branch = r.branch;
    const ResidueFamily fam = family_for(target, L, r.j, source, gens_, ps_, cones_);
    cc.family = fam.poly;
    cc.sign_base = fam.sign_base;
    if (r.branch) {
      const BranchSign bs = matpoly_sign_over_branch(fam.poly, *r.branch);
      cc.pattern = bs.overall;
      cc.threshold = bs.threshold;
      cc.checked = bs.checked;
    } else {
      cc.pattern = classify_sign(fam.poly.coeff(0));
    }
    if (target == Side::N) {
      // N = B M and B L R^j exp(nZ) B = (B L B) R^-j exp(-nZ), so the N-side
      // product equals an M-side one at the mirrored residue with n -> -n.
      const Residue mr = mirrored(r, ps_);
      const Mat mirror_l = gens_.B * L * gens_.B;
      const ResidueFamily mirror = family_for(Side::M, mirror_l, mr.j, other(source), gens_, ps_, cones_);
      const MatPoly predicted = ps_.finite_order ? mirror.poly : mirror.poly.reflected();
      cc.symmetry_agrees = predicted == fam.poly;
      if (!*cc.symmetry_agrees) {
        throw InternalError("B-symmetry route disagrees with direct computation for " + cc.target + " " +
                            to_string(r));
      }
    }
    cc.passed = condition_holds(cond, *cc.pattern);
    return cc;
  }

  ConditionCheck constant_check(Condition cond, Side target, const Mat& L, const std::string& l_name) const {
    ConditionCheck cc;
    cc.condition = cond;
    const Mat& left = target == Side::M ? cones_.M_inv : cones_.N_inv;
    const Mat& right = target == Side::M ? cones_.M : cones_.N;
    cc.target = side_name(target) + "^-1 " + l_name + " " + side_name(target);
    cc.family = MatPoly(left * L * right);
    cc.pattern = classify_sign(cc.family->coeff(0));
    if (target == Side::N) {
      const Mat mirror = cones_.M_inv * (gens_.B * L * gens_.B) * cones_.M;
      cc.symmetry_agrees = mirror == cc.family->coeff(0);
      if (!*cc.symmetry_agrees) throw InternalError("B-symmetry route disagrees for " + cc.target);
    }
    cc.passed = condition_holds(cond, *cc.pattern) && !L.det().is_zero();
    return cc;
  }

  const Mat& T_inv() const { return T_inv_; }

 private:
  const GroupGens& gens_;
  const PowerStructure& ps_;
  const ConePair& cones_;
  Mat T_inv_;
};

ConditionCheck recorded(Condition c, std::string target, std::string why) {
  ConditionCheck cc;
  cc.condition = c;
  cc.target = std::move(target);
  cc.justification = std::move(why);
  cc.passed = true;
  return cc;
}

}  // namespace

Verdict verify_case(const CaseSpec& c, long p_max) {
  Verdict v;
  PingPongCertificate& cert = v.certificate;
  cert.case_id = c.id;
  cert.assumptions.push_back("G1 and G2 intersect exactly in H (not machine-checked)");

  auto fail = [&c, &v](std::string reason) {
    v.kind = c.expected.kind == Expected::Kind::Relation ? Verdict::Kind::Fail : Verdict::Kind::Inconclusive;
    v.failure_reason = std::move(reason);
    return v;
  };

  const GroupGens gens = build_generators(c);
  v.structure = verify_structure(c, gens, p_max);
  if (!v.structure.power) return fail("structure: no power structure up to p_max");
  for (const auto& sc : v.structure.checks) {
    if (sc.passed) continue;
    if (sc.name == kParamsCharpolyCheck) {
      cert.assumptions.push_back("parameter labels disagree with charpoly(R) (" + sc.detail +
                                 "); the certificate concerns the matrices built from d, k");
      continue;
    }
    return fail("structure: " + sc.name);
  }
  const PowerStructure& ps = *v.structure.power;
  cert.power = ps;

  try {
    cert.cones = build_cones(gens);
  } catch (const Error& e) {
    return fail(std::string("cones: ") + e.what());
  }
  const ConePair& cones = *cert.cones;

  cert.H = ps.minus_identity() ? AmalgamatedSubgroup::PlusMinusIdentity : AmalgamatedSubgroup::Trivial;
  if (ps.minus_identity()) {
    cert.G1 = "<T, R^" + std::to_string(ps.p) + "> = <T> x {I, -I}";
    cert.G2 = "<R>, cyclic of order " + std::to_string(*ps.finite_order);
  } else {
    cert.G1 = "<T>, infinite cyclic";
    cert.G2 = ps.finite_order ? "<R>, cyclic of order " + std::to_string(*ps.finite_order) : "<R>, infinite cyclic";
  }
  cert.residues = residue_set(ps);

  const CaseVerifier verifier(gens, ps, cones);
  const Mat I = Mat::identity(gens.dim);

  cert.checks.push_back(verifier.constant_check(Condition::IV, Side::M, verifier.T_inv(), "T^-1"));
  cert.checks.push_back(verifier.constant_check(Condition::V, Side::N, gens.T, "T"));

  for (const auto& r : cert.residues) {
    for (Side target : {Side::M, Side::N}) {
      for (Side source : {Side::M, Side::N}) cert.checks.push_back(verifier.check(Condition::I, target, I, "", r, source));
    }
    for (Side source : {Side::M, Side::N}) {
      cert.checks.push_back(verifier.check(Condition::VI, Side::M, verifier.T_inv(), "T^-1", r, source));
    }
    for (Side source : {Side::M, Side::N}) {
      cert.checks.push_back(verifier.check(Condition::VII, Side::N, gens.T, "T", r, source));
    }
  }

  cert.checks.push_back(recorded(Condition::II, "(G2 - H) X in Y", "true by construction of Y"));
  cert.checks.push_back(recorded(Condition::HStability, "H X in X, H Y in Y",
                                 ps.minus_identity() ? "X and Y are symmetric under negation"
                                                     : "H is trivial"));

  if (const ConditionCheck* bad = cert.first_failure()) {
    v.failing = *bad;
    return fail("condition (" + to_string(bad->condition) + ") " + bad->target + " " +
                (bad->residue ? "j=" + std::to_string(*bad->residue) : std::string()));
  }
  cert.conclusion = splitting_from_structure(ps);
  v.kind = Verdict::Kind::Pass;
  v.splitting = cert.conclusion;
  return v;
}

}  // namespace pingpong
