#include "pingpong/catalog.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <regex>

namespace pingpong {

std::string Splitting::str() const {
  switch (kind) {
    case Kind::Free:
      return "Z*Z";
    case Kind::FreeTimesFinite:
      return "Z*Z/" + std::to_string(m);
    case Kind::Amalgam:
      return "(ZxZ/2)*_{Z/2}Z/" + std::to_string(m);
  }
  return "?";
}

Splitting Splitting::parse(std::string_view text) {
  static const std::regex kFree(R"(\s*Z\s*\*\s*Z\s*)");
  static const std::regex kFinite(R"(\s*Z\s*\*\s*Z\s*/\s*(\d+)\s*)");
  static const std::regex kAmalgam(R"(\s*\(\s*Z\s*x\s*Z\s*/\s*2\s*\)\s*\*\s*_\s*\{?\s*Z\s*/\s*2\s*\}?\s*Z\s*/\s*(\d+)\s*)");
  const std::string s(text);
  std::smatch m;
  if (std::regex_match(s, kFree)) return free();
  if (std::regex_match(s, m, kFinite)) return free_times_finite(std::stoi(m[1].str()));
  if (std::regex_match(s, m, kAmalgam)) return amalgam(std::stoi(m[1].str()));
  throw ParseError("unrecognised splitting '" + s + "'");
}

std::string Expected::str() const {
  switch (kind) {
    case Kind::Split:
      return "split:" + splitting->str();
    case Kind::Relation:
      return "relation:" + relation_text;
    case Kind::Unknown:
      return "unknown";
  }
  return "unknown";
}

Expected Expected::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text == "unknown") return unknown();
  if (text.starts_with("split:")) return split(Splitting::parse(text.substr(6)));
  if (text.starts_with("relation:")) {
    const auto word = trim(text.substr(9));
    Word::parse(word);  // validate
    return relation(std::string(word));
  }
  throw ParseError("expected outcome must be split:<desc>, relation:<word> or unknown, got '" +
                   std::string(text) + "'");
}

void validate_case(const CaseSpec& c) {
  const std::string where = "case '" + c.id + "': ";
  if (c.id.empty()) throw Error("case with empty id");
  if (!supported_dim(c.dim)) throw Error(where + "dimension must be 2 or 4");
  if (c.params.size() != static_cast<std::size_t>(c.dim)) {
    throw Error(where + "expected " + std::to_string(c.dim) + " parameters");
  }
  for (std::size_t i = 0; i < c.params.size(); ++i) {
    const Rat& a = c.params[i];
    if (a <= Rat(0) || a >= Rat(1)) throw Error(where + "parameter " + a.str() + " not in (0,1)");
    if (i > 0 && c.params[i - 1] > a) throw Error(where + "parameters not sorted");
  }
  std::vector<Rat> mirrored;
  for (const auto& a : c.params) mirrored.push_back(Rat(1) - a);
  std::sort(mirrored.begin(), mirrored.end());
  if (mirrored != c.params) throw Error(where + "parameters not closed under a -> 1 - a");
  if (c.dim == 4) {
    if (!c.d || !c.k || *c.d <= 0 || *c.k <= 0) throw Error(where + "d and k must be positive");
  } else if (c.d || c.k) {
    throw Error(where + "d and k are not used in dimension 2");
  }
  if (c.expected.kind == Expected::Kind::Relation && !c.relation_word) {
    throw Error(where + "relation expected but no word given");
  }
}

namespace {

CaseSpec row(std::string id, std::initializer_list<long> denoms_nums, long d, long k, Expected e) {
  CaseSpec c;
  c.id = std::move(id);
  c.dim = 4;
  auto it = denoms_nums.begin();
  while (it != denoms_nums.end()) {
    const long num = *it++;
    const long den = *it++;
    c.params.emplace_back(BigInt(num), BigInt(den));
  }
  c.d = d;
  c.k = k;
  if (e.kind == Expected::Kind::Relation) c.relation_word = Word::parse(e.relation_text);
  c.expected = std::move(e);
  return c;
}

std::vector<CaseSpec> make_catalog() {
  using S = Splitting;
  using E = Expected;
  std::vector<CaseSpec> cat = {
      row("c01", {1, 5, 2, 5, 3, 5, 4, 5}, 5, 5, E::split(S::free_times_finite(5))),
      row("c02", {1, 8, 3, 8, 5, 8, 7, 8}, 2, 4, E::split(S::amalgam(8))),
      row("c03", {1, 12, 5, 12, 7, 12, 11, 12}, 1, 4, E::split(S::amalgam(12))),
      row("c04", {1, 2, 1, 2, 1, 2, 1, 2}, 16, 8, E::split(S::free())),
      row("c05", {1, 3, 1, 2, 1, 2, 2, 3}, 12, 7, E::split(S::free())),
      row("c06", {1, 4, 1, 2, 1, 2, 3, 4}, 8, 6, E::split(S::free())),
      row("c07", {1, 6, 1, 2, 1, 2, 5, 6}, 4, 5, E::split(S::free())),
      row("c08", {1, 4, 1, 3, 2, 3, 3, 4}, 2, 3, E::relation("(R^6 T)^2 (R^6 T^-1)^2")),
      row("c09", {1, 6, 1, 6, 5, 6, 5, 6}, 1, 2, E::relation("(R T)^8")),
      row("c10", {1, 6, 1, 4, 3, 4, 5, 6}, 6, 5, E::relation("(R^6 T)^2 (R^6 T^-1)^2")),
      row("c11", {1, 6, 1, 3, 2, 3, 5, 6}, 3, 4, E::relation("(R^3 T)^2 (R^3 T^-1)^2")),
      row("c12", {1, 10, 3, 10, 7, 10, 9, 10}, 1, 3, E::relation("(R^2 T)^12")),
      row("c13", {1, 4, 1, 4, 3, 4, 3, 4}, 4, 4, E::unknown()),
      row("c14", {1, 3, 1, 3, 2, 3, 2, 3}, 9, 6, E::unknown()),
  };
  CaseSpec demo;
  demo.id = "sl2";
  demo.dim = 2;
  demo.params = {Rat(BigInt(1), BigInt(3)), Rat(BigInt(2), BigInt(3))};
  demo.expected = E::split(S::free_times_finite(3));
  cat.push_back(std::move(demo));
  for (const auto& c : cat) validate_case(c);
  return cat;
}

}  // namespace

const std::vector<CaseSpec>& builtin_catalog() {
  static const std::vector<CaseSpec> catalog = make_catalog();
  return catalog;
}

const CaseSpec* find_case(const std::vector<CaseSpec>& catalog, std::string_view id) {
  for (const auto& c : catalog) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

CaseSpec exploration_case(long d, long k) {
  if (d <= 0 || k <= 0) throw Error("d and k must be positive");
  CaseSpec c;
  c.id = "d" + std::to_string(d) + "k" + std::to_string(k);
  c.dim = 4;
  c.d = d;
  c.k = k;
  return c;
}

GroupGens build_generators(long d, long k) {
  GroupGens g;
  g.dim = 4;
  g.U = Mat{{1, 1, 0, 0}, {0, 1, 0, 0}, {d, d, 1, 0}, {0, -k, -1, 1}};
  g.T = Mat{{1, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  g.R = g.T * g.U;
  g.J = Mat{{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}};
  g.B = Mat{{-1, 0, 0, 0}, {0, 1, 0, -1}, {-d, 0, 1, 0}, {0, 0, 0, -1}};
  return g;
}

GroupGens sl2_generators() {
  GroupGens g;
  g.dim = 2;
  g.U = Mat{{3, 4}, {-1, -1}};
  g.T = Mat{{1, 3}, {0, 1}};
  g.R = g.T * g.U;
  g.J = Mat{{0, 1}, {-1, 0}};
  // Reflection fixing the horizontal axis, with BRB = R^-1 and BT^-1B = T.
  g.B = Mat{{1, 1}, {0, -1}};
  return g;
}

GroupGens build_generators(const CaseSpec& c) {
  if (c.dim == 2) return sl2_generators();
  if (!c.d || !c.k) throw Error("case '" + c.id + "' lacks d and k");
  return build_generators(*c.d, *c.k);
}

PowerStructure detect_power_structure(const GroupGens& gens, long p_max) {
  if (p_max < 1) throw Error("p_max must be at least 1");
  const int n = gens.dim;
  Mat rp = Mat::identity(n);
  for (long p = 1; p <= p_max; ++p) {
    rp = rp * gens.R;
    for (int sigma : {1, -1}) {
      const Mat candidate = sigma == 1 ? rp : -rp;
      if (!is_unipotent(candidate)) continue;
      PowerStructure ps;
      ps.p = p;
      ps.sigma = sigma;
      ps.Z = nilpotent_log(candidate);
      if (ps.Z.is_zero()) {
        ps.nilpotency_degree = 0;
        const long order = sigma == 1 ? p : 2 * p;
        // independent route: smallest m with R^m = I
        Mat power = Mat::identity(n);
        long found = 0;
        for (long m = 1; m <= 2 * p_max; ++m) {
          power = power * gens.R;
          if (power.is_identity()) {
            found = m;
            break;
          }
        }
        if (found != order) {
          throw Error("finite order mismatch: structure gives " + std::to_string(order) +
                      ", power iteration gives " + std::to_string(found));
        }
        ps.finite_order = order;
      } else {
        ps.nilpotency_degree = nilpotency_index(ps.Z);
      }
      return ps;
    }
  }
  throw NoStructure("no p <= " + std::to_string(p_max) + " with +-R^p unipotent");
}

IntPoly charpoly_from_params(const std::vector<Rat>& params) {
  // denominator -> (numerator -> multiplicity)
  std::map<unsigned long, std::map<unsigned long, int>> orbits;
  for (const auto& a : params) {
    if (a <= Rat(0) || a >= Rat(1)) throw IncompleteOrbit("parameter " + a.str() + " not in (0,1)");
    orbits[a.den().get_ui()][a.num().get_ui()] += 1;
  }
  IntPoly out{1};
  for (const auto& [q, nums] : orbits) {
    int multiplicity = -1;
    for (unsigned long r = 1; r < q; ++r) {
      if (std::gcd(r, q) != 1) continue;
      const auto it = nums.find(r);
      const int count = it == nums.end() ? 0 : it->second;
      if (multiplicity < 0) multiplicity = count;
      if (count != multiplicity || count == 0) {
        throw IncompleteOrbit("parameters with denominator " + std::to_string(q) +
                              " do not form complete orbits of primitive residues");
      }
    }
    out = out * cyclotomic(static_cast<unsigned>(q)).pow(static_cast<unsigned>(multiplicity));
  }
  return out;
}

bool StructureReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

const StructureCheck* StructureReport::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

StructureReport verify_structure(const CaseSpec& c, long p_max) {
  return verify_structure(c, build_generators(c), p_max);
}

StructureReport verify_structure(const CaseSpec& c, const GroupGens& g, long p_max) {
  StructureReport rep;
  auto add = [&rep](std::string name, bool ok, std::string detail = {}) {
    rep.checks.push_back({std::move(name), ok, std::move(detail)});
  };
  const int n = g.dim;
  const Mat I = Mat::identity(n);

  add("R = TU", g.R == g.T * g.U);
  add("U^T J U = J", g.U.transpose() * g.J * g.U == g.J);
  add("T^T J T = J", g.T.transpose() * g.J * g.T == g.J);
  add("R^T J R = J", g.R.transpose() * g.J * g.R == g.J);
  rep.rank_T_minus_I = (g.T - I).rank();
  add("rank(T - I) = 1", rep.rank_T_minus_I == 1, "rank " + std::to_string(rep.rank_T_minus_I));
  const Mat x = g.U - I;
  add("U maximally unipotent", x.pow(n).is_zero() && !x.pow(n - 1).is_zero());
  add("B^2 = I", (g.B * g.B).is_identity());
  add("BRB = R^-1", g.B * g.R * g.B == g.R.inverse());
  add("BT^-1B = T", g.B * g.T.inverse() * g.B == g.T);
  if (n == 4) {
    Vec e2(4), e3(4);
    e2[1] = 1;
    e3[2] = 1;
    add("B fixes V", g.B * e2 == e2 && g.B * e3 == e3);
  } else {
    Vec e1(2);
    e1[0] = 1;
    add("B fixes V", g.B * e1 == e1);
  }

  rep.charpoly_R = charpoly(g.R);
  add("R^-1 and U share no eigenvalue", !rep.charpoly_R(Rat(1)).is_zero());
  if (!c.params.empty()) {
    try {
      const IntPoly expected = charpoly_from_params(c.params);
      add(std::string(kParamsCharpolyCheck), expected.to_rational() == rep.charpoly_R,
          rep.charpoly_R.str() + " vs " + expected.str());
    } catch (const IncompleteOrbit& e) {
      add(std::string(kParamsCharpolyCheck), false, e.what());
    }
  }

  try {
    const PowerStructure ps = detect_power_structure(g, p_max);
    const Mat lhs = ps.sigma == 1 ? g.R.pow(ps.p) : -g.R.pow(ps.p);
    add("sigma R^p = exp(Z)", nilpotent_exp(ps.Z) == lhs,
        "p=" + std::to_string(ps.p) + " sigma=" + std::to_string(ps.sigma));
    rep.unipotent_part_rank = (lhs - I).rank();
    // A hypergeometric R is regular, so finite order means distinct eigenvalues.
    add("finite order iff squarefree charpoly", ps.finite_order.has_value() == rep.charpoly_R.is_squarefree());
    rep.power = ps;
  } catch (const NoStructure& e) {
    add("sigma R^p = exp(Z)", false, e.what());
  }
  return rep;
}

}  // namespace pingpong
