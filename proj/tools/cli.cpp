#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pingpong/case_file.hpp"
#include "pingpong/catalog.hpp"
#include "pingpong/certify.hpp"
#include "pingpong/cones.hpp"
#include "pingpong/words.hpp"

#ifndef PINGPONG_VERSION
#define PINGPONG_VERSION "0.0.0"
#endif

namespace pingpong::cli {

namespace {

using json = nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SampleOptions {
  std::size_t count = 1000;
  std::size_t max_syllables = 20;
  std::uint64_t seed = 42;
};

// ---------------------------------------------------------------- rendering

json to_json(const Vec& v) {
  json a = json::array();
  for (int i = 0; i < v.dim(); ++i) a.push_back(v[i].str());
  return a;
}

json to_json(const Mat& m) {
  json rows = json::array();
  for (int r = 0; r < m.dim(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.dim(); ++c) row.push_back(m(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string params_text(const CaseSpec& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.params.size(); ++i) s += (i ? ", " : "") + c.params[i].str();
  return s + ")";
}

std::string opt_text(const std::optional<long>& v) { return v ? std::to_string(*v) : "-"; }

std::string expected_short(const Expected& e) {
  switch (e.kind) {
    case Expected::Kind::Split:
      return e.splitting->str();
    case Expected::Kind::Relation:
      return "No: " + e.relation_text;
    case Expected::Kind::Unknown:
      return "?";
  }
  return "?";
}

std::string residue_text(const ConditionCheck& cc) {
  if (!cc.residue) return "-";
  std::string s = "j=" + std::to_string(*cc.residue);
  if (cc.branch) s += ", " + to_string(*cc.branch);
  return s;
}

std::string checked_text(const std::vector<long>& checked) {
  if (checked.empty()) return "none";
  const auto [lo, hi] = std::minmax_element(checked.begin(), checked.end());
  return "n in [" + std::to_string(*lo) + ", " + std::to_string(*hi) + "] (" + std::to_string(checked.size()) +
         " values)";
}

std::string failing_text(const Verdict& v) {
  if (v.failing) {
    return "(" + to_string(v.failing->condition) + ") " + v.failing->target + " " + residue_text(*v.failing);
  }
  return v.failure_reason;
}

class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& os, const std::string& indent = "") const {
    std::vector<std::size_t> width(rows_.front().size(), 0);
    for (const auto& row : rows_)
      for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      std::string line = indent;
      for (std::size_t i = 0; i < rows_[r].size(); ++i) {
        line += rows_[r][i];
        if (i + 1 < rows_[r].size()) line += std::string(width[i] - rows_[r][i].size() + 2, ' ');
      }
      os << line << '\n';
      if (r == 0) {
        std::size_t total = 0;
        for (std::size_t w : width) total += w + 2;
        os << indent << std::string(total - 2, '-') << '\n';
      }
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

// ---------------------------------------------------------------- pipeline

struct SamplingResult {
  NontrivialityReport main;
  std::optional<NontrivialityReport> conjugates;

  bool ok() const { return main.ok() && (!conjugates || conjugates->ok()); }
};

struct CaseOutcome {
  const CaseSpec* spec = nullptr;
  Verdict verdict;
  std::optional<RelationReport> relation;
  std::optional<SamplingResult> sampling;
  double ms = 0;
  bool matches = false;
};

SamplingResult run_sampling(const CaseSpec& c, const Verdict& v, const SampleOptions& opt) {
  SamplingResult s{oracle_nontriviality(c, reduced_form_for(*v.splitting), opt.count, opt.max_syllables, opt.seed),
                   std::nullopt};
  if (v.splitting->kind == Splitting::Kind::FreeTimesFinite) {
    const ReducedFormSpec conj{ReducedFormSpec::Kind::FreeOnConjugates, v.splitting->m};
    s.conjugates = oracle_nontriviality(c, conj, opt.count, opt.max_syllables, opt.seed);
  }
  return s;
}

bool outcome_matches(const CaseOutcome& o) {
  if (o.sampling && !o.sampling->ok()) return false;
  const Expected& e = o.spec->expected;
  switch (e.kind) {
    case Expected::Kind::Split:
      return o.verdict.kind == Verdict::Kind::Pass && o.verdict.splitting == e.splitting;
    case Expected::Kind::Relation:
      return o.verdict.kind == Verdict::Kind::Fail && o.relation && o.relation->obstructs();
    case Expected::Kind::Unknown:
      return true;
  }
  return false;
}

CaseOutcome run_case(const CaseSpec& c, long p_max, const SampleOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  CaseOutcome o;
  o.spec = &c;
  o.verdict = verify_case(c, p_max);
  if (c.relation_word) o.relation = verify_relation(c);
  if (o.verdict.kind == Verdict::Kind::Pass) o.sampling = run_sampling(c, o.verdict, opt);
  o.matches = outcome_matches(o);
  o.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return o;
}

// ---------------------------------------------------------------- JSON

json structure_json(const StructureReport& s) {
  json j;
  if (s.power) {
    j["order"] = s.power->finite_order ? json(*s.power->finite_order) : json(nullptr);
    j["period"] = s.power->p;
    j["sigma"] = s.power->sigma;
    j["nilpotency"] = s.power->nilpotency_degree;
  } else {
    j["order"] = nullptr;
    j["period"] = nullptr;
    j["sigma"] = nullptr;
    j["nilpotency"] = nullptr;
  }
  json cp = json::array();
  if (auto ip = s.charpoly_R.to_integer()) {
    for (const auto& c : ip->coeffs()) cp.push_back(c.get_si());
  }
  j["charpoly"] = std::move(cp);
  j["rank_T_minus_I"] = s.rank_T_minus_I;
  json checks = json::array();
  for (const auto& c : s.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  j["checks"] = std::move(checks);
  j["passed"] = s.passed();
  return j;
}

json check_json(const ConditionCheck& cc) {
  json j;
  j["condition"] = to_string(cc.condition);
  j["product"] = cc.target;
  j["residue"] = cc.residue ? json(*cc.residue) : json(nullptr);
  j["branch"] = cc.branch ? json(to_string(*cc.branch)) : json(nullptr);
  j["pattern"] = cc.pattern ? json(cc.pattern->describe()) : json(nullptr);
  j["threshold"] = cc.threshold ? json(*cc.threshold) : json(nullptr);
  j["checked"] = cc.checked;
  j["sign_base"] = cc.sign_base;
  j["symmetry_agrees"] = cc.symmetry_agrees ? json(*cc.symmetry_agrees) : json(nullptr);
  if (!cc.justification.empty()) j["justification"] = cc.justification;
  j["passed"] = cc.passed;
  return j;
}

json certificate_json(const PingPongCertificate& cert, const GroupGens& gens) {
  json j;
  j["H"] = to_string(cert.H);
  j["G1"] = cert.G1;
  j["G2"] = cert.G2;
  json residues = json::array();
  for (const auto& r : cert.residues) residues.push_back(to_string(r));
  j["residues"] = std::move(residues);
  json checks = json::array();
  for (const auto& c : cert.checks) checks.push_back(check_json(c));
  j["checks"] = std::move(checks);
  j["assumptions"] = cert.assumptions;
  j["conclusion"] = cert.conclusion ? json(cert.conclusion->str()) : json(nullptr);
  if (cert.cones) {
    const ConePair& k = *cert.cones;
    j["displays"] = {{"v", to_json(k.v)},
                     {"M", to_json(k.M)},
                     {"N", to_json(k.N)},
                     {"P", to_json(k.P)},
                     {"Q", to_json(k.Q)},
                     {"M^-1 R M", to_json(k.M_inv * gens.R * k.M)},
                     {"M^-1 T^-1 M", to_json(k.M_inv * gens.T.inverse() * k.M)}};
  }
  return j;
}

json nontriviality_json(const NontrivialityReport& r) {
  json violations = json::array();
  for (const auto& w : r.violations) violations.push_back(w.str());
  return {{"form", r.spec.str()},
          {"count", r.count},
          {"max_syllables", r.max_syllables},
          {"seed", r.seed},
          {"violations", std::move(violations)}};
}

json case_json(const CaseOutcome& o) {
  const CaseSpec& c = *o.spec;
  json j;
  j["id"] = c.id;
  j["dim"] = c.dim;
  json params = json::array();
  for (const auto& p : c.params) params.push_back(p.str());
  j["params"] = std::move(params);
  j["d"] = c.d ? json(*c.d) : json(nullptr);
  j["k"] = c.k ? json(*c.k) : json(nullptr);
  j["expected"] = c.expected.str();
  j["structure"] = structure_json(o.verdict.structure);
  json verdict = {{"kind", to_string(o.verdict.kind)}};
  if (o.verdict.splitting) verdict["splitting"] = o.verdict.splitting->str();
  if (o.verdict.kind != Verdict::Kind::Pass) verdict["failing_condition"] = failing_text(o.verdict);
  j["verdict"] = std::move(verdict);
  if (o.relation) j["relation"] = {{"word", o.relation->word_text}, {"result", to_string(o.relation->result)}};
  j["certificate"] = certificate_json(o.verdict.certificate, build_generators(c));
  if (o.sampling) {
    json s = nontriviality_json(o.sampling->main);
    if (o.sampling->conjugates) s["conjugates"] = nontriviality_json(*o.sampling->conjugates);
    j["sampling"] = std::move(s);
  }
  j["matches_expected"] = o.matches;
  j["ms"] = std::round(o.ms * 1000.0) / 1000.0;
  return j;
}

// ---------------------------------------------------------------- text

void print_certificate(std::ostream& os, const CaseOutcome& o) {
  const Verdict& v = o.verdict;
  const PingPongCertificate& cert = v.certificate;
  if (v.structure.power) {
    const PowerStructure& ps = *v.structure.power;
    os << "  structure  : " << (v.structure.passed() ? "all checks pass" : "FAILED") << "; charpoly(R) = "
       << v.structure.charpoly_R.str();
    if (ps.finite_order) {
      os << "; R has order " << *ps.finite_order;
      if (ps.minus_identity()) os << " (R^" << ps.p << " = -I)";
    } else {
      os << "; " << (ps.sigma < 0 ? "-" : "") << "R" << (ps.p == 1 ? "" : "^" + std::to_string(ps.p))
         << " = exp(Z), Z^" << ps.nilpotency_degree
         << " = 0";
    }
    os << '\n';
  } else {
    os << "  structure  : no power structure found\n";
  }
  for (const auto& sc : v.structure.checks) {
    if (!sc.passed) os << "    failed: " << sc.name << (sc.detail.empty() ? "" : " (" + sc.detail + ")") << '\n';
  }
  if (cert.cones) {
    os << "  cones      : v = " << cert.cones->v << '\n';
    os << "  M =\n" << cert.cones->M << "  N =\n" << cert.cones->N;
  }
  if (!cert.G1.empty()) {
    os << "  H          : " << to_string(cert.H) << '\n';
    os << "  G1         : " << cert.G1 << '\n';
    os << "  G2         : " << cert.G2 << '\n';
  }
  if (!cert.residues.empty()) {
    os << "  residues   :";
    for (const auto& r : cert.residues) os << ' ' << to_string(r) << ';';
    os << '\n';
  }
  if (!cert.checks.empty()) {
    Table t({"cond", "product", "residue", "pattern", "n0", "checked", "ok"});
    for (const auto& cc : cert.checks) {
      t.add({"(" + to_string(cc.condition) + ")", cc.target, residue_text(cc),
             cc.pattern ? cc.pattern->describe() : cc.justification, cc.threshold ? std::to_string(*cc.threshold) : "-",
             cc.branch ? checked_text(cc.checked) : "-", cc.passed ? "yes" : "NO"});
    }
    t.print(os, "    ");
  }
  for (const auto& a : cert.assumptions) os << "  assumption : " << a << '\n';
}

void print_outcome(std::ostream& os, const CaseOutcome& o, bool detailed) {
  const CaseSpec& c = *o.spec;
  os << c.id << "  " << params_text(c) << "  d=" << opt_text(c.d) << " k=" << opt_text(c.k) << '\n';
  os << "  expected   : " << expected_short(c.expected) << '\n';
  os << "  verdict    : " << to_string(o.verdict.kind);
  if (o.verdict.splitting) os << "  " << o.verdict.splitting->str();
  if (o.verdict.kind != Verdict::Kind::Pass) os << "  first failure: " << failing_text(o.verdict);
  os << '\n';
  if (o.relation) os << "  relation   : " << o.relation->word_text << " = " << to_string(o.relation->result) << '\n';
  if (detailed) print_certificate(os, o);
  if (o.sampling) {
    auto line = [&os](const char* label, const NontrivialityReport& r) {
      os << label << r.count << " words of form " << r.spec.str() << " (<= " << r.max_syllables
         << " syllables, seed " << r.seed << "): " << r.violations.size() << " violations\n";
      for (const auto& w : r.violations) os << "    violation: " << w.str() << '\n';
    };
    line("  sampling   : ", o.sampling->main);
    if (o.sampling->conjugates) line("  conjugates : ", *o.sampling->conjugates);
  }
  os << "  outcome    : " << (o.matches ? "matches expected" : "MISMATCH") << '\n';
}

void print_summary(std::ostream& os, const std::vector<CaseOutcome>& outcomes) {
  Table t({"id", "params", "d", "k", "expected", "verdict", "splitting / failure", "relation", "match"});
  for (const auto& o : outcomes) {
    const CaseSpec& c = *o.spec;
    t.add({c.id, params_text(c), opt_text(c.d), opt_text(c.k), expected_short(c.expected),
           to_string(o.verdict.kind), o.verdict.splitting ? o.verdict.splitting->str() : failing_text(o.verdict),
           o.relation ? to_string(o.relation->result) : "-", o.matches ? "yes" : "NO"});
  }
  t.print(os);
}

// ---------------------------------------------------------------- commands

struct Catalog {
  std::string source;
  std::vector<CaseSpec> cases;
};

Catalog load_catalog(const std::string& path) {
  if (path.empty()) return {"builtin", builtin_catalog()};
  try {
    return {path, load_case_file(path)};
  } catch (const Error& e) {
    throw UsageError(std::string("cannot load catalog: ") + e.what());
  }
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw UsageError("cannot open output file " + out_path);
  f << text;
  if (!f) throw UsageError("cannot write output file " + out_path);
}

std::string format_json(const json& j) { return j.dump(2) + "\n"; }

int cmd_list(const std::string& catalog_path, std::ostream& out) {
  const Catalog cat = load_catalog(catalog_path);
  Table t({"id", "params", "d", "k", "expected"});
  for (const auto& c : cat.cases) t.add({c.id, params_text(c), opt_text(c.d), opt_text(c.k), expected_short(c.expected)});
  t.print(out);
  return kExitOk;
}

struct VerifyArgs {
  bool all = false;
  std::string case_id;
  std::string format = "text";
  std::string out;
  std::string catalog;
  long p_max = kDefaultPMax;
  SampleOptions sample;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  if (a.all == !a.case_id.empty()) throw UsageError("verify: give exactly one of --all or --case ID");
  const Catalog cat = load_catalog(a.catalog);
  std::vector<const CaseSpec*> selected;
  if (a.all) {
    for (const auto& c : cat.cases) selected.push_back(&c);
  } else {
    const CaseSpec* c = find_case(cat.cases, a.case_id);
    if (!c) throw UsageError("unknown case '" + a.case_id + "'");
    selected.push_back(c);
  }
  std::vector<CaseOutcome> outcomes;
  for (const CaseSpec* c : selected) outcomes.push_back(run_case(*c, a.p_max, a.sample));
  const bool ok = std::all_of(outcomes.begin(), outcomes.end(), [](const CaseOutcome& o) { return o.matches; });

  std::ostringstream text;
  if (a.format == "json") {
    json report;
    report["version"] = PINGPONG_VERSION;
    report["catalog"] = cat.source;
    report["cases"] = json::array();
    for (const auto& o : outcomes) report["cases"].push_back(case_json(o));
    report["status"] = ok ? "success" : "mismatch";
    text << format_json(report);
  } else {
    const bool detailed = outcomes.size() == 1;
    for (const auto& o : outcomes) {
      print_outcome(text, o, detailed);
      text << '\n';
    }
    if (!detailed) print_summary(text, outcomes);
    text << "status: " << (ok ? "success" : "mismatch") << '\n';
  }
  emit(text.str(), a.out, out);
  return ok ? kExitOk : kExitMismatch;
}

struct ExploreArgs {
  long d = 0;
  long k = 0;
  long p_max = kDefaultPMax;
  bool search = false;
  std::size_t max_len = 6;
  std::string format = "text";
  SampleOptions sample;
};

int cmd_explore(const ExploreArgs& a, std::ostream& out) {
  if (a.d < 1 || a.k < 1) throw UsageError("explore: --d and --k must be at least 1");
  const CaseSpec c = exploration_case(a.d, a.k);
  const CaseOutcome o = run_case(c, a.p_max, a.sample);
  std::vector<FoundRelation> found;
  if (a.search && o.verdict.structure.power) {
    found = search_relations(build_generators(c), *o.verdict.structure.power, a.max_len);
  }
  const bool ok = !o.sampling || o.sampling->ok();
  if (a.format == "json") {
    json report;
    report["version"] = PINGPONG_VERSION;
    report["catalog"] = "explore";
    report["cases"] = json::array({case_json(o)});
    if (a.search) {
      json rel = json::array();
      for (const auto& f : found) rel.push_back({{"word", f.word.str()}, {"result", to_string(f.result)}});
      report["relations_found"] = std::move(rel);
    }
    report["status"] = ok ? "success" : "mismatch";
    out << format_json(report);
  } else {
    print_outcome(out, o, true);
    if (a.search) {
      out << "  relation search (alternating words up to " << a.max_len << " syllables): " << found.size()
          << " found\n";
      for (const auto& f : found) out << "    " << f.word.str() << " = " << to_string(f.result) << '\n';
    }
  }
  return ok ? kExitOk : kExitMismatch;
}

struct SampleArgs {
  std::string case_id;
  std::string catalog;
  std::string form = "auto";
  long p_max = kDefaultPMax;
  SampleOptions sample;
};

int cmd_sample(const SampleArgs& a, std::ostream& out) {
  const Catalog cat = load_catalog(a.catalog);
  const CaseSpec* c = find_case(cat.cases, a.case_id);
  if (!c) throw UsageError("unknown case '" + a.case_id + "'");
  const Verdict v = verify_case(*c, a.p_max);
  if (v.kind != Verdict::Kind::Pass) {
    throw UsageError("sample: case '" + c->id + "' has verdict " + to_string(v.kind) + "; sampling needs Pass");
  }
  ReducedFormSpec spec = reduced_form_for(*v.splitting);
  if (a.form == "conjugates") {
    if (v.splitting->kind != Splitting::Kind::FreeTimesFinite) {
      throw UsageError("sample: conjugate generators need a Z*Z/m splitting");
    }
    spec = {ReducedFormSpec::Kind::FreeOnConjugates, v.splitting->m};
  } else if (a.form != "auto") {
    throw UsageError("sample: unknown --form '" + a.form + "'");
  }
  const NontrivialityReport r = oracle_nontriviality(*c, spec, a.sample.count, a.sample.max_syllables, a.sample.seed);
  out << c->id << ": " << v.splitting->str() << ", H = " << to_string(v.certificate.H) << '\n';
  out << "sampled " << r.count << " words of form " << r.spec.str() << " (<= " << r.max_syllables
      << " syllables, seed " << r.seed << ")\n";
  out << "violations: " << r.violations.size() << '\n';
  for (const auto& w : r.violations) out << "  " << w.str() << '\n';
  return r.ok() ? kExitOk : kExitMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact ping-pong certificates for hypergeometric groups", "pingpong"};
  app.set_version_flag("--version", PINGPONG_VERSION);
  app.require_subcommand(1);

  std::string list_catalog;
  auto* list = app.add_subcommand("list", "List the cases of a catalog");
  list->add_option("--catalog", list_catalog, "Case file (default: builtin catalog)");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Verify cases and print a report");
  verify->add_flag("--all", va.all, "Verify every case");
  verify->add_option("--case", va.case_id, "Verify a single case");
  verify->add_option("--format", va.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--out", va.out, "Write the report to a file");
  verify->add_option("--catalog", va.catalog, "Case file (default: builtin catalog)");
  verify->add_option("--p-max", va.p_max, "Largest period searched")->check(CLI::Range(1L, 1000L));
  verify->add_option("--count", va.sample.count, "Sampled words per Pass case")->check(CLI::Range(1UL, 10000000UL));
  verify->add_option("--max-syllables", va.sample.max_syllables, "Syllable bound for sampled words")
      ->check(CLI::Range(1UL, 100000UL));
  verify->add_option("--seed", va.sample.seed, "Sampling seed");

  ExploreArgs ea;
  auto* explore = app.add_subcommand("explore", "Run the pipeline for arbitrary d, k");
  explore->add_option("--d", ea.d, "Parameter d")->required();
  explore->add_option("--k", ea.k, "Parameter k")->required();
  explore->add_option("--p-max", ea.p_max, "Largest period searched")->check(CLI::Range(1L, 1000L));
  explore->add_flag("--search-relations", ea.search, "Search short alternating words equal to +-I");
  explore->add_option("--max-len", ea.max_len, "Syllable bound for the relation search")->check(CLI::Range(2UL, 16UL));
  explore->add_option("--format", ea.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  explore->add_option("--count", ea.sample.count, "Sampled words if the verdict is Pass")->check(CLI::Range(1UL, 10000000UL));
  explore->add_option("--max-syllables", ea.sample.max_syllables, "Syllable bound for sampled words")
      ->check(CLI::Range(1UL, 100000UL));
  explore->add_option("--seed", ea.sample.seed, "Sampling seed");

  SampleArgs sa;
  auto* sample = app.add_subcommand("sample", "Sample reduced words of a certified case");
  sample->add_option("--case", sa.case_id, "Case id")->required();
  sample->add_option("--catalog", sa.catalog, "Case file (default: builtin catalog)");
  sample->add_option("--count", sa.sample.count, "Number of words")->check(CLI::Range(1UL, 10000000UL));
  sample->add_option("--max-syllables", sa.sample.max_syllables, "Syllable bound")->check(CLI::Range(1UL, 100000UL));
  sample->add_option("--seed", sa.sample.seed, "Seed");
  sample->add_option("--form", sa.form, "auto (from the splitting) or conjugates")
      ->check(CLI::IsMember({"auto", "conjugates"}));
  sample->add_option("--p-max", sa.p_max, "Largest period searched")->check(CLI::Range(1L, 1000L));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (list->parsed()) return cmd_list(list_catalog, out);
    if (verify->parsed()) return cmd_verify(va, out);
    if (explore->parsed()) return cmd_explore(ea, out);
    if (sample->parsed()) return cmd_sample(sa, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitMismatch;
  }
  return kExitUsage;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace pingpong::cli
