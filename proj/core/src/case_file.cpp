#include "pingpong/case_file.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace pingpong {

namespace {

long parse_positive(const std::string& tok, const std::string& what) {
  try {
    std::size_t used = 0;
    const long v = std::stol(tok, &used);
    if (used == tok.size() && v > 0) return v;
  } catch (const std::exception&) {
  }
  throw ParseError(what + " must be a positive integer, got '" + tok + "'");
}

CaseSpec parse_line(const std::string& line) {
  std::istringstream in(line);
  CaseSpec c;
  std::string dim_tok;
  if (!(in >> c.id >> dim_tok)) throw ParseError("expected 'id dim ...'");
  if (dim_tok != "2" && dim_tok != "4") throw ParseError("dim must be 2 or 4, got '" + dim_tok + "'");
  c.dim = dim_tok == "2" ? 2 : 4;
  for (int i = 0; i < c.dim; ++i) {
    std::string tok;
    if (!(in >> tok)) throw ParseError("missing parameter a" + std::to_string(i + 1));
    c.params.push_back(Rat::parse(tok));
  }
  std::string rest;
  std::getline(in, rest);
  std::istringstream tail(rest);
  if (c.dim == 4) {
    std::string d_tok, k_tok;
    if (!(tail >> d_tok >> k_tok)) throw ParseError("missing d and k");
    c.d = parse_positive(d_tok, "d");
    c.k = parse_positive(k_tok, "k");
    std::getline(tail, rest);
  } else {
    // optional "- -" placeholders
    std::istringstream probe(rest);
    std::string a, b;
    if ((probe >> a >> b) && a == "-" && b == "-") std::getline(probe, rest);
  }
  c.expected = Expected::parse(rest);
  if (c.expected.kind == Expected::Kind::Relation) c.relation_word = Word::parse(c.expected.relation_text);
  validate_case(c);
  return c;
}

}  // namespace

std::vector<CaseSpec> parse_case_file(std::istream& in) {
  std::vector<CaseSpec> out;
  std::set<std::string> ids;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (line.back() == '\r') line.pop_back();
    try {
      CaseSpec c = parse_line(line);
      if (!ids.insert(c.id).second) throw ParseError("duplicate case id '" + c.id + "'");
      out.push_back(std::move(c));
    } catch (const Error& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

std::vector<CaseSpec> load_case_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open case file '" + path.string() + "'");
  return parse_case_file(in);
}

std::string format_case_line(const CaseSpec& c) {
  std::ostringstream os;
  os << c.id << ' ' << c.dim;
  for (const auto& a : c.params) os << ' ' << a;
  if (c.dim == 4) os << ' ' << c.d.value_or(0) << ' ' << c.k.value_or(0);
  os << ' ' << c.expected.str();
  return os.str();
}

}  // namespace pingpong
