#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <vector>

#include "pingpong/catalog.hpp"

namespace pingpong {

/// Reads the line-oriented case format, one case per line:
///
///   id dim a1 a2 [a3 a4] d k expected
///
/// Fractions are written p/q. `expected` is the remainder of the line:
/// `split:<desc>`, `relation:<word>` or `unknown`. In dimension 2 the d and
/// k fields are omitted (or written as `-`). Blank lines and lines starting
/// with '#' are skipped. Throws ParseError with the offending line number.
std::vector<CaseSpec> parse_case_file(std::istream& in);
std::vector<CaseSpec> load_case_file(const std::filesystem::path& path);

/// One line in the same format.
std::string format_case_line(const CaseSpec& c);

}  // namespace pingpong
