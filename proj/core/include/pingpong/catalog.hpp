#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pingpong/matrix.hpp"
#include "pingpong/polynomial.hpp"
#include "pingpong/word.hpp"

namespace pingpong {

/// Shape of a free or amalgamated product decomposition of <R, T>.
struct Splitting {
  enum class Kind {
    Free,             // Z * Z
    FreeTimesFinite,  // Z * Z/m
    Amalgam,          // (Z x Z/2) *_{Z/2} Z/m
  };

  Kind kind = Kind::Free;
  int m = 0;  // order of the finite factor; 0 for Free

  static Splitting free() { return {Kind::Free, 0}; }
  static Splitting free_times_finite(int m) { return {Kind::FreeTimesFinite, m}; }
  static Splitting amalgam(int m) { return {Kind::Amalgam, m}; }

  /// "Z*Z", "Z*Z/5", "(ZxZ/2)*_{Z/2}Z/8".
  std::string str() const;
  /// Inverse of str(); throws ParseError.
  static Splitting parse(std::string_view text);

  friend bool operator==(const Splitting&, const Splitting&) = default;
};

/// What the table records for a case.
struct Expected {
  enum class Kind { Split, Relation, Unknown };

  Kind kind = Kind::Unknown;
  std::optional<Splitting> splitting;  // Split only
  std::string relation_text;           // Relation only, as written in the table

  static Expected split(Splitting s) { return {Kind::Split, s, {}}; }
  static Expected relation(std::string text) { return {Kind::Relation, std::nullopt, std::move(text)}; }
  static Expected unknown() { return {}; }

  /// Case-file syntax: "split:<desc>", "relation:<word>" or "unknown".
  std::string str() const;
  static Expected parse(std::string_view text);
};

struct CaseSpec {
  std::string id;
  int dim = 4;
  std::vector<Rat> params;
  std::optional<long> d;  // absent in dimension 2
  std::optional<long> k;
  Expected expected;
  std::optional<Word> relation_word;
};

/// Throws Error when params are unsorted, outside (0, 1), not closed under
/// a -> 1 - a, of the wrong count, or when d/k are missing or non-positive.
void validate_case(const CaseSpec& c);

/// The fourteen Sp(4) cases with maximally unipotent U (ids c01..c14, in
/// table order) followed by the SL(2) demo with parameters (1/3, 2/3) (id "sl2").
const std::vector<CaseSpec>& builtin_catalog();

/// Looks up a case by id; nullptr if absent.
const CaseSpec* find_case(const std::vector<CaseSpec>& catalog, std::string_view id);

/// Case for arbitrary (d, k) with nothing expected. Parameters are left empty.
CaseSpec exploration_case(long d, long k);

struct GroupGens {
  int dim = 4;
  Mat U, T, R, J, B;
};

/// U, T, R = TU in the standard (d, k) basis, the symplectic form J and the
/// involution B. In dimension 2 the fixed demo matrices are used.
GroupGens build_generators(const CaseSpec& c);
GroupGens build_generators(long d, long k);
GroupGens sl2_generators();

class NoStructure : public Error {
 public:
  using Error::Error;
};

/// sigma * R^p = exp(Z) with p minimal.
struct PowerStructure {
  long p = 1;
  int sigma = 1;
  Mat Z;
  std::optional<long> finite_order;  // present iff Z == 0
  int nilpotency_degree = 0;         // 0 when Z == 0, else least e with Z^e = 0

  bool infinite() const { return !finite_order.has_value(); }
  /// R^p == -I, i.e. the amalgamating subgroup is {I, -I}.
  bool minus_identity() const { return finite_order.has_value() && sigma == -1; }
};

inline constexpr long kDefaultPMax = 12;

/// Smallest p <= p_max and sign sigma with sigma * R^p unipotent. For finite
/// order the order is re-derived by power iteration up to 2 * p_max.
/// Throws NoStructure.
PowerStructure detect_power_structure(const GroupGens& gens, long p_max = kDefaultPMax);

class IncompleteOrbit : public Error {
 public:
  using Error::Error;
};

/// prod_j (x - exp(2 pi i a_j)) as a product of cyclotomic polynomials.
/// Throws IncompleteOrbit when the multiset is not a union of complete
/// primitive-residue orbits.
IntPoly charpoly_from_params(const std::vector<Rat>& params);

/// Name of the check comparing charpoly(R) with the parameter labels. It
/// concerns the labels only, so a certificate for the (d, k) matrices does
/// not depend on it.
inline constexpr std::string_view kParamsCharpolyCheck = "charpoly(R) = charpoly(params)";

struct StructureCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct StructureReport {
  std::vector<StructureCheck> checks;
  std::optional<PowerStructure> power;
  RatPoly charpoly_R;
  int rank_T_minus_I = 0;
  /// rank(sigma R^p - I); 3 for a single 4x4 Jordan block.
  int unipotent_part_rank = 0;

  bool passed() const;
  const StructureCheck* find(std::string_view name) const;
};

StructureReport verify_structure(const CaseSpec& c, long p_max = kDefaultPMax);
StructureReport verify_structure(const CaseSpec& c, const GroupGens& gens, long p_max = kDefaultPMax);

}  // namespace pingpong
