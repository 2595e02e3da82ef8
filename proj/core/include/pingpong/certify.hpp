#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pingpong/catalog.hpp"
#include "pingpong/cones.hpp"
#include "pingpong/matpoly.hpp"

namespace pingpong {

/// Raised when two routes that must agree (direct N-side products and their
/// B-symmetric M-side counterparts) disagree.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The ping-pong conditions. (iii) is not checked itself: it follows from
/// (iv)-(vii).
enum class Condition { I, II, IV, V, VI, VII, HStability };

std::string to_string(Condition c);

/// Which cone basis a product is expressed in (target) or applied to (source).
enum class Side { M, N };

struct Residue {
  long j = 0;
  std::optional<Branch> branch;  // absent for finite order
  friend bool operator==(const Residue&, const Residue&) = default;
};

std::string to_string(const Residue& r);

/// Matrix family for M_or_N^-1 * L * R^(p n + j) * (M or N), scalar sign stripped.
struct ResidueFamily {
  MatPoly poly;
  /// The true product is sign_base^n * poly(n); 1 for finite order.
  int sign_base = 1;
};

/// For finite order the family is the constant target^-1 L R^j source. For
/// infinite order R^(p n + j) = sigma^n R^j exp(n Z), so the family is
/// target^-1 L R^j exp(n Z) source, of degree < nilpotency of Z. With p = 1
/// the residue is j = 0 and the variable runs over the exponent itself.
ResidueFamily family_for(Side target, const Mat& L, long j, Side source, const GroupGens& gens,
                         const PowerStructure& ps, const ConePair& cones);

struct ConditionCheck {
  Condition condition = Condition::I;
  std::string target;  // e.g. "M^-1 T^-1 R^j N"
  std::optional<long> residue;
  std::optional<Branch> branch;
  std::optional<MatPoly> family;
  int sign_base = 1;
  std::optional<SignPattern> pattern;  // valid for every n of the branch
  std::optional<long> threshold;
  std::vector<long> checked;
  /// N-side products: equality with the B-mirrored M-side family.
  std::optional<bool> symmetry_agrees;
  std::string justification;  // for conditions recorded without computation
  bool passed = false;
};

enum class AmalgamatedSubgroup { Trivial, PlusMinusIdentity };

std::string to_string(AmalgamatedSubgroup h);

struct PingPongCertificate {
  std::string case_id;
  AmalgamatedSubgroup H = AmalgamatedSubgroup::Trivial;
  std::string G1;
  std::string G2;
  std::vector<Residue> residues;
  std::vector<ConditionCheck> checks;
  std::vector<std::string> assumptions;
  std::optional<Splitting> conclusion;
  std::optional<PowerStructure> power;
  std::optional<ConePair> cones;

  bool all_passed() const;
  const ConditionCheck* first_failure() const;
};

struct Verdict {
  enum class Kind { Pass, Fail, Inconclusive };

  Kind kind = Kind::Inconclusive;
  std::optional<Splitting> splitting;  // Pass only
  /// First failing check, or a description of a structural failure.
  std::optional<ConditionCheck> failing;
  std::string failure_reason;
  StructureReport structure;
  PingPongCertificate certificate;
};

std::string to_string(Verdict::Kind k);

/// Finite order m with H trivial: Z * Z/m. R^p = -I: (Z x Z/2) *_{Z/2} Z/2p.
/// Infinite order: Z * Z.
Splitting splitting_from_structure(const PowerStructure& ps);

/// Finite order m: j in 1..m-1 with R^j not in H, no branch. Infinite order:
/// (j, n >= 0) for j in 1..p and (j, n <= 0) for j in -p..-1; when p = 1 the
/// residue is 0 with branches n >= 1 and n <= -1.
std::vector<Residue> residue_set(const PowerStructure& ps);

/// Runs the structure checks, builds the cones and evaluates every ping-pong
/// condition. A failing certificate yields Fail when the case records a
/// relation and Inconclusive otherwise. Pure and deterministic.
Verdict verify_case(const CaseSpec& c, long p_max = kDefaultPMax);

}  // namespace pingpong
