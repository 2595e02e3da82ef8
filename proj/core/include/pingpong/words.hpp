#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pingpong/catalog.hpp"
#include "pingpong/word.hpp"

namespace pingpong {

/// Scalar value of a relation word.
enum class RelationResult { Identity, MinusIdentity, Other };

std::string to_string(RelationResult r);  // "I", "-I", "other"

struct RelationReport {
  std::string word_text;
  Word word;
  Mat value;
  RelationResult result = RelationResult::Other;

  /// I or -I; either contradicts the normal form a splitting would force.
  bool obstructs() const { return result != RelationResult::Other; }
};

RelationResult classify_scalar(const Mat& m);

/// Requires a relation word on the case; throws Error otherwise.
RelationReport verify_relation(const CaseSpec& c);

struct OrderOfR {
  enum class Kind { Finite, MinusAt, InfiniteUpTo };
  Kind kind = Kind::InfiniteUpTo;
  long value = 0;  // m, p, or the search bound
  friend bool operator==(const OrderOfR&, const OrderOfR&) = default;
};

/// Smallest m <= bound with R^m = I or R^m = -I, whichever comes first.
OrderOfR order_of_R(const GroupGens& gens, long bound);

/// Normal-form discipline to sample from.
struct ReducedFormSpec {
  enum class Kind {
    FreeZZ,            // alternating T^a, R^b with a, b != 0
    FreeTimesFinite,   // R-exponents in 1..m-1
    Amalgam,           // R^p = -I; R-exponents in 1..2p-1, never p
    FreeOnConjugates,  // letters R^i T R^-i, 0 <= i < m
  };
  Kind kind = Kind::FreeZZ;
  int m = 0;  // m for FreeTimesFinite/FreeOnConjugates, p for Amalgam

  std::string str() const;
};

/// Sampling form matching a certified splitting.
ReducedFormSpec reduced_form_for(const Splitting& s);

/// Largest |exponent| drawn for T syllables (and R syllables of infinite order).
inline constexpr long kMaxSampledExponent = 4;

/// Deterministic sample: the generator is std::mt19937_64 (whose output
/// sequence is fixed by the standard) and every draw is mapped to a range by
/// rejection sampling in this file, so equal seeds give equal words on every
/// platform. Each word has between 1 and max_syllables syllables (for
/// FreeOnConjugates: conjugate letters) and is returned expanded over {R, T}.
std::vector<Word> sample_reduced_words(const ReducedFormSpec& spec, std::size_t count, std::size_t max_syllables,
                                       std::uint64_t seed);

struct NontrivialityReport {
  ReducedFormSpec spec;
  std::size_t count = 0;
  std::size_t max_syllables = 0;
  std::uint64_t seed = 0;
  bool plus_minus = false;  // H = {I, -I}
  std::vector<Word> violations;

  bool ok() const { return violations.empty(); }
};

/// Evaluates every sampled word and records those landing in H ({I}, or
/// {I, -I} for the amalgam form).
NontrivialityReport oracle_nontriviality(const CaseSpec& c, const ReducedFormSpec& spec, std::size_t count,
                                         std::size_t max_syllables, std::uint64_t seed);

struct FoundRelation {
  Word word;
  RelationResult result;
};

/// Exploration only: breadth-first over syllable count up to max_len, with
/// alternating syllables T^a (|a| <= exponent_bound) and R^b (b in 1..m-1 for
/// finite order m, else |b| <= exponent_bound). Reports words evaluating to
/// +-I, at most `limit` of them.
std::vector<FoundRelation> search_relations(const GroupGens& gens, const PowerStructure& ps, std::size_t max_len,
                                            long exponent_bound = 2, std::size_t limit = 20);

}  // namespace pingpong
