#include "pingpong/words.hpp"

#include <functional>
#include <limits>
#include <random>

namespace pingpong {

std::string to_string(RelationResult r) {
  switch (r) {
    case RelationResult::Identity:
      return "I";
    case RelationResult::MinusIdentity:
      return "-I";
    case RelationResult::Other:
      return "other";
  }
  return "other";
}

RelationResult classify_scalar(const Mat& m) {
  if (m.is_identity()) return RelationResult::Identity;
  if ((-m).is_identity()) return RelationResult::MinusIdentity;
  return RelationResult::Other;
}

RelationReport verify_relation(const CaseSpec& c) {
  if (!c.relation_word) throw Error("case '" + c.id + "' carries no relation word");
  const GroupGens g = build_generators(c);
  RelationReport rep;
  rep.word_text = c.expected.relation_text.empty() ? c.relation_word->str() : c.expected.relation_text;
  rep.word = *c.relation_word;
  rep.value = eval_word(rep.word, g.R, g.T);
  rep.result = classify_scalar(rep.value);
  return rep;
}

OrderOfR order_of_R(const GroupGens& gens, long bound) {
  if (bound < 1) throw Error("order_of_R: bound must be at least 1");
  Mat power = Mat::identity(gens.dim);
  for (long m = 1; m <= bound; ++m) {
    power = power * gens.R;
    switch (classify_scalar(power)) {
      case RelationResult::Identity:
        return {OrderOfR::Kind::Finite, m};
      case RelationResult::MinusIdentity:
        return {OrderOfR::Kind::MinusAt, m};
      case RelationResult::Other:
        break;
    }
  }
  return {OrderOfR::Kind::InfiniteUpTo, bound};
}

std::string ReducedFormSpec::str() const {
  switch (kind) {
    case Kind::FreeZZ:
      return "free";
    case Kind::FreeTimesFinite:
      return "free-times-finite(" + std::to_string(m) + ")";
    case Kind::Amalgam:
      return "amalgam(" + std::to_string(m) + ")";
    case Kind::FreeOnConjugates:
      return "conjugates(" + std::to_string(m) + ")";
  }
  return "?";
}

ReducedFormSpec reduced_form_for(const Splitting& s) {
  switch (s.kind) {
    case Splitting::Kind::Free:
      return {ReducedFormSpec::Kind::FreeZZ, 0};
    case Splitting::Kind::FreeTimesFinite:
      return {ReducedFormSpec::Kind::FreeTimesFinite, s.m};
    case Splitting::Kind::Amalgam:
      return {ReducedFormSpec::Kind::Amalgam, s.m / 2};
  }
  return {};
}

namespace {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi) {
    const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t x;
    do {
      x = rng_();
    } while (x >= limit);
    return lo + static_cast<long>(x % range);
  }

  /// Uniform in [-bound, bound] \ {0}.
  long nonzero(long bound) {
    const long k = uniform(1, 2 * bound);
    return k <= bound ? k : bound - k;
  }

 private:
  std::mt19937_64 rng_;
};

long r_exponent(Sampler& s, const ReducedFormSpec& spec) {
  switch (spec.kind) {
    case ReducedFormSpec::Kind::FreeTimesFinite:
      return s.uniform(1, spec.m - 1);
    case ReducedFormSpec::Kind::Amalgam: {
      const long b = s.uniform(1, 2L * spec.m - 2);
      return b >= spec.m ? b + 1 : b;
    }
    default:
      return s.nonzero(kMaxSampledExponent);
  }
}

}  // namespace

std::vector<Word> sample_reduced_words(const ReducedFormSpec& spec, std::size_t count, std::size_t max_syllables,
                                       std::uint64_t seed) {
  if (count < 1 || max_syllables < 1) throw Error("sample_reduced_words: count and max_syllables must be >= 1");
  if ((spec.kind == ReducedFormSpec::Kind::FreeTimesFinite && spec.m < 2) ||
      (spec.kind == ReducedFormSpec::Kind::Amalgam && spec.m < 1) ||
      (spec.kind == ReducedFormSpec::Kind::FreeOnConjugates && spec.m < 2)) {
    throw Error("sample_reduced_words: invalid form " + spec.str());
  }
  Sampler s(seed);
  std::vector<Word> out;
  out.reserve(count);
  for (std::size_t w = 0; w < count; ++w) {
    const long len = s.uniform(1, static_cast<long>(max_syllables));
    std::vector<Syllable> syl;
    if (spec.kind == ReducedFormSpec::Kind::FreeOnConjugates) {
      long prev = -1;
      for (long i = 0; i < len; ++i) {
        long idx = s.uniform(0, prev < 0 ? spec.m - 1 : spec.m - 2);
        if (prev >= 0 && idx >= prev) ++idx;
        const long e = s.nonzero(kMaxSampledExponent);
        syl.push_back({Letter::R, idx});
        syl.push_back({Letter::T, e});
        syl.push_back({Letter::R, -idx});
        prev = idx;
      }
    } else {
      Letter letter = s.uniform(0, 1) == 0 ? Letter::R : Letter::T;
      for (long i = 0; i < len; ++i) {
        const long e = letter == Letter::T ? s.nonzero(kMaxSampledExponent) : r_exponent(s, spec);
        syl.push_back({letter, e});
        letter = letter == Letter::R ? Letter::T : Letter::R;
      }
    }
    out.emplace_back(std::move(syl));
  }
  return out;
}

NontrivialityReport oracle_nontriviality(const CaseSpec& c, const ReducedFormSpec& spec, std::size_t count,
                                         std::size_t max_syllables, std::uint64_t seed) {
  NontrivialityReport rep;
  rep.spec = spec;
  rep.count = count;
  rep.max_syllables = max_syllables;
  rep.seed = seed;
  rep.plus_minus = spec.kind == ReducedFormSpec::Kind::Amalgam;
  const GroupGens g = build_generators(c);
  for (const auto& w : sample_reduced_words(spec, count, max_syllables, seed)) {
    const RelationResult r = classify_scalar(eval_word(w, g.R, g.T));
    if (r == RelationResult::Identity || (rep.plus_minus && r == RelationResult::MinusIdentity)) {
      rep.violations.push_back(w);
    }
  }
  return rep;
}

std::vector<FoundRelation> search_relations(const GroupGens& gens, const PowerStructure& ps, std::size_t max_len,
                                            long exponent_bound, std::size_t limit) {
  std::vector<long> r_exps, t_exps;
  for (long a = -exponent_bound; a <= exponent_bound; ++a) {
    if (a != 0) t_exps.push_back(a);
  }
  if (ps.finite_order) {
    for (long b = 1; b < *ps.finite_order; ++b) {
      if (classify_scalar(gens.R.pow(b)) == RelationResult::Other) r_exps.push_back(b);
    }
  } else {
    r_exps = t_exps;
  }
  std::vector<Mat> r_pows, t_pows;
  for (long b : r_exps) r_pows.push_back(gens.R.pow(b));
  for (long a : t_exps) t_pows.push_back(gens.T.pow(a));

  // Up to cyclic conjugation an alternating relation starts with R and ends with T.
  std::vector<FoundRelation> found;
  std::vector<Syllable> stack;
  std::function<void(const Mat&, std::size_t)> extend = [&](const Mat& prefix, std::size_t target) {
    if (found.size() >= limit) return;
    if (stack.size() == target) {
      const RelationResult r = classify_scalar(prefix);
      if (r != RelationResult::Other) found.push_back({Word(stack), r});
      return;
    }
    const bool r_turn = stack.size() % 2 == 0;
    const auto& exps = r_turn ? r_exps : t_exps;
    const auto& pows = r_turn ? r_pows : t_pows;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      stack.push_back({r_turn ? Letter::R : Letter::T, exps[i]});
      extend(prefix * pows[i], target);
      stack.pop_back();
    }
  };
  for (std::size_t len = 2; len <= max_len && found.size() < limit; len += 2) {
    extend(Mat::identity(gens.dim), len);
  }
  return found;
}

}  // namespace pingpong
