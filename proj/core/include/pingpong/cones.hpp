#pragma once

#include <string>
#include <vector>

#include "pingpong/catalog.hpp"
#include "pingpong/matpoly.hpp"

namespace pingpong {

class DegenerateQuadratic : public Error {
 public:
  using Error::Error;
};

/// Simplicial cones C+ (columns of M) and C- = B C+ (columns of N).
struct ConePair {
  Vec v;
  Mat P;  // log(U)
  Mat Q;  // log(T R^-1)
  Mat M;  // columns P^i v
  Mat N;  // columns Q^i v
  Mat M_inv;
  Mat N_inv;
};

/// The root of v^T J P v = 0 on V = span(e2, e3) other than e3, scaled so its
/// second coordinate is 1. Dimension 4 only. Throws DegenerateQuadratic when
/// the quadratic lacks two distinct rational projective roots, one of them e3.
Vec compute_special_vector(const GroupGens& gens);

/// Throws SingularMatrix if a generator matrix is singular.
ConePair build_cones(const GroupGens& gens);

enum class Sign : signed char { Neg = -1, Zero = 0, Pos = 1 };

enum class SignVerdict { AllNonneg, AllNonpos, RowSplit, Indefinite };

std::string to_string(SignVerdict v);

/// Entrywise signs with per-row classification. A zero row is both
/// nonnegative and nonpositive.
struct SignPattern {
  int dim = 0;
  std::vector<Sign> signs;  // row-major
  std::vector<bool> nonneg_rows;
  std::vector<bool> nonpos_rows;
  SignVerdict verdict = SignVerdict::Indefinite;

  Sign at(int r, int c) const { return signs[static_cast<std::size_t>(r * dim + c)]; }
  /// Zero rows, which count as both nonnegative and nonpositive.
  std::vector<int> ambiguous_rows() const;

  /// Some row nonnegative and some row nonpositive: the image of the open
  /// source cone misses both C and -C.
  bool certifies_disjoint() const;
  /// All entries of one sign: the image lies in C or -C.
  bool certifies_uniform() const {
    return verdict == SignVerdict::AllNonneg || verdict == SignVerdict::AllNonpos;
  }

  /// e.g. "RowSplit(+{2,4} -{1,3})", rows 1-based.
  std::string describe() const;
};

/// Derives rows and verdict from row flags.
SignVerdict verdict_from_rows(const std::vector<bool>& nonneg, const std::vector<bool>& nonpos);

SignPattern classify_sign(const Mat& a);

enum class Branch { NonNeg, Pos, NonPos, Neg };  // n >= 0, n >= 1, n <= 0, n <= -1

std::string to_string(Branch b);
/// +1 for NonNeg/Pos, -1 otherwise.
int direction(Branch b);
/// Smallest |n| in the branch.
long first_magnitude(Branch b);
bool in_branch(Branch b, long n);

/// Sign behaviour of a matrix family over every n of a branch.
struct BranchSign {
  /// Eventual sign of each entry (sign of the leading coefficient in the
  /// branch direction); identically zero entries are Zero.
  SignPattern leading;
  /// Row flags and verdict valid for every n in the branch.
  SignPattern overall;
  /// max over entries of 1 + ceil(sum_{m<lead} |c_m| / |c_lead|); 0 for a
  /// constant family. Every |n| >= threshold has entry signs equal to `leading`.
  long threshold = 0;
  /// Branch values with |n| < threshold, each evaluated exactly.
  std::vector<long> checked;
};

BranchSign matpoly_sign_over_branch(const MatPoly& f, Branch branch);

}  // namespace pingpong
