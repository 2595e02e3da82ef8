#pragma once

// Test-only reference computations. Nothing here calls into the engine's
// inverse, charpoly, residue families or sign classification.

#include <cstdint>
#include <string>
#include <vector>

#include "pingpong/catalog.hpp"
#include "pingpong/cones.hpp"
#include "pingpong/matpoly.hpp"

namespace pingpong::testing {

/// Determinant by cofactor expansion along the first row.
Rat laplace_det(const std::vector<std::vector<Rat>>& a);

/// det(xI - A) evaluated by cofactor expansion at x = 0..n and interpolated.
RatPoly charpoly_by_interpolation(const Mat& a);

/// Solves A x = b by Cramer's rule with cofactor determinants.
std::vector<Rat> cramer_solve(const Mat& a, const std::vector<Rat>& b);

/// R^m by repeated multiplication (R^-1 obtained by Cramer's rule).
Mat direct_power(const Mat& r, long m);

/// Row flags of f(n) accumulated over every branch value with |n| <= max_abs.
struct BruteRows {
  std::vector<bool> nonneg;
  std::vector<bool> nonpos;
};
BruteRows brute_force_rows(const MatPoly& f, Branch branch, long max_abs);

/// Expected claim for a product's image of an open cone.
enum class Claim { Disjoint, Contained, ContainedUpToSign };

struct PointStats {
  std::size_t points = 0;
  std::size_t violations = 0;
  std::vector<std::string> examples;
};

/// Maps `points` random interior points of the source cone (positive integer
/// combinations of the source columns) through `linear`, solves for their
/// coordinates in the target basis, and checks the claim:
///   Disjoint          -> neither all coordinates > 0 nor all < 0
///   Contained         -> all coordinates > 0
///   ContainedUpToSign -> all > 0 or all < 0
void check_points(const Mat& linear, const Mat& source, const Mat& target, Claim claim, std::size_t points,
                  std::uint64_t seed, PointStats& stats, const std::string& label);

/// Runs check_points for every checked condition of a certificate: finite
/// order at every residue, infinite order for every branch value |n| <= max_n.
PointStats brute_force_certificate(const CaseSpec& c, std::size_t points_per_check, long max_n,
                                   std::uint64_t seed);

}  // namespace pingpong::testing
