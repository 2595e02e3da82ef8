#include "oracles.hpp"

#include <random>

#include "pingpong/certify.hpp"

namespace pingpong::testing {

Rat laplace_det(const std::vector<std::vector<Rat>>& a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  Rat det;
  for (std::size_t col = 0; col < n; ++col) {
    if (a[0][col].is_zero()) continue;
    std::vector<std::vector<Rat>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Rat> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != col) row.push_back(a[r][c]);
      }
      minor.push_back(std::move(row));
    }
    const Rat term = a[0][col] * laplace_det(minor);
    det += (col % 2 == 0) ? term : -term;
  }
  return det;
}

namespace {

std::vector<std::vector<Rat>> rows_of(const Mat& a) {
  std::vector<std::vector<Rat>> out(static_cast<std::size_t>(a.dim()));
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c) out[static_cast<std::size_t>(r)].push_back(a(r, c));
  return out;
}

}  // namespace

RatPoly charpoly_by_interpolation(const Mat& a) {
  const int n = a.dim();
  std::vector<Rat> xs, ys;
  for (int x = 0; x <= n; ++x) {
    auto m = rows_of(a);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = -m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      m[static_cast<std::size_t>(r)][static_cast<std::size_t>(r)] += Rat(x);
    }
    xs.emplace_back(x);
    ys.push_back(laplace_det(m));
  }
  RatPoly out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    RatPoly basis(std::vector<Rat>{Rat(1)});
    Rat denom(1);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (i == j) continue;
      basis = basis * RatPoly(std::vector<Rat>{-xs[j], Rat(1)});
      denom *= xs[i] - xs[j];
    }
    out = out + basis * RatPoly(std::vector<Rat>{ys[i] / denom});
  }
  return out;
}

std::vector<Rat> cramer_solve(const Mat& a, const std::vector<Rat>& b) {
  const auto base = rows_of(a);
  const Rat det = laplace_det(base);
  if (det.is_zero()) throw SingularMatrix("cramer_solve: singular");
  std::vector<Rat> x;
  for (int col = 0; col < a.dim(); ++col) {
    auto m = base;
    for (int r = 0; r < a.dim(); ++r) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] = b[static_cast<std::size_t>(r)];
    x.push_back(laplace_det(m) / det);
  }
  return x;
}

Mat direct_power(const Mat& r, long m) {
  Mat step = r;
  if (m < 0) {
    Mat inv(r.dim());
    for (int c = 0; c < r.dim(); ++c) {
      std::vector<Rat> e(static_cast<std::size_t>(r.dim()));
      e[static_cast<std::size_t>(c)] = 1;
      const auto col = cramer_solve(r, e);
      for (int i = 0; i < r.dim(); ++i) inv(i, c) = col[static_cast<std::size_t>(i)];
    }
    step = inv;
    m = -m;
  }
  Mat out = Mat::identity(r.dim());
  for (long i = 0; i < m; ++i) out = out * step;
  return out;
}

BruteRows brute_force_rows(const MatPoly& f, Branch branch, long max_abs) {
  const int dim = f.dim();
  BruteRows out{std::vector<bool>(static_cast<std::size_t>(dim), true), std::vector<bool>(static_cast<std::size_t>(dim), true)};
  for (long n = -max_abs; n <= max_abs; ++n) {
    if (!in_branch(branch, n)) continue;
    // evaluate by Horner on each entry independently of matpoly_eval
    for (int r = 0; r < dim; ++r) {
      for (int c = 0; c < dim; ++c) {
        Rat value;
        Rat power(1);
        for (int m = 0; m <= f.degree(); ++m) {
          value += f.coeff(m)(r, c) * power;
          power *= Rat(n);
        }
        if (value.sign() < 0) out.nonneg[static_cast<std::size_t>(r)] = false;
        if (value.sign() > 0) out.nonpos[static_cast<std::size_t>(r)] = false;
      }
    }
  }
  return out;
}

void check_points(const Mat& linear, const Mat& source, const Mat& target, Claim claim, std::size_t points,
                  std::uint64_t seed, PointStats& stats, const std::string& label) {
  const int dim = linear.dim();
  const Mat image_of_columns = linear * source;
  // coordinates of each mapped source column in the target basis
  std::vector<std::vector<Rat>> coords(static_cast<std::size_t>(dim));
  for (int c = 0; c < dim; ++c) {
    std::vector<Rat> col;
    for (int r = 0; r < dim; ++r) col.push_back(image_of_columns(r, c));
    coords[static_cast<std::size_t>(c)] = cramer_solve(target, col);
  }
  // integer matrix with the same row signs: scale row r by the lcm of its denominators
  std::vector<std::vector<BigInt>> K(static_cast<std::size_t>(dim), std::vector<BigInt>(static_cast<std::size_t>(dim)));
  for (int r = 0; r < dim; ++r) {
    BigInt l = 1;
    for (int c = 0; c < dim; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), coords[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)].den().get_mpz_t());
    for (int c = 0; c < dim; ++c) {
      const Rat& x = coords[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
      K[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = x.num() * (l / x.den());
    }
  }
  std::mt19937_64 rng(seed);
  std::vector<BigInt> weights(static_cast<std::size_t>(dim));
  BigInt acc;
  for (std::size_t p = 0; p < points; ++p) {
    for (auto& w : weights) w = static_cast<unsigned long>(1 + rng() % 1000);
    bool all_pos = true, all_neg = true;
    for (int r = 0; r < dim; ++r) {
      acc = 0;
      for (int c = 0; c < dim; ++c) acc += K[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] * weights[static_cast<std::size_t>(c)];
      const int s = sgn(acc);
      all_pos = all_pos && s > 0;
      all_neg = all_neg && s < 0;
    }
    bool ok = false;
    switch (claim) {
      case Claim::Disjoint:
        ok = !all_pos && !all_neg;
        break;
      case Claim::Contained:
        ok = all_pos;
        break;
      case Claim::ContainedUpToSign:
        ok = all_pos || all_neg;
        break;
    }
    ++stats.points;
    if (!ok) {
      ++stats.violations;
      if (stats.examples.size() < 5) stats.examples.push_back(label);
    }
  }
}

PointStats brute_force_certificate(const CaseSpec& c, std::size_t points_per_check, long max_n, std::uint64_t seed) {
  const Verdict v = verify_case(c);
  const GroupGens g = build_generators(c);
  const ConePair& cones = *v.certificate.cones;
  const PowerStructure& ps = *v.certificate.power;
  PointStats stats;
  std::uint64_t salt = seed;
  const Mat T_inv = direct_power(g.T, -1);
  for (const auto& chk : v.certificate.checks) {
    if (!chk.family || !chk.passed) continue;
    Claim claim = Claim::Disjoint;
    Mat L = Mat::identity(g.dim);
    if (chk.condition == Condition::IV || chk.condition == Condition::VI) L = T_inv;
    if (chk.condition == Condition::V || chk.condition == Condition::VII) L = g.T;
    if (chk.condition == Condition::IV || chk.condition == Condition::V) claim = Claim::Contained;
    if (chk.condition == Condition::VI || chk.condition == Condition::VII) claim = Claim::ContainedUpToSign;
    const bool n_target = chk.target.rfind("N^-1", 0) == 0;
    const bool n_source = chk.target.back() == 'N';
    const Mat& target = n_target ? cones.N : cones.M;
    const Mat& source = n_source ? cones.N : cones.M;

    std::vector<long> exponents;
    if (!chk.residue) {
      exponents.push_back(0);
    } else if (!chk.branch) {
      exponents.push_back(*chk.residue);
    } else {
      for (long n = -max_n; n <= max_n; ++n) {
        if (in_branch(*chk.branch, n)) exponents.push_back(ps.p * n + *chk.residue);
      }
    }
    for (long m : exponents) {
      const Mat linear = L * direct_power(g.R, m);
      check_points(linear, source, target, claim, points_per_check, ++salt, stats,
                   c.id + " (" + to_string(chk.condition) + ") " + chk.target + " m=" + std::to_string(m));
    }
  }
  return stats;
}

}  // namespace pingpong::testing
