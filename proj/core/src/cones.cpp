#include "pingpong/cones.hpp"

#include <sstream>

namespace pingpong {

namespace {

Rat bilinear(const Vec& x, const Mat& a, const Vec& y) {
  const Vec ay = a * y;
  Rat acc;
  for (int i = 0; i < x.dim(); ++i) acc += x[i] * ay[i];
  return acc;
}

bool is_rational_square(const Rat& q, Rat& root) {
  if (q.sign() < 0) return false;
  const BigInt n = q.num(), d = q.den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  root = Rat(sqrt(n), sqrt(d));
  return true;
}

Sign sign_of(const Rat& r) {
  const int s = r.sign();
  return s < 0 ? Sign::Neg : (s > 0 ? Sign::Pos : Sign::Zero);
}

}  // namespace

Vec compute_special_vector(const GroupGens& gens) {
  if (gens.dim != 4) throw DegenerateQuadratic("special vector is defined in dimension 4 only");
  const Mat P = nilpotent_log(gens.U);
  const Mat JP = gens.J * P;
  Vec e2(4), e3(4);
  e2[1] = 1;
  e3[2] = 1;
  // w = s e2 + t e3:  w^T J P w = a s^2 + b s t + c t^2
  const Rat a = bilinear(e2, JP, e2);
  const Rat b = bilinear(e2, JP, e3) + bilinear(e3, JP, e2);
  const Rat c = bilinear(e3, JP, e3);
  const Rat disc = b * b - Rat(4) * a * c;
  Rat root;
  if ((a.is_zero() && b.is_zero() && c.is_zero()) || disc.is_zero() || !is_rational_square(disc, root)) {
    throw DegenerateQuadratic("v^T J P v = 0 does not have two distinct rational roots on V");
  }
  if (!c.is_zero()) throw DegenerateQuadratic("e3 is not a root of v^T J P v = 0");
  // roots: s = 0 (that is e3) and a s + b t = 0
  if (b.is_zero()) throw DegenerateQuadratic("second root coincides with e3");
  Vec v(4);
  v[1] = 1;
  v[2] = -a / b;
  return v;
}

ConePair build_cones(const GroupGens& gens) {
  ConePair cp;
  const int n = gens.dim;
  cp.P = nilpotent_log(gens.U);
  cp.Q = nilpotent_log(gens.T * gens.R.inverse());
  if (n == 4) {
    cp.v = compute_special_vector(gens);
  } else {
    cp.v = Vec(n);
    cp.v[0] = 1;
  }
  std::vector<Vec> mcols, ncols;
  Vec pv = cp.v, qv = cp.v;
  for (int i = 0; i < n; ++i) {
    mcols.push_back(pv);
    ncols.push_back(qv);
    pv = cp.P * pv;
    qv = cp.Q * qv;
  }
  cp.M = Mat::from_columns(mcols);
  cp.N = Mat::from_columns(ncols);
  cp.M_inv = cp.M.inverse();
  cp.N_inv = cp.N.inverse();
  return cp;
}

std::string to_string(SignVerdict v) {
  switch (v) {
    case SignVerdict::AllNonneg:
      return "AllNonneg";
    case SignVerdict::AllNonpos:
      return "AllNonpos";
    case SignVerdict::RowSplit:
      return "RowSplit";
    case SignVerdict::Indefinite:
      return "Indefinite";
  }
  return "?";
}

SignVerdict verdict_from_rows(const std::vector<bool>& nonneg, const std::vector<bool>& nonpos) {
  bool all_nonneg = true, all_nonpos = true, every_row_signed = true, any_nonneg = false, any_nonpos = false;
  for (std::size_t r = 0; r < nonneg.size(); ++r) {
    all_nonneg = all_nonneg && nonneg[r];
    all_nonpos = all_nonpos && nonpos[r];
    every_row_signed = every_row_signed && (nonneg[r] || nonpos[r]);
    any_nonneg = any_nonneg || nonneg[r];
    any_nonpos = any_nonpos || nonpos[r];
  }
  if (all_nonneg) return SignVerdict::AllNonneg;
  if (all_nonpos) return SignVerdict::AllNonpos;
  if (every_row_signed && any_nonneg && any_nonpos) return SignVerdict::RowSplit;
  return SignVerdict::Indefinite;
}

std::vector<int> SignPattern::ambiguous_rows() const {
  std::vector<int> out;
  for (int r = 0; r < dim; ++r) {
    if (nonneg_rows[static_cast<std::size_t>(r)] && nonpos_rows[static_cast<std::size_t>(r)]) out.push_back(r);
  }
  return out;
}

bool SignPattern::certifies_disjoint() const {
  bool any_nonneg = false, any_nonpos = false;
  for (int r = 0; r < dim; ++r) {
    any_nonneg = any_nonneg || nonneg_rows[static_cast<std::size_t>(r)];
    any_nonpos = any_nonpos || nonpos_rows[static_cast<std::size_t>(r)];
  }
  return any_nonneg && any_nonpos;
}

std::string SignPattern::describe() const {
  std::ostringstream os;
  os << to_string(verdict);
  if (verdict == SignVerdict::RowSplit || verdict == SignVerdict::Indefinite) {
    auto list = [this](const std::vector<bool>& flags) {
      std::string s = "{";
      bool first = true;
      for (int r = 0; r < dim; ++r) {
        if (!flags[static_cast<std::size_t>(r)]) continue;
        if (!first) s += ',';
        s += std::to_string(r + 1);
        first = false;
      }
      return s + "}";
    };
    os << "(+" << list(nonneg_rows) << " -" << list(nonpos_rows) << ")";
  }
  return os.str();
}

namespace {

SignPattern pattern_from_signs(int dim, std::vector<Sign> signs) {
  SignPattern sp;
  sp.dim = dim;
  sp.signs = std::move(signs);
  sp.nonneg_rows.assign(static_cast<std::size_t>(dim), true);
  sp.nonpos_rows.assign(static_cast<std::size_t>(dim), true);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      const Sign s = sp.at(r, c);
      if (s == Sign::Neg) sp.nonneg_rows[static_cast<std::size_t>(r)] = false;
      if (s == Sign::Pos) sp.nonpos_rows[static_cast<std::size_t>(r)] = false;
    }
  }
  sp.verdict = verdict_from_rows(sp.nonneg_rows, sp.nonpos_rows);
  return sp;
}

}  // namespace

SignPattern classify_sign(const Mat& a) {
  std::vector<Sign> signs;
  signs.reserve(a.entries().size());
  for (const auto& e : a.entries()) signs.push_back(sign_of(e));
  return pattern_from_signs(a.dim(), std::move(signs));
}

std::string to_string(Branch b) {
  switch (b) {
    case Branch::NonNeg:
      return "n>=0";
    case Branch::Pos:
      return "n>=1";
    case Branch::NonPos:
      return "n<=0";
    case Branch::Neg:
      return "n<=-1";
  }
  return "?";
}

int direction(Branch b) { return (b == Branch::NonNeg || b == Branch::Pos) ? 1 : -1; }

long first_magnitude(Branch b) { return (b == Branch::Pos || b == Branch::Neg) ? 1 : 0; }

bool in_branch(Branch b, long n) {
  const long signed_n = direction(b) * n;
  return signed_n >= first_magnitude(b);
}

BranchSign matpoly_sign_over_branch(const MatPoly& f, Branch branch) {
  const int dim = f.dim();
  const int dir = direction(branch);
  BranchSign out;

  std::vector<Sign> eventual;
  eventual.reserve(static_cast<std::size_t>(dim * dim));
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      const RatPoly p = f.entry(r, c);
      if (p.is_zero()) {
        eventual.push_back(Sign::Zero);
        continue;
      }
      const int lead = p.degree();
      const int parity = (dir < 0 && lead % 2 == 1) ? -1 : 1;
      eventual.push_back(sign_of(p.leading() * Rat(parity)));
      if (lead == 0) continue;
      Rat lower;
      for (int m = 0; m < lead; ++m) lower += p.coeff(m).abs();
      const BigInt bound = BigInt(1) + (lower / p.leading().abs()).ceil();
      if (!bound.fits_slong_p()) throw Error("dominance threshold overflows");
      out.threshold = std::max(out.threshold, bound.get_si());
    }
  }
  out.leading = pattern_from_signs(dim, std::move(eventual));

  std::vector<bool> nonneg = out.leading.nonneg_rows;
  std::vector<bool> nonpos = out.leading.nonpos_rows;
  for (long mag = first_magnitude(branch); mag < out.threshold; ++mag) {
    const long n = dir * mag;
    out.checked.push_back(n);
    const SignPattern at_n = classify_sign(matpoly_eval(f, n));
    for (std::size_t r = 0; r < nonneg.size(); ++r) {
      nonneg[r] = nonneg[r] && at_n.nonneg_rows[r];
      nonpos[r] = nonpos[r] && at_n.nonpos_rows[r];
    }
  }
  out.overall = out.leading;
  out.overall.nonneg_rows = nonneg;
  out.overall.nonpos_rows = nonpos;
  out.overall.verdict = verdict_from_rows(nonneg, nonpos);
  return out;
}

}  // namespace pingpong
