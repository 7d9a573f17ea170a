#include "sdspectra/recurrence.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include "sdspectra/error.hpp"

namespace sdspectra {

namespace {

double sgn_pow(int e) { return (e % 2 == 0) ? 1.0 : -1.0; }

cplx cpow_int(cplx x, int e) {
  if (e < 0) return 1.0 / cpow_int(x, -e);
  cplx out = 1.0, b = x;
  while (e) {
    if (e & 1) out *= b;
    b *= b;
    e >>= 1;
  }
  return out;
}

}  // namespace

ExtendedSequence ExtendedSequence::extended_to(int new_lo, int new_hi) const {
  ExtendedSequence out = *this;
  if (new_hi > hi()) {
    for (int i = hi() + 1; i <= new_hi; ++i) {
      // v_i = (-1)^r lambda v_{i-r} - sum_{k<2r} (-1)^k C(2r,k) v_{i-2r+k}
      double acc = sgn_pow(r) * lambda * out.at(i - r);
      for (int k = 0; k < 2 * r; ++k) acc -= sgn_pow(k) * double(binom(2 * r, k)) * out.at(i - 2 * r + k);
      out.values.push_back(acc);
    }
  }
  if (new_lo < lo) {
    std::vector<double> front;
    ExtendedSequence tmp = out;
    for (int i = lo - 1; i >= new_lo; --i) {
      double acc = sgn_pow(r) * lambda * tmp.at(i + r);
      for (int k = 1; k <= 2 * r; ++k) acc -= sgn_pow(k) * double(binom(2 * r, k)) * tmp.at(i + k);
      tmp.values.insert(tmp.values.begin(), acc);
      tmp.lo = i;
    }
    out = std::move(tmp);
  }
  return out;
}

ExtendedSequence extend_sequence(const Vec& v, double lambda, int r) {
  const int n = int(v.size());
  if (r < 1 || 2 * r >= n) throw PreconditionError("extend_sequence needs 1 <= r < n/2");
  const Vec gv = apply_DrT(apply_Dr(v, r), r);
  const double lam1_bound = std::pow(2.0 * std::cos(std::acos(-1.0) / (2.0 * n + 1.0)), 2 * r);
  const double res = (gv - lambda * v).norm();
  if (res > 1e-8 * lam1_bound)
    throw PreconditionError("extend_sequence: eigenpair residual " + std::to_string(res) + " too large");

  ExtendedSequence s;
  s.n = n;
  s.r = r;
  s.lambda = lambda;
  s.lo = 1 - r;
  s.values.assign(std::size_t(n + 2 * r), 0.0);
  for (int i = 1; i <= n; ++i) s.values[std::size_t(i - s.lo)] = v[i - 1];
  // sum_{k=0}^r (-1)^k C(r,k) v_{i-k} = 0 for i = N+1..N+r; unit leading coefficient
  for (int i = n + 1; i <= n + r; ++i) {
    double acc = 0.0;
    for (int k = 1; k <= r; ++k) acc -= sgn_pow(k) * double(binom(r, k)) * s.at(i - k);
    s.values[std::size_t(i - s.lo)] = acc;
  }
  return s;
}

double check_recurrence(const ExtendedSequence& seq) {
  const int r = seq.r;
  double worst = 0.0;
  for (int i = seq.lo + r; i <= seq.hi() - r; ++i) {
    double acc = -seq.lambda * seq.at(i);
    for (int k = 0; k <= 2 * r; ++k) acc += sgn_pow(k + r) * double(binom(2 * r, k)) * seq.at(i - r + k);
    worst = std::max(worst, std::abs(acc));
  }
  return worst;
}

BoundaryMatrix boundary_matrix(const RootSet& rs, int n, bool binomial_rows) {
  const int r = rs.r;
  if (rs.min_separation < 1e-8) throw ConditioningError("boundary_matrix: roots closer than 1e-8");
  const int m = 2 * r;
  BoundaryMatrix bm;
  bm.a.resize(m, m);
  bm.shift.resize(std::size_t(m));
  for (int l = 0; l < m; ++l) {
    const cplx rho = rs.roots[std::size_t(l)].value;
    const int sh = std::abs(rho) > 1.0 + 1e-12 ? n : 0;
    bm.shift[std::size_t(l)] = sh;
    const cplx rm1 = rho - 1.0;
    for (int t = 0; t < r; ++t) {
      if (binomial_rows) {
        bm.a(t, l) = cpow_int(rho, 1 - r - sh) * cpow_int(rm1, t);
        bm.a(r + t, l) = cpow_int(rho, n + 1 - r - sh) * cpow_int(rm1, r + t);
      } else {
        const int i = 1 - r + t;      // left conditions, i = 1-r..0
        const int k = n + 1 + t;      // right conditions, k = N+1..N+r
        bm.a(t, l) = cpow_int(rho, i - sh);
        bm.a(r + t, l) = cpow_int(rho, k - r - sh) * cpow_int(rm1, r);
      }
    }
  }
  for (int t = 0; t < m; ++t) {
    const double nrm = bm.a.row(t).norm();
    if (nrm > 0) bm.a.row(t) /= nrm;
  }
  return bm;
}

BoundaryMatrix boundary_matrix(double lambda, int r, int n, bool binomial_rows) {
  return boundary_matrix(roots_for(lambda, r), n, binomial_rows);
}

cplx CoefficientSet::coeff(int l) const {
  return scaled[l] * cpow_int(roots.roots[std::size_t(l)].value, -shift[std::size_t(l)]);
}

double CoefficientSet::max_abs_coeff() const {
  double mx = 0;
  for (int l = 0; l < 2 * r; ++l) mx = std::max(mx, std::abs(coeff(l)));
  return mx;
}

cplx eval_formula_complex(const CoefficientSet& cs, int i) {
  cplx acc = 0.0;
  for (int l = 0; l < 2 * cs.r; ++l) acc += cs.scaled[l] * cpow_int(cs.roots.roots[std::size_t(l)].value, i - cs.shift[std::size_t(l)]);
  return acc;
}

double eval_formula(const CoefficientSet& cs, int i) {
  const cplx z = eval_formula_complex(cs, i);
  // The scaled coefficients carry the size of every term on [1-r, N+r], so they set the scale.
  const double scale = std::max(cs.scaled.cwiseAbs().maxCoeff(), 1e-300);
  if (std::abs(z.imag()) > 1e-8 * scale)
    throw ConditioningError("eval_formula: imaginary part " + std::to_string(z.imag()) + " at i=" + std::to_string(i));
  return z.real();
}

double eval_real_representation(const CoefficientSet& cs, int i) {
  const int r = cs.r;
  double acc = 0.0;
  auto term = [&](int k, int ell, double weight) {
    const int l = 2 * k + ell;
    const cplx rho = cs.roots.roots[std::size_t(l)].value;
    const cplx d = cs.scaled[l];
    const int e = i - cs.shift[std::size_t(l)];
    // c rho^i = d rho^{i-shift}; fold the shift into the phase.
    acc += weight * std::abs(d) * std::pow(std::abs(rho), e) * std::cos(e * std::arg(rho) + std::arg(d));
  };
  term(0, 0, 2.0);
  for (int ell = 0; ell < 2; ++ell)
    for (int k = 1; 2 * k <= r; ++k) term(k, ell, (r % 2 == 0 && 2 * k == r) ? 1.0 : 2.0);
  return acc;
}

double conjugacy_error(const CoefficientSet& cs) {
  const int r = cs.r;
  const double scale = cs.max_abs_coeff();
  double worst = std::abs(cs.coeff(1) - std::conj(cs.coeff(0)));
  for (int k = 1; k < r; ++k)
    for (int ell = 0; ell < 2; ++ell) worst = std::max(worst, std::abs(cs.coeff(2 * k + ell) - std::conj(cs.coeff(2 * (r - k) + ell))));
  return scale > 0 ? worst / scale : worst;
}

Vec reconstruct(const CoefficientSet& cs) {
  Vec v(cs.n);
  for (int i = 1; i <= cs.n; ++i) v[i - 1] = eval_formula(cs, i);
  return v;
}

CoefficientSet solve_coeffs(double lambda, int r, int n, bool binomial_rows) {
  CoefficientSet cs;
  cs.lambda = lambda;
  cs.r = r;
  cs.n = n;
  cs.roots = roots_for(lambda, r);
  BoundaryMatrix bm = boundary_matrix(cs.roots, n, binomial_rows);
  cs.shift = bm.shift;
  const auto svd = jacobi_svd(bm.a);
  const int m = 2 * r;
  cs.residual = svd.sigma[m - 1];
  cs.residual_rel = svd.sigma[m - 1] / svd.sigma[0];
  cs.second_rel = svd.sigma[m - 2] / svd.sigma[0];
  cs.multiple = cs.second_rel <= 1e-6;
  if (cs.multiple)
    throw ConditioningError("solve_coeffs: boundary nullspace looks at least two-dimensional at lambda=" + std::to_string(lambda));
  cs.scaled = svd.V.col(m - 1);

  // phase: make the largest entry of the reconstruction real
  std::vector<cplx> z(static_cast<std::size_t>(n));
  std::size_t imax = 0;
  for (int i = 1; i <= n; ++i) {
    z[std::size_t(i - 1)] = eval_formula_complex(cs, i);
    if (std::abs(z[std::size_t(i - 1)]) > std::abs(z[imax])) imax = std::size_t(i - 1);
  }
  const cplx ph = std::conj(z[imax]) / std::abs(z[imax]);
  double nrm2 = 0.0;
  for (auto& zi : z) nrm2 += std::norm(zi * ph);
  cs.scaled *= ph / std::sqrt(nrm2);

  double mx = 0.0;
  for (int i = 1; i <= n; ++i) mx = std::max(mx, std::abs(eval_formula_complex(cs, i).real()));
  for (int i = 1; i <= n; ++i) {
    const double vi = eval_formula_complex(cs, i).real();
    if (std::abs(vi) >= (1.0 - 1e-9) * mx) {
      if (vi < 0) cs.scaled = -cs.scaled;
      break;
    }
  }
  return cs;
}

std::vector<ScanPoint> secular_scan(int r, int n, const std::vector<double>& grid) {
  std::vector<ScanPoint> out;
  out.reserve(grid.size());
  for (double lam : grid) {
    const BoundaryMatrix bm = boundary_matrix(lam, r, n);
    const auto svd = jacobi_svd(bm.a);
    out.push_back({lam, svd.sigma[2 * r - 1] / svd.sigma[0]});
  }
  return out;
}

std::vector<std::size_t> scan_minima(const std::vector<ScanPoint>& scan) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 1; i + 1 < scan.size(); ++i)
    if (scan[i].sigma_min < scan[i - 1].sigma_min && scan[i].sigma_min < scan[i + 1].sigma_min) idx.push_back(i);
  return idx;
}

void write_reconstruction_csv(std::ostream& os, const std::vector<ReconstructionRow>& rows) {
  const auto prec = os.precision(17);
  os << "j,lambda,residual,max_diff,conjugacy_err\n";
  for (const auto& row : rows)
    os << row.j << ',' << row.lambda << ',' << row.residual << ',' << row.max_diff << ',' << row.conjugacy_err << '\n';
  os.precision(prec);
}

}  // namespace sdspectra
