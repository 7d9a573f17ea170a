#include "sdspectra/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>
#include <string>

#include "sdspectra/error.hpp"
#include "sdspectra/linalg.hpp"

namespace sdspectra {

namespace {

struct Spectrum {
  Vec lambda;  // descending
  Mat vecs;
};

// Eigenpairs of A, descending. If ainv is given, pairs with lambda below the
// geometric midpoint of the spectrum come from ainv (as 1/mu) instead.
Spectrum hybrid_eigen(const Mat& a, const Mat* ainv) {
  const int n = int(a.rows());
  auto top = symmetric_eigen(a);
  Spectrum s;
  s.lambda = top.values.reverse();
  s.vecs = top.vectors.rowwise().reverse();
  if (!ainv) return s;

  auto bot = symmetric_eigen(*ainv);  // ascending mu <-> descending lambda
  const double lam_min = 1.0 / bot.values[n - 1];
  const double cross = std::sqrt(s.lambda[0] * lam_min);
  for (int j = 0; j < n; ++j) {
    if (s.lambda[j] >= cross) continue;
    s.lambda[j] = 1.0 / bot.values[j];
    s.vecs.col(j) = bot.vectors.col(j);
  }

  // One modified Gram-Schmidt pass, most trustworthy vectors first.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  const double lc = std::log(cross);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return std::abs(std::log(s.lambda[x]) - lc) > std::abs(std::log(s.lambda[y]) - lc);
  });
  for (int a_ = 0; a_ < n; ++a_) {
    auto col = s.vecs.col(order[a_]);
    for (int b = 0; b < a_; ++b) {
      auto prev = s.vecs.col(order[b]);
      col -= prev.dot(col) * prev;
    }
    col.normalize();
  }
  return s;
}

void fix_sign_largest_positive(Eigen::Ref<Vec> v) {
  const double mx = v.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) >= (1.0 - 1e-9) * mx) {
      if (v[i] < 0) v = -v;
      return;
    }
  }
}

}  // namespace

SpectralDecomposition eigh_gram(int n, int r, const SpectralOptions& opt) {
  if (n < 2) throw PreconditionError("eigh_gram needs n >= 2");
  if (r < 1 || 2 * r >= n) throw PreconditionError("eigh_gram needs 1 <= r < n/2");
  if (n > opt.max_n) throw PreconditionError("eigh_gram: n=" + std::to_string(n) + " exceeds max_n=" + std::to_string(opt.max_n));

  const Mat G = build_gram(n, r).to_dense();
  Mat P;
  Mat Ginv;
  if (opt.inverse_refinement) {
    P = dense_Dinv_r(n, r);
    Ginv.noalias() = P.triangularView<Eigen::Lower>() * P.transpose();
  }
  Spectrum right = hybrid_eigen(G, opt.inverse_refinement ? &Ginv : nullptr);

  SpectralDecomposition d;
  d.n = n;
  d.r = r;
  d.lambda = right.lambda.cwiseMax(0.0);
  d.sigma = d.lambda.cwiseSqrt();
  d.V = std::move(right.vecs);
  for (int j = 0; j < n; ++j) fix_sign_largest_positive(d.V.col(j));

  if (opt.compute_left) {
    const Mat Dr = dense_Dr(n, r);
    const Mat K = Dr * Dr.transpose();
    Mat Kinv;
    if (opt.inverse_refinement) Kinv.noalias() = P.transpose() * P.triangularView<Eigen::Lower>();
    Spectrum left = hybrid_eigen(K, opt.inverse_refinement ? &Kinv : nullptr);
    d.U = std::move(left.vecs);
    for (int j = 0; j < n; ++j) {
      const Vec w = apply_Dr(Vec(d.V.col(j)), r);
      if (d.U.col(j).dot(w) < 0) d.U.col(j) *= -1.0;
    }
  }
  return d;
}

double sigma_min_D(int n) {
  SpectralOptions opt;
  opt.compute_left = false;
  opt.max_n = std::max(opt.max_n, n);
  return eigh_gram(n, 1, opt).sigma[n - 1];
}

std::pair<int, int> middle_decade(int n) {
  const double c = std::sqrt(double(n));
  int lo = int(std::ceil(c / std::sqrt(10.0)));
  int hi = int(std::floor(c * std::sqrt(10.0)));
  lo = std::max(lo, 1);
  hi = std::min(hi, n);
  return {lo, hi};
}

double sigma_decay_slope(const SpectralDecomposition& d, int j_lo, int j_hi) {
  if (j_lo < 1 || j_hi > d.n || j_hi <= j_lo) throw PreconditionError("sigma_decay_slope: bad j range");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int cnt = 0;
  for (int j = j_lo; j <= j_hi; ++j) {
    const double sig = d.sigma[d.n - j];  // sigma_{N-j+1}
    if (sig < 1e-12) continue;
    const double x = std::log(double(j) / d.n);
    const double y = std::log(sig);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++cnt;
  }
  if (cnt < 2) throw ConditioningError("sigma_decay_slope: fewer than two usable singular values");
  return (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
}

SigmaBoundsReport check_sigma_bounds(const SpectralDecomposition& d) {
  SigmaBoundsReport rep;
  const double pi = std::acos(-1.0);
  rep.sigma1 = d.sigma[0];
  rep.upper = std::pow(2.0 * std::cos(pi / (2.0 * d.n + 1.0)), d.r);
  // r = 1 attains the bound exactly (2cos(pi/(2N+1)) is the top singular value of D)
  rep.upper_ok = d.r == 1 ? rep.sigma1 <= rep.upper * (1.0 + 1e-14) : rep.sigma1 < rep.upper;
  rep.positive_ok = d.sigma[d.n - 1] > 0;
  rep.ratios.resize(d.n);
  for (int j = 1; j <= d.n; ++j) {
    const double sig = d.sigma[d.n - j];
    rep.ratios[j - 1] = sig >= 1e-12 ? sig / std::pow(double(j) / d.n, d.r) : std::numeric_limits<double>::quiet_NaN();
  }
  std::tie(rep.j_lo, rep.j_hi) = middle_decade(d.n);
  if (rep.j_hi > rep.j_lo) rep.slope = sigma_decay_slope(d, rep.j_lo, rep.j_hi);
  return rep;
}

FlatnessReport flatness(const SpectralDecomposition& d) {
  FlatnessReport f;
  f.n = d.n;
  f.r = d.r;
  f.v_inf.resize(d.n);
  double mx = 0;
  for (int j = 0; j < d.n; ++j) {
    f.v_inf[j] = d.V.col(j).cwiseAbs().maxCoeff();
    mx = std::max(mx, f.v_inf[j]);
  }
  f.s = std::sqrt(double(d.n)) * mx;
  return f;
}

ReversalReport check_reversal(const SpectralDecomposition& d, double norm_tol, double vec_tol) {
  if (d.U.cols() != d.n) throw PreconditionError("check_reversal needs left singular vectors");
  ReversalReport rep;
  double worst = -1;
  for (int j = 0; j < d.n; ++j) {
    const Vec rv = reverse(Vec(d.V.col(j)));
    const double gn = std::abs(d.U.col(j).cwiseAbs().maxCoeff() - rv.cwiseAbs().maxCoeff());
    const double gv = std::min((d.U.col(j) - rv).cwiseAbs().maxCoeff(), (d.U.col(j) + rv).cwiseAbs().maxCoeff());
    rep.max_norm_gap = std::max(rep.max_norm_gap, gn);
    rep.max_vector_gap = std::max(rep.max_vector_gap, gv);
    const double score = std::max(gn / norm_tol, gv / vec_tol);
    if (score > worst) {
      worst = score;
      rep.worst_j = j + 1;
    }
  }
  rep.passed = rep.max_norm_gap <= norm_tol && rep.max_vector_gap <= vec_tol;
  return rep;
}

DynamicalBound dynamical_bound(const SpectralDecomposition& d, int j, double alpha, double sigma_n_D, double slack) {
  if (j < 1 || j > d.n) throw PreconditionError("dynamical_bound: index out of range");
  const double lhs = std::pow(d.sigma[j - 1], 1.0 / d.r);
  if (lhs > alpha * sigma_n_D * (1.0 + slack))
    throw PreconditionError("dynamical_bound: sigma_j^{1/r} exceeds alpha * sigma_N(D) at j=" + std::to_string(j));
  DynamicalBound b;
  b.bound = std::pow(alpha, d.r) * sigma_n_D * std::sqrt(double(d.n));
  b.v_inf = d.V.col(j - 1).cwiseAbs().maxCoeff();
  b.holds = b.v_inf <= b.bound * (1.0 + slack);
  return b;
}

void write_spectrum_csv(std::ostream& os, const SpectralDecomposition& d) {
  const auto prec = os.precision(17);
  os << "j,sigma,lambda,v_inf_norm,u_inf_norm\n";
  for (int j = 0; j < d.n; ++j) {
    os << j + 1 << ',' << d.sigma[j] << ',' << d.lambda[j] << ',' << d.V.col(j).cwiseAbs().maxCoeff() << ',';
    if (d.U.cols() == d.n) os << d.U.col(j).cwiseAbs().maxCoeff();
    os << '\n';
  }
  os.precision(prec);
}

}  // namespace sdspectra
