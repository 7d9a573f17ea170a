#include "sdspectra/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "sdspectra/error.hpp"

namespace sdspectra {

namespace {

// Householder tridiagonalization. On exit V holds the orthogonal transform
// (when accumulate), d the diagonal and e the subdiagonal in e[1..n-1].
void tred2(Eigen::MatrixXd& V, Eigen::VectorXd& d, Eigen::VectorXd& e) {
  const int n = int(V.rows());
  for (int j = 0; j < n; ++j) d[j] = V(n - 1, j);

  for (int i = n - 1; i > 0; --i) {
    double scale = 0.0;
    double h = 0.0;
    for (int k = 0; k < i; ++k) scale += std::abs(d[k]);
    if (scale == 0.0) {
      e[i] = d[i - 1];
      for (int j = 0; j < i; ++j) {
        d[j] = V(i - 1, j);
        V(i, j) = 0.0;
        V(j, i) = 0.0;
      }
    } else {
      for (int k = 0; k < i; ++k) {
        d[k] /= scale;
        h += d[k] * d[k];
      }
      double f = d[i - 1];
      double g = std::sqrt(h);
      if (f > 0) g = -g;
      e[i] = scale * g;
      h -= f * g;
      d[i - 1] = f - g;
      for (int j = 0; j < i; ++j) e[j] = 0.0;

      for (int j = 0; j < i; ++j) {
        f = d[j];
        V(j, i) = f;
        g = e[j] + V(j, j) * f;
        for (int k = j + 1; k <= i - 1; ++k) {
          g += V(k, j) * d[k];
          e[k] += V(k, j) * f;
        }
        e[j] = g;
      }
      f = 0.0;
      for (int j = 0; j < i; ++j) {
        e[j] /= h;
        f += e[j] * d[j];
      }
      const double hh = f / (h + h);
      for (int j = 0; j < i; ++j) e[j] -= hh * d[j];
      for (int j = 0; j < i; ++j) {
        f = d[j];
        g = e[j];
        double* col = V.col(j).data();
        for (int k = j; k <= i - 1; ++k) col[k] -= (f * e[k] + g * d[k]);
        d[j] = V(i - 1, j);
        V(i, j) = 0.0;
      }
    }
    d[i] = h;
  }

  // accumulate transformations
  for (int i = 0; i < n - 1; ++i) {
    V(n - 1, i) = V(i, i);
    V(i, i) = 1.0;
    const double h = d[i + 1];
    if (h != 0.0) {
      for (int k = 0; k <= i; ++k) d[k] = V(k, i + 1) / h;
      for (int j = 0; j <= i; ++j) {
        double g = 0.0;
        const double* cj = V.col(j).data();
        const double* ci = V.col(i + 1).data();
        for (int k = 0; k <= i; ++k) g += ci[k] * cj[k];
        double* wj = V.col(j).data();
        for (int k = 0; k <= i; ++k) wj[k] -= g * d[k];
      }
    }
    for (int k = 0; k <= i; ++k) V(k, i + 1) = 0.0;
  }
  for (int j = 0; j < n; ++j) {
    d[j] = V(n - 1, j);
    V(n - 1, j) = 0.0;
  }
  V(n - 1, n - 1) = 1.0;
  e[0] = 0.0;
}

// Implicit QL on the tridiagonal (d, e); rotations applied to the columns of V.
void tql2(Eigen::MatrixXd& V, Eigen::VectorXd& d, Eigen::VectorXd& e, bool vectors, int max_iter) {
  const int n = int(d.size());
  for (int i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;

  double f = 0.0;
  double tst1 = 0.0;
  const double eps = std::ldexp(1.0, -52);
  for (int l = 0; l < n; ++l) {
    tst1 = std::max(tst1, std::abs(d[l]) + std::abs(e[l]));
    int m = l;
    while (m < n) {
      if (std::abs(e[m]) <= eps * tst1) break;
      ++m;
    }
    if (m == n) m = n - 1;

    if (m > l) {
      int iter = 0;
      do {
        if (++iter > max_iter) throw ConvergenceError("QL iteration cap exceeded at eigenvalue index " + std::to_string(l), l);
        double g = d[l];
        double p = (d[l + 1] - g) / (2.0 * e[l]);
        double r = std::hypot(p, 1.0);
        if (p < 0) r = -r;
        d[l] = e[l] / (p + r);
        d[l + 1] = e[l] * (p + r);
        const double dl1 = d[l + 1];
        double h = g - d[l];
        for (int i = l + 2; i < n; ++i) d[i] -= h;
        f += h;

        p = d[m];
        double c = 1.0, c2 = c, c3 = c;
        const double el1 = e[l + 1];
        double s = 0.0, s2 = 0.0;
        for (int i = m - 1; i >= l; --i) {
          c3 = c2;
          c2 = c;
          s2 = s;
          g = c * e[i];
          h = c * p;
          r = std::hypot(p, e[i]);
          e[i + 1] = s * r;
          s = e[i] / r;
          c = p / r;
          p = c * d[i] - s * g;
          d[i + 1] = h + s * (c * g + s * d[i]);
          if (vectors) {
            double* a = V.col(i).data();
            double* b = V.col(i + 1).data();
            for (int k = 0; k < n; ++k) {
              const double t = b[k];
              b[k] = s * a[k] + c * t;
              a[k] = c * a[k] - s * t;
            }
          }
        }
        p = -s * s2 * c3 * el1 * e[l] / dl1;
        e[l] = s * p;
        d[l] = c * p;
      } while (std::abs(e[l]) > eps * tst1);
    }
    d[l] += f;
    e[l] = 0.0;
  }
}

}  // namespace

SymmetricEigen symmetric_eigen(const Eigen::MatrixXd& a, bool want_vectors, int max_iter) {
  const int n = int(a.rows());
  if (n < 1 || a.cols() != n) throw PreconditionError("symmetric_eigen needs a square non-empty matrix");
  Eigen::MatrixXd V = a;
  Eigen::VectorXd d(n), e(n);
  tred2(V, d, e);
  tql2(V, d, e, want_vectors, max_iter);

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return d[x] < d[y]; });
  SymmetricEigen out;
  out.values.resize(n);
  for (int i = 0; i < n; ++i) out.values[i] = d[order[i]];
  if (want_vectors) {
    out.vectors.resize(n, n);
    for (int i = 0; i < n; ++i) out.vectors.col(i) = V.col(order[i]);
  }
  return out;
}

namespace {

double abs2(double x) { return x * x; }
double abs2(cplx x) { return std::norm(x); }
double conj_(double x) { return x; }
cplx conj_(cplx x) { return std::conj(x); }

template <class Scalar>
JacobiSVD<Scalar> jacobi_impl(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a, int max_sweeps) {
  using M = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Eigen::Index m = a.rows();
  const Eigen::Index n = a.cols();
  M W = a;
  M V = M::Identity(n, n);
  const double tol = 1e-15;
  JacobiSVD<Scalar> out;
  bool rotated = true;
  while (rotated) {
    if (out.sweeps >= max_sweeps) throw ConvergenceError("Jacobi SVD did not converge", out.sweeps);
    ++out.sweeps;
    rotated = false;
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        double alpha = 0.0, beta = 0.0;
        Scalar gamma = 0.0;
        for (Eigen::Index k = 0; k < m; ++k) {
          alpha += abs2(W(k, p));
          beta += abs2(W(k, q));
          gamma += conj_(W(k, p)) * W(k, q);
        }
        const double g = std::abs(gamma);
        if (g == 0.0 || g <= tol * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const Scalar phase = gamma / g;
        const double zeta = (beta - alpha) / (2.0 * g);
        const double t = (zeta >= 0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        auto rot = [&](M& X) {
          for (Eigen::Index k = 0; k < X.rows(); ++k) {
            const Scalar xp = X(k, p);
            const Scalar xq = X(k, q);
            X(k, p) = c * xp - s * conj_(phase) * xq;
            X(k, q) = s * phase * xp + c * xq;
          }
        };
        rot(W);
        rot(V);
      }
    }
  }

  std::vector<double> norms(n);
  for (Eigen::Index j = 0; j < n; ++j) norms[j] = W.col(j).norm();
  std::vector<Eigen::Index> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return norms[x] > norms[y]; });
  out.sigma.resize(n);
  out.U = M::Zero(m, n);
  out.V.resize(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const auto o = order[j];
    out.sigma[j] = norms[o];
    if (norms[o] > 0) out.U.col(j) = W.col(o) / norms[o];
    out.V.col(j) = V.col(o);
  }
  return out;
}

}  // namespace

JacobiSVD<double> jacobi_svd(const Eigen::MatrixXd& a, int max_sweeps) { return jacobi_impl<double>(a, max_sweeps); }
JacobiSVD<cplx> jacobi_svd(const CMat& a, int max_sweeps) { return jacobi_impl<cplx>(a, max_sweeps); }

}  // namespace sdspectra
