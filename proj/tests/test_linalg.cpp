#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "sdspectra/diffmat.hpp"
#include "sdspectra/linalg.hpp"

using namespace sdspectra;

namespace {

Mat random_symmetric(int n, unsigned seed) {
  std::mt19937 g(seed);
  std::uniform_real_distribution<double> u(-1, 1);
  Mat a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) a(i, j) = a(j, i) = u(g);
  return a;
}

}  // namespace

TEST_CASE("symmetric eigensolver against a reference solver") {
  for (int n : {1, 2, 5, 17, 60}) {
    const Mat a = random_symmetric(n, 7u + unsigned(n));
    const SymmetricEigen e = symmetric_eigen(a);
    Eigen::SelfAdjointEigenSolver<Mat> ref(a);
    CHECK((e.values - ref.eigenvalues()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((a * e.vectors - e.vectors * e.values.asDiagonal()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((e.vectors.transpose() * e.vectors - Mat::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-13);
    for (int i = 1; i < n; ++i) CHECK(e.values[i - 1] <= e.values[i]);
  }
}

TEST_CASE("values only") {
  const Mat a = random_symmetric(12, 3);
  const SymmetricEigen e = symmetric_eigen(a, false);
  CHECK(e.vectors.size() == 0);
  CHECK(std::abs(e.values.sum() - a.trace()) < 1e-12);
}

TEST_CASE("first-difference gram eigenvalues in closed form") {
  const double pi = std::acos(-1.0);
  for (int n : {3, 10, 100}) {
    const Mat d = dense_D(n);
    const SymmetricEigen e = symmetric_eigen(d.transpose() * d, false);
    for (int k = 1; k <= n; ++k) {
      const double s = 2.0 * std::sin((2.0 * k - 1.0) * pi / (4.0 * n + 2.0));
      CHECK(std::abs(e.values[k - 1] - s * s) < 1e-12);
    }
  }
}

TEST_CASE("3x3 first-difference gram against the cubic formula") {
  // D^T D = [[2,-1,0],[-1,2,-1],[0,-1,1]]: characteristic polynomial t^3 - 5t^2 + 6t - 1
  const double pi = std::acos(-1.0);
  const double a = -5, b = 6, c = -1;
  const double p = b - a * a / 3, q = 2 * a * a * a / 27 - a * b / 3 + c;
  std::vector<double> roots;
  for (int k = 0; k < 3; ++k)
    roots.push_back(2 * std::sqrt(-p / 3) * std::cos(std::acos(3 * q / (2 * p) * std::sqrt(-3 / p)) / 3 - 2 * pi * k / 3) - a / 3);
  std::sort(roots.begin(), roots.end());
  const Mat d = dense_D(3);
  const SymmetricEigen e = symmetric_eigen(d.transpose() * d);
  for (int k = 0; k < 3; ++k) CHECK(std::abs(e.values[k] - roots[std::size_t(k)]) < 1e-13);
}

TEST_CASE("real Jacobi SVD") {
  std::mt19937 g(11);
  std::normal_distribution<double> nd;
  for (auto [m, n] : {std::pair{6, 6}, std::pair{9, 4}, std::pair{20, 7}}) {
    Mat a(m, n);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = nd(g);
    const auto s = jacobi_svd(a);
    Eigen::JacobiSVD<Mat> ref(a);
    CHECK((s.sigma - ref.singularValues()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((s.U * s.sigma.asDiagonal() * s.V.transpose() - a).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((s.V.transpose() * s.V - Mat::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-13);
  }
}

TEST_CASE("complex Jacobi SVD") {
  std::mt19937 g(5);
  std::normal_distribution<double> nd;
  CMat a(7, 5);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 5; ++j) a(i, j) = cplx(nd(g), nd(g));
  a.col(4) = a.col(0) + cplx(0, 2) * a.col(1);  // rank 4
  const auto s = jacobi_svd(a);
  Eigen::BDCSVD<CMat> ref(a);
  CHECK((s.sigma - ref.singularValues()).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(s.sigma[4] < 1e-13);
  CHECK((a * s.V.col(4)).norm() < 1e-12);
  CHECK((s.U * s.sigma.cast<cplx>().asDiagonal() * s.V.adjoint() - a).cwiseAbs().maxCoeff() < 1e-12);
}
