#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/SVD>

#include "sdspectra/diffmat.hpp"
#include "sdspectra/error.hpp"
#include "sdspectra/spectral.hpp"

using namespace sdspectra;

TEST_CASE("r = 1 singular values in closed form") {
  const double pi = std::acos(-1.0);
  for (int n : {8, 33, 128}) {
    const SpectralDecomposition d = eigh_gram(n, 1);
    for (int k = 1; k <= n; ++k) CHECK(std::abs(d.sigma[n - k] - 2.0 * std::sin((2.0 * k - 1.0) * pi / (4.0 * n + 2.0))) < 1e-13);
    CHECK(std::abs(sigma_min_D(n) - 2.0 * std::sin(pi / (4.0 * n + 2.0))) < 1e-15);
  }
}

TEST_CASE("singular triplets against a dense SVD") {
  for (int r : {2, 3, 4}) {
    const int n = 30;
    const Mat a = dense_Dr(n, r);
    Eigen::JacobiSVD<Mat> ref(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const SpectralDecomposition d = eigh_gram(n, r);
    CHECK((d.sigma - ref.singularValues()).cwiseAbs().maxCoeff() < 1e-12 * std::pow(4.0, r));
    CHECK((d.lambda - d.sigma.cwiseAbs2()).cwiseAbs().maxCoeff() < 1e-10);
    CHECK((d.V.transpose() * d.V - Mat::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((d.U.transpose() * d.U - Mat::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-12);
    for (int j = 0; j < n; ++j) {
      const Vec v = d.V.col(j), u = d.U.col(j);
      CHECK((a * v - d.sigma[j] * u).norm() < 1e-10);
      // first entry within 1e-9 of the largest magnitude is positive
      const double mx = v.cwiseAbs().maxCoeff();
      int at = 0;
      while (std::abs(v[at]) < (1.0 - 1e-9) * mx) ++at;
      CHECK(v[at] > 0);
      // each vector matches the reference up to sign
      const Vec w = ref.matrixV().col(j);
      CHECK(std::min((v - w).norm(), (v + w).norm()) < 1e-8);
    }
  }
}

TEST_CASE("small singular values keep relative accuracy") {
  const int n = 200, r = 3;
  const SpectralDecomposition d = eigh_gram(n, r);
  // sigma_N(D^r) = 1 / sigma_1(D^{-r}), computed from the dense inverse
  Eigen::JacobiSVD<Mat> inv(dense_Dinv_r(n, r));
  CHECK(std::abs(d.sigma[n - 1] * inv.singularValues()[0] - 1.0) < 1e-9);
  CHECK(d.sigma[n - 1] > 0);
}

TEST_CASE("options") {
  SpectralOptions o;
  o.compute_left = false;
  CHECK(eigh_gram(20, 2, o).U.size() == 0);
  o.max_n = 10;
  CHECK_THROWS_AS(eigh_gram(20, 2, o), PreconditionError);
  CHECK_THROWS_AS(eigh_gram(1, 1), PreconditionError);
}

TEST_CASE("bounds report") {
  const SigmaBoundsReport rep = check_sigma_bounds(eigh_gram(100, 2));
  CHECK(rep.upper_ok);
  CHECK(rep.positive_ok);
  const auto [lo, hi] = middle_decade(512);
  CHECK(lo == 8);
  CHECK(hi == 71);
}

TEST_CASE("decay slope tracks r") {
  for (int r : {1, 2}) {
    const SpectralDecomposition d = eigh_gram(256, r);
    const auto [lo, hi] = middle_decade(256);
    CHECK(std::abs(sigma_decay_slope(d, lo, hi) - r) < 0.1);
  }
}

TEST_CASE("reversal relates left and right vectors") {
  const SpectralDecomposition d = eigh_gram(48, 3);
  const ReversalReport rep = check_reversal(d);
  CHECK(rep.passed);
  CHECK(rep.max_vector_gap < 1e-6);
}

TEST_CASE("flatness of r = 1") {
  const FlatnessReport f = flatness(eigh_gram(64, 1));
  CHECK(f.v_inf.size() == 64);
  CHECK(f.s <= 2.0);
  CHECK(f.s >= 1.0);
}

TEST_CASE("dynamical bound") {
  const int n = 64;
  const SpectralDecomposition d = eigh_gram(n, 2);
  const double sn = sigma_min_D(n);
  const double alpha = std::sqrt(d.sigma[n - 1]) / sn;
  const DynamicalBound b = dynamical_bound(d, n, alpha, sn);
  CHECK(b.holds);
  CHECK(b.v_inf <= b.bound);
  CHECK_THROWS_AS(dynamical_bound(d, n, 0.5 * alpha, sn), PreconditionError);
}

TEST_CASE("spectrum csv") {
  std::ostringstream os;
  write_spectrum_csv(os, eigh_gram(6, 1));
  const std::string s = os.str();
  CHECK(s.rfind("j,sigma,lambda,v_inf_norm,u_inf_norm\n", 0) == 0);
  CHECK(std::count(s.begin(), s.end(), '\n') == 7);
}
