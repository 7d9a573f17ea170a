#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "sdspectra/charpoly.hpp"
#include "sdspectra/diffmat.hpp"
#include "sdspectra/error.hpp"

using namespace sdspectra;

namespace {

// Expanded polynomial evaluated term by term, independent of the library.
cplx p_oracle(cplx x, double lambda, int r) {
  cplx s = 0;
  for (int k = 0; k <= 2 * r; ++k) s += double(binom(2 * r, k)) * std::pow(-x, k);
  return s - std::pow(-1.0, r) * lambda * std::pow(x, r);
}

}  // namespace

TEST_CASE("polynomial forms agree") {
  std::mt19937 g(3);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int r = 1; r <= 6; ++r)
    for (int t = 0; t < 20; ++t) {
      const cplx x(u(g), u(g));
      const double lam = std::abs(u(g)) * std::pow(4.0, r) / 2.0;
      const cplx want = p_oracle(x, lam, r);
      const double scale = std::pow(1.0 + std::abs(x), 2 * r);
      CHECK(std::abs(eval_p(x, lam, r) - want) < 1e-12 * scale);
      CHECK(std::abs(eval_p_factored(x, lam, r) - want) < 1e-11 * scale);
    }
}

TEST_CASE("first-order roots by the quadratic formula") {
  // (1-x)^2 + lambda x = 0  <=>  x^2 - (2 - lambda) x + 1 = 0
  for (double lam : {0.01, 1.0, 3.5}) {
    const RootSet rs = roots_for(lam, 1);
    const cplx disc = std::sqrt(cplx(lam * lam - 4 * lam, 0));
    const cplx a = (2 - lam + disc) / 2.0, b = (2 - lam - disc) / 2.0;
    for (const auto& root : rs.roots) CHECK(std::min(std::abs(root.value - a), std::abs(root.value - b)) < 1e-14);
    CHECK(std::abs(rs.roots[0].value - rs.roots[1].value) > 1e-6);
  }
}

TEST_CASE("roots against companion eigenvalues") {
  for (int r = 2; r <= 6; ++r)
    for (double frac : {1e-5, 0.03, 0.5, 0.97}) {
      const double lam = frac * std::pow(4.0, r);
      const int deg = 2 * r;
      Eigen::MatrixXd c = Eigen::MatrixXd::Zero(deg, deg);
      for (int i = 1; i < deg; ++i) c(i, i - 1) = 1;
      for (int i = 0; i < deg; ++i) {
        double coef = double(binom(deg, i)) * (i % 2 ? -1.0 : 1.0);
        if (i == r) coef -= std::pow(-1.0, r) * lam;
        c(i, deg - 1) = -coef;
      }
      Eigen::EigenSolver<Eigen::MatrixXd> es(c, false);
      const RootSet rs = roots_for(lam, r);
      for (int i = 0; i < deg; ++i) {
        double best = 1e300;
        for (const auto& root : rs.roots) best = std::min(best, std::abs(root.value - es.eigenvalues()[i]));
        CHECK(best < 1e-8);
      }
    }
}

TEST_CASE("structure of the root set") {
  for (int r = 2; r <= 6; ++r)
    for (double frac : {1e-3, 0.2, 0.8}) {
      const RootSet rs = roots_for(frac * std::pow(4.0, r), r);
      REQUIRE(rs.roots.size() == std::size_t(2 * r));
      const RootInvariants inv = check_root_invariants(rs);
      CHECK(inv.passed);
      const Classification cl = classify(rs);
      CHECK(cl.consistent);
      CHECK(cl.unimodular_count == 2);
      CHECK(cl.real_count == (r % 2 == 0 ? 2 : 0));
      // inverse and conjugate pairs, checked directly
      for (const auto& root : rs.roots) {
        double inv_best = 1e300, conj_best = 1e300;
        for (const auto& other : rs.roots) {
          inv_best = std::min(inv_best, std::abs(other.value - 1.0 / root.value));
          conj_best = std::min(conj_best, std::abs(other.value - std::conj(root.value)));
        }
        CHECK(inv_best < 1e-10);
        CHECK(conj_best < 1e-10);
      }
      const SeparationStats sep = separation_stats(rs);
      CHECK(sep.positive);
      CHECK(sep.upper_ok);
      CHECK(std::abs(rs.at(0, 0).value) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("lambda range") {
  CHECK_THROWS_AS(roots_for(0.0, 2), PreconditionError);
  CHECK_THROWS_AS(roots_for(16.0, 2), PreconditionError);
  CHECK_THROWS_AS(roots_for(1.0, 0), PreconditionError);
  CHECK_NOTHROW(roots_for(1e-300, 3));
}

TEST_CASE("json listing") {
  const auto j = roots_json(roots_for(2.0, 3));
  REQUIRE(j.size() == 6);
  CHECK(j[0].contains("re"));
  CHECK(j[0].contains("class"));
}
