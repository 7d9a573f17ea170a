#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "sdspectra/error.hpp"
#include "sdspectra/vandermonde.hpp"

using namespace sdspectra;

namespace {

std::vector<cplx> spread_nodes(int n, unsigned seed) {
  std::mt19937 g(seed);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  std::vector<cplx> x;
  while (int(x.size()) < n) {
    const cplx z(u(g), u(g));
    bool ok = true;
    for (const auto& y : x) ok = ok && std::abs(y - z) >= 0.3;
    if (ok) x.push_back(z);
  }
  return x;
}

// Crout factorization A = L U, U unit upper triangular.
void crout(const CMat& a, CMat& l, CMat& u) {
  const int n = int(a.rows());
  l = CMat::Zero(n, n);
  u = CMat::Identity(n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = j; i < n; ++i) {
      cplx s = a(i, j);
      for (int k = 0; k < j; ++k) s -= l(i, k) * u(k, j);
      l(i, j) = s;
    }
    for (int i = j + 1; i < n; ++i) {
      cplx s = a(j, i);
      for (int k = 0; k < j; ++k) s -= l(j, k) * u(k, i);
      u(j, i) = s / l(j, j);
    }
  }
}

}  // namespace

TEST_CASE("vandermonde layout") {
  const CMat a = vandermonde_matrix({cplx(2, 0), cplx(0, 1)});
  CHECK(a(0, 0) == cplx(1, 0));
  CHECK(a(0, 1) == cplx(2, 0));
  CHECK(a(1, 1) == cplx(0, 1));
}

TEST_CASE("inverse factors against a Crout factorization") {
  for (int n = 1; n <= 8; ++n) {
    const auto x = spread_nodes(n, unsigned(n));
    CMat l, u;
    crout(vandermonde_matrix(x), l, u);
    CHECK((inv_L(x) - l.inverse()).cwiseAbs().maxCoeff() < 1e-9);
    CHECK((inv_U(x) - u.inverse()).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("inverse of the full matrix") {
  for (int draw = 0; draw < 40; ++draw) {
    const int n = 1 + draw % 10;
    const auto x = spread_nodes(n, 100u + unsigned(draw));
    const CMat a = vandermonde_matrix(x);
    const CMat inv = vand_inverse(x);
    CHECK((a * inv - CMat::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-8);
    CHECK((inv * a - CMat::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-8);
    CHECK((inv_U(x) - inv_U_recursive(x)).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("real nodes") {
  const std::vector<cplx> x{1.0, 2.0, 3.0};
  // inverse of [[1,1,1],[1,2,4],[1,3,9]]
  CMat want(3, 3);
  want << 3, -3, 1, -2.5, 4, -1.5, 0.5, -1, 0.5;
  CHECK((vand_inverse(x) - want).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("coincident nodes") {
  CHECK_THROWS_AS(check_nodes({cplx(1, 0), cplx(1, 1e-12)}), ConditioningError);
  CHECK_THROWS_AS(vand_inverse({cplx(0.5, 0), cplx(0.5, 0)}), ConditioningError);
  CHECK_NOTHROW(check_nodes({cplx(1, 0), cplx(1, 1e-6)}));
}
