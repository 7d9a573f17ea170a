#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <sstream>

#include "sdspectra/diffmat.hpp"
#include "sdspectra/error.hpp"
#include "sdspectra/recurrence.hpp"
#include "sdspectra/spectral.hpp"

using namespace sdspectra;

TEST_CASE("extended sequence obeys the recurrence") {
  for (int r : {1, 2, 3}) {
    const int n = 24;
    const SpectralDecomposition d = eigh_gram(n, r);
    for (int j : {0, n / 2, n - 1}) {
      const ExtendedSequence s = extend_sequence(d.V.col(j), d.lambda[j], r);
      CHECK(s.lo == 1 - r);
      CHECK(s.hi() == n + r);
      for (int i = 1 - r; i <= 0; ++i) CHECK(s.at(i) == 0.0);
      for (int i = 1; i <= n; ++i) CHECK(s.at(i) == d.V(i - 1, j));
      CHECK(check_recurrence(s) < 1e-12 * d.lambda[0]);
      // the recurrence, written out with binomials, at every centre of the extension
      const ExtendedSequence w = s.extended_to(-10, n + 10);
      for (int i = w.lo + r; i <= w.hi() - r; ++i) {
        double acc = -d.lambda[j] * w.at(i);
        for (int k = 0; k <= 2 * r; ++k) acc += ((k + r) % 2 ? -1.0 : 1.0) * double(binom(2 * r, k)) * w.at(i - r + k);
        CHECK(std::abs(acc) < 1e-9);
      }
    }
  }
}

TEST_CASE("non-eigenvectors are rejected") {
  Vec v = Vec::Ones(20).normalized();
  CHECK_THROWS_AS(extend_sequence(v, 1.0, 2), PreconditionError);
  CHECK_THROWS_AS(extend_sequence(v, 1.0, 10), PreconditionError);
}

TEST_CASE("closed-form reconstruction") {
  for (int r : {1, 2, 3}) {
    const int n = 20;
    SpectralOptions o;
    o.compute_left = false;
    const SpectralDecomposition d = eigh_gram(n, r, o);
    for (int j = 0; j < n; ++j) {
      if (d.lambda[j] < 1e-6) continue;
      const CoefficientSet cs = solve_coeffs(d.lambda[j], r, n);
      CHECK(cs.residual_rel < 1e-10);
      CHECK_FALSE(cs.multiple);
      const Vec v = d.V.col(j);
      const Vec w = reconstruct(cs);
      CHECK(std::min((w - v).cwiseAbs().maxCoeff(), (w + v).cwiseAbs().maxCoeff()) < 1e-9);
      CHECK(std::abs(w.norm() - 1.0) < 1e-12);
      // direct sum over roots with the unscaled coefficients
      for (int i = 1; i <= n; ++i) {
        cplx acc = 0;
        for (int l = 0; l < 2 * r; ++l) acc += cs.coeff(l) * std::pow(cs.roots.roots[std::size_t(l)].value, i);
        CHECK(std::abs(acc.real() - w[i - 1]) < 1e-9);
        CHECK(std::abs(eval_real_representation(cs, i) - w[i - 1]) < 1e-9);
      }
      CHECK(conjugacy_error(cs) < 1e-8);
    }
  }
}

TEST_CASE("boundary matrix shape") {
  const BoundaryMatrix b = boundary_matrix(3.0, 2, 30);
  CHECK(b.a.rows() == 4);
  CHECK(b.a.cols() == 4);
  for (int i = 0; i < 4; ++i) CHECK(std::abs(b.a.row(i).norm() - 1.0) < 1e-14);
  const BoundaryMatrix bb = boundary_matrix(3.0, 2, 30, true);
  CHECK(bb.a.rows() == 4);
  for (int s : b.shift) CHECK((s == 0 || s == 30));
}

TEST_CASE("secular scan finds the eigenvalues") {
  const int n = 12;
  const SpectralDecomposition d = eigh_gram(n, 1);
  std::vector<double> grid;
  for (int k = 1; k < 4000; ++k) grid.push_back(4.0 * k / 4000.0);
  const auto scan = secular_scan(1, n, grid);
  const auto mins = scan_minima(scan);
  int hits = 0;
  for (int j = 0; j < n; ++j)
    for (auto m : mins)
      if (std::abs(scan[m].lambda - d.lambda[j]) <= 1.5e-3 && scan[m].sigma_min < 1e-2) {
        ++hits;
        break;
      }
  CHECK(hits == n);
}

TEST_CASE("reconstruction csv") {
  std::ostringstream os;
  write_reconstruction_csv(os, {{1, 2.0, 1e-14, 1e-13, 0.0}});
  CHECK(os.str().rfind("j,lambda,residual,max_diff,conjugacy_err\n", 0) == 0);
}
