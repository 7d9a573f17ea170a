#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "sdspectra/diffmat.hpp"
#include "sdspectra/error.hpp"
#include "sdspectra/sigmadelta.hpp"

using namespace sdspectra;

namespace {

Vec random_signal(int n, double amp, unsigned seed) {
  std::mt19937 g(seed);
  std::uniform_real_distribution<double> u(-amp, amp);
  Vec y(n);
  for (int i = 0; i < n; ++i) y[i] = u(g);
  return y;
}

}  // namespace

TEST_CASE("first-order hand example") {
  const QuantizationRun run = quantize_order1(Vec::Constant(5, 0.5));
  const double q[5] = {1, 1, -1, 1, 1};
  const double u[5] = {-0.5, -1, 0.5, 0, -0.5};
  for (int i = 0; i < 5; ++i) {
    CHECK(run.q[i] == q[i]);
    CHECK(run.u[i] == doctest::Approx(u[i]).epsilon(1e-15));
  }
  CHECK(run.stability == Stability::FirstOrderClassical);
}

TEST_CASE("midrise alphabet") {
  const Alphabet a = Alphabet::multilevel(0.5, 3);
  CHECK(a.size() == 6);
  CHECK(a.max_level() == 1.25);
  CHECK(a.quantize(0.0) == 0.25);
  CHECK(a.quantize(-0.1) == -0.25);
  CHECK(a.quantize(0.5) == 0.75);
  CHECK(a.quantize(0.74) == 0.75);
  CHECK(a.quantize(9.0) == 1.25);
  CHECK(a.quantize(-9.0) == -1.25);
  CHECK(a.symbol(0.75) == 3);
  CHECK(a.symbol(-1.25) == -5);
  const Alphabet b = Alphabet::one_bit();
  CHECK(b.quantize(0.0) == 1.0);
  CHECK(b.quantize(-1e-9) == -1.0);
  CHECK(b.symbol(1.0) == 1);
  CHECK_THROWS_AS(Alphabet::multilevel(0.0, 2), PreconditionError);
  CHECK_THROWS_AS(Alphabet::multilevel(1.0, 0), PreconditionError);
}

TEST_CASE("sufficiency and minimal level count") {
  // (2L - 1) step / 2 >= y_inf + 2^{r-1} step
  CHECK(minimal_levels(1.0, 1.0, 1) == 3);
  CHECK(minimal_levels(1.0, 1.0, 2) == 4);
  CHECK(minimal_levels(1.0, 1.0, 3) == 6);
  for (int r = 1; r <= 4; ++r) {
    const int L = minimal_levels(0.5, 0.8, r);
    CHECK(Alphabet::multilevel(0.5, L).sufficient(0.8, r));
    CHECK_FALSE(Alphabet::multilevel(0.5, L - 1).sufficient(0.8, r));
  }
  CHECK_THROWS_AS(quantize_order_r(Vec::Constant(8, 0.9), 2, Alphabet::multilevel(1.0, 2)), PreconditionError);
}

TEST_CASE("greedy rule written out") {
  const int n = 64, r = 3;
  const Vec y = random_signal(n, 1.0, 9);
  const Alphabet a = Alphabet::multilevel(1.0, minimal_levels(1.0, 1.0, r));
  const QuantizationRun run = quantize_order_r(y, r, a);
  std::vector<double> u(n + r, 0.0);  // u[k + r] holds u_k, zeros before the start
  for (int i = 0; i < n; ++i) {
    double h = y[i];
    for (int k = 1; k <= r; ++k) h += (k % 2 ? 1.0 : -1.0) * double(binom(r, k)) * u[std::size_t(i - k + r)];
    // nearest midrise level, capped at the outermost
    const double lvl = std::min(std::floor(std::abs(h) / a.step), double(a.levels - 1)) + 0.5;
    const double q = (h >= 0 ? 1.0 : -1.0) * a.step * lvl;
    CHECK(run.q[i] == q);
    u[std::size_t(i + r)] = h - q;
    CHECK(std::abs(run.u[i] - (h - q)) < 1e-12);
    CHECK(run.symbols[std::size_t(i)] * a.step / 2.0 == run.q[i]);
  }
}

TEST_CASE("state equation and stability") {
  for (int r : {1, 2, 3}) {
    const Vec y = random_signal(256, 0.9, unsigned(r));
    const Alphabet a = Alphabet::multilevel(1.0, minimal_levels(1.0, 0.9, r));
    const QuantizationRun run = quantize_order_r(y, r, a);
    CHECK(run.stability == Stability::Guaranteed);
    const Vec resid = dense_Dr(256, r) * run.u - (y - run.q);
    CHECK(resid.cwiseAbs().maxCoeff() < 1e-12);
    const RunReport rep = verify_run(run);
    CHECK(rep.bounded);
    CHECK(rep.u_inf <= a.step / 2.0);
  }
  const QuantizationRun fo = quantize_order1(random_signal(256, 1.0, 4));
  CHECK(verify_run(fo).u_inf <= 1.0);
}

TEST_CASE("one-bit higher order is not promised") {
  const QuantizationRun run = quantize_order_r(random_signal(128, 0.2, 2), 2, Alphabet::one_bit());
  CHECK(run.stability == Stability::Unverified);
  CHECK(verify_run(run).max_residual < 1e-12);
}

TEST_CASE("run csv") {
  std::ostringstream os;
  write_run_csv(os, quantize_order1(Vec::Constant(3, 0.25)));
  const std::string s = os.str();
  CHECK(s.rfind("i,y,q,u\n", 0) == 0);
  CHECK(std::count(s.begin(), s.end(), '\n') == 4);
}
