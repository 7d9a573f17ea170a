#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>
#include <stdexcept>

#include "sdspectra/diffmat.hpp"
#include "sdspectra/error.hpp"

using namespace sdspectra;

namespace {

// Independent oracle: D built entry by entry, powers by plain loops.
std::vector<std::vector<long long>> naive_D(int n) {
  std::vector<std::vector<long long>> d(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) {
    d[i][i] = 1;
    if (i) d[i][i - 1] = -1;
  }
  return d;
}

std::vector<std::vector<long long>> naive_mul(const std::vector<std::vector<long long>>& a, const std::vector<std::vector<long long>>& b) {
  const std::size_t n = a.size();
  std::vector<std::vector<long long>> c(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

std::vector<std::vector<long long>> naive_gram(int n, int r) {
  auto d = naive_D(n), p = d;
  for (int k = 1; k < r; ++k) p = naive_mul(p, d);
  std::vector<std::vector<long long>> pt(n, std::vector<long long>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) pt[i][j] = p[j][i];
  return naive_mul(pt, p);
}

Vec ramp(int n) {
  Vec v(n);
  for (int i = 0; i < n; ++i) v[i] = std::sin(1.3 * i) + 0.1 * i;
  return v;
}

}  // namespace

TEST_CASE("operator validation") {
  CHECK_THROWS_AS(DifferenceOperator(1, 1), PreconditionError);
  CHECK_THROWS_AS(DifferenceOperator(5, 0), PreconditionError);
  CHECK(DifferenceOperator(7, 3).gram_closed_form_ok());
  CHECK_FALSE(DifferenceOperator(6, 3).gram_closed_form_ok());
}

TEST_CASE("first differences and cumulative sums") {
  Vec v(4);
  v << 1, 4, 9, 16;
  Vec dv = apply_D(v);
  CHECK(dv[0] == 1);
  CHECK(dv[1] == 3);
  CHECK(dv[3] == 7);
  Vec dtv = apply_DT(v);
  CHECK(dtv[0] == -3);
  CHECK(dtv[3] == 16);
  CHECK((apply_Dinv(apply_D(v)) - v).norm() == 0);
}

TEST_CASE("matrix-free actions agree with dense products") {
  for (int n : {5, 12, 31})
    for (int r : {1, 2, 3, 5}) {
      const Vec v = ramp(n);
      const Mat d = dense_D(n);
      Mat dr = Mat::Identity(n, n);
      for (int k = 0; k < r; ++k) dr = d * dr;
      CHECK((apply_Dr(v, r) - dr * v).cwiseAbs().maxCoeff() < 1e-9);
      CHECK((apply_DrT(v, r) - dr.transpose() * v).cwiseAbs().maxCoeff() < 1e-9);
      const Mat inv = dr.inverse();
      CHECK((apply_Dinv_r(v, r) - inv * v).cwiseAbs().maxCoeff() < 1e-6 * (1 + (inv * v).cwiseAbs().maxCoeff()));
      CHECK((apply_DinvT_r(v, r) - inv.transpose() * v).cwiseAbs().maxCoeff() < 1e-6 * (1 + (inv.transpose() * v).cwiseAbs().maxCoeff()));
      CHECK((dense_Dr(n, r) - dr).cwiseAbs().maxCoeff() == 0);
      CHECK((dense_Dinv_r(n, r) * dr - Mat::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-9);
    }
}

TEST_CASE("inverse entries are binomial") {
  const Mat p = dense_Dinv_r(6, 3);
  CHECK(p(0, 0) == 1);
  CHECK(p(5, 0) == 21);  // C(7, 2)
  CHECK(p(3, 1) == 6);   // C(4, 2)
  CHECK(p(1, 3) == 0);
}

TEST_CASE("integer actions are exact and checked") {
  IVec t{1, -1, 1, 1, -1, 1};
  const IVec s = apply_Dinv_r(t, 2);
  CHECK(s == IVec{1, 1, 2, 4, 5, 7});
  CHECK(apply_Dr(s, 2) == t);
  IVec big(2, std::int64_t(1) << 62);
  CHECK_THROWS_AS(apply_Dinv_r(big, 1), std::overflow_error);
}

TEST_CASE("binomials") {
  // Pascal's triangle as the oracle
  std::vector<std::vector<std::int64_t>> pas(61, std::vector<std::int64_t>(61, 0));
  for (int n = 0; n <= 60; ++n) {
    pas[n][0] = 1;
    for (int k = 1; k <= n; ++k) pas[n][k] = pas[n - 1][k - 1] + (k <= n - 1 ? pas[n - 1][k] : 0);
  }
  for (int n = 0; n <= 60; ++n)
    for (int k = 0; k <= n; ++k) CHECK(binom(n, k) == pas[n][k]);
  CHECK(binom(5, 7) == 0);
  CHECK(binom(5, -1) == 0);
  CHECK_THROWS_AS(binom(80, 40), std::overflow_error);
}

TEST_CASE("gram closed form matches the integer product") {
  for (int n = 5; n <= 24; ++n)
    for (int r = 1; 2 * r < n; ++r) {
      const auto want = naive_gram(n, r);
      const GramMatrix g = build_gram(n, r);
      bool same = true;
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) same = same && g(i, j) == want[i - 1][j - 1] && gram_entry(n, r, i, j) == g(i, j);
      CHECK_MESSAGE(same, "n=" << n << " r=" << r);
    }
}

TEST_CASE("7x7 second-order gram") {
  const long long want[7][7] = {{6, -4, 1, 0, 0, 0, 0},  {-4, 6, -4, 1, 0, 0, 0}, {1, -4, 6, -4, 1, 0, 0}, {0, 1, -4, 6, -4, 1, 0},
                                {0, 0, 1, -4, 6, -4, 1}, {0, 0, 0, 1, -4, 5, -2}, {0, 0, 0, 0, 1, -2, 1}};
  const GramMatrix g = build_gram(7, 2);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) CHECK(g(i + 1, j + 1) == want[i][j]);
  std::ostringstream os;
  write_gram_csv(os, g);
  CHECK(os.str().substr(0, 16) == "6,-4,1,0,0,0,0\n-");
}

TEST_CASE("gram symmetry and preconditions") {
  const GramMatrix g = build_gram(40, 4);
  for (int i = 1; i <= 40; ++i)
    for (int j = 1; j <= 40; ++j) CHECK(g(i, j) == g(j, i));
  CHECK((g.to_dense() - dense_Dr(40, 4).transpose() * dense_Dr(40, 4)).cwiseAbs().maxCoeff() == 0);
  CHECK_THROWS_AS(build_gram(5, 3), PreconditionError);
  CHECK_THROWS_AS(build_gram(6, 3), PreconditionError);
  CHECK_THROWS_AS(gram_entry(10, 2, 0, 1), PreconditionError);
}

TEST_CASE("reverse") {
  Vec v(3);
  v << 1, 2, 3;
  CHECK(reverse(v)[0] == 3);
  CHECK(reverse(reverse(v)) == v);
}
