#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include <Eigen/Dense>

namespace sdspectra {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using IVec = std::vector<std::int64_t>;

// D is N x N lower bidiagonal: 1 on the diagonal, -1 below it.
// Only (n, r) is stored; every action is computed on the fly.
struct DifferenceOperator {
  int n;
  int r;
  DifferenceOperator(int n, int r);

  bool gram_closed_form_ok() const { return 2 * r < n; }
};

Vec apply_D(const Vec& v);
Vec apply_DT(const Vec& v);
Vec apply_Dr(const Vec& v, int r);
Vec apply_DrT(const Vec& v, int r);
Vec apply_Dinv(const Vec& v);  // cumulative sum
Vec apply_Dinv_r(const Vec& v, int r);
Vec apply_DinvT_r(const Vec& v, int r);  // reverse cumulative sum, r times

// Integer versions; throw std::overflow_error instead of wrapping.
IVec apply_Dr(const IVec& v, int r);
IVec apply_Dinv_r(const IVec& v, int r);

std::int64_t binom(int n, int k);  // exact, checked

// ((D^r)^T D^r)_{i,j}, 1-based. Requires 2r < n.
std::int64_t gram_entry(int n, int r, int i, int j);

struct GramMatrix {
  int n = 0;
  int r = 0;
  std::vector<std::int64_t> entries;  // row-major n*n

  std::int64_t operator()(int i, int j) const { return entries[std::size_t(i - 1) * n + (j - 1)]; }
  std::int64_t& at(int i, int j) { return entries[std::size_t(i - 1) * n + (j - 1)]; }
  Mat to_dense() const;
};

GramMatrix build_gram(int n, int r);

Vec reverse(const Vec& v);

// Dense materializations, only for oracles and small problems.
Mat dense_D(int n);
Mat dense_Dr(int n, int r);
Mat dense_Dinv_r(int n, int r);  // entries binom(i-j+r-1, r-1) on and below the diagonal

// Row-major CSV, exact integers.
void write_gram_csv(std::ostream& os, const GramMatrix& g);

}  // namespace sdspectra
