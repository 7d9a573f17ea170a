#include "sdspectra/diffmat.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

#include "sdspectra/error.hpp"

namespace sdspectra {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("integer overflow in difference operator");
  return out;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out)) throw std::overflow_error("integer overflow in difference operator");
  return out;
}

double binom_d(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double out = 1.0;
  for (int i = 0; i < k; ++i) out = out * double(n - i) / double(i + 1);
  return out;
}

}  // namespace

DifferenceOperator::DifferenceOperator(int n_, int r_) : n(n_), r(r_) {
  if (n < 2) throw PreconditionError("difference operator needs n >= 2");
  if (r < 1) throw PreconditionError("difference operator needs r >= 1");
}

Vec apply_D(const Vec& v) {
  Vec out(v.size());
  if (v.size() == 0) return out;
  out[0] = v[0];
  for (Eigen::Index i = 1; i < v.size(); ++i) out[i] = v[i] - v[i - 1];
  return out;
}

Vec apply_DT(const Vec& v) {
  const Eigen::Index n = v.size();
  Vec out(n);
  if (n == 0) return out;
  for (Eigen::Index i = 0; i + 1 < n; ++i) out[i] = v[i] - v[i + 1];
  out[n - 1] = v[n - 1];
  return out;
}

Vec apply_Dr(const Vec& v, int r) {
  Vec out = v;
  for (int k = 0; k < r; ++k) out = apply_D(out);
  return out;
}

Vec apply_DrT(const Vec& v, int r) {
  Vec out = v;
  for (int k = 0; k < r; ++k) out = apply_DT(out);
  return out;
}

Vec apply_Dinv(const Vec& v) {
  Vec out(v.size());
  double acc = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = (acc += v[i]);
  return out;
}

Vec apply_Dinv_r(const Vec& v, int r) {
  Vec out = v;
  for (int k = 0; k < r; ++k) out = apply_Dinv(out);
  return out;
}

Vec apply_DinvT_r(const Vec& v, int r) {
  Vec out = v;
  for (int k = 0; k < r; ++k) {
    double acc = 0.0;
    for (Eigen::Index i = out.size() - 1; i >= 0; --i) out[i] = (acc += out[i]);
  }
  return out;
}

IVec apply_Dr(const IVec& v, int r) {
  IVec out = v;
  for (int k = 0; k < r; ++k)
    for (std::size_t i = out.size(); i-- > 1;) out[i] = checked_sub(out[i], out[i - 1]);
  return out;
}

IVec apply_Dinv_r(const IVec& v, int r) {
  IVec out = v;
  for (int k = 0; k < r; ++k)
    for (std::size_t i = 1; i < out.size(); ++i) out[i] = checked_add(out[i], out[i - 1]);
  return out;
}

std::int64_t binom(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  __int128 out = 1;
  for (int i = 0; i < k; ++i) {
    out = out * (n - i) / (i + 1);  // exact: out*(n-i) is divisible by i+1 at every step
    if (out > std::numeric_limits<std::int64_t>::max()) throw std::overflow_error("binomial coefficient overflows int64");
  }
  return static_cast<std::int64_t>(out);
}

std::int64_t gram_entry(int n, int r, int i, int j) {
  if (r < 1 || 2 * r >= n) throw PreconditionError("gram closed form needs 1 <= r < n/2");
  if (i < 1 || i > n || j < 1 || j > n)
    throw PreconditionError("gram index out of range: (" + std::to_string(i) + "," + std::to_string(j) + ")");
  const int lo = std::min(i, j);
  const int hi = std::max(i, j);
  const int m = hi - lo;
  if (m > r) return 0;
  const std::int64_t sign = (m % 2 == 0) ? 1 : -1;
  if (lo <= n - r) return sign * binom(2 * r, r - m);
  std::int64_t acc = 0;
  for (int l = 0; l <= n - hi; ++l) acc = checked_add(acc, binom(r, l + m) * binom(r, l));
  return sign * acc;
}

Mat GramMatrix::to_dense() const {
  Mat out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = double(entries[std::size_t(i) * n + j]);
  return out;
}

GramMatrix build_gram(int n, int r) {
  if (r < 1 || 2 * r >= n) throw PreconditionError("gram needs 1 <= r < n/2 (got n=" + std::to_string(n) + ", r=" + std::to_string(r) + ")");
  GramMatrix g;
  g.n = n;
  g.r = r;
  g.entries.assign(std::size_t(n) * n, 0);
  for (int i = 1; i <= n; ++i)
    for (int j = std::max(1, i - r); j <= std::min(n, i + r); ++j) g.at(i, j) = gram_entry(n, r, i, j);
  return g;
}

Vec reverse(const Vec& v) { return v.reverse(); }

Mat dense_D(int n) {
  Mat d = Mat::Identity(n, n);
  for (int i = 1; i < n; ++i) d(i, i - 1) = -1.0;
  return d;
}

Mat dense_Dr(int n, int r) {
  Mat out = Mat::Zero(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k <= r && j + k < n; ++k) out(j + k, j) = (k % 2 ? -1.0 : 1.0) * binom_d(r, k);
  return out;
}

Mat dense_Dinv_r(int n, int r) {
  Mat out = Mat::Zero(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = j; i < n; ++i) out(i, j) = binom_d(i - j + r - 1, r - 1);
  return out;
}

void write_gram_csv(std::ostream& os, const GramMatrix& g) {
  for (int i = 1; i <= g.n; ++i) {
    for (int j = 1; j <= g.n; ++j) {
      if (j > 1) os << ',';
      os << g(i, j);
    }
    os << '\n';
  }
}

}  // namespace sdspectra
