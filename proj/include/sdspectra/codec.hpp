#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "sdspectra/diffmat.hpp"
#include "sdspectra/linalg.hpp"
#include "sdspectra/sigmadelta.hpp"

namespace sdspectra {

enum class FrameKind { Singular, Harmonic };

struct Frame {
  int n = 0;
  int d = 0;
  FrameKind kind = FrameKind::Singular;
  Mat F;  // N x d
  bool row_normalized = false;
};

// The d left singular vectors of D^r with the smallest singular values, ascending sigma.
Frame frame_singular(int n, int d, int r);
// cos/sin pairs at frequencies 1, 2, ..., unit columns; with row_normalized every row is rescaled to unit norm.
Frame frame_harmonic(int n, int d, bool row_normalized = false);

// Deterministic generators, identical on every platform.
std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t mix_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b, std::uint64_t c);

// mt19937_64 stream (its output sequence is fixed by the standard) with
// hand-rolled bounded and normal draws, since the std distributions are not.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  std::uint64_t below(std::uint64_t n);  // uniform on [0, n), rejection sampled
  double uniform();                      // [0, 1), 53 bits
  double normal();                       // Box-Muller

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

struct SelectorMatrix {
  int m = 0;
  int n = 0;
  std::vector<int> rows;  // 1-based, i.i.d. uniform (with replacement)
  std::uint64_t seed = 0;

  Vec apply(const Vec& v) const;
  IVec apply(const IVec& v) const;
};

SelectorMatrix make_selector(int m, int n, std::uint64_t seed);

struct EncodedPayload {
  int m = 0;
  int n = 0;
  int r = 0;
  int levels = 1;  // alphabet levels; symbols are odd integers in [-(2L-1), 2L-1]
  double step = 2.0;
  std::uint64_t seed = 0;  // selector seed; rows regenerate from (m, n, seed)
  IVec s;                  // R D^{-r} t, t the odd-integer symbols of q
  int width = 0;           // bits per entry
  std::int64_t bit_count = 0;

  static constexpr int header_bytes = 32;
};

// Bits per entry: ceil(r log2 N) + ceil(log2 |A|).
int payload_width(int n, int r, int levels);
// Largest |(D^{-r} t)_row| for symbols bounded by 2L-1.
std::int64_t row_bound(int row, int r, int levels);

EncodedPayload encode(const QuantizationRun& run, const SelectorMatrix& sel);
// The +-1 form: q entries must be exactly +-1.
EncodedPayload encode(const Vec& q, int r, const SelectorMatrix& sel);

std::vector<std::uint8_t> serialize(const EncodedPayload& p);
EncodedPayload deserialize(const std::vector<std::uint8_t>& bytes);

// x_hat = argmin || R D^{-r} F x - (step/2) s ||, column-pivoted Householder QR.
Vec decode(const EncodedPayload& p, const Frame& frame, const SelectorMatrix& sel);
Mat design_matrix(const Frame& frame, const SelectorMatrix& sel, int r);  // R D^{-r} F
Vec least_squares(const Mat& a, const Vec& b);  // throws ConditioningError on rank deficiency

struct AlphabetRule {
  std::string kind = "auto";  // auto and one-bit: {-1, 1}; multilevel: step and levels below
  double step = 1.0;
  int levels = 0;  // 0: smallest sufficient count for ||y||_inf <= 1
};

Alphabet alphabet_for(const AlphabetRule& rule, int r);

struct RateDistortionConfig {
  std::vector<int> n_values{64, 128, 256, 512, 1024};
  std::vector<int> r_values{1, 2};
  int d = 2;
  int m_divisor = 4;  // m = N / m_divisor
  int trials = 50;
  std::uint64_t seed = 20240601;
  AlphabetRule alphabet;
};

struct RateDistortionRecord {
  int n, r, d, m, trial;
  std::int64_t bits;
  double err_l2;
  double bound_rhs;     // ||(R D^{-r} F)^+|| ||R u||
  double identity_rhs;  // ||(R D^{-r} F)^+ R u||
};

struct SlopeSummary {
  int r = 0;
  int d = 0;
  std::vector<int> n_values;
  std::vector<double> median_err;
  double slope = 0;
  bool non_increasing = false;
  double max_identity_gap = 0;
  bool bits_exact = false;  // bits == m (r log2 N + ceil log2 |A|) at every power-of-two N
};

std::vector<RateDistortionRecord> rate_distortion_experiment(const RateDistortionConfig& cfg);
std::vector<SlopeSummary> summarize(const std::vector<RateDistortionRecord>& recs, const RateDistortionConfig& cfg);
// columns: N, r, d, m, trial, bits, err_l2, bound_rhs
void write_rate_distortion_csv(std::ostream& os, const std::vector<RateDistortionRecord>& recs);

// Least-squares slope of log y against log x.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

struct SigmaMinStats {
  int r = 0, m = 0, ell = 0, d = 0, n = 0;
  std::vector<double> values;  // sigma_min per seed, in seed order
  double median = 0, min = 0, q10 = 0, q25 = 0, q75 = 0, q90 = 0;
  double sqrt_ell = 0;
};

// sigma_min(V^T R F~): V the ell least significant left singular vectors of the
// m x m D^r, R samples m rows i.i.d. from the N x N DFT, F~ its first d columns
// (frequencies 0..d-1, unnormalized). N defaults to m.
SigmaMinStats sigma_min_check(int r, int m, int ell, int d, const std::vector<std::uint64_t>& seeds, int n = 0);

double quantile(std::vector<double> v, double p);

}  // namespace sdspectra
