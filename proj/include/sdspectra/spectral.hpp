#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "sdspectra/diffmat.hpp"

namespace sdspectra {

struct SpectralOptions {
  bool compute_left = true;
  // Take the small-lambda half of the spectrum from the exact inverse Gram
  // D^{-r} D^{-rT}; without it the bottom eigenvectors carry O(eps*lambda_1/gap) error.
  bool inverse_refinement = true;
  int max_n = 2048;
};

// Singular triplets of D^r, sigma descending. v_j: largest-magnitude entry positive
// (lowest index on ties). u_j: eigenvector of D^r (D^r)^T with <u_j, D^r v_j> >= 0.
struct SpectralDecomposition {
  int n = 0;
  int r = 0;
  Vec sigma;
  Vec lambda;
  Mat V;
  Mat U;  // empty unless compute_left
};

SpectralDecomposition eigh_gram(int n, int r, const SpectralOptions& opt = {});

// sigma_N(D), the smallest singular value of the first-difference matrix.
double sigma_min_D(int n);

struct SigmaBoundsReport {
  double sigma1 = 0;
  double upper = 0;  // (2 cos(pi/(2N+1)))^r
  bool upper_ok = false;
  bool positive_ok = false;
  std::vector<double> ratios;  // sigma_{N-j+1} / (j/N)^r for j = 1..N, NaN when sigma < 1e-12
  int j_lo = 0, j_hi = 0;
  double slope = 0;
  bool ok() const { return upper_ok && positive_ok; }
};

// j range for the slope fit: the decade of j/N centred (geometrically) on N^{-1/2}.
std::pair<int, int> middle_decade(int n);

// Least-squares slope of log sigma_{N-j+1} against log(j/N) over j in [j_lo, j_hi].
double sigma_decay_slope(const SpectralDecomposition& d, int j_lo, int j_hi);

SigmaBoundsReport check_sigma_bounds(const SpectralDecomposition& d);

struct FlatnessReport {
  int n = 0;
  int r = 0;
  std::vector<double> v_inf;
  double s = 0;  // sqrt(N) max_j ||v_j||_inf
};

FlatnessReport flatness(const SpectralDecomposition& d);

struct ReversalReport {
  double max_norm_gap = 0;    // max_j | ||u_j||_inf - ||v_j||_inf |
  double max_vector_gap = 0;  // max_j min_{+-} ||u_j -+ reverse(v_j)||_inf
  int worst_j = 0;
  bool passed = false;
};

ReversalReport check_reversal(const SpectralDecomposition& d, double norm_tol = 1e-8, double vec_tol = 1e-6);

struct DynamicalBound {
  double bound = 0;  // alpha^r sigma_N(D) sqrt(N)
  double v_inf = 0;
  bool holds = false;
};

// j is 1-based. Throws PreconditionError unless sigma_j^{1/r} <= alpha sigma_N(D).
DynamicalBound dynamical_bound(const SpectralDecomposition& d, int j, double alpha, double sigma_n_D, double slack = 1e-10);

// columns: j, sigma, lambda, v_inf_norm, u_inf_norm
void write_spectrum_csv(std::ostream& os, const SpectralDecomposition& d);

}  // namespace sdspectra
