#pragma once

#include <iosfwd>
#include <vector>

#include "sdspectra/charpoly.hpp"
#include "sdspectra/diffmat.hpp"
#include "sdspectra/linalg.hpp"

namespace sdspectra {

// Eigenvector padded to a sequence on [lo, hi], lo = 1-r and hi = N+r initially.
struct ExtendedSequence {
  int n = 0;
  int r = 0;
  double lambda = 0;
  int lo = 0;
  std::vector<double> values;

  int hi() const { return lo + int(values.size()) - 1; }
  double at(int i) const { return values[std::size_t(i - lo)]; }
  // Continue the sequence outward with the 2r-term recurrence.
  ExtendedSequence extended_to(int new_lo, int new_hi) const;
};

ExtendedSequence extend_sequence(const Vec& v, double lambda, int r);

// max over centers i in [lo+r, hi-r] of |sum_k (-1)^{k+r} C(2r,k) v_{i-r+k} - lambda v_i|
double check_recurrence(const ExtendedSequence& seq);

// 2r x 2r, columns aligned with rs.roots. shift[l] is N for expanding roots
// (their column uses rho^{i-N}) and 0 otherwise. Rows have unit norm.
struct BoundaryMatrix {
  CMat a;
  std::vector<int> shift;
};

BoundaryMatrix boundary_matrix(const RootSet& rs, int n, bool binomial_rows = false);
BoundaryMatrix boundary_matrix(double lambda, int r, int n, bool binomial_rows = false);

struct CoefficientSet {
  double lambda = 0;
  int r = 0;
  int n = 0;
  RootSet roots;
  CVec scaled;             // d_l; c_l = d_l rho_l^{-shift_l}
  std::vector<int> shift;
  double residual = 0;     // smallest singular value of the boundary matrix
  double residual_rel = 0; // ... divided by the largest
  double second_rel = 0;   // second smallest / largest, a nullity-2 warning when tiny
  bool multiple = false;

  cplx coeff(int l) const;
  double max_abs_coeff() const;
};

// Right singular vector of the boundary matrix for its smallest singular value,
// normalized so the reconstructed vector has unit l2 norm over 1..N, its
// largest-magnitude entry positive. Throws ConditioningError if the nullspace
// looks two-dimensional (reported, not resolved).
CoefficientSet solve_coeffs(double lambda, int r, int n, bool binomial_rows = false);

// Re(sum_l c_l rho_l^i); throws ConditioningError if the imaginary part exceeds 1e-8 max|c|.
double eval_formula(const CoefficientSet& cs, int i);
cplx eval_formula_complex(const CoefficientSet& cs, int i);

// Real cosine form: pairs (k, r-k) and (0,0)/(0,1) folded into 2|c| |rho|^i cos(i theta + gamma).
double eval_real_representation(const CoefficientSet& cs, int i);

// max over conjugate pairs of |c_{k,l} - conj(c_{r-k,l})| (and c_{0,1} vs c_{0,0}), divided by max|c|.
double conjugacy_error(const CoefficientSet& cs);

Vec reconstruct(const CoefficientSet& cs);

struct ScanPoint {
  double lambda;
  double sigma_min;  // relative to the largest singular value
};

std::vector<ScanPoint> secular_scan(int r, int n, const std::vector<double>& grid);
// Indices of strict local minima of the scan.
std::vector<std::size_t> scan_minima(const std::vector<ScanPoint>& scan);

struct ReconstructionRow {
  int j;
  double lambda;
  double residual;
  double max_diff;
  double conjugacy_err;
};

// columns: j, lambda, residual, max_diff, conjugacy_err
void write_reconstruction_csv(std::ostream& os, const std::vector<ReconstructionRow>& rows);

}  // namespace sdspectra
