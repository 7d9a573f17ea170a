#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "sdspectra/diffmat.hpp"

namespace sdspectra {

// Midrise alphabet {+-(2k-1) step/2 : k = 1..levels}. One-bit is step 2, one level.
struct Alphabet {
  double step = 2.0;
  int levels = 1;

  static Alphabet one_bit() { return {2.0, 1}; }
  static Alphabet multilevel(double step, int levels);

  bool is_one_bit() const { return levels == 1; }
  int size() const { return 2 * levels; }
  double max_level() const { return (2 * levels - 1) * step / 2.0; }
  // Nearest level; ties (and 0) go away from zero.
  double quantize(double h) const;
  // Odd integer t with level = t * step / 2.
  std::int64_t symbol(double level) const;
  // Greedy order-r boundedness guarantee: max_level >= ||y||_inf + 2^{r-1} step.
  bool sufficient(double y_inf, int r) const;
};

// Smallest level count that is sufficient for (y_inf, r) at the given step.
int minimal_levels(double step, double y_inf, int r);

enum class Stability { Guaranteed, FirstOrderClassical, Unverified };

struct QuantizationRun {
  Vec y;
  Vec q;
  Vec u;
  IVec symbols;  // q = symbols * step / 2
  int r = 1;
  Alphabet alphabet;
  Stability stability = Stability::Unverified;
};

QuantizationRun quantize_order1(const Vec& y);
// Throws PreconditionError for a multilevel alphabet that fails sufficiency.
QuantizationRun quantize_order_r(const Vec& y, int r, const Alphabet& alphabet);

struct RunReport {
  double max_residual = 0;  // max_i |(D^r u)_i - (y_i - q_i)|
  double u_inf = 0;
  double y_inf = 0;
  bool bounded = false;  // the bound promised by run.stability, true when none is promised
};

RunReport verify_run(const QuantizationRun& run);

// columns: i, y, q, u
void write_run_csv(std::ostream& os, const QuantizationRun& run);

}  // namespace sdspectra
