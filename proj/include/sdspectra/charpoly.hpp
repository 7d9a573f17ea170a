#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "sdspectra/linalg.hpp"

namespace sdspectra {

// p(x) = (1-x)^{2r} - (-1)^r lambda x^r
cplx eval_p(cplx x, double lambda, int r);
cplx eval_p_factored(cplx x, double lambda, int r);

struct Root {
  int k = 0;
  int ell = 0;
  cplx value;
};

struct RootSet {
  double lambda = 0;
  int r = 0;
  std::vector<Root> roots;         // index 2k + ell
  std::vector<int> magnitude_order;  // indices into roots, ascending |rho|
  double min_separation = 0;
  bool ill_conditioned = false;  // min_separation < 1e-8

  const Root& at(int k, int ell) const { return roots[std::size_t(2 * k + ell)]; }
};

// lambda must lie in [1e-300, 4^r (1 - 1e-12)].
RootSet roots_for(double lambda, int r);

enum class RootClass { Unimodular, Expanding, Contracting };

struct RootTag {
  bool real = false;
  RootClass kind = RootClass::Unimodular;
};

struct Classification {
  std::vector<RootTag> tags;  // aligned with RootSet::roots
  int real_count = 0;
  int unimodular_count = 0;
  bool consistent = false;
  std::string problem;  // first contradiction found, empty when consistent
};

Classification classify(const RootSet& rs);

struct SeparationStats {
  double min_distance = 0;
  double max_distance = 0;
  double min_modulus_gap = 0;  // over pairs not tied by conjugation, divided by lambda^{1/2r}
  double normalized_min_distance = 0;
  double upper_bound = 0;  // 2 (1 + sqrt 2) lambda^{1/2r}
  bool upper_ok = false;
  bool positive = false;
};

SeparationStats separation_stats(const RootSet& rs);

struct RootInvariants {
  double max_residual = 0;  // |p(rho)| / (1+|rho|)^{2r}
  double max_inverse_err = 0;
  double max_conjugate_err = 0;
  double max_unimodular_err = 0;  // k = 0
  double min_other_modulus_gap = 0;  // min ||rho| - 1| over k != 0
  bool bounds_ok = false;  // modulus and |rho - 1| sandwiches
  bool order_ok = false;  // unimodular pair at sorted positions r, r+1
  bool passed = false;
};

RootInvariants check_root_invariants(const RootSet& rs, double tol = 1e-10);

// Array of {k, ell, re, im, abs, class}.
nlohmann::json roots_json(const RootSet& rs);

}  // namespace sdspectra
