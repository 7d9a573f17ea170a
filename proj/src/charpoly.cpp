#include "sdspectra/charpoly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sdspectra/error.hpp"

namespace sdspectra {

namespace {

// e^{2 k pi i / r}, exact on the axes.
cplx unit_root(int k, int r) {
  k %= r;
  if (k == 0) return {1.0, 0.0};
  if (2 * k == r) return {-1.0, 0.0};
  if (4 * k == r) return {0.0, 1.0};
  if (4 * k == 3 * r) return {0.0, -1.0};
  const double th = 2.0 * std::acos(-1.0) * k / r;
  return {std::cos(th), std::sin(th)};
}

cplx ipow(cplx x, int e) {
  cplx out = 1.0;
  for (int i = 0; i < e; ++i) out *= x;
  return out;
}

}  // namespace

cplx eval_p(cplx x, double lambda, int r) {
  const double sgn = (r % 2 == 0) ? 1.0 : -1.0;
  return ipow(1.0 - x, 2 * r) - sgn * lambda * ipow(x, r);
}

cplx eval_p_factored(cplx x, double lambda, int r) {
  const double lr = std::pow(lambda, 1.0 / r);
  cplx out = 1.0;
  for (int k = 0; k < r; ++k) out *= -(1.0 - x) * (1.0 - x) - lr * unit_root(k, r) * x;
  return (r % 2 == 0) ? out : -out;
}

RootSet roots_for(double lambda, int r) {
  if (r < 1) throw PreconditionError("roots_for needs r >= 1");
  const double top = std::pow(4.0, r) * (1.0 - 1e-12);
  if (!(lambda >= 1e-300 && lambda <= top))
    throw PreconditionError("roots_for: lambda outside [1e-300, 4^r (1 - 1e-12)]");

  RootSet rs;
  rs.lambda = lambda;
  rs.r = r;
  rs.roots.resize(std::size_t(2 * r));
  const double lr = std::pow(lambda, 1.0 / r);
  for (int k = 0; k < r; ++k) {
    if (2 * k > r) {
      // mirror of k' = r - k; keeps the conjugate pairing exact
      for (int ell = 0; ell < 2; ++ell) {
        const Root& m = rs.at(r - k, ell);
        rs.roots[std::size_t(2 * k + ell)] = {k, ell, std::conj(m.value)};
      }
      continue;
    }
    const cplx w = lr * unit_root(k, r);
    const cplx disc = std::sqrt(w * w - 4.0 * w);
    rs.roots[std::size_t(2 * k)] = {k, 0, (2.0 - w + disc) / 2.0};
    rs.roots[std::size_t(2 * k + 1)] = {k, 1, (2.0 - w - disc) / 2.0};
  }

  rs.magnitude_order.resize(rs.roots.size());
  std::iota(rs.magnitude_order.begin(), rs.magnitude_order.end(), 0);
  std::stable_sort(rs.magnitude_order.begin(), rs.magnitude_order.end(), [&](int a, int b) {
    const double ma = std::abs(rs.roots[a].value), mb = std::abs(rs.roots[b].value);
    if (ma != mb) return ma < mb;
    return std::arg(rs.roots[a].value) < std::arg(rs.roots[b].value);
  });

  rs.min_separation = INFINITY;
  for (std::size_t a = 0; a < rs.roots.size(); ++a)
    for (std::size_t b = a + 1; b < rs.roots.size(); ++b)
      rs.min_separation = std::min(rs.min_separation, std::abs(rs.roots[a].value - rs.roots[b].value));
  rs.ill_conditioned = rs.min_separation < 1e-8;
  return rs;
}

Classification classify(const RootSet& rs) {
  Classification c;
  c.tags.resize(rs.roots.size());
  c.consistent = true;
  auto complain = [&](const std::string& msg) {
    if (c.consistent) c.problem = msg;
    c.consistent = false;
  };
  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    const Root& rt = rs.roots[i];
    const double mag = std::abs(rt.value);
    RootTag& t = c.tags[i];
    t.real = std::abs(rt.value.imag()) <= 1e-12 * mag;
    if (std::abs(mag - 1.0) <= 1e-10) t.kind = RootClass::Unimodular;
    else t.kind = mag > 1.0 ? RootClass::Expanding : RootClass::Contracting;
    if (t.real) ++c.real_count;
    if (t.kind == RootClass::Unimodular) ++c.unimodular_count;

    const bool expect_real = rs.r % 2 == 0 && 2 * rt.k == rs.r;
    const std::string where = "root (k=" + std::to_string(rt.k) + ", ell=" + std::to_string(rt.ell) + ")";
    if (t.real != expect_real) complain(where + (t.real ? " is real" : " is not real"));
    if ((t.kind == RootClass::Unimodular) != (rt.k == 0)) complain(where + " has the wrong unimodularity");
  }
  if (c.unimodular_count != 2) complain("expected exactly two unimodular roots, found " + std::to_string(c.unimodular_count));
  return c;
}

SeparationStats separation_stats(const RootSet& rs) {
  SeparationStats s;
  const double scale = std::pow(rs.lambda, 1.0 / (2.0 * rs.r));
  s.upper_bound = 2.0 * (1.0 + std::sqrt(2.0)) * scale;
  s.min_distance = INFINITY;
  s.min_modulus_gap = INFINITY;
  const int r = rs.r;
  for (std::size_t a = 0; a < rs.roots.size(); ++a) {
    for (std::size_t b = a + 1; b < rs.roots.size(); ++b) {
      const Root& x = rs.roots[a];
      const Root& y = rs.roots[b];
      const double dist = std::abs(x.value - y.value);
      s.min_distance = std::min(s.min_distance, dist);
      s.max_distance = std::max(s.max_distance, dist);
      const bool conj_pair = (x.ell == y.ell && (x.k + y.k) % r == 0) || (x.k == 0 && y.k == 0);
      if (!conj_pair) s.min_modulus_gap = std::min(s.min_modulus_gap, std::abs(std::abs(x.value) - std::abs(y.value)) / scale);
    }
  }
  s.normalized_min_distance = s.min_distance / scale;
  s.upper_ok = s.max_distance <= s.upper_bound * (1.0 + 1e-12);
  s.positive = s.min_distance > 0;
  return s;
}

RootInvariants check_root_invariants(const RootSet& rs, double tol) {
  RootInvariants inv;
  const int r = rs.r;
  const double s2 = 1.0 + std::sqrt(2.0);
  const double scale = std::pow(rs.lambda, 1.0 / (2.0 * r));
  const double slack = 1e-12;
  inv.min_other_modulus_gap = INFINITY;
  inv.bounds_ok = true;
  for (const Root& rt : rs.roots) {
    const double mag = std::abs(rt.value);
    inv.max_residual = std::max(inv.max_residual, std::abs(eval_p(rt.value, rs.lambda, r)) / std::pow(1.0 + mag, 2 * r));
    if (rt.k == 0) inv.max_unimodular_err = std::max(inv.max_unimodular_err, std::abs(mag - 1.0));
    else inv.min_other_modulus_gap = std::min(inv.min_other_modulus_gap, std::abs(mag - 1.0));
    const double dm1 = std::abs(rt.value - 1.0);
    if (mag < (1 - slack) / (s2 * s2) || mag > (1 + slack) * s2 * s2) inv.bounds_ok = false;
    if (dm1 < (1 - slack) * scale / s2 || dm1 > (1 + slack) * scale * s2) inv.bounds_ok = false;
  }
  for (int k = 0; k < r; ++k) {
    inv.max_inverse_err = std::max(inv.max_inverse_err, std::abs(rs.at(k, 0).value * rs.at(k, 1).value - 1.0));
    if (k >= 1)
      for (int ell = 0; ell < 2; ++ell)
        inv.max_conjugate_err = std::max(inv.max_conjugate_err, std::abs(rs.at(k, ell).value - std::conj(rs.at(r - k, ell).value)));
  }
  const Root& a = rs.roots[std::size_t(rs.magnitude_order[std::size_t(r - 1)])];
  const Root& b = rs.roots[std::size_t(rs.magnitude_order[std::size_t(r)])];
  inv.order_ok = a.k == 0 && b.k == 0;
  inv.passed = inv.max_residual <= tol && inv.max_inverse_err <= tol && inv.max_conjugate_err <= tol &&
               inv.max_unimodular_err <= tol && (r == 1 || inv.min_other_modulus_gap > 1e-12) && inv.bounds_ok &&
               inv.order_ok && rs.min_separation > 0;
  return inv;
}

nlohmann::json roots_json(const RootSet& rs) {
  const Classification c = classify(rs);
  nlohmann::json arr = nlohmann::json::array();
  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    const Root& rt = rs.roots[i];
    std::string cls = c.tags[i].kind == RootClass::Unimodular ? "unimodular"
                      : c.tags[i].kind == RootClass::Expanding ? "expanding"
                                                               : "contracting";
    cls += c.tags[i].real ? ",real" : ",complex";
    arr.push_back({{"k", rt.k}, {"ell", rt.ell}, {"re", rt.value.real()}, {"im", rt.value.imag()}, {"abs", std::abs(rt.value)}, {"class", cls}});
  }
  return arr;
}

}  // namespace sdspectra
