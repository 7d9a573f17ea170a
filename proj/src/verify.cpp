#include "sdspectra/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "sdspectra/charpoly.hpp"
#include "sdspectra/codec.hpp"
#include "sdspectra/diffmat.hpp"
#include "sdspectra/error.hpp"
#include "sdspectra/recurrence.hpp"
#include "sdspectra/sigmadelta.hpp"
#include "sdspectra/spectral.hpp"
#include "sdspectra/vandermonde.hpp"

namespace sdspectra {

using nlohmann::json;

bool SuiteResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

json SuiteResult::to_json() const {
  json arr = json::array();
  for (const auto& c : checks)
    arr.push_back({{"name", c.name}, {"passed", c.passed}, {"measured", c.measured}, {"detail", c.detail}, {"seconds", c.seconds},
                   {"limit_seconds", c.limit_seconds}});
  return {{"suite", suite}, {"passed", passed()}, {"checks", arr}};
}

json to_json(const VerifyConfig& c) {
  return {{"tol_slope", c.tol_slope},
          {"tol_reversal", c.tol_reversal},
          {"tol_reversal_vector", c.tol_reversal_vector},
          {"tol_root", c.tol_root},
          {"tol_companion", c.tol_companion},
          {"tol_boundary", c.tol_boundary},
          {"tol_reconstruction", c.tol_reconstruction},
          {"tol_conjugacy", c.tol_conjugacy},
          {"tol_recurrence", c.tol_recurrence},
          {"tol_vandermonde", c.tol_vandermonde},
          {"tol_vandermonde_u", c.tol_vandermonde_u},
          {"tol_state", c.tol_state},
          {"tol_identity", c.tol_identity},
          {"seed", c.seed},
          {"trials", c.trials},
          {"inject_gram_perturbation", c.inject_gram_perturbation},
          {"enforce_runtime", c.enforce_runtime}};
}

VerifyConfig verify_config_from_json(const json& j, VerifyConfig c) {
  auto get = [&](const char* key, auto& field) {
    if (j.contains(key)) field = j.at(key).get<std::decay_t<decltype(field)>>();
  };
  get("tol_slope", c.tol_slope);
  get("tol_reversal", c.tol_reversal);
  get("tol_reversal_vector", c.tol_reversal_vector);
  get("tol_root", c.tol_root);
  get("tol_companion", c.tol_companion);
  get("tol_boundary", c.tol_boundary);
  get("tol_reconstruction", c.tol_reconstruction);
  get("tol_conjugacy", c.tol_conjugacy);
  get("tol_recurrence", c.tol_recurrence);
  get("tol_vandermonde", c.tol_vandermonde);
  get("tol_vandermonde_u", c.tol_vandermonde_u);
  get("tol_state", c.tol_state);
  get("tol_identity", c.tol_identity);
  get("seed", c.seed);
  get("trials", c.trials);
  get("inject_gram_perturbation", c.inject_gram_perturbation);
  get("enforce_runtime", c.enforce_runtime);
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!to_json(VerifyConfig{}).contains(it.key())) throw PreconditionError("unknown verify config key '" + it.key() + "'");
  if (c.trials < 1) throw PreconditionError("trials must be positive");
  return c;
}

namespace {

using IMat = std::vector<std::vector<std::int64_t>>;

IMat int_mul(const IMat& a, const IMat& b) {
  const std::size_t n = a.size(), k = b.size(), m = b[0].size();
  IMat c(n, std::vector<std::int64_t>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

IMat int_transpose(const IMat& a) {
  IMat t(a[0].size(), std::vector<std::int64_t>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
  return t;
}

IMat int_D(int n) {
  IMat d(static_cast<std::size_t>(n), std::vector<std::int64_t>(std::size_t(n), 0));
  for (int i = 0; i < n; ++i) {
    d[std::size_t(i)][std::size_t(i)] = 1;
    if (i > 0) d[std::size_t(i)][std::size_t(i - 1)] = -1;
  }
  return d;
}

std::vector<double> geomspace(double a, double b, int k) {
  std::vector<double> out(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) out[std::size_t(i)] = a * std::pow(b / a, k == 1 ? 0.0 : double(i) / (k - 1));
  return out;
}

// Companion matrix eigenvalues of p(x) = sum_k C(2r,k)(-x)^k - (-1)^r lambda x^r (monic).
std::vector<cplx> companion_roots(double lambda, int r) {
  const int deg = 2 * r;
  std::vector<double> coef(std::size_t(deg) + 1);
  for (int k = 0; k <= deg; ++k) coef[std::size_t(k)] = double(binom(deg, k)) * (k % 2 ? -1.0 : 1.0);
  coef[std::size_t(r)] -= (r % 2 ? -1.0 : 1.0) * lambda;
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) c(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) c(i, deg - 1) = -coef[std::size_t(i)] / coef[std::size_t(deg)];
  Eigen::EigenSolver<Eigen::MatrixXd> es(c, false);
  std::vector<cplx> out;
  for (int i = 0; i < deg; ++i) out.push_back(es.eigenvalues()[i]);
  return out;
}

double hausdorff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  auto one_way = [](const std::vector<cplx>& x, const std::vector<cplx>& y) {
    double worst = 0;
    for (const auto& p : x) {
      double best = INFINITY;
      for (const auto& q : y) best = std::min(best, std::abs(p - q));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(one_way(a, b), one_way(b, a));
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(4);
  os << v;
  return os.str();
}

}  // namespace

Check check_gram_exactness(const VerifyConfig& cfg) {
  Check c;
  c.name = "gram exactness";
  int pairs = 0, mismatches = 0;
  std::string first_bad;
  for (int n = 5; n <= 64; ++n) {
    const IMat d = int_D(n);
    IMat dr = d;
    for (int r = 1; r <= 6; ++r) {
      if (r > 1) dr = int_mul(dr, d);
      if (2 * r >= n) continue;
      ++pairs;
      const IMat prod = int_mul(int_transpose(dr), dr);
      GramMatrix g = build_gram(n, r);
      if (cfg.inject_gram_perturbation && n == 20 && r == 3) g.at(10, 11) += 1;
      bool same = true;
      for (int i = 1; i <= n && same; ++i)
        for (int j = 1; j <= n; ++j)
          if (g(i, j) != prod[std::size_t(i - 1)][std::size_t(j - 1)]) {
            same = false;
            if (first_bad.empty()) first_bad = "n=" + std::to_string(n) + " r=" + std::to_string(r) + " entry (" + std::to_string(i) + "," + std::to_string(j) + ")";
            break;
          }
      if (!same) ++mismatches;
    }
  }
  static const std::int64_t shown[7][7] = {{6, -4, 1, 0, 0, 0, 0},  {-4, 6, -4, 1, 0, 0, 0}, {1, -4, 6, -4, 1, 0, 0}, {0, 1, -4, 6, -4, 1, 0},
                                           {0, 0, 1, -4, 6, -4, 1}, {0, 0, 0, 1, -4, 5, -2}, {0, 0, 0, 0, 1, -2, 1}};
  const GramMatrix g7 = build_gram(7, 2);
  bool verbatim = true;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) verbatim = verbatim && g7(i + 1, j + 1) == shown[i][j];
  c.passed = mismatches == 0 && verbatim;
  c.measured = {{"pairs", pairs}, {"mismatched_pairs", mismatches}, {"displayed_7x7_reproduced", verbatim}};
  c.detail = mismatches ? "first mismatch at " + first_bad : std::to_string(pairs) + " (n,r) pairs equal the integer product exactly";
  return c;
}

Check check_spectral_bounds(const VerifyConfig& cfg) {
  Check c;
  c.name = "spectral bounds";
  bool ok = true;
  json bounds = json::array();
  SpectralOptions top;
  top.compute_left = false;
  for (int n : {50, 200, 1000})
    for (int r : {1, 2, 3}) {
      const SigmaBoundsReport rep = check_sigma_bounds(eigh_gram(n, r, top));
      ok = ok && rep.ok();
      bounds.push_back({{"N", n}, {"r", r}, {"sigma1", rep.sigma1}, {"upper", rep.upper}, {"holds", rep.ok()}});
    }
  json slopes = json::array();
  SpectralOptions full;
  full.compute_left = false;
  for (int r : {1, 2, 3}) {
    const SigmaBoundsReport rep = check_sigma_bounds(eigh_gram(512, r, full));
    const bool good = std::abs(rep.slope - r) <= cfg.tol_slope;
    ok = ok && good;
    slopes.push_back({{"N", 512}, {"r", r}, {"j_lo", rep.j_lo}, {"j_hi", rep.j_hi}, {"slope", rep.slope}, {"within_tol", good}});
  }
  c.passed = ok;
  c.measured = {{"upper_bound", bounds}, {"decay_slope", slopes}};
  c.detail = "slopes r=1,2,3: " + fmt(slopes[0]["slope"]) + ", " + fmt(slopes[1]["slope"]) + ", " + fmt(slopes[2]["slope"]);
  return c;
}

Check check_reversal_symmetry(const VerifyConfig& cfg) {
  Check c;
  c.name = "reversal symmetry";
  bool ok = true;
  double worst_norm = 0, worst_vec = 0;
  json rows = json::array();
  int cases = 0;
  for (int r : {2, 3})
    for (int n = 2 * r + 1; n <= 256; ++n) {
      const ReversalReport rep = check_reversal(eigh_gram(n, r), cfg.tol_reversal, cfg.tol_reversal_vector);
      ++cases;
      ok = ok && rep.passed;
      worst_norm = std::max(worst_norm, rep.max_norm_gap);
      worst_vec = std::max(worst_vec, rep.max_vector_gap);
      if (!rep.passed || n % 64 == 0)
        rows.push_back({{"N", n}, {"r", r}, {"max_norm_gap", rep.max_norm_gap}, {"max_vector_gap", rep.max_vector_gap}, {"passed", rep.passed}});
    }
  c.passed = ok;
  c.measured = {{"cases", cases}, {"sampled_or_failing", rows}, {"max_norm_gap", worst_norm}, {"max_vector_gap", worst_vec}};
  c.detail = "max | ||u_j||_inf - ||v_j||_inf | = " + fmt(worst_norm);
  return c;
}

Check check_flatness(const VerifyConfig&) {
  Check c;
  c.name = "flatness";
  SpectralOptions opt;
  opt.compute_left = false;
  auto s_of = [&](int n, int r) { return flatness(eigh_gram(n, r, opt)).s; };
  const double s128 = s_of(128, 2), s1024 = s_of(1024, 2);
  const double s64 = s_of(64, 3), s512 = s_of(512, 3);
  json r1 = json::array();
  bool r1_ok = true;
  for (int n : {64, 128, 256, 512, 1024}) {
    const double s = s_of(n, 1);
    r1_ok = r1_ok && s <= 2.0;
    r1.push_back({{"N", n}, {"s", s}});
  }
  const bool r2_ok = s1024 <= 2.0 * s128;
  const bool r3_ok = s512 <= 2.0 * s64;
  c.passed = r1_ok && r2_ok && r3_ok;
  c.measured = {{"r2", {{"s128", s128}, {"s1024", s1024}, {"holds", r2_ok}}}, {"r3", {{"s64", s64}, {"s512", s512}, {"holds", r3_ok}}}, {"r1", r1}};
  c.detail = "s(1024)/s(128) r=2: " + fmt(s1024 / s128) + "; s(512)/s(64) r=3: " + fmt(s512 / s64);
  return c;
}

Check check_root_suite(const VerifyConfig& cfg) {
  Check c;
  c.name = "root suite";
  int cases = 0, failures = 0;
  double worst_res = 0, worst_pair = 0, worst_comp = 0, worst_ratio = 0;
  std::string first;
  for (int r = 2; r <= 6; ++r) {
    for (double lam : geomspace(1e-4, 0.9 * std::pow(4.0, r), 50)) {
      ++cases;
      const RootSet rs = roots_for(lam, r);
      const RootInvariants inv = check_root_invariants(rs, cfg.tol_root);
      const Classification cl = classify(rs);
      const SeparationStats sep = separation_stats(rs);
      const double hd = hausdorff([&] {
        std::vector<cplx> v;
        for (const auto& x : rs.roots) v.push_back(x.value);
        return v;
      }(), companion_roots(lam, r));
      worst_res = std::max(worst_res, inv.max_residual);
      worst_pair = std::max({worst_pair, inv.max_inverse_err, inv.max_conjugate_err});
      worst_comp = std::max(worst_comp, hd);
      worst_ratio = std::max(worst_ratio, sep.max_distance / sep.upper_bound);
      const bool good = inv.passed && cl.consistent && sep.upper_ok && sep.positive && hd <= cfg.tol_companion;
      if (!good) {
        ++failures;
        if (first.empty())
          first = "r=" + std::to_string(r) + " lambda=" + fmt(lam) + (inv.passed ? "" : " invariants") + (cl.consistent ? "" : " classification: " + cl.problem) +
                  (sep.upper_ok ? "" : " separation bound") + (hd <= cfg.tol_companion ? "" : " companion " + fmt(hd));
      }
    }
  }
  c.passed = failures == 0;
  c.measured = {{"cases", cases},
                {"failures", failures},
                {"max_scaled_residual", worst_res},
                {"max_pairing_err", worst_pair},
                {"max_companion_hausdorff", worst_comp},
                {"max_distance_over_bound", worst_ratio}};
  c.detail = failures ? first : std::to_string(cases) + " (r, lambda) cases";
  return c;
}

Check check_reconstruction(const VerifyConfig& cfg) {
  Check c;
  c.name = "eigenvector reconstruction";
  bool ok = true;
  json rows = json::array();
  for (int r : {2, 3}) {
    const int n = 64;
    SpectralOptions opt;
    opt.compute_left = false;
    const SpectralDecomposition sd = eigh_gram(n, r, opt);
    double w_bd = 0, w_diff = 0, w_conj = 0, w_rec = 0;
    int used = 0;
    for (int j = 0; j < n; ++j) {
      const Vec v = sd.V.col(j);
      w_rec = std::max(w_rec, check_recurrence(extend_sequence(v, sd.lambda[j], r)));
      if (sd.lambda[j] < 1e-6) continue;
      ++used;
      const CoefficientSet cs = solve_coeffs(sd.lambda[j], r, n);
      const Vec w = reconstruct(cs);
      w_bd = std::max(w_bd, cs.residual_rel);
      w_diff = std::max(w_diff, std::min((w - v).cwiseAbs().maxCoeff(), (w + v).cwiseAbs().maxCoeff()));
      w_conj = std::max(w_conj, conjugacy_error(cs));
    }
    const double rec_rel = w_rec / sd.lambda[0];
    const bool good = w_bd <= cfg.tol_boundary && w_diff <= cfg.tol_reconstruction && w_conj <= cfg.tol_conjugacy && rec_rel <= cfg.tol_recurrence;
    ok = ok && good;
    rows.push_back({{"N", n}, {"r", r}, {"eigenvalues_used", used}, {"max_boundary_sigma_ratio", w_bd}, {"max_vector_diff", w_diff}, {"max_conjugacy_err", w_conj},
                    {"max_recurrence_residual_over_lambda1", rec_rel}, {"passed", good}});
  }
  c.passed = ok;
  c.measured = {{"cases", rows}};
  c.detail = "max diff r=2: " + fmt(rows[0]["max_vector_diff"]) + ", r=3: " + fmt(rows[1]["max_vector_diff"]);
  return c;
}

Check check_small_lambda(const VerifyConfig&) {
  Check c;
  c.name = "small-lambda dynamical bound";
  const int n = 256, r = 2;
  SpectralOptions opt;
  opt.compute_left = false;
  const SpectralDecomposition sd = eigh_gram(n, r, opt);
  const double sn = sigma_min_D(n);
  bool ok = true;
  json rows = json::array();
  for (int j = n - 4; j <= n; ++j) {
    const double alpha = n * std::pow(sd.sigma[j - 1], 1.0 / r) / (n * sn);
    const DynamicalBound b = dynamical_bound(sd, j, alpha, sn);
    ok = ok && b.holds;
    rows.push_back({{"j", j}, {"alpha", alpha}, {"v_inf", b.v_inf}, {"bound", b.bound}, {"holds", b.holds}});
  }
  c.passed = ok;
  c.measured = {{"sigma_N_D", sn}, {"rows", rows}};
  c.detail = "j=N: ||v||_inf " + fmt(rows[4]["v_inf"]) + " vs bound " + fmt(rows[4]["bound"]);
  return c;
}

Check check_vandermonde(const VerifyConfig& cfg) {
  Check c;
  c.name = "vandermonde inverse";
  Rng rng(mix_seed(cfg.seed, 8, 0, 0));
  double worst = 0, worst_u = 0;
  for (int draw = 0; draw < 100; ++draw) {
    const int n = 1 + draw % 10;
    std::vector<cplx> x;
    while (int(x.size()) < n) {
      const cplx z(3.0 * rng.uniform() - 1.5, 3.0 * rng.uniform() - 1.5);
      if (std::all_of(x.begin(), x.end(), [&](cplx y) { return std::abs(y - z) >= 0.3; })) x.push_back(z);
    }
    const CMat a = vandermonde_matrix(x);
    worst = std::max(worst, (a * vand_inverse(x) - CMat::Identity(n, n)).cwiseAbs().maxCoeff());
    worst_u = std::max(worst_u, (inv_U(x) - inv_U_recursive(x)).cwiseAbs().maxCoeff());
  }
  c.passed = worst <= cfg.tol_vandermonde && worst_u <= cfg.tol_vandermonde_u;
  c.measured = {{"draws", 100}, {"max_identity_err", worst}, {"max_closed_vs_recursive", worst_u}};
  c.detail = "max |A A^-1 - I| = " + fmt(worst);
  return c;
}

Check check_sigma_delta(const VerifyConfig& cfg) {
  Check c;
  c.name = "sigma-delta exactness and stability";
  const int n = 256;
  double worst_res = 0, worst_ml = 0, worst_fo = 0;
  bool ok = true;
  for (int sig = 0; sig < 100; ++sig) {
    Rng rng(mix_seed(cfg.seed, 9, std::uint64_t(sig), 0));
    const double amp = rng.uniform();
    Vec y(n);
    for (int i = 0; i < n; ++i) y[i] = amp * (2.0 * rng.uniform() - 1.0);
    const double y_inf = y.cwiseAbs().maxCoeff();
    for (int r : {1, 2, 3}) {
      const Alphabet a = Alphabet::multilevel(1.0, minimal_levels(1.0, y_inf, r));
      const RunReport rep = verify_run(quantize_order_r(y, r, a));
      worst_res = std::max(worst_res, rep.max_residual);
      worst_ml = std::max(worst_ml, rep.u_inf / (a.step / 2.0));
      ok = ok && rep.bounded && rep.max_residual <= cfg.tol_state;
    }
    const RunReport fo = verify_run(quantize_order1(y));
    worst_res = std::max(worst_res, fo.max_residual);
    worst_fo = std::max(worst_fo, fo.u_inf);
    ok = ok && fo.bounded && fo.max_residual <= cfg.tol_state;
  }
  c.passed = ok;
  c.measured = {{"signals", 100}, {"N", n}, {"max_state_residual", worst_res}, {"max_u_over_half_step_multilevel", worst_ml}, {"max_u_first_order", worst_fo}};
  c.detail = "max residual " + fmt(worst_res) + ", multilevel ||u||/(step/2) " + fmt(worst_ml) + ", first-order ||u|| " + fmt(worst_fo);
  return c;
}

Check check_codec(const VerifyConfig& cfg) {
  Check c;
  c.name = "codec identity and decay";
  RateDistortionConfig rd;
  rd.seed = cfg.seed;
  rd.trials = cfg.trials;
  const auto recs = rate_distortion_experiment(rd);
  const auto sums = summarize(recs, rd);
  bool ok = true;
  json rows = json::array();
  for (const auto& s : sums) {
    const double need = s.r == 1 ? -0.7 : -1.5;
    const bool slope_ok = s.slope <= need;
    const bool id_ok = s.max_identity_gap <= cfg.tol_identity;
    ok = ok && slope_ok && id_ok && s.bits_exact;
    rows.push_back({{"r", s.r},
                    {"d", s.d},
                    {"N", s.n_values},
                    {"median_err", s.median_err},
                    {"slope", s.slope},
                    {"slope_required", need},
                    {"non_increasing", s.non_increasing},
                    {"max_identity_gap", s.max_identity_gap},
                    {"bits_exact", s.bits_exact},
                    {"alphabet_size", alphabet_for(rd.alphabet, s.r).size()}});
  }
  c.passed = ok;
  c.measured = {{"cases", rows}};
  c.detail = "slopes r=1: " + fmt(sums[0].slope) + ", r=2: " + fmt(sums[1].slope);
  return c;
}

Check check_sigma_min(const VerifyConfig& cfg) {
  Check c;
  c.name = "sigma_min experiment";
  std::vector<std::uint64_t> seeds;
  for (int k = 0; k < 50; ++k) seeds.push_back(mix_seed(cfg.seed, 11, std::uint64_t(k), 0));
  const SigmaMinStats st = sigma_min_check(2, 512, 32, 4, seeds);
  c.passed = st.median >= 0.5 * st.sqrt_ell;
  c.measured = {{"m", st.m}, {"ell", st.ell}, {"d", st.d}, {"r", st.r}, {"median", st.median}, {"min", st.min}, {"q10", st.q10}, {"q90", st.q90},
                {"median_over_sqrt_ell", st.median / st.sqrt_ell}};
  c.detail = "median / sqrt(ell) = " + fmt(st.median / st.sqrt_ell);
  return c;
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {1, "Gram exactness", "gram", 5, check_gram_exactness},
      {2, "Spectral bounds", "spectral", 60, check_spectral_bounds},
      {3, "Reversal symmetry", "spectral", 0, check_reversal_symmetry},
      {4, "Flatness", "spectral", 300, check_flatness},
      {5, "Root suite", "roots", 10, check_root_suite},
      {6, "Reconstruction", "recurrence", 60, check_reconstruction},
      {7, "Small-lambda bound", "spectral", 0, check_small_lambda},
      {8, "Vandermonde", "vandermonde", 0, check_vandermonde},
      {9, "Sigma-Delta exactness and stability", "sigmadelta", 0, check_sigma_delta},
      {10, "Codec identity and decay", "codec", 600, check_codec},
      {11, "sigma_min experiment", "codec", 0, check_sigma_min},
  };
  return list;
}

std::vector<std::string> suite_names() { return {"gram", "spectral", "roots", "recurrence", "vandermonde", "sigmadelta", "codec", "all"}; }

Check run_criterion(const Criterion& cr, const VerifyConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  Check ch;
  try {
    ch = cr.run(cfg);
  } catch (const std::exception& e) {
    ch.name = cr.title;
    ch.passed = false;
    ch.detail = std::string("exception: ") + e.what();
  }
  ch.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  ch.limit_seconds = cr.limit_seconds;
  ch.measured["criterion"] = cr.id;
  if (cfg.enforce_runtime && cr.limit_seconds > 0 && ch.seconds > cr.limit_seconds) {
    ch.passed = false;
    ch.detail += " (runtime " + fmt(ch.seconds) + " s over limit " + fmt(cr.limit_seconds) + " s)";
  }
  return ch;
}

SuiteResult run_suite(const std::string& suite, const VerifyConfig& cfg) {
  const auto names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) throw PreconditionError("unknown suite '" + suite + "'");
  SuiteResult res;
  res.suite = suite;
  for (const Criterion& cr : criteria())
    if (suite == "all" || cr.suite == suite) res.checks.push_back(run_criterion(cr, cfg));
  return res;
}

}  // namespace sdspectra
