#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sdspectra/codec.hpp"
#include "sdspectra/diffmat.hpp"
#include "sdspectra/error.hpp"
#include "sdspectra/spectral.hpp"
#include "sdspectra/verify.hpp"

using namespace sdspectra;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

// FNV-1a over the canonical (key-sorted, compact) JSON dump.
std::string config_hash(const json& cfg) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : cfg.dump()) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

std::ofstream open_out(const fs::path& p) {
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream f(p, std::ios::binary);
  if (!f) throw PreconditionError("cannot write " + p.string());
  f << std::setprecision(17);
  return f;
}

void write_summary(const fs::path& p, const json& cfg, json summary) {
  summary["config"] = cfg;
  summary["config_hash"] = config_hash(cfg);
  auto f = open_out(p);
  f << summary.dump(2) << '\n';
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw PreconditionError(msg);
}

void check_list(const std::vector<int>& v, int min, const std::string& name) {
  require(!v.empty(), name + " list is empty");
  for (int x : v) require(x >= min, name + " must be at least " + std::to_string(min));
}

struct GramArgs {
  int n = 7;
  int r = 2;
  std::string out;
};

struct VerifyArgs {
  std::string suite = "all";
  std::string config;
  std::string out;
  VerifyConfig cfg;
  bool no_runtime = false;
};

struct ExperimentArgs {
  std::string kind;
  std::vector<int> n_values;
  std::vector<int> r_values;
  int d = 0;
  int m = 0;
  int m_divisor = 4;
  int ell = 32;
  int trials = 50;
  std::uint64_t seed = 0;
  std::string alphabet = "auto";
  double step = 1.0;
  int levels = 0;
  std::string out = ".";
};

int run_gram(const GramArgs& a) {
  require(a.n >= 2 && a.r >= 1, "gram needs n >= 2 and r >= 1");
  require(2 * a.r < a.n, "gram needs r < n/2");
  const json cfg = {{"command", "gram"}, {"n", a.n}, {"r", a.r}};
  const GramMatrix g = build_gram(a.n, a.r);
  if (a.out.empty()) {
    write_gram_csv(std::cout, g);
  } else {
    auto f = open_out(a.out);
    f << "# config_hash=" << config_hash(cfg) << '\n';
    write_gram_csv(f, g);
  }
  return 0;
}

int run_verify(VerifyArgs a, CLI::App& sub) {
  VerifyConfig cfg;
  if (!a.config.empty()) {
    std::ifstream f(a.config);
    require(bool(f), "cannot read " + a.config);
    cfg = verify_config_from_json(json::parse(f));
  }
  // explicit flags win over the config file
  auto over = [&](const char* flag, auto& field, const auto& value) {
    if (sub.count(flag) > 0) field = value;
  };
  over("--seed", cfg.seed, a.cfg.seed);
  over("--trials", cfg.trials, a.cfg.trials);
  over("--tol-slope", cfg.tol_slope, a.cfg.tol_slope);
  over("--tol-reversal", cfg.tol_reversal, a.cfg.tol_reversal);
  over("--tol-reversal-vector", cfg.tol_reversal_vector, a.cfg.tol_reversal_vector);
  over("--tol-root", cfg.tol_root, a.cfg.tol_root);
  over("--tol-companion", cfg.tol_companion, a.cfg.tol_companion);
  over("--tol-boundary", cfg.tol_boundary, a.cfg.tol_boundary);
  over("--tol-reconstruction", cfg.tol_reconstruction, a.cfg.tol_reconstruction);
  over("--tol-conjugacy", cfg.tol_conjugacy, a.cfg.tol_conjugacy);
  over("--tol-recurrence", cfg.tol_recurrence, a.cfg.tol_recurrence);
  over("--tol-vandermonde", cfg.tol_vandermonde, a.cfg.tol_vandermonde);
  over("--tol-vandermonde-u", cfg.tol_vandermonde_u, a.cfg.tol_vandermonde_u);
  over("--tol-state", cfg.tol_state, a.cfg.tol_state);
  over("--tol-identity", cfg.tol_identity, a.cfg.tol_identity);
  over("--inject-gram-perturbation", cfg.inject_gram_perturbation, true);
  if (a.no_runtime) cfg.enforce_runtime = false;
  require(cfg.trials >= 1, "trials must be positive");

  const json cj = {{"command", "verify"}, {"suite", a.suite}, {"verify", to_json(cfg)}};
  const SuiteResult res = run_suite(a.suite, cfg);
  json report = res.to_json();
  report["config"] = cj;
  report["config_hash"] = config_hash(cj);
  for (const auto& c : res.checks)
    std::cerr << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << " [" << std::fixed << std::setprecision(2) << c.seconds << " s]\n";
  if (a.out.empty()) {
    std::cout << report.dump(2) << '\n';
  } else {
    auto f = open_out(a.out);
    f << report.dump(2) << '\n';
  }
  return res.passed() ? 0 : 1;
}

int run_rate_distortion(const ExperimentArgs& a) {
  RateDistortionConfig rc;
  if (!a.n_values.empty()) rc.n_values = a.n_values;
  if (!a.r_values.empty()) rc.r_values = a.r_values;
  if (a.d > 0) rc.d = a.d;
  rc.m_divisor = a.m_divisor;
  rc.trials = a.trials;
  rc.seed = a.seed;
  rc.alphabet = {a.alphabet, a.step, a.levels};
  check_list(rc.n_values, 4, "N");
  check_list(rc.r_values, 1, "r");
  require(rc.m_divisor >= 1 && rc.trials >= 1 && rc.d >= 1, "d, trials and m divisor must be positive");
  const json cfg = {{"command", "experiment"}, {"kind", "rate-distortion"}, {"n", rc.n_values}, {"r", rc.r_values}, {"d", rc.d}, {"m_divisor", rc.m_divisor},
                    {"trials", rc.trials}, {"seed", rc.seed}, {"alphabet", {{"kind", a.alphabet}, {"step", a.step}, {"levels", a.levels}}}};
  const auto recs = rate_distortion_experiment(rc);
  {
    auto f = open_out(fs::path(a.out) / "rate_distortion.csv");
    f << "# config_hash=" << config_hash(cfg) << '\n';
    write_rate_distortion_csv(f, recs);
  }
  json rows = json::array();
  for (const auto& s : summarize(recs, rc))
    rows.push_back({{"r", s.r}, {"d", s.d}, {"N", s.n_values}, {"median_err", s.median_err}, {"slope", s.slope}, {"non_increasing", s.non_increasing},
                    {"max_identity_gap", s.max_identity_gap}, {"bits_exact", s.bits_exact}});
  write_summary(fs::path(a.out) / "rate_distortion_summary.json", cfg, {{"slopes", rows}});
  return 0;
}

int run_sigma_min(const ExperimentArgs& a) {
  const int r = a.r_values.empty() ? 2 : a.r_values.front();
  const int m = a.m > 0 ? a.m : 512;
  const int d = a.d > 0 ? a.d : 4;
  require(a.r_values.size() <= 1, "sigma-min takes a single r");
  require(r >= 1 && m >= 4 && a.ell >= d && a.ell <= m && a.trials >= 1, "sigma-min needs r >= 1, d <= ell <= m, trials >= 1");
  const json cfg = {{"command", "experiment"}, {"kind", "sigma-min"}, {"r", r}, {"m", m}, {"ell", a.ell}, {"d", d}, {"trials", a.trials}, {"seed", a.seed}};
  std::vector<std::uint64_t> seeds;
  for (int k = 0; k < a.trials; ++k) seeds.push_back(mix_seed(a.seed, 11, std::uint64_t(k), 0));
  const SigmaMinStats st = sigma_min_check(r, m, a.ell, d, seeds);
  {
    auto f = open_out(fs::path(a.out) / "sigma_min.csv");
    f << "# config_hash=" << config_hash(cfg) << '\n' << "trial,seed,sigma_min\n";
    for (std::size_t k = 0; k < seeds.size(); ++k) f << k << ',' << seeds[k] << ',' << st.values[k] << '\n';
  }
  write_summary(fs::path(a.out) / "sigma_min_summary.json", cfg,
                {{"median", st.median}, {"min", st.min}, {"q10", st.q10}, {"q25", st.q25}, {"q75", st.q75}, {"q90", st.q90}, {"sqrt_ell", st.sqrt_ell},
                 {"median_over_sqrt_ell", st.median / st.sqrt_ell}});
  return 0;
}

int run_flatness(const ExperimentArgs& a) {
  const std::vector<int> ns = a.n_values.empty() ? std::vector<int>{128, 256, 512, 1024} : a.n_values;
  const std::vector<int> rs = a.r_values.empty() ? std::vector<int>{2} : a.r_values;
  check_list(ns, 3, "N");
  check_list(rs, 1, "r");
  for (int n : ns)
    for (int r : rs) require(2 * r < n, "flatness-sweep needs r < N/2");
  const json cfg = {{"command", "experiment"}, {"kind", "flatness-sweep"}, {"n", ns}, {"r", rs}};
  SpectralOptions opt;
  opt.compute_left = false;
  auto f = open_out(fs::path(a.out) / "flatness.csv");
  f << "# config_hash=" << config_hash(cfg) << '\n' << "N,r,s,max_v_inf\n";
  json rows = json::array();
  for (int r : rs) {
    std::vector<double> s_vals;
    for (int n : ns) {
      const FlatnessReport fr = flatness(eigh_gram(n, r, opt));
      s_vals.push_back(fr.s);
      f << n << ',' << r << ',' << fr.s << ',' << fr.s / std::sqrt(double(n)) << '\n';
    }
    rows.push_back({{"r", r}, {"N", ns}, {"s", s_vals}, {"s_last_over_first", s_vals.back() / s_vals.front()}});
  }
  write_summary(fs::path(a.out) / "flatness_summary.json", cfg, {{"sweeps", rows}});
  return 0;
}

int run_sigma_decay(const ExperimentArgs& a) {
  const std::vector<int> ns = a.n_values.empty() ? std::vector<int>{512} : a.n_values;
  const std::vector<int> rs = a.r_values.empty() ? std::vector<int>{1, 2, 3} : a.r_values;
  check_list(ns, 16, "N");
  check_list(rs, 1, "r");
  for (int n : ns)
    for (int r : rs) require(2 * r < n, "sigma-decay needs r < N/2");
  const json cfg = {{"command", "experiment"}, {"kind", "sigma-decay"}, {"n", ns}, {"r", rs}};
  SpectralOptions opt;
  opt.compute_left = false;
  auto f = open_out(fs::path(a.out) / "sigma_decay.csv");
  f << "# config_hash=" << config_hash(cfg) << '\n' << "N,r,j,j_over_N,sigma_N_minus_j_plus_1\n";
  json rows = json::array();
  for (int n : ns)
    for (int r : rs) {
      const SpectralDecomposition sd = eigh_gram(n, r, opt);
      for (int j = 1; j <= n; ++j) f << n << ',' << r << ',' << j << ',' << double(j) / n << ',' << sd.sigma[n - j] << '\n';
      const auto [lo, hi] = middle_decade(n);
      rows.push_back({{"N", n}, {"r", r}, {"j_lo", lo}, {"j_hi", hi}, {"slope", sigma_decay_slope(sd, lo, hi)}});
    }
  write_summary(fs::path(a.out) / "sigma_decay_summary.json", cfg, {{"fits", rows}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sdspectra: difference-matrix spectra and sigma-delta codec experiments"};
  app.require_subcommand(1);

  GramArgs ga;
  auto* gram = app.add_subcommand("gram", "write the exact Gram matrix (D^r)^T D^r as CSV");
  gram->add_option("--n", ga.n, "matrix size")->required();
  gram->add_option("--r", ga.r, "difference order")->required();
  gram->add_option("--out", ga.out, "output CSV (stdout when omitted)");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run an invariant suite; exit status 0 iff every check passes");
  verify->add_option("suite", va.suite, "all|gram|spectral|roots|recurrence|vandermonde|sigmadelta|codec")->check(CLI::IsMember(suite_names()));
  verify->add_option("--config", va.config, "JSON file of verify settings")->check(CLI::ExistingFile);
  verify->add_option("--out", va.out, "JSON report path (stdout when omitted)");
  verify->add_option("--seed", va.cfg.seed);
  verify->add_option("--trials", va.cfg.trials);
  verify->add_option("--tol-slope", va.cfg.tol_slope);
  verify->add_option("--tol-reversal", va.cfg.tol_reversal);
  verify->add_option("--tol-reversal-vector", va.cfg.tol_reversal_vector);
  verify->add_option("--tol-root", va.cfg.tol_root);
  verify->add_option("--tol-companion", va.cfg.tol_companion);
  verify->add_option("--tol-boundary", va.cfg.tol_boundary);
  verify->add_option("--tol-reconstruction", va.cfg.tol_reconstruction);
  verify->add_option("--tol-conjugacy", va.cfg.tol_conjugacy);
  verify->add_option("--tol-recurrence", va.cfg.tol_recurrence);
  verify->add_option("--tol-vandermonde", va.cfg.tol_vandermonde);
  verify->add_option("--tol-vandermonde-u", va.cfg.tol_vandermonde_u);
  verify->add_option("--tol-state", va.cfg.tol_state);
  verify->add_option("--tol-identity", va.cfg.tol_identity);
  verify->add_flag("--inject-gram-perturbation", "corrupt one Gram entry (sensitivity check)");
  verify->add_flag("--no-runtime-limits", va.no_runtime, "do not fail checks that exceed their time budget");

  ExperimentArgs ea;
  auto* exp = app.add_subcommand("experiment", "run an experiment and write CSV records plus a summary JSON");
  exp->add_option("kind", ea.kind, "rate-distortion|sigma-min|flatness-sweep|sigma-decay")
      ->required()
      ->check(CLI::IsMember({"rate-distortion", "sigma-min", "flatness-sweep", "sigma-decay"}));
  exp->add_option("--n", ea.n_values, "signal lengths")->delimiter(',');
  exp->add_option("--r", ea.r_values, "difference orders")->delimiter(',');
  exp->add_option("--d", ea.d, "frame dimension");
  exp->add_option("--m", ea.m, "sigma-min: rows of the sampled DFT");
  exp->add_option("--m-divisor", ea.m_divisor, "rate-distortion: m = N / divisor");
  exp->add_option("--ell", ea.ell, "sigma-min: number of singular vectors");
  exp->add_option("--trials", ea.trials, "trials per point (seeds for sigma-min)");
  auto* seed_opt = exp->add_option("--seed", ea.seed, "master seed (required for stochastic kinds)");
  exp->add_option("--alphabet", ea.alphabet, "auto|one-bit|multilevel")->check(CLI::IsMember({"auto", "one-bit", "multilevel"}));
  exp->add_option("--step", ea.step, "multilevel step");
  exp->add_option("--levels", ea.levels, "multilevel level count (0: smallest sufficient)");
  exp->add_option("--out", ea.out, "output directory");

  app.set_config("--config-file", "", "TOML/INI file of flag values; command-line flags override it");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*gram) return run_gram(ga);
    if (*verify) return run_verify(va, *verify);
    if (ea.kind == "rate-distortion" || ea.kind == "sigma-min") require(seed_opt->count() > 0, ea.kind + " needs --seed");
    if (ea.kind == "rate-distortion") return run_rate_distortion(ea);
    if (ea.kind == "sigma-min") return run_sigma_min(ea);
    if (ea.kind == "flatness-sweep") return run_flatness(ea);
    return run_sigma_decay(ea);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
