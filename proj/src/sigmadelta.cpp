#include "sdspectra/sigmadelta.hpp"

#include <cmath>
#include <ostream>

#include "sdspectra/error.hpp"

namespace sdspectra {

Alphabet Alphabet::multilevel(double step, int levels) {
  if (!(step > 0) || levels < 1) throw PreconditionError("alphabet needs step > 0 and levels >= 1");
  return {step, levels};
}

double Alphabet::quantize(double h) const {
  const double k = std::min(std::floor(std::abs(h) / step), double(levels - 1));
  const double mag = step * (k + 0.5);
  return h < 0 ? -mag : mag;
}

std::int64_t Alphabet::symbol(double level) const { return std::llround(2.0 * level / step); }

bool Alphabet::sufficient(double y_inf, int r) const { return max_level() >= y_inf + std::ldexp(step, r - 1); }

int minimal_levels(double step, double y_inf, int r) {
  // (2L-1) step/2 >= y_inf + 2^{r-1} step
  const double need = (y_inf + std::ldexp(step, r - 1)) / step + 0.5;
  int L = std::max(1, int(std::ceil(need - 1e-12)));
  while (!Alphabet{step, L}.sufficient(y_inf, r)) ++L;
  return L;
}

QuantizationRun quantize_order1(const Vec& y) {
  QuantizationRun run;
  run.y = y;
  run.r = 1;
  run.alphabet = Alphabet::one_bit();
  const Eigen::Index n = y.size();
  run.q.resize(n);
  run.u.resize(n);
  run.symbols.resize(std::size_t(n));
  double prev = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double h = y[i] + prev;
    const double q = h >= 0 ? 1.0 : -1.0;
    run.q[i] = q;
    run.symbols[std::size_t(i)] = q > 0 ? 1 : -1;
    run.u[i] = prev = h - q;
  }
  run.stability = (n == 0 || y.cwiseAbs().maxCoeff() <= 1.0) ? Stability::FirstOrderClassical : Stability::Unverified;
  return run;
}

QuantizationRun quantize_order_r(const Vec& y, int r, const Alphabet& alphabet) {
  if (r < 1) throw PreconditionError("quantize_order_r needs r >= 1");
  const Eigen::Index n = y.size();
  const double y_inf = n ? y.cwiseAbs().maxCoeff() : 0.0;
  const bool suff = alphabet.sufficient(y_inf, r);
  if (!alphabet.is_one_bit() && !suff)
    throw PreconditionError("alphabet insufficient: max level " + std::to_string(alphabet.max_level()) + " < ||y||_inf + 2^{r-1} step = " +
                            std::to_string(y_inf + std::ldexp(alphabet.step, r - 1)));

  std::vector<double> c(std::size_t(r) + 1);
  for (int k = 1; k <= r; ++k) c[std::size_t(k)] = (k % 2 == 1 ? 1.0 : -1.0) * double(binom(r, k));

  QuantizationRun run;
  run.y = y;
  run.r = r;
  run.alphabet = alphabet;
  run.q.resize(n);
  run.u.resize(n);
  run.symbols.resize(std::size_t(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    double h = y[i];
    for (int k = 1; k <= r && k <= i; ++k) h += c[std::size_t(k)] * run.u[i - k];
    const double q = alphabet.quantize(h);
    run.q[i] = q;
    run.symbols[std::size_t(i)] = alphabet.symbol(q);
    run.u[i] = h - q;
  }
  if (suff) run.stability = Stability::Guaranteed;
  else if (r == 1 && y_inf <= 1.0) run.stability = Stability::FirstOrderClassical;
  else run.stability = Stability::Unverified;
  return run;
}

RunReport verify_run(const QuantizationRun& run) {
  RunReport rep;
  const Vec lhs = apply_Dr(run.u, run.r);
  const Vec rhs = run.y - run.q;
  rep.max_residual = run.u.size() ? (lhs - rhs).cwiseAbs().maxCoeff() : 0.0;
  rep.u_inf = run.u.size() ? run.u.cwiseAbs().maxCoeff() : 0.0;
  rep.y_inf = run.y.size() ? run.y.cwiseAbs().maxCoeff() : 0.0;
  switch (run.stability) {
    case Stability::Guaranteed: rep.bounded = rep.u_inf <= run.alphabet.step / 2.0; break;
    case Stability::FirstOrderClassical: rep.bounded = rep.u_inf <= 1.0; break;
    case Stability::Unverified: rep.bounded = true; break;
  }
  return rep;
}

void write_run_csv(std::ostream& os, const QuantizationRun& run) {
  const auto prec = os.precision(17);
  os << "i,y,q,u\n";
  for (Eigen::Index i = 0; i < run.y.size(); ++i) os << i + 1 << ',' << run.y[i] << ',' << run.q[i] << ',' << run.u[i] << '\n';
  os.precision(prec);
}

}  // namespace sdspectra
