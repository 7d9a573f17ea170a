#include "sdspectra/codec.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>

#include "sdspectra/error.hpp"
#include "sdspectra/parallel.hpp"
#include "sdspectra/spectral.hpp"

namespace sdspectra {

Frame frame_singular(int n, int d, int r) {
  if (d < 1 || d > n) throw PreconditionError("frame_singular needs 1 <= d <= n");
  const SpectralDecomposition sd = eigh_gram(n, r);
  Frame f;
  f.n = n;
  f.d = d;
  f.kind = FrameKind::Singular;
  f.F.resize(n, d);
  for (int c = 0; c < d; ++c) f.F.col(c) = sd.U.col(n - 1 - c);
  return f;
}

Frame frame_harmonic(int n, int d, bool row_normalized) {
  if (d < 1 || d > n) throw PreconditionError("frame_harmonic needs 1 <= d <= n");
  if ((d + 1) / 2 >= (n + 1) / 2) throw PreconditionError("frame_harmonic: too many frequencies for n");
  const double pi = std::acos(-1.0);
  Frame f;
  f.n = n;
  f.d = d;
  f.kind = FrameKind::Harmonic;
  f.row_normalized = row_normalized;
  f.F.resize(n, d);
  const double scale = std::sqrt(2.0 / n);
  for (int c = 0; c < d; ++c) {
    const int freq = c / 2 + 1;
    for (int i = 0; i < n; ++i) {
      const double th = 2.0 * pi * freq * (i + 1) / n;
      f.F(i, c) = scale * (c % 2 == 0 ? std::cos(th) : std::sin(th));
    }
  }
  if (row_normalized)
    for (int i = 0; i < n; ++i) f.F.row(i).normalize();
  return f;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t mix_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  std::uint64_t h = splitmix64(master);
  h = splitmix64(h ^ a);
  h = splitmix64(h ^ (b << 20));
  return splitmix64(h ^ (c << 40) ^ c);
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw PreconditionError("Rng::below(0)");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do x = next();
  while (x >= limit);
  return x % n;
}

double Rng::uniform() { return double(next() >> 11) * 0x1.0p-53; }

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1;
  do u1 = uniform();
  while (u1 <= 0.0);
  const double u2 = uniform();
  const double rad = std::sqrt(-2.0 * std::log(u1));
  const double th = 2.0 * std::acos(-1.0) * u2;
  spare_ = rad * std::sin(th);
  have_spare_ = true;
  return rad * std::cos(th);
}

Vec SelectorMatrix::apply(const Vec& v) const {
  Vec out(m);
  for (int i = 0; i < m; ++i) out[i] = v[rows[std::size_t(i)] - 1];
  return out;
}

IVec SelectorMatrix::apply(const IVec& v) const {
  IVec out(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) out[std::size_t(i)] = v[std::size_t(rows[std::size_t(i)] - 1)];
  return out;
}

SelectorMatrix make_selector(int m, int n, std::uint64_t seed) {
  if (m < 1 || n < 1) throw PreconditionError("make_selector needs m, n >= 1");
  SelectorMatrix s;
  s.m = m;
  s.n = n;
  s.seed = seed;
  Rng rng(seed);
  s.rows.resize(std::size_t(m));
  for (auto& row : s.rows) row = int(rng.below(std::uint64_t(n))) + 1;
  return s;
}

int payload_width(int n, int r, int levels) {
  const int mag = int(std::ceil(r * std::log2(double(n)) - 1e-9));
  int sym = 0;
  while ((1LL << sym) < 2LL * levels) ++sym;
  return mag + sym;
}

std::int64_t row_bound(int row, int r, int levels) { return (2LL * levels - 1) * binom(row + r - 1, r); }

namespace {

EncodedPayload encode_symbols(const IVec& t, int r, int levels, double step, const SelectorMatrix& sel) {
  if (int(t.size()) != sel.n) throw PreconditionError("encode: signal length does not match selector");
  EncodedPayload p;
  p.m = sel.m;
  p.n = sel.n;
  p.r = r;
  p.levels = levels;
  p.step = step;
  p.seed = sel.seed;
  p.s = sel.apply(apply_Dinv_r(t, r));
  p.width = payload_width(p.n, r, levels);
  p.bit_count = std::int64_t(p.m) * p.width;
  for (int i = 0; i < p.m; ++i)
    if (std::llabs(p.s[std::size_t(i)]) > row_bound(sel.rows[std::size_t(i)], r, levels))
      throw std::logic_error("encode: payload entry exceeds its row bound");
  return p;
}

}  // namespace

EncodedPayload encode(const QuantizationRun& run, const SelectorMatrix& sel) {
  return encode_symbols(run.symbols, run.r, run.alphabet.levels, run.alphabet.step, sel);
}

EncodedPayload encode(const Vec& q, int r, const SelectorMatrix& sel) {
  IVec t(static_cast<std::size_t>(q.size()));
  for (Eigen::Index i = 0; i < q.size(); ++i) {
    if (q[i] != 1.0 && q[i] != -1.0) throw PreconditionError("encode: entries must be +-1");
    t[std::size_t(i)] = q[i] > 0 ? 1 : -1;
  }
  return encode_symbols(t, r, 1, 2.0, sel);
}

namespace {

template <class T>
void put_le(std::vector<std::uint8_t>& out, T v, int bytes) {
  for (int b = 0; b < bytes; ++b) out.push_back(std::uint8_t((std::uint64_t(v) >> (8 * b)) & 0xff));
}

std::uint64_t get_le(const std::vector<std::uint8_t>& in, std::size_t at, int bytes) {
  std::uint64_t v = 0;
  for (int b = 0; b < bytes; ++b) v |= std::uint64_t(in[at + std::size_t(b)]) << (8 * b);
  return v;
}

}  // namespace

std::vector<std::uint8_t> serialize(const EncodedPayload& p) {
  std::vector<std::uint8_t> out{'S', 'D', 'P', '1'};
  put_le(out, std::uint32_t(p.m), 4);
  put_le(out, std::uint32_t(p.n), 4);
  put_le(out, std::uint16_t(p.r), 2);
  put_le(out, std::uint16_t(p.levels), 2);
  std::uint64_t step_bits;
  static_assert(sizeof(step_bits) == sizeof(p.step));
  std::memcpy(&step_bits, &p.step, sizeof step_bits);
  put_le(out, step_bits, 8);
  put_le(out, p.seed, 8);

  const SelectorMatrix sel = make_selector(p.m, p.n, p.seed);
  const std::size_t nbits = std::size_t(p.m) * std::size_t(p.width);
  std::vector<std::uint8_t> body((nbits + 7) / 8, 0);
  for (int i = 0; i < p.m; ++i) {
    // offset by the row bound and fold out the parity, which the row fixes
    const std::int64_t bound = row_bound(sel.rows[std::size_t(i)], p.r, p.levels);
    const std::int64_t shifted = p.s[std::size_t(i)] + bound;
    if (shifted < 0 || shifted % 2 != 0) throw std::logic_error("serialize: entry has unexpected parity or range");
    const std::uint64_t z = std::uint64_t(shifted / 2);
    if (p.width < 64 && (z >> p.width) != 0) throw std::logic_error("serialize: entry exceeds width");
    for (int b = 0; b < p.width; ++b) {
      const std::size_t pos = std::size_t(i) * std::size_t(p.width) + std::size_t(b);
      if ((z >> b) & 1U) body[pos / 8] |= std::uint8_t(1U << (pos % 8));
    }
  }
  out.insert(out.end(), body.begin(), body.end());
  return out;
}

EncodedPayload deserialize(const std::vector<std::uint8_t>& bytes) {
  if (bytes.size() < std::size_t(EncodedPayload::header_bytes) || bytes[0] != 'S' || bytes[1] != 'D' || bytes[2] != 'P' || bytes[3] != '1')
    throw PreconditionError("deserialize: bad payload header");
  EncodedPayload p;
  p.m = int(get_le(bytes, 4, 4));
  p.n = int(get_le(bytes, 8, 4));
  p.r = int(get_le(bytes, 12, 2));
  p.levels = int(get_le(bytes, 14, 2));
  const std::uint64_t step_bits = get_le(bytes, 16, 8);
  std::memcpy(&p.step, &step_bits, sizeof p.step);
  p.seed = get_le(bytes, 24, 8);
  p.width = payload_width(p.n, p.r, p.levels);
  p.bit_count = std::int64_t(p.m) * p.width;
  const std::size_t nbits = std::size_t(p.m) * std::size_t(p.width);
  if (bytes.size() != std::size_t(EncodedPayload::header_bytes) + (nbits + 7) / 8) throw PreconditionError("deserialize: payload length mismatch");

  const SelectorMatrix sel = make_selector(p.m, p.n, p.seed);
  p.s.resize(std::size_t(p.m));
  for (int i = 0; i < p.m; ++i) {
    std::uint64_t z = 0;
    for (int b = 0; b < p.width; ++b) {
      const std::size_t pos = std::size_t(i) * std::size_t(p.width) + std::size_t(b);
      if ((bytes[std::size_t(EncodedPayload::header_bytes) + pos / 8] >> (pos % 8)) & 1U) z |= std::uint64_t(1) << b;
    }
    p.s[std::size_t(i)] = 2 * std::int64_t(z) - row_bound(sel.rows[std::size_t(i)], p.r, p.levels);
  }
  return p;
}

Mat design_matrix(const Frame& frame, const SelectorMatrix& sel, int r) {
  Mat a(sel.m, frame.d);
  for (int c = 0; c < frame.d; ++c) a.col(c) = sel.apply(apply_Dinv_r(Vec(frame.F.col(c)), r));
  return a;
}

Vec least_squares(const Mat& a, const Vec& b) {
  Eigen::ColPivHouseholderQR<Mat> qr(a);
  if (qr.rank() < a.cols()) throw ConditioningError("least squares: design matrix is rank deficient (rank " + std::to_string(qr.rank()) + ")");
  return qr.solve(b);
}

Vec decode(const EncodedPayload& p, const Frame& frame, const SelectorMatrix& sel) {
  if (frame.n != p.n || sel.m != p.m) throw PreconditionError("decode: frame/selector do not match payload");
  Vec b(p.m);
  for (int i = 0; i < p.m; ++i) b[i] = p.step / 2.0 * double(p.s[std::size_t(i)]);
  return least_squares(design_matrix(frame, sel, p.r), b);
}

Alphabet alphabet_for(const AlphabetRule& rule, int r) {
  if (rule.kind == "one-bit" || rule.kind == "auto") return Alphabet::one_bit();
  if (rule.kind != "multilevel") throw PreconditionError("unknown alphabet kind '" + rule.kind + "'");
  const int L = rule.levels > 0 ? rule.levels : minimal_levels(rule.step, 1.0, r);
  return Alphabet::multilevel(rule.step, L);
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw PreconditionError("loglog_slope needs two or more points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double k = double(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

double quantile(std::vector<double> v, double p) {
  if (v.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::sort(v.begin(), v.end());
  const double pos = p * double(v.size() - 1);
  const std::size_t lo = std::size_t(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, v.size() - 1);
  return v[lo] + (pos - double(lo)) * (v[hi] - v[lo]);
}

std::vector<RateDistortionRecord> rate_distortion_experiment(const RateDistortionConfig& cfg) {
  if (cfg.d < 1 || cfg.trials < 1 || cfg.m_divisor < 1) throw PreconditionError("rate-distortion: d, trials and m divisor must be positive");
  struct Point {
    int n, r;
    Frame frame;
    Mat dinv_f;  // D^{-r} F
    Alphabet alph;
  };
  std::vector<Point> points;
  for (int r : cfg.r_values)
    for (int n : cfg.n_values) {
      if (n / cfg.m_divisor < cfg.d) throw PreconditionError("rate-distortion: m = N/divisor must be at least d");
      points.push_back({n, r, {}, {}, alphabet_for(cfg.alphabet, r)});
    }
  parallel_for(points.size(), [&](std::size_t k) {
    Point& pt = points[k];
    pt.frame = frame_singular(pt.n, cfg.d, pt.r);
    pt.dinv_f.resize(pt.n, cfg.d);
    for (int c = 0; c < cfg.d; ++c) pt.dinv_f.col(c) = apply_Dinv_r(Vec(pt.frame.F.col(c)), pt.r);
  });

  std::vector<RateDistortionRecord> recs(points.size() * std::size_t(cfg.trials));
  parallel_for(recs.size(), [&](std::size_t idx) {
    const Point& pt = points[idx / std::size_t(cfg.trials)];
    const int trial = int(idx % std::size_t(cfg.trials));
    const int m = pt.n / cfg.m_divisor;
    const std::uint64_t seed_t = mix_seed(cfg.seed, std::uint64_t(pt.n), std::uint64_t(pt.r), std::uint64_t(trial));
    Rng rng(seed_t);

    Vec x(cfg.d);
    for (int i = 0; i < cfg.d; ++i) x[i] = rng.normal();
    x *= std::pow(rng.uniform(), 1.0 / cfg.d) / x.norm();

    const Vec y = pt.frame.F * x;
    const QuantizationRun run = quantize_order_r(y, pt.r, pt.alph);
    const SelectorMatrix sel = make_selector(m, pt.n, mix_seed(seed_t, 1, 0, 0));
    const EncodedPayload payload = encode(run, sel);

    Mat a(m, cfg.d);
    for (int i = 0; i < m; ++i) a.row(i) = pt.dinv_f.row(sel.rows[std::size_t(i)] - 1);
    Vec b(m);
    for (int i = 0; i < m; ++i) b[i] = payload.step / 2.0 * double(payload.s[std::size_t(i)]);
    const Vec xh = least_squares(a, b);
    const Vec ru = sel.apply(run.u);
    const double smin = jacobi_svd(a).sigma[cfg.d - 1];

    RateDistortionRecord& rec = recs[idx];
    rec = {pt.n, pt.r, cfg.d, m, trial, payload.bit_count, (x - xh).norm(), ru.norm() / smin, least_squares(a, ru).norm()};
  });
  return recs;
}

std::vector<SlopeSummary> summarize(const std::vector<RateDistortionRecord>& recs, const RateDistortionConfig& cfg) {
  std::vector<SlopeSummary> out;
  for (int r : cfg.r_values) {
    SlopeSummary s;
    s.r = r;
    s.d = cfg.d;
    s.bits_exact = true;
    const Alphabet alph = alphabet_for(cfg.alphabet, r);
    int sym_bits = 0;
    while ((1 << sym_bits) < alph.size()) ++sym_bits;
    std::vector<double> ns;
    for (int n : cfg.n_values) {
      std::vector<double> errs;
      for (const auto& rec : recs) {
        if (rec.r != r || rec.n != n) continue;
        errs.push_back(rec.err_l2);
        s.max_identity_gap = std::max(s.max_identity_gap, std::abs(rec.err_l2 - rec.identity_rhs));
        const bool pow2 = (n & (n - 1)) == 0;
        if (pow2) {
          const int log2n = int(std::lround(std::log2(double(n))));
          if (rec.bits != std::int64_t(rec.m) * (std::int64_t(r) * log2n + sym_bits)) s.bits_exact = false;
        }
      }
      if (errs.empty()) continue;
      s.n_values.push_back(n);
      ns.push_back(double(n));
      s.median_err.push_back(quantile(errs, 0.5));
    }
    if (ns.size() >= 2) s.slope = loglog_slope(ns, s.median_err);
    s.non_increasing = true;
    for (std::size_t i = 1; i < s.median_err.size(); ++i)
      if (s.median_err[i] > s.median_err[i - 1]) s.non_increasing = false;
    out.push_back(s);
  }
  return out;
}

void write_rate_distortion_csv(std::ostream& os, const std::vector<RateDistortionRecord>& recs) {
  std::vector<RateDistortionRecord> sorted = recs;
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    return std::tie(a.r, a.n, a.trial) < std::tie(b.r, b.n, b.trial);
  });
  const auto prec = os.precision(17);
  os << "N,r,d,m,trial,bits,err_l2,bound_rhs\n";
  for (const auto& x : sorted)
    os << x.n << ',' << x.r << ',' << x.d << ',' << x.m << ',' << x.trial << ',' << x.bits << ',' << x.err_l2 << ',' << x.bound_rhs << '\n';
  os.precision(prec);
}

SigmaMinStats sigma_min_check(int r, int m, int ell, int d, const std::vector<std::uint64_t>& seeds, int n) {
  const double pi = std::acos(-1.0);
  if (n <= 0) n = m;
  if (double(ell) > double(m) / (pi * pi)) throw PreconditionError("sigma_min_check: ell > m/pi^2 is outside the supported range");
  if (ell < d) throw PreconditionError("sigma_min_check: ell must be at least d");
  SpectralOptions opt;
  opt.max_n = std::max(opt.max_n, m);
  const SpectralDecomposition sd = eigh_gram(m, r, opt);
  const Mat V = sd.U.rightCols(ell);  // least significant

  SigmaMinStats st;
  st.r = r;
  st.m = m;
  st.ell = ell;
  st.d = d;
  st.n = n;
  st.sqrt_ell = std::sqrt(double(ell));
  st.values.resize(seeds.size());
  parallel_for(seeds.size(), [&](std::size_t k) {
    const SelectorMatrix sel = make_selector(m, n, seeds[k]);
    CMat rf(m, d);
    for (int i = 0; i < m; ++i)
      for (int c = 0; c < d; ++c) {
        const double th = -2.0 * pi * double(sel.rows[std::size_t(i)] - 1) * c / n;
        rf(i, c) = cplx(std::cos(th), std::sin(th));
      }
    const CMat prod = V.transpose().cast<cplx>() * rf;
    st.values[k] = jacobi_svd(prod).sigma[d - 1];
  });
  st.min = *std::min_element(st.values.begin(), st.values.end());
  st.median = quantile(st.values, 0.5);
  st.q10 = quantile(st.values, 0.1);
  st.q25 = quantile(st.values, 0.25);
  st.q75 = quantile(st.values, 0.75);
  st.q90 = quantile(st.values, 0.9);
  return st;
}

}  // namespace sdspectra
