#ifndef SZEGO_MONTE_CARLO_HPP
#define SZEGO_MONTE_CARLO_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <mutex>
#include <numbers>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <fftw3.h>

#include "szego/multi_index.hpp"
#include "szego/opuc.hpp"
#include "szego/power_series.hpp"

namespace szego {

struct Seed {
  std::uint64_t value = 0;
};

inline constexpr const char* kRngAlgorithm = "mt19937_64+splitmix64";

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Per-worker stream: mt19937_64 seeded from splitmix64 of (seed, worker).
class Rng {
public:
  explicit Rng(Seed seed, std::uint64_t worker = 0) : engine_(splitmix64(seed.value ^ splitmix64(worker))) {}

  /// Uniform on the open interval (0, 1).
  double uniform() { return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53; }

  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double r = std::sqrt(-2.0 * std::log(uniform()));
    const double t = 2.0 * std::numbers::pi * uniform();
    spare_ = r * std::sin(t);
    has_spare_ = true;
    return r * std::cos(t);
  }

private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Mean of a complex sample with stderr = sqrt(sum |z - mean|^2 / (n - 1)) / sqrt(n).
struct SampleStats {
  cplx mean{};
  double std_error = 0.0;
  std::size_t count = 0;

  static SampleStats of(const std::vector<cplx>& values) {
    if (values.size() < 2) {
      throw std::invalid_argument("SampleStats: need at least two samples");
    }
    SampleStats s;
    s.count = values.size();
    for (const auto& v : values) s.mean += v;
    s.mean /= static_cast<double>(s.count);
    double ss = 0.0;
    for (const auto& v : values) ss += std::norm(v - s.mean);
    s.std_error = std::sqrt(ss / static_cast<double>(s.count - 1)) / std::sqrt(static_cast<double>(s.count));
    return s;
  }

  /// |mean - target| in units of stderr.
  double z_score(cplx target) const { return std::abs(mean - target) / std_error; }
};

/// alpha_1..alpha_N with |alpha_n|^2 ~ Beta(1, n beta) and uniform phase.
inline VerblunskySeq sample_alpha(double beta, int N, Rng& rng) {
  if (!(beta > 0.0)) {
    throw std::invalid_argument("sample_alpha: beta must be positive");
  }
  std::vector<cplx> a(static_cast<std::size_t>(N));
  for (int n = 1; n <= N; ++n) {
    const double u = rng.uniform();
    const double r2 = -std::expm1(std::log(u) / (n * beta));
    const double phase = 2.0 * std::numbers::pi * rng.uniform();
    a[static_cast<std::size_t>(n - 1)] = std::polar(std::sqrt(r2), phase);
  }
  return VerblunskySeq(std::move(a));
}

inline VerblunskySeq sample_alpha(double beta, int N, Seed seed) {
  Rng rng(seed);
  return sample_alpha(beta, N, rng);
}

/// f_0 = 0 and independent complex Gaussians f_1..f_N with E|f_n|^2 = 1/(n beta).
inline ComplexSeries sample_f(double beta, int N, Rng& rng) {
  if (!(beta > 0.0)) {
    throw std::invalid_argument("sample_f: beta must be positive");
  }
  std::vector<cplx> f(static_cast<std::size_t>(N) + 1);
  for (int n = 1; n <= N; ++n) {
    const double sd = std::sqrt(1.0 / (2.0 * n * beta));
    const double re = rng.normal();
    const double im = rng.normal();
    f[static_cast<std::size_t>(n)] = cplx(sd * re, sd * im);
  }
  return ComplexSeries(std::move(f));
}

inline ComplexSeries sample_f(double beta, int N, Seed seed) {
  Rng rng(seed);
  return sample_f(beta, N, rng);
}

/// Coefficients x_0..x_d of r_N, from r_n = r_{n-1} + alpha_n z s_{n-1} and
/// s_n = z s_{n-1} + conj(alpha_n) r_{n-1} with s_n = z^n r_n^*.
inline std::vector<cplx> low_reversed_coefficients(const VerblunskySeq& alpha, int d) {
  const std::size_t D = static_cast<std::size_t>(d);
  std::vector<cplx> r(D + 1);
  std::vector<cplx> s(D + 1);
  r[0] = 1.0;
  s[0] = 1.0;
  std::vector<cplx> r_prev;
  for (const cplx& a : alpha.values()) {
    r_prev = r;
    for (std::size_t k = D; k >= 1; --k) r[k] += a * s[k - 1];
    for (std::size_t k = D; k >= 1; --k) s[k] = s[k - 1] + std::conj(a) * r_prev[k];
    s[0] = std::conj(a) * r_prev[0];
  }
  return r;
}

enum class MonteCarloSide { gaussian, alpha };

inline cplx monomial_pair(const std::vector<cplx>& x, const MultiIndex& p, const MultiIndex& q) {
  cplx a = 1.0;
  for (const auto& [n, c] : p.entries())
    for (int k = 0; k < c; ++k) a *= x[static_cast<std::size_t>(n)];
  cplx b = 1.0;
  for (const auto& [n, c] : q.entries())
    for (int k = 0; k < c; ++k) b *= x[static_cast<std::size_t>(n)];
  return a * std::conj(b);
}

/// Runs `draw(rng)` `samples` times split over `threads` workers; worker w
/// takes a contiguous block and its own stream, results concatenated in
/// worker order.
inline std::vector<cplx> parallel_draws(std::size_t samples, Seed seed, int threads,
                                        const std::function<cplx(Rng&)>& draw) {
  const std::size_t T = threads < 1 ? 1 : static_cast<std::size_t>(threads);
  std::vector<cplx> out(samples);
  auto work = [&](std::size_t w) {
    Rng rng(seed, w);
    const std::size_t lo = w * samples / T;
    const std::size_t hi = (w + 1) * samples / T;
    for (std::size_t k = lo; k < hi; ++k) out[k] = draw(rng);
  };
  if (T == 1) {
    work(0);
    return out;
  }
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < T; ++w) pool.emplace_back(work, w);
  for (auto& t : pool) t.join();
  return out;
}

struct McOptions {
  int threads = 1;
  std::ostream* csv = nullptr;  // columns: sample,re,im
};

/// Empirical E(x^p conj(x^q)); x = exp(-f) under the Gaussian law, or the
/// coefficients of r_{N_trunc} under the alpha law.
inline SampleStats mc_x_moment(MonteCarloSide side, const MultiIndex& p, const MultiIndex& q, double beta, int n_trunc,
                               std::size_t samples, Seed seed, const McOptions& opt = {}) {
  const int d = p.degree();
  if (d != q.degree() || d > 4) {
    throw std::invalid_argument("mc_x_moment: need deg(p) = deg(q) <= 4");
  }
  if (n_trunc < 4 * d) {
    throw std::invalid_argument("mc_x_moment: need N_trunc >= 4 deg(p)");
  }
  std::function<cplx(Rng&)> draw;
  if (side == MonteCarloSide::gaussian) {
    // x_1..x_d depend on f_1..f_d only, so the series is exact at length d + 1.
    draw = [&](Rng& rng) { return monomial_pair(exp_series(sample_f(beta, d, rng)).coeffs, p, q); };
  } else {
    draw = [&](Rng& rng) {
      return monomial_pair(low_reversed_coefficients(sample_alpha(beta, n_trunc, rng), d), p, q);
    };
  }
  const auto values = parallel_draws(samples, seed, opt.threads, draw);
  if (opt.csv) {
    *opt.csv << "sample,re,im\n";
    opt.csv->precision(17);
    for (std::size_t k = 0; k < values.size(); ++k)
      *opt.csv << k << ',' << values[k].real() << ',' << values[k].imag() << '\n';
  }
  return SampleStats::of(values);
}

/// Verblunsky coefficients of the probability measure with density
/// proportional to exp(2 Re f_+(r e^{i theta})) on a grid of `grid` points.
inline VerblunskySeq alpha_from_field(const ComplexSeries& f, double radius, int max_alpha, int grid = 4096) {
  const int modes = static_cast<int>(f.size()) - 1;
  if (grid < 4 * modes) {
    throw std::invalid_argument("pushforward: grid " + std::to_string(grid) + " too coarse for " +
                                std::to_string(modes) + " modes (need >= 4 x modes)");
  }
  std::vector<std::complex<double>> buf(static_cast<std::size_t>(grid));
  double rn = 1.0;
  for (int n = 1; n <= modes; ++n) {
    rn *= radius;
    buf[static_cast<std::size_t>(n)] = f[static_cast<std::size_t>(n)] * rn;
  }
  auto* data = reinterpret_cast<fftw_complex*>(buf.data());
  // Backward transform: sum_n a_n e^{+2 pi i n k / G} = f_+(r e^{i theta_k}).
  static std::mutex planner;
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(planner);
    plan = fftw_plan_dft_1d(grid, data, data, FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(planner);
    fftw_destroy_plan(plan);
  }
  CircleDensity density;
  density.values.resize(static_cast<std::size_t>(grid));
  double top = -INFINITY;
  for (const auto& v : buf) top = std::max(top, 2.0 * v.real());
  for (int k = 0; k < grid; ++k)
    density.values[static_cast<std::size_t>(k)] = std::exp(2.0 * buf[static_cast<std::size_t>(k)].real() - top);
  return verblunsky_from_moments(trig_moments(density, max_alpha));
}

struct PushforwardOptions {
  int grid = 4096;
  int threads = 1;
  bool allow_large_beta = false;  // permit beta^2 >= 2
};

struct PushforwardResult {
  std::vector<SampleStats> abs2;  // E|alpha_n|^2, n = 1..max_alpha
  std::vector<double> target;     // 1/(n beta + 1)
  std::vector<std::string> warnings;
};

/// For each sample: f ~ nu_beta truncated at `modes`, density
/// exp(2 Re f_+(r e^{i theta})) normalized, alpha_1..alpha_max_alpha extracted.
inline PushforwardResult pushforward_experiment(double beta, int modes, double radius, std::size_t samples,
                                                int max_alpha, Seed seed, const PushforwardOptions& opt = {}) {
  if (!(radius > 0.0 && radius < 1.0)) {
    throw std::invalid_argument("pushforward: radius must lie in (0, 1)");
  }
  if (!(beta > 0.0)) {
    throw std::invalid_argument("pushforward: beta must be positive");
  }
  PushforwardResult out;
  if (beta * beta >= 2.0) {
    if (!opt.allow_large_beta) {
      throw std::invalid_argument("pushforward: beta^2 >= 2 (pass the override to run anyway)");
    }
    out.warnings.push_back("beta^2 >= 2: outside the theorem's hypothesis");
  }
  if (opt.grid < 4 * modes) {
    throw std::invalid_argument("pushforward: grid " + std::to_string(opt.grid) + " too coarse for " +
                                std::to_string(modes) + " modes (need >= 4 x modes)");
  }
  const std::size_t T = opt.threads < 1 ? 1 : static_cast<std::size_t>(opt.threads);
  std::vector<std::vector<double>> abs2(static_cast<std::size_t>(max_alpha), std::vector<double>(samples));
  auto work = [&](std::size_t w) {
    Rng rng(seed, w);
    for (std::size_t k = w * samples / T; k < (w + 1) * samples / T; ++k) {
      const VerblunskySeq a = alpha_from_field(sample_f(beta, modes, rng), radius, max_alpha, opt.grid);
      for (int n = 1; n <= max_alpha; ++n) abs2[static_cast<std::size_t>(n - 1)][k] = std::norm(a(n));
    }
  };
  if (T == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < T; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (int n = 1; n <= max_alpha; ++n) {
    const auto& v = abs2[static_cast<std::size_t>(n - 1)];
    out.abs2.push_back(SampleStats::of(std::vector<cplx>(v.begin(), v.end())));
    out.target.push_back(1.0 / (n * beta + 1.0));
  }
  return out;
}

}  // namespace szego

#endif  // SZEGO_MONTE_CARLO_HPP
