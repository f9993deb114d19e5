#ifndef SZEGO_OPUC_HPP
#define SZEGO_OPUC_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "szego/combinatorics.hpp"
#include "szego/power_series.hpp"

namespace szego {

/// Raised when a Verblunsky coefficient leaves the open unit disk.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Finite Verblunsky sequence alpha_1..alpha_N; alpha_0 = 1 is implicit.
///
/// Sign and index conventions: alpha_n = conj(p_n(0)) for the monic
/// orthogonal polynomials p_n, so rotation by t maps alpha_n to
/// e^{-int} alpha_n.
class VerblunskySeq {
public:
  VerblunskySeq() = default;
  VerblunskySeq(std::initializer_list<cplx> a) : VerblunskySeq(std::vector<cplx>(a)) {}
  explicit VerblunskySeq(std::vector<cplx> a) : alphas_(std::move(a)) {
    for (std::size_t n = 0; n < alphas_.size(); ++n) {
      if (!(std::abs(alphas_[n]) < 1.0)) {
        throw DomainError("|alpha_" + std::to_string(n + 1) + "| >= 1");
      }
    }
  }

  std::size_t size() const noexcept { return alphas_.size(); }
  const std::vector<cplx>& values() const noexcept { return alphas_; }

  /// alpha_n with alpha_0 = 1 and zero beyond the end.
  cplx operator()(int n) const {
    if (n == 0) {
      return 1.0;
    }
    return n >= 1 && static_cast<std::size_t>(n) <= alphas_.size() ? alphas_[static_cast<std::size_t>(n - 1)]
                                                                    : cplx{};
  }

  /// prod_n (1 - |alpha_n|^2)^(n + shift)
  double weighted_product(int shift) const {
    double out = 1.0;
    for (std::size_t n = 0; n < alphas_.size(); ++n) {
      out *= std::pow(1.0 - std::norm(alphas_[n]), static_cast<double>(n) + 1.0 + shift);
    }
    return out;
  }

private:
  std::vector<cplx> alphas_;
};

namespace detail {

/// Coefficients of r_N for arbitrary complex inputs (no disk check).
inline std::vector<cplx> reversed_coefficients(const std::vector<cplx>& alphas) {
  const std::size_t N = alphas.size();
  std::vector<cplx> x(N + 1);
  x[0] = 1.0;
  std::vector<cplx> prev;
  for (std::size_t n = 1; n <= N; ++n) {
    prev.assign(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(n));
    const cplx a = alphas[n - 1];
    for (std::size_t j = 1; j <= n; ++j) {
      x[j] += a * std::conj(prev[n - j]);
    }
  }
  return x;
}

}  // namespace detail

/// Reversed polynomial r_N = 1 + x_1 z + ... + x_N z^N.
///
/// One step of the recursion is r_n = r_{n-1} + alpha_n z^n r_{n-1}^*,
/// i.e. x_j <- x_j + alpha_n conj(x_{n-j}).
inline ComplexSeries reversed_polynomial(const VerblunskySeq& alpha) {
  return ComplexSeries(detail::reversed_coefficients(alpha.values()));
}

/// Winding number of r(e^{i theta}) about 0 on a uniform grid; 0 means no
/// zeros of the polynomial in the closed unit disk.
inline int winding_number(const ComplexSeries& r, int grid = 4096) {
  double total = 0.0;
  double prev_arg = std::arg(r(cplx(1.0)));
  for (int k = 1; k <= grid; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / grid;
    const double a = std::arg(r(std::polar(1.0, theta)));
    double d = a - prev_arg;
    while (d > std::numbers::pi) d -= 2.0 * std::numbers::pi;
    while (d < -std::numbers::pi) d += 2.0 * std::numbers::pi;
    total += d;
    prev_arg = a;
  }
  return static_cast<int>(std::lround(total / (2.0 * std::numbers::pi)));
}

/// Coefficient n of x through the gap-sequence expansion, truncated to
/// indices <= max_index. `alpha` is any callable int -> cplx with alpha(0) = 1.
template <class AlphaFn>
cplx x_series_truncated(const AlphaFn& alpha, int n, int max_index) {
  cplx total{};
  if (max_index < 1) {
    return total;
  }
  for_each_gap_sequence(n, max_index, [&](const GapSequence& g) {
    cplx term = 1.0;
    for (const auto& [i, j] : g.pairs) {
      term *= alpha(i) * std::conj(alpha(j));
    }
    total += term;
  });
  return total;
}

/// Density values on theta_k = 2 pi k / G, with respect to d theta / 2 pi.
struct CircleDensity {
  std::vector<double> values;

  int grid() const noexcept { return static_cast<int>(values.size()); }
  double theta(int k) const { return 2.0 * std::numbers::pi * k / grid(); }
  double mass() const {
    double s = 0.0;
    for (double v : values) s += v;
    return s / static_cast<double>(values.size());
  }
};

/// prod (1 - |alpha_n|^2) / |r_N(e^{i theta})|^2 on a uniform grid.
inline CircleDensity measure_density(const VerblunskySeq& alpha, int grid = 4096) {
  if (grid < 16) {
    throw std::invalid_argument("measure_density: grid must be at least 16");
  }
  const ComplexSeries r = reversed_polynomial(alpha);
  double numerator = 1.0;
  for (const auto& a : alpha.values()) {
    numerator *= 1.0 - std::norm(a);
  }
  CircleDensity out;
  out.values.resize(static_cast<std::size_t>(grid));
  for (int k = 0; k < grid; ++k) {
    const cplx z = std::polar(1.0, 2.0 * std::numbers::pi * k / grid);
    out.values[static_cast<std::size_t>(k)] = numerator / std::norm(r(z));
  }
  return out;
}

/// c_k = integral of e^{-ik theta} d mu for k = 0..K, by the trapezoid rule.
inline std::vector<cplx> trig_moments(const CircleDensity& density, int K) {
  const int G = density.grid();
  if (K < 0 || 2 * K >= G) {
    throw std::invalid_argument("trig_moments: need 0 <= K < grid/2 (K=" + std::to_string(K) +
                                ", grid=" + std::to_string(G) + ")");
  }
  std::vector<cplx> c(static_cast<std::size_t>(K) + 1);
  for (int k = 0; k <= K; ++k) {
    cplx acc{};
    for (int j = 0; j < G; ++j) {
      const long long phase = (static_cast<long long>(k) * j) % G;
      acc += density.values[static_cast<std::size_t>(j)] * std::polar(1.0, -2.0 * std::numbers::pi * phase / G);
    }
    c[static_cast<std::size_t>(k)] = acc / static_cast<double>(G);
  }
  return c;
}

/// Moment sequence that is not positive definite at some order.
class NotPositiveDefinite : public std::domain_error {
public:
  NotPositiveDefinite(int order, const std::string& what)
      : std::domain_error("moment sequence not positive definite at order " + std::to_string(order) + ": " +
                          what),
        order_(order) {}
  int order() const noexcept { return order_; }

private:
  int order_;
};

/// alpha_1..alpha_K from c_0..c_K (c_k = integral e^{-ik theta} d mu).
///
/// Builds the monic orthogonal polynomials by the Szego recursion
/// p_n = z p_{n-1} + conj(alpha_n) z^{n-1} p_{n-1}^*, choosing alpha_n so
/// that p_n is orthogonal to 1 (Levinson recursion on the Toeplitz matrix).
inline VerblunskySeq verblunsky_from_moments(const std::vector<cplx>& c) {
  if (c.empty() || !(c[0].real() > 0.0) || std::abs(c[0].imag()) > 1e-12 * c[0].real()) {
    throw NotPositiveDefinite(0, "c_0 must be real and positive");
  }
  const std::size_t K = c.size() - 1;
  // m_k = integral z^k d mu = conj(c_k), normalized by c_0.
  std::vector<cplx> m(K + 1);
  for (std::size_t k = 0; k <= K; ++k) {
    m[k] = std::conj(c[k]) / c[0].real();
  }
  std::vector<cplx> p{1.0};
  double norm2 = 1.0;
  std::vector<cplx> alphas;
  alphas.reserve(K);
  for (std::size_t n = 1; n <= K; ++n) {
    // A = integral z p_{n-1}, B = integral z^{n-1} conj(p_{n-1}) = ||p_{n-1}||^2.
    cplx A{};
    cplx B{};
    for (std::size_t k = 0; k < n; ++k) {
      A += p[k] * m[k + 1];
      B += std::conj(p[k]) * m[n - 1 - k];
    }
    if (!(B.real() > 1e-14) || norm2 <= 1e-14) {
      throw NotPositiveDefinite(static_cast<int>(n), "vanishing norm of p_" + std::to_string(n - 1));
    }
    const cplx alpha = std::conj(-A / B.real());
    if (!(std::abs(alpha) < 1.0)) {
      throw NotPositiveDefinite(static_cast<int>(n), "|alpha| >= 1");
    }
    std::vector<cplx> next(n + 1);
    for (std::size_t k = 0; k < n; ++k) {
      next[k + 1] += p[k];
      next[n - 1 - k] += std::conj(alpha) * std::conj(p[k]);
    }
    p = std::move(next);
    norm2 *= 1.0 - std::norm(alpha);
    alphas.push_back(alpha);
  }
  return VerblunskySeq(std::move(alphas));
}

/// |exp(-sum_{m<=M} m |f_m|^2) - prod (1 - |alpha_n|^2)^n| with
/// f = -log r_N expanded to order M.
inline double szego_identity_gap(const VerblunskySeq& alpha, int M) {
  if (M < 0) {
    throw std::invalid_argument("szego_identity_gap: negative order");
  }
  const ComplexSeries f = log_series(reversed_polynomial(alpha).resized(static_cast<std::size_t>(M) + 1));
  double s = 0.0;
  for (int m = 1; m <= M; ++m) {
    s += m * std::norm(f.coeffs[static_cast<std::size_t>(m)]);
  }
  return std::abs(std::exp(-s) - alpha.weighted_product(0));
}

}  // namespace szego

#endif  // SZEGO_OPUC_HPP
