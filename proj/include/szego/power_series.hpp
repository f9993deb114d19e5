#ifndef SZEGO_POWER_SERIES_HPP
#define SZEGO_POWER_SERIES_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace szego {

using cplx = std::complex<double>;

/// Polynomial or truncated power series c_0 + c_1 z + ... + c_M z^M.
struct ComplexSeries {
  std::vector<cplx> coeffs;

  ComplexSeries() = default;
  explicit ComplexSeries(std::vector<cplx> c) : coeffs(std::move(c)) {}
  ComplexSeries(std::initializer_list<cplx> c) : coeffs(c) {}

  std::size_t size() const noexcept { return coeffs.size(); }
  cplx operator[](std::size_t k) const { return k < coeffs.size() ? coeffs[k] : cplx{}; }
  cplx& operator[](std::size_t k) { return coeffs.at(k); }

  /// Copy truncated or zero-padded to exactly `length` coefficients.
  ComplexSeries resized(std::size_t length) const {
    std::vector<cplx> c(length);
    for (std::size_t k = 0; k < length && k < coeffs.size(); ++k) {
      c[k] = coeffs[k];
    }
    return ComplexSeries(std::move(c));
  }

  cplx operator()(cplx z) const {
    cplx acc{};
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
      acc = acc * z + *it;
    }
    return acc;
  }
};

inline constexpr double kSeriesTolerance = 1e-12;

/// f = -log(x) as a formal series truncated to x's length; f_0 = 0.
///
/// Uses n g_n = n x_n - sum_{k<n} k g_k x_{n-k} for g = log x.
inline ComplexSeries log_series(const ComplexSeries& x) {
  if (x.size() == 0 || std::abs(x.coeffs[0] - cplx(1.0)) > kSeriesTolerance) {
    throw std::domain_error("log_series: constant term must be 1");
  }
  const std::size_t len = x.size();
  std::vector<cplx> g(len);
  for (std::size_t n = 1; n < len; ++n) {
    cplx acc = static_cast<double>(n) * x.coeffs[n];
    for (std::size_t k = 1; k < n; ++k) {
      acc -= static_cast<double>(k) * g[k] * x.coeffs[n - k];
    }
    g[n] = acc / static_cast<double>(n);
  }
  for (auto& c : g) {
    c = -c;
  }
  return ComplexSeries(std::move(g));
}

/// x = exp(-f) truncated to f's length; requires f_0 = 0.
///
/// Uses n x_n = sum_{k=1}^n k h_k x_{n-k} with h = -f.
inline ComplexSeries exp_series(const ComplexSeries& f) {
  if (f.size() == 0) {
    return ComplexSeries{cplx(1.0)};
  }
  if (std::abs(f.coeffs[0]) > kSeriesTolerance) {
    throw std::domain_error("exp_series: constant term must be 0");
  }
  const std::size_t len = f.size();
  std::vector<cplx> x(len);
  x[0] = 1.0;
  for (std::size_t n = 1; n < len; ++n) {
    cplx acc{};
    for (std::size_t k = 1; k <= n; ++k) {
      acc -= static_cast<double>(k) * f.coeffs[k] * x[n - k];
    }
    x[n] = acc / static_cast<double>(n);
  }
  return ComplexSeries(std::move(x));
}

}  // namespace szego

#endif  // SZEGO_POWER_SERIES_HPP
