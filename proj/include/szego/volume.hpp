#ifndef SZEGO_VOLUME_HPP
#define SZEGO_VOLUME_HPP

#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "szego/combinatorics.hpp"
#include "szego/complex_rational.hpp"
#include "szego/opuc.hpp"

namespace szego {

struct JacobianResult {
  double det_abs = 0.0;         // |det| of the 2N x 2N real Jacobian of alpha -> x
  double volume_factor = 0.0;   // prod (1 - |alpha_n|^2)^(n-1)
  bool ill_conditioned = false; // some 1 - |alpha_n|^2 < 1e-6

  double relative_gap() const {
    return std::abs(det_abs - volume_factor) / std::max(std::abs(volume_factor), 1e-300);
  }
};

inline constexpr int kMaxJacobianOrder = 8;

/// Real Jacobian of (Re alpha, Im alpha) -> (Re x, Im x) by central
/// differences through reversed_polynomial.
inline JacobianResult jacobian_determinant(const VerblunskySeq& alpha, double h = 1e-6) {
  const int N = static_cast<int>(alpha.size());
  if (N > kMaxJacobianOrder) {
    throw std::invalid_argument("jacobian_determinant: N must be <= 8");
  }
  JacobianResult out;
  out.volume_factor = alpha.weighted_product(-1);
  for (const auto& a : alpha.values()) {
    if (1.0 - std::norm(a) < 1e-6) {
      out.ill_conditioned = true;
    }
  }
  if (N == 0) {
    out.det_abs = 1.0;
    return out;
  }
  Eigen::MatrixXd J(2 * N, 2 * N);
  const std::vector<cplx>& base = alpha.values();
  for (int col = 0; col < 2 * N; ++col) {
    const cplx step = col % 2 == 0 ? cplx(h, 0.0) : cplx(0.0, h);
    std::vector<cplx> plus = base;
    std::vector<cplx> minus = base;
    plus[static_cast<std::size_t>(col / 2)] += step;
    minus[static_cast<std::size_t>(col / 2)] -= step;
    // No disk check here: a step may cross |alpha| = 1 near the boundary.
    const auto xp = detail::reversed_coefficients(plus);
    const auto xm = detail::reversed_coefficients(minus);
    for (int n = 1; n <= N; ++n) {
      const cplx d = (xp[static_cast<std::size_t>(n)] - xm[static_cast<std::size_t>(n)]) / (2.0 * h);
      J(2 * (n - 1), col) = d.real();
      J(2 * (n - 1) + 1, col) = d.imag();
    }
  }
  out.det_abs = std::abs(J.fullPivLu().determinant());
  return out;
}

namespace detail {

/// Multilinear polynomial in alpha_1..alpha_N and their conjugates:
/// (holomorphic mask, antiholomorphic mask) -> integer coefficient.
using MultilinearPoly = std::map<std::pair<std::uint32_t, std::uint32_t>, long long>;

/// x_1..x_N from the gap-sequence expansion with alpha_k = 0 for k > N.
inline std::vector<MultilinearPoly> x_polynomials(int N) {
  std::vector<MultilinearPoly> x(static_cast<std::size_t>(N) + 1);
  for (int n = 1; n <= N; ++n) {
    for_each_gap_sequence(n, N, [&](const GapSequence& g) {
      std::uint32_t hol = 0;
      std::uint32_t anti = 0;
      for (const auto& [i, j] : g.pairs) {
        hol |= 1U << (i - 1);
        if (j > 0) {
          anti |= 1U << (j - 1);
        }
      }
      ++x[static_cast<std::size_t>(n)][{hol, anti}];
    });
  }
  return x;
}

inline GaussRat eval_monomial(std::uint32_t hol, std::uint32_t anti, const std::vector<GaussRat>& a) {
  GaussRat v(Rat(1));
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (hol & (1U << k)) v *= a[k];
    if (anti & (1U << k)) v *= a[k].conj();
  }
  return v;
}

/// d/d alpha_k (anti = false) or d/d conj(alpha_k) (anti = true) at a.
inline GaussRat derivative(const MultilinearPoly& p, int k, bool anti, const std::vector<GaussRat>& a) {
  GaussRat out;
  const std::uint32_t bit = 1U << (k - 1);
  for (const auto& [mask, coeff] : p) {
    const std::uint32_t m = anti ? mask.second : mask.first;
    if (!(m & bit)) {
      continue;
    }
    const GaussRat v = anti ? eval_monomial(mask.first, mask.second & ~bit, a)
                            : eval_monomial(mask.first & ~bit, mask.second, a);
    out += v * GaussRat(Rat(coeff));
  }
  return out;
}

inline GaussRat determinant(std::vector<std::vector<GaussRat>> m) {
  const std::size_t n = m.size();
  GaussRat det(Rat(1));
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m[pivot][c].is_zero()) ++pivot;
    if (pivot == n) {
      return GaussRat();
    }
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c].is_zero()) continue;
      const GaussRat factor = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) {
        m[r][k] = m[r][k] - factor * m[c][k];
      }
    }
  }
  return det;
}

}  // namespace detail

struct ExactJacobianResult {
  Rat det;            // real Jacobian determinant (exact)
  Rat volume_factor;  // prod (1 - |alpha_n|^2)^(n-1)
};

/// Exact Jacobian determinant at a Gaussian-rational point.
///
/// Differentiates the multilinear gap-sequence expansion of x_n in the
/// Wirtinger coordinates (alpha, conj alpha); that determinant equals the
/// real Jacobian determinant.
inline ExactJacobianResult jacobian_determinant_exact(const std::vector<GaussRat>& alpha) {
  const int N = static_cast<int>(alpha.size());
  if (N > kMaxJacobianOrder) {
    throw std::invalid_argument("jacobian_determinant_exact: N must be <= 8");
  }
  for (int n = 0; n < N; ++n) {
    if (!(alpha[static_cast<std::size_t>(n)].norm() < Rat(1))) {
      throw DomainError("|alpha_" + std::to_string(n + 1) + "| >= 1");
    }
  }
  const auto x = detail::x_polynomials(N);
  std::vector<std::vector<GaussRat>> J(2 * static_cast<std::size_t>(N),
                                       std::vector<GaussRat>(2 * static_cast<std::size_t>(N)));
  for (int n = 1; n <= N; ++n) {
    for (int k = 1; k <= N; ++k) {
      const GaussRat dh = detail::derivative(x[static_cast<std::size_t>(n)], k, false, alpha);
      const GaussRat da = detail::derivative(x[static_cast<std::size_t>(n)], k, true, alpha);
      const auto r = static_cast<std::size_t>(n - 1);
      const auto c = static_cast<std::size_t>(k - 1);
      const auto sN = static_cast<std::size_t>(N);
      J[r][c] = dh;
      J[r][c + sN] = da;
      J[r + sN][c] = da.conj();
      J[r + sN][c + sN] = dh.conj();
    }
  }
  const GaussRat det = detail::determinant(std::move(J));
  if (!det.im.is_zero()) {
    throw std::logic_error("jacobian_determinant_exact: non-real determinant");
  }
  Rat vol(1);
  for (int n = 1; n <= N; ++n) {
    vol *= pow(Rat(1) - alpha[static_cast<std::size_t>(n - 1)].norm(), static_cast<unsigned>(n - 1));
  }
  return {det.re, vol};
}

}  // namespace szego

#endif  // SZEGO_VOLUME_HPP
