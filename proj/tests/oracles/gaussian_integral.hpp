#ifndef SZEGO_TESTS_GAUSSIAN_INTEGRAL_HPP
#define SZEGO_TESTS_GAUSSIAN_INTEGRAL_HPP

// E(x^p conj(x^q)) for x = exp(-f) by expanding x_n as a polynomial in
// f_1..f_d and integrating monomials against independent complex Gaussians:
// E(f^a conj(f)^b) = [a == b] prod_k a_k! (k beta)^{-a_k}.

#include <map>
#include <vector>

#include "szego/gaussian_moments.hpp"

namespace oracle {

using szego::BigInt;
using szego::MultiIndex;
using szego::Rat;

using FPoly = std::map<std::vector<int>, Rat>;

inline FPoly fpoly_mul(const FPoly& a, const FPoly& b) {
  FPoly out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      out[e] += ca * cb;
    }
  }
  return out;
}

/// x_n = sum over a with sum k a_k = n of prod_k (-f_k)^{a_k} / a_k!.
inline FPoly x_coefficient(int n, int d) {
  FPoly out;
  std::vector<int> a(static_cast<std::size_t>(d) + 1, 0);
  auto rec = [&](auto&& self, int k, int left) -> void {
    if (k > d) {
      if (left != 0) return;
      Rat c(1);
      for (int j = 1; j <= d; ++j) {
        c /= Rat(szego::factorial(static_cast<unsigned long>(a[static_cast<std::size_t>(j)])));
        if (a[static_cast<std::size_t>(j)] % 2) c = -c;
      }
      out[a] += c;
      return;
    }
    for (int c = 0; c * k <= left; ++c) {
      a[static_cast<std::size_t>(k)] = c;
      self(self, k + 1, left - c * k);
    }
    a[static_cast<std::size_t>(k)] = 0;
  };
  rec(rec, 1, n);
  return out;
}

inline FPoly x_power(const MultiIndex& p, int d) {
  FPoly out{{std::vector<int>(static_cast<std::size_t>(d) + 1, 0), Rat(1)}};
  for (const auto& [n, c] : p.entries()) {
    const FPoly xn = x_coefficient(n, d);
    for (int r = 0; r < c; ++r) out = fpoly_mul(out, xn);
  }
  return out;
}

inline szego::MomentPolynomial gaussian_integral_moment(const MultiIndex& p, const MultiIndex& q) {
  const int d = std::max(p.degree(), q.degree());
  const FPoly a = x_power(p, d);
  const FPoly b = x_power(q, d);
  szego::MomentPolynomial out;
  for (const auto& [e, ca] : a) {
    const auto it = b.find(e);
    if (it == b.end()) continue;
    Rat w = ca * it->second;
    std::size_t total = 0;
    for (int k = 1; k <= d; ++k) {
      const int ak = e[static_cast<std::size_t>(k)];
      w *= Rat(szego::factorial(static_cast<unsigned long>(ak)));
      w /= szego::pow(Rat(k), static_cast<unsigned>(ak));
      total += static_cast<std::size_t>(ak);
    }
    out += szego::MomentPolynomial::term(w, total);
  }
  return out;
}

}  // namespace oracle

#endif
