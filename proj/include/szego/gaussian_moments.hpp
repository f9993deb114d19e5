#ifndef SZEGO_GAUSSIAN_MOMENTS_HPP
#define SZEGO_GAUSSIAN_MOMENTS_HPP

#include <cassert>
#include <cstddef>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "szego/combinatorics.hpp"
#include "szego/multi_index.hpp"
#include "szego/rational.hpp"
#include "szego/rational_function.hpp"

namespace szego {

/// Polynomial sum_k a_k beta^{-k} in the inverse temperature.
///
/// Coefficient k multiplies beta^{-k}; trailing zeros are stripped.
class MomentPolynomial {
public:
  MomentPolynomial() = default;
  explicit MomentPolynomial(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static MomentPolynomial term(Rat c, std::size_t k) {
    std::vector<Rat> v(k + 1);
    v[k] = std::move(c);
    return MomentPolynomial(std::move(v));
  }
  static MomentPolynomial one() { return term(Rat(1), 0); }

  /// Highest power of beta^{-1} present, -1 for zero.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  Rat coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rat(0); }
  const std::vector<Rat>& coefficients() const noexcept { return coeffs_; }

  /// Value at beta = 1, i.e. the total mass sum_k a_k.
  Rat total_mass() const {
    Rat s(0);
    for (const auto& c : coeffs_) s += c;
    return s;
  }

  /// The same value as num / beta^d.
  RatFuncBeta to_ratfunc() const {
    if (is_zero()) {
      return RatFuncBeta();
    }
    const std::size_t d = coeffs_.size() - 1;
    std::vector<Rat> num(d + 1);
    for (std::size_t k = 0; k <= d; ++k) {
      num[d - k] = coeffs_[k];
    }
    return RatFuncBeta::normalize(BetaPoly(std::move(num)), BetaPoly::monomial(Rat(1), d));
  }

  Rat eval(const Rat& beta) const {
    if (beta.is_zero()) {
      throw PoleError("moment polynomial evaluated at beta = 0");
    }
    const Rat s = Rat(1) / beta;
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * s + *it;
    }
    return acc;
  }

  MomentPolynomial& operator+=(const MomentPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
  }
  friend MomentPolynomial operator+(MomentPolynomial a, const MomentPolynomial& b) { return a += b; }
  friend MomentPolynomial operator-(MomentPolynomial a, const MomentPolynomial& b) {
    return a += b.scaled(Rat(-1));
  }

  friend MomentPolynomial operator*(const MomentPolynomial& a, const MomentPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return MomentPolynomial(std::move(out));
  }

  MomentPolynomial scaled(const Rat& c) const {
    std::vector<Rat> v = coeffs_;
    for (auto& x : v) x *= c;
    return MomentPolynomial(std::move(v));
  }

  /// Multiply by beta^{-1}.
  MomentPolynomial shifted() const {
    if (is_zero()) return {};
    std::vector<Rat> v(coeffs_.size() + 1);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) v[k + 1] = coeffs_[k];
    return MomentPolynomial(std::move(v));
  }

  /// k -> a_k for nonzero a_k (k = power of beta^{-1}).
  std::map<int, Rat> to_map() const {
    std::map<int, Rat> out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      if (!coeffs_[k].is_zero()) out.emplace(static_cast<int>(k), coeffs_[k]);
    return out;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      const Rat& c = coeffs_[static_cast<std::size_t>(k)];
      if (c.is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += "(" + c.to_string() + ")";
      if (k > 0) out += "*b^-" + std::to_string(k);
    }
    return out;
  }

  friend bool operator==(const MomentPolynomial&, const MomentPolynomial&) = default;
  friend std::ostream& operator<<(std::ostream& os, const MomentPolynomial& p) { return os << p.to_string(); }

private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<Rat> coeffs_;
};

/// p! / prod_n n^{p(n)} * beta^{-|p|} when p == q, else 0.
inline MomentPolynomial gaussian_f_moment(const MultiIndex& p, const MultiIndex& q) {
  if (p != q) {
    return {};
  }
  BigInt num(1);
  BigInt den(1);
  for (const auto& [n, c] : p.entries()) {
    num *= factorial(static_cast<unsigned long>(c));
    BigInt np;
    mpz_ui_pow_ui(np.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(c));
    den *= np;
  }
  return MomentPolynomial::term(Rat(num, den), static_cast<std::size_t>(p.size()));
}

/// E(x^p conj(x^q)) for x = exp(-f_+) under the Gaussian law, as
/// E over cycle types L of f(p, L) f(q, L) beta^{-|L|}.
///
/// Cycle types with support above min(max supp p, max supp q) cannot be
/// decomposed on both sides and are skipped.
inline MomentPolynomial gaussian_x_moment(const MultiIndex& p, const MultiIndex& q) {
  const int d = p.degree();
  if (d != q.degree()) {
    return {};
  }
  const int cut = std::min(p.max_support(), q.max_support());
  DecompositionCounter fp(p);
  DecompositionCounter fq(q);
  MomentPolynomial out;
  for (const MultiIndex& L : partitions(d)) {
    if (L.max_support() > cut) {
      assert(fp(L) == 0 || fq(L) == 0);
      continue;
    }
    const BigInt w = fp(L) * fq(L);
    if (w == 0) {
      continue;
    }
    out += MomentPolynomial::term(haar_weight(L) * Rat(w), static_cast<std::size_t>(L.size()));
  }
  return out;
}

inline constexpr int kRawDegreeGuard = 8;

/// Direct double sum over decomposition pairs (J_{n,r}), (K_{m,s}) with
/// sum J = sum K = L; each pair contributes
/// L! / (prod J! prod K! prod_u u^{L(u)}) beta^{-|L|}.
inline MomentPolynomial gaussian_x_moment_raw(const MultiIndex& p, const MultiIndex& q) {
  if (p.degree() > kRawDegreeGuard || q.degree() > kRawDegreeGuard) {
    throw std::invalid_argument("gaussian_x_moment_raw: degree guard (" + std::to_string(kRawDegreeGuard) +
                                ") exceeded");
  }
  if (p.degree() != q.degree()) {
    return {};
  }
  auto fact = [](const MultiIndex& J) {
    BigInt v(1);
    for (const auto& [u, c] : J.entries()) v *= factorial(static_cast<unsigned long>(c));
    return v;
  };
  struct Flat {
    MultiIndex total;
    BigInt fact_product;
  };
  auto flatten = [&](const MultiIndex& m) {
    std::vector<Flat> out;
    for (const auto& dec : decompositions(m)) {
      BigInt fp(1);
      for (const auto& part : dec.parts) fp *= fact(part.J);
      out.push_back({dec.total(), fp});
    }
    return out;
  };
  const auto left = flatten(p);
  const auto right = flatten(q);
  MomentPolynomial out;
  for (const auto& a : left) {
    for (const auto& b : right) {
      if (a.total != b.total) {
        continue;
      }
      const MultiIndex& L = a.total;
      BigInt upow(1);
      for (const auto& [u, c] : L.entries()) {
        BigInt t;
        mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(u), static_cast<unsigned long>(c));
        upow *= t;
      }
      out += MomentPolynomial::term(Rat(fact(L), a.fact_product * b.fact_product * upow),
                                    static_cast<std::size_t>(L.size()));
    }
  }
  return out;
}

/// prod_{k=1}^n ((1/k) beta^{-1} + (k-1)/k).
inline MomentPolynomial variance_pmf(int n) {
  if (n < 1) {
    throw std::invalid_argument("variance_pmf: n must be >= 1");
  }
  MomentPolynomial out = MomentPolynomial::one();
  for (int k = 1; k <= n; ++k) {
    out = out * MomentPolynomial(std::vector<Rat>{Rat(k - 1, k), Rat(1, k)});
  }
  return out;
}

/// prod_n variance_pmf(n)^{p(n)}; equals E(x^p conj(x_d)) with d = deg p.
inline MomentPolynomial multiplicity_free_moment(const MultiIndex& p) {
  MomentPolynomial out = MomentPolynomial::one();
  for (const auto& [n, c] : p.entries()) {
    const MomentPolynomial v = variance_pmf(n);
    for (int r = 0; r < c; ++r) out = out * v;
  }
  return out;
}

/// Internal-consistency failure between two exact formulas.
class ConsistencyError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// a_k^{(n)} for k = 1..n (index 0 of the result is a_1).
///
/// Computed as the partition sum over J with deg J = n, |J| = k of
/// 1/(J! prod u^{J(u)}) and, independently, as e_{n-k}(0, 1, ..., n-1)/n!.
/// The two must agree exactly.
inline std::vector<Rat> a_coefficients(int n) {
  if (n < 1 || n > 20) {
    throw std::invalid_argument("a_coefficients: need 1 <= n <= 20");
  }
  std::vector<Rat> by_partitions(static_cast<std::size_t>(n) + 1);
  for (const MultiIndex& J : partitions(n)) {
    by_partitions[static_cast<std::size_t>(J.size())] += haar_weight(J);
  }
  // e[j] = elementary symmetric polynomial of degree j in 0, 1, ..., n-1.
  std::vector<BigInt> e(static_cast<std::size_t>(n) + 1, BigInt(0));
  e[0] = 1;
  for (int l = 0; l < n; ++l) {
    for (int j = l + 1; j >= 1; --j) {
      e[static_cast<std::size_t>(j)] += e[static_cast<std::size_t>(j - 1)] * l;
    }
  }
  const BigInt nf = factorial(static_cast<unsigned long>(n));
  std::vector<Rat> out;
  for (int k = 1; k <= n; ++k) {
    const Rat elem(e[static_cast<std::size_t>(n - k)], nf);
    if (elem != by_partitions[static_cast<std::size_t>(k)]) {
      throw ConsistencyError("a_coefficients: formulas disagree at n=" + std::to_string(n) +
                             ", k=" + std::to_string(k));
    }
    out.push_back(elem);
  }
  return out;
}

}  // namespace szego

#endif  // SZEGO_GAUSSIAN_MOMENTS_HPP
