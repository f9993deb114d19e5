#ifndef SZEGO_BETA_POLY_HPP
#define SZEGO_BETA_POLY_HPP

#include <cstddef>
#include <initializer_list>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "szego/rational.hpp"

namespace szego {

/// Dense univariate polynomial in beta with rational coefficients.
///
/// Coefficient i multiplies beta^i. Trailing zeros are always stripped,
/// so the zero polynomial has no coefficients and degree() == -1.
class BetaPoly {
public:
  BetaPoly() = default;
  BetaPoly(Rat constant) {
    if (!constant.is_zero()) {
      coeffs_.push_back(std::move(constant));
    }
  }
  BetaPoly(int constant) : BetaPoly(Rat(constant)) {}
  explicit BetaPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  BetaPoly(std::initializer_list<Rat> coeffs) : coeffs_(coeffs) { trim(); }

  /// c * beta^k
  static BetaPoly monomial(Rat c, std::size_t k) {
    std::vector<Rat> v(k + 1);
    v[k] = std::move(c);
    return BetaPoly(std::move(v));
  }

  static BetaPoly beta() { return monomial(Rat(1), 1); }

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Rat>& coefficients() const noexcept { return coeffs_; }

  Rat coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rat(0); }
  Rat leading() const { return is_zero() ? Rat(0) : coeffs_.back(); }

  Rat operator()(const Rat& x) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * x + *it;
    }
    return acc;
  }

  BetaPoly operator-() const {
    BetaPoly out = *this;
    for (auto& c : out.coeffs_) {
      c = -c;
    }
    return out;
  }

  BetaPoly& operator+=(const BetaPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) {
      coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
      coeffs_[i] += o.coeffs_[i];
    }
    trim();
    return *this;
  }
  BetaPoly& operator-=(const BetaPoly& o) { return *this += -o; }

  friend BetaPoly operator+(BetaPoly a, const BetaPoly& b) { return a += b; }
  friend BetaPoly operator-(BetaPoly a, const BetaPoly& b) { return a -= b; }

  friend BetaPoly operator*(const BetaPoly& a, const BetaPoly& b) {
    if (a.is_zero() || b.is_zero()) {
      return {};
    }
    std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) {
        continue;
      }
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return BetaPoly(std::move(out));
  }
  BetaPoly& operator*=(const BetaPoly& o) { return *this = *this * o; }

  BetaPoly scaled(const Rat& c) const {
    if (c.is_zero()) {
      return {};
    }
    BetaPoly out = *this;
    for (auto& x : out.coeffs_) {
      x *= c;
    }
    return out;
  }

  /// Euclidean division over the rationals: *this = q * d + r, deg r < deg d.
  std::pair<BetaPoly, BetaPoly> divmod(const BetaPoly& d) const {
    if (d.is_zero()) {
      throw std::domain_error("BetaPoly: division by the zero polynomial");
    }
    std::vector<Rat> rem = coeffs_;
    const int dd = d.degree();
    if (degree() < dd) {
      return {BetaPoly(), *this};
    }
    std::vector<Rat> quot(static_cast<std::size_t>(degree() - dd + 1));
    const Rat lead = d.leading();
    for (int k = degree(); k >= dd; --k) {
      const Rat c = rem[static_cast<std::size_t>(k)] / lead;
      quot[static_cast<std::size_t>(k - dd)] = c;
      if (c.is_zero()) {
        continue;
      }
      for (int j = 0; j <= dd; ++j) {
        rem[static_cast<std::size_t>(k - dd + j)] -= c * d.coeffs_[static_cast<std::size_t>(j)];
      }
    }
    return {BetaPoly(std::move(quot)), BetaPoly(std::move(rem))};
  }

  BetaPoly monic() const { return is_zero() ? *this : scaled(Rat(1) / leading()); }

  friend bool operator==(const BetaPoly&, const BetaPoly&) = default;

  /// Exponent -> coefficient, zero coefficients omitted.
  std::map<int, Rat> to_map() const {
    std::map<int, Rat> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (!coeffs_[i].is_zero()) {
        out.emplace(static_cast<int>(i), coeffs_[i]);
      }
    }
    return out;
  }

  std::string to_string() const {
    if (is_zero()) {
      return "0";
    }
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      const Rat& c = coeffs_[static_cast<std::size_t>(k)];
      if (c.is_zero()) {
        continue;
      }
      if (!out.empty()) {
        out += " + ";
      }
      out += "(" + c.to_string() + ")";
      if (k > 0) {
        out += k == 1 ? "*b" : "*b^" + std::to_string(k);
      }
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const BetaPoly& p) { return os << p.to_string(); }

private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
      coeffs_.pop_back();
    }
  }

  std::vector<Rat> coeffs_;
};

/// Monic gcd by the Euclidean algorithm over Q. gcd(0, 0) == 0.
inline BetaPoly gcd(BetaPoly a, BetaPoly b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

}  // namespace szego

#endif  // SZEGO_BETA_POLY_HPP
