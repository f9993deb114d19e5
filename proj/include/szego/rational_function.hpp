#ifndef SZEGO_RATIONAL_FUNCTION_HPP
#define SZEGO_RATIONAL_FUNCTION_HPP

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include "szego/beta_poly.hpp"
#include "szego/rational.hpp"

namespace szego {

/// Thrown when a rational function is evaluated at one of its poles.
class PoleError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Reduced rational function num/den in beta with a monic denominator.
///
/// Every instance is canonical: gcd(num, den) == 1 and den is monic, so
/// equal functions compare equal member-wise.
class RatFuncBeta {
public:
  RatFuncBeta() : den_(Rat(1)) {}
  RatFuncBeta(Rat c) : num_(std::move(c)), den_(Rat(1)) {}
  RatFuncBeta(int c) : RatFuncBeta(Rat(c)) {}
  RatFuncBeta(BetaPoly p) : num_(std::move(p)), den_(Rat(1)) {}

  /// Reduces num/den to canonical form; throws std::domain_error on den == 0.
  static RatFuncBeta normalize(BetaPoly num, BetaPoly den) {
    if (den.is_zero()) {
      throw std::domain_error("RatFuncBeta: zero denominator");
    }
    RatFuncBeta out;
    if (num.is_zero()) {
      return out;
    }
    const BetaPoly g = gcd(num, den);
    num = num.divmod(g).first;
    den = den.divmod(g).first;
    const Rat lead = den.leading();
    out.num_ = num.scaled(Rat(1) / lead);
    out.den_ = den.scaled(Rat(1) / lead);
    return out;
  }

  /// c * beta^(-k)
  static RatFuncBeta inverse_beta_power(Rat c, std::size_t k) {
    return normalize(BetaPoly(std::move(c)), BetaPoly::monomial(Rat(1), k));
  }

  const BetaPoly& num() const noexcept { return num_; }
  const BetaPoly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }

  /// Exact evaluation at a rational point; throws PoleError at a pole.
  Rat eval(const Rat& beta) const {
    const Rat d = den_(beta);
    if (d.is_zero()) {
      throw PoleError("pole at beta = " + beta.to_string() + ": factor (b - (" +
                      beta.to_string() + ")) divides denominator " + den_.to_string());
    }
    return num_(beta) / d;
  }

  RatFuncBeta operator-() const {
    RatFuncBeta out = *this;
    out.num_ = -out.num_;
    return out;
  }

  friend RatFuncBeta operator+(const RatFuncBeta& a, const RatFuncBeta& b) {
    if (a.den_ == b.den_) {
      return normalize(a.num_ + b.num_, a.den_);
    }
    return normalize(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFuncBeta operator-(const RatFuncBeta& a, const RatFuncBeta& b) { return a + (-b); }
  friend RatFuncBeta operator*(const RatFuncBeta& a, const RatFuncBeta& b) {
    return normalize(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFuncBeta operator/(const RatFuncBeta& a, const RatFuncBeta& b) {
    if (b.is_zero()) {
      throw std::domain_error("RatFuncBeta: division by zero");
    }
    return normalize(a.num_ * b.den_, a.den_ * b.num_);
  }
  RatFuncBeta& operator+=(const RatFuncBeta& o) { return *this = *this + o; }
  RatFuncBeta& operator*=(const RatFuncBeta& o) { return *this = *this * o; }

  friend bool operator==(const RatFuncBeta&, const RatFuncBeta&) = default;

  /// Cross-multiplication test; agrees with == on canonical values.
  static bool equivalent(const RatFuncBeta& a, const RatFuncBeta& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  std::string to_string() const {
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
  }
  friend std::ostream& operator<<(std::ostream& os, const RatFuncBeta& r) { return os << r.to_string(); }

private:
  BetaPoly num_;
  BetaPoly den_;
};

}  // namespace szego

#endif  // SZEGO_RATIONAL_FUNCTION_HPP
