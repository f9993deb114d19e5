#ifndef SZEGO_RATIONAL_HPP
#define SZEGO_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace szego {

using BigInt = mpz_class;

/// Arbitrary-precision rational number in canonical form.
///
/// The numerator and denominator are always coprime, the denominator is
/// positive and zero is stored as 0/1, so equal values have identical
/// representations.
class Rat {
public:
  Rat() = default;
  Rat(int v) : value_(v) {}
  Rat(long v) : value_(v) {}
  Rat(long long v) : value_(BigInt(std::to_string(v))) {}
  Rat(unsigned long v) : value_(v) {}
  Rat(const BigInt& v) : value_(v) {}

  Rat(const BigInt& num, const BigInt& den) {
    if (den == 0) {
      throw std::domain_error("Rat: zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
  }

  explicit Rat(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

  /// Parses "a", "a/b" or "-a/b".
  static Rat parse(std::string_view text) {
    const std::string s(text);
    if (s.empty()) {
      throw std::invalid_argument("empty rational literal");
    }
    const auto slash = s.find('/');
    auto parse_int = [&](const std::string& part) {
      BigInt out;
      if (part.empty() || out.set_str(part, 10) != 0) {
        throw std::invalid_argument("malformed rational literal '" + s + "'");
      }
      return out;
    };
    if (slash == std::string::npos) {
      return Rat(parse_int(s));
    }
    const BigInt den = parse_int(s.substr(slash + 1));
    if (den == 0) {
      throw std::invalid_argument("zero denominator in '" + s + "'");
    }
    return Rat(parse_int(s.substr(0, slash)), den);
  }

  const mpq_class& value() const noexcept { return value_; }
  BigInt num() const { return value_.get_num(); }
  BigInt den() const { return value_.get_den(); }

  bool is_zero() const noexcept { return sgn(value_) == 0; }
  int sign() const noexcept { return sgn(value_); }
  double to_double() const { return value_.get_d(); }

  /// Always "num/den", including integers ("3/1").
  std::string to_string() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
  }

  Rat operator-() const { return Rat(mpq_class(-value_)); }

  Rat& operator+=(const Rat& o) { value_ += o.value_; return *this; }
  Rat& operator-=(const Rat& o) { value_ -= o.value_; return *this; }
  Rat& operator*=(const Rat& o) { value_ *= o.value_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) {
      throw std::domain_error("Rat: division by zero");
    }
    value_ /= o.value_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

private:
  mpq_class value_{0};
};

inline Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

inline Rat pow(Rat base, unsigned exp) {
  Rat out(1);
  while (exp != 0) {
    if (exp & 1U) {
      out *= base;
    }
    base *= base;
    exp >>= 1U;
  }
  return out;
}

inline BigInt factorial(unsigned long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }

}  // namespace szego

template <>
struct std::hash<szego::Rat> {
  std::size_t operator()(const szego::Rat& r) const noexcept {
    return std::hash<std::string>{}(r.to_string());
  }
};

#endif  // SZEGO_RATIONAL_HPP
