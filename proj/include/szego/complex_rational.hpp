#ifndef SZEGO_COMPLEX_RATIONAL_HPP
#define SZEGO_COMPLEX_RATIONAL_HPP

#include <cctype>
#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

#include "szego/rational.hpp"

namespace szego {

/// Gaussian rational re + i im.
struct GaussRat {
  Rat re;
  Rat im;

  GaussRat() = default;
  GaussRat(Rat r, Rat i = Rat(0)) : re(std::move(r)), im(std::move(i)) {}

  GaussRat conj() const { return {re, -im}; }
  Rat norm() const { return re * re + im * im; }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }

  GaussRat operator-() const { return {-re, -im}; }
  friend GaussRat operator+(const GaussRat& a, const GaussRat& b) { return {a.re + b.re, a.im + b.im}; }
  friend GaussRat operator-(const GaussRat& a, const GaussRat& b) { return {a.re - b.re, a.im - b.im}; }
  friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussRat operator/(const GaussRat& a, const GaussRat& b) {
    const Rat n = b.norm();
    if (n.is_zero()) {
      throw std::domain_error("GaussRat: division by zero");
    }
    const GaussRat t = a * b.conj();
    return {t.re / n, t.im / n};
  }
  GaussRat& operator+=(const GaussRat& o) { return *this = *this + o; }
  GaussRat& operator*=(const GaussRat& o) { return *this = *this * o; }
  friend bool operator==(const GaussRat&, const GaussRat&) = default;
};

/// Exact value of a decimal literal such as "-0.125", "3", "1e-2" or "2/7".
inline Rat parse_decimal(std::string_view text) {
  const std::string s(!text.empty() && text.front() == '+' ? text.substr(1) : text);
  if (s.find('/') != std::string::npos) {
    return Rat::parse(s);
  }
  std::size_t pos = 0;
  bool negative = false;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    negative = s[pos] == '-';
    ++pos;
  }
  BigInt digits(0);
  int scale = 0;
  bool seen_digit = false;
  bool seen_point = false;
  for (; pos < s.size(); ++pos) {
    const char ch = s[pos];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits = digits * 10 + (ch - '0');
      seen_digit = true;
      if (seen_point) {
        ++scale;
      }
    } else if (ch == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) {
    throw std::invalid_argument("malformed number '" + s + "'");
  }
  int exponent = 0;
  if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
    std::size_t used = 0;
    try {
      exponent = std::stoi(s.substr(pos + 1), &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed exponent in '" + s + "'");
    }
    pos += 1 + used;
  }
  if (pos != s.size()) {
    throw std::invalid_argument("malformed number '" + s + "'");
  }
  exponent -= scale;
  BigInt ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  Rat out = exponent >= 0 ? Rat(BigInt(digits * ten_pow)) : Rat(digits, ten_pow);
  return negative ? -out : out;
}

/// Parses complex literals "re", "imi", "re+imi", "re-imi" (also "i", "-i").
inline GaussRat parse_complex(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) {
      s += ch;
    }
  }
  if (s.empty()) {
    throw std::invalid_argument("empty complex literal");
  }
  if (s.back() != 'i') {
    return {parse_decimal(s), Rat(0)};
  }
  const std::string body = s.substr(0, s.size() - 1);
  // Split at the last sign that does not start the string or follow an exponent marker.
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  auto imag_part = [&](const std::string& t) {
    if (t.empty() || t == "+") return Rat(1);
    if (t == "-") return Rat(-1);
    return parse_decimal(t);
  };
  try {
    if (split == std::string::npos) {
      return {Rat(0), imag_part(body)};
    }
    return {parse_decimal(body.substr(0, split)), imag_part(body.substr(split))};
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed complex literal '" + std::string(text) + "'");
  }
}

}  // namespace szego

#endif  // SZEGO_COMPLEX_RATIONAL_HPP
