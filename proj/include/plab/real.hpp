#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <gmpxx.h>

#include <string>

namespace plab {

using Real = boost::multiprecision::mpfr_float;

inline constexpr unsigned kDefaultDigits = 64;

/// Sets the decimal working precision of newly created Reals on this thread
/// and restores the previous value on scope exit.
class DigitsScope {
 public:
  explicit DigitsScope(unsigned digits) : saved_(Real::default_precision()) {
    Real::default_precision(digits);
  }
  ~DigitsScope() { Real::default_precision(saved_); }
  DigitsScope(const DigitsScope&) = delete;
  DigitsScope& operator=(const DigitsScope&) = delete;

 private:
  unsigned saved_;
};

inline Real pi() { return boost::math::constants::pi<Real>(); }

inline Real to_real(const mpz_class& z) { return Real(z.get_str()); }

inline Real to_real(const mpq_class& q) {
  return to_real(q.get_num()) / to_real(q.get_den());
}

/// Parses a decimal literal at the current working precision.
Real parse_real(const std::string& text);

/// Scientific notation with `digits` significant digits.
std::string format_real(const Real& x, unsigned digits);

/// Minimal complex value over Real; only what the Gauss-sum and
/// product evaluations need.
struct Complex {
  Real re{0};
  Real im{0};

  Complex() = default;
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator/(const Complex& a, const Complex& b) {
    Real d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  Complex& operator*=(const Complex& b) { return *this = *this * b; }
  Complex& operator/=(const Complex& b) { return *this = *this / b; }

  Real abs() const { return sqrt(re * re + im * im); }
};

/// e^{2 pi i num/den}
Complex root_of_unity(long long num, long long den);

}  // namespace plab
