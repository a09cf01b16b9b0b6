#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <string>

namespace sqw {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Exact conversion; every finite double is a dyadic rational.
inline Rational rational_from_double(double x) { return Rational(x); }

// Gaussian rational: exact complex number with rational real/imaginary parts.
// Field operations only; no ordering, no square roots.
struct ExactComplex {
  Rational re, im;

  ExactComplex() : re(0), im(0) {}
  ExactComplex(Rational r) : re(std::move(r)), im(0) {}
  ExactComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  ExactComplex(int r) : re(r), im(0) {}

  static ExactComplex from_double(const std::complex<double>& z) {
    return {rational_from_double(z.real()), rational_from_double(z.imag())};
  }
  std::complex<double> to_complex() const {
    return {static_cast<double>(re), static_cast<double>(im)};
  }

  bool is_zero() const { return re == 0 && im == 0; }

  friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend ExactComplex operator+(const ExactComplex& a, const ExactComplex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ExactComplex operator-(const ExactComplex& a, const ExactComplex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ExactComplex operator-(const ExactComplex& a) { return {-a.re, -a.im}; }
  friend ExactComplex operator*(const ExactComplex& a, const ExactComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ExactComplex operator/(const ExactComplex& a, const ExactComplex& b) {
    Rational n = b.re * b.re + b.im * b.im;  // nonzero for b != 0
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  ExactComplex conj() const { return {re, -im}; }
  Rational norm_sq() const { return re * re + im * im; }
};

inline std::string to_string(const ExactComplex& z) {
  return z.re.str() + (z.im < 0 ? "" : "+") + z.im.str() + "i";
}

}  // namespace sqw
