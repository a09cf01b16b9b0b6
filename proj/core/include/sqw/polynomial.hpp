#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sqw/exact.hpp"
#include "sqw/types.hpp"

namespace sqw {

template <class S>
struct ScalarOps;

template <>
struct ScalarOps<Complex> {
  static Complex zero() { return {0, 0}; }
  static Complex one() { return {1, 0}; }
  static bool is_zero(const Complex& x) { return x == Complex{0, 0}; }
  static double magnitude(const Complex& x) { return std::abs(x); }
};

template <>
struct ScalarOps<ExactComplex> {
  static ExactComplex zero() { return ExactComplex(0); }
  static ExactComplex one() { return ExactComplex(1); }
  static bool is_zero(const ExactComplex& x) { return x.is_zero(); }
  static double magnitude(const ExactComplex& x) { return std::abs(x.to_complex()); }
};

// Dense univariate polynomial in the step variable z. Trailing coefficients
// that are exactly zero are trimmed; degree() of the zero polynomial is the
// sentinel -1.
template <class S>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Polynomial constant(S v) { return Polynomial(std::vector<S>{std::move(v)}); }
  static Polynomial one() { return constant(ScalarOps<S>::one()); }
  // v * z^k
  static Polynomial monomial(S v, int k) {
    std::vector<S> c(static_cast<size_t>(k) + 1, ScalarOps<S>::zero());
    c.back() = std::move(v);
    return Polynomial(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<S>& coeffs() const { return c_; }
  S coeff(int k) const {
    return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : ScalarOps<S>::zero();
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<S> c(std::max(a.c_.size(), b.c_.size()), ScalarOps<S>::zero());
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] = c[i] + a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] + b.c_[i];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<S> c(std::max(a.c_.size(), b.c_.size()), ScalarOps<S>::zero());
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] = c[i] + a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] - b.c_[i];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<S> c(a.c_.size() + b.c_.size() - 1, ScalarOps<S>::zero());
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
  }
  Polynomial scaled(const S& v) const {
    std::vector<S> c(c_);
    for (auto& x : c) x = x * v;
    return Polynomial(std::move(c));
  }

  template <class Z>
  Z eval(const Z& z) const {
    Z acc{};
    for (size_t i = c_.size(); i-- > 0;) acc = acc * z + Z(c_[i]);
    return acc;
  }
  Complex eval_complex(const Complex& z) const {
    Complex acc{0, 0};
    for (size_t i = c_.size(); i-- > 0;) acc = acc * z + to_complex_value(c_[i]);
    return acc;
  }

  // Drop coefficients tiny relative to the largest one; float-mode cleanup
  // after eliminations whose cancellations leave rounding dust.
  Polynomial cleaned(double rel_eps) const {
    double peak = 0;
    for (const auto& x : c_) peak = std::max(peak, ScalarOps<S>::magnitude(x));
    std::vector<S> c(c_);
    for (auto& x : c)
      if (ScalarOps<S>::magnitude(x) <= rel_eps * peak) x = ScalarOps<S>::zero();
    return Polynomial(std::move(c));
  }

 private:
  static Complex to_complex_value(const Complex& v) { return v; }
  static Complex to_complex_value(const ExactComplex& v) { return v.to_complex(); }
  void trim() {
    while (!c_.empty() && ScalarOps<S>::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<S> c_;
};

// Exact quotient num / den for divisions known to be remainder-free, computed
// low order first. Requires den(0) != 0; in the elimination below den(0) is
// always exactly 1, which keeps the float instantiation stable.
template <class S>
Polynomial<S> divide_exact(const Polynomial<S>& num, const Polynomial<S>& den) {
  if (den.is_zero()) throw std::logic_error("polynomial division by zero");
  if (num.is_zero()) return {};
  int qlen = num.degree() - den.degree() + 1;
  if (qlen <= 0) throw std::logic_error("inexact polynomial division (degree underflow)");
  // A common power of z cancels first; for a true ring quotient the
  // numerator's low-order zero run is at least as long as the denominator's.
  int shift = 0;
  while (shift <= den.degree() && ScalarOps<S>::is_zero(den.coeff(shift))) ++shift;
  for (int k = 0; k < shift; ++k)
    if (!ScalarOps<S>::is_zero(num.coeff(k)))
      throw std::logic_error("polynomial division needs a nonzero constant term");
  std::vector<S> q(static_cast<size_t>(qlen), ScalarOps<S>::zero());
  S d0 = den.coeff(shift);
  for (int k = 0; k < qlen; ++k) {
    S acc = num.coeff(k + shift);
    for (int j = 1; j <= std::min(k, den.degree() - shift); ++j)
      acc = acc - den.coeff(j + shift) * q[k - j];
    q[k] = acc / d0;
  }
  return Polynomial<S>(std::move(q));
}

// Fraction-free (Bareiss) determinant over the polynomial ring. Intermediate
// entries stay true minors, so every division is exact; no pivot search is
// needed when all leading principal minors are nonzero (our resolvent
// matrices have constant term 1 there), but a row-swap fallback keeps the
// routine total.
template <class S>
Polynomial<S> bareiss_determinant(std::vector<std::vector<Polynomial<S>>> m) {
  const size_t n = m.size();
  if (n == 0) return Polynomial<S>::one();
  bool negate = false;
  Polynomial<S> prev = Polynomial<S>::one();
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return {};  // singular
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    const Polynomial<S>& pivot = m[k][k];
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j)
        m[i][j] = divide_exact(pivot * m[i][j] - m[i][k] * m[k][j], prev);
      m[i][k] = {};
    }
    prev = m[k][k];
  }
  Polynomial<S> det = std::move(m[n - 1][n - 1]);
  return negate ? Polynomial<S>() - det : det;
}

// Ratio of polynomials in z. Kept with the denominator's constant term equal
// to one; float mode may carry common factors (they cancel wherever the
// function is used as a value), exact mode can reduce them away.
template <class S>
struct RationalFunction {
  Polynomial<S> num;
  Polynomial<S> den = Polynomial<S>::one();

  void normalize() {
    if (den.is_zero()) throw std::logic_error("rational function with zero denominator");
    S d0 = den.coeff(0);
    if (ScalarOps<S>::is_zero(d0))
      throw std::logic_error("denominator vanishes at z = 0");
    S inv = ScalarOps<S>::one() / d0;
    num = num.scaled(inv);
    den = den.scaled(inv);
  }

  // Taylor coefficients around z = 0, orders 0..n_max. With den(0) = 1:
  // c_n = num_n - sum_{k>=1} den_k c_{n-k}.
  std::vector<S> taylor(int n_max) const {
    if (ScalarOps<S>::is_zero(den.coeff(0)))
      throw std::logic_error("taylor expansion at a pole (den(0) = 0)");
    RationalFunction f = *this;
    f.normalize();
    std::vector<S> c(static_cast<size_t>(n_max) + 1, ScalarOps<S>::zero());
    for (int n = 0; n <= n_max; ++n) {
      S acc = f.num.coeff(n);
      for (int k = 1; k <= std::min(n, f.den.degree()); ++k)
        acc = acc - f.den.coeff(k) * c[n - k];
      c[n] = acc;
    }
    return c;
  }
};

template <class S>
RationalFunction<S> rf_const(S v) {
  return {Polynomial<S>::constant(std::move(v)), Polynomial<S>::one()};
}
template <class S>
RationalFunction<S> rf_poly(Polynomial<S> p) {
  return {std::move(p), Polynomial<S>::one()};
}

template <class S>
RationalFunction<S> operator+(const RationalFunction<S>& a, const RationalFunction<S>& b) {
  return {a.num * b.den + b.num * a.den, a.den * b.den};
}
template <class S>
RationalFunction<S> operator-(const RationalFunction<S>& a, const RationalFunction<S>& b) {
  return {a.num * b.den - b.num * a.den, a.den * b.den};
}
template <class S>
RationalFunction<S> operator-(const RationalFunction<S>& a) {
  return {Polynomial<S>() - a.num, a.den};
}
template <class S>
RationalFunction<S> operator*(const RationalFunction<S>& a, const RationalFunction<S>& b) {
  return {a.num * b.num, a.den * b.den};
}
template <class S>
RationalFunction<S> operator/(const RationalFunction<S>& a, const RationalFunction<S>& b) {
  if (b.num.is_zero()) throw std::logic_error("division by the zero rational function");
  return {a.num * b.den, a.den * b.num};
}

// --- exact-field helpers -------------------------------------------------

// Remainder of a / b over a field, for the Euclidean gcd.
inline Polynomial<ExactComplex> poly_mod(Polynomial<ExactComplex> a,
                                         const Polynomial<ExactComplex>& b) {
  ExactComplex lead = b.coeff(b.degree());
  while (!a.is_zero() && a.degree() >= b.degree()) {
    ExactComplex f = a.coeff(a.degree()) / lead;
    a = a - Polynomial<ExactComplex>::monomial(f, a.degree() - b.degree()) * b;
  }
  return a;
}

inline Polynomial<ExactComplex> poly_gcd(Polynomial<ExactComplex> a,
                                         Polynomial<ExactComplex> b) {
  while (!b.is_zero()) {
    Polynomial<ExactComplex> r = poly_mod(std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  // monic for canonical output
  ExactComplex inv = ExactComplex(1) / a.coeff(a.degree());
  return a.scaled(inv);
}

// Field division, top-down long division; remainder must come out zero.
// Unlike divide_exact this tolerates divisors with zero constant term.
inline Polynomial<ExactComplex> divide_exact_field(const Polynomial<ExactComplex>& num,
                                                   const Polynomial<ExactComplex>& den) {
  if (den.is_zero()) throw std::logic_error("polynomial division by zero");
  if (num.is_zero()) return {};
  int qlen = num.degree() - den.degree() + 1;
  if (qlen <= 0) throw std::logic_error("inexact polynomial division (degree underflow)");
  std::vector<ExactComplex> q(static_cast<size_t>(qlen), ExactComplex(0));
  Polynomial<ExactComplex> rem = num;
  ExactComplex lead = den.coeff(den.degree());
  while (!rem.is_zero() && rem.degree() >= den.degree()) {
    int shift = rem.degree() - den.degree();
    ExactComplex f = rem.coeff(rem.degree()) / lead;
    q[shift] = f;
    rem = rem - Polynomial<ExactComplex>::monomial(f, shift) * den;
  }
  if (!rem.is_zero()) throw std::logic_error("inexact polynomial division (nonzero remainder)");
  return Polynomial<ExactComplex>(std::move(q));
}

// Cancel common polynomial factors; exact mode only. Keeps den(0) = 1.
inline RationalFunction<ExactComplex> reduced(RationalFunction<ExactComplex> f) {
  if (f.num.is_zero()) return {Polynomial<ExactComplex>{}, Polynomial<ExactComplex>::one()};
  Polynomial<ExactComplex> g = poly_gcd(f.num, f.den);
  if (g.degree() > 0) {
    f.num = divide_exact_field(f.num, g);
    f.den = divide_exact_field(f.den, g);
  }
  f.normalize();
  return f;
}

}  // namespace sqw
