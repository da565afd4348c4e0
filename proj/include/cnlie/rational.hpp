#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace cnlie {

// Exact rational scalar backed by GMP. Everything in this library is computed
// over Gaussian rationals; there is no floating point anywhere.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Parses "p/q" or "p" in base 10; result reduced, denominator positive.
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::domain_error("empty rational literal");
  Rational q;
  if (q.set_str(text, 10) != 0) throw std::domain_error("bad rational literal: " + text);
  if (q.get_den() == 0) throw std::domain_error("rational with zero denominator: " + text);
  q.canonicalize();
  return q;
}

// Normal form is always "p/q", lowest terms, q >= 1; zero prints as "0/1".
inline std::string rational_to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Exact complex number a + b*i with rational a, b.
struct GaussianRational {
  Rational re{0};
  Rational im{0};

  GaussianRational() = default;
  GaussianRational(long v) : re(v) {}  // NOLINT: implicit by design, scalars promote
  explicit GaussianRational(Rational r) : re(std::move(r)) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational imaginary_unit() { return {Rational(0), Rational(1)}; }

  // (2i)^m computed exactly through the i^4 cycle; m >= 0.
  static GaussianRational two_i_pow(unsigned m) {
    mpz_class mag;
    mpz_ui_pow_ui(mag.get_mpz_t(), 2, m);
    GaussianRational out;
    switch (m % 4) {
      case 0: out.re = Rational(mag); break;
      case 1: out.im = Rational(mag); break;
      case 2: out.re = Rational(-mag); break;
      default: out.im = Rational(-mag); break;
    }
    return out;
  }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }

  GaussianRational operator-() const { return {Rational(-re), Rational(-im)}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r(re * o.re - im * o.im);
    Rational i(re * o.im + im * o.re);
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    Rational norm(o.re * o.re + o.im * o.im);
    if (sgn(norm) == 0) throw std::domain_error("division by zero Gaussian rational");
    Rational r((re * o.re + im * o.im) / norm);
    Rational i((im * o.re - re * o.im) / norm);
    re = std::move(r);
    im = std::move(i);
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

// "re+im*i" in rational normal form; used in messages, not in the JSON schema.
inline std::string to_string(const GaussianRational& z) {
  return rational_to_string(z.re) + "+" + rational_to_string(z.im) + "*i";
}

}  // namespace cnlie
