#pragma once

// Exact scalars: Rational (GMP-backed) and Gaussian rationals a + b i.

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include <Eigen/Core>

namespace flagj {

class Rational {
 public:
  Rational() = default;
  template <std::integral I>
  Rational(I value) : value_(static_cast<long>(value)) {}  // NOLINT: implicit by design of a number type
  Rational(long num, long den);
  explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

  /// Parses "p", "p/q" (optionally signed). Throws InputError on malformed text or q == 0.
  static Rational parse(std::string_view text);

  std::string str() const;

  const mpq_class& raw() const { return value_; }
  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  long to_long() const;  // requires is_integer() and a fitting value

  Rational abs() const { return Rational(mpq_class(::abs(value_))); }
  Rational inverse() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Element of Q(i).
class Gaussian {
 public:
  Gaussian() = default;
  template <std::integral I>
  Gaussian(I value) : re_(value) {}  // NOLINT
  Gaussian(Rational re) : re_(std::move(re)) {}  // NOLINT
  Gaussian(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Gaussian i() { return {Rational(0), Rational(1)}; }

  /// Accepts "p/q", "r/si", "p/q+r/si", "p/q+-r/si", "p/q-r/si", "i", "-i".
  static Gaussian parse(std::string_view text);
  /// Canonical text: "re" when purely real, otherwise "re+imi" (im may carry its own sign).
  std::string str() const;

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  Gaussian conj() const { return {re_, -im_}; }

  Gaussian& operator+=(const Gaussian& o);
  Gaussian& operator-=(const Gaussian& o);
  Gaussian& operator*=(const Gaussian& o);
  Gaussian& operator/=(const Gaussian& o);

  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
  Gaussian operator-() const { return {-re_, -im_}; }

  friend bool operator==(const Gaussian& a, const Gaussian& b) = default;

 private:
  Rational re_;
  Rational im_;
};

std::ostream& operator<<(std::ostream& os, const Gaussian& g);

}  // namespace flagj

namespace Eigen {

template <>
struct NumTraits<flagj::Rational> {
  using Real = flagj::Rational;
  using NonInteger = flagj::Rational;
  using Literal = flagj::Rational;
  using Nested = flagj::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 16
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

template <>
struct NumTraits<flagj::Gaussian> {
  using Real = flagj::Gaussian;
  using NonInteger = flagj::Gaussian;
  using Literal = flagj::Gaussian;
  using Nested = flagj::Gaussian;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 16,
    MulCost = 64
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen
