#include "flagj/rational.hpp"

#include <cctype>
#include <ostream>

#include "flagj/errors.hpp"

namespace flagj {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  if (!is_integer_literal(s)) throw InputError("malformed rational '" + std::string(whole) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw InputError("rational with zero denominator");
  value_ = mpq_class(num, 1) / mpq_class(den, 1);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  mpz_class num;
  mpz_class den = 1;
  if (slash == std::string_view::npos) {
    num = parse_integer(s, text);
  } else {
    num = parse_integer(s.substr(0, slash), text);
    den = parse_integer(s.substr(slash + 1), text);
    if (den == 0) throw InputError("rational '" + std::string(text) + "' has zero denominator");
  }
  mpq_class q(num, den);
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::str() const { return value_.get_str(10); }

long Rational::to_long() const {
  if (!is_integer() || !value_.get_num().fits_slong_p()) {
    throw InternalError("rational " + str() + " is not a machine integer");
  }
  return value_.get_num().get_si();
}

Rational Rational::inverse() const {
  if (is_zero()) throw InternalError("inverse of zero");
  return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InternalError("division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Gaussian& Gaussian::operator+=(const Gaussian& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Gaussian& Gaussian::operator-=(const Gaussian& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Gaussian& Gaussian::operator*=(const Gaussian& o) {
  if (im_.is_zero() && o.im_.is_zero()) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Gaussian& Gaussian::operator/=(const Gaussian& o) {
  const Rational norm = o.re_ * o.re_ + o.im_ * o.im_;
  if (norm.is_zero()) throw InternalError("division by zero");
  *this *= o.conj();
  re_ /= norm;
  im_ /= norm;
  return *this;
}

Gaussian Gaussian::parse(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw InputError("empty gaussian rational");
  if (s.back() != 'i') return Gaussian(Rational::parse(s));

  s.remove_suffix(1);
  // Split at the last sign that is not a leading sign of a component.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != '+' && s[k - 1] != '-') {
      split = k;
      break;
    }
  }
  std::string_view re_text;
  std::string_view im_text = s;
  if (split != std::string_view::npos) {
    re_text = s.substr(0, split);
    im_text = s.substr(split);
    if (im_text.front() == '+') im_text.remove_prefix(1);
  }
  Rational im;
  if (im_text.empty() || im_text == "+") {
    im = 1;
  } else if (im_text == "-") {
    im = -1;
  } else {
    im = Rational::parse(im_text);
  }
  return {re_text.empty() ? Rational(0) : Rational::parse(re_text), im};
}

std::string Gaussian::str() const {
  if (im_.is_zero()) return re_.str();
  if (im_.sign() < 0) return re_.str() + "-" + (-im_).str() + "i";
  return re_.str() + "+" + im_.str() + "i";
}

std::ostream& operator<<(std::ostream& os, const Gaussian& g) { return os << g.str(); }

}  // namespace flagj
