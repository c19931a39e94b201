#include "einfib/surd.hpp"

#include <stdexcept>

namespace einfib {

QuadraticSurd::QuadraticSurd(const Rational& rational, const Rational& coeff, const Integer& radicand)
    : rational_(rational), coeff_(coeff), radicand_(radicand) {
  normalize();
}

void QuadraticSurd::normalize() {
  if (radicand_ < 0) throw std::domain_error("negative radicand");
  if (coeff_ == 0 || radicand_ == 0) {
    if (radicand_ == 0) coeff_ = 0;
    radicand_ = 1;
    coeff_ = 0;
    return;
  }
  auto [root, free] = split_square(radicand_);
  coeff_ *= Rational(root);
  radicand_ = free;
  if (radicand_ == 1) {
    rational_ += coeff_;
    coeff_ = 0;
  }
}

QuadraticSurd QuadraticSurd::sqrt(const Rational& d) {
  if (sgn(d) < 0) throw std::domain_error("square root of a negative rational");
  if (d == 0) return QuadraticSurd();
  // sqrt(p/q) = sqrt(p*q)/q
  Integer pq = d.get_num() * d.get_den();
  return {Rational(0), Rational(1, 1) / Rational(d.get_den()), pq};
}

QuadraticSurd QuadraticSurd::from_parts(const Rational& a, int s, const Rational& d, const Rational& c) {
  if (c == 0) throw std::domain_error("zero denominator in surd");
  if (s < -1 || s > 1) throw std::invalid_argument("surd sign must be -1, 0 or 1");
  QuadraticSurd root = s == 0 ? QuadraticSurd() : QuadraticSurd::sqrt(d);
  if (s < 0) root = -root;
  return (QuadraticSurd(a) + root) / QuadraticSurd(c);
}

void QuadraticSurd::check_field(const QuadraticSurd& other) const {
  if (!is_rational() && !other.is_rational() && radicand_ != other.radicand_)
    throw std::domain_error("surds from different quadratic fields");
}

QuadraticSurd& QuadraticSurd::operator+=(const QuadraticSurd& rhs) {
  check_field(rhs);
  if (is_rational()) radicand_ = rhs.radicand_;
  rational_ += rhs.rational_;
  coeff_ += rhs.coeff_;
  normalize();
  return *this;
}

QuadraticSurd& QuadraticSurd::operator-=(const QuadraticSurd& rhs) { return *this += -rhs; }

QuadraticSurd& QuadraticSurd::operator*=(const QuadraticSurd& rhs) {
  check_field(rhs);
  Integer m = is_rational() ? rhs.radicand_ : radicand_;
  Rational r = rational_ * rhs.rational_ + coeff_ * rhs.coeff_ * Rational(m);
  Rational c = rational_ * rhs.coeff_ + coeff_ * rhs.rational_;
  rational_ = r;
  coeff_ = c;
  radicand_ = m;
  normalize();
  return *this;
}

QuadraticSurd& QuadraticSurd::operator/=(const QuadraticSurd& rhs) {
  check_field(rhs);
  Rational n = rhs.norm();
  if (n == 0) throw std::domain_error("division by zero surd");
  *this *= rhs.conjugate();
  rational_ /= n;
  coeff_ /= n;
  normalize();
  return *this;
}

int QuadraticSurd::sign() const {
  int sr = sgn(rational_);
  int sc = sgn(coeff_);
  if (sc == 0) return sr;
  if (sr == 0 || sr == sc) return sc;
  // opposite signs: compare r^2 with c^2 m
  Rational lhs = rational_ * rational_;
  Rational rhs = coeff_ * coeff_ * Rational(radicand_);
  if (lhs == rhs) return 0;
  return lhs > rhs ? sr : sc;
}

std::strong_ordering operator<=>(const QuadraticSurd& a, const QuadraticSurd& b) {
  int s = (a - b).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::pair<Rational, Rational> QuadraticSurd::enclose(const Rational& width) const {
  if (is_rational()) return {rational_, rational_};
  // bracket sqrt(m) by bisection on rationals until |coeff| * gap < width
  Rational lo = 1;
  Rational hi = Rational(radicand_);
  Rational m(radicand_);
  Rational abs_c = abs(coeff_);
  while (abs_c * (hi - lo) >= width) {
    Rational mid = (lo + hi) / 2;
    if (mid * mid <= m) lo = mid; else hi = mid;
  }
  if (sgn(coeff_) > 0) return {rational_ + coeff_ * lo, rational_ + coeff_ * hi};
  return {rational_ + coeff_ * hi, rational_ + coeff_ * lo};
}

std::string QuadraticSurd::to_decimal(int digits) const {
  if (is_rational()) return einfib::to_decimal(rational_, digits);
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits + 2));
  Rational width(1, scale);
  for (;;) {
    auto [lo, hi] = enclose(width);
    std::string a = einfib::to_decimal(lo, digits);
    if (a == einfib::to_decimal(hi, digits)) return a;
    width /= 1024;
  }
}

std::string QuadraticSurd::to_string() const {
  if (is_rational()) return rational_.get_str();
  Integer den;
  mpz_lcm(den.get_mpz_t(), rational_.get_den_mpz_t(), coeff_.get_den_mpz_t());
  Integer a = Integer(rational_ * Rational(den));
  Integer c = Integer(coeff_ * Rational(den));
  std::string root = "sqrt(" + radicand_.get_str() + ")";
  Integer abs_c = abs(c);
  std::string term = abs_c == 1 ? root : abs_c.get_str() + "*" + root;
  std::string body;
  if (a == 0)
    body = (c < 0 ? "-" : "") + term;
  else
    body = a.get_str() + (c < 0 ? " - " : " + ") + term;
  if (den == 1) return body;
  if (a == 0 && c > 0) return body + "/" + den.get_str();
  return "(" + body + ")/" + den.get_str();
}

}  // namespace einfib
