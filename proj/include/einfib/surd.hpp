#pragma once

#include "einfib/rational.hpp"

#include <compare>
#include <string>

namespace einfib {

/// Element r + c*sqrt(m) of a real quadratic field, m a square-free integer >= 2.
/// A rational value has c = 0 and m = 1.
class QuadraticSurd {
 public:
  QuadraticSurd() : rational_(0), coeff_(0), radicand_(1) {}
  QuadraticSurd(const Rational& value) : rational_(value), coeff_(0), radicand_(1) {}  // NOLINT
  QuadraticSurd(int value) : QuadraticSurd(Rational(value)) {}                          // NOLINT
  QuadraticSurd(const Rational& rational, const Rational& coeff, const Integer& radicand);

  /// (a + s*sqrt(d)) / c with d >= 0 rational and s in {-1, 0, 1}.
  static QuadraticSurd from_parts(const Rational& a, int s, const Rational& d, const Rational& c);
  static QuadraticSurd sqrt(const Rational& d);

  const Rational& rational_part() const { return rational_; }
  const Rational& coefficient() const { return coeff_; }
  const Integer& radicand() const { return radicand_; }

  bool is_rational() const { return coeff_ == 0; }
  int sign() const;
  QuadraticSurd conjugate() const { return {rational_, -coeff_, radicand_}; }
  /// value * conjugate, always rational.
  Rational norm() const { return rational_ * rational_ - coeff_ * coeff_ * Rational(radicand_); }

  /// Radicand under one root: value = a + s*sqrt(d) with d = c^2 m.
  int root_sign() const { return sgn(coeff_); }
  Rational root_radicand() const { return coeff_ * coeff_ * Rational(radicand_); }

  /// Rational bounds lo <= value <= hi with hi - lo < width.
  std::pair<Rational, Rational> enclose(const Rational& width) const;
  std::string to_decimal(int digits) const;
  /// Display form such as "(6 + sqrt(11))/5".
  std::string to_string() const;

  QuadraticSurd operator-() const { return {-rational_, -coeff_, radicand_}; }
  QuadraticSurd& operator+=(const QuadraticSurd& rhs);
  QuadraticSurd& operator-=(const QuadraticSurd& rhs);
  QuadraticSurd& operator*=(const QuadraticSurd& rhs);
  QuadraticSurd& operator/=(const QuadraticSurd& rhs);

  friend QuadraticSurd operator+(QuadraticSurd a, const QuadraticSurd& b) { return a += b; }
  friend QuadraticSurd operator-(QuadraticSurd a, const QuadraticSurd& b) { return a -= b; }
  friend QuadraticSurd operator*(QuadraticSurd a, const QuadraticSurd& b) { return a *= b; }
  friend QuadraticSurd operator/(QuadraticSurd a, const QuadraticSurd& b) { return a /= b; }

  friend bool operator==(const QuadraticSurd& a, const QuadraticSurd& b) {
    return a.rational_ == b.rational_ && a.coeff_ == b.coeff_ && a.radicand_ == b.radicand_;
  }
  friend std::strong_ordering operator<=>(const QuadraticSurd& a, const QuadraticSurd& b);

 private:
  void check_field(const QuadraticSurd& other) const;
  void normalize();

  Rational rational_;
  Rational coeff_;
  Integer radicand_;
};

}  // namespace einfib
