#pragma once

#include "einfib/polynomial.hpp"
#include "einfib/surd.hpp"

#include <compare>
#include <string>
#include <vector>

namespace einfib {

/// A real root of a square-free polynomial, held as the unique root in (lo, hi].
/// When lo == hi the root is exactly that rational.
class IsolatedRoot {
 public:
  IsolatedRoot(Polynomial poly, Rational lo, Rational hi);
  static IsolatedRoot from_rational(const Rational& value);
  /// Real quadratic surd as a root of its minimal polynomial.
  static IsolatedRoot from_surd(const QuadraticSurd& value);

  const Polynomial& poly() const { return poly_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  bool is_exact() const { return lo_ == hi_; }

  /// Bisects until hi - lo < width.
  void refine(const Rational& width);
  /// Rounded (half away from zero) fixed-point decimal.
  std::string to_decimal(int digits) const;
  /// Sign of q at this root, decided exactly.
  int sign_of(const Polynomial& q) const;
  int sign() const { return sign_of(Polynomial(Rational(1)) * Polynomial::x()); }
  /// The root of p(x / c), i.e. c times this value; c != 0.
  IsolatedRoot scaled(const Rational& c) const;

  friend std::strong_ordering compare(const IsolatedRoot& a, const IsolatedRoot& b);
  friend bool operator==(const IsolatedRoot& a, const IsolatedRoot& b) {
    return compare(a, b) == std::strong_ordering::equal;
  }

 private:
  void normalize_exact();
  int count_in(const Rational& lo, const Rational& hi) const;

  Polynomial poly_;
  Rational lo_;
  Rational hi_;
  std::vector<Polynomial> chain_;
};

/// All distinct real roots in ascending order.
std::vector<IsolatedRoot> isolate_real_roots(const Polynomial& p);

/// Rational interval with exact endpoints.
struct Interval {
  Rational lo;
  Rational hi;

  Interval(const Rational& v) : lo(v), hi(v) {}  // NOLINT
  Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {}
  bool contains_zero() const { return lo <= 0 && 0 <= hi; }
  Rational width() const { return hi - lo; }

  friend Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
  friend Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
  friend Interval operator*(const Interval& a, const Interval& b);
};

inline Interval enclosure(const IsolatedRoot& r) { return {r.lo(), r.hi()}; }

}  // namespace einfib
