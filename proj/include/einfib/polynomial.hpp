#pragma once

#include "einfib/rational.hpp"
#include "einfib/surd.hpp"

#include <string>
#include <vector>

namespace einfib {

/// Univariate polynomial over Q, coefficients stored lowest degree first.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(const Rational& constant);  // NOLINT
  static Polynomial monomial(const Rational& coefficient, std::size_t degree);
  static Polynomial x() { return monomial(1, 1); }
  static Polynomial from_integers(std::initializer_list<long> lowest_first);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coefficient(std::size_t power) const;
  Rational leading() const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational operator()(const Rational& at) const;
  QuadraticSurd operator()(const QuadraticSurd& at) const;

  Polynomial derivative() const;
  Polynomial monic() const;
  /// Integer coefficients, content 1, positive leading coefficient.
  Polynomial primitive() const;
  /// p(c * x).
  Polynomial scale_argument(const Rational& c) const;
  /// Removes factors x^k; returns k through `removed` when given.
  Polynomial strip_zero_roots(int* removed = nullptr) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial operator-() const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(const std::string& var = "z") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct DivisionResult {
  Polynomial quotient;
  Polynomial remainder;
};

DivisionResult divide(const Polynomial& numerator, const Polynomial& denominator);
/// Quotient of a division known to be exact; throws otherwise.
Polynomial exact_quotient(const Polynomial& numerator, const Polynomial& denominator);
/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
Polynomial square_free_part(const Polynomial& p);

/// Sturm chain p, p', -rem(p, p'), ...
std::vector<Polynomial> sturm_sequence(const Polynomial& p);
/// Number of distinct real roots in (lo, hi] for a chain built by sturm_sequence.
int count_roots(const std::vector<Polynomial>& chain, const Rational& lo, const Rational& hi);
/// Bound B with every real root in (-B, B).
Rational root_bound(const Polynomial& p);

}  // namespace einfib
