#pragma once

#include "einfib/polynomial.hpp"

#include <vector>

namespace einfib {

/// Polynomial in y whose coefficients are polynomials in x; index = power of y.
class Bivariate {
 public:
  Bivariate() = default;
  explicit Bivariate(std::vector<Polynomial> y_coefficients);
  /// Sum of c * x^i * y^j over the given terms.
  struct Term {
    Rational coefficient;
    unsigned x_power;
    unsigned y_power;
  };
  static Bivariate from_terms(const std::vector<Term>& terms);

  int degree_y() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Polynomial& y_coefficient(std::size_t j) const;
  /// Same polynomial with the roles of x and y exchanged.
  Bivariate swapped() const;
  Rational operator()(const Rational& x, const Rational& y) const;

 private:
  std::vector<Polynomial> coeffs_;
};

/// Determinant over Q[x] by fraction-free Bareiss elimination.
Polynomial bareiss_determinant(std::vector<std::vector<Polynomial>> matrix);

/// Res_y(p, q) as a polynomial in x, via the Sylvester matrix.
Polynomial resultant(const Bivariate& p, const Bivariate& q);

}  // namespace einfib
