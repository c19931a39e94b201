#include "einfib/resultant.hpp"

#include <stdexcept>

namespace einfib {

Bivariate::Bivariate(std::vector<Polynomial> y_coefficients) : coeffs_(std::move(y_coefficients)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Bivariate Bivariate::from_terms(const std::vector<Term>& terms) {
  std::vector<Polynomial> c;
  for (const auto& t : terms) {
    if (c.size() <= t.y_power) c.resize(t.y_power + 1);
    c[t.y_power] += Polynomial::monomial(t.coefficient, t.x_power);
  }
  return Bivariate(std::move(c));
}

const Polynomial& Bivariate::y_coefficient(std::size_t j) const {
  static const Polynomial zero;
  return j < coeffs_.size() ? coeffs_[j] : zero;
}

Bivariate Bivariate::swapped() const {
  std::vector<Term> terms;
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    for (std::size_t i = 0; i < coeffs_[j].coefficients().size(); ++i)
      if (coeffs_[j].coefficient(i) != 0)
        terms.push_back({coeffs_[j].coefficient(i), static_cast<unsigned>(j), static_cast<unsigned>(i)});
  return from_terms(terms);
}

Rational Bivariate::operator()(const Rational& x, const Rational& y) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * y + (*it)(x);
  return acc;
}

Polynomial bareiss_determinant(std::vector<std::vector<Polynomial>> m) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial(Rational(1));
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  Polynomial previous(Rational(1));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k].is_zero()) ++swap;
      if (swap == n) return Polynomial();
      std::swap(m[k], m[swap]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_quotient(m[k][k] * m[i][j] - m[i][k] * m[k][j], previous);
      m[i][k] = Polynomial();
    }
    previous = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

Polynomial resultant(const Bivariate& p, const Bivariate& q) {
  const int m = p.degree_y();
  const int n = q.degree_y();
  if (m < 0 || n < 0) throw std::invalid_argument("resultant of a zero polynomial");
  if (m == 0 && n == 0) return Polynomial(Rational(1));
  const auto size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<Polynomial>> s(size, std::vector<Polynomial>(size));
  // rows 0..n-1 hold shifted copies of p, rows n..n+m-1 copies of q, highest power first
  for (int r = 0; r < n; ++r)
    for (int j = 0; j <= m; ++j)
      s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + j)] = p.y_coefficient(static_cast<std::size_t>(m - j));
  for (int r = 0; r < m; ++r)
    for (int j = 0; j <= n; ++j)
      s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + j)] =
          q.y_coefficient(static_cast<std::size_t>(n - j));
  return bareiss_determinant(std::move(s));
}

}  // namespace einfib
