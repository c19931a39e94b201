#include "einfib/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace einfib {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial::Polynomial(const Rational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

Polynomial Polynomial::monomial(const Rational& coefficient, std::size_t degree) {
  std::vector<Rational> c(degree + 1, Rational(0));
  c[degree] = coefficient;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::from_integers(std::initializer_list<long> lowest_first) {
  std::vector<Rational> c;
  for (long v : lowest_first) c.emplace_back(v);
  return Polynomial(std::move(c));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

Rational Polynomial::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational Polynomial::operator()(const Rational& at) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

QuadraticSurd Polynomial::operator()(const QuadraticSurd& at) const {
  QuadraticSurd acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + QuadraticSurd(*it);
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * Rational(static_cast<long>(i)));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial out = *this;
  Rational lc = leading();
  for (auto& c : out.coeffs_) c /= lc;
  return out;
}

Polynomial Polynomial::primitive() const {
  if (is_zero()) return *this;
  Integer den_lcm = 1;
  for (const auto& c : coeffs_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> ints;
  Integer content = 0;
  for (const auto& c : coeffs_) {
    Integer v = Integer(c * Rational(den_lcm));
    ints.push_back(v);
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
  }
  if (ints.back() < 0) content = -content;
  std::vector<Rational> out;
  for (const auto& v : ints) out.emplace_back(Integer(v / content));
  return Polynomial(std::move(out));
}

Polynomial Polynomial::scale_argument(const Rational& c) const {
  std::vector<Rational> out = coeffs_;
  Rational p = 1;
  for (auto& v : out) {
    v *= p;
    p *= c;
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::strip_zero_roots(int* removed) const {
  std::size_t k = 0;
  while (k < coeffs_.size() && coeffs_[k] == 0) ++k;
  if (removed) *removed = static_cast<int>(k);
  return Polynomial(std::vector<Rational>(coeffs_.begin() + static_cast<long>(k), coeffs_.end()));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) { return *this += -rhs; }

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    Rational c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    bool neg = c < 0;
    Rational a = abs(c);
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    bool unit = a == 1 && i > 0;
    if (!unit) out += a.get_str();
    if (i > 0) {
      if (!unit) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

DivisionResult divide(const Polynomial& numerator, const Polynomial& denominator) {
  if (denominator.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = numerator.coefficients();
  int dd = denominator.degree();
  Rational lc = denominator.leading();
  std::vector<Rational> quot(rem.size() >= static_cast<std::size_t>(dd) + 1 ? rem.size() - static_cast<std::size_t>(dd) : 0,
                             Rational(0));
  for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
    Rational factor = rem[static_cast<std::size_t>(i)] / lc;
    if (factor == 0) continue;
    quot[static_cast<std::size_t>(i - dd)] = factor;
    for (int j = 0; j <= dd; ++j)
      rem[static_cast<std::size_t>(i - dd + j)] -= factor * denominator.coefficient(static_cast<std::size_t>(j));
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial exact_quotient(const Polynomial& numerator, const Polynomial& denominator) {
  auto [q, r] = divide(numerator, denominator);
  if (!r.is_zero()) throw std::logic_error("polynomial division is not exact");
  return q;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = divide(x, y).remainder;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

Polynomial square_free_part(const Polynomial& p) {
  if (p.degree() <= 0) return p;
  return exact_quotient(p, gcd(p, p.derivative())).monic();
}

std::vector<Polynomial> sturm_sequence(const Polynomial& p) {
  std::vector<Polynomial> chain{p};
  if (p.degree() <= 0) return chain;
  chain.push_back(p.derivative());
  while (chain.back().degree() > 0) {
    Polynomial r = divide(chain[chain.size() - 2], chain.back()).remainder;
    if (r.is_zero()) break;
    // positive rescaling keeps the sign pattern
    Rational lc = abs(r.leading());
    std::vector<Rational> c = (-r).coefficients();
    for (auto& v : c) v /= lc;
    chain.emplace_back(std::move(c));
  }
  return chain;
}

namespace {

int variations(const std::vector<Polynomial>& chain, const Rational& at) {
  int count = 0;
  int last = 0;
  for (const auto& q : chain) {
    int s = sgn(q(at));
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace

int count_roots(const std::vector<Polynomial>& chain, const Rational& lo, const Rational& hi) {
  return variations(chain, lo) - variations(chain, hi);
}

Rational root_bound(const Polynomial& p) {
  Rational lc = abs(p.leading());
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = abs(p.coefficient(static_cast<std::size_t>(i))) / lc;
    if (r > m) m = r;
  }
  return m + 1;
}

}  // namespace einfib
