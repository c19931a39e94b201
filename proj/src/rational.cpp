#include "einfib/rational.hpp"

#include <cctype>

namespace einfib {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) throw std::invalid_argument("malformed integer: " + std::string(s));
  std::string body(s[0] == '+' ? s.substr(1) : s);
  return Integer(body, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational fraction(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }
std::string to_string(const Integer& value) { return value.get_str(); }

int sign(const Rational& value) { return sgn(value); }

Integer floor(const Rational& value) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

Integer round_half_away(const Rational& value) {
  Rational half(1, 2);
  if (sgn(value) >= 0) return floor(value + half);
  return -floor(-value + half);
}

Rational power(const Rational& base, unsigned exponent) {
  Rational out = 1;
  for (unsigned i = 0; i < exponent; ++i) out *= base;
  return out;
}

std::string to_decimal(const Rational& value, int digits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Integer scaled = round_half_away(value * Rational(scale));
  bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string s = scaled.get_str();
  if (digits > 0) {
    if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  return negative ? "-" + s : s;
}

std::pair<Integer, Integer> split_square(const Integer& n) {
  if (n <= 0) throw std::domain_error("split_square expects a positive integer");
  Integer rest = n;
  Integer root = 1;
  Integer f = 2;
  while (f * f <= rest) {
    while (mpz_divisible_p(rest.get_mpz_t(), Integer(f * f).get_mpz_t())) {
      rest /= f * f;
      root *= f;
    }
    f += (f == 2) ? 1 : 2;
  }
  return {root, rest};
}

bool is_perfect_square(const Rational& value) {
  if (sgn(value) < 0) return false;
  return mpz_perfect_square_p(value.get_num_mpz_t()) && mpz_perfect_square_p(value.get_den_mpz_t());
}

Rational exact_sqrt(const Rational& value) {
  if (!is_perfect_square(value)) throw std::domain_error("not a perfect square: " + value.get_str());
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), value.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), value.get_den_mpz_t());
  return Rational(n, d);
}

}  // namespace einfib
