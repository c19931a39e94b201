#include "einfib/algebraic.hpp"

#include <algorithm>
#include <stdexcept>

namespace einfib {

IsolatedRoot::IsolatedRoot(Polynomial poly, Rational lo, Rational hi)
    : poly_(square_free_part(poly).primitive()), lo_(std::move(lo)), hi_(std::move(hi)) {
  if (poly_.degree() < 1) throw std::invalid_argument("isolated root needs a non-constant polynomial");
  if (lo_ > hi_) throw std::invalid_argument("isolating interval is reversed");
  chain_ = sturm_sequence(poly_);
  if (lo_ == hi_) {
    if (poly_(lo_) != 0) throw std::invalid_argument("exact root is not a root");
  } else if (count_in(lo_, hi_) != 1) {
    throw std::invalid_argument("interval does not isolate a single root");
  }
  normalize_exact();
}

IsolatedRoot IsolatedRoot::from_rational(const Rational& value) {
  return {Polynomial({-value, Rational(1)}), value, value};
}

IsolatedRoot IsolatedRoot::from_surd(const QuadraticSurd& value) {
  if (value.is_rational()) return from_rational(value.rational_part());
  // x^2 - 2 a x + (a^2 - c^2 m)
  const Rational& a = value.rational_part();
  Polynomial minimal({value.norm(), -2 * a, Rational(1)});
  Rational width = 1;
  for (;;) {
    auto [lo, hi] = value.enclose(width);
    auto chain = sturm_sequence(minimal);
    Rational l = lo - width, h = hi;
    if (count_roots(chain, l, h) == 1) return {minimal, l, h};
    width /= 16;
  }
}

int IsolatedRoot::count_in(const Rational& lo, const Rational& hi) const { return count_roots(chain_, lo, hi); }

void IsolatedRoot::normalize_exact() {
  if (lo_ != hi_ && poly_(hi_) == 0) lo_ = hi_;
}

void IsolatedRoot::refine(const Rational& width) {
  while (!is_exact() && hi_ - lo_ >= width) {
    Rational mid = (lo_ + hi_) / 2;
    if (poly_(mid) == 0) {
      lo_ = hi_ = mid;
      return;
    }
    if (count_in(lo_, mid) == 1)
      hi_ = mid;
    else
      lo_ = mid;
  }
}

std::string IsolatedRoot::to_decimal(int digits) const {
  if (is_exact()) return einfib::to_decimal(lo_, digits);
  IsolatedRoot copy = *this;
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits + 2));
  Rational width(1, scale);
  for (;;) {
    copy.refine(width);
    std::string a = einfib::to_decimal(copy.lo_, digits);
    if (copy.is_exact() || a == einfib::to_decimal(copy.hi_, digits)) return a;
    width /= 1024;
  }
}

int IsolatedRoot::sign_of(const Polynomial& q) const {
  if (is_exact()) return sgn(q(lo_));
  Polynomial common = gcd(poly_, q);
  if (common.degree() > 0) {
    // q vanishes here iff the common factor has its root inside the interval
    auto chain = sturm_sequence(square_free_part(common));
    if (count_roots(chain, lo_, hi_) == 1) return 0;
  }
  IsolatedRoot copy = *this;
  Polynomial qs = square_free_part(q);
  if (qs.degree() <= 0) return sgn(q.leading());
  auto qchain = sturm_sequence(qs);
  Rational width = copy.hi_ - copy.lo_;
  while (!copy.is_exact() && count_roots(qchain, copy.lo_, copy.hi_) > 0) {
    width /= 2;
    copy.refine(width);
  }
  return sgn(q(copy.hi_));
}

IsolatedRoot IsolatedRoot::scaled(const Rational& c) const {
  if (c == 0) throw std::domain_error("scaling an algebraic number by zero");
  Polynomial p = poly_.scale_argument(Rational(1) / c);
  Rational a = lo_ * c, b = hi_ * c;
  if (c > 0) return {p, a, b};
  // (lo, hi] maps to [b, a); shift to a half-open interval with the same single root
  if (is_exact()) return {p, b, b};
  IsolatedRoot copy = *this;
  for (;;) {
    // make sure lo is not a root so the image is an open-closed interval
    if (copy.poly_(copy.lo_) != 0) return {p, copy.hi_ * c, copy.lo_ * c};
    copy.refine((copy.hi_ - copy.lo_) / 2);
    if (copy.is_exact()) return {p, copy.lo_ * c, copy.lo_ * c};
  }
}

std::strong_ordering compare(const IsolatedRoot& a, const IsolatedRoot& b) {
  if (a.is_exact() && b.is_exact()) {
    int c = cmp(a.lo_, b.lo_);
    return c == 0 ? std::strong_ordering::equal : (c < 0 ? std::strong_ordering::less : std::strong_ordering::greater);
  }
  // equal iff a common factor of both polynomials has a root in both enclosures
  Polynomial common = gcd(a.poly_, b.poly_);
  if (common.degree() > 0) {
    auto contains = [](const IsolatedRoot& r, const Rational& v) {
      return r.is_exact() ? r.lo_ == v : (r.lo_ < v && v <= r.hi_);
    };
    if (a.is_exact() || b.is_exact()) {
      const IsolatedRoot& point = a.is_exact() ? a : b;
      const IsolatedRoot& other = a.is_exact() ? b : a;
      if (common(point.lo_) == 0 && contains(other, point.lo_)) return std::strong_ordering::equal;
    } else {
      Rational lo = std::max(a.lo_, b.lo_);
      Rational hi = std::min(a.hi_, b.hi_);
      if (lo < hi && count_roots(sturm_sequence(square_free_part(common)), lo, hi) > 0)
        return std::strong_ordering::equal;
    }
  }
  IsolatedRoot x = a;
  IsolatedRoot y = b;
  for (;;) {
    if (x.hi_ < y.lo_ || (x.hi_ == y.lo_ && !y.is_exact())) return std::strong_ordering::less;
    if (y.hi_ < x.lo_ || (y.hi_ == x.lo_ && !x.is_exact())) return std::strong_ordering::greater;
    x.refine((x.hi_ - x.lo_) / 2);
    y.refine((y.hi_ - y.lo_) / 2);
  }
}

std::vector<IsolatedRoot> isolate_real_roots(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial has no isolated roots");
  std::vector<IsolatedRoot> out;
  if (p.degree() < 1) return out;
  Polynomial sf = square_free_part(p).primitive();
  auto chain = sturm_sequence(sf);
  Rational bound = root_bound(sf);
  std::vector<std::pair<Rational, Rational>> work{{-bound, bound}};
  std::vector<std::pair<Rational, Rational>> found;
  while (!work.empty()) {
    auto [lo, hi] = work.back();
    work.pop_back();
    int n = count_roots(chain, lo, hi);
    if (n == 0) continue;
    if (n == 1) {
      found.emplace_back(lo, hi);
      continue;
    }
    Rational mid = (lo + hi) / 2;
    work.emplace_back(lo, mid);
    work.emplace_back(mid, hi);
  }
  std::sort(found.begin(), found.end());
  for (auto& [lo, hi] : found) out.emplace_back(sf, lo, hi);
  return out;
}

Interval operator*(const Interval& a, const Interval& b) {
  Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

}  // namespace einfib
