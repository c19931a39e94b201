#include "einfib/einstein.hpp"

#include <algorithm>
#include <stdexcept>

namespace einfib {

IsolatedRoot MetricValue::as_root() const { return is_surd() ? IsolatedRoot::from_surd(surd()) : root(); }

int MetricValue::sign() const { return is_surd() ? surd().sign() : root().sign(); }

MetricValue MetricValue::scaled(const Rational& c) const {
  if (is_surd()) return MetricValue(surd() * QuadraticSurd(c));
  if (c == 0) return MetricValue(Rational(0));
  return MetricValue(root().scaled(c));
}

Interval MetricValue::enclosure(const Rational& width) const {
  if (is_surd()) {
    auto [lo, hi] = surd().enclose(width);
    return {lo, hi};
  }
  IsolatedRoot copy = root();
  copy.refine(width);
  return {copy.lo(), copy.hi()};
}

std::string MetricValue::to_decimal(int digits) const {
  return is_surd() ? surd().to_decimal(digits) : root().to_decimal(digits);
}

std::string MetricValue::to_string() const {
  if (is_surd()) return surd().to_string();
  const IsolatedRoot& x = root();
  return "root of " + x.poly().primitive().to_string("x") + " in (" + einfib::to_string(x.lo()) + ", " +
         einfib::to_string(x.hi()) + "]";
}

std::strong_ordering compare(const MetricValue& a, const MetricValue& b) {
  if (a.is_surd() && b.is_surd()) {
    const QuadraticSurd& x = a.surd();
    const QuadraticSurd& y = b.surd();
    if (x.is_rational() || y.is_rational() || x.radicand() == y.radicand()) return x <=> y;
  }
  return compare(a.as_root(), b.as_root());
}

const char* to_string(MetricMode mode) {
  switch (mode) {
    case MetricMode::Binormal: return "binormal";
    case MetricMode::FiberEinstein: return "fiber-einstein";
    case MetricMode::General: return "general";
  }
  return "?";
}

MetricMode EinsteinMetric::mode() const {
  if (is_binormal) return MetricMode::Binormal;
  if (fiber_einstein) return MetricMode::FiberEinstein;
  return MetricMode::General;
}

const char* to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Exists: return "exists";
    case Verdict::NotExists: return "not-exists";
    case Verdict::Unsupported: return "unsupported";
  }
  return "?";
}

const char* to_string(Reason reason) {
  switch (reason) {
    case Reason::None: return "none";
    case Reason::ScalarityFailure: return "scalarity failure";
    case Reason::NegativeDiscriminant: return "negative discriminant";
    case Reason::NoPositiveRoots: return "no positive roots";
    case Reason::GammaMismatch: return "gamma condition not met";
    case Reason::JointScalarOnly: return "only jointly scalar";
    case Reason::Degenerate: return "degenerate elimination";
  }
  return "?";
}

namespace {

/// Positive values of (num +- sqrt(disc)) / den, ascending, duplicates merged.
std::vector<QuadraticSurd> quadratic_branch(const Rational& num, const Rational& disc, const Rational& den) {
  std::vector<QuadraticSurd> out;
  if (disc < 0) return out;
  for (int s : {-1, 1}) {
    QuadraticSurd x = QuadraticSurd::from_parts(num, disc == 0 ? 0 : s, disc, den);
    if (x.sign() > 0 && std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
    if (disc == 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Real roots of a polynomial of degree 1 or 2, exactly.
std::vector<QuadraticSurd> exact_roots(const Polynomial& p) {
  if (p.degree() == 1) return {QuadraticSurd(-p.coefficient(0) / p.coefficient(1))};
  if (p.degree() != 2) throw std::logic_error("exact roots need degree 1 or 2");
  Rational a = p.coefficient(2), b = p.coefficient(1), c = p.coefficient(0);
  Rational disc = b * b - 4 * a * c;
  if (disc < 0) return {};
  std::vector<QuadraticSurd> out;
  for (int s : {-1, 1}) {
    QuadraticSurd x = QuadraticSurd::from_parts(-b, disc == 0 ? 0 : s, disc, 2 * a);
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  }
  return out;
}

/// Quadratic with roots (num +- sqrt(disc)) / den.
Polynomial quadratic_with_roots(const Rational& num, const Rational& disc, const Rational& den) {
  return Polynomial({num * num - disc, -2 * num * den, den * den});
}

std::vector<Integer> divisors(Integer n) {
  n = abs(n);
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

/// Rational roots by the rational root test; skipped when the coefficients are too large to factor by trial division.
std::vector<Rational> rational_roots(const Polynomial& p) {
  std::vector<Rational> out;
  if (p.degree() < 1) return out;
  Polynomial q = p.primitive();
  int zeros = 0;
  q = q.strip_zero_roots(&zeros);
  if (zeros > 0) out.emplace_back(0);
  if (q.degree() < 1) return out;
  Integer a0(q.coefficient(0)), an(q.leading());
  const Integer limit("1000000000000");
  if (abs(a0) > limit || abs(an) > limit) return out;
  for (const Integer& num : divisors(a0))
    for (const Integer& den : divisors(an))
      for (int s : {-1, 1}) {
        Rational x(Integer(s * num), den);
        x.canonicalize();
        if (q(x) == 0 && std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
      }
  return out;
}

Interval evaluate(const Polynomial& p, const Interval& x) {
  Interval acc(Rational(0));
  for (int i = p.degree(); i >= 0; --i) acc = acc * x + Interval(p.coefficient(static_cast<std::size_t>(i)));
  return acc;
}

Interval divide(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw std::domain_error("interval division by an interval containing zero");
  Interval inv(Rational(1) / b.hi, Rational(1) / b.lo);
  return a * inv;
}

template <class T>
std::vector<T> residuals_of(const std::vector<Rational>& g, const std::vector<Rational>& b, const Rational& r,
                            const std::vector<T>& x) {
  auto k = [](const Rational& v) { return T(v); };
  if (x.size() == 1) {
    const T& X = x[0];
    return {k(2 * g[0]) * X * X - k(4 * r) * X + k(1 - g[0] + 2 * b[0])};
  }
  const T& X1 = x[0];
  const T& X2 = x[1];
  T e1 = k(2 * g[0]) * X1 * X1 * X2 + k(1 - g[0]) * X2 - k(2 * g[1]) * X1 * X2 * X2 - k(1 - g[1]) * X1;
  T e2 = k(2 * b[0]) * X2 + k(2 * b[1]) * X1 - k(4 * r) * X1 * X2 + k(2 * g[0]) * X1 * X1 * X2 + k(1 - g[0]) * X2;
  return {e1, e2};
}

SolveReport base_report(const std::string& solver, std::vector<Rational> gamma, std::vector<Rational> b,
                        const Rational& r) {
  SolveReport rep;
  rep.solver = solver;
  rep.gamma = std::move(gamma);
  rep.b = std::move(b);
  rep.r = r;
  return rep;
}

void finish(SolveReport& rep) {
  for (auto& m : rep.metrics) tag_metric(m, rep.gamma);
  normalize_metrics(rep.metrics);
  if (!rep.metrics.empty()) {
    rep.verdict = Verdict::Exists;
    rep.reason = Reason::None;
  } else if (rep.verdict != Verdict::Unsupported) {
    rep.verdict = Verdict::NotExists;
    if (rep.reason == Reason::None) rep.reason = Reason::NoPositiveRoots;
  }
}

void require_gamma(const Rational& g) {
  if (g <= 0 || g >= 1) throw std::invalid_argument("gamma must lie strictly between 0 and 1, got " + to_string(g));
}

/// X_2 as an isolated root of the X_2-eliminant, matched to X_1 through X_2 = -2 b_2 X_1 / A(X_1).
IsolatedRoot back_substitute(const IsolatedRoot& x1, const Polynomial& a, const Rational& b2,
                             const Polynomial& eliminant) {
  Polynomial e = square_free_part(eliminant);
  auto chain = sturm_sequence(e);
  IsolatedRoot x = x1;
  Rational width = x.hi() - x.lo();
  if (width == 0) width = 1;
  for (;;) {
    Interval ix{x.lo(), x.hi()};
    Interval ia = evaluate(a, ix);
    if (!ia.contains_zero()) {
      Interval j = divide(Interval(-2 * b2) * ix, ia);
      bool at_lo = e(j.lo) == 0;
      int inside = count_roots(chain, j.lo, j.hi) + (at_lo ? 1 : 0);
      if (inside == 1) return at_lo ? IsolatedRoot(e, j.lo, j.lo) : IsolatedRoot(e, j.lo, j.hi);
      if (inside == 0) throw std::logic_error("back-substituted X2 is not a root of the X2 eliminant");
    }
    width /= 2;
    x.refine(width);
  }
}

}  // namespace

std::pair<Bivariate, Bivariate> einstein_system(const Rational& g1, const Rational& g2, const Rational& b1,
                                                const Rational& b2, const Rational& r) {
  using T = Bivariate::Term;
  Bivariate p = Bivariate::from_terms({T{2 * g1, 2, 1}, T{1 - g1, 0, 1}, T{-2 * g2, 1, 2}, T{-(1 - g2), 1, 0}});
  Bivariate q = Bivariate::from_terms(
      {T{2 * b1, 0, 1}, T{2 * b2, 1, 0}, T{-4 * r, 1, 1}, T{2 * g1, 2, 1}, T{1 - g1, 0, 1}});
  return {p, q};
}

SolveReport solve_type_I(const Rational& gamma, const Rational& b, const Rational& r) {
  require_gamma(gamma);
  SolveReport rep = base_report("type-I", {gamma}, {b}, r);
  Rational delta = 4 * r * r - 2 * gamma * (1 - gamma + 2 * b);
  rep.discriminant = delta;
  if (delta < 0) {
    rep.reason = Reason::NegativeDiscriminant;
    rep.detail = "discriminant " + to_string(delta) + " < 0";
  }
  for (const auto& x : quadratic_branch(2 * r, delta, 2 * gamma)) rep.metrics.push_back({{MetricValue(x)}});
  finish(rep);
  return rep;
}

SolveReport solve_binormal_II(const Rational& g1, const Rational& g2, const Rational& b1, const Rational& b2,
                              const Rational& r) {
  require_gamma(g1);
  require_gamma(g2);
  SolveReport rep = base_report("binormal", {g1, g2}, {b1, b2}, r);
  if (g1 != g2) {
    rep.reason = Reason::GammaMismatch;
    rep.detail = "binormal metrics need gamma_1 = gamma_2";
    finish(rep);
    return rep;
  }
  Rational delta = 4 * r * r - 2 * g1 * (1 - g1 + 2 * (b1 + b2));
  rep.discriminant = delta;
  if (delta < 0) {
    rep.reason = Reason::NegativeDiscriminant;
    rep.detail = "discriminant " + to_string(delta) + " < 0";
  }
  for (const auto& x : quadratic_branch(2 * r, delta, 2 * g1)) rep.metrics.push_back({{MetricValue(x), MetricValue(x)}});
  finish(rep);
  return rep;
}

SolveReport solve_fiber_einstein(const Rational& g1, const Rational& g2, const Rational& b1, const Rational& b2,
                                 const Rational& r) {
  require_gamma(g1);
  require_gamma(g2);
  if (g1 == g2) {
    SolveReport rep = solve_binormal_II(g1, g2, b1, b2, r);
    rep.solver = "fiber-einstein";
    return rep;
  }
  SolveReport rep = base_report("fiber-einstein", {g1, g2}, {b1, b2}, r);
  if (g2 != 1 - g1) {
    rep.reason = Reason::GammaMismatch;
    rep.detail = "fiber-Einstein metrics need gamma_2 = gamma_1 or gamma_2 = 1 - gamma_1";
    finish(rep);
    return rep;
  }
  Rational d = 4 * r * r - 4 * b1 * g1 - 4 * b2 * (1 - g1) - 2 * g1 * (1 - g1);
  rep.discriminant = d;
  if (d < 0) {
    rep.reason = Reason::NegativeDiscriminant;
    rep.detail = "D = " + to_string(d) + " < 0";
  }
  for (const auto& x1 : quadratic_branch(2 * r, d, 2 * g1)) {
    QuadraticSurd x2 = x1 * QuadraticSurd(g1 / (1 - g1));
    rep.metrics.push_back({{MetricValue(x1), MetricValue(x2)}});
  }
  finish(rep);
  return rep;
}

SolveReport solve_equal_gamma_nonbinormal(const Rational& g1, const Rational& b1, const Rational& b2,
                                          const Rational& r) {
  require_gamma(g1);
  SolveReport rep = base_report("equal-gamma", {g1, g1}, {b1, b2}, r);
  Rational d = 4 * r * r * (1 - g1) - 2 * g1 * (2 * b2 + 1 - g1) * (2 * b1 + 1 - g1);
  rep.discriminant = d;
  if (d < 0) {
    rep.reason = Reason::NegativeDiscriminant;
    rep.detail = "D = " + to_string(d) + " < 0";
  }
  for (const auto& x1 : quadratic_branch(2 * r * (1 - g1), (1 - g1) * d, 2 * g1 * (2 * b2 + 1 - g1))) {
    QuadraticSurd x2 = QuadraticSurd((1 - g1) / (2 * g1)) / x1;
    if (x2.sign() > 0) rep.metrics.push_back({{MetricValue(x1), MetricValue(x2)}});
  }
  finish(rep);
  return rep;
}

SolveReport solve_complementary_gamma(const Rational& g1, const Rational& b1, const Rational& b2, const Rational& r) {
  require_gamma(g1);
  SolveReport rep = base_report("complementary-gamma", {g1, 1 - g1}, {b1, b2}, r);
  Rational d = 4 * r * r - 2 * (2 * b2 + g1) * (2 * b1 + 1 - g1);
  rep.discriminant = d;
  if (d < 0) {
    rep.reason = Reason::NegativeDiscriminant;
    rep.detail = "D = " + to_string(d) + " < 0";
  }
  for (const auto& x1 : quadratic_branch(2 * r, d, 2 * (2 * b2 + g1))) {
    QuadraticSurd x2 = QuadraticSurd(Rational(1, 2)) / x1;
    rep.metrics.push_back({{MetricValue(x1), MetricValue(x2)}});
  }
  finish(rep);
  return rep;
}

SolveReport solve_general_s2(const Rational& g1, const Rational& g2, const Rational& b1, const Rational& b2,
                             const Rational& r) {
  require_gamma(g1);
  require_gamma(g2);
  SolveReport rep = base_report("general", {g1, g2}, {b1, b2}, r);
  auto [p, q] = einstein_system(g1, g2, b1, b2, r);
  Polynomial res1 = resultant(p, q);
  Polynomial res2 = resultant(p.swapped(), q.swapped());
  if (res1.is_zero() || res2.is_zero()) {
    rep.verdict = Verdict::Unsupported;
    rep.reason = Reason::Degenerate;
    rep.detail = "resultant vanishes identically";
    return rep;
  }
  Polynomial t = res1.strip_zero_roots().primitive();
  Polynomial t2 = res2.strip_zero_roots().primitive();
  rep.quartic = t;
  rep.x2_eliminant = t2;
  Polynomial a({2 * b1 + 1 - g1, -4 * r, 2 * g1});
  rep.back_substitution = "X2 = " + to_string(-2 * b2) + "*X1 / (" + a.to_string("X1") + ")";

  // split off the factors the closed-form branches predict, so their roots stay exact
  std::vector<Polynomial> known;
  if (g1 == g2) {
    known.push_back(quadratic_with_roots(2 * r, 4 * r * r - 2 * g1 * (1 - g1 + 2 * (b1 + b2)), 2 * g1));
    Rational d = 4 * r * r * (1 - g1) - 2 * g1 * (2 * b2 + 1 - g1) * (2 * b1 + 1 - g1);
    known.push_back(quadratic_with_roots(2 * r * (1 - g1), (1 - g1) * d, 2 * g1 * (2 * b2 + 1 - g1)));
  }
  if (g2 == 1 - g1) {
    known.push_back(quadratic_with_roots(2 * r, 4 * r * r - 4 * b1 * g1 - 4 * b2 * (1 - g1) - 2 * g1 * (1 - g1), 2 * g1));
    known.push_back(quadratic_with_roots(2 * r, 4 * r * r - 2 * (2 * b2 + g1) * (2 * b1 + 1 - g1), 2 * (2 * b2 + g1)));
  }
  Polynomial rest = square_free_part(t);
  std::vector<MetricValue> roots;
  auto take_exact = [&](const Polynomial& factor) {
    for (auto& x : exact_roots(factor)) roots.emplace_back(x);
    rest = exact_quotient(rest, factor);
  };
  for (const auto& k : known) {
    if (rest.degree() < 1) break;
    Polynomial common = gcd(rest, k);
    if (common.degree() >= 1) take_exact(common);
  }
  for (const auto& x : rational_roots(rest)) take_exact(Polynomial({-x, Rational(1)}));
  if (rest.degree() == 1 || rest.degree() == 2) {
    take_exact(rest);
  } else if (rest.degree() > 2) {
    for (auto& x : isolate_real_roots(rest)) roots.emplace_back(x);
  }

  for (const auto& x1 : roots) {
    if (x1.sign() <= 0) {
      rep.discarded.push_back("X1 = " + x1.to_decimal(6) + " is not positive");
      continue;
    }
    if (x1.is_surd()) {
      QuadraticSurd ax = QuadraticSurd(2 * g1) * x1.surd() * x1.surd() - QuadraticSurd(4 * r) * x1.surd() +
                         QuadraticSurd(2 * b1 + 1 - g1);
      if (ax.sign() == 0) {
        rep.discarded.push_back("X1 = " + x1.to_decimal(6) + " makes the back-substitution singular");
        continue;
      }
      QuadraticSurd x2 = QuadraticSurd(-2 * b2) * x1.surd() / ax;
      if (x2.sign() <= 0) {
        rep.discarded.push_back("X1 = " + x1.to_decimal(6) + " gives X2 = " + x2.to_decimal(6) + " <= 0");
        continue;
      }
      rep.metrics.push_back({{x1, MetricValue(x2)}});
    } else {
      if (x1.root().sign_of(a) == 0) {
        rep.discarded.push_back("X1 = " + x1.to_decimal(6) + " makes the back-substitution singular");
        continue;
      }
      IsolatedRoot x2 = back_substitute(x1.root(), a, b2, t2);
      if (x2.sign() <= 0) {
        rep.discarded.push_back("X1 = " + x1.to_decimal(6) + " gives X2 = " + x2.to_decimal(6) + " <= 0");
        continue;
      }
      rep.metrics.push_back({{x1, MetricValue(x2)}});
    }
  }
  if (rep.metrics.empty()) {
    rep.reason = Reason::NoPositiveRoots;
    rep.detail = "no real root of the eliminant gives X1 > 0 and X2 > 0";
  }
  finish(rep);
  return rep;
}

ResidualReport verify_metric(const std::vector<Rational>& gamma, const std::vector<Rational>& b, const Rational& r,
                             const std::vector<MetricValue>& x, const Rational& width) {
  if (x.empty() || x.size() > 2) throw std::invalid_argument("verify_metric handles s = 1 or s = 2");
  if (gamma.size() != x.size() || b.size() != x.size())
    throw std::invalid_argument("gamma, b and X must have the same length");
  for (const auto& v : x)
    if (v.sign() <= 0) throw std::invalid_argument("metric parameters must be positive, got " + v.to_string());

  ResidualReport out;
  bool all_surd = std::all_of(x.begin(), x.end(), [](const MetricValue& v) { return v.is_surd(); });
  if (all_surd) {
    std::vector<QuadraticSurd> s;
    for (const auto& v : x) s.push_back(v.surd());
    try {
      auto res = residuals_of<QuadraticSurd>(gamma, b, r, s);
      out.exact = true;
      out.zero = true;
      for (const auto& e : res) {
        out.residuals.push_back(e.to_string());
        out.zero = out.zero && e.sign() == 0;
      }
      return out;
    } catch (const std::domain_error&) {
      // values from different quadratic fields: fall back to intervals
    }
  }
  std::vector<Interval> iv;
  for (const auto& v : x) iv.push_back(v.enclosure(width));
  auto res = residuals_of<Interval>(gamma, b, r, iv);
  out.zero = true;
  for (const auto& e : res) {
    out.enclosures.push_back(e);
    out.residuals.push_back("[" + to_decimal(e.lo, 30) + ", " + to_decimal(e.hi, 30) + "]");
    out.zero = out.zero && e.contains_zero();
  }
  return out;
}

void tag_metric(EinsteinMetric& metric, const std::vector<Rational>& gamma) {
  if (metric.values.size() == 1) {
    metric.is_binormal = true;
    metric.fiber_einstein = true;
    return;
  }
  metric.is_binormal = metric.values[0] == metric.values[1];
  metric.fiber_einstein = metric.values[0].scaled(gamma[0]) == metric.values[1].scaled(gamma[1]);
}

void normalize_metrics(std::vector<EinsteinMetric>& metrics) {
  auto less = [](const EinsteinMetric& a, const EinsteinMetric& b) {
    for (std::size_t i = 0; i < std::min(a.values.size(), b.values.size()); ++i) {
      auto c = compare(a.values[i], b.values[i]);
      if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
    }
    return a.values.size() < b.values.size();
  };
  auto same = [](const EinsteinMetric& a, const EinsteinMetric& b) {
    if (a.values.size() != b.values.size()) return false;
    for (std::size_t i = 0; i < a.values.size(); ++i)
      if (!(a.values[i] == b.values[i])) return false;
    return true;
  };
  std::sort(metrics.begin(), metrics.end(), less);
  metrics.erase(std::unique(metrics.begin(), metrics.end(), same), metrics.end());
}

SolveReport full_solve(const TripleDecomposition& triple) {
  CasimirReport cas = casimir_report(triple);
  ScalarityResult sc = scalarity_test(cas);
  std::vector<Rational> b;
  SolveReport rep;
  if (sc.verdict == Scalarity::Fails) {
    rep = base_report("none", cas.gamma, {}, cas.r);
    rep.verdict = Verdict::NotExists;
    rep.reason = Reason::ScalarityFailure;
    std::string sets;
    for (std::size_t a = 0; a < cas.s(); ++a) {
      sets += a ? "; " : "";
      sets += "b" + std::to_string(a + 1) + " in {";
      auto vals = cas.b_set(a);
      for (std::size_t i = 0; i < vals.size(); ++i) sets += (i ? ", " : "") + to_string(vals[i]);
      sets += "}";
    }
    rep.detail = "C_p is not scalar on n: " + sets;
    return rep;
  }
  if (sc.verdict == Scalarity::JointlyScalarOnly) {
    rep = base_report("none", cas.gamma, {}, cas.r);
    rep.verdict = Verdict::Unsupported;
    rep.reason = Reason::JointScalarOnly;
    rep.detail = "only a combination of the C_{p_a} is scalar on n";
    return rep;
  }
  for (std::size_t a = 0; a < cas.s(); ++a) b.push_back(cas.b_set(a).front());
  if (cas.s() == 1) return solve_type_I(cas.gamma[0], b[0], cas.r);
  if (cas.s() == 2) return solve_general_s2(cas.gamma[0], cas.gamma[1], b[0], b[1], cas.r);
  rep = base_report("none", cas.gamma, b, cas.r);
  rep.verdict = Verdict::Unsupported;
  rep.detail = "fibers with more than two factors are not solved";
  return rep;
}

SolveReport full_solve(const TripleSpec& spec, const Params& params) {
  SolveReport rep = full_solve(instantiate(spec, params));
  rep.triple_id = spec.id;
  rep.params = params;
  return rep;
}

}  // namespace einfib
