#pragma once

#include "einfib/algebraic.hpp"
#include "einfib/casimir.hpp"
#include "einfib/catalog.hpp"
#include "einfib/resultant.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace einfib {

/// A positive metric parameter X_a: an exact quadratic surd or an isolated real root.
class MetricValue {
 public:
  MetricValue(QuadraticSurd value) : value_(std::move(value)) {}  // NOLINT
  MetricValue(IsolatedRoot value) : value_(std::move(value)) {}   // NOLINT
  MetricValue(const Rational& value) : value_(QuadraticSurd(value)) {}  // NOLINT

  bool is_surd() const { return std::holds_alternative<QuadraticSurd>(value_); }
  const QuadraticSurd& surd() const { return std::get<QuadraticSurd>(value_); }
  const IsolatedRoot& root() const { return std::get<IsolatedRoot>(value_); }
  IsolatedRoot as_root() const;

  int sign() const;
  MetricValue scaled(const Rational& c) const;
  /// Rational enclosure narrower than width.
  Interval enclosure(const Rational& width) const;
  std::string to_decimal(int digits) const;
  std::string to_string() const;

  friend std::strong_ordering compare(const MetricValue& a, const MetricValue& b);
  friend bool operator==(const MetricValue& a, const MetricValue& b) {
    return compare(a, b) == std::strong_ordering::equal;
  }

 private:
  std::variant<QuadraticSurd, IsolatedRoot> value_;
};

enum class MetricMode { Binormal, FiberEinstein, General };
const char* to_string(MetricMode mode);

/// Metric (1/X_1) B_{p_1} + ... + (1/X_s) B_{p_s} + B_n, up to homothety.
struct EinsteinMetric {
  std::vector<MetricValue> values;
  bool is_binormal = false;
  bool fiber_einstein = false;

  MetricMode mode() const;
};

enum class Verdict { Exists, NotExists, Unsupported };
const char* to_string(Verdict verdict);

enum class Reason { None, ScalarityFailure, NegativeDiscriminant, NoPositiveRoots, GammaMismatch, JointScalarOnly, Degenerate };
const char* to_string(Reason reason);

struct SolveReport {
  std::string triple_id;
  Params params;
  std::string solver;
  std::vector<Rational> gamma;
  std::vector<Rational> b;
  Rational r{1, 2};
  std::optional<Rational> discriminant;
  /// Primitive eliminant in X_1 with the zero root removed.
  std::optional<Polynomial> quartic;
  /// Primitive eliminant in X_2, kept for comparison with printed quartics.
  std::optional<Polynomial> x2_eliminant;
  std::string back_substitution;
  std::vector<EinsteinMetric> metrics;
  /// Real roots of the eliminant rejected because X_1 <= 0 or X_2 <= 0.
  std::vector<std::string> discarded;
  Verdict verdict = Verdict::NotExists;
  Reason reason = Reason::None;
  std::string detail;
};

/// s = 1: 2 gamma X^2 - 4 r X + (1 - gamma + 2 b) = 0.
SolveReport solve_type_I(const Rational& gamma, const Rational& b, const Rational& r = Rational(1, 2));
/// Binormal metrics for s = 2; none unless gamma_1 = gamma_2.
SolveReport solve_binormal_II(const Rational& g1, const Rational& g2, const Rational& b1, const Rational& b2,
                              const Rational& r = Rational(1, 2));
/// Metrics whose restriction to the fiber is Einstein.
SolveReport solve_fiber_einstein(const Rational& g1, const Rational& g2, const Rational& b1, const Rational& b2,
                                 const Rational& r = Rational(1, 2));
/// gamma_2 = gamma_1, metrics with X_1 != X_2.
SolveReport solve_equal_gamma_nonbinormal(const Rational& g1, const Rational& b1, const Rational& b2,
                                          const Rational& r = Rational(1, 2));
/// gamma_2 = 1 - gamma_1, metrics with X_2 = 1 / (2 X_1).
SolveReport solve_complementary_gamma(const Rational& g1, const Rational& b1, const Rational& b2,
                                      const Rational& r = Rational(1, 2));
/// Full s = 2 system by elimination of X_2.
SolveReport solve_general_s2(const Rational& g1, const Rational& g2, const Rational& b1, const Rational& b2,
                             const Rational& r = Rational(1, 2));

/// The two s = 2 equations as polynomials in (X_1, X_2).
std::pair<Bivariate, Bivariate> einstein_system(const Rational& g1, const Rational& g2, const Rational& b1,
                                                const Rational& b2, const Rational& r);

struct ResidualReport {
  bool exact = false;
  bool zero = false;
  /// Exact residuals, or enclosing intervals rendered as "[lo, hi]".
  std::vector<std::string> residuals;
  std::vector<Interval> enclosures;
};

/// Substitutes X into the Einstein equations; isolated roots are refined below width.
ResidualReport verify_metric(const std::vector<Rational>& gamma, const std::vector<Rational>& b, const Rational& r,
                             const std::vector<MetricValue>& x, const Rational& width = Rational(1, Integer("100000000000000000000")));

/// Binormal and fiber-Einstein flags from X_a gamma_a = X_b gamma_b.
void tag_metric(EinsteinMetric& metric, const std::vector<Rational>& gamma);

/// Dispatch on s after the scalarity test.
SolveReport full_solve(const TripleDecomposition& triple);
SolveReport full_solve(const TripleSpec& spec, const Params& params);

/// Sorts by X_1 then X_2 and removes duplicates.
void normalize_metrics(std::vector<EinsteinMetric>& metrics);

}  // namespace einfib
