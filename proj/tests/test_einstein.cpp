#include "einfib/casimir.hpp"
#include "einfib/catalog.hpp"
#include "einfib/einstein.hpp"

#include <gtest/gtest.h>

namespace einfib {
namespace {

QuadraticSurd surd(long a, int s, long d, long c) { return QuadraticSurd::from_parts(a, s, d, c); }

std::vector<std::string> column(const SolveReport& rep, std::size_t a, int digits = 4) {
  std::vector<std::string> out;
  for (const auto& m : rep.metrics) out.push_back(m.values.at(a).to_decimal(digits));
  return out;
}

bool proportional(const Polynomial& a, const Polynomial& b) { return a.monic() == b.monic(); }

CasimirReport report_of(const std::string& id, const Params& params) {
  return casimir_report(instantiate(find_triple(id), params));
}

TEST(SolveTypeI, G2Row) {
  SolveReport rep = solve_type_I(Rational(1, 2), Rational(1, 8));
  EXPECT_EQ(rep.discriminant, Rational(1, 4));
  ASSERT_EQ(rep.metrics.size(), 2u);
  EXPECT_EQ(rep.metrics[0].values[0], MetricValue(Rational(1, 2)));
  EXPECT_EQ(rep.metrics[1].values[0], MetricValue(Rational(3, 2)));
}

TEST(SolveTypeI, F4Row) {
  SolveReport rep = solve_type_I(Rational(7, 9), Rational(1, 9));
  EXPECT_EQ(rep.discriminant, Rational(25, 81));
  ASSERT_EQ(rep.metrics.size(), 2u);
  EXPECT_EQ(rep.metrics[0].values[0], MetricValue(Rational(2, 7)));
  EXPECT_EQ(rep.metrics[1].values[0], MetricValue(Rational(1)));
}

TEST(SolveTypeI, E8NegativeDiscriminant) {
  SolveReport rep = solve_type_I(Rational(3, 5), Rational(1, 4));
  EXPECT_EQ(rep.discriminant, Rational(-2, 25));
  EXPECT_EQ(rep.verdict, Verdict::NotExists);
  EXPECT_EQ(rep.reason, Reason::NegativeDiscriminant);
  EXPECT_TRUE(rep.metrics.empty());
}

TEST(SolveTypeI, GammaOutOfRangeRejected) {
  EXPECT_THROW(solve_type_I(0, Rational(1, 8)), std::invalid_argument);
  EXPECT_THROW(solve_type_I(1, Rational(1, 8)), std::invalid_argument);
}

TEST(SolveBinormalII, So4lOverUlUl) {
  for (int l = 2; l <= 5; ++l) {
    CasimirReport c = report_of("cpdn7", {{"n", 2 * l}, {"p", l}});
    ASSERT_EQ(c.gamma[0], fraction(l - 1, 2 * l - 1));
    SolveReport rep = solve_binormal_II(c.gamma[0], c.gamma[1], c.b_set(0)[0], c.b_set(1)[0]);
    EXPECT_EQ(rep.discriminant, Rational(1, 2 * l - 1));
    ASSERT_EQ(rep.metrics.size(), 2u);
    EXPECT_EQ(rep.metrics[0].values[0], MetricValue(surd(2 * l - 1, -1, 2 * l - 1, 2 * (l - 1))));
    EXPECT_EQ(rep.metrics[1].values[0], MetricValue(surd(2 * l - 1, 1, 2 * l - 1, 2 * (l - 1))));
    for (const auto& m : rep.metrics) EXPECT_TRUE(m.is_binormal);
  }
  SolveReport l2 = solve_binormal_II(Rational(1, 3), Rational(1, 3), Rational(1, 12), Rational(1, 12));
  EXPECT_EQ(l2.metrics[0].values[0], MetricValue(surd(3, -1, 3, 2)));
  EXPECT_EQ(l2.metrics[1].values[0], MetricValue(surd(3, 1, 3, 2)));
}

TEST(SolveBinormalII, SpNegativeDiscriminant) {
  for (int p = 1; p <= 10; ++p) {
    CasimirReport c = report_of("cpcn7", {{"n", 2 * p}, {"p", p}});
    ASSERT_EQ(c.gamma[0], fraction(p + 1, 2 * p + 1));
    SolveReport rep = solve_binormal_II(c.gamma[0], c.gamma[1], c.b_set(0)[0], c.b_set(1)[0]);
    EXPECT_EQ(rep.discriminant, Rational(-1, 2 * p + 1)) << "p = " << p;
    EXPECT_EQ(rep.verdict, Verdict::NotExists);
  }
}

TEST(SolveBinormalII, DifferentGammas) {
  SolveReport rep = solve_binormal_II(Rational(1, 2), Rational(1, 6), Rational(1, 8), Rational(1, 6));
  EXPECT_EQ(rep.verdict, Verdict::NotExists);
  EXPECT_EQ(rep.reason, Reason::GammaMismatch);
}

TEST(SolveFiberEinstein, SuNUniqueMetric) {
  for (int l = 1; l <= 4; ++l)
    for (int s = 1; s <= 4; ++s) {
      Rational g1 = fraction(l, l + s);
      SolveReport rep = solve_fiber_einstein(g1, 1 - g1, g1 / 4, (1 - g1) / 4);
      EXPECT_EQ(rep.discriminant, Rational(0));
      ASSERT_EQ(rep.metrics.size(), 1u);
      EXPECT_EQ(rep.metrics[0].values[0], MetricValue(fraction(l + s, 2 * l)));
      EXPECT_EQ(rep.metrics[0].values[1], MetricValue(fraction(l + s, 2 * s)));
      EXPECT_TRUE(rep.metrics[0].fiber_einstein);
      EXPECT_EQ(rep.metrics[0].is_binormal, l == s);
    }
}

TEST(SolveFiberEinstein, UnrelatedGammas) {
  SolveReport rep = solve_fiber_einstein(Rational(1, 3), Rational(1, 5), Rational(1, 12), Rational(1, 12));
  EXPECT_EQ(rep.verdict, Verdict::NotExists);
  EXPECT_EQ(rep.reason, Reason::GammaMismatch);
}

TEST(SolveFiberEinstein, EqualGammasAreBinormal) {
  SolveReport rep = solve_fiber_einstein(Rational(1, 2), Rational(1, 2), Rational(1, 8), Rational(1, 8));
  ASSERT_EQ(rep.metrics.size(), 1u);
  EXPECT_EQ(rep.metrics[0].values[0], MetricValue(Rational(1)));
  EXPECT_TRUE(rep.metrics[0].is_binormal);
}

TEST(SolveEqualGammaNonbinormal, So8OverU2U2) {
  SolveReport rep = solve_equal_gamma_nonbinormal(Rational(1, 3), Rational(1, 12), Rational(1, 12));
  EXPECT_EQ(rep.discriminant, Rational(11, 54));
  ASSERT_EQ(rep.metrics.size(), 2u);
  EXPECT_EQ(rep.metrics[0].values[0], MetricValue(surd(6, -1, 11, 5)));
  EXPECT_EQ(rep.metrics[1].values[0], MetricValue(surd(6, 1, 11, 5)));
  for (const auto& m : rep.metrics) {
    EXPECT_EQ(m.values[0].surd() * m.values[1].surd(), QuadraticSurd(1));
    EXPECT_FALSE(m.is_binormal);
  }
}

TEST(SolveEqualGammaNonbinormal, SpFamilyHasNegativeD) {
  for (int p = 1; p <= 10; ++p) {
    Rational g = fraction(p + 1, 2 * p + 1);
    SolveReport rep = solve_equal_gamma_nonbinormal(g, g / 4, g / 4);
    EXPECT_EQ(rep.discriminant, (-g * g * g + 4 * g * g - 6 * g + 2) / 2);
    EXPECT_LT(*rep.discriminant, 0);
    EXPECT_EQ(rep.verdict, Verdict::NotExists);
  }
}

TEST(SolveEqualGammaNonbinormal, So28OverU7U7) {
  CasimirReport c = report_of("cpdn7", {{"n", 14}, {"p", 7}});
  ASSERT_EQ(c.gamma[0], Rational(6, 13));
  SolveReport rep = solve_equal_gamma_nonbinormal(c.gamma[0], c.b_set(0)[0], c.b_set(1)[0]);
  EXPECT_LT(*rep.discriminant, 0);
  EXPECT_EQ(rep.verdict, Verdict::NotExists);
}

TEST(SolveComplementaryGamma, SuNNegativeD) {
  for (int l = 1; l <= 4; ++l)
    for (int s = 1; s <= 4; ++s) {
      Rational g1 = fraction(l, l + s);
      SolveReport rep = solve_complementary_gamma(g1, g1 / 4, (1 - g1) / 4);
      EXPECT_EQ(rep.discriminant, -g1 * (1 - g1) / 2);
      EXPECT_EQ(rep.verdict, Verdict::NotExists);
    }
}

TEST(SolveComplementaryGamma, SymmetricToy) {
  SolveReport rep = solve_complementary_gamma(Rational(1, 2), 0, 0);
  EXPECT_EQ(rep.discriminant, Rational(1, 2));
  for (const auto& m : rep.metrics) EXPECT_EQ(m.values[0].surd() * m.values[1].surd(), QuadraticSurd(Rational(1, 2)));
}

TEST(SolveGeneralS2, G2) {
  SolveReport rep = solve_general_s2(Rational(1, 2), Rational(1, 6), Rational(1, 8), Rational(1, 6));
  ASSERT_TRUE(rep.quartic.has_value());
  EXPECT_TRUE(proportional(*rep.quartic, Polynomial::from_integers({513, -1224, 1088, -432, 63})))
      << rep.quartic->to_string();
  EXPECT_EQ(column(rep, 0), (std::vector<std::string>{"0.5526", "0.7432"}));
  EXPECT_EQ(column(rep, 1), (std::vector<std::string>{"3.6958", "4.7185"}));
}

TEST(SolveGeneralS2, E8NoAdmissibleRoot) {
  SolveReport rep = solve_general_s2(Rational(3, 5), Rational(1, 15), Rational(1, 4), Rational(1, 60));
  ASSERT_TRUE(rep.quartic.has_value());
  EXPECT_TRUE(proportional(*rep.quartic, Polynomial::from_integers({464, -1395, 1198, -195, 9})))
      << rep.quartic->to_string();
  EXPECT_EQ(rep.verdict, Verdict::NotExists);
  EXPECT_TRUE(rep.metrics.empty());
}

TEST(SolveGeneralS2, E6) {
  SolveReport rep = full_solve(find_triple("cpe65"), {{"p", 1}});
  ASSERT_TRUE(rep.quartic.has_value());
  EXPECT_TRUE(proportional(*rep.quartic, Polynomial::from_integers({77, -474, 993, -828, 234})))
      << rep.quartic->to_string();
  EXPECT_EQ(column(rep, 0), (std::vector<std::string>{"0.3702", "0.5345", "1.0499", "1.5838"}));
  EXPECT_EQ(column(rep, 1), (std::vector<std::string>{"4.6215", "0.6682", "0.6338", "5.2195"}));
}

TEST(SolveGeneralS2, DiscardsNonPositiveX2WithReason) {
  SolveReport rep = solve_general_s2(Rational(3, 5), Rational(1, 15), Rational(1, 4), Rational(1, 60));
  for (const auto& d : rep.discarded) EXPECT_FALSE(d.empty());
}

TEST(VerifyMetric, G2TypeISolution) {
  ResidualReport r = verify_metric({Rational(1, 2)}, {Rational(1, 8)}, Rational(1, 2), {MetricValue(Rational(3, 2))});
  EXPECT_TRUE(r.exact);
  EXPECT_TRUE(r.zero);
  EXPECT_EQ(r.residuals, (std::vector<std::string>{"0"}));
}

TEST(VerifyMetric, So8NonbinormalSurds) {
  QuadraticSurd x1 = surd(6, 1, 11, 5);
  QuadraticSurd x2 = QuadraticSurd(1) / x1;
  ResidualReport r = verify_metric({Rational(1, 3), Rational(1, 3)}, {Rational(1, 12), Rational(1, 12)},
                                   Rational(1, 2), {MetricValue(x1), MetricValue(x2)});
  EXPECT_TRUE(r.exact);
  EXPECT_TRUE(r.zero);
  EXPECT_EQ(r.residuals, (std::vector<std::string>{"0", "0"}));
}

TEST(VerifyMetric, NonSolution) {
  ResidualReport r = verify_metric({Rational(1, 2)}, {Rational(1, 8)}, Rational(1, 2), {MetricValue(Rational(1))});
  EXPECT_TRUE(r.exact);
  EXPECT_FALSE(r.zero);
  EXPECT_EQ(r.residuals, (std::vector<std::string>{"-1/4"}));
}

TEST(VerifyMetric, NonPositiveRejected) {
  EXPECT_THROW(verify_metric({Rational(1, 2)}, {Rational(1, 8)}, Rational(1, 2), {MetricValue(Rational(-1))}),
               std::invalid_argument);
}

TEST(FullSolve, G2TypeI) {
  SolveReport rep = full_solve(find_triple("cpg21"), {});
  ASSERT_EQ(rep.metrics.size(), 2u);
  EXPECT_EQ(rep.metrics[0].values[0], MetricValue(Rational(1, 2)));
  EXPECT_EQ(rep.metrics[1].values[0], MetricValue(Rational(3, 2)));
}

TEST(FullSolve, F4ScalarityFailure) {
  SolveReport rep = full_solve(find_triple("cpf45"), {});
  EXPECT_EQ(rep.verdict, Verdict::NotExists);
  EXPECT_EQ(rep.reason, Reason::ScalarityFailure);
}

TEST(FullSolve, So8OverU2U2IsUnionOfBranches) {
  SolveReport rep = full_solve(find_triple("cpdn7"), {{"n", 4}, {"p", 2}});
  ASSERT_EQ(rep.metrics.size(), 4u);
  std::vector<EinsteinMetric> expected;
  for (int s : {-1, 1}) {
    QuadraticSurd b = surd(3, s, 3, 2);
    QuadraticSurd x = surd(6, s, 11, 5);
    expected.push_back({{MetricValue(b), MetricValue(b)}});
    expected.push_back({{MetricValue(x), MetricValue(QuadraticSurd(1) / x)}});
  }
  normalize_metrics(expected);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(rep.metrics[i].values[0], expected[i].values[0]);
    EXPECT_EQ(rep.metrics[i].values[1], expected[i].values[1]);
    EXPECT_EQ(rep.metrics[i].is_binormal, expected[i].values[0] == expected[i].values[1]);
  }
}

TEST(EinsteinProperty, BranchSolutionsAppearInGeneralSolver) {
  for (const auto& spec : catalog()) {
    if (spec.fiber != FiberType::II) continue;
    for (const auto& params : spec.sweep(8)) {
      CasimirReport c = casimir_report(instantiate(spec, params));
      if (scalarity_test(c).verdict != Scalarity::ScalarEach) continue;
      Rational g1 = c.gamma[0], g2 = c.gamma[1], b1 = c.b_set(0)[0], b2 = c.b_set(1)[0];
      SolveReport general = solve_general_s2(g1, g2, b1, b2, c.r);
      std::vector<EinsteinMetric> branch;
      auto add = [&](const SolveReport& r) { branch.insert(branch.end(), r.metrics.begin(), r.metrics.end()); };
      if (g1 == g2) {
        add(solve_binormal_II(g1, g2, b1, b2, c.r));
        add(solve_equal_gamma_nonbinormal(g1, b1, b2, c.r));
      }
      if (g2 == 1 - g1) {
        add(solve_fiber_einstein(g1, g2, b1, b2, c.r));
        add(solve_complementary_gamma(g1, b1, b2, c.r));
      }
      for (const auto& m : branch) {
        bool found = false;
        for (const auto& n : general.metrics) found = found || (m.values[0] == n.values[0] && m.values[1] == n.values[1]);
        EXPECT_TRUE(found) << spec.id << " " << format_params(params) << " X1 = " << m.values[0].to_string();
      }
    }
  }
}

TEST(EinsteinProperty, HomothetyInvariance) {
  // scaling the whole metric by t divides every term of the equation by t; X is unchanged
  Rational g(7, 9), b(1, 9), r(1, 2);
  for (const auto& m : solve_type_I(g, b, r).metrics) {
    QuadraticSurd x = m.values[0].surd();
    for (int t = 2; t <= 5; ++t) {
      QuadraticSurd lhs = QuadraticSurd(2 * g / t) * x * x - QuadraticSurd(4 * r / t) * x + QuadraticSurd((1 - g + 2 * b) / t);
      EXPECT_EQ(lhs, QuadraticSurd(0));
    }
  }
}

}  // namespace
}  // namespace einfib
