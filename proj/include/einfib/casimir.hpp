#pragma once

#include "einfib/subalgebra.hpp"

#include <optional>
#include <vector>

namespace einfib {

/// d = q - p - 2pq for the alpha-string through phi; 2 when alpha = +-phi.
int string_weight(const RootSystem& g, std::size_t alpha, std::size_t phi);

/// Eigenvalue of C_{p_a} on the root space of phi, summing over one root of each +- pair.
Rational b_eigenvalue(const RootSystem& g, const RootSet& pa_positive, std::size_t phi);
/// gamma_a = h*(k_a) / (delta_a h*(g)).
Rational gamma_panyushev(const SimpleType& g, const SimpleType& ka, const Rational& delta);
/// Eigenvalue of C_k on the root space of phi in k, from the root sum.
Rational gamma_rootsum(const RootSystem& g, const RootSet& k_roots, std::size_t phi);
/// Eigenvalue of C_k on the root space of phi outside k.
Rational c_k_on_n(const RootSystem& g, const RootSet& k_roots, std::size_t phi);
/// Squared long-root length of g over that of the factor, both measured in g.
Rational long_root_ratio(const RootSystem& g, const RootSet& factor_roots);

enum class Scalarity { ScalarEach, JointlyScalarOnly, Fails };
const char* to_string(Scalarity verdict);

struct CasimirReport {
  std::vector<Rational> gamma;
  std::vector<Rational> gamma_oracle;  // root-sum value, equal to gamma when consistent
  bool gamma_constant = true;          // root-sum value constant on each p_a
  std::vector<Rational> delta;
  /// b[a][j]: eigenvalue of C_{p_a} on component j; nullopt if it varies inside the component.
  std::vector<std::vector<std::optional<Rational>>> b;
  Rational c_kn;
  bool c_kn_constant = true;
  std::vector<Rational> c_na;
  std::vector<Rational> c_la;
  Rational r;

  std::size_t s() const { return gamma.size(); }
  bool b_constant_on_components() const;
  /// Distinct values of b[a] across components, ascending.
  std::vector<Rational> b_set(std::size_t a) const;
};

CasimirReport casimir_report(const TripleDecomposition& triple);

struct ScalarityResult {
  Scalarity verdict;
  /// lambda_2 / lambda_1 making lambda_1 b_1 + lambda_2 b_2 constant, for the joint case.
  std::optional<Rational> ratio;
};

ScalarityResult scalarity_test(const CasimirReport& report);

}  // namespace einfib
