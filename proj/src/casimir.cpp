#include "einfib/casimir.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace einfib {

int string_weight(const RootSystem& g, std::size_t alpha, std::size_t phi) {
  if (alpha == phi || g.negative(alpha) == phi) return 2;
  RootString s = g.root_string(alpha, phi);
  return s.q - s.p - 2 * s.p * s.q;
}

namespace {

Rational half_string_sum(const RootSystem& g, const RootSet& positive, std::size_t phi) {
  Rational total = 0;
  for (auto a : positive) {
    int d = string_weight(g, a, phi);
    if (d != 0) total += d * g.norm_sq(a);
  }
  return total / 2;
}

}  // namespace

Rational b_eigenvalue(const RootSystem& g, const RootSet& pa_positive, std::size_t phi) {
  for (auto a : pa_positive) {
    if (a == phi || g.negative(a) == phi) throw std::invalid_argument("phi lies in the vertical part");
  }
  return half_string_sum(g, pa_positive, phi);
}

Rational gamma_panyushev(const SimpleType& g, const SimpleType& ka, const Rational& delta) {
  if (delta <= 0) throw std::invalid_argument("delta must be positive");
  Rational out(dual_coxeter(ka), dual_coxeter(g));
  out.canonicalize();
  return out / delta;
}

Rational gamma_rootsum(const RootSystem& g, const RootSet& k_roots, std::size_t phi) {
  if (!contains(k_roots, phi)) throw std::invalid_argument("phi is not a root of k");
  return g.norm_sq(phi) + half_string_sum(g, positive_part(g, k_roots), phi);
}

Rational c_k_on_n(const RootSystem& g, const RootSet& k_roots, std::size_t phi) {
  if (contains(k_roots, phi)) throw std::invalid_argument("phi is a root of k");
  return g.norm_sq(phi) + half_string_sum(g, positive_part(g, k_roots), phi);
}

Rational long_root_ratio(const RootSystem& g, const RootSet& factor_roots) {
  long longest = 0;
  for (auto r : factor_roots) longest = std::max(longest, g.dot(r, r));
  if (longest == 0) throw std::invalid_argument("empty factor");
  Rational ratio(g.dot(g.highest_root(), g.highest_root()), longest);
  ratio.canonicalize();
  return ratio;
}

const char* to_string(Scalarity verdict) {
  switch (verdict) {
    case Scalarity::ScalarEach:
      return "scalar-each";
    case Scalarity::JointlyScalarOnly:
      return "jointly-scalar-only";
    case Scalarity::Fails:
      return "fails";
  }
  return "";
}

bool CasimirReport::b_constant_on_components() const {
  for (const auto& row : b) {
    for (const auto& v : row) {
      if (!v) return false;
    }
  }
  return true;
}

std::vector<Rational> CasimirReport::b_set(std::size_t a) const {
  std::vector<Rational> out;
  for (const auto& v : b.at(a)) {
    if (v && std::find(out.begin(), out.end(), *v) == out.end()) out.push_back(*v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

CasimirReport casimir_report(const TripleDecomposition& t) {
  const RootSystem& g = *t.g;
  CasimirReport rep;
  for (std::size_t a = 0; a < t.p_parts.size(); ++a) {
    const auto& factor = t.factors[a];
    Rational delta = long_root_ratio(g, factor.roots);
    rep.delta.push_back(delta);
    rep.gamma.push_back(gamma_panyushev(g.type(), factor.type, delta));
    Rational oracle = gamma_rootsum(g, t.k.roots, t.p_parts[a].front());
    for (auto phi : t.p_parts[a]) {
      if (gamma_rootsum(g, t.k.roots, phi) != oracle) rep.gamma_constant = false;
    }
    rep.gamma_oracle.push_back(oracle);

    RootSet positive = positive_part(g, t.p_parts[a]);
    std::vector<std::optional<Rational>> row;
    for (const auto& component : t.n_components) {
      std::optional<Rational> value = b_eigenvalue(g, positive, component.front());
      for (auto phi : component) {
        if (b_eigenvalue(g, positive, phi) != *value) {
          value.reset();
          break;
        }
      }
      row.push_back(value);
    }
    rep.b.push_back(std::move(row));
    rep.c_na.push_back(1 - rep.gamma.back());
    rep.c_la.push_back(rep.gamma.back() / 2);
  }
  rep.c_kn = c_k_on_n(g, t.k.roots, t.n_roots.front());
  for (auto phi : t.n_roots) {
    if (c_k_on_n(g, t.k.roots, phi) != rep.c_kn) rep.c_kn_constant = false;
  }
  rep.r = (Rational(1, 2) + rep.c_kn) / 2;
  return rep;
}

ScalarityResult scalarity_test(const CasimirReport& rep) {
  if (!rep.b_constant_on_components()) return {Scalarity::Fails, std::nullopt};
  bool each = true;
  for (std::size_t a = 0; a < rep.s(); ++a) each = each && rep.b_set(a).size() <= 1;
  if (each) return {Scalarity::ScalarEach, std::nullopt};
  if (rep.s() != 2) return {Scalarity::Fails, std::nullopt};
  // b1^j - b1^0 + t (b2^j - b2^0) = 0 for all j, with t = lambda_2 / lambda_1 > 0
  const auto& b1 = rep.b[0];
  const auto& b2 = rep.b[1];
  std::optional<Rational> t;
  for (std::size_t j = 1; j < b1.size(); ++j) {
    Rational d1 = *b1[j] - *b1[0];
    Rational d2 = *b2[j] - *b2[0];
    if (d2 == 0) {
      if (d1 != 0) return {Scalarity::Fails, std::nullopt};
      continue;
    }
    Rational candidate = -d1 / d2;
    if (t && *t != candidate) return {Scalarity::Fails, std::nullopt};
    t = candidate;
  }
  if (!t || *t <= 0) return {Scalarity::Fails, std::nullopt};
  return {Scalarity::JointlyScalarOnly, t};
}

}  // namespace einfib
