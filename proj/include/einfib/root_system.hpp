#pragma once

#include "einfib/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace einfib {

enum class Family { A, B, C, D, E, F, G };

struct SimpleType {
  Family family;
  int rank;

  /// Throws std::invalid_argument for combinations such as E5 or G3.
  void validate() const;
  std::string name() const;
  friend bool operator==(const SimpleType&, const SimpleType&) = default;
};

/// Parses names such as "E8", "A3", "B1".
SimpleType parse_simple_type(std::string_view text);

int dual_coxeter(const SimpleType& type);

/// Coordinates scaled by two, so that every root of every type is integral.
using Vector = std::vector<int>;

struct VectorHash {
  std::size_t operator()(const Vector& v) const;
};

struct RootString {
  int p;
  int q;
};

/// Finite root system realized in a Euclidean frame. Roots are addressed by index.
class RootSystem {
 public:
  /// Standard frame realization with Bourbaki-ordered simple roots.
  static RootSystem build(const SimpleType& type);
  /// Closure under reflections of the given simple roots (doubled coordinates).
  static RootSystem from_simple_roots(const SimpleType& type, const std::vector<Vector>& simple);

  const SimpleType& type() const { return type_; }
  std::size_t size() const { return roots_.size(); }
  std::size_t dimension() const { return roots_.front().size(); }
  const Vector& root(std::size_t i) const { return roots_.at(i); }
  std::vector<Rational> coordinates(std::size_t i) const;
  std::optional<std::size_t> find(const Vector& v) const;
  /// Index of r_i + r_j when that is a root.
  std::optional<std::size_t> sum(std::size_t i, std::size_t j) const;
  std::size_t negative(std::size_t i) const { return negative_.at(i); }

  const std::vector<std::size_t>& simple_roots() const { return simple_; }
  /// Coefficients in the simple-root basis.
  const std::vector<int>& coefficients(std::size_t i) const { return coefficients_.at(i); }
  bool is_positive(std::size_t i) const;
  std::size_t highest_root() const { return highest_; }

  /// Euclidean product of doubled coordinates (four times the true value).
  long dot(std::size_t i, std::size_t j) const;
  bool is_long(std::size_t i) const { return dot(i, i) == long_dot_; }

  /// kappa with B(a, b) = kappa * <a, b>.
  Rational killing_scale() const { return killing_doubled_ * 4; }
  /// B-normalized squared length.
  Rational norm_sq(std::size_t i) const { return killing_doubled_ * dot(i, i); }
  Rational killing(std::size_t i, std::size_t j) const { return killing_doubled_ * dot(i, j); }

  /// Maximal [p, q] with root(phi) + n root(alpha) a root; requires alpha != +-phi.
  RootString root_string(std::size_t alpha, std::size_t phi) const;

 private:
  RootSystem() = default;
  void index();

  SimpleType type_{Family::A, 1};
  std::vector<Vector> roots_;
  std::unordered_map<Vector, std::size_t, VectorHash> lookup_;
  std::vector<std::size_t> negative_;
  std::vector<std::size_t> simple_;
  std::vector<std::vector<int>> coefficients_;
  std::size_t highest_ = 0;
  long long_dot_ = 0;
  Rational killing_doubled_;
};

}  // namespace einfib
