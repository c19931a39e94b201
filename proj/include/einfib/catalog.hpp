#pragma once

#include "einfib/subalgebra.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace einfib {

using Params = std::map<std::string, int>;

enum class FiberType { I, II };

/// Raised when parameters fall outside a triple's domain.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised for identifiers that name no catalog entry.
class UnknownTriple : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct TripleSpec {
  std::string id;
  std::string table;  // eigIexc, eigIclass, eigIIexc or eigIIclass
  Family family;
  std::optional<int> fixed_rank;  // exceptional algebras
  std::vector<std::string> params;
  FiberType fiber;
  std::string g_label;
  std::string k_label;
  std::string l_label;
  /// Empty when params are admissible, else the violated constraint.
  std::function<std::optional<std::string>(const Params&)> check;
  std::function<TripleDecomposition(const Params&)> build;
  /// Admissible parameter values for exceptional rows; classical rows are swept.
  std::vector<Params> fixed_params;

  bool is_classical() const { return !fixed_rank.has_value(); }
  /// All admissible parameter assignments, classical families with n <= n_max.
  std::vector<Params> sweep(int n_max) const;
  /// Simple type of g for the given parameters.
  SimpleType g_type(const Params& params) const;
};

const std::vector<TripleSpec>& catalog();
const TripleSpec& find_triple(const std::string& id);

struct TripleInstance {
  const TripleSpec* spec;
  Params params;
};

/// Every catalog triple (with expanded parameters) whose g is the given simple algebra.
std::vector<TripleInstance> enumerate_triples(const SimpleType& g);

/// Validates the parameters, then realizes the triple at root level.
TripleDecomposition instantiate(const TripleSpec& spec, const Params& params);

struct Classification {
  FiberType fiber;
  std::size_t s;
};
Classification classify(const TripleDecomposition& triple);

/// Shared immutable root system per simple type.
std::shared_ptr<const RootSystem> shared_root_system(const SimpleType& type);

std::string format_params(const Params& params);
/// Parses "n=4,p=2,l=1".
Params parse_params(const std::string& text);

}  // namespace einfib
