#pragma once

#include "einfib/catalog.hpp"
#include "einfib/einstein.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace einfib {

using Json = nlohmann::ordered_json;

/// Integer arithmetic with + - * / ^ and parentheses over named integer variables.
Rational evaluate_expression(std::string_view text, const Params& vars);
/// A comparison "lhs op rhs" with op in == != < <= > >=.
bool evaluate_condition(std::string_view text, const Params& vars);
/// Conjunction of a JSON array of conditions; a missing value is true.
bool evaluate_conditions(const Json& conditions, const Params& vars);

/// EINFIB_GOLDEN_DIR when set, else the directory shipped with the sources.
std::filesystem::path golden_directory();
Json load_golden(const std::string& table);

/// Tables reproduced by regenerate_table, in display order.
const std::vector<std::string>& table_ids();

enum class CellStatus { Match, Annotated, Mismatch };
const char* to_string(CellStatus status);

struct CellDiff {
  std::string row;
  std::string params;
  std::string column;
  std::string expected;
  std::string computed;
  CellStatus status = CellStatus::Match;
  std::string note;
};

struct TableDiff {
  std::string table;
  std::vector<CellDiff> cells;

  /// Every cell matches the printed value or its documented oracle.
  bool pass() const;
  /// Every cell matches the printed value.
  bool printed_match() const;
  std::size_t count(CellStatus status) const;
  /// Cells of the given status for the given column (all columns when empty).
  std::vector<const CellDiff*> select(CellStatus status, std::string_view column = {}) const;
};

struct TableOptions {
  int sweep_max = 10;
};

/// Recomputes every cell from root systems and diffs against the golden file.
TableDiff regenerate_table(const std::string& table, const TableOptions& options = {});
/// Scalarity verdicts of all type II triples against the recorded include list.
TableDiff scalarity_diff(const TableOptions& options = {});

/// Simple ideals after the low-rank identifications, plus the centre dimension.
struct AlgebraShape {
  std::vector<std::string> simple;
  int torus = 0;
  friend bool operator==(const AlgebraShape&, const AlgebraShape&) = default;
};
AlgebraShape shape_of(const RegularSubalgebra& algebra);
AlgebraShape shape_of(const SimpleType& type);
/// Shape of a list such as [{"so": "2*p"}, {"R": "1"}].
AlgebraShape shape_of(const Json& factors, const Params& vars);
std::string to_string(const AlgebraShape& shape);

/// Real values of a golden X cell: a rational expression or {num, rad, den} for (num +- sqrt(rad)) / den.
std::vector<QuadraticSurd> golden_values(const Json& cell, const Params& vars);

/// Parameter sets of a golden row, each merged with its loop variables for cell evaluation.
struct RowInstance {
  Params params;
  Params env;
};
std::vector<RowInstance> row_instances(const Json& row, const TripleSpec& spec, int sweep_max);

// Serialization. Exact values are structured objects; decimals are a separate field.
Json rational_json(const Rational& value);
Json surd_json(const QuadraticSurd& value, int precision);
Json root_json(const IsolatedRoot& value, int precision);
Json metric_value_json(const MetricValue& value, int precision);
Json solve_report_json(const SolveReport& report, int precision);
Json casimir_report_json(const TripleSpec& spec, const Params& params, const TripleDecomposition& triple,
                         const CasimirReport& report);
Json residual_json(const ResidualReport& report);
Json table_diff_json(const TableDiff& diff);

enum class Format { Json, Csv, Markdown };
Format parse_format(std::string_view text);

/// Header plus rows rendered as CSV or a markdown table.
struct TextTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};
std::string render(const TextTable& table, Format format);

TextTable table_diff_text(const TableDiff& diff);
TextTable solve_report_text(const SolveReport& report, int precision);

}  // namespace einfib
