#include "einfib/report.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#ifndef EINFIB_GOLDEN_DIR_DEFAULT
#define EINFIB_GOLDEN_DIR_DEFAULT "golden"
#endif

namespace einfib {

// ---------------------------------------------------------------- expressions

namespace {

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, const Params& vars) : text_(text), vars_(vars) {}

  Rational parse() {
    Rational v = sum();
    skip();
    if (pos_ != text_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("expression \"" + std::string(text_) + "\": " + what);
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Rational sum() {
    Rational v = product();
    for (;;) {
      if (eat('+')) {
        v += product();
      } else if (eat('-')) {
        v -= product();
      } else {
        return v;
      }
    }
  }
  Rational product() {
    Rational v = unary();
    for (;;) {
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        Rational d = unary();
        if (d == 0) throw std::domain_error("division by zero in '" + std::string(text_) + "'");
        v /= d;
      } else {
        return v;
      }
    }
  }
  Rational unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  Rational power() {
    Rational base = atom();
    if (!eat('^')) return base;
    Rational e = unary();
    if (e.get_den() != 1 || e < 0 || e > 64) fail("exponent must be an integer in [0, 64]");
    return einfib::power(base, static_cast<unsigned>(e.get_num().get_ui()));
  }
  Rational atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Rational v = sum();
      if (!eat(')')) fail("missing )");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Rational(Integer(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto it = vars_.find(name);
      if (it == vars_.end()) fail("unknown variable " + name);
      return Rational(it->second);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  const Params& vars_;
  std::size_t pos_ = 0;
};

int to_int(const Rational& v, const std::string& what) {
  if (v.get_den() != 1 || !v.get_num().fits_sint_p()) throw std::invalid_argument(what + " is not a small integer");
  return static_cast<int>(v.get_num().get_si());
}

int json_int(const Json& v, const Params& vars) {
  if (v.is_number_integer()) return v.get<int>();
  return to_int(evaluate_expression(v.get<std::string>(), vars), v.dump());
}

}  // namespace

Rational evaluate_expression(std::string_view text, const Params& vars) {
  return ExpressionParser(text, vars).parse();
}

bool evaluate_condition(std::string_view text, const Params& vars) {
  static const char* ops[] = {"==", "!=", "<=", ">=", "<", ">"};
  for (const char* op : ops) {
    std::size_t at = text.find(op);
    if (at == std::string_view::npos) continue;
    std::size_t len = std::char_traits<char>::length(op);
    Rational lhs = evaluate_expression(text.substr(0, at), vars);
    Rational rhs = evaluate_expression(text.substr(at + len), vars);
    std::string o(op);
    if (o == "==") return lhs == rhs;
    if (o == "!=") return lhs != rhs;
    if (o == "<=") return lhs <= rhs;
    if (o == ">=") return lhs >= rhs;
    if (o == "<") return lhs < rhs;
    return lhs > rhs;
  }
  throw std::invalid_argument("condition \"" + std::string(text) + "\" has no comparison");
}

bool evaluate_conditions(const Json& conditions, const Params& vars) {
  if (conditions.is_null()) return true;
  for (const auto& c : conditions) {
    if (!evaluate_condition(c.get<std::string>(), vars)) return false;
  }
  return true;
}

// ---------------------------------------------------------------- golden files

std::filesystem::path golden_directory() {
  if (const char* env = std::getenv("EINFIB_GOLDEN_DIR"); env && *env) return env;
  return EINFIB_GOLDEN_DIR_DEFAULT;
}

Json load_golden(const std::string& table) {
  std::filesystem::path path = golden_directory() / (table + ".json");
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read golden file " + path.string());
  return Json::parse(in);
}

const std::vector<std::string>& table_ids() {
  static const std::vector<std::string> ids = {"tabcoxeter", "spexc",   "spclass", "eigIexc", "eigIclass", "eigIIexc",
                                               "eigIIclass", "mIexc",   "mIclass", "bimII",   "nonbimII",  "tabgenII"};
  return ids;
}

const char* to_string(CellStatus status) {
  switch (status) {
    case CellStatus::Match: return "match";
    case CellStatus::Annotated: return "annotated";
    case CellStatus::Mismatch: return "mismatch";
  }
  return "?";
}

bool TableDiff::pass() const { return count(CellStatus::Mismatch) == 0; }
bool TableDiff::printed_match() const { return count(CellStatus::Match) == cells.size(); }

std::size_t TableDiff::count(CellStatus status) const {
  return std::count_if(cells.begin(), cells.end(), [&](const CellDiff& c) { return c.status == status; });
}

std::vector<const CellDiff*> TableDiff::select(CellStatus status, std::string_view column) const {
  std::vector<const CellDiff*> out;
  for (const auto& c : cells) {
    if (c.status == status && (column.empty() || c.column == column)) out.push_back(&c);
  }
  return out;
}

// ---------------------------------------------------------------- algebra shapes

namespace {

void add_simple(AlgebraShape& s, Family f, int rank) {
  auto put = [&](const std::string& name) { s.simple.push_back(name); };
  auto named = [](char f, int r) { return std::string(1, f) + std::to_string(r); };
  switch (f) {
    case Family::A: put(named('A', rank)); break;
    case Family::B: rank == 1 ? put("A1") : put(named('B', rank)); break;
    case Family::C:
      if (rank == 1) put("A1");
      else if (rank == 2) put("B2");
      else put(named('C', rank));
      break;
    case Family::D:
      if (rank == 1) s.torus += 1;
      else if (rank == 2) { put("A1"); put("A1"); }
      else if (rank == 3) put("A3");
      else put(named('D', rank));
      break;
    case Family::E: put(named('E', rank)); break;
    case Family::F: put(named('F', rank)); break;
    case Family::G: put(named('G', rank)); break;
  }
}

void add_so(AlgebraShape& s, int k) {
  if (k <= 1) return;
  if (k == 2) {
    s.torus += 1;
    return;
  }
  if (k % 2) add_simple(s, Family::B, (k - 1) / 2);
  else add_simple(s, Family::D, k / 2);
}

void finish_shape(AlgebraShape& s) { std::sort(s.simple.begin(), s.simple.end()); }

}  // namespace

AlgebraShape shape_of(const RegularSubalgebra& algebra) {
  AlgebraShape s;
  for (const auto& ideal : algebra.ideals) add_simple(s, ideal.type.family, ideal.type.rank);
  s.torus += algebra.torus_corank;
  finish_shape(s);
  return s;
}

AlgebraShape shape_of(const SimpleType& type) {
  AlgebraShape s;
  add_simple(s, type.family, type.rank);
  finish_shape(s);
  return s;
}

AlgebraShape shape_of(const Json& factors, const Params& vars) {
  AlgebraShape s;
  for (const auto& f : factors) {
    for (const auto& [kind, value] : f.items()) {
      int k = json_int(value, vars);
      if (kind == "so") add_so(s, k);
      else if (kind == "su") { if (k >= 2) add_simple(s, Family::A, k - 1); }
      else if (kind == "u") { if (k >= 2) add_simple(s, Family::A, k - 1); s.torus += 1; }
      else if (kind == "sp") add_simple(s, Family::C, k);
      else if (kind == "R") s.torus += k;
      else if (kind == "e") add_simple(s, Family::E, k);
      else throw std::invalid_argument("unknown factor kind " + kind);
    }
  }
  finish_shape(s);
  return s;
}

std::string to_string(const AlgebraShape& shape) {
  std::string out;
  for (const auto& name : shape.simple) out += (out.empty() ? "" : "+") + name;
  if (shape.torus) out += (out.empty() ? "" : "+") + (shape.torus == 1 ? std::string("R") : "R^" + std::to_string(shape.torus));
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------- golden values

std::vector<QuadraticSurd> golden_values(const Json& cell, const Params& vars) {
  std::vector<QuadraticSurd> out;
  if (cell.is_array()) {
    for (const auto& c : cell) {
      auto v = golden_values(c, vars);
      out.insert(out.end(), v.begin(), v.end());
    }
    return out;
  }
  if (cell.is_string()) {
    out.emplace_back(evaluate_expression(cell.get<std::string>(), vars));
    return out;
  }
  Rational num = evaluate_expression(cell.at("num").get<std::string>(), vars);
  Rational rad = evaluate_expression(cell.at("rad").get<std::string>(), vars);
  Rational den = evaluate_expression(cell.at("den").get<std::string>(), vars);
  if (den == 0) throw std::invalid_argument("zero denominator in golden cell " + cell.dump());
  if (rad < 0) return out;
  out.push_back(QuadraticSurd::from_parts(num, -1, rad, den));
  if (rad > 0) out.push_back(QuadraticSurd::from_parts(num, 1, rad, den));
  return out;
}

std::vector<RowInstance> row_instances(const Json& row, const TripleSpec& spec, int sweep_max) {
  std::vector<RowInstance> out;
  Json where = row.contains("where") ? row["where"] : Json();
  auto accept = [&](const Params& params, const Params& loop) {
    if (auto violation = spec.check(params)) throw DomainError(spec.id + " " + format_params(params) + ": " + *violation);
    Params env = params;
    for (const auto& [k, v] : loop) env[k] = v;
    if (evaluate_conditions(where, env)) out.push_back({params, env});
  };
  if (!row.contains("instances")) {
    for (const auto& p : spec.sweep(sweep_max)) accept(p, {});
    return out;
  }
  const Json& inst = row["instances"];
  const Json& vars = inst.at("vars");
  Params loop;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == vars.size()) {
      if (!evaluate_conditions(inst.contains("where") ? inst["where"] : Json(), loop)) return;
      Params params;
      for (const auto& [k, v] : inst.at("params").items()) params[k] = json_int(v, loop);
      accept(params, loop);
      return;
    }
    std::string name = vars[i][0].get<std::string>();
    int lo = json_int(vars[i][1], loop);
    int hi = json_int(vars[i][2], loop);
    for (int v = lo; v <= hi; ++v) {
      loop[name] = v;
      rec(i + 1);
    }
    loop.erase(name);
  };
  rec(0);
  return out;
}

// ---------------------------------------------------------------- diff helpers

namespace {

template <class T>
std::string join_set(const std::vector<T>& values, std::function<std::string(const T&)> show) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? ", " : "") + show(values[i]);
  return out + "}";
}

std::string show_rational_set(const std::vector<Rational>& v) {
  return join_set<Rational>(v, [](const Rational& x) { return to_string(x); });
}

std::vector<Rational> sorted_unique(std::vector<Rational> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<MetricValue> sorted_unique(std::vector<MetricValue> v) {
  std::sort(v.begin(), v.end(), [](const MetricValue& a, const MetricValue& b) { return compare(a, b) < 0; });
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::string show_values(const std::vector<MetricValue>& v) {
  return join_set<MetricValue>(v, [](const MetricValue& x) { return x.to_string(); });
}

bool same_values(const std::vector<MetricValue>& a, const std::vector<MetricValue>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i] == b[i])) return false;
  }
  return true;
}

using MetricPair = std::pair<MetricValue, MetricValue>;

std::vector<MetricPair> sorted_pairs(std::vector<MetricPair> v) {
  auto less = [](const MetricPair& a, const MetricPair& b) {
    auto c = compare(a.first, b.first);
    if (c != 0) return c < 0;
    return compare(a.second, b.second) < 0;
  };
  std::sort(v.begin(), v.end(), less);
  v.erase(std::unique(v.begin(), v.end(),
                      [](const MetricPair& a, const MetricPair& b) { return a.first == b.first && a.second == b.second; }),
          v.end());
  return v;
}

bool same_pairs(const std::vector<MetricPair>& a, const std::vector<MetricPair>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i].first == b[i].first) || !(a[i].second == b[i].second)) return false;
  }
  return true;
}

std::string show_pairs(const std::vector<MetricPair>& v) {
  return join_set<MetricPair>(v, [](const MetricPair& p) { return "(" + p.first.to_string() + ", " + p.second.to_string() + ")"; });
}

/// Outcome of comparing one value against the printed cell and, if needed, its oracle.
struct Comparison {
  std::string expected;
  std::string computed;
  bool match;
};

class DiffBuilder {
 public:
  explicit DiffBuilder(std::string table) { diff_.table = std::move(table); }

  /// `compare` maps a golden cell to the comparison against the computed value.
  void cell(const Json& row, const std::string& row_label, const RowInstance& inst, const std::string& column,
            const Json& printed, const std::function<Comparison(const Json&)>& compare) {
    CellDiff c;
    c.row = row_label;
    c.params = format_params(inst.params);
    c.column = column;
    Comparison printed_cmp = compare(printed);
    c.expected = printed_cmp.expected;
    c.computed = printed_cmp.computed;
    if (printed_cmp.match) {
      c.status = CellStatus::Match;
    } else if (const Json* d = discrepancy(row, column, inst.env)) {
      Comparison oracle_cmp = compare(d->at("oracle"));
      c.status = oracle_cmp.match ? CellStatus::Annotated : CellStatus::Mismatch;
      c.note = "oracle " + oracle_cmp.expected + (oracle_cmp.match ? "" : " also differs") + ": " +
               d->value("note", std::string());
    } else {
      c.status = CellStatus::Mismatch;
    }
    diff_.cells.push_back(std::move(c));
  }

  void raw(CellDiff c) { diff_.cells.push_back(std::move(c)); }

  void error(const std::string& row_label, const std::string& params, const std::string& column, const std::string& what) {
    diff_.cells.push_back({row_label, params, column, "", "error", CellStatus::Mismatch, what});
  }

  TableDiff take() { return std::move(diff_); }

 private:
  static const Json* discrepancy(const Json& row, const std::string& column, const Params& env) {
    if (!row.contains("discrepancies")) return nullptr;
    for (const auto& d : row["discrepancies"]) {
      if (d.at("column") != column) continue;
      if (!evaluate_conditions(d.contains("where") ? d["where"] : Json(), env)) continue;
      if (!d.contains("note") || d["note"].get<std::string>().empty()) {
        throw std::invalid_argument("discrepancy without annotation in row " + row.dump());
      }
      return &d;
    }
    return nullptr;
  }

  TableDiff diff_;
};

std::string row_label(const Json& row) {
  std::string label = row.value("id", std::string());
  if (row.contains("where")) {
    for (const auto& w : row["where"]) label += " " + w.get<std::string>();
  }
  if (row.contains("mode")) label += " [" + row["mode"].get<std::string>() + "]";
  return label;
}

class SolveCache {
 public:
  const SolveReport& get(const TripleSpec& spec, const Params& params) {
    auto key = std::make_pair(spec.id, params);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, full_solve(spec, params)).first;
    return it->second;
  }

 private:
  std::map<std::pair<std::string, Params>, SolveReport> cache_;
};

std::vector<MetricValue> first_values(const SolveReport& rep, const std::function<bool(const EinsteinMetric&)>& keep) {
  std::vector<MetricValue> out;
  for (const auto& m : rep.metrics) {
    if (keep(m)) out.push_back(m.values.at(0));
  }
  return sorted_unique(std::move(out));
}

std::vector<MetricPair> metric_pairs(const SolveReport& rep, const std::function<bool(const EinsteinMetric&)>& keep) {
  std::vector<MetricPair> out;
  for (const auto& m : rep.metrics) {
    if (keep(m)) out.emplace_back(m.values.at(0), m.values.at(1));
  }
  return sorted_pairs(std::move(out));
}

std::vector<MetricValue> golden_metric_values(const Json& cell, const Params& env) {
  std::vector<MetricValue> out;
  for (const auto& v : golden_values(cell, env)) out.emplace_back(v);
  return sorted_unique(std::move(out));
}

Comparison compare_values(const Json& cell, const Params& env, const std::vector<MetricValue>& computed) {
  auto expected = golden_metric_values(cell, env);
  return {show_values(expected), show_values(computed), same_values(expected, computed)};
}

Comparison compare_rational(const Json& cell, const Params& env, const std::optional<Rational>& computed) {
  Rational expected = evaluate_expression(cell.get<std::string>(), env);
  return {to_string(expected), computed ? to_string(*computed) : "none", computed && *computed == expected};
}

std::set<std::pair<std::string, Params>> covered_instances(const Json& rows, int sweep_max) {
  std::set<std::pair<std::string, Params>> out;
  for (const auto& row : rows) {
    std::string id = row.at("id").get<std::string>();
    for (const auto& inst : row_instances(row, find_triple(id), sweep_max)) out.insert({id, inst.params});
  }
  return out;
}

std::vector<Params> all_instances(const TripleSpec& spec, int sweep_max) { return spec.sweep(sweep_max); }

// ---------------------------------------------------------------- individual tables

TableDiff diff_coxeter(const Json& golden) {
  DiffBuilder out("tabcoxeter");
  for (const auto& row : golden.at("rows")) {
    std::string fam = row.at("family").get<std::string>();
    int lo = row.at("ranks")[0].get<int>();
    int hi = row.at("ranks")[1].get<int>();
    for (int n = lo; n <= hi; ++n) {
      SimpleType t = parse_simple_type(fam + std::to_string(n));
      Rational expected = evaluate_expression(row.at("h").get<std::string>(), {{"n", n}});
      int computed = dual_coxeter(t);
      out.raw({t.name(), "n=" + std::to_string(n), "h", to_string(expected), std::to_string(computed),
               expected == computed ? CellStatus::Match : CellStatus::Mismatch, ""});
    }
  }
  return out.take();
}

TableDiff diff_symmetric_pairs(const std::string& table, const Json& golden, int sweep_max) {
  DiffBuilder out(table);
  for (const auto& row : golden.at("rows")) {
    const TripleSpec& spec = find_triple(row.at("id").get<std::string>());
    std::string label = row.value("label", row.contains("g") && row["g"].is_string() ? row["g"].get<std::string>() : spec.id);
    for (const auto& inst : row_instances(row, spec, sweep_max)) {
      TripleDecomposition t = instantiate(spec, inst.params);
      AlgebraShape g_computed = shape_of(t.g->type());
      AlgebraShape g_expected = row.at("g").is_string() ? shape_of(parse_simple_type(row["g"].get<std::string>()))
                                                         : shape_of(row["g"], inst.env);
      out.cell(row, label, inst, "g", row["g"], [&](const Json&) {
        return Comparison{to_string(g_expected), to_string(g_computed), g_expected == g_computed};
      });
      AlgebraShape k_computed = shape_of(t.k);
      out.cell(row, label, inst, "k", row["k"], [&](const Json& cell) {
        AlgebraShape k_expected = shape_of(cell, inst.env);
        return Comparison{to_string(k_expected), to_string(k_computed), k_expected == k_computed};
      });
      bool symmetric = check_symmetric_pair(*t.g, all_roots(*t.g), t.k.roots);
      out.cell(row, label, inst, "symmetric", Json(true), [&](const Json&) {
        return Comparison{"true", symmetric ? "true" : "false", symmetric};
      });
    }
  }
  return out.take();
}

std::vector<Rational> expected_b_set(const Json& cells, const Params& env) {
  std::vector<Rational> out;
  for (const auto& c : cells) {
    if (c.is_string()) {
      out.push_back(evaluate_expression(c.get<std::string>(), env));
    } else if (c.is_object() && c.contains("value")) {
      if (evaluate_conditions(c.contains("when") ? c["when"] : Json(), env)) {
        out.push_back(evaluate_expression(c["value"].get<std::string>(), env));
      }
    } else {
      throw std::invalid_argument("bad b cell " + c.dump());
    }
  }
  return sorted_unique(std::move(out));
}

TableDiff diff_eigenvalues(const std::string& table, const Json& golden, int sweep_max) {
  DiffBuilder out(table);
  std::set<std::string> seen;
  for (const auto& row : golden.at("rows")) {
    const TripleSpec& spec = find_triple(row.at("id").get<std::string>());
    seen.insert(spec.id);
    std::string label = row_label(row);
    if (spec.table != table) out.error(label, "", "table", spec.id + " belongs to " + spec.table);
    for (const auto& inst : row_instances(row, spec, sweep_max)) {
      CasimirReport cas = casimir_report(instantiate(spec, inst.params));
      const Json& gammas = row.at("gamma");
      for (std::size_t a = 0; a < gammas.size(); ++a) {
        std::optional<Rational> g;
        if (a < cas.s()) g = cas.gamma[a];
        out.cell(row, label, inst, "gamma" + std::to_string(a + 1), Json::array({gammas[a]}), [&](const Json& cell) {
          return compare_rational(cell.at(0), inst.env, g);
        });
      }
      const Json& bs = row.at("b");
      for (std::size_t a = 0; a < bs.size(); ++a) {
        std::vector<Rational> computed = a < cas.s() ? cas.b_set(a) : std::vector<Rational>{};
        bool constant = a < cas.s() && std::all_of(cas.b[a].begin(), cas.b[a].end(), [](const auto& v) { return v.has_value(); });
        out.cell(row, label, inst, "b" + std::to_string(a + 1), bs[a], [&](const Json& cell) {
          auto expected = expected_b_set(cell, inst.env);
          std::string shown = show_rational_set(computed) + (constant ? "" : " (varies within a component)");
          return Comparison{show_rational_set(expected), shown, constant && expected == computed};
        });
      }
      if (cas.s() != gammas.size()) {
        out.error(label, format_params(inst.params), "s", "computed s = " + std::to_string(cas.s()));
      }
    }
  }
  for (const auto& spec : catalog()) {
    if (spec.table == table && !seen.count(spec.id)) out.error(spec.id, "", "row", "catalog triple without golden row");
  }
  return out.take();
}

void check_completeness(DiffBuilder& out, const Json& golden, const std::string& source_table, int sweep_max,
                        SolveCache& cache) {
  auto covered = covered_instances(golden.at("rows"), sweep_max);
  for (const auto& spec : catalog()) {
    if (spec.table != source_table) continue;
    for (const auto& params : all_instances(spec, sweep_max)) {
      if (covered.count({spec.id, params})) continue;
      const SolveReport& rep = cache.get(spec, params);
      if (rep.metrics.empty()) continue;
      std::string found;
      for (const auto& m : rep.metrics) {
        found += (found.empty() ? "" : "; ") + std::string("(");
        for (std::size_t i = 0; i < m.values.size(); ++i) found += (i ? ", " : "") + m.values[i].to_string();
        found += ")";
      }
      bool handled = false;
      if (golden.contains("isomorphic")) {
        for (const auto& iso : golden["isomorphic"]) {
          if (iso.at("id") != spec.id || !evaluate_conditions(iso.contains("where") ? iso["where"] : Json(), params)) continue;
          const Json& same = iso.at("same_as");
          const TripleSpec& other = find_triple(same.at("id").get<std::string>());
          Params other_params;
          for (const auto& [k, v] : same.at("params").items()) other_params[k] = json_int(v, params);
          const SolveReport& other_rep = cache.get(other, other_params);
          auto mine = first_values(rep, [](const EinsteinMetric&) { return true; });
          auto theirs = first_values(other_rep, [](const EinsteinMetric&) { return true; });
          bool same_set = same_values(mine, theirs) && rep.metrics.size() == other_rep.metrics.size();
          out.raw({spec.id, format_params(params), "listed", "isomorphic to " + other.id + " " + format_params(other_params),
                   found, same_set ? CellStatus::Match : CellStatus::Mismatch, iso.value("note", std::string())});
          handled = true;
        }
      }
      if (!handled) {
        out.raw({spec.id, format_params(params), "listed", "not listed", found, CellStatus::Mismatch,
                 "Einstein metrics exist but no row covers this triple"});
      }
    }
  }
}

TableDiff diff_type_I(const std::string& table, const Json& golden, int sweep_max) {
  DiffBuilder out(table);
  SolveCache cache;
  for (const auto& row : golden.at("rows")) {
    const TripleSpec& spec = find_triple(row.at("id").get<std::string>());
    std::string label = row_label(row);
    for (const auto& inst : row_instances(row, spec, sweep_max)) {
      const SolveReport& rep = cache.get(spec, inst.params);
      auto computed = first_values(rep, [](const EinsteinMetric&) { return true; });
      out.cell(row, label, inst, "X", row.at("X"), [&](const Json& cell) { return compare_values(cell, inst.env, computed); });
    }
  }
  if (golden.contains("nonexistence")) {
    for (const auto& entry : golden["nonexistence"]) {
      const TripleSpec& spec = find_triple(entry.at("id").get<std::string>());
      std::string label = row_label(entry) + " [nonexistence]";
      for (const auto& inst : row_instances(entry, spec, sweep_max)) {
        const SolveReport& rep = cache.get(spec, inst.params);
        if (entry.contains("delta")) {
          out.cell(entry, label, inst, "delta", entry["delta"],
                   [&](const Json& cell) { return compare_rational(cell, inst.env, rep.discriminant); });
        } else {
          int want = entry.at("delta_sign").get<int>();
          int got = rep.discriminant ? sign(*rep.discriminant) : 2;
          out.cell(entry, label, inst, "delta_sign", entry["delta_sign"], [&](const Json&) {
            return Comparison{want < 0 ? "negative" : "positive",
                              rep.discriminant ? to_string(*rep.discriminant) : "none", got == want};
          });
        }
        out.cell(entry, label, inst, "metrics", Json::array(), [&](const Json&) {
          return Comparison{"none", std::to_string(rep.metrics.size()) + " metrics", rep.metrics.empty()};
        });
      }
    }
  }
  if (golden.value("complete", false)) {
    check_completeness(out, golden, table == "mIexc" ? "eigIexc" : "eigIclass", golden.value("sweep_max", sweep_max), cache);
  }
  return out.take();
}

std::optional<Rational> binormal_delta(const SolveReport& rep) {
  if (rep.gamma.size() != 2 || rep.b.size() != 2) return std::nullopt;
  return solve_binormal_II(rep.gamma[0], rep.gamma[1], rep.b[0], rep.b[1], rep.r).discriminant;
}

bool other_metric(const EinsteinMetric& m) { return !m.is_binormal && !m.fiber_einstein; }

TableDiff diff_bimII(const Json& golden, int sweep_max) {
  DiffBuilder out("bimII");
  SolveCache cache;
  for (const auto& row : golden.at("rows")) {
    const TripleSpec& spec = find_triple(row.at("id").get<std::string>());
    std::string label = row_label(row);
    std::string mode = row.at("mode").get<std::string>();
    for (const auto& inst : row_instances(row, spec, sweep_max)) {
      const SolveReport& rep = cache.get(spec, inst.params);
      if (mode == "binormal") {
        auto computed = first_values(rep, [](const EinsteinMetric& m) { return m.is_binormal; });
        out.cell(row, label, inst, "X", row.at("X"), [&](const Json& cell) { return compare_values(cell, inst.env, computed); });
        auto delta = binormal_delta(rep);
        out.cell(row, label, inst, "delta", row.at("delta"),
                 [&](const Json& cell) { return compare_rational(cell, inst.env, delta); });
      } else {
        std::vector<MetricPair> computed;
        if (rep.b.size() == 2) {
          SolveReport fe = solve_fiber_einstein(rep.gamma[0], rep.gamma[1], rep.b[0], rep.b[1], rep.r);
          computed = metric_pairs(fe, [](const EinsteinMetric&) { return true; });
        }
        out.cell(row, label, inst, "metrics", row.at("metrics"), [&](const Json& cell) {
          std::vector<MetricPair> expected;
          for (const auto& m : cell) {
            auto x1 = golden_values(m.at("X1"), inst.env);
            auto x2 = golden_values(m.at("X2"), inst.env);
            expected.emplace_back(x1.at(0), x2.at(0));
          }
          expected = sorted_pairs(std::move(expected));
          return Comparison{show_pairs(expected), show_pairs(computed), same_pairs(expected, computed)};
        });
      }
    }
  }
  for (const auto& entry : golden.value("nonexistence", Json::array())) {
    const TripleSpec& spec = find_triple(entry.at("id").get<std::string>());
    std::string label = row_label(entry) + " [nonexistence]";
    for (const auto& inst : row_instances(entry, spec, sweep_max)) {
      const SolveReport& rep = cache.get(spec, inst.params);
      auto delta = binormal_delta(rep);
      out.cell(entry, label, inst, "delta", entry.at("delta"),
               [&](const Json& cell) { return compare_rational(cell, inst.env, delta); });
      auto binormal = first_values(rep, [](const EinsteinMetric& m) { return m.is_binormal; });
      out.cell(entry, label, inst, "X", Json::array(), [&](const Json&) {
        return Comparison{"{}", show_values(binormal), binormal.empty()};
      });
    }
  }
  return out.take();
}

TableDiff diff_nonbimII(const Json& golden, int sweep_max) {
  DiffBuilder out("nonbimII");
  SolveCache cache;
  std::set<std::pair<std::string, Params>> covered;
  for (const auto& row : golden.at("rows")) {
    const TripleSpec& spec = find_triple(row.at("id").get<std::string>());
    std::string label = row_label(row);
    for (const auto& inst : row_instances(row, spec, sweep_max)) {
      covered.insert({spec.id, inst.params});
      const SolveReport& rep = cache.get(spec, inst.params);
      auto computed = metric_pairs(rep, other_metric);
      Rational k = evaluate_expression(row.at("X2_times_X1").get<std::string>(), inst.env);
      out.cell(row, label, inst, "X1", row.at("X1"), [&](const Json& cell) {
        std::vector<MetricPair> expected;
        for (const auto& x1 : golden_values(cell, inst.env)) {
          if (x1.sign() == 0) {
            expected.emplace_back(x1, QuadraticSurd(0));
            continue;
          }
          expected.emplace_back(x1, QuadraticSurd(k) / x1);
        }
        expected = sorted_pairs(std::move(expected));
        return Comparison{show_pairs(expected), show_pairs(computed), same_pairs(expected, computed)};
      });
    }
  }
  Json bim = load_golden("bimII");
  for (const auto& row : bim.at("rows")) {
    const TripleSpec& spec = find_triple(row.at("id").get<std::string>());
    for (const auto& inst : row_instances(row, spec, sweep_max)) {
      if (covered.count({spec.id, inst.params})) continue;
      covered.insert({spec.id, inst.params});
      const SolveReport& rep = cache.get(spec, inst.params);
      auto others = metric_pairs(rep, other_metric);
      out.raw({spec.id, format_params(inst.params), "other metrics", "{}", show_pairs(others),
               others.empty() ? CellStatus::Match : CellStatus::Mismatch,
               others.empty() ? "" : "metrics beyond the bimII ones that no row lists"});
    }
  }
  return out.take();
}

std::string decimal_pair(const EinsteinMetric& m, int digits) {
  return "(" + m.values.at(0).to_decimal(digits) + ", " + m.values.at(1).to_decimal(digits) + ")";
}

std::vector<std::string> golden_pairs(const Json& cell) {
  std::vector<std::string> out;
  for (const auto& p : cell) out.push_back("(" + p[0].get<std::string>() + ", " + p[1].get<std::string>() + ")");
  std::sort(out.begin(), out.end());
  return out;
}

std::string show_strings(const std::vector<std::string>& v) {
  return join_set<std::string>(v, [](const std::string& s) { return s; });
}

std::vector<Integer> coefficients_high_first(const Polynomial& p) {
  std::vector<Integer> out;
  Polynomial q = p.primitive();
  for (int i = q.degree(); i >= 0; --i) out.push_back(q.coefficient(i).get_num());
  return out;
}

std::string show_integers(const std::vector<Integer>& v) {
  return join_set<Integer>(v, [](const Integer& x) { return to_string(x); });
}

TableDiff diff_tabgenII(const Json& golden, int sweep_max) {
  DiffBuilder out("tabgenII");
  SolveCache cache;
  int digits = golden.value("digits", 4);
  for (const auto& row : golden.at("rows")) {
    const TripleSpec& spec = find_triple(row.at("id").get<std::string>());
    std::string label = row_label(row);
    for (const auto& inst : row_instances(row, spec, sweep_max)) {
      const SolveReport& rep = cache.get(spec, inst.params);
      std::vector<std::string> computed;
      for (const auto& m : rep.metrics) computed.push_back(decimal_pair(m, digits));
      std::sort(computed.begin(), computed.end());
      out.cell(row, label, inst, "metrics", row.at("metrics"), [&](const Json& cell) {
        auto expected = golden_pairs(cell);
        return Comparison{show_strings(expected), show_strings(computed), expected == computed};
      });
    }
  }
  for (const auto& q : golden.at("quartics")) {
    const TripleSpec& spec = find_triple(q.at("id").get<std::string>());
    std::string label = row_label(q) + " [quartic]";
    for (const auto& inst : row_instances(q, spec, sweep_max)) {
      const SolveReport& rep = cache.get(spec, inst.params);
      std::vector<Integer> computed;
      if (rep.quartic) computed = coefficients_high_first(*rep.quartic);
      std::vector<Integer> x2;
      if (rep.x2_eliminant) x2 = coefficients_high_first(*rep.x2_eliminant);
      out.cell(q, label, inst, "t", q.at("t"), [&](const Json& cell) {
        std::vector<Integer> expected;
        if (!cell.is_null()) {
          for (const auto& c : cell) expected.push_back(Integer(c.get<long>()));
        }
        std::string shown = rep.quartic ? show_integers(computed) : "none (" + std::string(to_string(rep.reason)) + ")";
        if (!expected.empty() && expected == x2 && expected != computed) shown += "; the X2-eliminant equals the printed t";
        return Comparison{cell.is_null() ? "none" : show_integers(expected), shown,
                          cell.is_null() ? !rep.quartic : expected == computed};
      });
      out.cell(q, label, inst, "metrics", q.at("metrics"), [&](const Json& cell) {
        int expected = cell.get<int>();
        return Comparison{std::to_string(expected), std::to_string(rep.metrics.size()),
                          static_cast<std::size_t>(expected) == rep.metrics.size()};
      });
    }
  }
  if (golden.value("complete", false)) check_completeness(out, golden, "eigIIexc", sweep_max, cache);
  return out.take();
}

TableDiff regenerate(const std::string& table, const Json& golden, int sweep_max);

}  // namespace

TableDiff regenerate_table(const std::string& table, const TableOptions& options) {
  const auto& ids = table_ids();
  if (std::find(ids.begin(), ids.end(), table) == ids.end()) throw std::invalid_argument("unknown table " + table);
  Json golden = load_golden(table);
  int sweep_max = golden.value("sweep_max", options.sweep_max);
  sweep_max = std::min(sweep_max, options.sweep_max);
  try {
    return regenerate(table, golden, sweep_max);
  } catch (const std::exception& e) {
    TableDiff diff;
    diff.table = table;
    diff.cells.push_back({table, "", "regeneration", "", "error", CellStatus::Mismatch, e.what()});
    return diff;
  }
}

namespace {

TableDiff regenerate(const std::string& table, const Json& golden, int sweep_max) {
  if (table == "tabcoxeter") return diff_coxeter(golden);
  if (table == "spexc" || table == "spclass") return diff_symmetric_pairs(table, golden, sweep_max);
  if (table.rfind("eig", 0) == 0) return diff_eigenvalues(table, golden, sweep_max);
  if (table == "mIexc" || table == "mIclass") return diff_type_I(table, golden, sweep_max);
  if (table == "bimII") return diff_bimII(golden, sweep_max);
  if (table == "nonbimII") return diff_nonbimII(golden, sweep_max);
  return diff_tabgenII(golden, sweep_max);
}

}  // namespace

TableDiff scalarity_diff(const TableOptions& options) {
  Json golden = load_golden("scalarity");
  int sweep_max = std::min(golden.value("sweep_max", options.sweep_max), options.sweep_max);
  DiffBuilder out("scalarity");
  for (const auto& spec : catalog()) {
    if (spec.fiber != FiberType::II) continue;
    for (const auto& params : all_instances(spec, sweep_max)) {
      bool expected = false;
      const Json* entry = nullptr;
      for (const auto& inc : golden.at("include")) {
        if (inc.at("id") == spec.id && evaluate_conditions(inc.contains("where") ? inc["where"] : Json(), params)) {
          expected = true;
          entry = &inc;
        }
      }
      ScalarityResult r = scalarity_test(casimir_report(instantiate(spec, params)));
      bool included = r.verdict != Scalarity::Fails;
      const char* label = included ? "included" : "excluded";
      CellStatus status = expected == included ? CellStatus::Match : CellStatus::Mismatch;
      std::string note;
      if (status == CellStatus::Mismatch && entry && entry->contains("discrepancies")) {
        for (const auto& d : (*entry)["discrepancies"]) {
          if (d.at("column") == "included" && d.at("oracle") == label) {
            status = CellStatus::Annotated;
            note = d.at("note").get<std::string>();
          }
        }
      }
      out.raw({spec.id, format_params(params), "included", expected ? "included" : "excluded",
               std::string(label) + " (" + to_string(r.verdict) + ")", status, note});
    }
  }
  return out.take();
}

// ---------------------------------------------------------------- serialization

Json rational_json(const Rational& value) { return to_string(value); }

Json surd_json(const QuadraticSurd& value, int precision) {
  Integer den = lcm(value.rational_part().get_den(), value.coefficient().get_den());
  Rational a = value.rational_part() * Rational(den);
  Rational k = value.coefficient() * Rational(den);
  Integer d = k.get_num() * k.get_num() * value.radicand();
  int s = sgn(k);
  if (s == 0) d = 0;
  Json j;
  j["a"] = to_string(a.get_num());
  j["s"] = s;
  j["d"] = to_string(d);
  j["c"] = to_string(den);
  j["text"] = value.to_string();
  j["decimal"] = value.to_decimal(precision);
  return j;
}

Json root_json(const IsolatedRoot& value, int precision) {
  Json j;
  Json poly = Json::array();
  for (const auto& c : coefficients_high_first(value.poly())) poly.push_back(to_string(c));
  j["poly"] = poly;
  j["lo"] = to_string(value.lo());
  j["hi"] = to_string(value.hi());
  j["decimal"] = value.to_decimal(precision);
  return j;
}

Json metric_value_json(const MetricValue& value, int precision) {
  return value.is_surd() ? surd_json(value.surd(), precision) : root_json(value.root(), precision);
}

namespace {

Json params_json(const Params& params) {
  Json j = Json::object();
  for (const auto& [k, v] : params) j[k] = v;
  return j;
}

Json rationals_json(const std::vector<Rational>& values) {
  Json j = Json::array();
  for (const auto& v : values) j.push_back(rational_json(v));
  return j;
}

Json polynomial_json(const std::optional<Polynomial>& p) {
  if (!p) return nullptr;
  Json j = Json::array();
  for (const auto& c : coefficients_high_first(*p)) j.push_back(to_string(c));
  return j;
}

}  // namespace

Json solve_report_json(const SolveReport& report, int precision) {
  Json j;
  j["triple"] = report.triple_id;
  j["params"] = params_json(report.params);
  j["solver"] = report.solver;
  j["gamma"] = rationals_json(report.gamma);
  j["b"] = rationals_json(report.b);
  j["r"] = rational_json(report.r);
  j["discriminant"] = report.discriminant ? Json(rational_json(*report.discriminant)) : Json(nullptr);
  j["quartic"] = polynomial_json(report.quartic);
  j["x2_eliminant"] = polynomial_json(report.x2_eliminant);
  j["back_substitution"] = report.back_substitution;
  j["verdict"] = to_string(report.verdict);
  j["reason"] = to_string(report.reason);
  j["detail"] = report.detail;
  Json metrics = Json::array();
  for (const auto& m : report.metrics) {
    Json mj;
    Json values = Json::array();
    for (const auto& v : m.values) values.push_back(metric_value_json(v, precision));
    mj["X"] = values;
    mj["mode"] = to_string(m.mode());
    mj["binormal"] = m.is_binormal;
    mj["fiber_einstein"] = m.fiber_einstein;
    metrics.push_back(mj);
  }
  j["metrics"] = metrics;
  Json discarded = Json::array();
  for (const auto& d : report.discarded) discarded.push_back(d);
  j["discarded"] = discarded;
  return j;
}

Json casimir_report_json(const TripleSpec& spec, const Params& params, const TripleDecomposition& triple,
                         const CasimirReport& report) {
  Json j;
  j["triple"] = spec.id;
  j["params"] = params_json(params);
  j["g"] = triple.g->type().name();
  j["k"] = to_string(shape_of(triple.k));
  j["l"] = to_string(shape_of(triple.l));
  j["s"] = report.s();
  j["gamma"] = rationals_json(report.gamma);
  j["gamma_rootsum"] = rationals_json(report.gamma_oracle);
  Json b = Json::array();
  for (std::size_t a = 0; a < report.s(); ++a) {
    Json row = Json::array();
    for (const auto& v : report.b[a]) row.push_back(v ? Json(rational_json(*v)) : Json(nullptr));
    b.push_back(row);
  }
  j["b"] = b;
  Json sets = Json::array();
  for (std::size_t a = 0; a < report.s(); ++a) sets.push_back(rationals_json(report.b_set(a)));
  j["b_sets"] = sets;
  j["c_kn"] = rational_json(report.c_kn);
  j["c_kn_constant"] = report.c_kn_constant;
  j["r"] = rational_json(report.r);
  j["scalarity"] = to_string(scalarity_test(report).verdict);
  return j;
}

Json residual_json(const ResidualReport& report) {
  Json j;
  j["exact"] = report.exact;
  j["zero"] = report.zero;
  Json res = Json::array();
  for (const auto& r : report.residuals) res.push_back(r);
  j["residuals"] = res;
  return j;
}

Json table_diff_json(const TableDiff& diff) {
  Json j;
  j["table"] = diff.table;
  j["status"] = diff.printed_match() ? "pass" : diff.pass() ? "pass-with-annotations" : "fail";
  j["matched"] = diff.count(CellStatus::Match);
  j["annotated"] = diff.count(CellStatus::Annotated);
  j["mismatched"] = diff.count(CellStatus::Mismatch);
  Json cells = Json::array();
  for (const auto& c : diff.cells) {
    Json cj;
    cj["row"] = c.row;
    cj["params"] = c.params;
    cj["column"] = c.column;
    cj["expected"] = c.expected;
    cj["computed"] = c.computed;
    cj["status"] = to_string(c.status);
    if (!c.note.empty()) cj["annotation"] = c.note;
    cells.push_back(cj);
  }
  j["cells"] = cells;
  return j;
}

Format parse_format(std::string_view text) {
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  if (text == "md") return Format::Markdown;
  throw std::invalid_argument("unknown format " + std::string(text));
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string md_field(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c == '\n' ? ' ' : c;
  }
  return out;
}

}  // namespace

std::string render(const TextTable& table, Format format) {
  std::ostringstream os;
  if (format == Format::Csv) {
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_field(cells[i]);
      os << "\n";
    };
    line(table.header);
    for (const auto& r : table.rows) line(r);
    return os.str();
  }
  auto line = [&](const std::vector<std::string>& cells) {
    os << "|";
    for (const auto& c : cells) os << " " << md_field(c) << " |";
    os << "\n";
  };
  line(table.header);
  os << "|";
  for (std::size_t i = 0; i < table.header.size(); ++i) os << " --- |";
  os << "\n";
  for (const auto& r : table.rows) line(r);
  return os.str();
}

TextTable table_diff_text(const TableDiff& diff) {
  TextTable t{{"row", "params", "column", "expected", "computed", "status", "annotation"}, {}};
  for (const auto& c : diff.cells) {
    t.rows.push_back({c.row, c.params, c.column, c.expected, c.computed, to_string(c.status), c.note});
  }
  return t;
}

TextTable solve_report_text(const SolveReport& report, int precision) {
  TextTable t{{"metric"}, {}};
  std::size_t s = report.gamma.size();
  for (std::size_t a = 0; a < s; ++a) t.header.push_back(s == 1 ? "X" : "X" + std::to_string(a + 1));
  for (std::size_t a = 0; a < s; ++a) t.header.push_back(s == 1 ? "X decimal" : "X" + std::to_string(a + 1) + " decimal");
  t.header.push_back("mode");
  for (std::size_t i = 0; i < report.metrics.size(); ++i) {
    const auto& m = report.metrics[i];
    std::vector<std::string> row{std::to_string(i + 1)};
    for (const auto& v : m.values) row.push_back(v.is_surd() ? v.surd().to_string() : v.to_string());
    for (const auto& v : m.values) row.push_back(v.to_decimal(precision));
    row.push_back(to_string(m.mode()));
    t.rows.push_back(row);
  }
  return t;
}

}  // namespace einfib
