#include "einfib/report.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <iostream>
#include <set>
#include <sstream>

using namespace einfib;

namespace {

enum Exit { Ok = 0, VerificationFailed = 1, UsageError = 2, DomainFailure = 3 };

/// Error with a machine-readable reason and the exit status it maps to.
struct CommandError : std::runtime_error {
  CommandError(std::string reason, const std::string& message, int status)
      : std::runtime_error(message), reason(std::move(reason)), status(status) {}
  std::string reason;
  int status;
};

struct Options {
  std::string command;
  std::string target;
  std::string params;
  std::vector<std::string> metric;
  std::string format = "json";
  int precision = 4;
  int sweep_max = 10;
};

void emit(const Json& doc, const TextTable& text, Format format) {
  if (format == Format::Json) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << render(text, format);
  }
}

const TripleSpec& lookup(const std::string& id) {
  if (id.empty()) throw CommandError("missing-triple", "a triple id is required", UsageError);
  try {
    return find_triple(id);
  } catch (const UnknownTriple& e) {
    throw CommandError("unknown-triple", e.what(), DomainFailure);
  }
}

Params resolve_params(const TripleSpec& spec, const std::string& text) {
  Params params;
  try {
    params = parse_params(text);
  } catch (const std::invalid_argument& e) {
    throw CommandError("malformed-params", e.what(), UsageError);
  }
  if (params.empty() && !spec.is_classical() && spec.fixed_params.size() == 1) return spec.fixed_params.front();
  std::set<std::string> want(spec.params.begin(), spec.params.end());
  std::set<std::string> got;
  for (const auto& [k, v] : params) got.insert(k);
  if (want != got) {
    std::string names;
    for (const auto& n : spec.params) names += (names.empty() ? "" : ",") + n;
    throw CommandError("domain", spec.id + " takes parameters {" + names + "}", DomainFailure);
  }
  if (auto violation = spec.check(params)) {
    throw CommandError("domain", spec.id + " " + format_params(params) + ": " + *violation, DomainFailure);
  }
  return params;
}

// Metric certificates: rationals, + - * /, parentheses and sqrt(...) of a rational.
class SurdParser {
 public:
  explicit SurdParser(std::string text) : text_(std::move(text)) {}
  QuadraticSurd parse() {
    QuadraticSurd v = sum();
    skip();
    if (pos_ != text_.size()) fail();
    return v;
  }

 private:
  [[noreturn]] void fail() const {
    throw CommandError("malformed-certificate", "cannot read metric value '" + text_ + "'", UsageError);
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
  QuadraticSurd sum() {
    QuadraticSurd v = product();
    for (;;) {
      if (eat('+')) v += product();
      else if (eat('-')) v -= product();
      else return v;
    }
  }
  QuadraticSurd product() {
    QuadraticSurd v = unary();
    for (;;) {
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        QuadraticSurd d = unary();
        if (d.sign() == 0) fail();
        v /= d;
      } else {
        return v;
      }
    }
  }
  QuadraticSurd unary() {
    if (eat('-')) return -unary();
    return atom();
  }
  QuadraticSurd atom() {
    skip();
    if (eat('(')) {
      QuadraticSurd v = sum();
      if (!eat(')')) fail();
      return v;
    }
    if (text_.compare(pos_, 4, "sqrt") == 0) {
      pos_ += 4;
      if (!eat('(')) fail();
      QuadraticSurd inner = sum();
      if (!eat(')') || !inner.is_rational() || inner.sign() < 0) fail();
      return QuadraticSurd::sqrt(inner.rational_part());
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail();
    return QuadraticSurd(Rational(Integer(text_.substr(start, pos_ - start))));
  }

  std::string text_;
  std::size_t pos_ = 0;
};

/// Reads "X=3/2" or "X1=a,X2=b" (repeated --metric flags are concatenated).
std::vector<MetricValue> parse_metric(const std::vector<std::string>& items, std::size_t s) {
  std::map<std::string, std::string> named;
  for (const auto& raw : items) {
    std::string item = raw;
    std::size_t start = 0;
    // split on commas outside parentheses
    int depth = 0;
    for (std::size_t i = 0; i <= item.size(); ++i) {
      if (i < item.size() && item[i] == '(') ++depth;
      if (i < item.size() && item[i] == ')') --depth;
      if (i == item.size() || (item[i] == ',' && depth == 0)) {
        std::string part = item.substr(start, i - start);
        start = i + 1;
        if (part.empty()) continue;
        auto eq = part.find('=');
        if (eq == std::string::npos) {
          throw CommandError("malformed-certificate", "expected NAME=VALUE in '" + part + "'", UsageError);
        }
        named[part.substr(0, eq)] = part.substr(eq + 1);
      }
    }
  }
  std::vector<MetricValue> out;
  for (std::size_t a = 0; a < s; ++a) {
    std::vector<std::string> keys = {"X" + std::to_string(a + 1)};
    if (s == 1) keys.push_back("X");
    std::string value;
    for (const auto& k : keys) {
      if (named.count(k)) value = named[k];
    }
    if (value.empty()) {
      throw CommandError("malformed-certificate", "missing value for " + keys.back(), UsageError);
    }
    QuadraticSurd v;
    try {
      v = SurdParser(value).parse();
    } catch (const std::domain_error&) {
      throw CommandError("malformed-certificate", "mixed square roots in '" + value + "'", UsageError);
    }
    if (v.sign() <= 0) throw CommandError("malformed-certificate", "metric values must be positive", UsageError);
    out.emplace_back(v);
  }
  if (named.size() != s) throw CommandError("malformed-certificate", "expected " + std::to_string(s) + " metric values", UsageError);
  return out;
}

int cmd_list(const Options& o, Format format) {
  Json doc = Json::array();
  TextTable text{{"id", "table", "fiber", "g", "k", "l", "params"}, {}};
  for (const auto& spec : catalog()) {
    if (!o.target.empty() && spec.id != o.target) continue;
    Json j;
    j["id"] = spec.id;
    j["table"] = spec.table;
    j["fiber"] = spec.fiber == FiberType::I ? "I" : "II";
    j["g"] = spec.g_label;
    j["k"] = spec.k_label;
    j["l"] = spec.l_label;
    Json names = Json::array();
    for (const auto& n : spec.params) names.push_back(n);
    j["params"] = names;
    std::string instances;
    if (!o.target.empty()) {
      Json inst = Json::array();
      for (const auto& p : spec.sweep(o.sweep_max)) {
        inst.push_back(format_params(p));
        instances += (instances.empty() ? "" : "; ") + format_params(p);
      }
      j["instances"] = inst;
    }
    doc.push_back(j);
    std::string pn;
    for (const auto& n : spec.params) pn += (pn.empty() ? "" : ",") + n;
    text.rows.push_back({spec.id, spec.table, j["fiber"].get<std::string>(), spec.g_label, spec.k_label, spec.l_label,
                         instances.empty() ? pn : instances});
  }
  if (!o.target.empty() && doc.empty()) lookup(o.target);
  emit(doc, text, format);
  return Ok;
}

int cmd_eigenvalues(const Options& o, Format format) {
  const TripleSpec& spec = lookup(o.target);
  Params params = resolve_params(spec, o.params);
  TripleDecomposition triple = instantiate(spec, params);
  CasimirReport report = casimir_report(triple);
  Json doc = casimir_report_json(spec, params, triple, report);
  TextTable text{{"quantity", "value"}, {}};
  for (std::size_t a = 0; a < report.s(); ++a) {
    std::string suffix = report.s() == 1 ? "" : std::to_string(a + 1);
    text.rows.push_back({"gamma" + suffix, to_string(report.gamma[a])});
    std::string set;
    for (const auto& v : report.b_set(a)) set += (set.empty() ? "" : ", ") + to_string(v);
    text.rows.push_back({"b" + suffix, set});
  }
  text.rows.push_back({"c_kn", to_string(report.c_kn)});
  text.rows.push_back({"scalarity", to_string(scalarity_test(report).verdict)});
  emit(doc, text, format);
  return Ok;
}

int cmd_solve(const Options& o, Format format) {
  const TripleSpec& spec = lookup(o.target);
  Params params = resolve_params(spec, o.params);
  SolveReport report = full_solve(spec, params);
  emit(solve_report_json(report, o.precision), solve_report_text(report, o.precision), format);
  return Ok;
}

int cmd_verify(const Options& o, Format format) {
  const TripleSpec& spec = lookup(o.target);
  Params params = resolve_params(spec, o.params);
  if (o.metric.empty()) throw CommandError("malformed-certificate", "--metric is required", UsageError);
  CasimirReport cas = casimir_report(instantiate(spec, params));
  ScalarityResult sc = scalarity_test(cas);
  if (sc.verdict != Scalarity::ScalarEach) {
    Json doc;
    doc["triple"] = spec.id;
    doc["verified"] = false;
    doc["reason"] = std::string("scalarity: ") + to_string(sc.verdict);
    emit(doc, TextTable{{"verified", "reason"}, {{"false", doc["reason"].get<std::string>()}}}, format);
    return VerificationFailed;
  }
  std::vector<Rational> b;
  for (std::size_t a = 0; a < cas.s(); ++a) b.push_back(cas.b_set(a).front());
  std::vector<MetricValue> x = parse_metric(o.metric, cas.s());
  ResidualReport res = verify_metric(cas.gamma, b, cas.r, x);
  Json doc;
  doc["triple"] = spec.id;
  doc["params"] = Json::object();
  for (const auto& [k, v] : params) doc["params"][k] = v;
  Json xs = Json::array();
  for (const auto& v : x) xs.push_back(metric_value_json(v, o.precision));
  doc["X"] = xs;
  doc["residual"] = residual_json(res);
  doc["verified"] = res.zero;
  TextTable text{{"equation", "residual"}, {}};
  for (std::size_t i = 0; i < res.residuals.size(); ++i) text.rows.push_back({std::to_string(i + 1), res.residuals[i]});
  text.rows.push_back({"verified", res.zero ? "true" : "false"});
  emit(doc, text, format);
  return res.zero ? Ok : VerificationFailed;
}

int cmd_tables(const Options& o, Format format, bool golden_suite) {
  std::vector<std::string> tables;
  if (o.target.empty()) {
    tables = table_ids();
  } else {
    const auto& ids = table_ids();
    if (std::find(ids.begin(), ids.end(), o.target) == ids.end()) {
      throw CommandError("unknown-table", "unknown table " + o.target, UsageError);
    }
    tables.push_back(o.target);
  }
  TableOptions options{o.sweep_max};
  std::vector<TableDiff> diffs;
  for (const auto& t : tables) diffs.push_back(regenerate_table(t, options));
  if (golden_suite && o.target.empty()) diffs.push_back(scalarity_diff(options));
  bool ok = std::all_of(diffs.begin(), diffs.end(), [](const TableDiff& d) { return d.pass(); });
  if (golden_suite) {
    Json doc;
    doc["status"] = ok ? "pass" : "fail";
    Json list = Json::array();
    TextTable text{{"table", "status", "matched", "annotated", "mismatched"}, {}};
    for (const auto& d : diffs) {
      Json j = table_diff_json(d);
      if (format == Format::Json) {
        Json summary;
        summary["table"] = j["table"];
        summary["status"] = j["status"];
        summary["matched"] = j["matched"];
        summary["annotated"] = j["annotated"];
        summary["mismatched"] = j["mismatched"];
        Json flagged = Json::array();
        for (const auto& c : j["cells"]) {
          if (c["status"] != "match") flagged.push_back(c);
        }
        summary["cells"] = flagged;
        list.push_back(summary);
      }
      text.rows.push_back({d.table, j["status"].get<std::string>(), std::to_string(d.count(CellStatus::Match)),
                           std::to_string(d.count(CellStatus::Annotated)), std::to_string(d.count(CellStatus::Mismatch))});
    }
    doc["tables"] = list;
    emit(doc, text, format);
  } else {
    Json doc = Json::array();
    TextTable text = table_diff_text(diffs.front());
    text.rows.clear();
    for (const auto& d : diffs) {
      doc.push_back(table_diff_json(d));
      for (const auto& c : d.cells) {
        text.rows.push_back({d.table + ": " + c.row, c.params, c.column, c.expected, c.computed, to_string(c.status), c.note});
      }
    }
    emit(doc.size() == 1 ? doc[0] : doc, text, format);
  }
  return ok ? Ok : VerificationFailed;
}

void report_error(const std::string& reason, const std::string& message) {
  Json err;
  err["error"] = reason;
  err["message"] = message;
  std::cerr << err.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Einstein metrics on bisymmetric fibrations"};
  Options o;
  app.add_option("command", o.command, "list, eigenvalues, solve, tables, verify or verify-golden")
      ->required()
      ->check(CLI::IsMember({"list", "eigenvalues", "solve", "tables", "verify", "verify-golden"}));
  app.add_option("target", o.target, "triple id, or table id for the tables command");
  app.add_option("--params", o.params, "parameter assignments such as n=4,p=2,l=1");
  app.add_option("--metric", o.metric, "metric certificate, X=3/2 or X1=...,X2=...");
  app.add_option("--format", o.format, "json, csv or md")->check(CLI::IsMember({"json", "csv", "md"}));
  app.add_option("--precision", o.precision, "decimal digits")->check(CLI::Range(0, 60));
  app.add_option("--sweep-max", o.sweep_max, "largest n for classical sweeps")->check(CLI::Range(1, 30));
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return UsageError;
  }
  try {
    Format format = parse_format(o.format);
    if (o.command == "list") return cmd_list(o, format);
    if (o.command == "eigenvalues") return cmd_eigenvalues(o, format);
    if (o.command == "solve") return cmd_solve(o, format);
    if (o.command == "verify") return cmd_verify(o, format);
    if (o.command == "tables") return cmd_tables(o, format, false);
    return cmd_tables(o, format, true);
  } catch (const CommandError& e) {
    report_error(e.reason, e.what());
    return e.status;
  } catch (const DomainError& e) {
    report_error("domain", e.what());
    return DomainFailure;
  } catch (const std::exception& e) {
    report_error("internal", e.what());
    return VerificationFailed;
  }
}
