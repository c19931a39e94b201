// Acceptance runner: `acceptance --criterion N` prints one PASS/FAIL line followed by the evidence.

#include "einfib/casimir.hpp"
#include "einfib/catalog.hpp"
#include "einfib/einstein.hpp"
#include "einfib/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

namespace einfib {
namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back(what);
    }
  }
};

constexpr std::size_t kMaxListed = 25;

/// Every cell of the table must equal the printed value; annotated cells count as failures here.
void require_printed(Outcome& out, const TableDiff& diff) {
  std::size_t off = diff.cells.size() - diff.count(CellStatus::Match);
  std::ostringstream head;
  head << diff.table << ": " << diff.count(CellStatus::Match) << "/" << diff.cells.size() << " cells equal the printed value";
  if (off == 0) {
    out.notes.push_back(head.str());
    return;
  }
  out.pass = false;
  head << ", " << diff.count(CellStatus::Annotated) << " differ but match a documented oracle, "
       << diff.count(CellStatus::Mismatch) << " differ without one";
  out.notes.push_back(head.str());
  std::size_t listed = 0;
  for (const auto& c : diff.cells) {
    if (c.status == CellStatus::Match) continue;
    if (listed++ == kMaxListed) {
      out.notes.push_back("  ... " + std::to_string(off - kMaxListed) + " more");
      break;
    }
    std::string line = "  " + c.row + (c.params.empty() ? "" : " [" + c.params + "]") + " " + c.column +
                       ": printed " + c.expected + ", computed " + c.computed;
    if (!c.note.empty()) line += " (" + c.note + ")";
    out.notes.push_back(line);
  }
}

template <typename F>
void for_each_instance(int sweep_max, F&& f) {
  for (const auto& spec : catalog())
    for (const auto& params : spec.sweep(sweep_max)) f(spec, params);
}

std::string where(const TripleSpec& spec, const Params& params) {
  return spec.id + (params.empty() ? "" : " [" + format_params(params) + "]");
}

Outcome dual_coxeter_table() {
  Outcome out;
  require_printed(out, regenerate_table("tabcoxeter"));
  return out;
}

Outcome eigenvalue_tables() {
  Outcome out;
  for (const char* t : {"eigIexc", "eigIIexc", "eigIclass", "eigIIclass"}) require_printed(out, regenerate_table(t));
  return out;
}

Outcome type_I_solutions() {
  Outcome out;
  require_printed(out, regenerate_table("mIexc"));
  require_printed(out, regenerate_table("mIclass"));
  SolveReport e8 = full_solve(find_triple("cpe88"), {});
  out.require(e8.discriminant == Rational(-2, 25) && e8.verdict == Verdict::NotExists,
              "cpe88: expected discriminant -2/25 and no metric");
  out.notes.push_back("cpe88: discriminant " + (e8.discriminant ? to_string(*e8.discriminant) : "none") + ", " +
                      to_string(e8.verdict));
  SolveReport e7 = full_solve(find_triple("cpe74"), {{"p", 6}});
  out.require(e7.discriminant && *e7.discriminant < 0 && e7.verdict == Verdict::NotExists,
              "cpe74 p=6: expected a negative discriminant and no metric");
  out.notes.push_back("cpe74 p=6: discriminant " + (e7.discriminant ? to_string(*e7.discriminant) : "none") + ", " +
                      to_string(e7.verdict));
  return out;
}

Outcome binormal_type_II() {
  Outcome out;
  require_printed(out, regenerate_table("bimII", {5}));
  for (int p = 1; p <= 10; ++p) {
    CasimirReport c = casimir_report(instantiate(find_triple("cpcn7"), {{"n", 2 * p}, {"p", p}}));
    SolveReport rep = solve_binormal_II(c.gamma[0], c.gamma[1], c.b_set(0)[0], c.b_set(1)[0], c.r);
    out.require(rep.discriminant == Rational(-1, 2 * p + 1) && rep.metrics.empty(),
                "cpcn7 p=" + std::to_string(p) + ": discriminant " +
                    (rep.discriminant ? to_string(*rep.discriminant) : "none") + ", expected " +
                    to_string(Rational(-1, 2 * p + 1)));
  }
  return out;
}

Outcome exceptional_quartics() {
  Outcome out;
  require_printed(out, regenerate_table("tabgenII"));
  SolveReport e8 = full_solve(find_triple("cpe89"), {});
  bool certified = e8.quartic && e8.metrics.empty() && e8.verdict == Verdict::NotExists &&
                   (e8.reason == Reason::NoPositiveRoots || e8.reason == Reason::ScalarityFailure);
  out.require(certified, "cpe89: expected no admissible positive solution");
  std::string detail = "cpe89: " + std::string(to_string(e8.verdict)) + " (" + to_string(e8.reason) + ")";
  if (e8.quartic) detail += ", eliminant " + e8.quartic->to_string();
  for (const auto& d : e8.discarded) detail += "; " + d;
  out.notes.push_back(detail);
  return out;
}

Outcome oracle_equivalence() {
  Outcome out;
  std::size_t instances = 0;
  for_each_instance(10, [&](const TripleSpec& spec, const Params& params) {
    ++instances;
    CasimirReport c = casimir_report(instantiate(spec, params));
    out.require(c.gamma_constant, where(spec, params) + ": root-sum gamma varies on a vertical part");
    out.require(c.gamma == c.gamma_oracle, where(spec, params) + ": Panyushev gamma differs from the root sum");
    out.require(c.c_kn_constant && c.c_kn == Rational(1, 2), where(spec, params) + ": c_{k,n} is not 1/2 on n");
  });
  out.notes.push_back(std::to_string(instances) + " catalog instances checked for gamma and c_{k,n}");

  std::vector<SimpleType> types;
  for (int n = 1; n <= 8; ++n) types.push_back({Family::A, n});
  for (int n = 2; n <= 8; ++n) types.push_back({Family::B, n});
  for (int n = 3; n <= 8; ++n) types.push_back({Family::C, n});
  for (int n = 4; n <= 8; ++n) types.push_back({Family::D, n});
  for (int n : {6, 7, 8}) types.push_back({Family::E, n});
  types.push_back({Family::F, 4});
  types.push_back({Family::G, 2});
  std::size_t roots = 0;
  for (const auto& t : types) {
    auto rs = shared_root_system(t);
    RootSet all = all_roots(*rs);
    for (std::size_t phi = 0; phi < rs->size(); ++phi, ++roots)
      out.require(gamma_rootsum(*rs, all, phi) == 1, t.name() + ": Casimir identity fails at root " + std::to_string(phi));
  }
  out.notes.push_back("Casimir identity checked on " + std::to_string(roots) + " roots of " +
                      std::to_string(types.size()) + " simple types");
  return out;
}

Outcome b_constancy() {
  Outcome out;
  std::size_t instances = 0;
  for_each_instance(10, [&](const TripleSpec& spec, const Params& params) {
    ++instances;
    CasimirReport c = casimir_report(instantiate(spec, params));
    out.require(c.b_constant_on_components(), where(spec, params) + ": b varies inside a module component");
  });
  out.notes.push_back(std::to_string(instances) + " catalog instances checked for b-constancy");
  require_printed(out, scalarity_diff());
  return out;
}

Outcome residual_certification() {
  Outcome out;
  const Rational width(1, Integer("100000000000000000000"));
  std::size_t metrics = 0;
  for_each_instance(10, [&](const TripleSpec& spec, const Params& params) {
    SolveReport rep = full_solve(spec, params);
    for (const auto& m : rep.metrics) {
      ++metrics;
      ResidualReport r = verify_metric(rep.gamma, rep.b, rep.r, m.values, width);
      if (r.zero) continue;
      std::string x;
      for (const auto& v : m.values) x += " " + v.to_decimal(8);
      out.require(false, where(spec, params) + ": residual does not vanish at X =" + x);
    }
  });
  out.notes.push_back(std::to_string(metrics) + " emitted metrics verified (exact for surds, width 1e-20 for roots)");

  CasimirReport c = casimir_report(instantiate(find_triple("cpdn7"), {{"n", 4}, {"p", 2}}));
  SolveReport general = solve_general_s2(c.gamma[0], c.gamma[1], c.b_set(0)[0], c.b_set(1)[0], c.r);
  std::vector<EinsteinMetric> oracle;
  for (int s : {-1, 1}) {
    QuadraticSurd b = QuadraticSurd::from_parts(3, s, 3, 2);
    QuadraticSurd x = QuadraticSurd::from_parts(6, s, 11, 5);
    oracle.push_back({{MetricValue(b), MetricValue(b)}, true, true});
    oracle.push_back({{MetricValue(x), MetricValue(QuadraticSurd(1) / x)}, false, false});
  }
  normalize_metrics(oracle);
  bool same = general.metrics.size() == oracle.size();
  for (std::size_t i = 0; same && i < oracle.size(); ++i)
    same = general.metrics[i].values[0] == oracle[i].values[0] && general.metrics[i].values[1] == oracle[i].values[1] &&
           general.metrics[i].is_binormal == oracle[i].is_binormal;
  out.require(same, "cpdn7 l=2: general solver does not return the binormal plus non-binormal union");
  out.notes.push_back("cpdn7 l=2: general solver returned " + std::to_string(general.metrics.size()) +
                      " metrics, oracle union has 4");

  TableDiff non = regenerate_table("nonbimII");
  bool documented = false;
  for (const auto& cell : non.cells)
    if (cell.row.find("cpdn7") != std::string::npos && cell.status == CellStatus::Annotated && !cell.note.empty())
      documented = true;
  out.require(documented, "nonbimII row 1 is not reported as a documented discrepancy");
  out.require(non.pass(), "nonbimII has cells that match neither the printed value nor a documented oracle");
  out.notes.push_back("nonbimII: " + std::to_string(non.count(CellStatus::Annotated)) +
                      " annotated cells, row 1 documented: " + (documented ? "yes" : "no"));
  return out;
}

Outcome fiber_einstein_counting() {
  Outcome out;
  for (int l = 1; l <= 4; ++l)
    for (int s = 1; s <= 4; ++s) {
      Params params{{"n", 2 * (l + s)}, {"p", 2 * l}, {"l", l}, {"s", s}};
      CasimirReport c = casimir_report(instantiate(find_triple("cpan3"), params));
      SolveReport rep = solve_fiber_einstein(c.gamma[0], c.gamma[1], c.b_set(0)[0], c.b_set(1)[0], c.r);
      std::string tag = "cpan3 [" + format_params(params) + "]";
      if (rep.metrics.size() != 1) {
        out.require(false, tag + ": " + std::to_string(rep.metrics.size()) + " metrics, expected 1");
        continue;
      }
      const auto& m = rep.metrics[0];
      out.require(m.values[0] == MetricValue(fraction(l + s, 2 * l)) && m.values[1] == MetricValue(fraction(l + s, 2 * s)),
                  tag + ": X = (" + m.values[0].to_string() + ", " + m.values[1].to_string() + ")");
      out.require(m.is_binormal == (l == s), tag + ": binormal flag " + (m.is_binormal ? "set" : "unset"));
    }
  if (out.pass) out.notes.push_back("16 instances: unique metric ((l+s)/(2l), (l+s)/(2s)), binormal iff l = s");
  return out;
}

struct Criterion {
  const char* title;
  std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {"dual Coxeter table", dual_coxeter_table},
      {"eigenvalue tables", eigenvalue_tables},
      {"type I solutions and non-existence", type_I_solutions},
      {"binormal type II", binormal_type_II},
      {"exceptional type II quartics", exceptional_quartics},
      {"oracle equivalence", oracle_equivalence},
      {"b-constancy and scalarity list", b_constancy},
      {"residual certification and branch consistency", residual_certification},
      {"fiber-Einstein counting", fiber_einstein_counting},
  };
  return all;
}

}  // namespace
}  // namespace einfib

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  int number = 0;
  app.add_option("--criterion", number, "criterion number")->required()->check(CLI::Range(1, 9));
  CLI11_PARSE(app, argc, argv);

  const auto& c = einfib::criteria()[static_cast<std::size_t>(number - 1)];
  auto start = std::chrono::steady_clock::now();
  einfib::Outcome out;
  try {
    out = c.run();
  } catch (const std::exception& e) {
    out.pass = false;
    out.notes.push_back(std::string("error: ") + e.what());
  }
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (out.pass ? "PASS" : "FAIL") << " criterion " << number << ": " << c.title << " (" << seconds << " s)\n";
  for (const auto& n : out.notes) std::cout << "  " << n << "\n";
  return out.pass ? 0 : 1;
}
