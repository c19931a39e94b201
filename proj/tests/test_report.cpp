#include "einfib/report.hpp"

#include <gtest/gtest.h>

#include <cstdlib>

namespace einfib {
namespace {

TEST(Expression, Arithmetic) {
  Params v{{"n", 5}, {"p", 2}, {"l", 3}};
  EXPECT_EQ(evaluate_expression("(2*l-1)/(2*(l-1))", v), Rational(5, 4));
  EXPECT_EQ(evaluate_expression("n^2+1-4*l*n", v), Rational(-34));
  EXPECT_EQ(evaluate_expression("-p/(n-1)", v), Rational(-1, 2));
  EXPECT_THROW(evaluate_expression("q+1", v), std::invalid_argument);
  EXPECT_THROW(evaluate_expression("n/(p-2)", v), std::domain_error);
  EXPECT_THROW(evaluate_expression("(n+1", v), std::invalid_argument);
}

TEST(Expression, Conditions) {
  Params v{{"n", 8}, {"p", 4}, {"l", 2}};
  EXPECT_TRUE(evaluate_condition("p == 2*l", v));
  EXPECT_FALSE(evaluate_condition("n-p != 2*l", v));
  EXPECT_TRUE(evaluate_condition("n >= 8", v));
  EXPECT_TRUE(evaluate_conditions(Json::array({"p < n", "l > 1"}), v));
  EXPECT_FALSE(evaluate_conditions(Json::array({"p < n", "l > 2"}), v));
  EXPECT_TRUE(evaluate_conditions(Json(), v));
}

TEST(AlgebraShape, LowRankIdentifications) {
  Params v{{"n", 3}};
  EXPECT_EQ(shape_of(Json::parse(R"([{"so": "2*n"}])"), v), shape_of(SimpleType{Family::A, 3}));
  EXPECT_EQ(to_string(shape_of(Json::parse(R"([{"so": "4"}, {"R": "1"}])"), v)), "A1+A1+R");
  EXPECT_EQ(shape_of(SimpleType{Family::B, 2}), shape_of(SimpleType{Family::C, 2}));
}

TEST(GoldenValues, SurdCell) {
  auto v = golden_values(Json::parse(R"({"num": "6", "rad": "11", "den": "5"})"), {});
  ASSERT_EQ(v.size(), 2u);
  EXPECT_EQ(v[0], QuadraticSurd::from_parts(6, -1, 11, 5));
  EXPECT_EQ(v[1], QuadraticSurd::from_parts(6, 1, 11, 5));
}

TEST(RegenerateTable, DualCoxeter) {
  TableDiff d = regenerate_table("tabcoxeter");
  EXPECT_TRUE(d.printed_match());
  EXPECT_GT(d.cells.size(), 0u);
}

TEST(RegenerateTable, TypeIExceptionalMatchesExactly) {
  TableDiff d = regenerate_table("mIexc");
  for (const auto* c : d.select(CellStatus::Annotated)) ADD_FAILURE() << c->row << " " << c->column << ": printed "
                                                                       << c->expected << ", computed " << c->computed;
  EXPECT_TRUE(d.printed_match());
}

TEST(RegenerateTable, TypeIIGeneralFourDecimals) {
  TableDiff d = regenerate_table("tabgenII");
  for (const auto* c : d.select(CellStatus::Annotated)) ADD_FAILURE() << c->row << " " << c->params << " "
                                                                       << c->column << ": printed " << c->expected
                                                                       << ", computed " << c->computed;
  EXPECT_TRUE(d.printed_match());
}

TEST(RegenerateTable, NonBinormalRowOneAnnotated) {
  TableDiff d = regenerate_table("nonbimII");
  EXPECT_TRUE(d.pass());
  EXPECT_FALSE(d.printed_match());
  bool row_one = false;
  for (const auto* c : d.select(CellStatus::Annotated)) {
    if (c->row.find("cpdn7") == std::string::npos) continue;
    row_one = true;
    EXPECT_FALSE(c->note.empty());
  }
  EXPECT_TRUE(row_one);
}

TEST(RegenerateTable, UnknownTableReportsError) {
  EXPECT_THROW(regenerate_table("tab99"), std::invalid_argument);
}

TEST(GoldenDirectory, EnvironmentOverride) {
  const char* old = std::getenv("EINFIB_GOLDEN_DIR");
  std::string saved = old ? old : "";
  ::setenv("EINFIB_GOLDEN_DIR", "/nonexistent/golden", 1);
  EXPECT_EQ(golden_directory(), std::filesystem::path("/nonexistent/golden"));
  EXPECT_THROW(load_golden("tabcoxeter"), std::runtime_error);
  if (old)
    ::setenv("EINFIB_GOLDEN_DIR", saved.c_str(), 1);
  else
    ::unsetenv("EINFIB_GOLDEN_DIR");
  EXPECT_NO_THROW(load_golden("tabcoxeter"));
}

TEST(Serialization, SurdObject) {
  Json j = surd_json(QuadraticSurd::from_parts(6, 1, 11, 5), 4);
  EXPECT_EQ(j["a"], "6");
  EXPECT_EQ(j["s"], 1);
  EXPECT_EQ(j["d"], "11");
  EXPECT_EQ(j["c"], "5");
  EXPECT_EQ(j["decimal"], "1.8633");
}

TEST(Serialization, SolveReportRoundTripsAndIsDeterministic) {
  SolveReport rep = full_solve(find_triple("cpdn7"), {{"n", 4}, {"p", 2}});
  std::string once = solve_report_json(rep, 6).dump(2);
  EXPECT_EQ(Json::parse(once).dump(2), once);
  EXPECT_EQ(solve_report_json(full_solve(find_triple("cpdn7"), {{"n", 4}, {"p", 2}}), 6).dump(2), once);

  SolveReport iso = full_solve(find_triple("cpe75"), {{"p", 4}});
  std::string twice = solve_report_json(iso, 4).dump();
  EXPECT_EQ(Json::parse(twice).dump(), twice);
}

TEST(Render, CsvAndMarkdown) {
  TextTable t{{"a", "b"}, {{"1", "x,y"}, {"2", "z"}}};
  EXPECT_EQ(render(t, Format::Csv), "a,b\n1,\"x,y\"\n2,z\n");
  EXPECT_EQ(render(t, Format::Markdown), "| a | b |\n| --- | --- |\n| 1 | x,y |\n| 2 | z |\n");
  EXPECT_THROW(parse_format("xml"), std::invalid_argument);
}

}  // namespace
}  // namespace einfib
