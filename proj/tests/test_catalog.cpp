#include "einfib/casimir.hpp"
#include "einfib/catalog.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

namespace einfib {
namespace {

std::vector<std::string> ids_for(const SimpleType& g) {
  std::set<std::string> ids;
  for (const auto& inst : enumerate_triples(g)) ids.insert(inst.spec->id);
  return {ids.begin(), ids.end()};
}

TEST(EnumerateTriples, G2) {
  EXPECT_EQ(ids_for({Family::G, 2}), (std::vector<std::string>{"cpg21", "cpg22", "cpg23"}));
}

TEST(EnumerateTriples, F4) {
  EXPECT_EQ(ids_for({Family::F, 4}),
            (std::vector<std::string>{"cpf41", "cpf42", "cpf43", "cpf44", "cpf45", "cpf46"}));
  std::vector<int> ps;
  for (const auto& inst : enumerate_triples({Family::F, 4}))
    if (inst.spec->id == "cpf41") ps.push_back(inst.params.at("p"));
  std::sort(ps.begin(), ps.end());
  EXPECT_EQ(ps, (std::vector<int>{1, 3, 5, 7}));
  for (const auto& inst : enumerate_triples({Family::F, 4}))
    EXPECT_EQ(inst.spec->fiber, inst.spec->id == "cpf45" || inst.spec->id == "cpf46" ? FiberType::II : FiberType::I);
}

TEST(EnumerateTriples, A1HasNone) { EXPECT_TRUE(enumerate_triples({Family::A, 1}).empty()); }

TEST(Instantiate, SuNTypeI) {
  CasimirReport rep = casimir_report(instantiate(find_triple("cpan1"), {{"n", 4}, {"p", 2}, {"l", 1}}));
  EXPECT_EQ(rep.b_set(0), (std::vector<Rational>{Rational(1, 8)}));
}

TEST(Instantiate, E8TypeI) {
  CasimirReport rep = casimir_report(instantiate(find_triple("cpe83"), {}));
  EXPECT_EQ(rep.gamma, (std::vector<Rational>{Rational(1, 15)}));
  EXPECT_EQ(rep.b_set(0), (std::vector<Rational>{Rational(1, 60)}));
}

TEST(Instantiate, So8TypeII) {
  CasimirReport rep = casimir_report(instantiate(find_triple("cpdn7"), {{"n", 4}, {"p", 2}}));
  EXPECT_EQ(rep.gamma, (std::vector<Rational>{Rational(1, 3), Rational(1, 3)}));
  EXPECT_EQ(rep.b_set(0), (std::vector<Rational>{Rational(1, 12)}));
  EXPECT_EQ(rep.b_set(1), (std::vector<Rational>{Rational(1, 12)}));
}

TEST(Instantiate, OutOfDomainNamesConstraint) {
  try {
    instantiate(find_triple("cpan1"), {{"n", 4}, {"p", 2}, {"l", 5}});
    FAIL() << "expected a domain error";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find('l'), std::string::npos);
  }
  EXPECT_THROW(instantiate(find_triple("cpdn7"), {{"n", 4}}), DomainError);
  EXPECT_THROW(instantiate(find_triple("cpf41"), {{"p", 2}}), DomainError);
}

TEST(FindTriple, UnknownId) { EXPECT_THROW(find_triple("cpx99"), UnknownTriple); }

TEST(Classify, G2TypeI) {
  Classification c = classify(instantiate(find_triple("cpg21"), {}));
  EXPECT_EQ(c.fiber, FiberType::I);
  EXPECT_EQ(c.s, 1u);
}

TEST(Classify, G2TypeII) {
  Classification c = classify(instantiate(find_triple("cpg23"), {}));
  EXPECT_EQ(c.fiber, FiberType::II);
  EXPECT_EQ(c.s, 2u);
}

TEST(Classify, SuNTypeII) {
  Classification c = classify(instantiate(find_triple("cpan3"), {{"n", 4}, {"p", 2}, {"l", 1}, {"s", 1}}));
  EXPECT_EQ(c.fiber, FiberType::II);
  EXPECT_EQ(c.s, 2u);
}

TEST(Classify, LEqualsKRejected) {
  TripleDecomposition t = instantiate(find_triple("cpg21"), {});
  t.p_parts.clear();
  EXPECT_THROW(classify(t), std::invalid_argument);
}

TEST(CatalogProperty, FiberTypeMatchesVerticalCount) {
  for (const auto& spec : catalog()) {
    auto params = spec.sweep(8);
    ASSERT_FALSE(params.empty()) << spec.id;
    for (const auto& p : params) {
      Classification c = classify(instantiate(spec, p));
      ASSERT_EQ(c.fiber, spec.fiber) << spec.id << " " << format_params(p);
      ASSERT_EQ(c.s, spec.fiber == FiberType::I ? 1u : 2u);
    }
  }
}

TEST(CatalogProperty, ExceptionalTripleCounts) {
  // rows of the exceptional eigenvalue tables, parameter sub-cases expanded
  EXPECT_EQ(enumerate_triples({Family::G, 2}).size(), 3u);
  EXPECT_EQ(enumerate_triples({Family::F, 4}).size(), 9u);
}

TEST(ParseParams, RoundTrip) {
  Params p = parse_params("n=4,p=2,l=1");
  EXPECT_EQ(p, (Params{{"n", 4}, {"p", 2}, {"l", 1}}));
  EXPECT_EQ(parse_params(format_params(p)), p);
  EXPECT_THROW(parse_params("n=x"), std::invalid_argument);
}

}  // namespace
}  // namespace einfib
