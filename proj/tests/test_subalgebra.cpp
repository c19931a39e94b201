#include "einfib/casimir.hpp"
#include "einfib/catalog.hpp"
#include "einfib/subalgebra.hpp"

#include <gtest/gtest.h>

#include <algorithm>

namespace einfib {
namespace {

std::vector<std::string> ideal_names(const RegularSubalgebra& sub) {
  std::vector<std::string> out;
  for (const auto& i : sub.ideals) out.push_back(i.type.name());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Rational> b_set_of(const std::string& id, const Params& params = {}) {
  CasimirReport rep = casimir_report(instantiate(find_triple(id), params));
  return rep.b_set(0);
}

TEST(BorelDeSiebenthal, G2MiddleNode) {
  RootSystem rs = RootSystem::build({Family::G, 2});
  RegularSubalgebra k = borel_de_siebenthal(rs, {2});
  ASSERT_EQ(ideal_names(k), (std::vector<std::string>{"A1", "A1"}));
  EXPECT_EQ(k.torus_corank, 0);
  bool long_a1 = false, short_a1 = false;
  for (const auto& i : k.ideals) (rs.is_long(i.roots.front()) ? long_a1 : short_a1) = true;
  EXPECT_TRUE(long_a1);
  EXPECT_TRUE(short_a1);
  EXPECT_TRUE(check_symmetric_pair(rs, all_roots(rs), k.roots));
}

TEST(BorelDeSiebenthal, E8ToE7PlusA1) {
  RootSystem rs = RootSystem::build({Family::E, 8});
  RegularSubalgebra k = borel_de_siebenthal(rs, {8});
  ASSERT_EQ(ideal_names(k), (std::vector<std::string>{"A1", "E7"}));
  std::vector<std::size_t> sizes;
  for (const auto& i : k.ideals) sizes.push_back(i.roots.size());
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{2, 126}));
}

TEST(BorelDeSiebenthal, InvalidNodeRejected) {
  RootSystem rs = RootSystem::build({Family::G, 2});
  EXPECT_THROW(borel_de_siebenthal(rs, {3}), std::invalid_argument);
  EXPECT_THROW(borel_de_siebenthal(rs, {-1}), std::invalid_argument);
}

TEST(TorusCentralizer, SuNDeleteOneNode) {
  // su_5: deleting node 2 leaves su_2 + su_3 + R
  RootSystem rs = RootSystem::build({Family::A, 4});
  RegularSubalgebra k = torus_centralizer(rs, {2});
  EXPECT_EQ(ideal_names(k), (std::vector<std::string>{"A1", "A2"}));
  EXPECT_EQ(k.torus_corank, 1);
  EXPECT_TRUE(check_symmetric_pair(rs, all_roots(rs), k.roots));
}

TEST(SubsystemFromRoots, B4InsideF4) {
  RootSystem rs = RootSystem::build({Family::F, 4});
  RootSet b4 = borel_de_siebenthal(rs, {4}).roots;
  RegularSubalgebra k = subsystem_from_roots(rs, b4);
  ASSERT_EQ(ideal_names(k), (std::vector<std::string>{"B4"}));
  EXPECT_EQ(k.roots.size(), 32u);
  EXPECT_EQ(k.torus_corank, 0);
  EXPECT_EQ(set_difference(all_roots(rs), b4).size(), 16u);
}

TEST(SubsystemFromRoots, EmptySubset) {
  RootSystem rs = RootSystem::build({Family::B, 3});
  RegularSubalgebra k = subsystem_from_roots(rs, {});
  EXPECT_TRUE(k.ideals.empty());
  EXPECT_EQ(k.torus_corank, 3);
}

TEST(SubsystemFromRoots, FullRootSet) {
  RootSystem rs = RootSystem::build({Family::F, 4});
  RegularSubalgebra k = subsystem_from_roots(rs, all_roots(rs));
  ASSERT_EQ(k.ideals.size(), 1u);
  EXPECT_EQ(k.ideals[0].type, (SimpleType{Family::F, 4}));
  EXPECT_EQ(k.torus_corank, 0);
}

TEST(SubsystemFromRoots, NonClosedSubsetRejected) {
  RootSystem rs = RootSystem::build({Family::A, 2});
  std::size_t a = rs.simple_roots()[0], b = rs.simple_roots()[1];
  RootSet open = make_root_set({a, rs.negative(a), b, rs.negative(b)});
  EXPECT_THROW(subsystem_from_roots(rs, open), std::invalid_argument);
  EXPECT_THROW(subsystem_from_roots(rs, make_root_set({a})), std::invalid_argument);
}

TEST(ModuleComponents, G2TypeITripleHasSingleB) {
  EXPECT_EQ(b_set_of("cpg21"), (std::vector<Rational>{Rational(1, 8)}));
}

TEST(ModuleComponents, DegenerateLEqualsKSymmetricPair) {
  RootSystem rs = RootSystem::build({Family::F, 4});
  RootSet k = borel_de_siebenthal(rs, {4}).roots;
  auto comps = module_components(rs, k, set_difference(all_roots(rs), k));
  EXPECT_EQ(comps.size(), 1u);
}

TEST(ModuleComponents, F4TwoDistinctBValues) {
  EXPECT_EQ(b_set_of("cpf43"), (std::vector<Rational>{Rational(2, 9), Rational(1, 4)}));
}

TEST(ModuleComponents, OverlapWithLRejected) {
  RootSystem rs = RootSystem::build({Family::G, 2});
  RootSet k = borel_de_siebenthal(rs, {2}).roots;
  EXPECT_THROW(module_components(rs, k, all_roots(rs)), std::invalid_argument);
}

TEST(ModuleComponents, ComponentsAreInvariantOverSweep) {
  for (const auto& spec : catalog()) {
    for (const auto& params : spec.sweep(7)) {
      TripleDecomposition t = instantiate(spec, params);
      const RootSystem& g = *t.g;
      for (const auto& comp : t.n_components)
        for (std::size_t phi : comp)
          for (std::size_t a : t.l.roots) {
            auto sum = g.sum(phi, a);
            if (sum && contains(t.n_roots, *sum))
              ASSERT_TRUE(contains(comp, *sum)) << spec.id << " " << format_params(params);
          }
    }
  }
}

TEST(CheckSymmetricPair, G2BorelDeSiebenthal) {
  RootSystem rs = RootSystem::build({Family::G, 2});
  EXPECT_TRUE(check_symmetric_pair(rs, all_roots(rs), borel_de_siebenthal(rs, {2}).roots));
}

TEST(CheckSymmetricPair, A2WithOneSimpleRootA1) {
  RootSystem rs = RootSystem::build({Family::A, 2});
  std::size_t a = rs.simple_roots()[0];
  EXPECT_FALSE(check_symmetric_pair(rs, all_roots(rs), make_root_set({a, rs.negative(a)})));
}

TEST(CheckSymmetricPair, WholeAlgebra) {
  RootSystem rs = RootSystem::build({Family::E, 6});
  EXPECT_TRUE(check_symmetric_pair(rs, all_roots(rs), all_roots(rs)));
}

TEST(CheckSymmetricPair, NonSymmetricSubalgebraDetected) {
  // su_2 + su_2 + R inside su_5 is not the centralizer of an involution
  RootSystem rs = RootSystem::build({Family::A, 4});
  EXPECT_FALSE(check_symmetric_pair(rs, all_roots(rs), torus_centralizer(rs, {2, 3}).roots));
}

TEST(TripleDecompositionProperty, SymmetricClosureOverSweep) {
  for (const auto& spec : catalog()) {
    for (const auto& params : spec.sweep(7)) {
      TripleDecomposition t = instantiate(spec, params);
      const RootSystem& g = *t.g;
      ASSERT_TRUE(check_symmetric_pair(g, all_roots(g), t.k.roots)) << spec.id << " " << format_params(params);
      ASSERT_TRUE(check_symmetric_pair(g, t.k.roots, t.l.roots)) << spec.id << " " << format_params(params);
      RootSet p_union;
      for (const auto& p : t.p_parts) p_union = set_union(p_union, p);
      ASSERT_EQ(p_union, set_difference(t.k.roots, t.l.roots));
      ASSERT_EQ(t.n_roots, set_difference(all_roots(g), t.k.roots));
    }
  }
}

}  // namespace
}  // namespace einfib
