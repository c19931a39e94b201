#pragma once

#include "einfib/root_system.hpp"

#include <memory>
#include <string>
#include <vector>

namespace einfib {

/// Sorted, duplicate-free root indices of one RootSystem.
using RootSet = std::vector<std::size_t>;

RootSet make_root_set(std::vector<std::size_t> indices);
bool contains(const RootSet& set, std::size_t root);
RootSet set_union(const RootSet& a, const RootSet& b);
RootSet set_difference(const RootSet& a, const RootSet& b);
RootSet all_roots(const RootSystem& system);

/// Simple ideal of a regular subalgebra, with its base in Bourbaki order.
struct Ideal {
  SimpleType type;
  RootSet roots;
  std::vector<std::size_t> simple;
};

struct RegularSubalgebra {
  RootSet roots;
  int torus_corank = 0;
  std::vector<Ideal> ideals;
};

/// Roots of `subset` positive for the ambient ordering.
RootSet positive_part(const RootSystem& system, const RootSet& subset);
/// Base of the closed subsystem `subset` induced by the ambient positive system.
std::vector<std::size_t> simple_roots_of(const RootSystem& system, const RootSet& subset);
/// Names an irreducible subsystem and orders its base as in Bourbaki.
Ideal identify_ideal(const RootSystem& system, const RootSet& irreducible);
/// Coefficients of `root` with respect to the ideal's ordered base.
std::vector<int> coefficients_in(const RootSystem& system, const Ideal& ideal, std::size_t root);

/// Splits a closed, symmetric subset into simple ideals and names them.
RegularSubalgebra subsystem_from_roots(const RootSystem& system, const RootSet& subset);

/// Subalgebra generated by the extended-diagram nodes that remain after deletion.
/// Node 0 is the lowest root, nodes 1..rank are the Bourbaki simple roots.
RegularSubalgebra borel_de_siebenthal(const RootSystem& system, const std::vector<int>& deleted_nodes);
/// Centralizer of the torus dual to the deleted ordinary nodes (1..rank).
RegularSubalgebra torus_centralizer(const RootSystem& system, const std::vector<int>& deleted_nodes);
/// Roots of the ideal whose coefficient at `node` (1-based, Bourbaki) is even.
/// Mark-2 nodes give the maximal-rank symmetric subalgebra, mark-1 nodes a torus centralizer.
RootSet even_at_node(const RootSystem& system, const Ideal& ideal, int node);

/// Connected components of `target` under steps by roots of `l_roots`.
std::vector<RootSet> module_components(const RootSystem& system, const RootSet& l_roots, const RootSet& target);

/// True iff sums of two roots of `ambient` outside `sub` that lie in `ambient` land in `sub`.
bool check_symmetric_pair(const RootSystem& system, const RootSet& ambient, const RootSet& sub);

/// A printed summand of k that is properly broken by l.
struct VerticalFactor {
  std::string name;  // e.g. "so_9", "su_2"
  SimpleType type;   // identity of the summand, such as D2 for so_4
  RootSet roots;
};

struct TripleDecomposition {
  std::shared_ptr<const RootSystem> g;
  RegularSubalgebra k;
  RegularSubalgebra l;
  std::vector<VerticalFactor> factors;
  std::vector<RootSet> p_parts;
  RootSet n_roots;
  std::vector<RootSet> n_components;
};

/// Builds and checks the decomposition g = l + p_1 + ... + p_s + n.
TripleDecomposition make_triple(std::shared_ptr<const RootSystem> g, const RootSet& k_roots,
                                const RootSet& l_roots, std::vector<VerticalFactor> factors);

}  // namespace einfib
