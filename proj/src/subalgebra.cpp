#include "einfib/subalgebra.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <stdexcept>

namespace einfib {

RootSet make_root_set(std::vector<std::size_t> indices) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  return indices;
}

bool contains(const RootSet& set, std::size_t root) { return std::binary_search(set.begin(), set.end(), root); }

RootSet set_union(const RootSet& a, const RootSet& b) {
  RootSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

RootSet set_difference(const RootSet& a, const RootSet& b) {
  RootSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

RootSet all_roots(const RootSystem& system) {
  RootSet out(system.size());
  std::iota(out.begin(), out.end(), std::size_t{0});
  return out;
}

RootSet positive_part(const RootSystem& system, const RootSet& subset) {
  RootSet out;
  for (auto r : subset) {
    if (system.is_positive(r)) out.push_back(r);
  }
  return out;
}

std::vector<std::size_t> simple_roots_of(const RootSystem& system, const RootSet& subset) {
  RootSet pos = positive_part(system, subset);
  std::vector<std::size_t> simple;
  for (auto r : pos) {
    bool decomposable = false;
    for (auto a : pos) {
      if (a == r) continue;
      auto diff = system.sum(r, system.negative(a));
      if (diff && contains(pos, *diff)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simple.push_back(r);
  }
  return simple;
}

namespace {

int cartan_entry(const RootSystem& g, std::size_t a, std::size_t b) {
  return static_cast<int>(2 * g.dot(a, b) / g.dot(b, b));
}

// Walks a path in the Dynkin graph starting at `start`, not stepping back to `previous`.
std::vector<std::size_t> walk(const std::vector<std::vector<std::size_t>>& adj, std::size_t start, std::size_t previous) {
  std::vector<std::size_t> path{start};
  std::size_t prev = previous;
  for (;;) {
    std::size_t cur = path.back();
    std::size_t next = adj.size();
    for (auto j : adj[cur]) {
      if (j != prev && std::find(path.begin(), path.end(), j) == path.end()) {
        next = j;
        break;
      }
    }
    if (next == adj.size()) return path;
    prev = cur;
    path.push_back(next);
  }
}

}  // namespace

Ideal identify_ideal(const RootSystem& g, const RootSet& irreducible) {
  std::vector<std::size_t> s = simple_roots_of(g, irreducible);
  const std::size_t n = s.size();
  if (n == 0) throw std::invalid_argument("empty subsystem has no simple type");
  Ideal ideal{{Family::A, static_cast<int>(n)}, irreducible, {}};
  auto pick = [&](const std::vector<std::size_t>& order) {
    std::vector<std::size_t> out;
    for (auto i : order) out.push_back(s[i]);
    return out;
  };
  if (n == 1) {
    ideal.simple = s;
    return ideal;
  }

  std::vector<std::vector<std::size_t>> adj(n);
  bool triple_bond = false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      int c = cartan_entry(g, s[i], s[j]);
      if (c != 0) adj[i].push_back(j);
      if (c == -3) triple_bond = true;
    }
  }
  long longest = 0;
  for (auto r : s) longest = std::max(longest, g.dot(r, r));
  auto is_long = [&](std::size_t i) { return g.dot(s[i], s[i]) == longest; };

  std::size_t branch = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (adj[i].size() == 3) branch = i;
    if (adj[i].size() > 3) throw std::invalid_argument("not a Dynkin diagram");
  }
  if (branch != n) {
    std::vector<std::vector<std::size_t>> arms;
    for (auto j : adj[branch]) arms.push_back(walk(adj, j, branch));
    std::stable_sort(arms.begin(), arms.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    if (arms[1].size() == 1) {
      std::vector<std::size_t> order(arms[2].rbegin(), arms[2].rend());
      order.push_back(branch);
      order.push_back(arms[0][0]);
      order.push_back(arms[1][0]);
      ideal.type = {Family::D, static_cast<int>(n)};
      ideal.simple = pick(order);
      return ideal;
    }
    // arms of lengths 1, 2, k: alpha2 is the short arm, alpha1-alpha3 the length-2 arm
    std::vector<std::size_t> order{arms[1][1], arms[0][0], arms[1][0], branch};
    order.insert(order.end(), arms[2].begin(), arms[2].end());
    ideal.type = {Family::E, static_cast<int>(n)};
    ideal.simple = pick(order);
    return ideal;
  }

  std::size_t end = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (adj[i].size() == 1) {
      end = i;
      break;
    }
  }
  if (end == n) throw std::invalid_argument("subset is not irreducible");
  std::vector<std::size_t> chain = walk(adj, end, n);
  if (chain.size() != n) throw std::invalid_argument("subset is not irreducible");
  std::size_t n_short = 0;
  for (std::size_t i = 0; i < n; ++i) n_short += is_long(i) ? 0 : 1;
  if (n_short == 0) {
    ideal.simple = pick(chain);
    return ideal;
  }
  if (triple_bond) {
    if (is_long(chain[0])) std::reverse(chain.begin(), chain.end());
    ideal.type = {Family::G, 2};
    ideal.simple = pick(chain);
    return ideal;
  }
  auto double_bond = [&](std::size_t a, std::size_t b) {
    return cartan_entry(g, s[a], s[b]) == -2 || cartan_entry(g, s[b], s[a]) == -2;
  };
  if (n == 4 && double_bond(chain[1], chain[2])) {
    if (!is_long(chain[0])) std::reverse(chain.begin(), chain.end());
    ideal.type = {Family::F, 4};
    ideal.simple = pick(chain);
    return ideal;
  }
  if (double_bond(chain[0], chain[1])) std::reverse(chain.begin(), chain.end());
  if (n == 2) {
    // B2: short root last
    if (is_long(chain[1])) std::reverse(chain.begin(), chain.end());
    ideal.type = {Family::B, 2};
  } else {
    ideal.type = {n_short == 1 ? Family::B : Family::C, static_cast<int>(n)};
  }
  ideal.simple = pick(chain);
  return ideal;
}

std::vector<int> coefficients_in(const RootSystem& g, const Ideal& ideal, std::size_t root) {
  const std::size_t r = ideal.simple.size();
  std::vector<std::vector<Rational>> m(r, std::vector<Rational>(r + 1));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) m[i][j] = g.dot(ideal.simple[i], ideal.simple[j]);
    m[i][r] = g.dot(ideal.simple[i], root);
  }
  for (std::size_t c = 0; c < r; ++c) {
    std::size_t piv = c;
    while (m[piv][c] == 0) ++piv;
    std::swap(m[piv], m[c]);
    for (std::size_t i = 0; i < r; ++i) {
      if (i == c || m[i][c] == 0) continue;
      Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j <= r; ++j) m[i][j] -= f * m[c][j];
    }
  }
  std::vector<int> out(r);
  for (std::size_t i = 0; i < r; ++i) {
    Rational v = m[i][r] / m[i][i];
    if (v.get_den() != 1) throw std::invalid_argument("root is not in the ideal's lattice");
    out[i] = static_cast<int>(v.get_num().get_si());
  }
  return out;
}

RegularSubalgebra subsystem_from_roots(const RootSystem& g, const RootSet& subset) {
  for (auto a : subset) {
    if (!contains(subset, g.negative(a))) throw std::invalid_argument("subset not closed under negation");
    for (auto b : subset) {
      auto c = g.sum(a, b);
      if (c && !contains(subset, *c)) throw std::invalid_argument("subset not closed under addition");
    }
  }
  RegularSubalgebra out;
  out.roots = subset;
  std::vector<bool> seen(g.size(), false);
  int semisimple_rank = 0;
  for (auto start : subset) {
    if (seen[start]) continue;
    std::vector<std::size_t> component{start};
    seen[start] = true;
    for (std::size_t i = 0; i < component.size(); ++i) {
      for (auto other : subset) {
        if (!seen[other] && g.dot(component[i], other) != 0) {
          seen[other] = true;
          component.push_back(other);
        }
      }
    }
    Ideal ideal = identify_ideal(g, make_root_set(component));
    semisimple_rank += ideal.type.rank;
    out.ideals.push_back(std::move(ideal));
  }
  out.torus_corank = static_cast<int>(g.simple_roots().size()) - semisimple_rank;
  return out;
}

namespace {

RootSet reflection_closure(const RootSystem& g, const std::vector<std::size_t>& generators) {
  std::vector<bool> in(g.size(), false);
  std::vector<std::size_t> found;
  for (auto r : generators) {
    if (!in[r]) {
      in[r] = true;
      found.push_back(r);
    }
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (auto s : generators) {
      long k = 2 * g.dot(found[i], s) / g.dot(s, s);
      Vector v = g.root(found[i]);
      const Vector& w = g.root(s);
      for (std::size_t c = 0; c < v.size(); ++c) v[c] -= static_cast<int>(k * w[c]);
      auto idx = g.find(v);
      if (idx && !in[*idx]) {
        in[*idx] = true;
        found.push_back(*idx);
      }
    }
  }
  return make_root_set(found);
}

}  // namespace

RegularSubalgebra borel_de_siebenthal(const RootSystem& g, const std::vector<int>& deleted_nodes) {
  const int rank = static_cast<int>(g.simple_roots().size());
  std::vector<bool> deleted(static_cast<std::size_t>(rank + 1), false);
  for (int node : deleted_nodes) {
    if (node < 0 || node > rank) throw std::invalid_argument("extended-diagram node out of range");
    deleted[static_cast<std::size_t>(node)] = true;
  }
  std::vector<std::size_t> generators;
  if (!deleted[0]) generators.push_back(g.negative(g.highest_root()));
  for (int i = 1; i <= rank; ++i) {
    if (!deleted[static_cast<std::size_t>(i)]) generators.push_back(g.simple_roots()[static_cast<std::size_t>(i - 1)]);
  }
  if (generators.empty()) return subsystem_from_roots(g, {});
  return subsystem_from_roots(g, reflection_closure(g, generators));
}

RegularSubalgebra torus_centralizer(const RootSystem& g, const std::vector<int>& deleted_nodes) {
  const int rank = static_cast<int>(g.simple_roots().size());
  for (int node : deleted_nodes) {
    if (node < 1 || node > rank) throw std::invalid_argument("diagram node out of range");
  }
  RootSet keep;
  for (std::size_t r = 0; r < g.size(); ++r) {
    bool zero = true;
    for (int node : deleted_nodes) zero = zero && g.coefficients(r)[static_cast<std::size_t>(node - 1)] == 0;
    if (zero) keep.push_back(r);
  }
  return subsystem_from_roots(g, keep);
}

RootSet even_at_node(const RootSystem& g, const Ideal& ideal, int node) {
  if (node < 1 || node > ideal.type.rank) throw std::invalid_argument("node out of range for ideal " + ideal.type.name());
  RootSet out;
  for (auto r : ideal.roots) {
    if (coefficients_in(g, ideal, r)[static_cast<std::size_t>(node - 1)] % 2 == 0) out.push_back(r);
  }
  return out;
}

std::vector<RootSet> module_components(const RootSystem& g, const RootSet& l_roots, const RootSet& target) {
  for (auto r : target) {
    if (contains(l_roots, r)) throw std::invalid_argument("target overlaps the subalgebra");
  }
  std::vector<bool> seen(g.size(), false);
  std::vector<RootSet> out;
  for (auto start : target) {
    if (seen[start]) continue;
    std::vector<std::size_t> component{start};
    seen[start] = true;
    for (std::size_t i = 0; i < component.size(); ++i) {
      for (auto a : l_roots) {
        auto next = g.sum(component[i], a);
        if (next && !seen[*next] && contains(target, *next)) {
          seen[*next] = true;
          component.push_back(*next);
        }
      }
    }
    out.push_back(make_root_set(component));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool check_symmetric_pair(const RootSystem& g, const RootSet& ambient, const RootSet& sub) {
  RootSet outside = set_difference(ambient, sub);
  for (auto a : outside) {
    for (auto b : outside) {
      auto c = g.sum(a, b);
      if (c && contains(ambient, *c) && !contains(sub, *c)) return false;
    }
  }
  return true;
}

TripleDecomposition make_triple(std::shared_ptr<const RootSystem> g, const RootSet& k_roots, const RootSet& l_roots,
                                std::vector<VerticalFactor> factors) {
  TripleDecomposition t;
  const RootSet everything = all_roots(*g);
  t.k = subsystem_from_roots(*g, k_roots);
  t.l = subsystem_from_roots(*g, l_roots);
  if (!std::includes(k_roots.begin(), k_roots.end(), l_roots.begin(), l_roots.end()))
    throw std::invalid_argument("l is not contained in k");
  RootSet covered;
  for (const auto& f : factors) {
    RootSet part = set_difference(f.roots, l_roots);
    if (part.empty()) throw std::invalid_argument("factor " + f.name + " is not broken by l");
    if (!set_difference(part, k_roots).empty()) throw std::invalid_argument("factor " + f.name + " is not inside k");
    if (!set_difference(covered, set_difference(covered, part)).empty())
      throw std::invalid_argument("vertical parts overlap");
    covered = set_union(covered, part);
    t.p_parts.push_back(std::move(part));
  }
  if (covered != set_difference(k_roots, l_roots)) throw std::invalid_argument("vertical parts do not exhaust k minus l");
  if (!check_symmetric_pair(*g, everything, k_roots)) throw std::invalid_argument("(g, k) is not a symmetric pair");
  if (!check_symmetric_pair(*g, k_roots, l_roots)) throw std::invalid_argument("(k, l) is not a symmetric pair");
  t.n_roots = set_difference(everything, k_roots);
  t.n_components = module_components(*g, l_roots, t.n_roots);
  t.factors = std::move(factors);
  t.g = std::move(g);
  return t;
}

}  // namespace einfib
