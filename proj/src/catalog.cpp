#include "einfib/catalog.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace einfib {

std::shared_ptr<const RootSystem> shared_root_system(const SimpleType& type) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const RootSystem>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_pair(static_cast<int>(type.family), type.rank);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto system = std::make_shared<const RootSystem>(RootSystem::build(type));
  cache.emplace(key, system);
  return system;
}

std::string format_params(const Params& params) {
  std::string out;
  for (const auto& [k, v] : params) {
    if (!out.empty()) out += ",";
    out += k + "=" + std::to_string(v);
  }
  return out;
}

Params parse_params(const std::string& text) {
  Params out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size())
      throw std::invalid_argument("malformed parameter '" + item + "'");
    std::string key = item.substr(0, eq);
    std::string value = item.substr(eq + 1);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(value, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("parameter " + key + " is not an integer");
    }
    if (used != value.size()) throw std::invalid_argument("parameter " + key + " is not an integer");
    out[key] = v;
  }
  return out;
}

namespace {

struct Constraint {
  std::string text;
  std::function<bool(const Params&)> holds;
};

std::function<std::optional<std::string>(const Params&)> constraints(std::vector<std::string> names,
                                                                     std::vector<Constraint> list) {
  return [names = std::move(names), list = std::move(list)](const Params& p) -> std::optional<std::string> {
    for (const auto& n : names) {
      if (!p.count(n)) return "missing parameter " + n;
    }
    for (const auto& [k, v] : p) {
      if (std::find(names.begin(), names.end(), k) == names.end()) return "unexpected parameter " + k;
    }
    for (const auto& c : list) {
      if (!c.holds(p)) return c.text;
    }
    return std::nullopt;
  };
}

int at(const Params& p, const char* key) { return p.at(key); }

// ---- exceptional rows: parity subalgebras in Bourbaki numbering ----

struct Cut {
  Family family;
  int rank;
  std::optional<bool> long_roots;  // distinguishes the two A1 ideals of g2
  int node;
  std::string name;
};

TripleDecomposition build_exceptional(const SimpleType& type, int k_node, const std::vector<Cut>& cuts) {
  auto g = shared_root_system(type);
  Ideal whole = identify_ideal(*g, all_roots(*g));
  RegularSubalgebra k = subsystem_from_roots(*g, even_at_node(*g, whole, k_node));
  RootSet l_roots = k.roots;
  std::vector<VerticalFactor> factors;
  std::vector<bool> used(k.ideals.size(), false);
  const long g_long = g->dot(g->highest_root(), g->highest_root());
  for (const auto& cut : cuts) {
    std::size_t chosen = k.ideals.size();
    for (std::size_t i = 0; i < k.ideals.size(); ++i) {
      const Ideal& ideal = k.ideals[i];
      if (used[i] || ideal.type != SimpleType{cut.family, cut.rank}) continue;
      if (cut.long_roots) {
        long longest = 0;
        for (auto r : ideal.roots) longest = std::max(longest, g->dot(r, r));
        if ((longest == g_long) != *cut.long_roots) continue;
      }
      chosen = i;
      break;
    }
    if (chosen == k.ideals.size()) throw std::logic_error("recipe names a missing ideal of k");
    used[chosen] = true;
    const Ideal& ideal = k.ideals[chosen];
    RootSet kept = even_at_node(*g, ideal, cut.node);
    l_roots = set_difference(l_roots, set_difference(ideal.roots, kept));
    factors.push_back({cut.name, ideal.type, ideal.roots});
  }
  return make_triple(g, k.roots, l_roots, std::move(factors));
}

// ---- classical rows: coordinate blocks in the standard frames ----

enum class BlockKind {
  Full,      // every root supported in the block: so_{2m+1} in B_n, sp_m in C_n
  Pairs,     // +-e_i +- e_j: so_{2m}
  Unitary,   // e_i - e_j: u_m
};

struct Block {
  BlockKind kind;
  int begin;
  int end;
};

bool in_block(const Vector& v, const Block& b) {
  int support = 0;
  int sign_product = 1;
  for (int i = 0; i < static_cast<int>(v.size()); ++i) {
    if (v[static_cast<std::size_t>(i)] == 0) continue;
    if (i < b.begin || i >= b.end) return false;
    ++support;
    sign_product *= v[static_cast<std::size_t>(i)] > 0 ? 1 : -1;
  }
  switch (b.kind) {
    case BlockKind::Full:
      return support > 0;
    case BlockKind::Pairs:
      return support == 2;
    case BlockKind::Unitary:
      return support == 2 && sign_product < 0;
  }
  return false;
}

RootSet block_roots(const RootSystem& g, const std::vector<Block>& blocks) {
  RootSet out;
  for (std::size_t r = 0; r < g.size(); ++r) {
    for (const auto& b : blocks) {
      if (in_block(g.root(r), b)) {
        out.push_back(r);
        break;
      }
    }
  }
  return out;
}

struct BlockFactor {
  std::string name;
  SimpleType type;
  Block block;
};

TripleDecomposition build_classical(const SimpleType& type, const std::vector<Block>& k, const std::vector<Block>& l,
                                    const std::vector<BlockFactor>& broken) {
  auto g = shared_root_system(type);
  std::vector<VerticalFactor> factors;
  for (const auto& f : broken) factors.push_back({f.name, f.type, block_roots(*g, {f.block})});
  return make_triple(g, block_roots(*g, k), block_roots(*g, l), std::move(factors));
}

SimpleType su(int m) { return {Family::A, m - 1}; }
SimpleType so_odd(int m) { return {Family::B, m}; }  // so_{2m+1}
SimpleType so_even(int m) { return {Family::D, m}; }  // so_{2m}
SimpleType sp(int m) { return {Family::C, m}; }

std::vector<TripleSpec> make_catalog() {
  std::vector<TripleSpec> out;
  using P = const Params&;
  auto full = [](int a, int b) { return Block{BlockKind::Full, a, b}; };
  auto pairs = [](int a, int b) { return Block{BlockKind::Pairs, a, b}; };
  auto unitary = [](int a, int b) { return Block{BlockKind::Unitary, a, b}; };

  // ---------- exceptional, Type I and II ----------
  auto exceptional = [&](std::string id, std::string table, Family fam, int rank, FiberType fiber, std::string k_label,
                         std::string l_label, int k_node, std::vector<std::string> names,
                         std::vector<Params> values, std::function<std::vector<Cut>(P)> cuts) {
    TripleSpec s;
    s.id = std::move(id);
    s.table = std::move(table);
    s.family = fam;
    s.fixed_rank = rank;
    s.params = names;
    s.fiber = fiber;
    SimpleType type{fam, rank};
    s.g_label = type.name();
    s.k_label = std::move(k_label);
    s.l_label = std::move(l_label);
    s.fixed_params = values;
    s.check = [names, values](P p) -> std::optional<std::string> {
      for (const auto& n : names) {
        if (!p.count(n)) return "missing parameter " + n;
      }
      if (std::find(values.begin(), values.end(), p) == values.end()) {
        std::string allowed;
        for (const auto& v : values) allowed += (allowed.empty() ? "" : " | ") + format_params(v);
        return "parameters must be one of: " + (allowed.empty() ? std::string("(none)") : allowed);
      }
      return std::nullopt;
    };
    s.build = [type, k_node, cuts](P p) { return build_exceptional(type, k_node, cuts(p)); };
    out.push_back(std::move(s));
  };
  auto none = std::vector<Params>{Params{}};
  auto range = [](const char* name, std::vector<int> values) {
    std::vector<Params> v;
    for (int x : values) v.push_back(Params{{name, x}});
    return v;
  };
  const auto I = FiberType::I;
  const auto II = FiberType::II;
  const auto A = Family::A;
  const auto B = Family::B;
  const auto C = Family::C;
  const auto D = Family::D;
  const auto E = Family::E;

  exceptional("cpf41", "eigIexc", Family::F, 4, I, "so_9", "so_p+so_(9-p)", 4, {"p"}, range("p", {1, 3, 5, 7}),
              [](P p) { return std::vector<Cut>{{B, 4, {}, (9 - at(p, "p")) / 2, "so_9"}}; });
  exceptional("cpf42", "eigIexc", Family::F, 4, I, "sp_3+su_2", "sp_3+R", 1, {}, none,
              [](P) { return std::vector<Cut>{{A, 1, {}, 1, "su_2"}}; });
  exceptional("cpf43", "eigIexc", Family::F, 4, I, "sp_3+su_2", "u_3+su_2", 1, {}, none,
              [](P) { return std::vector<Cut>{{C, 3, {}, 3, "sp_3"}}; });
  exceptional("cpf44", "eigIexc", Family::F, 4, I, "sp_3+su_2", "sp_2+su_2+su_2", 1, {}, none,
              [](P) { return std::vector<Cut>{{C, 3, {}, 1, "sp_3"}}; });
  exceptional("cpf45", "eigIIexc", Family::F, 4, II, "sp_3+su_2", "u_3+R", 1, {}, none,
              [](P) { return std::vector<Cut>{{C, 3, {}, 3, "sp_3"}, {A, 1, {}, 1, "su_2"}}; });
  exceptional("cpf46", "eigIIexc", Family::F, 4, II, "sp_3+su_2", "su_2+sp_2+R", 1, {}, none,
              [](P) { return std::vector<Cut>{{C, 3, {}, 1, "sp_3"}, {A, 1, {}, 1, "su_2"}}; });

  exceptional("cpg21", "eigIexc", Family::G, 2, I, "su_2+su_2", "R+su_2", 2, {}, none,
              [](P) { return std::vector<Cut>{{A, 1, true, 1, "su_2"}}; });
  exceptional("cpg22", "eigIexc", Family::G, 2, I, "su_2+su_2", "su_2+R", 2, {}, none,
              [](P) { return std::vector<Cut>{{A, 1, false, 1, "su_2"}}; });
  exceptional("cpg23", "eigIIexc", Family::G, 2, II, "su_2+su_2", "R+R", 2, {}, none,
              [](P) { return std::vector<Cut>{{A, 1, true, 1, "su_2"}, {A, 1, false, 1, "su_2"}}; });

  exceptional("cpe81", "eigIexc", E, 8, I, "so_16", "so_2p+so_(16-2p)", 1, {"p"}, range("p", {1, 2, 3, 4}),
              [](P p) { return std::vector<Cut>{{D, 8, {}, at(p, "p"), "so_16"}}; });
  exceptional("cpe82", "eigIexc", E, 8, I, "so_16", "u_8", 1, {}, none,
              [](P) { return std::vector<Cut>{{D, 8, {}, 7, "so_16"}}; });
  exceptional("cpe83", "eigIexc", E, 8, I, "e_7+su_2", "e_7+R", 8, {}, none,
              [](P) { return std::vector<Cut>{{A, 1, {}, 1, "su_2"}}; });
  exceptional("cpe84", "eigIexc", E, 8, I, "e_7+su_2", "e_6+R+su_2", 8, {}, none,
              [](P) { return std::vector<Cut>{{E, 7, {}, 7, "e_7"}}; });
  exceptional("cpe86", "eigIexc", E, 8, I, "e_7+su_2", "so_12+su_2+su_2", 8, {}, none,
              [](P) { return std::vector<Cut>{{E, 7, {}, 1, "e_7"}}; });
  exceptional("cpe88", "eigIexc", E, 8, I, "e_7+su_2", "su_8+su_2", 8, {}, none,
              [](P) { return std::vector<Cut>{{E, 7, {}, 2, "e_7"}}; });
  exceptional("cpe85", "eigIIexc", E, 8, II, "e_7+su_2", "e_6+R+R", 8, {}, none,
              [](P) { return std::vector<Cut>{{E, 7, {}, 7, "e_7"}, {A, 1, {}, 1, "su_2"}}; });
  exceptional("cpe87", "eigIIexc", E, 8, II, "e_7+su_2", "so_12+su_2+R", 8, {}, none,
              [](P) { return std::vector<Cut>{{E, 7, {}, 1, "e_7"}, {A, 1, {}, 1, "su_2"}}; });
  exceptional("cpe89", "eigIIexc", E, 8, II, "e_7+su_2", "su_8+R", 8, {}, none,
              [](P) { return std::vector<Cut>{{E, 7, {}, 2, "e_7"}, {A, 1, {}, 1, "su_2"}}; });

  exceptional("cpe71", "eigIexc", E, 7, I, "so_12+su_2", "so_12+R", 1, {}, none,
              [](P) { return std::vector<Cut>{{A, 1, {}, 1, "su_2"}}; });
  exceptional("cpe72", "eigIexc", E, 7, I, "so_12+su_2", "u_6+su_2", 1, {}, none,
              [](P) { return std::vector<Cut>{{D, 6, {}, 5, "so_12"}}; });
  exceptional("cpe74", "eigIexc", E, 7, I, "so_12+su_2", "so_p+so_(12-p)+su_2", 1, {"p"}, range("p", {2, 4, 6}),
              [](P p) { return std::vector<Cut>{{D, 6, {}, at(p, "p") / 2, "so_12"}}; });
  exceptional("cpe73", "eigIIexc", E, 7, II, "so_12+su_2", "u_6+R", 1, {}, none,
              [](P) { return std::vector<Cut>{{D, 6, {}, 5, "so_12"}, {A, 1, {}, 1, "su_2"}}; });
  exceptional("cpe75", "eigIIexc", E, 7, II, "so_12+su_2", "so_p+so_(12-p)+R", 1, {"p"}, range("p", {2, 4, 6}),
              [](P p) {
                return std::vector<Cut>{{D, 6, {}, at(p, "p") / 2, "so_12"}, {A, 1, {}, 1, "su_2"}};
              });
  exceptional("cpe76", "eigIexc", E, 7, I, "e_6+R", "so_10+R+R", 7, {}, none,
              [](P) { return std::vector<Cut>{{E, 6, {}, 1, "e_6"}}; });
  exceptional("cpe77", "eigIexc", E, 7, I, "e_6+R", "su_6+su_2+R", 7, {}, none,
              [](P) { return std::vector<Cut>{{E, 6, {}, 2, "e_6"}}; });
  exceptional("cpe78", "eigIexc", E, 7, I, "su_8", "su_p+su_(8-p)+R", 2, {"p"}, range("p", {1, 2, 3, 4}),
              [](P p) { return std::vector<Cut>{{A, 7, {}, at(p, "p"), "su_8"}}; });

  exceptional("cpe61", "eigIexc", E, 6, I, "so_10+R", "u_5+R", 1, {}, none,
              [](P) { return std::vector<Cut>{{D, 5, {}, 5, "so_10"}}; });
  exceptional("cpe62", "eigIexc", E, 6, I, "so_10+R", "so_p+so_(10-p)+R", 1, {"p"}, range("p", {2, 4}),
              [](P p) { return std::vector<Cut>{{D, 5, {}, at(p, "p") / 2, "so_10"}}; });
  exceptional("cpe63", "eigIexc", E, 6, I, "su_6+su_2", "su_6+R", 2, {}, none,
              [](P) { return std::vector<Cut>{{A, 1, {}, 1, "su_2"}}; });
  exceptional("cpe64", "eigIexc", E, 6, I, "su_6+su_2", "su_p+su_(6-p)+R+su_2", 2, {"p"}, range("p", {1, 2, 3}),
              [](P p) { return std::vector<Cut>{{A, 5, {}, at(p, "p"), "su_6"}}; });
  exceptional("cpe65", "eigIIexc", E, 6, II, "su_6+su_2", "su_p+su_(6-p)+R+R", 2, {"p"}, range("p", {1, 2, 3}),
              [](P p) { return std::vector<Cut>{{A, 5, {}, at(p, "p"), "su_6"}, {A, 1, {}, 1, "su_2"}}; });

  // ---------- classical ----------
  auto classical = [&](std::string id, std::string table, Family fam, FiberType fiber, std::string g_label,
                       std::string k_label, std::string l_label, std::vector<std::string> names,
                       std::vector<Constraint> domain, std::function<TripleDecomposition(P)> build) {
    TripleSpec s;
    s.id = std::move(id);
    s.table = std::move(table);
    s.family = fam;
    s.params = names;
    s.fiber = fiber;
    s.g_label = std::move(g_label);
    s.k_label = std::move(k_label);
    s.l_label = std::move(l_label);
    s.check = constraints(names, std::move(domain));
    s.build = std::move(build);
    out.push_back(std::move(s));
  };
  auto c = [](std::string text, std::function<bool(P)> f) { return Constraint{std::move(text), std::move(f)}; };

  classical("cpan1", "eigIclass", A, I, "su_n", "su_p+su_(n-p)+R", "su_l+su_(p-l)+R+su_(n-p)+R", {"n", "p", "l"},
            {c("n >= 3", [](P q) { return at(q, "n") >= 3; }),
             c("2 <= p <= n-1", [](P q) { return at(q, "p") >= 2 && at(q, "p") <= at(q, "n") - 1; }),
             c("1 <= l <= p-1", [](P q) { return at(q, "l") >= 1 && at(q, "l") <= at(q, "p") - 1; })},
            [=](P q) {
              int n = at(q, "n"), p = at(q, "p"), l = at(q, "l");
              return build_classical(su(n), {unitary(0, p), unitary(p, n)},
                                     {unitary(0, l), unitary(l, p), unitary(p, n)}, {{"su_p", su(p), unitary(0, p)}});
            });

  const std::vector<Constraint> b_base = {
      c("n >= 2", [](P q) { return at(q, "n") >= 2; }),
  };
  auto with = [](std::vector<Constraint> a, std::vector<Constraint> b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  auto so_odd_factor = [=](int p) { return BlockFactor{"so_(2p+1)", so_odd(p), full(0, p)}; };
  auto so_even_rest = [=](int p, int n) { return BlockFactor{"so_2(n-p)", so_even(n - p), pairs(p, n)}; };

  classical("cpbn1", "eigIclass", B, I, "so_(2n+1)", "so_(2p+1)+so_2(n-p)", "so_(2l+1)+so_2(p-l)+so_2(n-p)",
            {"n", "p", "l"},
            with(b_base, {c("1 <= p <= n-1", [](P q) { return at(q, "p") >= 1 && at(q, "p") <= at(q, "n") - 1; }),
                          c("0 <= l <= p-1", [](P q) { return at(q, "l") >= 0 && at(q, "l") <= at(q, "p") - 1; })}),
            [=](P q) {
              int n = at(q, "n"), p = at(q, "p"), l = at(q, "l");
              return build_classical(so_odd(n), {full(0, p), pairs(p, n)}, {full(0, l), pairs(l, p), pairs(p, n)},
                                     {so_odd_factor(p)});
            });
  classical("cpbn2", "eigIclass", B, I, "so_(2n+1)", "so_(2p+1)+so_2(n-p)", "so_(2p+1)+so_2s+so_2(n-p-s)",
            {"n", "p", "s"},
            with(b_base, {c("0 <= p <= n-2", [](P q) { return at(q, "p") >= 0 && at(q, "p") <= at(q, "n") - 2; }),
                          c("1 <= s <= n-p-1",
                            [](P q) { return at(q, "s") >= 1 && at(q, "s") <= at(q, "n") - at(q, "p") - 1; })}),
            [=](P q) {
              int n = at(q, "n"), p = at(q, "p"), s = at(q, "s");
              return build_classical(so_odd(n), {full(0, p), pairs(p, n)}, {full(0, p), pairs(p, p + s), pairs(p + s, n)},
                                     {so_even_rest(p, n)});
            });
  classical("cpbn3", "eigIclass", B, I, "so_(2n+1)", "so_(2p+1)+so_2(n-p)", "so_(2p+1)+u_(n-p)", {"n", "p"},
            with(b_base, {c("0 <= p <= n-2", [](P q) { return at(q, "p") >= 0 && at(q, "p") <= at(q, "n") - 2; })}),
            [=](P q) {
              int n = at(q, "n"), p = at(q, "p");
              return build_classical(so_odd(n), {full(0, p), pairs(p, n)}, {full(0, p), unitary(p, n)},
                                     {so_even_rest(p, n)});
            });

  const std::vector<Constraint> d_base = {c("n >= 3", [](P q) { return at(q, "n") >= 3; })};
  classical("cpdn1", "eigIclass", D, I, "so_2n", "u_n", "u_p+u_(n-p)", {"n", "p"},
            with(d_base, {c("1 <= p <= n-1", [](P q) { return at(q, "p") >= 1 && at(q, "p") <= at(q, "n") - 1; })}),
            [=](P q) {
              int n = at(q, "n"), p = at(q, "p");
              return build_classical(so_even(n), {unitary(0, n)}, {unitary(0, p), unitary(p, n)},
                                     {{"u_n", su(n), unitary(0, n)}});
            });
  auto so_even_first = [=](int p) { return BlockFactor{"so_2p", so_even(p), pairs(0, p)}; };
  classical("cpdn2", "eigIclass", D, I, "so_2n", "so_2p+so_2(n-p)", "so_2l+so_2(p-l)+so_2(n-p)", {"n", "p", "l"},
            with(d_base, {c("2 <= p <= n-1", [](P q) { return at(q, "p") >= 2 && at(q, "p") <= at(q, "n") - 1; }),
                          c("1 <= l <= p-1", [](P q) { return at(q, "l") >= 1 && at(q, "l") <= at(q, "p") - 1; })}),
            [=](P q) {
              int n = at(q, "n"), p = at(q, "p"), l = at(q, "l");
              return build_classical(so_even(n), {pairs(0, p), pairs(p, n)}, {pairs(0, l), pairs(l, p), pairs(p, n)},
                                     {so_even_first(p)});
            });
  classical("cpdn5", "eigIclass", D, I, "so_2n", "so_2p+so_2(n-p)", "u_p+so_2(n-p)", {"n", "p"},
            with(d_base, {c("2 <= p <= n-1", [](P q) { return at(q, "p") >= 2 && at(q, "p") <= at(q, "n") - 1; })}),
            [=](P q) {
              int n = at(q, "n"), p = at(q, "p");
              return build_classical(so_even(n), {pairs(0, p), pairs(p, n)}, {unitary(0, p), pairs(p, n)},
                                     {so_even_first(p)});
            });

  const std::vector<Constraint> c_base = {c("n >= 2", [](P q) { return at(q, "n") >= 2; })};
  classical("cpcn1", "eigIclass", C, I, "sp_n", "u_n", "u_p+u_(n-p)", {"n", "p"},
            with(c_base, {c("1 <= p <= n-1", [](P q) { return at(q, "p") >= 1 && at(q, "p") <= at(q, "n") - 1; })}),
            [=](P q) {
              int n = at(q, "n"), p = at(q, "p");
              return build_classical(sp(n), {unitary(0, n)}, {unitary(0, p), unitary(p, n)},
                                     {{"u_n", su(n), unitary(0, n)}});
            });
  auto sp_first = [=](int p) { return BlockFactor{"sp_p", sp(p), full(0, p)}; };
  auto sp_rest = [=](int p, int n) { return BlockFactor{"sp_(n-p)", sp(n - p), full(p, n)}; };
  classical("cpcn2", "eigIclass", C, I, "sp_n", "sp_p+sp_(n-p)", "sp_l+sp_(p-l)+sp_(n-p)", {"n", "p", "l"},
            with(c_base, {c("2 <= p <= n-1", [](P q) { return at(q, "p") >= 2 && at(q, "p") <= at(q, "n") - 1; }),
                          c("1 <= l <= p-1", [](P q) { return at(q, "l") >= 1 && at(q, "l") <= at(q, "p") - 1; })}),
            [=](P q) {
              int n = at(q, "n"), p = at(q, "p"), l = at(q, "l");
              return build_classical(sp(n), {full(0, p), full(p, n)}, {full(0, l), full(l, p), full(p, n)}, {sp_first(p)});
            });
  classical("cpcn5", "eigIclass", C, I, "sp_n", "sp_p+sp_(n-p)", "u_p+sp_(n-p)", {"n", "p"},
            with(c_base, {c("1 <= p <= n-1", [](P q) { return at(q, "p") >= 1 && at(q, "p") <= at(q, "n") - 1; })}),
            [=](P q) {
              int n = at(q, "n"), p = at(q, "p");
              return build_classical(sp(n), {full(0, p), full(p, n)}, {unitary(0, p), full(p, n)}, {sp_first(p)});
            });

  // Type II
  auto l_range = c("1 <= l <= p-1", [](P q) { return at(q, "l") >= 1 && at(q, "l") <= at(q, "p") - 1; });
  auto s_range =
      c("1 <= s <= n-p-1", [](P q) { return at(q, "s") >= 1 && at(q, "s") <= at(q, "n") - at(q, "p") - 1; });
  auto p_mid = c("2 <= p <= n-2", [](P q) { return at(q, "p") >= 2 && at(q, "p") <= at(q, "n") - 2; });

  classical("cpan3", "eigIIclass", A, II, "su_n", "su_p+su_(n-p)+R", "su_l+su_(p-l)+su_s+su_(n-p-s)+R+R+R",
            {"n", "p", "l", "s"}, {c("n >= 4", [](P q) { return at(q, "n") >= 4; }), p_mid, l_range, s_range},
            [=](P q) {
              int n = at(q, "n"), p = at(q, "p"), l = at(q, "l"), s = at(q, "s");
              return build_classical(su(n), {unitary(0, p), unitary(p, n)},
                                     {unitary(0, l), unitary(l, p), unitary(p, p + s), unitary(p + s, n)},
                                     {{"su_p", su(p), unitary(0, p)}, {"su_(n-p)", su(n - p), unitary(p, n)}});
            });
  auto b_p = c("1 <= p <= n-2", [](P q) { return at(q, "p") >= 1 && at(q, "p") <= at(q, "n") - 2; });
  auto l_from_zero = c("0 <= l <= p-1", [](P q) { return at(q, "l") >= 0 && at(q, "l") <= at(q, "p") - 1; });
  classical("cpbn5", "eigIIclass", B, II, "so_(2n+1)", "so_(2p+1)+so_2(n-p)",
            "so_(2l+1)+so_2(p-l)+so_2s+so_2(n-p-s)", {"n", "p", "l", "s"},
            {c("n >= 3", [](P q) { return at(q, "n") >= 3; }), b_p, l_from_zero, s_range}, [=](P q) {
              int n = at(q, "n"), p = at(q, "p"), l = at(q, "l"), s = at(q, "s");
              return build_classical(so_odd(n), {full(0, p), pairs(p, n)},
                                     {full(0, l), pairs(l, p), pairs(p, p + s), pairs(p + s, n)},
                                     {so_odd_factor(p), so_even_rest(p, n)});
            });
  classical("cpbn4", "eigIIclass", B, II, "so_(2n+1)", "so_(2p+1)+so_2(n-p)", "so_(2l+1)+so_2(p-l)+u_(n-p)",
            {"n", "p", "l"}, {c("n >= 3", [](P q) { return at(q, "n") >= 3; }), b_p, l_from_zero}, [=](P q) {
              int n = at(q, "n"), p = at(q, "p"), l = at(q, "l");
              return build_classical(so_odd(n), {full(0, p), pairs(p, n)}, {full(0, l), pairs(l, p), unitary(p, n)},
                                     {so_odd_factor(p), so_even_rest(p, n)});
            });
  auto d_n4 = c("n >= 4", [](P q) { return at(q, "n") >= 4; });
  classical("cpdn4", "eigIIclass", D, II, "so_2n", "so_2p+so_2(n-p)", "so_2l+so_2(p-l)+so_2s+so_2(n-p-s)",
            {"n", "p", "l", "s"}, {d_n4, p_mid, l_range, s_range}, [=](P q) {
              int n = at(q, "n"), p = at(q, "p"), l = at(q, "l"), s = at(q, "s");
              return build_classical(so_even(n), {pairs(0, p), pairs(p, n)},
                                     {pairs(0, l), pairs(l, p), pairs(p, p + s), pairs(p + s, n)},
                                     {so_even_first(p), so_even_rest(p, n)});
            });
  classical("cpdn7", "eigIIclass", D, II, "so_2n", "so_2p+so_2(n-p)", "u_p+u_(n-p)", {"n", "p"}, {d_n4, p_mid},
            [=](P q) {
              int n = at(q, "n"), p = at(q, "p");
              return build_classical(so_even(n), {pairs(0, p), pairs(p, n)}, {unitary(0, p), unitary(p, n)},
                                     {so_even_first(p), so_even_rest(p, n)});
            });
  classical("cpdn8", "eigIIclass", D, II, "so_2n", "so_2p+so_2(n-p)", "so_2l+so_2(p-l)+u_(n-p)", {"n", "p", "l"},
            {d_n4, p_mid, l_range}, [=](P q) {
              int n = at(q, "n"), p = at(q, "p"), l = at(q, "l");
              return build_classical(so_even(n), {pairs(0, p), pairs(p, n)}, {pairs(0, l), pairs(l, p), unitary(p, n)},
                                     {so_even_first(p), so_even_rest(p, n)});
            });
  classical("cpcn4", "eigIIclass", C, II, "sp_n", "sp_p+sp_(n-p)", "sp_l+sp_(p-l)+sp_s+sp_(n-p-s)",
            {"n", "p", "l", "s"}, {d_n4, p_mid, l_range, s_range}, [=](P q) {
              int n = at(q, "n"), p = at(q, "p"), l = at(q, "l"), s = at(q, "s");
              return build_classical(sp(n), {full(0, p), full(p, n)},
                                     {full(0, l), full(l, p), full(p, p + s), full(p + s, n)},
                                     {sp_first(p), sp_rest(p, n)});
            });
  classical("cpcn7", "eigIIclass", C, II, "sp_n", "sp_p+sp_(n-p)", "u_p+u_(n-p)", {"n", "p"},
            {c("n >= 2", [](P q) { return at(q, "n") >= 2; }),
             c("1 <= p <= n-1", [](P q) { return at(q, "p") >= 1 && at(q, "p") <= at(q, "n") - 1; })},
            [=](P q) {
              int n = at(q, "n"), p = at(q, "p");
              return build_classical(sp(n), {full(0, p), full(p, n)}, {unitary(0, p), unitary(p, n)},
                                     {sp_first(p), sp_rest(p, n)});
            });
  classical("cpcn8", "eigIIclass", C, II, "sp_n", "sp_p+sp_(n-p)", "sp_l+sp_(p-l)+u_(n-p)", {"n", "p", "l"},
            {c("n >= 3", [](P q) { return at(q, "n") >= 3; }),
             c("2 <= p <= n-1", [](P q) { return at(q, "p") >= 2 && at(q, "p") <= at(q, "n") - 1; }), l_range},
            [=](P q) {
              int n = at(q, "n"), p = at(q, "p"), l = at(q, "l");
              return build_classical(sp(n), {full(0, p), full(p, n)}, {full(0, l), full(l, p), unitary(p, n)},
                                     {sp_first(p), sp_rest(p, n)});
            });
  return out;
}

}  // namespace

std::vector<Params> TripleSpec::sweep(int n_max) const {
  if (!is_classical()) return fixed_params;
  std::vector<Params> out;
  std::vector<std::string> others;
  for (const auto& name : params) {
    if (name != "n") others.push_back(name);
  }
  for (int n = 1; n <= n_max; ++n) {
    Params p{{"n", n}};
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == others.size()) {
        if (!check(p)) out.push_back(p);
        return;
      }
      for (int v = 0; v <= n; ++v) {
        p[others[i]] = v;
        rec(i + 1);
      }
      p.erase(others[i]);
    };
    rec(0);
  }
  return out;
}

SimpleType TripleSpec::g_type(const Params& p) const {
  if (fixed_rank) return {family, *fixed_rank};
  int n = p.at("n");
  if (family == Family::A) return {Family::A, n - 1};
  return {family, n};
}

const std::vector<TripleSpec>& catalog() {
  static const std::vector<TripleSpec> specs = make_catalog();
  return specs;
}

const TripleSpec& find_triple(const std::string& id) {
  for (const auto& s : catalog()) {
    if (s.id == id) return s;
  }
  throw UnknownTriple("unknown triple id '" + id + "'");
}

std::vector<TripleInstance> enumerate_triples(const SimpleType& g) {
  g.validate();
  std::vector<TripleInstance> out;
  for (const auto& spec : catalog()) {
    if (spec.family != g.family) continue;
    if (spec.fixed_rank) {
      if (*spec.fixed_rank != g.rank) continue;
      for (const auto& p : spec.fixed_params) out.push_back({&spec, p});
      continue;
    }
    int n = spec.family == Family::A ? g.rank + 1 : g.rank;
    for (const auto& p : spec.sweep(n)) {
      if (p.at("n") == n) out.push_back({&spec, p});
    }
  }
  return out;
}

TripleDecomposition instantiate(const TripleSpec& spec, const Params& params) {
  if (auto violation = spec.check(params)) throw DomainError(spec.id + ": " + *violation);
  return spec.build(params);
}

Classification classify(const TripleDecomposition& t) {
  if (t.p_parts.empty()) throw std::invalid_argument("l equals k: no vertical part");
  return {t.p_parts.size() == 1 ? FiberType::I : FiberType::II, t.p_parts.size()};
}

}  // namespace einfib
