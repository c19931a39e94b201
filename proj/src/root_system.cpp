#include "einfib/root_system.hpp"

#include <algorithm>
#include <numeric>
#include <cctype>
#include <stdexcept>

namespace einfib {

namespace {

Vector unit(std::size_t dim, std::size_t i, int scale = 2) {
  Vector v(dim, 0);
  v[i] = scale;
  return v;
}

Vector difference(std::size_t dim, std::size_t i, std::size_t j) {
  Vector v(dim, 0);
  v[i] = 2;
  v[j] = -2;
  return v;
}

long dot_vectors(const Vector& a, const Vector& b) {
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long>(a[i]) * b[i];
  return s;
}

std::vector<Vector> bourbaki_simple_roots(const SimpleType& t) {
  const auto n = static_cast<std::size_t>(t.rank);
  std::vector<Vector> s;
  switch (t.family) {
    case Family::A:
      for (std::size_t i = 0; i < n; ++i) s.push_back(difference(n + 1, i, i + 1));
      break;
    case Family::B:
    case Family::C:
    case Family::D:
      for (std::size_t i = 0; i + 1 < n; ++i) s.push_back(difference(n, i, i + 1));
      if (t.family == Family::B) s.push_back(unit(n, n - 1));
      if (t.family == Family::C) s.push_back(unit(n, n - 1, 4));
      if (t.family == Family::D) {
        Vector v(n, 0);
        v[n - 2] = 2;
        v[n - 1] = 2;
        s.push_back(v);
      }
      break;
    case Family::G:
      s = {{2, -2, 0}, {-4, 2, 2}};
      break;
    case Family::F:
      s = {{0, 2, -2, 0}, {0, 0, 2, -2}, {0, 0, 0, 2}, {1, -1, -1, -1}};
      break;
    case Family::E: {
      std::vector<Vector> e8 = {{1, -1, -1, -1, -1, -1, -1, 1}, {2, 2, 0, 0, 0, 0, 0, 0}};
      for (std::size_t i = 1; i <= 6; ++i) e8.push_back(difference(8, i, i - 1));
      s.assign(e8.begin(), e8.begin() + t.rank);
      break;
    }
  }
  return s;
}

}  // namespace

void SimpleType::validate() const {
  bool ok = false;
  switch (family) {
    case Family::A:
    case Family::B:
    case Family::C:
      ok = rank >= 1;
      break;
    case Family::D:
      ok = rank >= 2;
      break;
    case Family::E:
      ok = rank >= 6 && rank <= 8;
      break;
    case Family::F:
      ok = rank == 4;
      break;
    case Family::G:
      ok = rank == 2;
      break;
  }
  if (!ok) throw std::invalid_argument("invalid simple type " + name());
}

std::string SimpleType::name() const {
  static const char letters[] = "ABCDEFG";
  return std::string(1, letters[static_cast<int>(family)]) + std::to_string(rank);
}

SimpleType parse_simple_type(std::string_view text) {
  if (text.size() < 2) throw std::invalid_argument("invalid simple type name");
  const std::string_view letters = "ABCDEFG";
  auto pos = letters.find(static_cast<char>(std::toupper(static_cast<unsigned char>(text[0]))));
  if (pos == std::string_view::npos) throw std::invalid_argument("invalid simple type name");
  int rank = 0;
  for (char c : text.substr(1)) {
    if (c < '0' || c > '9') throw std::invalid_argument("invalid simple type name");
    rank = rank * 10 + (c - '0');
    if (rank > 1000) throw std::invalid_argument("rank too large");
  }
  SimpleType t{static_cast<Family>(pos), rank};
  t.validate();
  return t;
}

int dual_coxeter(const SimpleType& t) {
  t.validate();
  const int n = t.rank;
  switch (t.family) {
    case Family::A:
      return n + 1;
    case Family::B:
      return n == 1 ? 2 : 2 * n - 1;
    case Family::C:
      return n + 1;
    case Family::D:
      return 2 * n - 2;
    case Family::E:
      return n == 6 ? 12 : (n == 7 ? 18 : 30);
    case Family::F:
      return 9;
    case Family::G:
      return 4;
  }
  return 0;
}

std::size_t VectorHash::operator()(const Vector& v) const {
  std::size_t h = v.size();
  for (int x : v) h = h * 1000003u ^ static_cast<std::size_t>(x + 64);
  return h;
}

RootSystem RootSystem::build(const SimpleType& type) {
  type.validate();
  return from_simple_roots(type, bourbaki_simple_roots(type));
}

RootSystem RootSystem::from_simple_roots(const SimpleType& type, const std::vector<Vector>& simple) {
  RootSystem rs;
  rs.type_ = type;
  std::unordered_map<Vector, std::size_t, VectorHash> seen;
  std::vector<Vector> frontier;
  for (const auto& s : simple) {
    if (seen.emplace(s, rs.roots_.size()).second) {
      rs.roots_.push_back(s);
      frontier.push_back(s);
    }
  }
  while (!frontier.empty()) {
    std::vector<Vector> next;
    for (const auto& r : frontier) {
      for (const auto& s : simple) {
        long k = 2 * dot_vectors(r, s) / dot_vectors(s, s);
        Vector t = r;
        for (std::size_t i = 0; i < t.size(); ++i) t[i] -= static_cast<int>(k * s[i]);
        if (seen.emplace(t, rs.roots_.size()).second) {
          rs.roots_.push_back(t);
          next.push_back(std::move(t));
        }
      }
    }
    frontier = std::move(next);
  }
  rs.lookup_ = std::move(seen);
  for (const auto& s : simple) rs.simple_.push_back(rs.lookup_.at(s));
  rs.index();
  return rs;
}

void RootSystem::index() {
  const std::size_t n = roots_.size();
  negative_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    Vector neg = roots_[i];
    for (int& x : neg) x = -x;
    negative_[i] = lookup_.at(neg);
  }

  // invert the Gram matrix of the simple roots
  const std::size_t r = simple_.size();
  std::vector<std::vector<Rational>> m(r, std::vector<Rational>(2 * r));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) m[i][j] = dot(simple_[i], simple_[j]);
    m[i][r + i] = 1;
  }
  for (std::size_t c = 0; c < r; ++c) {
    std::size_t piv = c;
    while (m[piv][c] == 0) ++piv;
    std::swap(m[piv], m[c]);
    Rational inv = 1 / m[c][c];
    for (auto& x : m[c]) x *= inv;
    for (std::size_t i = 0; i < r; ++i) {
      if (i == c || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = 0; j < 2 * r; ++j) m[i][j] -= f * m[c][j];
    }
  }
  coefficients_.assign(n, std::vector<int>(r, 0));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < r; ++i) {
      Rational c = 0;
      for (std::size_t j = 0; j < r; ++j) c += m[i][r + j] * dot(k, simple_[j]);
      if (c.get_den() != 1) throw std::logic_error("non-integral simple-root coefficient");
      coefficients_[k][i] = static_cast<int>(c.get_num().get_si());
    }
  }

  long best = -1;
  for (std::size_t k = 0; k < n; ++k) {
    long height = std::accumulate(coefficients_[k].begin(), coefficients_[k].end(), 0L);
    if (height > best) {
      best = height;
      highest_ = k;
    }
    long_dot_ = std::max(long_dot_, dot(k, k));
  }

  // B(h, h) = sum over roots of beta(h)^2, evaluated at h = root 0
  long total = 0;
  for (std::size_t k = 0; k < n; ++k) {
    long d = dot(k, 0);
    total += d * d;
  }
  killing_doubled_ = Rational(dot(0, 0), total);
  killing_doubled_.canonicalize();
}

std::vector<Rational> RootSystem::coordinates(std::size_t i) const {
  std::vector<Rational> out;
  for (int x : root(i)) {
    Rational c(x, 2);
    c.canonicalize();
    out.push_back(c);
  }
  return out;
}

std::optional<std::size_t> RootSystem::find(const Vector& v) const {
  auto it = lookup_.find(v);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> RootSystem::sum(std::size_t i, std::size_t j) const {
  Vector v = roots_.at(i);
  const Vector& w = roots_.at(j);
  for (std::size_t k = 0; k < v.size(); ++k) v[k] += w[k];
  return find(v);
}

bool RootSystem::is_positive(std::size_t i) const {
  for (int c : coefficients_.at(i)) {
    if (c != 0) return c > 0;
  }
  return false;
}

long RootSystem::dot(std::size_t i, std::size_t j) const { return dot_vectors(roots_[i], roots_[j]); }

RootString RootSystem::root_string(std::size_t alpha, std::size_t phi) const {
  if (alpha >= size() || phi >= size()) throw std::invalid_argument("root index out of range");
  if (alpha == phi || negative_[alpha] == phi) throw std::invalid_argument("root string through +-alpha is undefined");
  const Vector& a = roots_[alpha];
  auto shifted = [&](int n) {
    Vector v = roots_[phi];
    for (std::size_t k = 0; k < v.size(); ++k) v[k] += n * a[k];
    return v;
  };
  RootString s{0, 0};
  while (find(shifted(s.p - 1))) --s.p;
  while (find(shifted(s.q + 1))) ++s.q;
  return s;
}

}  // namespace einfib
