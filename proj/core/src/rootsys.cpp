#include "flagiso/rootsys.hpp"

#include "flagiso/error.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace flagiso {

DynkinType DynkinType::make(char family, int rank) {
  auto bad = [&] {
    throw InvalidDynkinType("invalid Dynkin type " + std::string(1, family) + std::to_string(rank));
  };
  switch (family) {
  case 'A': if (rank < 1) bad(); break;
  case 'B': if (rank < 2) bad(); break;
  case 'C': if (rank < 3) bad(); break;
  case 'D': if (rank < 4) bad(); break;
  case 'E': if (rank < 6 || rank > 8) bad(); break;
  case 'F': if (rank != 4) bad(); break;
  case 'G': if (rank != 2) bad(); break;
  default: bad();
  }
  return DynkinType{static_cast<Family>(family), rank};
}

bool DynkinType::is_classical() const noexcept {
  return family == Family::A || family == Family::B || family == Family::C || family == Family::D;
}

bool DynkinType::simply_laced() const noexcept {
  return family == Family::A || family == Family::D || family == Family::E;
}

std::string DynkinType::name() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }

namespace {

RootVector unit(std::size_t n, std::size_t i, int s = 1) {
  RootVector v(n, 0);
  v[i] = s;
  return v;
}

RootVector combo(std::size_t n, std::size_t i, int si, std::size_t j, int sj) {
  RootVector v(n, 0);
  v[i] += si;
  v[j] += sj;
  return v;
}

// Gram matrix of the simple roots for the exceptional families.
std::vector<std::vector<int>> exceptional_gram(DynkinType d) {
  const int l = d.rank;
  std::vector<std::vector<int>> g(l, std::vector<int>(l, 0));
  auto edge = [&](int i, int j, int v) { g[i - 1][j - 1] = g[j - 1][i - 1] = v; };
  switch (d.family) {
  case Family::G:
    // alpha_1 long.
    g[0][0] = 6;
    g[1][1] = 2;
    edge(1, 2, -3);
    break;
  case Family::F:
    // alpha_1, alpha_2 long; alpha_3, alpha_4 short.
    g[0][0] = g[1][1] = 4;
    g[2][2] = g[3][3] = 2;
    edge(1, 2, -2);
    edge(2, 3, -2);
    edge(3, 4, -1);
    break;
  case Family::E:
    for (int i = 0; i < l; ++i) g[i][i] = 2;
    edge(1, 3, -1);
    edge(2, 4, -1);
    for (int i = 3; i < l; ++i) edge(i, i + 1, -1);
    break;
  default: break;
  }
  return g;
}

} // namespace

std::vector<std::vector<int>> positive_roots_by_closure(const CartanMatrix& cartan) {
  const std::size_t l = cartan.size();
  std::vector<std::vector<int>> list;
  std::set<std::vector<int>> seen;
  for (std::size_t i = 0; i < l; ++i) {
    std::vector<int> e(l, 0);
    e[i] = 1;
    list.push_back(e);
    seen.insert(e);
  }
  for (std::size_t idx = 0; idx < list.size(); ++idx) {
    const std::vector<int> beta = list[idx];
    for (std::size_t i = 0; i < l; ++i) {
      bool is_simple_i = beta[i] == 1 && std::count(beta.begin(), beta.end(), 0) == static_cast<long>(l - 1);
      if (is_simple_i) continue;
      int p = 0;
      while (true) {
        std::vector<int> down = beta;
        down[i] -= p + 1;
        if (!seen.count(down)) break;
        ++p;
      }
      int kn = 0;
      for (std::size_t j = 0; j < l; ++j) kn += cartan[i][j] * beta[j];
      int q = p - kn;
      if (q > 0) {
        std::vector<int> up = beta;
        up[i] += 1;
        if (seen.insert(up).second) list.push_back(up);
      }
    }
  }
  return list;
}

RootSystem::RootSystem(DynkinType dynkin) : dynkin_(DynkinType::make(static_cast<char>(dynkin.family), dynkin.rank)) {
  const int l = dynkin_.rank;
  std::vector<RootVector> all;
  std::vector<RootVector> simple;

  if (dynkin_.is_classical()) {
    const std::size_t n = dynkin_.family == Family::A ? l + 1 : l;
    ambient_dim_ = n;
    ambient_gram_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) ambient_gram_[i * n + i] = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        if (dynkin_.family == Family::A) {
          all.push_back(combo(n, i, 1, j, -1));
        } else if (i < j) {
          for (int si : {1, -1})
            for (int sj : {1, -1}) all.push_back(combo(n, i, si, j, sj));
        }
      }
    if (dynkin_.family == Family::B)
      for (std::size_t i = 0; i < n; ++i) {
        all.push_back(unit(n, i, 1));
        all.push_back(unit(n, i, -1));
      }
    if (dynkin_.family == Family::C)
      for (std::size_t i = 0; i < n; ++i) {
        all.push_back(unit(n, i, 2));
        all.push_back(unit(n, i, -2));
      }
    for (int i = 0; i + 1 < l; ++i) simple.push_back(combo(n, i, 1, i + 1, -1));
    switch (dynkin_.family) {
    case Family::A: simple.push_back(combo(n, l - 1, 1, l, -1)); break;
    case Family::B: simple.push_back(unit(n, l - 1, 1)); break;
    case Family::C: simple.push_back(unit(n, l - 1, 2)); break;
    case Family::D: simple.push_back(combo(n, l - 2, 1, l - 1, 1)); break;
    default: break;
    }
  } else {
    ambient_dim_ = l;
    auto g = exceptional_gram(dynkin_);
    ambient_gram_.assign(l * l, 0);
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j) ambient_gram_[i * l + j] = g[i][j];
    CartanMatrix a(l, std::vector<int>(l));
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j) a[i][j] = 2 * g[i][j] / g[i][i];
    for (const auto& c : positive_roots_by_closure(a)) {
      all.push_back(c);
      RootVector neg = c;
      for (auto& x : neg) x = -x;
      all.push_back(neg);
    }
    for (int i = 0; i < l; ++i) simple.push_back(unit(l, i));
  }

  // Simple-root Gram matrix and Cartan matrix.
  QMatrix gs(l, l);
  cartan_.assign(l, std::vector<int>(l));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      gs(i, j) = ambient_inner(simple[i], simple[j]);
      cartan_[i][j] = 2 * ambient_inner(simple[i], simple[j]) / ambient_inner(simple[i], simple[i]);
    }

  // Simple-root coefficients of every root.
  struct Entry {
    RootVector v;
    std::vector<int> c;
    int h;
  };
  std::vector<Entry> positives;
  for (const auto& v : all) {
    std::vector<Rational> rhs(l);
    for (int i = 0; i < l; ++i) rhs[i] = ambient_inner(simple[i], v);
    std::vector<Rational> x;
    linalg::solve(gs, rhs, x);
    std::vector<int> c(l);
    int h = 0;
    bool pos = false;
    for (int i = 0; i < l; ++i) {
      if (x[i].get_den() != 1) throw std::logic_error("root with non-integral coefficients");
      c[i] = static_cast<int>(x[i].get_num().get_si());
      h += c[i];
      if (c[i] > 0) pos = true;
    }
    if (pos) positives.push_back({v, c, h});
  }
  std::sort(positives.begin(), positives.end(), [](const Entry& a, const Entry& b) {
    if (a.h != b.h) return a.h < b.h;
    return a.c > b.c;
  });

  const std::size_t np = positives.size();
  roots_.resize(2 * np);
  coeffs_.resize(2 * np);
  height_.resize(2 * np);
  for (std::size_t i = 0; i < np; ++i) {
    roots_[i] = positives[i].v;
    coeffs_[i] = positives[i].c;
    height_[i] = positives[i].h;
    RootVector nv = positives[i].v;
    for (auto& x : nv) x = -x;
    std::vector<int> nc = positives[i].c;
    for (auto& x : nc) x = -x;
    roots_[i + np] = nv;
    coeffs_[i + np] = nc;
    height_[i + np] = -positives[i].h;
  }
  for (std::size_t a = 0; a < roots_.size(); ++a) index_[roots_[a]] = a;

  const std::size_t n = roots_.size();
  gram_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) gram_[a * n + b] = ambient_inner(roots_[a], roots_[b]);
  for (std::size_t a = 0; a < n; ++a) max_norm2_ = std::max(max_norm2_, gram_[a * n + a]);

  sum_.assign(n * n, -1);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      RootVector s = roots_[a];
      for (std::size_t k = 0; k < s.size(); ++k) s[k] += roots_[b][k];
      auto it = index_.find(s);
      if (it != index_.end()) sum_[a * n + b] = static_cast<int>(it->second);
    }
}

int RootSystem::ambient_inner(const RootVector& x, const RootVector& y) const {
  int s = 0;
  for (std::size_t i = 0; i < ambient_dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < ambient_dim_; ++j) s += x[i] * ambient_gram_[i * ambient_dim_ + j] * y[j];
  }
  return s;
}

int RootSystem::killing_number(RootIndex gamma, RootIndex alpha) const {
  return 2 * inner(gamma, alpha) / norm2(gamma);
}

std::optional<RootIndex> RootSystem::find(const RootVector& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<RootIndex> RootSystem::add(RootIndex a, RootIndex b) const {
  int s = sum_[a * roots_.size() + b];
  if (s < 0) return std::nullopt;
  return static_cast<RootIndex>(s);
}

RootIndex RootSystem::highest_root() const {
  std::optional<RootIndex> found;
  for (RootIndex a = 0; a < num_positive(); ++a) {
    bool top = true;
    for (int i = 0; i < rank() && top; ++i)
      if (add(a, simple(i))) top = false;
    if (top) {
      if (found) throw std::logic_error("highest root not unique");
      found = a;
    }
  }
  return *found;
}

Weight RootSystem::to_weight(RootIndex a) const {
  Weight w;
  for (int x : roots_[a]) w.coords.emplace_back(x);
  return w;
}

Weight RootSystem::coroot(RootIndex a) const {
  Weight w = to_weight(a);
  Rational s(2, norm2(a));
  s.canonicalize();
  for (auto& x : w.coords) x *= s;
  return w;
}

Rational RootSystem::pairing(const Weight& x, const Weight& y) const {
  Rational s = 0;
  for (std::size_t i = 0; i < ambient_dim_; ++i)
    for (std::size_t j = 0; j < ambient_dim_; ++j) {
      int g = ambient_gram_[i * ambient_dim_ + j];
      if (g != 0) s += x.coords[i] * g * y.coords[j];
    }
  return s;
}

Rational RootSystem::pairing(RootIndex a, const Weight& w) const { return pairing(to_weight(a), w); }

Rational RootSystem::copairing(RootIndex a, const Weight& w) const { return pairing(coroot(a), w); }

std::vector<Weight> RootSystem::fundamental_weights() const {
  const int l = rank();
  QMatrix a(l, l);
  for (int i = 0; i < l; ++i)
    for (int k = 0; k < l; ++k) a(i, k) = cartan_[i][k];
  std::vector<Weight> out;
  for (int j = 0; j < l; ++j) {
    std::vector<Rational> rhs(l, Rational(0)), x;
    rhs[j] = 1;
    linalg::solve(a, rhs, x);
    Weight w{std::vector<Rational>(ambient_dim_, Rational(0))};
    for (int k = 0; k < l; ++k)
      for (std::size_t c = 0; c < ambient_dim_; ++c) w.coords[c] += x[k] * roots_[k][c];
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<Weight> RootSystem::simple_dual_basis() const {
  auto omega = fundamental_weights();
  for (int i = 0; i < rank(); ++i) {
    Rational s(2, norm2(simple(i)));
    s.canonicalize();
    for (auto& x : omega[i].coords) x *= s;
  }
  return omega;
}

std::string RootSystem::label(RootIndex a) const {
  std::ostringstream os;
  if (dynkin_.is_classical()) {
    bool first = true;
    for (std::size_t i = 0; i < ambient_dim_; ++i) {
      int c = roots_[a][i];
      if (c == 0) continue;
      if (c < 0) os << "-";
      else if (!first) os << "+";
      if (std::abs(c) != 1) os << std::abs(c);
      os << "λ" << i + 1;
      first = false;
    }
  } else {
    const auto& c = coeffs_[a];
    if (!is_positive(a)) os << "-";
    os << "(";
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << std::abs(c[i]);
    os << ")";
  }
  return os.str();
}

CartanMatrix cartan_matrix(DynkinType dynkin) { return RootSystem(dynkin).cartan(); }

} // namespace flagiso
