#include "flagiso/chevalley.hpp"

#include <functional>
#include <stdexcept>

namespace flagiso {

StructureConstants::StructureConstants(const RootSystem& sys)
    : sys_(&sys), n_(sys.num_roots()), table_(n_ * n_, 0), coroot_(n_) {
  const std::size_t np = sys.num_positive();
  const int l = sys.rank();

  for (RootIndex a = 0; a < n_; ++a) {
    coroot_[a].assign(l, 0);
    for (int i = 0; i < l; ++i) {
      int num = sys.simple_coeffs(a)[i] * sys.norm2(sys.simple(i));
      if (num % sys.norm2(a) != 0) throw std::logic_error("non-integral coroot");
      coroot_[a][i] = num / sys.norm2(a);
    }
  }

  std::vector<bool> known(n_ * n_, false);
  auto set = [&](RootIndex a, RootIndex b, int v) {
    table_[a * n_ + b] = v;
    table_[b * n_ + a] = -v;
    known[a * n_ + b] = known[b * n_ + a] = true;
  };
  auto norm = [&](RootIndex a) { return Rational(sys.norm2(a)); };

  // N for an arbitrary pair whose positive reduction is already known.
  std::function<Rational(RootIndex, RootIndex)> get = [&](RootIndex x, RootIndex y) -> Rational {
    const bool px = sys.is_positive(x), py = sys.is_positive(y);
    auto lookup = [&](RootIndex a, RootIndex b) {
      if (!known[a * n_ + b]) throw std::logic_error("structure constant requested out of order");
      return Rational(table_[a * n_ + b]);
    };
    if (px && py) return lookup(x, y);
    if (!px && !py) return -lookup(sys.negate(x), sys.negate(y));
    if (!px) return -get(y, x);
    RootIndex s = *sys.add(x, y);
    RootIndex z = sys.negate(s);
    if (sys.is_positive(s)) return -(norm(z) / norm(x)) * lookup(sys.negate(y), sys.negate(z));
    return (norm(z) / norm(y)) * lookup(z, x);
  };

  for (RootIndex xi = 0; xi < np; ++xi) {
    std::vector<std::pair<RootIndex, RootIndex>> special;
    for (RootIndex a = 0; a < xi; ++a) {
      auto b = sys.subtract(xi, a);
      if (b && sys.is_positive(*b) && a < *b) special.emplace_back(a, *b);
    }
    if (special.empty()) continue;
    auto [a0, b0] = special.front();
    const int n0 = string_below(a0, b0) + 1;
    set(a0, b0, n0);
    for (std::size_t k = 1; k < special.size(); ++k) {
      auto [c, d] = special[k];
      Rational sum = 0;
      if (auto bc = sys.subtract(b0, c))
        sum += get(b0, sys.negate(c)) * get(a0, sys.negate(d)) / norm(*bc);
      if (auto ac = sys.subtract(a0, c))
        sum += get(sys.negate(c), a0) * get(b0, sys.negate(d)) / norm(*ac);
      Rational v = norm(xi) / n0 * sum;
      if (v.get_den() != 1) throw std::logic_error("non-integral structure constant");
      set(c, d, static_cast<int>(v.get_num().get_si()));
    }
  }

  for (RootIndex x = 0; x < n_; ++x)
    for (RootIndex y = 0; y < n_; ++y) {
      if (!sys.add(x, y) || known[x * n_ + y]) continue;
      Rational v = get(x, y);
      if (v.get_den() != 1) throw std::logic_error("non-integral structure constant");
      table_[x * n_ + y] = static_cast<int>(v.get_num().get_si());
    }
}

int StructureConstants::string_below(RootIndex a, RootIndex b) const {
  int k = 0;
  RootIndex cur = b;
  while (true) {
    auto next = sys_->subtract(cur, a);
    if (!next) return k;
    cur = *next;
    ++k;
  }
}

LieElement bracket_basis(const StructureConstants& sc, std::size_t x, std::size_t y) {
  const RootSystem& sys = sc.system();
  const std::size_t l = static_cast<std::size_t>(sys.rank());
  LieElement out;
  if (x < l && y < l) return out;
  if (x < l || y < l) {
    const bool swap = y < l;
    std::size_t h = swap ? y : x;
    RootIndex r = (swap ? x : y) - l;
    std::int64_t v = sys.killing_number(sys.simple(static_cast<int>(h)), r);
    if (v != 0) out[r + l] = swap ? -v : v;
    return out;
  }
  RootIndex a = x - l, b = y - l;
  if (b == sys.negate(a)) {
    const auto& c = sc.coroot_coeffs(a);
    for (std::size_t i = 0; i < l; ++i)
      if (c[i] != 0) out[i] = c[i];
    return out;
  }
  if (auto s = sys.add(a, b)) out[*s + l] = sc(a, b);
  return out;
}

LieElement bracket(const StructureConstants& sc, const LieElement& x, const LieElement& y) {
  LieElement out;
  for (const auto& [bx, cx] : x)
    for (const auto& [by, cy] : y)
      for (const auto& [bz, cz] : bracket_basis(sc, bx, by)) out[bz] += cx * cy * cz;
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

bool jacobi_holds(const StructureConstants& sc, std::size_t x, std::size_t y, std::size_t z) {
  LieElement ex{{x, 1}}, ey{{y, 1}}, ez{{z, 1}};
  LieElement total;
  for (const auto& part : {bracket(sc, ex, bracket(sc, ey, ez)), bracket(sc, ey, bracket(sc, ez, ex)),
                           bracket(sc, ez, bracket(sc, ex, ey))})
    for (const auto& [k, v] : part) total[k] += v;
  for (const auto& [k, v] : total)
    if (v != 0) return false;
  return true;
}

} // namespace flagiso
