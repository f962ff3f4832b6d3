#include "flagiso/decomp.hpp"

#include "flagiso/error.hpp"

#include <algorithm>
#include <numeric>

namespace flagiso {

bool Component::contains(RootIndex r) const { return std::binary_search(roots.begin(), roots.end(), r); }

std::vector<RootIndex> theta_closure(const RootSystem& sys, const ThetaSubset& theta) {
  std::vector<bool> in(sys.num_roots(), false);
  std::vector<RootIndex> list;
  for (int i : theta.indices()) {
    for (RootIndex r : {sys.simple(i), sys.negate(sys.simple(i))}) {
      in[r] = true;
      list.push_back(r);
    }
  }
  for (std::size_t k = 0; k < list.size(); ++k)
    for (std::size_t j = 0; j <= k; ++j) {
      auto s = sys.add(list[k], list[j]);
      if (s && !in[*s]) {
        in[*s] = true;
        list.push_back(*s);
      }
    }
  std::sort(list.begin(), list.end());
  return list;
}

std::vector<RootIndex> theta_closure_by_support(const RootSystem& sys, const ThetaSubset& theta) {
  std::vector<RootIndex> out;
  for (RootIndex r = 0; r < sys.num_roots(); ++r) {
    const auto& c = sys.simple_coeffs(r);
    bool inside = true;
    for (int i = 0; i < sys.rank(); ++i)
      if (c[i] != 0 && !theta.contains(i)) inside = false;
    if (inside) out.push_back(r);
  }
  return out;
}

std::vector<RootIndex> ntheta_minus(const RootSystem& sys, const ThetaSubset& theta) {
  auto closure = theta_closure(sys, theta);
  std::vector<RootIndex> out;
  for (RootIndex r = sys.num_positive(); r < sys.num_roots(); ++r)
    if (!std::binary_search(closure.begin(), closure.end(), r)) out.push_back(r);
  return out;
}

Weight characteristic_element(const RootSystem& sys, const ThetaSubset& theta) {
  const int l = sys.rank();
  auto dual = sys.simple_dual_basis();
  std::vector<int> weight(l, 1);
  if (sys.dynkin().family == Family::D && !theta.contains(l - 2) && !theta.contains(l - 1)) weight[l - 1] = 2;
  Weight h{std::vector<Rational>(sys.ambient_dim(), Rational(0))};
  for (int i = 0; i < l; ++i) {
    if (theta.contains(i)) continue;
    for (std::size_t c = 0; c < h.coords.size(); ++c) h.coords[c] += weight[i] * dual[i].coords[c];
  }
  Integer den = 1, num = 0;
  for (const auto& x : h.coords) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), x.get_num().get_mpz_t());
  }
  if (num == 0) return h;
  Rational scale(den, num);
  scale.canonicalize();
  for (auto& x : h.coords) x *= scale;
  return h;
}

std::vector<Component> z_components(const RootSystem& sys, const ThetaSubset& theta) {
  if (theta.is_full()) throw FullThetaError();
  const auto closure = theta_closure(sys, theta);
  const auto tangent = ntheta_minus(sys, theta);
  std::vector<bool> in_tangent(sys.num_roots(), false);
  for (RootIndex r : tangent) in_tangent[r] = true;
  const Weight h = characteristic_element(sys, theta);

  std::vector<int> comp_id(sys.num_roots(), -1);
  std::vector<Component> out;
  for (RootIndex start : tangent) {
    if (comp_id[start] >= 0) continue;
    const int id = static_cast<int>(out.size());
    Component comp;
    comp.theta = theta;
    comp.roots.push_back(start);
    comp_id[start] = id;
    for (std::size_t k = 0; k < comp.roots.size(); ++k)
      for (RootIndex a : closure) {
        auto s = sys.add(comp.roots[k], a);
        if (s && in_tangent[*s] && comp_id[*s] < 0) {
          comp_id[*s] = id;
          comp.roots.push_back(*s);
        }
      }
    std::sort(comp.roots.begin(), comp.roots.end());

    std::vector<RootIndex> tops;
    for (RootIndex mu : comp.roots) {
      bool top = true;
      for (int i : theta.indices()) {
        auto s = sys.add(mu, sys.simple(i));
        if (s && comp_id[*s] == id) top = false;
      }
      if (top) tops.push_back(mu);
    }
    if (tops.size() != 1) throw std::logic_error("component without a unique highest weight");
    comp.highest = tops.front();

    comp.level = sys.pairing(comp.highest, h);
    for (RootIndex r : comp.roots)
      if (sys.pairing(r, h) != comp.level) throw std::logic_error("component roots disagree on H_theta");
    out.push_back(std::move(comp));
  }
  return out;
}

std::size_t component_of(const std::vector<Component>& comps, RootIndex r) {
  for (std::size_t i = 0; i < comps.size(); ++i)
    if (comps[i].contains(r)) return i;
  return comps.size();
}

std::vector<std::pair<int, int>> lambda_terms(const RootSystem& sys, RootIndex r) {
  std::vector<std::pair<int, int>> out;
  const auto& v = sys.root(r);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) out.emplace_back(static_cast<int>(i) + 1, v[i]);
  return out;
}

int interval_start(const ThetaSubset& theta, int i) {
  int j = i;
  while (j > 1 && theta.contains(j - 2)) --j;
  return j;
}

int tail_start(const ThetaSubset& theta) {
  int i = theta.rank();
  while (i >= 1 && theta.contains(i - 1)) --i;
  return i;
}

namespace {

// Two-term roots: true when the two coordinates have equal sign.
bool is_sum_type(const RootSystem& sys, RootIndex r) {
  auto t = lambda_terms(sys, r);
  return t.size() == 2 && (t[0].second > 0) == (t[1].second > 0);
}

bool is_difference_type(const RootSystem& sys, RootIndex r) {
  auto t = lambda_terms(sys, r);
  return t.size() == 2 && (t[0].second > 0) != (t[1].second > 0);
}

} // namespace

bool long_short_split_audit(const RootSystem& sys, const ThetaSubset& theta, const std::vector<Component>& comps) {
  const int l = sys.rank();
  const Family f = sys.dynkin().family;
  if (f == Family::B && !theta.contains(l - 1)) {
    for (const auto& c : comps) {
      bool first_long = sys.is_long(c.roots.front());
      for (RootIndex r : c.roots)
        if (sys.is_long(r) != first_long) return false;
      if (!first_long) continue;
      bool first_sum = is_sum_type(sys, c.roots.front());
      for (RootIndex r : c.roots)
        if (is_sum_type(sys, r) != first_sum) return false;
    }
  }
  if (f == Family::C && !theta.contains(l - 1)) {
    const auto closure = theta_closure(sys, theta);
    auto in_closure = [&](RootIndex r) { return std::binary_search(closure.begin(), closure.end(), r); };
    for (const auto& c : comps) {
      bool has_difference = std::any_of(c.roots.begin(), c.roots.end(), [&](RootIndex r) {
        return sys.is_short(r) && is_difference_type(sys, r);
      });
      bool has_free_sum = std::any_of(c.roots.begin(), c.roots.end(), [&](RootIndex r) {
        if (!(sys.is_short(r) && is_sum_type(sys, r))) return false;
        // r = -l_i - l_j; check whether l_i - l_j lies in the span of theta.
        auto t = lambda_terms(sys, r);
        RootVector d(sys.ambient_dim(), 0);
        d[t[0].first - 1] = 1;
        d[t[1].first - 1] = -1;
        auto di = sys.find(d);
        return di && !in_closure(*di);
      });
      if (has_difference)
        for (RootIndex r : c.roots)
          if (!(sys.is_short(r) && is_difference_type(sys, r))) return false;
      if (has_free_sum)
        for (RootIndex r : c.roots)
          if (!(sys.is_short(r) && is_sum_type(sys, r))) return false;
    }
  }
  return true;
}

} // namespace flagiso
