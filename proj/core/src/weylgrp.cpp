#include "flagiso/weylgrp.hpp"

#include "flagiso/error.hpp"

#include <algorithm>
#include <bit>
#include <deque>

namespace flagiso {

ThetaSubset ThetaSubset::from_indices(int rank, const std::vector<int>& one_based) {
  std::uint32_t bits = 0;
  for (int i : one_based) {
    if (i < 1 || i > rank) throw Error("theta index " + std::to_string(i) + " outside [1, " + std::to_string(rank) + "]");
    bits |= std::uint32_t{1} << (i - 1);
  }
  return ThetaSubset(rank, bits);
}

int ThetaSubset::size() const noexcept { return std::popcount(bits_); }

std::vector<int> ThetaSubset::indices() const {
  std::vector<int> out;
  for (int i = 0; i < rank_; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::vector<int> ThetaSubset::one_based() const {
  auto v = indices();
  for (auto& i : v) ++i;
  return v;
}

std::string ThetaSubset::to_string() const {
  std::string s = "{";
  auto v = one_based();
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

RootIndex reflect(const RootSystem& sys, RootIndex alpha, RootIndex beta) {
  int k = sys.killing_number(alpha, beta);
  RootVector v = sys.root(beta);
  const RootVector& a = sys.root(alpha);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= k * a[i];
  auto r = sys.find(v);
  if (!r) throw std::logic_error("reflection left the root system");
  return *r;
}

std::vector<RootIndex> orbit(const RootSystem& sys, const ThetaSubset& theta, RootIndex seed) {
  std::vector<bool> seen(sys.num_roots(), false);
  std::vector<RootIndex> out{seed};
  seen[seed] = true;
  const auto gens = theta.indices();
  for (std::size_t k = 0; k < out.size(); ++k)
    for (int i : gens) {
      RootIndex r = reflect(sys, sys.simple(i), out[k]);
      if (!seen[r]) {
        seen[r] = true;
        out.push_back(r);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_transitive_on(const RootSystem& sys, const ThetaSubset& theta, const std::vector<RootIndex>& roots) {
  if (roots.empty()) return true;
  auto orb = orbit(sys, theta, roots.front());
  return std::all_of(roots.begin(), roots.end(),
                     [&](RootIndex r) { return std::binary_search(orb.begin(), orb.end(), r); });
}

} // namespace flagiso
