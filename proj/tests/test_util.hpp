#pragma once

#include "flagiso/rootsys.hpp"

#include <gtest/gtest.h>

#include <string>
#include <vector>

namespace flagiso::testing {

inline RootSystem make(char family, int rank) { return RootSystem(DynkinType::make(family, rank)); }

/// Root with the given ambient coordinates; fails the test if absent.
inline RootIndex root(const RootSystem& sys, const RootVector& v) {
  auto r = sys.find(v);
  EXPECT_TRUE(r.has_value());
  return r.value_or(0);
}

inline RootIndex neg(const RootSystem& sys, const RootVector& v) {
  RootVector w = v;
  for (auto& x : w) x = -x;
  return root(sys, w);
}

/// Every Dynkin type with rank at most `max_rank`.
inline std::vector<DynkinType> all_types(int max_rank) {
  std::vector<DynkinType> out;
  for (int l = 1; l <= max_rank; ++l) out.push_back(DynkinType::make('A', l));
  for (int l = 2; l <= max_rank; ++l) out.push_back(DynkinType::make('B', l));
  for (int l = 3; l <= max_rank; ++l) out.push_back(DynkinType::make('C', l));
  for (int l = 4; l <= max_rank; ++l) out.push_back(DynkinType::make('D', l));
  for (int l = 6; l <= std::min(8, max_rank); ++l) out.push_back(DynkinType::make('E', l));
  if (max_rank >= 4) out.push_back(DynkinType::make('F', 4));
  if (max_rank >= 2) out.push_back(DynkinType::make('G', 2));
  return out;
}

} // namespace flagiso::testing
