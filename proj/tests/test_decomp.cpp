#include "flagiso/decomp.hpp"
#include "flagiso/error.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace flagiso;
using flagiso::testing::all_types;
using flagiso::testing::make;
using flagiso::testing::neg;
using flagiso::testing::root;

namespace {

std::vector<RootIndex> sorted(std::vector<RootIndex> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<RootIndex> with_negatives(const RootSystem& sys, const std::vector<RootIndex>& pos) {
  std::vector<RootIndex> out = pos;
  for (RootIndex r : pos) out.push_back(sys.negate(r));
  return sorted(out);
}

} // namespace

TEST(Decomp, ThetaClosureExamples) {
  auto a3 = make('A', 3);
  EXPECT_TRUE(theta_closure(a3, ThetaSubset::empty(3)).empty());
  EXPECT_EQ(theta_closure(a3, ThetaSubset::from_indices(3, {1, 2})),
            with_negatives(a3, {root(a3, {1, -1, 0, 0}), root(a3, {0, 1, -1, 0}), root(a3, {1, 0, -1, 0})}));
  auto b3 = make('B', 3);
  EXPECT_EQ(theta_closure(b3, ThetaSubset::from_indices(3, {2, 3})),
            with_negatives(b3, {root(b3, {0, 1, -1}), root(b3, {0, 0, 1}), root(b3, {0, 1, 0}), root(b3, {0, 1, 1})}));
}

TEST(Decomp, ClosureAgreesWithSupport) {
  for (const auto& t : all_types(6)) {
    RootSystem sys(t);
    for (std::uint32_t bits = 0; bits < (1u << t.rank); ++bits) {
      ThetaSubset th(t.rank, bits);
      EXPECT_EQ(theta_closure(sys, th), theta_closure_by_support(sys, th));
    }
  }
}

TEST(Decomp, NthetaMinusExamples) {
  auto a2 = make('A', 2);
  EXPECT_EQ(ntheta_minus(a2, ThetaSubset::from_indices(2, {1})),
            sorted({neg(a2, {1, 0, -1}), neg(a2, {0, 1, -1})}));
  EXPECT_EQ(ntheta_minus(a2, ThetaSubset::empty(2)).size(), 3u);
  auto f4 = make('F', 4);
  EXPECT_EQ(ntheta_minus(f4, ThetaSubset::from_indices(4, {2, 3, 4})).size(), 15u);
}

TEST(Decomp, ComponentExamples) {
  auto c3 = make('C', 3);
  auto comps = z_components(c3, ThetaSubset::from_indices(3, {1}));
  auto& c = comps[component_of(comps, neg(c3, {0, 2, 0}))];
  EXPECT_EQ(c.roots, sorted({neg(c3, {2, 0, 0}), neg(c3, {1, 1, 0}), neg(c3, {0, 2, 0})}));
  EXPECT_EQ(c.highest, neg(c3, {0, 2, 0}));

  auto f4 = make('F', 4);
  auto fc = z_components(f4, ThetaSubset::from_indices(4, {2, 3, 4}));
  std::vector<std::size_t> dims;
  for (const auto& x : fc) dims.push_back(x.dim());
  std::sort(dims.begin(), dims.end());
  EXPECT_EQ(dims, (std::vector<std::size_t>{1, 14}));

  // B5 with alpha_2, alpha_3 and lambda_5 outside theta: g_{-lambda_3} is on its own.
  auto b5 = make('B', 5);
  auto bc = z_components(b5, ThetaSubset::from_indices(5, {1, 4}));
  EXPECT_EQ(bc[component_of(bc, neg(b5, {0, 0, 1, 0, 0}))].dim(), 1u);

  for (const auto& x : z_components(b5, ThetaSubset::empty(5))) EXPECT_EQ(x.dim(), 1u);
  EXPECT_THROW(z_components(b5, ThetaSubset::full(5)), FullThetaError);
}

TEST(Decomp, ComponentInvariants) {
  for (const auto& t : all_types(5)) {
    RootSystem sys(t);
    for (std::uint32_t bits = 0; bits + 1 < (1u << t.rank); ++bits) {
      ThetaSubset th(t.rank, bits);
      auto tangent = ntheta_minus(sys, th);
      auto closure = theta_closure(sys, th);
      auto comps = z_components(sys, th);
      std::vector<RootIndex> all;
      for (const auto& c : comps) {
        all.insert(all.end(), c.roots.begin(), c.roots.end());
        EXPECT_TRUE(c.contains(c.highest));
        for (RootIndex r : c.roots)
          for (RootIndex a : closure) {
            auto s = sys.add(r, a);
            if (s && std::binary_search(tangent.begin(), tangent.end(), *s)) EXPECT_TRUE(c.contains(*s));
          }
        for (int i : th.indices()) {
          auto up = sys.add(c.highest, sys.simple(i));
          EXPECT_FALSE(up && c.contains(*up));
        }
      }
      EXPECT_EQ(sorted(all), tangent);
      EXPECT_TRUE(long_short_split_audit(sys, th, comps));
    }
  }
}

TEST(Decomp, CharacteristicElement) {
  auto b3 = make('B', 3);
  EXPECT_EQ(characteristic_element(b3, ThetaSubset::from_indices(3, {2})).coords, (std::vector<Rational>{2, 1, 1}));
  for (const auto& t : all_types(6)) {
    RootSystem sys(t);
    for (std::uint32_t bits = 0; bits + 1 < (1u << t.rank); ++bits) {
      ThetaSubset th(t.rank, bits);
      Weight h = characteristic_element(sys, th);
      for (int i = 0; i < t.rank; ++i) {
        Rational v = sys.pairing(sys.simple(i), h);
        EXPECT_GE(v, 0);
        EXPECT_EQ(v == 0, th.contains(i));
      }
      for (const auto& x : h.coords) EXPECT_EQ(x.get_den(), 1);
    }
  }
}

TEST(Decomp, CharacteristicElementKeepsLastCoordinateForD) {
  for (int l = 4; l <= 7; ++l) {
    auto sys = make('D', l);
    for (std::uint32_t bits = 0; bits + 1 < (1u << l); ++bits) {
      ThetaSubset th(l, bits);
      Weight h = characteristic_element(sys, th);
      bool forced = th.contains(l - 2) && th.contains(l - 1);
      EXPECT_EQ(h.coords[l - 1] != 0, !forced);
    }
  }
}

TEST(Decomp, IndexBookkeeping) {
  auto th = ThetaSubset::from_indices(6, {1, 2, 4, 6});
  EXPECT_EQ(interval_start(th, 3), 1);
  EXPECT_EQ(interval_start(th, 2), 1);
  EXPECT_EQ(interval_start(th, 1), 1);
  EXPECT_EQ(interval_start(th, 5), 4);
  EXPECT_EQ(interval_start(th, 4), 4);
  EXPECT_EQ(tail_start(th), 5);
  EXPECT_EQ(tail_start(ThetaSubset::from_indices(4, {2, 3, 4})), 1);
  EXPECT_EQ(tail_start(ThetaSubset::full(3)), 0);
}
