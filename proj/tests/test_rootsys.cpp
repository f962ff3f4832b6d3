#include "flagiso/error.hpp"
#include "flagiso/rootsys.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace flagiso;
using flagiso::testing::all_types;
using flagiso::testing::make;
using flagiso::testing::root;

namespace {

std::size_t expected_positive(const DynkinType& t) {
  const std::size_t l = t.rank;
  switch (t.family) {
  case Family::A: return l * (l + 1) / 2;
  case Family::B:
  case Family::C: return l * l;
  case Family::D: return l * (l - 1);
  case Family::E: return l == 6 ? 36 : l == 7 ? 63 : 120;
  case Family::F: return 24;
  case Family::G: return 6;
  }
  return 0;
}

// dim g for each simple type; |positive roots| = (dim g - rank) / 2.
std::size_t lie_dimension(const DynkinType& t) {
  const std::size_t l = t.rank;
  switch (t.family) {
  case Family::A: return l * (l + 2);
  case Family::B:
  case Family::C: return l * (2 * l + 1);
  case Family::D: return l * (2 * l - 1);
  case Family::E: return l == 6 ? 78 : l == 7 ? 133 : 248;
  case Family::F: return 52;
  case Family::G: return 14;
  }
  return 0;
}

} // namespace

TEST(RootSystem, PositiveRootCounts) {
  for (const auto& t : all_types(8)) {
    RootSystem sys(t);
    EXPECT_EQ(sys.num_positive(), expected_positive(t)) << t.name();
    EXPECT_EQ(2 * sys.num_positive() + t.rank, lie_dimension(t)) << t.name();
    EXPECT_EQ(sys.num_roots(), 2 * sys.num_positive());
  }
}

TEST(RootSystem, ClosureFromCartanMatrixAgrees) {
  for (const auto& t : all_types(8)) {
    RootSystem sys(t);
    auto closure = positive_roots_by_closure(sys.cartan());
    std::set<std::vector<int>> a(closure.begin(), closure.end());
    std::set<std::vector<int>> b;
    for (RootIndex r = 0; r < sys.num_positive(); ++r) b.insert(sys.simple_coeffs(r));
    EXPECT_EQ(a, b) << t.name();
  }
}

TEST(RootSystem, RankBoundsAreEnforced) {
  EXPECT_THROW(DynkinType::make('A', 0), InvalidDynkinType);
  EXPECT_THROW(DynkinType::make('B', 1), InvalidDynkinType);
  EXPECT_THROW(DynkinType::make('C', 2), InvalidDynkinType);
  EXPECT_THROW(DynkinType::make('D', 3), InvalidDynkinType);
  EXPECT_THROW(DynkinType::make('E', 5), InvalidDynkinType);
  EXPECT_THROW(DynkinType::make('E', 9), InvalidDynkinType);
  EXPECT_THROW(DynkinType::make('F', 3), InvalidDynkinType);
  EXPECT_THROW(DynkinType::make('G', 3), InvalidDynkinType);
  EXPECT_THROW(DynkinType::make('X', 3), InvalidDynkinType);
  EXPECT_NO_THROW(DynkinType::make('A', 1));
}

TEST(RootSystem, B2PositiveRoots) {
  auto sys = make('B', 2);
  std::set<RootVector> got;
  for (RootIndex r = 0; r < sys.num_positive(); ++r) got.insert(sys.root(r));
  EXPECT_EQ(got, (std::set<RootVector>{{1, -1}, {1, 1}, {1, 0}, {0, 1}}));
}

TEST(RootSystem, A1HasOnePositiveRoot) {
  auto sys = make('A', 1);
  ASSERT_EQ(sys.num_positive(), 1u);
  EXPECT_EQ(sys.root(0), (RootVector{1, -1}));
}

TEST(RootSystem, SimpleRootConventions) {
  EXPECT_EQ(make('B', 4).root(3), (RootVector{0, 0, 0, 1}));
  EXPECT_EQ(make('C', 4).root(3), (RootVector{0, 0, 0, 2}));
  auto d5 = make('D', 5);
  EXPECT_EQ(d5.root(3), (RootVector{0, 0, 0, 1, -1}));
  EXPECT_EQ(d5.root(4), (RootVector{0, 0, 0, 1, 1}));
  auto g2 = make('G', 2);
  EXPECT_TRUE(g2.is_long(g2.simple(0)));
  EXPECT_TRUE(g2.is_short(g2.simple(1)));
  for (const auto& t : all_types(8)) {
    RootSystem sys(t);
    for (int i = 0; i < t.rank; ++i) EXPECT_EQ(sys.height(sys.simple(i)), 1);
  }
}

TEST(RootSystem, KillingNumbers) {
  auto g2 = make('G', 2);
  EXPECT_EQ(g2.killing_number(g2.simple(1), g2.simple(0)), -3);
  EXPECT_EQ(g2.killing_number(g2.simple(0), g2.simple(1)), -1);
  auto b2 = make('B', 2);
  EXPECT_EQ(b2.killing_number(root(b2, {1, -1}), root(b2, {1, 0})), 1);
}

TEST(RootSystem, KillingNumberProperties) {
  for (const auto& t : all_types(6)) {
    RootSystem sys(t);
    for (RootIndex a = 0; a < sys.num_roots(); ++a) {
      EXPECT_EQ(sys.killing_number(a, a), 2);
      for (RootIndex b = 0; b < sys.num_roots(); ++b) {
        int prod = sys.killing_number(a, b) * sys.killing_number(b, a);
        EXPECT_GE(prod, 0);
        EXPECT_LE(prod, 4);
        if (prod == 4) EXPECT_TRUE(b == a || b == sys.negate(a));
      }
    }
  }
}

TEST(RootSystem, RootStringsAreIntervals) {
  for (const auto& t : all_types(5)) {
    RootSystem sys(t);
    for (RootIndex a = 0; a < sys.num_roots(); ++a)
      for (RootIndex b = 0; b < sys.num_roots(); ++b) {
        if (b == a || b == sys.negate(a)) continue;
        // Walk the string by ambient vectors, independently of add().
        auto at = [&](int k) {
          RootVector v = sys.root(b);
          for (std::size_t c = 0; c < v.size(); ++c) v[c] += k * sys.root(a)[c];
          return sys.find(v).has_value();
        };
        int p = 0, q = 0;
        while (at(-(p + 1))) ++p;
        while (at(q + 1)) ++q;
        for (int k = -p - 3; k <= q + 3; ++k) EXPECT_EQ(at(k), k >= -p && k <= q);
        EXPECT_EQ(p - q, sys.killing_number(a, b)) << t.name();
      }
  }
}

TEST(RootSystem, LengthsAndCartanEntries) {
  for (const auto& t : all_types(8)) {
    RootSystem sys(t);
    std::set<int> lengths;
    for (RootIndex r = 0; r < sys.num_roots(); ++r) lengths.insert(sys.norm2(r));
    EXPECT_EQ(lengths.size(), t.simply_laced() ? 1u : 2u) << t.name();
    for (const auto& row : sys.cartan())
      for (int x : row) {
        EXPECT_GE(x, -3);
        EXPECT_LE(x, 2);
      }
    for (RootIndex r = 0; r < sys.num_positive(); ++r)
      for (int c : sys.simple_coeffs(r)) EXPECT_GE(c, 0);
    for (RootIndex r = 0; r < sys.num_roots(); ++r) EXPECT_EQ(sys.root(sys.negate(r)), [&] {
        RootVector v = sys.root(r);
        for (auto& x : v) x = -x;
        return v;
      }());
  }
}

TEST(RootSystem, LongAndShort) {
  auto c3 = make('C', 3);
  EXPECT_TRUE(c3.is_long(root(c3, {2, 0, 0})));
  EXPECT_TRUE(c3.is_short(root(c3, {1, 1, 0})));
  auto a2 = make('A', 2);
  for (RootIndex r = 0; r < a2.num_roots(); ++r) EXPECT_TRUE(a2.is_long(r));
}

TEST(RootSystem, Coroots) {
  auto b3 = make('B', 3);
  Weight c = b3.coroot(root(b3, {0, 1, 0}));
  EXPECT_EQ(c.coords, (std::vector<Rational>{0, 2, 0}));
  for (const auto& t : all_types(6)) {
    RootSystem sys(t);
    for (RootIndex a = 0; a < sys.num_roots(); ++a)
      for (RootIndex b = 0; b < sys.num_roots(); b += 3)
        EXPECT_EQ(sys.copairing(a, sys.to_weight(b)), Rational(sys.killing_number(a, b)));
  }
}

TEST(RootSystem, HighestRoot) {
  auto a2 = make('A', 2);
  EXPECT_EQ(a2.root(a2.highest_root()), (RootVector{1, 0, -1}));
  auto f4 = make('F', 4);
  EXPECT_EQ(f4.simple_coeffs(f4.highest_root()), (std::vector<int>{2, 3, 4, 2}));
  auto g2 = make('G', 2);
  EXPECT_EQ(g2.simple_coeffs(g2.highest_root()), (std::vector<int>{2, 3}));
  // Brute force: the unique root of maximal height, and no simple root raises it.
  for (const auto& t : all_types(8)) {
    RootSystem sys(t);
    RootIndex best = 0;
    for (RootIndex r = 0; r < sys.num_positive(); ++r)
      if (sys.height(r) > sys.height(best)) best = r;
    EXPECT_EQ(sys.highest_root(), best);
    for (int i = 0; i < t.rank; ++i) EXPECT_FALSE(sys.add(best, sys.simple(i)).has_value());
  }
}

TEST(RootSystem, FundamentalWeights) {
  auto a1 = make('A', 1);
  EXPECT_EQ(a1.fundamental_weights()[0].coords, (std::vector<Rational>{Rational(1, 2), Rational(-1, 2)}));
  auto f4 = make('F', 4);
  EXPECT_EQ(f4.fundamental_weights()[3].coords, (std::vector<Rational>{1, 2, 3, 2}));
  EXPECT_EQ(f4.fundamental_weights()[0].coords, (std::vector<Rational>{2, 3, 4, 2}));
  for (const auto& t : all_types(8)) {
    RootSystem sys(t);
    auto w = sys.fundamental_weights();
    auto h = sys.simple_dual_basis();
    for (int i = 0; i < t.rank; ++i)
      for (int j = 0; j < t.rank; ++j) {
        EXPECT_EQ(sys.copairing(sys.simple(i), w[j]), Rational(i == j ? 1 : 0));
        EXPECT_EQ(sys.pairing(sys.simple(i), h[j]), Rational(i == j ? 1 : 0));
      }
  }
}

TEST(RootSystem, Labels) {
  auto b3 = make('B', 3);
  EXPECT_EQ(b3.label(root(b3, {-1, 0, 1})), "-λ1+λ3");
  EXPECT_EQ(b3.label(root(b3, {0, -1, 0})), "-λ2");
  auto c3 = make('C', 3);
  EXPECT_EQ(c3.label(root(c3, {2, 0, 0})), "2λ1");
  auto f4 = make('F', 4);
  EXPECT_EQ(f4.label(f4.negate(f4.highest_root())), "-(2,3,4,2)");
}
