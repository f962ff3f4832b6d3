#include "flagiso/mclass.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>

using namespace flagiso;
using flagiso::testing::all_types;
using flagiso::testing::make;
using flagiso::testing::root;

namespace {

std::vector<std::size_t> block_sizes(const MClassPartition& p) {
  std::vector<std::size_t> s;
  for (const auto& b : p) s.push_back(b.size());
  std::sort(s.begin(), s.end());
  return s;
}

} // namespace

TEST(MClass, ParityExamples) {
  for (const auto& t : all_types(6)) {
    RootSystem sys(t);
    for (int j = 0; j < t.rank; ++j) EXPECT_FALSE(parity_vector(sys, sys.simple(j)).bit(j));
    for (RootIndex r = 0; r < sys.num_roots(); ++r) EXPECT_EQ(parity_vector(sys, r), parity_vector(sys, sys.negate(r)));
  }
  auto c3 = make('C', 3);
  RootIndex l1 = root(c3, {2, 0, 0});
  for (RootIndex g = 0; g < c3.num_roots(); ++g) EXPECT_EQ(c3.killing_number(g, l1) % 2, 0);
  auto a3 = make('A', 3);
  EXPECT_EQ(parity_vector(a3, root(a3, {1, -1, 0, 0})), parity_vector(a3, root(a3, {0, 0, 1, -1})));
}

TEST(MClass, EquivalenceExamples) {
  auto a4 = make('A', 4);
  RootIndex a = root(a4, {1, -1, 0, 0, 0});
  EXPECT_TRUE(m_equivalent(a4, a, a4.negate(a)));
  EXPECT_FALSE(m_equivalent(a4, a, root(a4, {0, 0, 1, -1, 0})));
  auto b5 = make('B', 5);
  EXPECT_TRUE(m_equivalent(b5, root(b5, {1, -1, 0, 0, 0}), root(b5, {1, 1, 0, 0, 0})));
  auto g2 = make('G', 2);
  EXPECT_TRUE(m_equivalent(g2, g2.simple(0), root(g2, {1, 2})));
}

TEST(MClass, SmallPartitions) {
  auto b3 = make('B', 3);
  auto p = positive_m_classes(b3);
  ASSERT_EQ(p.size(), 3u);
  std::vector<std::vector<RootIndex>> expect{
      {root(b3, {1, -1, 0}), root(b3, {1, 1, 0}), root(b3, {0, 0, 1})},
      {root(b3, {1, 0, -1}), root(b3, {1, 0, 1}), root(b3, {0, 1, 0})},
      {root(b3, {0, 1, -1}), root(b3, {0, 1, 1}), root(b3, {1, 0, 0})},
  };
  for (auto& b : expect) std::sort(b.begin(), b.end());
  std::sort(expect.begin(), expect.end());
  std::sort(p.begin(), p.end());
  EXPECT_EQ(p, expect);

  EXPECT_EQ(block_sizes(positive_m_classes(make('E', 7))), std::vector<std::size_t>(63, 1));
  auto f4 = block_sizes(positive_m_classes(make('F', 4)));
  std::vector<std::size_t> f4_expect(12, 1);
  f4_expect.insert(f4_expect.end(), {4, 4, 4});
  EXPECT_EQ(f4, f4_expect);
}

TEST(MClass, C5LongRootsFormOneClass) {
  auto c5 = make('C', 5);
  std::vector<RootIndex> longs;
  for (RootIndex r = 0; r < c5.num_positive(); ++r)
    if (c5.is_long(r)) longs.push_back(r);
  auto p = m_classes(c5, longs);
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p[0].size(), 5u);
}

TEST(MClass, PartitionIsFibersSortedBySmallestIndex) {
  for (const auto& t : all_types(6)) {
    RootSystem sys(t);
    std::vector<RootIndex> all(sys.num_roots());
    for (RootIndex r = 0; r < all.size(); ++r) all[r] = r;
    auto p = m_classes(sys, all);
    std::size_t total = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      total += p[i].size();
      EXPECT_TRUE(std::is_sorted(p[i].begin(), p[i].end()));
      if (i) EXPECT_LT(p[i - 1].front(), p[i].front());
      for (RootIndex r : p[i]) EXPECT_EQ(parity_vector(sys, r), parity_vector(sys, p[i].front()));
      if (i) EXPECT_NE(parity_vector(sys, p[i - 1].front()), parity_vector(sys, p[i].front()));
    }
    EXPECT_EQ(total, sys.num_roots());
  }
}

TEST(MClass, ShortcutMatchesFullCheck) {
  for (const auto& t : all_types(4)) {
    RootSystem sys(t);
    for (RootIndex a = 0; a < sys.num_roots(); ++a)
      for (RootIndex b = 0; b < sys.num_roots(); ++b)
        EXPECT_EQ(m_equivalent(sys, a, b), m_equivalent_full(sys, a, b));
  }
}

TEST(MClass, OrthogonalityAudit) {
  for (const auto& t : all_types(6)) EXPECT_TRUE(orthogonality_audit(RootSystem(t))) << t.name();
}

// In sp(4,R) the sign matrices diag(e, e) act on g(l_i - l_j) and g(l_i + l_j)
// by e_i e_j and trivially on g(2 l_i), so rank 4 has no extra coincidences.
TEST(MClass, C4HasPairsAndTheLongClass) {
  auto c4 = make('C', 4);
  auto p = positive_m_classes(c4);
  EXPECT_EQ(block_sizes(p), (std::vector<std::size_t>{2, 2, 2, 2, 2, 2, 4}));
  EXPECT_FALSE(m_equivalent(c4, root(c4, {1, -1, 0, 0}), root(c4, {0, 0, 1, -1})));
  EXPECT_TRUE(m_equivalent(c4, root(c4, {1, -1, 0, 0}), root(c4, {1, 1, 0, 0})));
  auto b4 = make('B', 4);
  EXPECT_TRUE(m_equivalent(b4, root(b4, {1, -1, 0, 0}), root(b4, {0, 0, 1, -1})));
}
