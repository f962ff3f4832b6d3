#include "flagiso/decomp.hpp"
#include "flagiso/error.hpp"
#include "flagiso/mclass.hpp"
#include "flagiso/oracle.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace flagiso;
using flagiso::testing::all_types;
using flagiso::testing::make;
using flagiso::testing::neg;
using flagiso::testing::root;

namespace {

QMatrix diag(const std::vector<Rational>& d) {
  QMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

std::vector<std::size_t> dims(const std::vector<OracleBlock>& blocks) {
  std::vector<std::size_t> out;
  for (const auto& b : blocks) out.push_back(b.space.dim());
  std::sort(out.begin(), out.end());
  return out;
}

Subspace component_space(const IsotropyRep& rep, const RootSystem& sys, RootIndex r) {
  auto comps = z_components(sys, rep.theta());
  return root_subspace(rep, comps[component_of(comps, r)].roots);
}

} // namespace

TEST(Oracle, A2SingleGenerator) {
  auto a2 = make('A', 2);
  IsotropyRep rep(a2, ThetaSubset::from_indices(2, {1}));
  ASSERT_EQ(rep.dim(), 2u);
  ASSERT_EQ(rep.k_generators().size(), 1u);
  QMatrix k = rep.k_generators()[0].dense();
  EXPECT_EQ(k(0, 0), 0);
  EXPECT_EQ(k(1, 1), 0);
  EXPECT_EQ(abs(k(0, 1)), 1);
  EXPECT_EQ(k(0, 1), -k(1, 0));
}

TEST(Oracle, EmptyThetaHasNoKGenerators) {
  auto b3 = make('B', 3);
  IsotropyRep rep(b3, ThetaSubset::empty(3));
  EXPECT_TRUE(rep.k_generators().empty());
  EXPECT_EQ(rep.m_generators().size(), 3u);
  EXPECT_THROW(IsotropyRep(b3, ThetaSubset::full(3)), FullThetaError);
}

TEST(Oracle, GeneratorsPreserveTheInnerProduct) {
  for (const auto& t : all_types(4)) {
    RootSystem sys(t);
    for (std::uint32_t bits = 0; bits + 1 < (1u << t.rank); ++bits) {
      IsotropyRep rep(sys, ThetaSubset(t.rank, bits));
      QMatrix d = diag(rep.weights());
      for (const auto& g : rep.k_generators()) {
        QMatrix dk = d * g.dense();
        EXPECT_EQ(dk, dk.transposed().scaled(-1)) << t.name();
        if (t.simply_laced()) EXPECT_EQ(g.dense(), g.dense().transposed().scaled(-1));
        // Each M-generator conjugates K to +-K.
        for (const auto& m : rep.m_generators()) {
          std::vector<Rational> md(m.begin(), m.end());
          QMatrix conj = diag(md) * g.dense() * diag(md);
          EXPECT_TRUE(conj == g.dense() || conj == g.dense().scaled(-1));
        }
      }
      for (std::size_t p = 0; p < rep.dim(); ++p) {
        auto pv = parity_vector(sys, rep.basis()[p]);
        EXPECT_EQ(rep.character(p), pv.bits());
        for (int i = 0; i < t.rank; ++i) EXPECT_EQ(rep.m_generators()[i][p], pv.bit(i) ? -1 : 1);
      }
    }
  }
}

TEST(Oracle, InvariantCheck) {
  auto b2 = make('B', 2);
  IsotropyRep rep(b2, ThetaSubset::from_indices(2, {2}));
  // -lambda1 alone is not invariant; the whole component is.
  QMatrix v(rep.dim(), 1);
  v(rep.position(neg(b2, {1, 0})), 0) = 1;
  EXPECT_FALSE(invariant_check(rep, v));
  EXPECT_TRUE(invariant_check(rep, QMatrix::identity(rep.dim())));
  EXPECT_TRUE(invariant_check(rep, QMatrix(rep.dim(), 0)));
}

TEST(Oracle, CommutantDimensions) {
  auto b2 = make('B', 2);
  IsotropyRep rb(b2, ThetaSubset::from_indices(2, {2}));
  EXPECT_EQ(symmetric_commutant_dim(rb, component_space(rb, b2, neg(b2, {1, 0}))), 2u);
  auto a2 = make('A', 2);
  IsotropyRep ra(a2, ThetaSubset::empty(2));
  EXPECT_EQ(symmetric_commutant_dim(ra, root_subspace(ra, {ra.basis()[0]})), 1u);

  auto f4 = make('F', 4);
  IsotropyRep rf(f4, ThetaSubset::from_indices(4, {2, 3, 4}));
  auto comps = z_components(f4, rf.theta());
  ASSERT_EQ(comps.size(), 2u);
  // Restricted to u(3) the 14-dim module of sp(6,R) is 2 + 12.
  for (const auto& c : comps)
    EXPECT_EQ(symmetric_commutant_dim(rf, root_subspace(rf, c.roots)), c.dim() == 14 ? 2u : 1u);
  EXPECT_EQ(dims(decompose(rf)), (std::vector<std::size_t>{1, 2, 12}));
}

TEST(Oracle, Intertwiners) {
  auto g2 = make('G', 2);
  IsotropyRep rg(g2, ThetaSubset::empty(2));
  auto a = root_subspace(rg, {neg(g2, {1, 0})});
  auto b = root_subspace(rg, {neg(g2, {1, 2})});
  EXPECT_EQ(intertwiner_dim(rg, a, b), 1u);
  EXPECT_EQ(intertwiner_dim(rg, a, a), 1u);

  auto e6 = make('E', 6);
  IsotropyRep re(e6, ThetaSubset::empty(6));
  for (std::size_t i = 0; i < re.dim(); i += 5)
    for (std::size_t j = i + 1; j < re.dim(); j += 7)
      EXPECT_EQ(intertwiner_dim(re, root_subspace(re, {re.basis()[i]}), root_subspace(re, {re.basis()[j]})), 0u);
}

TEST(Oracle, DecomposeNamedFlags) {
  auto a3 = make('A', 3);
  IsotropyRep ra(a3, ThetaSubset::from_indices(3, {1, 3}));
  EXPECT_EQ(dims(decompose(ra)), (std::vector<std::size_t>{2, 2}));

  auto d4 = make('D', 4);
  IsotropyRep rd(d4, ThetaSubset::from_indices(4, {1, 2, 3}));
  auto blocks = decompose(rd);
  EXPECT_EQ(dims(blocks), (std::vector<std::size_t>{3, 3}));
  // so(4) = so(3) + so(3) acts on each block through a different factor.
  EXPECT_EQ(intertwiner_dim(rd, blocks[0].space, blocks[1].space), 0u);

  auto e8 = make('E', 8);
  IsotropyRep re(e8, ThetaSubset::empty(8));
  EXPECT_EQ(dims(decompose(re)), std::vector<std::size_t>(120, 1));
}

TEST(Oracle, DecomposeProperties) {
  for (const auto& t : all_types(3)) {
    RootSystem sys(t);
    for (std::uint32_t bits = 0; bits + 1 < (1u << t.rank); ++bits) {
      IsotropyRep rep(sys, ThetaSubset(t.rank, bits));
      auto blocks = decompose(rep);
      std::size_t total = 0;
      QMatrix d = diag(rep.weights());
      for (std::size_t i = 0; i < blocks.size(); ++i) {
        const auto& s = blocks[i].space;
        total += s.dim();
        EXPECT_TRUE(blocks[i].irreducible);
        EXPECT_TRUE(invariant_check(rep, s.basis));
        EXPECT_EQ(symmetric_commutant_dim(rep, s), 1u);
        for (std::size_t j = i + 1; j < blocks.size(); ++j)
          EXPECT_TRUE((s.basis.transposed() * d * blocks[j].space.basis).is_zero());
      }
      EXPECT_EQ(total, rep.dim());
    }
  }
}

TEST(Oracle, GraphSubspacesOfEquivalentBlocksAreInvariant) {
  auto g2 = make('G', 2);
  IsotropyRep rep(g2, ThetaSubset::from_indices(2, {1}));
  auto blocks = decompose(rep);
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      if (i == j || blocks[i].space.dim() != blocks[j].space.dim()) continue;
      for (const auto& t : intertwiners(rep, blocks[i].space, blocks[j].space))
        EXPECT_TRUE(invariant_check(rep, graph_subspace(blocks[i].space, blocks[j].space, t, 2, -3)));
    }
}
