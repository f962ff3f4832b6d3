#pragma once

#include "flagiso/chevalley.hpp"
#include "flagiso/linalg.hpp"
#include "flagiso/rootsys.hpp"
#include "flagiso/weylgrp.hpp"

#include <cstdint>
#include <vector>

namespace flagiso {

/// Sparse integer operator on the root basis of the tangent space; column c
/// lists the nonzero entries (row, value) of the image of basis vector c.
struct SparseOperator {
  std::vector<std::vector<std::pair<std::size_t, int>>> columns;
  QMatrix dense() const;
};

/// The isotropy representation of K_theta on n_theta^-, in the basis of root
/// vectors E_beta. The identity component is generated by X_alpha = E_alpha -
/// E_{-alpha} for alpha a positive root in the span of theta; the M-group acts
/// on E_beta by the sign (-1)^<alpha_i^vee, beta> for each simple alpha_i.
///
/// The invariant inner product is diagonal in this basis with weight
/// max_norm2 / |beta|^2 on E_beta; it is the identity for simply-laced types.
class IsotropyRep {
public:
  /// Throws FullThetaError when theta is everything.
  IsotropyRep(const RootSystem& sys, const ThetaSubset& theta);

  const RootSystem& system() const noexcept { return *sys_; }
  const ThetaSubset& theta() const noexcept { return theta_; }
  const StructureConstants& constants() const noexcept { return sc_; }

  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<RootIndex>& basis() const noexcept { return basis_; }
  /// Position of a root in the basis, or dim() when absent.
  std::size_t position(RootIndex r) const;

  /// Positive roots of the span of theta, one per k-generator.
  const std::vector<RootIndex>& k_roots() const noexcept { return k_roots_; }
  const std::vector<SparseOperator>& k_generators() const noexcept { return k_gens_; }
  /// Diagonal signs, one vector per simple root.
  const std::vector<std::vector<int>>& m_generators() const noexcept { return m_gens_; }
  /// M-character of basis vector p, as parity bits over the simple roots.
  std::uint32_t character(std::size_t p) const { return chars_[p]; }
  const std::vector<Rational>& weights() const noexcept { return weights_; }

  std::vector<Rational> apply(const SparseOperator& op, const std::vector<Rational>& v) const;

private:
  const RootSystem* sys_;
  ThetaSubset theta_;
  StructureConstants sc_;
  std::vector<RootIndex> basis_;
  std::vector<std::size_t> position_;
  std::vector<RootIndex> k_roots_;
  std::vector<SparseOperator> k_gens_;
  std::vector<std::vector<int>> m_gens_;
  std::vector<std::uint32_t> chars_;
  std::vector<Rational> weights_;
};

/// An M-invariant subspace in reduced column-echelon form. Every column is an
/// M-eigenvector; `characters[c]` is its character. Coordinates of a vector of
/// the subspace are its entries at the pivot rows.
struct Subspace {
  QMatrix basis;
  std::vector<std::size_t> pivots;
  std::vector<std::uint32_t> characters;

  std::size_t dim() const noexcept { return basis.cols(); }
  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis == b.basis; }
};

/// Canonical form of the span of `spanning`. The span must be M-invariant.
Subspace make_subspace(const IsotropyRep& rep, const QMatrix& spanning);
/// Span of the root vectors of the given roots.
Subspace root_subspace(const IsotropyRep& rep, const std::vector<RootIndex>& roots);
Subspace whole_space(const IsotropyRep& rep);

/// True iff the span of the columns is preserved by every k- and m-generator.
bool invariant_check(const IsotropyRep& rep, const QMatrix& spanning);

/// Matrices of the k-generators in subspace coordinates. The subspace must be invariant.
std::vector<QMatrix> restricted_generators(const IsotropyRep& rep, const Subspace& s);
/// Gram matrix of the invariant inner product on the subspace basis.
QMatrix restricted_gram(const IsotropyRep& rep, const Subspace& s);

/// Basis of the self-adjoint operators on `s` commuting with the group.
std::vector<QMatrix> symmetric_commutant(const IsotropyRep& rep, const Subspace& s);
std::size_t symmetric_commutant_dim(const IsotropyRep& rep, const Subspace& s);

/// Basis of the intertwiners from `a` to `b`, as dim(b) x dim(a) matrices in
/// subspace coordinates.
std::vector<QMatrix> intertwiners(const IsotropyRep& rep, const Subspace& a, const Subspace& b);
std::size_t intertwiner_dim(const IsotropyRep& rep, const Subspace& a, const Subspace& b);

/// Columns x * a_c + y * T(a_c) over the basis of `a`: the graph of y T / x.
QMatrix graph_subspace(const Subspace& a, const Subspace& b, const QMatrix& t, const Rational& x, const Rational& y);

struct OracleBlock {
  Subspace space;
  /// False when the splitting search gave up on a reducible space.
  bool irreducible = true;
};

/// Splits an invariant subspace into pairwise orthogonal invariant subspaces
/// with one-dimensional symmetric commutant. Ordered by leading pivot.
std::vector<OracleBlock> decompose(const IsotropyRep& rep, const Subspace& s);
std::vector<OracleBlock> decompose(const IsotropyRep& rep);

/// Groups blocks into isotypic classes (nonzero intertwiners). Each class is
/// a sorted list of block indices; classes ordered by first member.
std::vector<std::vector<std::size_t>> isotypic_classes(const IsotropyRep& rep, const std::vector<OracleBlock>& blocks);

} // namespace flagiso
