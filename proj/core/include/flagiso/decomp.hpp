#pragma once

#include "flagiso/rootsys.hpp"
#include "flagiso/weylgrp.hpp"

#include <vector>

namespace flagiso {

/// A z_theta-irreducible piece of the tangent space: a set of negative roots
/// whose root spaces span one irreducible z_theta-module.
struct Component {
  ThetaSubset theta;
  std::vector<RootIndex> roots;  // sorted by index
  RootIndex highest = 0;         // unique highest weight
  Rational level;                // common value of the roots on H_theta

  std::size_t dim() const noexcept { return roots.size(); }
  bool contains(RootIndex r) const;
};

/// Roots in the span of theta, both signs, sorted. Computed as the additive
/// closure of +-theta.
std::vector<RootIndex> theta_closure(const RootSystem& sys, const ThetaSubset& theta);

/// Same set computed from simple-root supports. Used to cross-check.
std::vector<RootIndex> theta_closure_by_support(const RootSystem& sys, const ThetaSubset& theta);

/// Negative roots outside the span of theta, sorted.
std::vector<RootIndex> ntheta_minus(const RootSystem& sys, const ThetaSubset& theta);

/// A dominant vector vanishing exactly on theta among the simple roots, scaled
/// to primitive integer coordinates. For D_l the last coordinate is kept
/// nonzero whenever the vanishing conditions allow it.
Weight characteristic_element(const RootSystem& sys, const ThetaSubset& theta);

/// Connected pieces of ntheta_minus under beta -> beta + alpha with alpha in
/// the span of theta. Throws FullThetaError when theta is everything.
std::vector<Component> z_components(const RootSystem& sys, const ThetaSubset& theta);

/// Index of the component containing `r`, or components.size().
std::size_t component_of(const std::vector<Component>& comps, RootIndex r);

/// Homogeneity of root lengths and types inside components, in the cases
/// where it is expected: B_l with lambda_l outside theta, C_l with 2 lambda_l
/// outside theta. Vacuously true elsewhere.
bool long_short_split_audit(const RootSystem& sys, const ThetaSubset& theta, const std::vector<Component>& comps);

// Index bookkeeping for the classical families, 1-based like the simple roots.

/// Smallest j <= i with alpha_j, ..., alpha_{i-1} all in theta.
int interval_start(const ThetaSubset& theta, int i);

/// Largest index whose simple root is not in theta, assuming alpha_l is in
/// theta. Returns 0 when the whole chain is in theta.
int tail_start(const ThetaSubset& theta);

/// For a classical root: the 1-based lambda indices with nonzero coordinate,
/// paired with the coordinate. Sorted by index.
std::vector<std::pair<int, int>> lambda_terms(const RootSystem& sys, RootIndex r);

} // namespace flagiso
