#pragma once

#include "flagiso/rootsys.hpp"

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace flagiso {

/// Subset of the simple roots, stored as a bit set over 0-based indices.
class ThetaSubset {
public:
  ThetaSubset() = default;
  ThetaSubset(int rank, std::uint32_t bits) : rank_(rank), bits_(bits) {}

  /// From 1-based simple-root indices, as written on the command line.
  static ThetaSubset from_indices(int rank, const std::vector<int>& one_based);
  static ThetaSubset empty(int rank) { return ThetaSubset(rank, 0); }
  static ThetaSubset full(int rank) { return ThetaSubset(rank, (std::uint32_t{1} << rank) - 1); }

  int rank() const noexcept { return rank_; }
  std::uint32_t bits() const noexcept { return bits_; }
  bool contains(int i) const noexcept { return (bits_ >> i) & 1u; }
  bool is_full() const noexcept { return bits_ == (std::uint32_t{1} << rank_) - 1; }
  int size() const noexcept;
  /// 0-based indices in increasing order.
  std::vector<int> indices() const;
  std::vector<int> one_based() const;
  std::string to_string() const;

  friend bool operator==(const ThetaSubset&, const ThetaSubset&) = default;

private:
  int rank_ = 0;
  std::uint32_t bits_ = 0;
};

/// r_alpha(beta) = beta - <alpha^vee, beta> alpha.
RootIndex reflect(const RootSystem& sys, RootIndex alpha, RootIndex beta);

/// Smallest set containing `seed` and closed under r_alpha for alpha in theta.
std::vector<RootIndex> orbit(const RootSystem& sys, const ThetaSubset& theta, RootIndex seed);

/// True iff the W_theta-orbit of roots.front() contains every element of `roots`.
bool is_transitive_on(const RootSystem& sys, const ThetaSubset& theta, const std::vector<RootIndex>& roots);

} // namespace flagiso
