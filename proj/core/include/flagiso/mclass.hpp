#pragma once

#include "flagiso/rootsys.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace flagiso {

/// Sign character of the M-group on a root space: bit i is
/// <alpha_i^vee, alpha> mod 2 for the i-th simple root.
class ParityVector {
public:
  ParityVector() = default;
  ParityVector(int rank, std::uint32_t bits) : rank_(rank), bits_(bits) {}

  int rank() const noexcept { return rank_; }
  std::uint32_t bits() const noexcept { return bits_; }
  bool bit(int i) const noexcept { return (bits_ >> i) & 1u; }
  std::string to_string() const;

  friend bool operator==(const ParityVector&, const ParityVector&) = default;
  friend auto operator<=>(const ParityVector&, const ParityVector&) = default;

private:
  int rank_ = 0;
  std::uint32_t bits_ = 0;
};

/// Disjoint root sets, each sorted, blocks ordered by smallest index.
using MClassPartition = std::vector<std::vector<RootIndex>>;

ParityVector parity_vector(const RootSystem& sys, RootIndex alpha);

/// M-equivalence through parity vectors over the simple roots.
bool m_equivalent(const RootSystem& sys, RootIndex alpha, RootIndex beta);

/// M-equivalence checked against every root gamma, without the shortcut.
bool m_equivalent_full(const RootSystem& sys, RootIndex alpha, RootIndex beta);

/// Fibers of the parity map restricted to `roots`.
MClassPartition m_classes(const RootSystem& sys, const std::vector<RootIndex>& roots);

/// Classes on the positive roots.
MClassPartition positive_m_classes(const RootSystem& sys);

/// True iff every pair of distinct M-equivalent roots is orthogonal.
bool orthogonality_audit(const RootSystem& sys);

} // namespace flagiso
