#pragma once

#include "flagiso/rootsys.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace flagiso {

/// Structure constants N(a, b) of a Chevalley basis: [E_a, E_b] = N(a, b) E_{a+b}.
/// Signs are fixed by taking N positive on extraspecial pairs, pairs ordered
/// by root index (height, then coefficients). Also [E_a, E_{-a}] = H_a^vee and
/// N(-a, -b) = -N(a, b).
class StructureConstants {
public:
  explicit StructureConstants(const RootSystem& sys);

  const RootSystem& system() const noexcept { return *sys_; }
  /// Zero when a + b is not a root.
  int operator()(RootIndex a, RootIndex b) const { return table_[a * n_ + b]; }
  /// Largest k with b - k a a root.
  int string_below(RootIndex a, RootIndex b) const;
  /// Coefficients of a^vee over the simple coroots.
  const std::vector<int>& coroot_coeffs(RootIndex a) const { return coroot_[a]; }

private:
  const RootSystem* sys_;
  std::size_t n_;
  std::vector<int> table_;
  std::vector<std::vector<int>> coroot_;
};

inline StructureConstants chevalley_constants(const RootSystem& sys) { return StructureConstants(sys); }

/// Sparse element of g over the basis H_1..H_l (simple coroots) followed by
/// E_r for every root r (basis index rank + r).
using LieElement = std::map<std::size_t, std::int64_t>;

/// Bracket of two basis elements.
LieElement bracket_basis(const StructureConstants& sc, std::size_t x, std::size_t y);
LieElement bracket(const StructureConstants& sc, const LieElement& x, const LieElement& y);

/// [x,[y,z]] + [y,[z,x]] + [z,[x,y]] == 0 for basis elements.
bool jacobi_holds(const StructureConstants& sc, std::size_t x, std::size_t y, std::size_t z);

} // namespace flagiso
