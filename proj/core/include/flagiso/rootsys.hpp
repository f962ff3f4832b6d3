#pragma once

#include "flagiso/linalg.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace flagiso {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct DynkinType {
  Family family = Family::A;
  int rank = 1;

  /// Validates the rank bounds for the family. Throws InvalidDynkinType.
  static DynkinType make(char family, int rank);
  bool is_classical() const noexcept;
  bool simply_laced() const noexcept;
  std::string name() const;

  friend bool operator==(const DynkinType&, const DynkinType&) = default;
};

using RootIndex = std::size_t;
/// Integer coordinates in the ambient lattice: lambda coordinates for the
/// classical families, simple-root coefficients for E, F and G.
using RootVector = std::vector<int>;
using CartanMatrix = std::vector<std::vector<int>>;

/// A rational vector in the ambient space.
struct Weight {
  std::vector<Rational> coords;
  friend bool operator==(const Weight& a, const Weight& b) { return a.coords == b.coords; }
};

/// All roots of a simple Dynkin type. Positive roots occupy indices
/// [0, num_positive()) sorted by height and then by simple-root coefficients
/// in decreasing lexicographic order, so the simple roots come first in their
/// standard order. Index i + num_positive() holds the negative of root i.
class RootSystem {
public:
  explicit RootSystem(DynkinType dynkin);

  const DynkinType& dynkin() const noexcept { return dynkin_; }
  int rank() const noexcept { return dynkin_.rank; }
  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t num_roots() const noexcept { return roots_.size(); }
  std::size_t num_positive() const noexcept { return roots_.size() / 2; }

  const RootVector& root(RootIndex a) const { return roots_[a]; }
  const std::vector<int>& simple_coeffs(RootIndex a) const { return coeffs_[a]; }
  int height(RootIndex a) const { return height_[a]; }
  RootIndex simple(int i) const { return static_cast<RootIndex>(i); }
  bool is_positive(RootIndex a) const { return a < num_positive(); }
  RootIndex negate(RootIndex a) const { return a < num_positive() ? a + num_positive() : a - num_positive(); }
  /// The positive root among a and -a.
  RootIndex positive_of(RootIndex a) const { return is_positive(a) ? a : negate(a); }

  int inner(RootIndex a, RootIndex b) const { return gram_[a * roots_.size() + b]; }
  int norm2(RootIndex a) const { return inner(a, a); }
  /// 2<gamma, alpha>/<gamma, gamma> = <gamma^vee, alpha>.
  int killing_number(RootIndex gamma, RootIndex alpha) const;
  bool is_long(RootIndex a) const { return norm2(a) == max_norm2_; }
  bool is_short(RootIndex a) const { return norm2(a) != max_norm2_; }
  int max_norm2() const noexcept { return max_norm2_; }

  const CartanMatrix& cartan() const noexcept { return cartan_; }

  std::optional<RootIndex> find(const RootVector& v) const;
  /// The root a + b, if it is a root.
  std::optional<RootIndex> add(RootIndex a, RootIndex b) const;
  /// The root a - b, if it is a root.
  std::optional<RootIndex> subtract(RootIndex a, RootIndex b) const { return add(a, negate(b)); }

  RootIndex highest_root() const;

  Weight coroot(RootIndex a) const;
  Weight to_weight(RootIndex a) const;
  Rational pairing(const Weight& x, const Weight& y) const;
  /// <a, w>.
  Rational pairing(RootIndex a, const Weight& w) const;
  /// <a^vee, w>.
  Rational copairing(RootIndex a, const Weight& w) const;

  /// Fundamental weights: <alpha_i^vee, omega_j> = delta_ij.
  std::vector<Weight> fundamental_weights() const;
  /// Dual basis to the simple roots: <alpha_i, h_j> = delta_ij.
  std::vector<Weight> simple_dual_basis() const;

  /// Human-readable label, e.g. "-λ1+λ3" or "(2,3,4,2)".
  std::string label(RootIndex a) const;

private:
  DynkinType dynkin_;
  std::size_t ambient_dim_ = 0;
  std::vector<int> ambient_gram_;
  std::vector<RootVector> roots_;
  std::vector<std::vector<int>> coeffs_;
  std::vector<int> height_;
  std::vector<int> gram_;
  std::vector<int> sum_;
  std::map<RootVector, RootIndex> index_;
  CartanMatrix cartan_;
  int max_norm2_ = 0;

  int ambient_inner(const RootVector& x, const RootVector& y) const;
};

inline RootSystem build_root_system(DynkinType dynkin) { return RootSystem(dynkin); }

/// Cartan matrix <alpha_i^vee, alpha_j> in the numbering used by the library.
CartanMatrix cartan_matrix(DynkinType dynkin);

/// Positive roots as simple-root coefficient vectors, generated from a Cartan
/// matrix by root-string closure. Independent of any ambient realization.
std::vector<std::vector<int>> positive_roots_by_closure(const CartanMatrix& cartan);

} // namespace flagiso
