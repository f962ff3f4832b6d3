#pragma once

#include "flagiso/decomp.hpp"
#include "flagiso/oracle.hpp"
#include "flagiso/rootsys.hpp"
#include "flagiso/weylgrp.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace flagiso {

enum class BlockKind { FullComponent, BShortSplit1, BShortSplit2, CCenter, CSuPart, OracleDerived };
/// How a block's irreducibility was established.
enum class Certificate { Criterion, ClosedForm, Oracle, None };
/// How an equivalence or inequivalence verdict was reached.
enum class Decision { Dimension, MClass, Pairing, Oracle };

std::string to_string(BlockKind k);
std::string to_string(Certificate c);
std::string to_string(Decision d);
BlockKind block_kind_from_string(const std::string& s);
Certificate certificate_from_string(const std::string& s);
Decision decision_from_string(const std::string& s);

/// A claimed K_theta-irreducible subspace together with its basis.
struct IrreducibleBlock {
  BlockKind kind = BlockKind::FullComponent;
  std::size_t component = 0;  // index into z_components
  Subspace space;
  std::string basis_note;
  Certificate certified_by = Certificate::None;

  std::size_t dim() const noexcept { return space.dim(); }
};

enum class CriterionVerdict { Irreducible, Undecided };

/// Transitivity of W_theta plus no two distinct M-equivalent roots. A
/// sufficient condition only; never returns a negative verdict.
CriterionVerdict irreducible_by_criterion(const RootSystem& sys, const Component& c);

/// Type B, l >= 5, lambda_l in theta, component with short roots. The first
/// block is spanned by the so(2)-fixed lines of the sl(2)-triples
/// {E(-l_j+l_k), E(-l_j), E(-l_j-l_k)}, the second is its orthogonal
/// complement. Throws PreconditionError otherwise.
std::pair<IrreducibleBlock, IrreducibleBlock> split_B_short(const IsotropyRep& rep, const Component& c,
                                                            std::size_t component_index);

/// Type C, component V(-2 lambda_i) with j(i) < i: the K_theta-fixed line
/// and its orthogonal complement. Throws PreconditionError otherwise.
std::pair<IrreducibleBlock, IrreducibleBlock> split_C_long(const IsotropyRep& rep, const Component& c,
                                                           std::size_t component_index);

/// True when the blocks cannot be equivalent: different dimensions or
/// different sets of M-characters. False means "cannot conclude".
bool non_equivalent(const IrreducibleBlock& a, const IrreducibleBlock& b);

enum class PairingVerdict { Equivalent, Undecided };

/// Equivalent when the M-character multisets match (a bijection of
/// M-equivalent roots) and a nonzero intertwiner exists.
PairingVerdict equivalence_by_pairing(const IsotropyRep& rep, const IrreducibleBlock& a, const IrreducibleBlock& b);

// Serializable report. Plain data; equality is field-wise.

struct ComponentReport {
  std::vector<std::string> roots;
  std::string highest;
  std::string level;
  std::size_t dim = 0;
  bool criterion_irreducible = false;
  friend bool operator==(const ComponentReport&, const ComponentReport&) = default;
};

struct BlockReport {
  BlockKind kind = BlockKind::FullComponent;
  std::size_t component = 0;
  std::size_t dim = 0;
  std::string basis_note;
  Certificate certified_by = Certificate::None;
  std::vector<std::string> support;  // roots with nonzero coefficient
  friend bool operator==(const BlockReport&, const BlockReport&) = default;
};

struct EquivalenceReport {
  std::vector<std::size_t> blocks;
  Decision decided_by = Decision::Oracle;
  friend bool operator==(const EquivalenceReport&, const EquivalenceReport&) = default;
};

struct ContinuumFamily {
  std::vector<std::size_t> blocks;
  std::string label;
  friend bool operator==(const ContinuumFamily&, const ContinuumFamily&) = default;
};

struct IntertwinerEntry {
  std::size_t a = 0, b = 0, dim = 0;
  friend bool operator==(const IntertwinerEntry&, const IntertwinerEntry&) = default;
};

struct OracleReport {
  bool ran = false;
  bool verified = false;
  std::vector<std::size_t> commutant_dims;  // per block, when computed
  std::vector<IntertwinerEntry> intertwiner_dims;
  std::vector<std::size_t> isotypic_dims;         // from the classification
  std::vector<std::size_t> oracle_isotypic_dims;  // from decompose, when verified
  friend bool operator==(const OracleReport&, const OracleReport&) = default;
};

struct ClassificationReport {
  std::string schema = "flagiso-report/1";
  std::string type;
  int rank = 0;
  std::vector<int> theta;  // 1-based
  std::vector<ComponentReport> components;
  std::vector<BlockReport> blocks;
  std::vector<EquivalenceReport> equivalences;
  std::vector<ContinuumFamily> continuum_families;
  OracleReport oracle;
  std::vector<std::string> notes;
  friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

struct ClassifyOptions {
  /// Re-check every block and verdict with the oracle.
  bool verify = false;
};

/// Full result, including the subspaces behind the report.
struct Classification {
  std::shared_ptr<const RootSystem> system;
  std::shared_ptr<const IsotropyRep> rep;
  std::vector<Component> components;
  std::vector<IrreducibleBlock> blocks;
  /// Pairs (a, b), a < b, of equivalent blocks.
  std::vector<std::pair<std::size_t, std::size_t>> equivalent_pairs;
  /// Pairs declared non-equivalent by non_equivalent().
  std::vector<std::pair<std::size_t, std::size_t>> criterion_inequivalent_pairs;
  ClassificationReport report;
};

Classification classify(DynkinType dynkin, const ThetaSubset& theta, const ClassifyOptions& options = {});
ClassificationReport full_report(DynkinType dynkin, const ThetaSubset& theta, const ClassifyOptions& options = {});

std::string to_json(const ClassificationReport& r, int indent = 2);
ClassificationReport report_from_json(const std::string& text);
std::string render_table(const ClassificationReport& r);

} // namespace flagiso
