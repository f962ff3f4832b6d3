#include "flagiso/classify.hpp"

#include "flagiso/error.hpp"
#include "flagiso/mclass.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace flagiso {

namespace {

const std::pair<BlockKind, const char*> kKindNames[] = {
    {BlockKind::FullComponent, "FullComponent"}, {BlockKind::BShortSplit1, "BShortSplit1"},
    {BlockKind::BShortSplit2, "BShortSplit2"},   {BlockKind::CCenter, "CCenter"},
    {BlockKind::CSuPart, "CSuPart"},             {BlockKind::OracleDerived, "OracleDerived"},
};
const std::pair<Certificate, const char*> kCertNames[] = {
    {Certificate::Criterion, "criterion"}, {Certificate::ClosedForm, "closed-form"},
    {Certificate::Oracle, "oracle"},       {Certificate::None, "none"},
};
const std::pair<Decision, const char*> kDecisionNames[] = {
    {Decision::Dimension, "dimension"}, {Decision::MClass, "m-class"},
    {Decision::Pairing, "pairing"},     {Decision::Oracle, "oracle"},
};

template <class E, std::size_t N>
std::string name_of(const std::pair<E, const char*> (&table)[N], E e) {
  for (const auto& [k, v] : table)
    if (k == e) return v;
  return "?";
}

template <class E, std::size_t N>
E value_of(const std::pair<E, const char*> (&table)[N], const std::string& s) {
  for (const auto& [k, v] : table)
    if (s == v) return k;
  throw Error("unknown enumerator: " + s);
}

RootIndex lambda_root(const RootSystem& sys, std::initializer_list<std::pair<int, int>> terms) {
  RootVector v(sys.ambient_dim(), 0);
  for (auto [i, c] : terms) v[i - 1] = c;
  auto r = sys.find(v);
  if (!r) throw std::logic_error("expected a root");
  return *r;
}

// Vectors in the span of `roots` orthogonal to `sub` for the invariant inner product.
QMatrix orthogonal_complement(const IsotropyRep& rep, const std::vector<RootIndex>& roots, const Subspace& sub) {
  QMatrix eqs(sub.dim(), roots.size());
  for (std::size_t c = 0; c < sub.dim(); ++c)
    for (std::size_t k = 0; k < roots.size(); ++k) {
      std::size_t p = rep.position(roots[k]);
      eqs(c, k) = sub.basis(p, c) * rep.weights()[p];
    }
  QMatrix ker = linalg::nullspace(eqs);
  QMatrix out(rep.dim(), ker.cols());
  for (std::size_t c = 0; c < ker.cols(); ++c)
    for (std::size_t k = 0; k < roots.size(); ++k) out(rep.position(roots[k]), c) = ker(k, c);
  return out;
}

std::string range(int a, int b) { return a == b ? std::to_string(a) : "[" + std::to_string(a) + "," + std::to_string(b) + "]"; }

std::vector<std::uint32_t> sorted_characters(const IrreducibleBlock& b) {
  auto c = b.space.characters;
  std::sort(c.begin(), c.end());
  return c;
}

} // namespace

std::string to_string(BlockKind k) { return name_of(kKindNames, k); }
std::string to_string(Certificate c) { return name_of(kCertNames, c); }
std::string to_string(Decision d) { return name_of(kDecisionNames, d); }
BlockKind block_kind_from_string(const std::string& s) { return value_of(kKindNames, s); }
Certificate certificate_from_string(const std::string& s) { return value_of(kCertNames, s); }
Decision decision_from_string(const std::string& s) { return value_of(kDecisionNames, s); }

CriterionVerdict irreducible_by_criterion(const RootSystem& sys, const Component& c) {
  std::vector<RootIndex> roots{c.highest};
  for (RootIndex r : c.roots)
    if (r != c.highest) roots.push_back(r);
  if (!is_transitive_on(sys, c.theta, roots)) return CriterionVerdict::Undecided;
  std::set<ParityVector> seen;
  for (RootIndex r : c.roots)
    if (!seen.insert(parity_vector(sys, r)).second) return CriterionVerdict::Undecided;
  return CriterionVerdict::Irreducible;
}

std::pair<IrreducibleBlock, IrreducibleBlock> split_B_short(const IsotropyRep& rep, const Component& c,
                                                            std::size_t component_index) {
  const RootSystem& sys = rep.system();
  const int l = sys.rank();
  const ThetaSubset& theta = c.theta;
  if (sys.dynkin().family != Family::B || l < 5 || !theta.contains(l - 1))
    throw PreconditionError("split_B_short needs type B, rank >= 5 and lambda_l in theta");
  int i = 0;
  for (RootIndex r : c.roots)
    if (sys.is_short(r)) i = std::max(i, lambda_terms(sys, r).front().first);
  if (i == 0) throw PreconditionError("component has no short roots");
  const int j = interval_start(theta, i);
  const int i0 = tail_start(theta);

  std::vector<RootIndex> expected;
  for (int a = j; a <= i; ++a) {
    expected.push_back(lambda_root(sys, {{a, -1}}));
    for (int k = i0 + 1; k <= l; ++k) {
      expected.push_back(lambda_root(sys, {{a, -1}, {k, 1}}));
      expected.push_back(lambda_root(sys, {{a, -1}, {k, -1}}));
    }
  }
  std::sort(expected.begin(), expected.end());
  if (expected != c.roots) throw PreconditionError("component is not of the form sum W^j");

  QMatrix lines(rep.dim(), 0);
  for (int a = j; a <= i; ++a)
    for (int k = i0 + 1; k <= l; ++k) {
      RootIndex lk = lambda_root(sys, {{k, 1}});
      auto g = std::find(rep.k_roots().begin(), rep.k_roots().end(), lk) - rep.k_roots().begin();
      const SparseOperator& op = rep.k_generators()[g];
      std::size_t p[3] = {rep.position(lambda_root(sys, {{a, -1}, {k, 1}})), rep.position(lambda_root(sys, {{a, -1}})),
                          rep.position(lambda_root(sys, {{a, -1}, {k, -1}}))};
      QMatrix m(3, 3);
      for (int col = 0; col < 3; ++col)
        for (const auto& [row, v] : op.columns[p[col]])
          for (int r = 0; r < 3; ++r)
            if (p[r] == row) m(r, col) += v;
      QMatrix ker = linalg::nullspace(m);
      if (ker.cols() != 1) throw std::logic_error("sl(2) triple without a unique fixed line");
      std::vector<Rational> v(rep.dim(), Rational(0));
      for (int r = 0; r < 3; ++r) v[p[r]] = ker(r, 0);
      lines.append_column(v);
    }

  IrreducibleBlock one, two;
  one.kind = BlockKind::BShortSplit1;
  two.kind = BlockKind::BShortSplit2;
  one.component = two.component = component_index;
  one.certified_by = two.certified_by = Certificate::ClosedForm;
  one.space = make_subspace(rep, lines);
  two.space = make_subspace(rep, orthogonal_complement(rep, c.roots, one.space));
  one.basis_note = "E⁻_{jk} − E⁺_{jk}, j∈" + range(j, i) + ", k∈" + range(i0 + 1, l);
  two.basis_note = "E⁻_{jk} + E⁺_{jk}, E⁰_j, j∈" + range(j, i) + ", k∈" + range(i0 + 1, l);
  return {std::move(one), std::move(two)};
}

std::pair<IrreducibleBlock, IrreducibleBlock> split_C_long(const IsotropyRep& rep, const Component& c,
                                                           std::size_t component_index) {
  const RootSystem& sys = rep.system();
  if (sys.dynkin().family != Family::C) throw PreconditionError("split_C_long needs type C");
  int i = 0;
  for (RootIndex r : c.roots)
    if (sys.is_long(r)) i = std::max(i, lambda_terms(sys, r).front().first);
  if (i == 0 || c.theta.contains(i - 1)) throw PreconditionError("component is not V(-2 lambda_i)");
  const int j = interval_start(c.theta, i);
  if (j == i) throw PreconditionError("V(-2 lambda_i) is one-dimensional");
  std::vector<RootIndex> expected;
  for (int k = j; k <= i; ++k)
    for (int r = k; r <= i; ++r)
      expected.push_back(k == r ? lambda_root(sys, {{k, -2}}) : lambda_root(sys, {{k, -1}, {r, -1}}));
  std::sort(expected.begin(), expected.end());
  if (expected != c.roots) throw PreconditionError("component is not V(-2 lambda_i)");

  Subspace whole = root_subspace(rep, c.roots);
  auto gens = restricted_generators(rep, whole);
  QMatrix stacked(gens.size() * whole.dim(), whole.dim());
  for (std::size_t g = 0; g < gens.size(); ++g)
    for (std::size_t r = 0; r < whole.dim(); ++r)
      for (std::size_t col = 0; col < whole.dim(); ++col) stacked(g * whole.dim() + r, col) = gens[g](r, col);
  QMatrix fixed = linalg::nullspace(stacked);
  if (fixed.cols() != 1) throw std::logic_error("expected a unique fixed line in V(-2 lambda_i)");

  IrreducibleBlock center, rest;
  center.kind = BlockKind::CCenter;
  rest.kind = BlockKind::CSuPart;
  center.component = rest.component = component_index;
  center.certified_by = rest.certified_by = Certificate::ClosedForm;
  center.space = make_subspace(rep, whole.basis * fixed);
  rest.space = make_subspace(rep, orthogonal_complement(rep, c.roots, center.space));
  center.basis_note = "identity block I_" + range(j, i) + " in the g(-2λ_k)";
  rest.basis_note = "trace-free symmetric part on λ_k, k∈" + range(j, i);
  return {std::move(center), std::move(rest)};
}

bool non_equivalent(const IrreducibleBlock& a, const IrreducibleBlock& b) {
  if (a.dim() != b.dim()) return true;
  std::set<std::uint32_t> ca(a.space.characters.begin(), a.space.characters.end());
  std::set<std::uint32_t> cb(b.space.characters.begin(), b.space.characters.end());
  return ca != cb;
}

PairingVerdict equivalence_by_pairing(const IsotropyRep& rep, const IrreducibleBlock& a, const IrreducibleBlock& b) {
  if (a.dim() != b.dim() || sorted_characters(a) != sorted_characters(b)) return PairingVerdict::Undecided;
  return intertwiner_dim(rep, a.space, b.space) > 0 ? PairingVerdict::Equivalent : PairingVerdict::Undecided;
}

namespace {

bool b_split_applies(const RootSystem& sys, const Component& c) {
  const int l = sys.rank();
  if (sys.dynkin().family != Family::B || l < 5 || !c.theta.contains(l - 1)) return false;
  return std::any_of(c.roots.begin(), c.roots.end(), [&](RootIndex r) { return sys.is_short(r); });
}

bool c_split_applies(const RootSystem& sys, const Component& c) {
  if (sys.dynkin().family != Family::C || sys.rank() == 4) return false;
  int i = 0;
  for (RootIndex r : c.roots)
    if (sys.is_long(r)) i = std::max(i, lambda_terms(sys, r).front().first);
  return i > 0 && !c.theta.contains(i - 1) && interval_start(c.theta, i) < i;
}

std::vector<std::string> support_labels(const RootSystem& sys, const IsotropyRep& rep, const Subspace& s) {
  std::vector<std::string> out;
  for (std::size_t p = 0; p < rep.dim(); ++p)
    for (std::size_t c = 0; c < s.dim(); ++c)
      if (sgn(s.basis(p, c)) != 0) {
        out.push_back(sys.label(rep.basis()[p]));
        break;
      }
  return out;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

} // namespace

Classification classify(DynkinType dynkin, const ThetaSubset& theta, const ClassifyOptions& options) {
  if (theta.rank() != dynkin.rank) throw PreconditionError("theta rank does not match the Dynkin type");
  Classification out;
  auto sys = std::make_shared<const RootSystem>(dynkin);
  out.system = sys;
  out.components = z_components(*sys, theta);
  auto rep = std::make_shared<const IsotropyRep>(*sys, theta);
  out.rep = rep;

  ClassificationReport& rpt = out.report;
  rpt.type = std::string(1, static_cast<char>(dynkin.family));
  rpt.rank = dynkin.rank;
  rpt.theta = theta.one_based();
  bool oracle_ran = false;

  for (std::size_t ci = 0; ci < out.components.size(); ++ci) {
    const Component& c = out.components[ci];
    ComponentReport cr;
    for (RootIndex r : c.roots) cr.roots.push_back(sys->label(r));
    cr.highest = sys->label(c.highest);
    cr.level = c.level.get_str();
    cr.dim = c.dim();
    cr.criterion_irreducible = irreducible_by_criterion(*sys, c) == CriterionVerdict::Irreducible;
    rpt.components.push_back(cr);

    if (cr.criterion_irreducible) {
      out.blocks.push_back({BlockKind::FullComponent, ci, root_subspace(*rep, c.roots), "root vectors of the component",
                            Certificate::Criterion});
    } else if (b_split_applies(*sys, c)) {
      auto [a, b] = split_B_short(*rep, c, ci);
      out.blocks.push_back(std::move(a));
      out.blocks.push_back(std::move(b));
    } else if (c_split_applies(*sys, c)) {
      auto [a, b] = split_C_long(*rep, c, ci);
      out.blocks.push_back(std::move(a));
      out.blocks.push_back(std::move(b));
    } else {
      oracle_ran = true;
      auto leaves = decompose(*rep, root_subspace(*rep, c.roots));
      const bool single = leaves.size() == 1;
      for (auto& leaf : leaves) {
        IrreducibleBlock b{single ? BlockKind::FullComponent : BlockKind::OracleDerived, ci, std::move(leaf.space),
                           single ? "root vectors of the component" : "primary subspace of a commutant element",
                           leaf.irreducible ? Certificate::Oracle : Certificate::None};
        if (!leaf.irreducible)
          rpt.notes.push_back("component " + std::to_string(ci) + ": splitting search exhausted on a reducible subspace");
        out.blocks.push_back(std::move(b));
      }
      if (!single)
        rpt.notes.push_back("component " + std::to_string(ci) + " (" + cr.highest +
                            "): no closed-form rule; blocks found by the oracle");
    }
  }

  const std::size_t nb = out.blocks.size();
  UnionFind uf(nb);
  std::map<std::pair<std::size_t, std::size_t>, Decision> how;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> tdim;
  for (std::size_t a = 0; a < nb; ++a)
    for (std::size_t b = a + 1; b < nb; ++b) {
      const auto& x = out.blocks[a];
      const auto& y = out.blocks[b];
      if (non_equivalent(x, y)) {
        out.criterion_inequivalent_pairs.emplace_back(a, b);
        continue;
      }
      oracle_ran = true;
      const bool profiles = sorted_characters(x) == sorted_characters(y);
      std::size_t d = intertwiner_dim(*rep, x.space, y.space);
      rpt.oracle.intertwiner_dims.push_back({a, b, d});
      tdim[{a, b}] = d;
      if (d > 0) {
        out.equivalent_pairs.emplace_back(a, b);
        how[{a, b}] = profiles ? Decision::Pairing : Decision::Oracle;
        uf.unite(a, b);
      }
    }

  std::map<std::size_t, std::vector<std::size_t>> classes;
  for (std::size_t b = 0; b < nb; ++b) classes[uf.find(b)].push_back(b);
  for (const auto& [root, members] : classes) {
    std::size_t total = 0;
    for (std::size_t m : members) total += out.blocks[m].dim();
    rpt.oracle.isotypic_dims.push_back(total);
    if (members.size() < 2) continue;
    Decision d = Decision::Pairing;
    std::size_t max_t = 0;
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        auto key = std::make_pair(members[i], members[j]);
        if (how.count(key) && how[key] == Decision::Oracle) d = Decision::Oracle;
        if (tdim.count(key)) max_t = std::max(max_t, tdim[key]);
      }
    rpt.equivalences.push_back({members, d});
    rpt.continuum_families.push_back(
        {members, max_t <= 1 ? "projective-line continuum"
                             : "continuum, intertwiner space of dimension " + std::to_string(max_t)});
  }
  std::sort(rpt.oracle.isotypic_dims.begin(), rpt.oracle.isotypic_dims.end());

  std::size_t total = 0;
  for (const auto& b : out.blocks) {
    total += b.dim();
    rpt.blocks.push_back({b.kind, b.component, b.dim(), b.basis_note, b.certified_by, support_labels(*sys, *rep, b.space)});
  }
  if (total != rep->dim()) throw std::logic_error("blocks do not exhaust the tangent space");

  if (options.verify) {
    oracle_ran = true;
    bool ok = true;
    for (std::size_t b = 0; b < nb; ++b) {
      const auto& s = out.blocks[b].space;
      std::size_t d = symmetric_commutant_dim(*rep, s);
      rpt.oracle.commutant_dims.push_back(d);
      if (!invariant_check(*rep, s.basis)) {
        ok = false;
        rpt.notes.push_back("block " + std::to_string(b) + " is not invariant");
      }
      if (d != 1) {
        ok = false;
        rpt.notes.push_back("block " + std::to_string(b) + " has symmetric commutant of dimension " + std::to_string(d));
      }
    }
    for (auto [a, b] : out.criterion_inequivalent_pairs) {
      std::size_t d = intertwiner_dim(*rep, out.blocks[a].space, out.blocks[b].space);
      rpt.oracle.intertwiner_dims.push_back({a, b, d});
      if (d != 0) {
        ok = false;
        rpt.notes.push_back("blocks " + std::to_string(a) + " and " + std::to_string(b) +
                            " were declared inequivalent but admit an intertwiner");
      }
    }
    std::sort(rpt.oracle.intertwiner_dims.begin(), rpt.oracle.intertwiner_dims.end(),
              [](const IntertwinerEntry& x, const IntertwinerEntry& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
    auto leaves = decompose(*rep);
    for (const auto& cls : isotypic_classes(*rep, leaves)) {
      std::size_t t = 0;
      for (std::size_t m : cls) t += leaves[m].space.dim();
      rpt.oracle.oracle_isotypic_dims.push_back(t);
      for (std::size_t m : cls) ok = ok && leaves[m].irreducible;
    }
    std::sort(rpt.oracle.oracle_isotypic_dims.begin(), rpt.oracle.oracle_isotypic_dims.end());
    if (rpt.oracle.oracle_isotypic_dims != rpt.oracle.isotypic_dims) {
      ok = false;
      rpt.notes.push_back("isotypic dimensions disagree with the oracle decomposition");
    }
    rpt.oracle.verified = ok;
  }
  rpt.oracle.ran = oracle_ran;
  return out;
}

ClassificationReport full_report(DynkinType dynkin, const ThetaSubset& theta, const ClassifyOptions& options) {
  return classify(dynkin, theta, options).report;
}

} // namespace flagiso
