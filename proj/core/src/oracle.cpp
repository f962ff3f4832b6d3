#include "flagiso/oracle.hpp"

#include "flagiso/decomp.hpp"
#include "flagiso/error.hpp"
#include "flagiso/mclass.hpp"
#include "flagiso/polynomial.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace flagiso {

QMatrix SparseOperator::dense() const {
  QMatrix m(columns.size(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (const auto& [r, v] : columns[c]) m(r, c) += v;
  return m;
}

IsotropyRep::IsotropyRep(const RootSystem& sys, const ThetaSubset& theta) : sys_(&sys), theta_(theta), sc_(sys) {
  if (theta.is_full()) throw FullThetaError();
  basis_ = ntheta_minus(sys, theta);
  position_.assign(sys.num_roots(), basis_.size());
  for (std::size_t p = 0; p < basis_.size(); ++p) position_[basis_[p]] = p;

  for (RootIndex r : theta_closure(sys, theta))
    if (sys.is_positive(r)) k_roots_.push_back(r);

  for (RootIndex a : k_roots_) {
    SparseOperator op;
    op.columns.resize(basis_.size());
    const RootIndex na = sys.negate(a);
    for (std::size_t c = 0; c < basis_.size(); ++c) {
      const RootIndex b = basis_[c];
      std::map<std::size_t, int> col;
      if (auto s = sys.add(a, b); s && position_[*s] < basis_.size()) col[position_[*s]] += sc_(a, b);
      if (auto s = sys.add(na, b); s && position_[*s] < basis_.size()) col[position_[*s]] -= sc_(na, b);
      for (const auto& [r, v] : col)
        if (v != 0) op.columns[c].emplace_back(r, v);
    }
    k_gens_.push_back(std::move(op));
  }

  for (int i = 0; i < sys.rank(); ++i) {
    std::vector<int> signs;
    for (RootIndex b : basis_) signs.push_back(sys.killing_number(sys.simple(i), b) % 2 == 0 ? 1 : -1);
    m_gens_.push_back(std::move(signs));
  }
  for (RootIndex b : basis_) {
    chars_.push_back(parity_vector(sys, b).bits());
    Rational w(sys.max_norm2(), sys.norm2(b));
    w.canonicalize();
    weights_.push_back(w);
  }
}

std::size_t IsotropyRep::position(RootIndex r) const { return r < position_.size() ? position_[r] : dim(); }

std::vector<Rational> IsotropyRep::apply(const SparseOperator& op, const std::vector<Rational>& v) const {
  std::vector<Rational> out(dim(), Rational(0));
  for (std::size_t c = 0; c < v.size(); ++c) {
    if (sgn(v[c]) == 0) continue;
    for (const auto& [r, x] : op.columns[c]) out[r] += x * v[c];
  }
  return out;
}

Subspace make_subspace(const IsotropyRep& rep, const QMatrix& spanning) {
  Subspace s;
  s.basis = linalg::column_echelon(spanning, &s.pivots);
  if (s.basis.cols() == 0) s.basis = QMatrix(rep.dim(), 0);
  for (std::size_t c = 0; c < s.dim(); ++c) {
    const std::uint32_t chi = rep.character(s.pivots[c]);
    for (std::size_t r = 0; r < rep.dim(); ++r)
      if (sgn(s.basis(r, c)) != 0 && rep.character(r) != chi) throw PreconditionError("subspace is not M-invariant");
    s.characters.push_back(chi);
  }
  return s;
}

Subspace root_subspace(const IsotropyRep& rep, const std::vector<RootIndex>& roots) {
  QMatrix m(rep.dim(), 0);
  for (RootIndex r : roots) {
    std::size_t p = rep.position(r);
    if (p >= rep.dim()) throw PreconditionError("root is not in the tangent space");
    std::vector<Rational> v(rep.dim(), Rational(0));
    v[p] = 1;
    m.append_column(v);
  }
  return make_subspace(rep, m);
}

Subspace whole_space(const IsotropyRep& rep) { return make_subspace(rep, QMatrix::identity(rep.dim())); }

namespace {

// Entries of v at the pivots, after checking that v lies in the span.
bool coordinates(const QMatrix& basis, const std::vector<std::size_t>& pivots, const std::vector<Rational>& v,
                 std::vector<Rational>& out) {
  out.assign(pivots.size(), Rational(0));
  for (std::size_t c = 0; c < pivots.size(); ++c) out[c] = v[pivots[c]];
  for (std::size_t r = 0; r < basis.rows(); ++r) {
    Rational s = 0;
    for (std::size_t c = 0; c < pivots.size(); ++c)
      if (sgn(out[c]) != 0) s += basis(r, c) * out[c];
    if (s != v[r]) return false;
  }
  return true;
}

// Nonzero pattern of a dense matrix, by row and by column.
struct Pattern {
  std::vector<std::vector<std::pair<std::size_t, Rational>>> rows, cols;
  explicit Pattern(const QMatrix& m) : rows(m.rows()), cols(m.cols()) {
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (sgn(m(i, j)) != 0) {
          rows[i].emplace_back(j, m(i, j));
          cols[j].emplace_back(i, m(i, j));
        }
  }
};

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// Unknowns of a character-preserving map from `from` to `to`.
std::vector<std::size_t> unknown_layout(const std::vector<std::uint32_t>& to, const std::vector<std::uint32_t>& from,
                                        std::size_t& count) {
  std::vector<std::size_t> idx(to.size() * from.size(), kNone);
  count = 0;
  for (std::size_t i = 0; i < to.size(); ++i)
    for (std::size_t j = 0; j < from.size(); ++j)
      if (to[i] == from[j]) idx[i * from.size() + j] = count++;
  return idx;
}

std::vector<QMatrix> unpack(const QMatrix& sol, const std::vector<std::size_t>& idx, std::size_t rows, std::size_t cols) {
  std::vector<QMatrix> out;
  for (std::size_t k = 0; k < sol.cols(); ++k) {
    QMatrix t(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (idx[i * cols + j] != kNone) t(i, j) = sol(idx[i * cols + j], k);
    out.push_back(std::move(t));
  }
  return out;
}

// Adds the equations (X * L - R * X)[i][j] = 0 for X with the given layout.
void add_commutation(linalg::SparseSystem& sys, const std::vector<std::size_t>& idx, std::size_t rows, std::size_t cols,
                     const Pattern& left_of_x, const Pattern& right_of_x) {
  // (X L)[i][j] = sum_k X[i][k] L[k][j];  (R X)[i][j] = sum_k R[i][k] X[k][j].
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      std::map<std::size_t, Rational> eq;
      for (const auto& [k, v] : right_of_x.cols[j])
        if (auto u = idx[i * cols + k]; u != kNone) eq[u] += v;
      for (const auto& [k, v] : left_of_x.rows[i])
        if (auto u = idx[k * cols + j]; u != kNone) eq[u] -= v;
      std::vector<linalg::SparseSystem::Term> row;
      for (auto& [u, v] : eq)
        if (sgn(v) != 0) row.emplace_back(u, v);
      sys.add(std::move(row));
    }
}

} // namespace

bool invariant_check(const IsotropyRep& rep, const QMatrix& spanning) {
  std::vector<std::size_t> pivots;
  QMatrix e = linalg::column_echelon(spanning, &pivots);
  std::vector<Rational> coords;
  for (std::size_t c = 0; c < pivots.size(); ++c) {
    std::vector<Rational> v = e.column(c);
    for (const auto& g : rep.k_generators())
      if (!coordinates(e, pivots, rep.apply(g, v), coords)) return false;
    for (const auto& m : rep.m_generators()) {
      std::vector<Rational> w = v;
      for (std::size_t r = 0; r < w.size(); ++r) w[r] *= m[r];
      if (!coordinates(e, pivots, w, coords)) return false;
    }
  }
  return true;
}

std::vector<QMatrix> restricted_generators(const IsotropyRep& rep, const Subspace& s) {
  std::vector<QMatrix> out;
  for (const auto& g : rep.k_generators()) {
    QMatrix r(s.dim(), s.dim());
    std::vector<Rational> coords;
    for (std::size_t c = 0; c < s.dim(); ++c) {
      if (!coordinates(s.basis, s.pivots, rep.apply(g, s.basis.column(c)), coords))
        throw PreconditionError("subspace is not invariant");
      for (std::size_t i = 0; i < s.dim(); ++i) r(i, c) = coords[i];
    }
    out.push_back(std::move(r));
  }
  return out;
}

QMatrix restricted_gram(const IsotropyRep& rep, const Subspace& s) {
  QMatrix g(s.dim(), s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = i; j < s.dim(); ++j) {
      Rational x = 0;
      for (std::size_t p = 0; p < rep.dim(); ++p)
        if (sgn(s.basis(p, i)) != 0 && sgn(s.basis(p, j)) != 0) x += s.basis(p, i) * rep.weights()[p] * s.basis(p, j);
      g(i, j) = x;
      g(j, i) = x;
    }
  return g;
}

std::vector<QMatrix> symmetric_commutant(const IsotropyRep& rep, const Subspace& s) {
  const std::size_t n = s.dim();
  std::size_t count = 0;
  auto idx = unknown_layout(s.characters, s.characters, count);
  linalg::SparseSystem sys(count);
  for (const auto& r : restricted_generators(rep, s)) {
    Pattern p(r);
    add_commutation(sys, idx, n, n, p, p);
  }
  // Self-adjointness: G S = S^T G.
  QMatrix g = restricted_gram(rep, s);
  Pattern pg(g);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      std::map<std::size_t, Rational> eq;
      for (const auto& [k, v] : pg.rows[i])
        if (auto u = idx[k * n + j]; u != kNone) eq[u] += v;
      for (const auto& [k, v] : pg.cols[j])
        if (auto u = idx[k * n + i]; u != kNone) eq[u] -= v;
      std::vector<linalg::SparseSystem::Term> row;
      for (auto& [u, v] : eq)
        if (sgn(v) != 0) row.emplace_back(u, v);
      sys.add(std::move(row));
    }
  return unpack(sys.solve(), idx, n, n);
}

std::size_t symmetric_commutant_dim(const IsotropyRep& rep, const Subspace& s) {
  return symmetric_commutant(rep, s).size();
}

std::vector<QMatrix> intertwiners(const IsotropyRep& rep, const Subspace& a, const Subspace& b) {
  std::size_t count = 0;
  auto idx = unknown_layout(b.characters, a.characters, count);
  linalg::SparseSystem sys(count);
  auto ra = restricted_generators(rep, a);
  auto rb = restricted_generators(rep, b);
  for (std::size_t k = 0; k < ra.size(); ++k) add_commutation(sys, idx, b.dim(), a.dim(), Pattern(rb[k]), Pattern(ra[k]));
  return unpack(sys.solve(), idx, b.dim(), a.dim());
}

std::size_t intertwiner_dim(const IsotropyRep& rep, const Subspace& a, const Subspace& b) {
  return intertwiners(rep, a, b).size();
}

QMatrix graph_subspace(const Subspace& a, const Subspace& b, const QMatrix& t, const Rational& x, const Rational& y) {
  QMatrix image = b.basis * t;
  QMatrix out(a.basis.rows(), a.dim());
  for (std::size_t r = 0; r < out.rows(); ++r)
    for (std::size_t c = 0; c < out.cols(); ++c) out(r, c) = x * a.basis(r, c) + y * image(r, c);
  return out;
}

namespace {

QMatrix combination(const std::vector<QMatrix>& basis, const std::vector<long>& w) {
  QMatrix t(basis[0].rows(), basis[0].cols());
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (w[k] != 0) t = t + basis[k].scaled(Rational(w[k]));
  return t;
}

// Candidate splitting elements, in a fixed order.
std::vector<long> candidate_weights(std::size_t attempt, std::size_t n) {
  std::vector<long> w(n, 0);
  if (attempt == 0) {
    for (std::size_t k = 0; k < n; ++k) w[k] = static_cast<long>(k * k + k + 1);
  } else if (attempt == 1) {
    for (std::size_t k = 0; k < n; ++k) w[k] = static_cast<long>((2 * k + 1) * (2 * k + 1) + k);
  } else if (attempt < 2 + n) {
    w[attempt - 2] = 1;
  } else {
    std::size_t p = attempt - 2 - n;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j, --p)
        if (p == 0) {
          w[i] = w[j] = 1;
          return w;
        }
    w.clear();
  }
  return w;
}

// Primary decomposition of the subspace under T, which is block diagonal by
// character. Returns fewer than two pieces when T does not split.
std::vector<QMatrix> split_by(const Subspace& s, const QMatrix& t) {
  std::map<std::uint32_t, std::vector<std::size_t>> blocks;
  for (std::size_t c = 0; c < s.dim(); ++c) blocks[s.characters[c]].push_back(c);
  auto sub = [&](const std::vector<std::size_t>& ix, const QMatrix& m) {
    QMatrix out(ix.size(), ix.size());
    for (std::size_t i = 0; i < ix.size(); ++i)
      for (std::size_t j = 0; j < ix.size(); ++j) out(i, j) = m(ix[i], ix[j]);
    return out;
  };
  std::set<poly::ZPoly> factors;
  std::map<std::uint32_t, QMatrix> pieces;
  for (const auto& [chi, ix] : blocks) {
    QMatrix tb = sub(ix, t);
    pieces[chi] = tb;
    for (const auto& f : poly::factor(poly::primitive(poly::minimal_polynomial(tb)))) factors.insert(f.poly);
  }
  std::vector<QMatrix> out;
  if (factors.size() < 2) return out;
  for (const auto& q : factors) {
    QMatrix coords(s.dim(), 0);
    for (const auto& [chi, ix] : blocks) {
      QMatrix k = linalg::nullspace(poly::evaluate(q, pieces[chi]));
      for (std::size_t c = 0; c < k.cols(); ++c) {
        std::vector<Rational> v(s.dim(), Rational(0));
        for (std::size_t i = 0; i < ix.size(); ++i) v[ix[i]] = k(i, c);
        coords.append_column(v);
      }
    }
    if (coords.cols() > 0) out.push_back(s.basis * coords);
  }
  return out;
}

void decompose_into(const IsotropyRep& rep, const Subspace& s, std::vector<OracleBlock>& out) {
  if (s.dim() == 0) return;
  if (s.dim() == 1) {
    out.push_back({s, true});
    return;
  }
  auto comm = symmetric_commutant(rep, s);
  if (comm.size() <= 1) {
    out.push_back({s, true});
    return;
  }
  for (std::size_t attempt = 0;; ++attempt) {
    auto w = candidate_weights(attempt, comm.size());
    if (w.empty()) break;
    auto pieces = split_by(s, combination(comm, w));
    if (pieces.size() < 2) continue;
    for (const auto& p : pieces) decompose_into(rep, make_subspace(rep, p), out);
    return;
  }
  out.push_back({s, false});
}

} // namespace

std::vector<OracleBlock> decompose(const IsotropyRep& rep, const Subspace& s) {
  std::vector<OracleBlock> out;
  decompose_into(rep, s, out);
  std::sort(out.begin(), out.end(),
            [](const OracleBlock& a, const OracleBlock& b) { return a.space.pivots.front() < b.space.pivots.front(); });
  return out;
}

std::vector<OracleBlock> decompose(const IsotropyRep& rep) { return decompose(rep, whole_space(rep)); }

std::vector<std::vector<std::size_t>> isotypic_classes(const IsotropyRep& rep, const std::vector<OracleBlock>& blocks) {
  std::vector<std::size_t> parent(blocks.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      if (blocks[i].space.dim() != blocks[j].space.dim() || find(i) == find(j)) continue;
      if (intertwiner_dim(rep, blocks[i].space, blocks[j].space) > 0) parent[find(j)] = find(i);
    }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < blocks.size(); ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace flagiso
