#include "flagiso/linalg.hpp"

#include <stdexcept>

namespace flagiso {

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Rational> QMatrix::column(std::size_t c) const {
  std::vector<Rational> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void QMatrix::set_column(std::size_t c, const std::vector<Rational>& v) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

void QMatrix::append_column(const std::vector<Rational>& v) {
  if (cols_ == 0 && rows_ == 0) rows_ = v.size();
  if (v.size() != rows_) throw std::invalid_argument("append_column: size mismatch");
  std::vector<Rational> next(rows_ * (cols_ + 1));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) next[r * (cols_ + 1) + c] = data_[r * cols_ + c];
    next[r * (cols_ + 1) + cols_] = v[r];
  }
  data_ = std::move(next);
  ++cols_;
}

bool QMatrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

QMatrix QMatrix::transposed() const {
  QMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

QMatrix QMatrix::operator*(const QMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  QMatrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(r, k);
      if (sgn(a) == 0) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) {
        const Rational& b = rhs(k, c);
        if (sgn(b) != 0) out(r, c) += a * b;
      }
    }
  return out;
}

QMatrix QMatrix::operator+(const QMatrix& rhs) const {
  QMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

QMatrix QMatrix::operator-(const QMatrix& rhs) const {
  QMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

QMatrix QMatrix::scaled(const Rational& s) const {
  QMatrix out = *this;
  for (auto& x : out.data_) x *= s;
  return out;
}

bool operator==(const QMatrix& a, const QMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t i = 0; i < a.data_.size(); ++i)
    if (a.data_[i] != b.data_[i]) return false;
  return true;
}

namespace linalg {

std::vector<std::size_t> rref(QMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && sgn(m(sel, col)) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t c = 0; c < m.cols(); ++c) swap(m(sel, c), m(row, c));
    Rational inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c)
      if (sgn(m(row, c)) != 0) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || sgn(m(r, col)) == 0) continue;
      Rational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (sgn(m(row, c)) != 0) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(QMatrix m) { return rref(m).size(); }

QMatrix nullspace(const QMatrix& m) {
  QMatrix a = m;
  auto pivots = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  QMatrix basis(a.cols(), a.cols() - pivots.size());
  std::size_t k = 0;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis(free, k) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], k) = -a(i, free);
    ++k;
  }
  return basis;
}

QMatrix column_echelon(const QMatrix& m, std::vector<std::size_t>* pivots) {
  QMatrix t = m.transposed();
  auto piv = rref(t);
  QMatrix out(m.rows(), piv.size());
  for (std::size_t c = 0; c < piv.size(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r) out(r, c) = t(c, r);
  if (pivots) *pivots = std::move(piv);
  return out;
}

bool solve(const QMatrix& m, const std::vector<Rational>& b, std::vector<Rational>& x) {
  QMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return false;
  x.assign(m.cols(), Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, m.cols());
  return true;
}

namespace {

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

// Residue of a rational modulo the prime; false when the denominator vanishes.
bool residue(const Rational& q, std::uint64_t& out) {
  static const Integer p = [] {
    Integer v;
    mpz_ui_pow_ui(v.get_mpz_t(), 2, 61);
    return Integer(v - 1);
  }();
  Integer num = q.get_num() % p;
  if (num < 0) num += p;
  Integer den = q.get_den() % p;
  if (den == 0) return false;
  std::uint64_t n = mpz_get_ui(num.get_mpz_t());
  std::uint64_t d = mpz_get_ui(den.get_mpz_t());
  out = mulmod(n, powmod(d, kPrime - 2));
  return true;
}

} // namespace

void SparseSystem::add(std::vector<Term> row) {
  std::vector<Term> kept;
  kept.reserve(row.size());
  for (auto& t : row) {
    if (t.first >= unknowns_) throw std::out_of_range("SparseSystem: unknown index");
    if (sgn(t.second) != 0) kept.push_back(std::move(t));
  }
  if (!kept.empty()) rows_.push_back(std::move(kept));
}

QMatrix SparseSystem::solve() const {
  const std::size_t n = unknowns_;
  std::vector<std::size_t> selected;
  std::vector<bool> chosen(rows_.size(), false);

  // Modular pass: keep rows that raise the rank mod p.
  std::vector<std::vector<std::uint64_t>> echelon;
  std::vector<std::size_t> echelon_pivot;
  std::vector<std::uint64_t> work(n);
  for (std::size_t i = 0; i < rows_.size() && echelon.size() < n; ++i) {
    std::fill(work.begin(), work.end(), 0);
    bool ok = true;
    for (const auto& [idx, coef] : rows_[i]) {
      std::uint64_t v;
      if (!residue(coef, v)) {
        ok = false;
        break;
      }
      work[idx] = (work[idx] + v) % kPrime;
    }
    if (!ok) {
      selected.push_back(i);
      chosen[i] = true;
      continue;
    }
    for (std::size_t e = 0; e < echelon.size(); ++e) {
      std::uint64_t f = work[echelon_pivot[e]];
      if (f == 0) continue;
      const auto& er = echelon[e];
      for (std::size_t c = 0; c < n; ++c)
        if (er[c]) work[c] = (work[c] + kPrime - mulmod(f, er[c])) % kPrime;
    }
    std::size_t piv = n;
    for (std::size_t c = 0; c < n; ++c)
      if (work[c]) {
        piv = c;
        break;
      }
    if (piv == n) continue;
    std::uint64_t inv = powmod(work[piv], kPrime - 2);
    for (auto& x : work) x = mulmod(x, inv);
    echelon.push_back(work);
    echelon_pivot.push_back(piv);
    selected.push_back(i);
    chosen[i] = true;
  }

  while (true) {
    QMatrix a(selected.size(), n);
    for (std::size_t r = 0; r < selected.size(); ++r)
      for (const auto& [idx, coef] : rows_[selected[r]]) a(r, idx) += coef;
    QMatrix basis = nullspace(a);
    if (basis.cols() == 0) return basis;

    bool clean = true;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (chosen[i]) continue;
      for (std::size_t k = 0; k < basis.cols(); ++k) {
        Rational s = 0;
        for (const auto& [idx, coef] : rows_[i]) s += coef * basis(idx, k);
        if (sgn(s) != 0) {
          selected.push_back(i);
          chosen[i] = true;
          clean = false;
          break;
        }
      }
    }
    if (clean) return basis;
  }
}

} // namespace linalg
} // namespace flagiso
