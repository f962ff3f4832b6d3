#include "flagiso/polynomial.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

namespace flagiso::poly {

namespace {

template <class T>
void trim(std::vector<T>& f) {
  while (!f.empty() && sgn(f.back()) == 0) f.pop_back();
}

QPoly derivative(const QPoly& f) {
  QPoly d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * static_cast<long>(i));
  trim(d);
  return d;
}

QPoly monic(QPoly f) {
  trim(f);
  if (f.empty()) return f;
  Rational lc = f.back();
  for (auto& c : f) c /= lc;
  return f;
}

QPoly exact_quotient(const QPoly& a, const QPoly& b) {
  QPoly q, r;
  divrem(a, b, q, r);
  if (!r.empty()) throw std::logic_error("polynomial division not exact");
  return q;
}

QPoly sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// ---------------------------------------------------------------------------
// Arithmetic over F_p, p < 2^31.

using Mod = std::vector<std::uint64_t>;

struct Field {
  std::uint64_t p;

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b) % p; }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    a %= p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  std::uint64_t inv(std::uint64_t a) const { return pow(a, p - 2); }

  void trim(Mod& f) const {
    while (!f.empty() && f.back() == 0) f.pop_back();
  }
  int deg(const Mod& f) const { return static_cast<int>(f.size()) - 1; }

  Mod from(const ZPoly& f) const {
    Mod m(f.size());
    Integer pp(static_cast<unsigned long>(p));
    for (std::size_t i = 0; i < f.size(); ++i) {
      Integer r = f[i] % pp;
      if (r < 0) r += pp;
      m[i] = r.get_ui();
    }
    trim(m);
    return m;
  }

  Mod mul(const Mod& a, const Mod& b) const {
    if (a.empty() || b.empty()) return {};
    Mod c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i]) continue;
      for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    trim(c);
    return c;
  }

  Mod sub(Mod a, const Mod& b) const {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = sub(a[i], b[i]);
    trim(a);
    return a;
  }

  void divrem(Mod a, const Mod& b, Mod& q, Mod& r) const {
    trim(a);
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    std::uint64_t li = inv(b.back());
    while (a.size() >= b.size() && !a.empty()) {
      std::size_t shift = a.size() - b.size();
      std::uint64_t c = mul(a.back(), li);
      q[shift] = c;
      for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = sub(a[shift + j], mul(c, b[j]));
      trim(a);
    }
    r = a;
    trim(q);
  }

  Mod rem(const Mod& a, const Mod& b) const {
    Mod q, r;
    divrem(a, b, q, r);
    return r;
  }

  Mod monic(Mod f) const {
    trim(f);
    if (f.empty()) return f;
    std::uint64_t li = inv(f.back());
    for (auto& c : f) c = mul(c, li);
    return f;
  }

  Mod gcd(Mod a, Mod b) const {
    trim(a);
    trim(b);
    while (!b.empty()) {
      Mod r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }

  Mod derivative(const Mod& f) const {
    Mod d;
    for (std::size_t i = 1; i < f.size(); ++i) d.push_back(mul(f[i], i % p));
    trim(d);
    return d;
  }

  Mod powmod(Mod base, const Integer& e, const Mod& m) const {
    Mod result{1};
    base = rem(base, m);
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
      result = rem(mul(result, result), m);
      if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, base), m);
    }
    return result;
  }

  // s*a + t*b = 1, assuming gcd(a, b) = 1.
  void bezout(const Mod& a, const Mod& b, Mod& s, Mod& t) const {
    Mod r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
      Mod q, r;
      divrem(r0, r1, q, r);
      Mod s2 = sub(s0, mul(q, s1));
      Mod t2 = sub(t0, mul(q, t1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    if (r0.size() != 1) throw std::logic_error("bezout: inputs not coprime");
    std::uint64_t li = inv(r0[0]);
    for (auto& c : s0) c = mul(c, li);
    for (auto& c : t0) c = mul(c, li);
    s = s0;
    t = t0;
  }
};

// Distinct-degree then equal-degree factorization of a monic squarefree polynomial.
std::vector<Mod> factor_mod(const Field& F, const Mod& f) {
  std::vector<std::pair<Mod, int>> parts;
  Mod rest = f;
  Mod x{0, 1};
  Mod h = x;
  Integer p(static_cast<unsigned long>(F.p));
  for (int d = 1; F.deg(rest) >= 2 * d; ++d) {
    h = F.powmod(h, p, rest);
    Mod g = F.gcd(rest, F.sub(h, x));
    if (F.deg(g) > 0) {
      parts.emplace_back(g, d);
      Mod q, r;
      F.divrem(rest, g, q, r);
      rest = q;
      h = F.rem(h, rest);
    }
  }
  if (F.deg(rest) > 0) parts.emplace_back(rest, F.deg(rest));

  std::mt19937_64 rng(0x5eed);
  std::vector<Mod> out;
  std::function<void(const Mod&, int)> split = [&](const Mod& g, int d) {
    if (F.deg(g) == d) {
      out.push_back(F.monic(g));
      return;
    }
    Integer e;
    mpz_pow_ui(e.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(d));
    e = (e - 1) / 2;
    while (true) {
      Mod a(static_cast<std::size_t>(F.deg(g)));
      for (auto& c : a) c = rng() % F.p;
      F.trim(a);
      if (F.deg(a) < 1) continue;
      Mod b = F.sub(F.powmod(a, e, g), Mod{1});
      Mod u = F.gcd(g, b);
      if (F.deg(u) > 0 && F.deg(u) < F.deg(g)) {
        Mod q, r;
        F.divrem(g, u, q, r);
        split(u, d);
        split(q, d);
        return;
      }
    }
  };
  for (const auto& [g, d] : parts) split(g, d);
  return out;
}

// ---------------------------------------------------------------------------
// Integer polynomials modulo m.

ZPoly zmod(ZPoly f, const Integer& m) {
  for (auto& c : f) {
    c %= m;
    if (c < 0) c += m;
  }
  trim(f);
  return f;
}

ZPoly zadd(ZPoly a, const ZPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  trim(a);
  return a;
}

ZPoly zsub(ZPoly a, const ZPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Division by a monic polynomial modulo m.
void zdivrem_monic(ZPoly a, const ZPoly& h, const Integer& m, ZPoly& q, ZPoly& r) {
  a = zmod(a, m);
  q.assign(a.size() >= h.size() ? a.size() - h.size() + 1 : 0, Integer(0));
  while (a.size() >= h.size() && !a.empty()) {
    std::size_t shift = a.size() - h.size();
    Integer c = a.back();
    q[shift] = c;
    for (std::size_t j = 0; j < h.size(); ++j) a[shift + j] -= c * h[j];
    a = zmod(a, m);
  }
  r = a;
  trim(q);
}

ZPoly to_z(const Mod& f) {
  ZPoly z(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) z[i] = static_cast<unsigned long>(f[i]);
  return z;
}

struct Lift {
  ZPoly g, h, s, t;
};

// One quadratic Hensel step: f = g h mod m becomes f = g h mod m^2.
void hensel_step(const ZPoly& f, Lift& st, const Integer& m) {
  Integer m2 = m * m;
  ZPoly e = zmod(zsub(f, multiply(st.g, st.h)), m2);
  ZPoly q, r;
  zdivrem_monic(multiply(st.s, e), st.h, m2, q, r);
  ZPoly g2 = zmod(zadd(zadd(st.g, multiply(st.t, e)), multiply(q, st.g)), m2);
  ZPoly h2 = zmod(zadd(st.h, r), m2);
  ZPoly b = zmod(zsub(zadd(multiply(st.s, g2), multiply(st.t, h2)), ZPoly{Integer(1)}), m2);
  ZPoly c, d;
  zdivrem_monic(multiply(st.s, b), h2, m2, c, d);
  st.s = zmod(zsub(st.s, d), m2);
  st.t = zmod(zsub(zsub(st.t, multiply(st.t, b)), multiply(c, g2)), m2);
  st.g = std::move(g2);
  st.h = std::move(h2);
}

// Lifts a factorization f = lc * prod(factors) mod p to modulus p^(2^steps).
std::vector<ZPoly> lift_tree(const ZPoly& f, const std::vector<Mod>& factors, const Field& F, int steps,
                             const Integer& modulus) {
  if (factors.size() == 1) {
    Integer inv;
    mpz_invert(inv.get_mpz_t(), f.back().get_mpz_t(), modulus.get_mpz_t());
    ZPoly g = f;
    for (auto& c : g) c *= inv;
    return {zmod(g, modulus)};
  }
  std::size_t half = factors.size() / 2;
  std::vector<Mod> left(factors.begin(), factors.begin() + static_cast<long>(half));
  std::vector<Mod> right(factors.begin() + static_cast<long>(half), factors.end());
  Mod g0 = F.from(ZPoly{f.back()});
  for (const auto& x : left) g0 = F.mul(g0, x);
  Mod h0{1};
  for (const auto& x : right) h0 = F.mul(h0, x);
  Mod s0, t0;
  F.bezout(g0, h0, s0, t0);

  Lift st{to_z(g0), to_z(h0), to_z(s0), to_z(t0)};
  Integer m(static_cast<unsigned long>(F.p));
  for (int i = 0; i < steps; ++i) {
    hensel_step(f, st, m);
    m *= m;
  }
  // The leading coefficient of g must equal lc(f) exactly modulo m.
  st.g.resize(f.size() - st.h.size() + 1);
  st.g.back() = f.back() % m;
  if (st.g.back() < 0) st.g.back() += m;
  auto a = lift_tree(st.g, left, F, steps, modulus);
  auto b = lift_tree(st.h, right, F, steps, modulus);
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

ZPoly symmetric(ZPoly f, const Integer& m) {
  Integer half = m / 2;
  for (auto& c : f) {
    c %= m;
    if (c < 0) c += m;
    if (c > half) c -= m;
  }
  trim(f);
  return f;
}

ZPoly primitive_z(ZPoly f) {
  trim(f);
  if (f.empty()) return f;
  Integer g = 0;
  for (const auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (f.back() < 0) g = -g;
  for (auto& c : f) c /= g;
  return f;
}

// Exact division over Z; false if b does not divide a.
bool zdivide(ZPoly a, const ZPoly& b, ZPoly& q) {
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Integer(0));
  while (a.size() >= b.size() && !a.empty()) {
    std::size_t shift = a.size() - b.size();
    if (!mpz_divisible_p(a.back().get_mpz_t(), b.back().get_mpz_t())) return false;
    Integer c = a.back() / b.back();
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    trim(a);
  }
  trim(q);
  return a.empty();
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Irreducible factors of a squarefree primitive polynomial.
std::vector<ZPoly> zassenhaus(const ZPoly& f) {
  const int n = degree(f);
  if (n <= 1) return {f};

  std::uint64_t p = 1000003;
  Field F{p};
  Mod fm;
  for (;; p += 2) {
    if (!is_prime(p)) continue;
    F = Field{p};
    fm = F.from(f);
    if (F.deg(fm) != n) continue;
    if (F.deg(F.gcd(fm, F.derivative(fm))) == 0) break;
  }
  auto mod_factors = factor_mod(F, F.monic(fm));
  if (mod_factors.size() == 1) return {f};

  // Coefficient bound for any factor, times the leading coefficient.
  Integer norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Integer norm = sqrt(norm2) + 1;
  Integer bound;
  mpz_mul_2exp(bound.get_mpz_t(), norm.get_mpz_t(), static_cast<unsigned long>(n));
  Integer lc = abs(f.back());
  Integer target = 2 * lc * bound + 1;

  Integer modulus(static_cast<unsigned long>(p));
  int steps = 0;
  while (modulus <= target) {
    modulus *= modulus;
    ++steps;
  }
  auto lifted = lift_tree(f, mod_factors, F, steps, modulus);

  std::vector<ZPoly> result;
  ZPoly rest = f;
  std::vector<ZPoly> pool = lifted;
  for (std::size_t size = 1; 2 * size <= pool.size();) {
    bool found = false;
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      ZPoly cand{rest.back()};
      for (auto i : idx) cand = zmod(multiply(cand, pool[i]), modulus);
      cand = primitive_z(symmetric(cand, modulus));
      ZPoly quotient;
      if (degree(cand) > 0 && zdivide(rest, cand, quotient)) {
        result.push_back(cand);
        rest = primitive_z(quotient);
        std::vector<ZPoly> remaining;
        for (std::size_t i = 0, k = 0; i < pool.size(); ++i) {
          if (k < idx.size() && idx[k] == i) {
            ++k;
            continue;
          }
          remaining.push_back(pool[i]);
        }
        pool = std::move(remaining);
        found = true;
        break;
      }
      // Next combination in lexicographic order.
      std::size_t k = size;
      while (k > 0 && idx[k - 1] == pool.size() - size + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++size;
  }
  if (degree(rest) > 0) result.push_back(rest);
  return result;
}

} // namespace

int degree(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }
int degree(const QPoly& f) { return static_cast<int>(f.size()) - 1; }

ZPoly primitive(const QPoly& f) {
  QPoly g = f;
  trim(g);
  Integer den = 1;
  for (const auto& c : g) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  ZPoly z(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) z[i] = g[i].get_num() * (den / g[i].get_den());
  return primitive_z(z);
}

QPoly to_rational(const ZPoly& f) {
  QPoly q(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) q[i] = f[i];
  return q;
}

ZPoly multiply(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly c(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  trim(c);
  return c;
}

QPoly multiply(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly c(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  trim(c);
  return c;
}

void divrem(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  QPoly bb = b;
  trim(bb);
  if (bb.empty()) throw std::invalid_argument("polynomial division by zero");
  r = a;
  trim(r);
  q.assign(r.size() >= bb.size() ? r.size() - bb.size() + 1 : 0, Rational(0));
  while (r.size() >= bb.size() && !r.empty()) {
    std::size_t shift = r.size() - bb.size();
    Rational c = r.back() / bb.back();
    q[shift] = c;
    for (std::size_t j = 0; j < bb.size(); ++j) r[shift + j] -= c * bb[j];
    trim(r);
  }
  trim(q);
}

QPoly gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly q, r;
    divrem(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

QPoly lcm(const QPoly& a, const QPoly& b) {
  return monic(exact_quotient(multiply(a, b), gcd(a, b)));
}

QPoly minimal_polynomial(const QMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("minimal_polynomial: matrix not square");
  QPoly result{Rational(1)};

  // Echelon rows spanning all Krylov vectors visited so far.
  std::vector<std::vector<Rational>> span_rows;
  std::vector<std::size_t> span_piv;
  auto reduce_span = [&](std::vector<Rational>& v) {
    for (std::size_t i = 0; i < span_rows.size(); ++i) {
      Rational f = v[span_piv[i]];
      if (sgn(f) == 0) continue;
      for (std::size_t c = 0; c < n; ++c)
        if (sgn(span_rows[i][c]) != 0) v[c] -= f * span_rows[i][c];
    }
  };
  auto insert_span = [&](std::vector<Rational> v) {
    reduce_span(v);
    for (std::size_t c = 0; c < n; ++c)
      if (sgn(v[c]) != 0) {
        Rational inv = 1 / v[c];
        for (auto& x : v) x *= inv;
        for (std::size_t i = 0; i < span_rows.size(); ++i) {
          Rational f = span_rows[i][c];
          if (sgn(f) == 0) continue;
          for (std::size_t k = 0; k < n; ++k) span_rows[i][k] -= f * v[k];
        }
        span_rows.push_back(std::move(v));
        span_piv.push_back(c);
        return;
      }
  };

  for (std::size_t j = 0; j < n && span_rows.size() < n; ++j) {
    std::vector<Rational> start(n, Rational(0));
    start[j] = 1;
    {
      auto probe = start;
      reduce_span(probe);
      bool zero = std::all_of(probe.begin(), probe.end(), [](const Rational& x) { return sgn(x) == 0; });
      if (zero) continue;
    }
    // Local minimal polynomial of e_j.
    std::vector<std::vector<Rational>> rows, coefs;
    std::vector<std::size_t> piv;
    std::vector<std::vector<Rational>> krylov;
    std::vector<Rational> v = start;
    QPoly local;
    for (std::size_t k = 0;; ++k) {
      krylov.push_back(v);
      std::vector<Rational> w = v;
      std::vector<Rational> t(k + 1, Rational(0));
      t[k] = 1;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        Rational f = w[piv[i]];
        if (sgn(f) == 0) continue;
        for (std::size_t c = 0; c < n; ++c)
          if (sgn(rows[i][c]) != 0) w[c] -= f * rows[i][c];
        for (std::size_t c = 0; c < coefs[i].size(); ++c) t[c] -= f * coefs[i][c];
      }
      std::size_t p = n;
      for (std::size_t c = 0; c < n; ++c)
        if (sgn(w[c]) != 0) {
          p = c;
          break;
        }
      if (p == n) {
        local = t;
        trim(local);
        break;
      }
      Rational inv = 1 / w[p];
      for (auto& x : w) x *= inv;
      for (auto& x : t) x *= inv;
      rows.push_back(std::move(w));
      coefs.push_back(std::move(t));
      piv.push_back(p);
      std::vector<Rational> next(n, Rational(0));
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
          if (sgn(v[c]) != 0 && sgn(m(r, c)) != 0) next[r] += m(r, c) * v[c];
      v = std::move(next);
    }
    result = lcm(result, monic(local));
    krylov.pop_back();
    for (auto& kv : krylov) insert_span(std::move(kv));
  }
  return result;
}

std::vector<Factor> factor(const ZPoly& input) {
  ZPoly f = primitive_z(input);
  std::vector<Factor> out;
  if (degree(f) < 1) return out;

  // Yun's squarefree decomposition over Q.
  QPoly a = to_rational(f);
  QPoly da = derivative(a);
  QPoly b = gcd(a, da);
  QPoly c = exact_quotient(a, b);
  QPoly d = sub(exact_quotient(da, b), derivative(c));
  for (int mult = 1; degree(c) > 0; ++mult) {
    QPoly g = gcd(c, d);
    if (degree(g) > 0)
      for (auto& z : zassenhaus(primitive(g))) out.push_back({z, mult});
    c = exact_quotient(c, g);
    d = sub(exact_quotient(d, g), derivative(c));
  }
  std::sort(out.begin(), out.end(), [](const Factor& x, const Factor& y) {
    if (x.poly.size() != y.poly.size()) return x.poly.size() < y.poly.size();
    return std::lexicographical_compare(x.poly.rbegin(), x.poly.rend(), y.poly.rbegin(), y.poly.rend());
  });
  return out;
}

QMatrix evaluate(const ZPoly& q, const QMatrix& m) {
  const std::size_t n = m.rows();
  QMatrix acc(n, n);
  for (std::size_t i = q.size(); i-- > 0;) {
    acc = acc * m;
    for (std::size_t k = 0; k < n; ++k) acc(k, k) += q[i];
  }
  return acc;
}

std::string to_string(const ZPoly& f) {
  if (f.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = f.size(); i-- > 0;) {
    if (sgn(f[i]) == 0) continue;
    Integer c = f[i];
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    c = abs(c);
    if (c != 1 || i == 0) os << c.get_str();
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

} // namespace flagiso::poly
