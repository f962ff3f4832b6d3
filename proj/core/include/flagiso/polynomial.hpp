#pragma once

#include "flagiso/linalg.hpp"

#include <string>
#include <vector>

namespace flagiso::poly {

/// Integer polynomial, coefficient i multiplies x^i. No trailing zeros; the
/// zero polynomial is the empty vector.
using ZPoly = std::vector<Integer>;
/// Rational polynomial with the same layout.
using QPoly = std::vector<Rational>;

int degree(const ZPoly& f);
int degree(const QPoly& f);

/// Clears denominators and content; the result has positive leading coefficient.
ZPoly primitive(const QPoly& f);
QPoly to_rational(const ZPoly& f);

ZPoly multiply(const ZPoly& a, const ZPoly& b);
QPoly multiply(const QPoly& a, const QPoly& b);
QPoly gcd(QPoly a, QPoly b);
QPoly lcm(const QPoly& a, const QPoly& b);
/// Quotient and remainder; divisor must be nonzero.
void divrem(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r);

/// Monic minimal polynomial of a square matrix (Krylov iteration).
QPoly minimal_polynomial(const QMatrix& m);

struct Factor {
  ZPoly poly;
  int multiplicity = 1;
};

/// Factorization over Q into primitive irreducible integer polynomials with
/// positive leading coefficients. The constant content is dropped.
std::vector<Factor> factor(const ZPoly& f);

/// q(m) by Horner's rule.
QMatrix evaluate(const ZPoly& q, const QMatrix& m);

std::string to_string(const ZPoly& f);

} // namespace flagiso::poly
