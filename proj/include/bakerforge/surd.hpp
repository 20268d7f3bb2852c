#pragma once

// Exact real numbers of the form r + s*sqrt(n) with rational r, s and integer n >= 0.
// Enough to compare the invariants g2, g3, g4 without rounding, where ties such
// as g2 = 1 + g3 occur routinely.

#include <gmpxx.h>

#include <string>

#include "bakerforge/interval.hpp"

namespace bakerforge {

struct Surd {
  mpq_class r = 0;
  mpq_class s = 0;
  mpz_class n = 0;

  static Surd rational(const mpq_class& value) { return {value, 0, 0}; }
  /// s * sqrt(n)
  static Surd root(const mpq_class& s, const mpz_class& n) { return {0, s, n}; }
  /// sqrt(q) for a nonnegative rational q, written as (1/den) * sqrt(num * den).
  static Surd sqrt_of(const mpq_class& q);

  Surd operator+(const mpq_class& c) const { return {r + c, s, n}; }
  Surd operator*(const mpq_class& c) const { return {r * c, s * c, n}; }

  Interval enclose(Precision prec) const;
  std::string to_string() const;
};

/// Sign of a + b*sqrt(p) + c*sqrt(q), decided exactly.
int sign_of(const mpq_class& a, const mpq_class& b, const mpz_class& p,
            const mpq_class& c, const mpz_class& q);

/// -1, 0, 1 as x < y, x == y, x > y.
int compare(const Surd& x, const Surd& y);
inline bool operator<=(const Surd& x, const Surd& y) { return compare(x, y) <= 0; }
inline bool operator<(const Surd& x, const Surd& y) { return compare(x, y) < 0; }
const Surd& max(const Surd& x, const Surd& y);

}  // namespace bakerforge
