#pragma once

// Dense polynomials and truncated power series with exact field coefficients.

#include <cstddef>
#include <vector>

#include "bakerforge/field.hpp"

namespace bakerforge {

class Poly {
 public:
  explicit Poly(FieldSpec field = FieldSpec()) : field_(field) {}
  Poly(FieldSpec field, std::vector<FieldElem> coeffs);

  static Poly monomial(FieldSpec field, const FieldElem& c, std::size_t k);
  /// sum_{n < order} (a t)^n / n!
  static Poly exp_series(const FieldElem& a, std::size_t order);

  FieldSpec field() const { return field_; }
  const std::vector<FieldElem>& coeffs() const { return c_; }
  /// Coefficient of t^k (zero past the end).
  FieldElem coeff(std::size_t k) const;
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  /// Lowest index with a nonzero coefficient; -1 for zero.
  long order() const;
  const FieldElem& leading() const;

  Poly derivative() const;
  /// Keeps the coefficients of t^0..t^n.
  Poly truncated(std::size_t n) const;
  /// Exact division by t^k; requires order() >= k.
  Poly shifted_down(std::size_t k) const;
  FieldElem eval(const FieldElem& x) const;
  /// Product truncated to degree < order.
  Poly mul_truncated(const Poly& other, std::size_t order) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const FieldElem& s, const Poly& p);
  bool operator==(const Poly& o) const { return field_ == o.field_ && c_ == o.c_; }

 private:
  void trim();
  FieldSpec field_;
  std::vector<FieldElem> c_;
};

/// Determinant of a square matrix of polynomials (cofactor expansion).
Poly determinant(const std::vector<std::vector<Poly>>& M);
/// Determinant of a square matrix of field elements (Gaussian elimination).
FieldElem determinant(std::vector<std::vector<FieldElem>> M);
/// Rank of a matrix of field elements.
std::size_t rank(std::vector<std::vector<FieldElem>> M);

}  // namespace bakerforge
