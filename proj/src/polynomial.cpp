#include "bakerforge/polynomial.hpp"

#include <stdexcept>

namespace bakerforge {

Poly::Poly(FieldSpec field, std::vector<FieldElem> coeffs) : field_(field), c_(std::move(coeffs)) {
  for (const auto& c : c_) {
    if (c.field != field_) throw FieldError("polynomial coefficient field mismatch");
  }
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::monomial(FieldSpec field, const FieldElem& c, std::size_t k) {
  std::vector<FieldElem> v(k + 1, FieldElem::zero(field));
  v[k] = c;
  return Poly(field, std::move(v));
}

Poly Poly::exp_series(const FieldElem& a, std::size_t order) {
  std::vector<FieldElem> v;
  FieldElem term = FieldElem::one(a.field);
  for (std::size_t n = 0; n < order; ++n) {
    v.push_back(term);
    term = mpq_class(1, n + 1) * (term * a);
  }
  return Poly(a.field, std::move(v));
}

FieldElem Poly::coeff(std::size_t k) const {
  return k < c_.size() ? c_[k] : FieldElem::zero(field_);
}

long Poly::order() const {
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (!c_[k].is_zero()) return static_cast<long>(k);
  }
  return -1;
}

const FieldElem& Poly::leading() const {
  if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
  return c_.back();
}

Poly Poly::derivative() const {
  std::vector<FieldElem> v;
  for (std::size_t k = 1; k < c_.size(); ++k) v.push_back(mpq_class(k) * c_[k]);
  return Poly(field_, std::move(v));
}

Poly Poly::truncated(std::size_t n) const {
  if (c_.size() <= n + 1) return *this;
  return Poly(field_, std::vector<FieldElem>(c_.begin(), c_.begin() + static_cast<long>(n + 1)));
}

Poly Poly::shifted_down(std::size_t k) const {
  if (is_zero()) return *this;
  if (order() < static_cast<long>(k)) throw std::logic_error("polynomial not divisible by t^k");
  return Poly(field_, std::vector<FieldElem>(c_.begin() + static_cast<long>(k), c_.end()));
}

FieldElem Poly::eval(const FieldElem& x) const {
  FieldElem acc = FieldElem::zero(field_);
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
  return acc;
}

Poly Poly::mul_truncated(const Poly& other, std::size_t order) const {
  if (field_ != other.field_) throw FieldError("polynomial field mismatch");
  std::vector<FieldElem> v(std::min(order, c_.size() + other.c_.size()), FieldElem::zero(field_));
  for (std::size_t i = 0; i < c_.size() && i < v.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < other.c_.size() && i + j < v.size(); ++j) {
      v[i + j] += c_[i] * other.c_[j];
    }
  }
  return Poly(field_, std::move(v));
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (field_ != o.field_) throw FieldError("polynomial field mismatch");
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), FieldElem::zero(field_));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly operator*(const Poly& a, const Poly& b) {
  return a.mul_truncated(b, a.c_.size() + b.c_.size());
}

Poly operator*(const FieldElem& s, const Poly& p) {
  std::vector<FieldElem> v;
  for (const auto& c : p.c_) v.push_back(s * c);
  return Poly(p.field_, std::move(v));
}

Poly determinant(const std::vector<std::vector<Poly>>& M) {
  const std::size_t n = M.size();
  if (n == 0) throw std::invalid_argument("empty matrix");
  const FieldSpec f = M[0][0].field();
  if (n == 1) return M[0][0];
  Poly total(f);
  for (std::size_t col = 0; col < n; ++col) {
    if (M[0][col].is_zero()) continue;
    std::vector<std::vector<Poly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Poly> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != col) row.push_back(M[r][c]);
      }
      minor.push_back(std::move(row));
    }
    Poly term = M[0][col] * determinant(minor);
    if (col % 2) {
      total -= term;
    } else {
      total += term;
    }
  }
  return total;
}

FieldElem determinant(std::vector<std::vector<FieldElem>> M) {
  const std::size_t n = M.size();
  if (n == 0) throw std::invalid_argument("empty matrix");
  const FieldSpec f = M[0][0].field;
  FieldElem det = FieldElem::one(f);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && M[p][c].is_zero()) ++p;
    if (p == n) return FieldElem::zero(f);
    if (p != c) {
      std::swap(M[p], M[c]);
      det = -det;
    }
    det = det * M[c][c];
    const FieldElem inv = inverse(M[c][c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (M[r][c].is_zero()) continue;
      const FieldElem q = M[r][c] * inv;
      for (std::size_t k = c; k < n; ++k) M[r][k] -= q * M[c][k];
    }
  }
  return det;
}

std::size_t rank(std::vector<std::vector<FieldElem>> M) {
  if (M.empty()) return 0;
  const std::size_t cols = M[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < M.size(); ++c) {
    std::size_t p = r;
    while (p < M.size() && M[p][c].is_zero()) ++p;
    if (p == M.size()) continue;
    std::swap(M[p], M[r]);
    const FieldElem inv = inverse(M[r][c]);
    for (std::size_t i = r + 1; i < M.size(); ++i) {
      if (M[i][c].is_zero()) continue;
      const FieldElem q = M[i][c] * inv;
      for (std::size_t k = c; k < cols; ++k) M[i][k] -= q * M[r][k];
    }
    ++r;
  }
  return r;
}

}  // namespace bakerforge
