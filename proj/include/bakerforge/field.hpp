#pragma once

// Exact arithmetic in Q, Q(sqrt(-D)) and their rings of integers.
//
// Elements are stored as coordinates (a, b) in the integral basis {1, w}:
//   w = sqrt(-D)           when D = 1, 2 (mod 4)
//   w = (1 + sqrt(-D)) / 2 when D = 3 (mod 4)
// For Q the second coordinate is always zero. Quad<mpz_class> is an element of
// the ring of integers; Quad<mpq_class> is an arbitrary field element.

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bakerforge/interval.hpp"

namespace bakerforge {

enum class FieldKind { Rationals, ImaginaryQuadratic };
enum class Basis { OneAndSqrt, HalfInteger };

class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct FieldSpec {
  FieldKind kind = FieldKind::Rationals;
  long D = 0;  // 0 for Q

  static FieldSpec rationals() { return {}; }
  /// Throws FieldError unless D is a positive squarefree integer.
  static FieldSpec imaginary_quadratic(long D);
  /// Accepts "Q", "QQ", "Q(sqrt,-1)", "Q(sqrt(-3))", "Q(i)", "-7", "D=7".
  static FieldSpec parse(const std::string& text);

  bool is_rational() const { return kind == FieldKind::Rationals; }
  int residue() const { return is_rational() ? 0 : static_cast<int>(D % 4); }
  Basis basis() const {
    return residue() == 3 ? Basis::HalfInteger : Basis::OneAndSqrt;
  }
  /// k with w^2 = w - k in the half-integer basis, i.e. (1 + D) / 4.
  long half_k() const { return (1 + D) / 4; }
  std::string to_string() const;
  std::string basis_name() const;

  bool operator==(const FieldSpec& other) const {
    return kind == other.kind && D == other.D;
  }
  bool operator!=(const FieldSpec& other) const { return !(*this == other); }
};

template <class T>
class Quad {
 public:
  T a;
  T b;
  FieldSpec field;

  Quad() : a(0), b(0) {}
  Quad(T a_, T b_, FieldSpec f) : a(std::move(a_)), b(std::move(b_)), field(f) {
    if (field.is_rational() && b != 0) {
      throw FieldError("nonzero w-coordinate over Q");
    }
  }
  static Quad zero(FieldSpec f) { return Quad(T(0), T(0), f); }
  static Quad one(FieldSpec f) { return Quad(T(1), T(0), f); }
  static Quad rational(T value, FieldSpec f) { return Quad(std::move(value), T(0), f); }
  static Quad omega(FieldSpec f) { return Quad(T(0), T(1), f); }

  bool is_zero() const { return a == 0 && b == 0; }

  Quad operator-() const { return Quad(-a, -b, field); }

  Quad& operator+=(const Quad& o) {
    check_same(o);
    a += o.a;
    b += o.b;
    return *this;
  }
  Quad& operator-=(const Quad& o) {
    check_same(o);
    a -= o.a;
    b -= o.b;
    return *this;
  }
  Quad& operator*=(const Quad& o) { return *this = *this * o; }

  friend Quad operator+(Quad x, const Quad& y) { return x += y; }
  friend Quad operator-(Quad x, const Quad& y) { return x -= y; }
  friend Quad operator*(const Quad& x, const Quad& y) {
    x.check_same(y);
    if (x.field.basis() == Basis::HalfInteger) {
      const T bd = x.b * y.b;
      return Quad(T(x.a * y.a - x.field.half_k() * bd),
                  T(x.a * y.b + x.b * y.a + bd), x.field);
    }
    return Quad(T(x.a * y.a - x.field.D * x.b * y.b),
                T(x.a * y.b + x.b * y.a), x.field);
  }
  friend Quad operator*(const T& s, const Quad& x) {
    return Quad(T(s * x.a), T(s * x.b), x.field);
  }

  bool operator==(const Quad& o) const {
    return field == o.field && a == o.a && b == o.b;
  }
  bool operator!=(const Quad& o) const { return !(*this == o); }

  Quad conj() const {
    if (field.basis() == Basis::HalfInteger) return Quad(T(a + b), T(-b), field);
    return Quad(a, T(-b), field);
  }

  /// |z|^2, an element of T.
  T norm() const {
    if (field.basis() == Basis::HalfInteger) {
      return T(a * a + a * b + field.half_k() * b * b);
    }
    return T(a * a + field.D * b * b);
  }

  /// Real part and coefficient of sqrt(D) in the imaginary part (both exact).
  mpq_class real_part() const {
    if (field.basis() == Basis::HalfInteger) return mpq_class(a) + mpq_class(b) / 2;
    return mpq_class(a);
  }
  mpq_class imag_sqrt_coeff() const {
    if (field.basis() == Basis::HalfInteger) return mpq_class(b) / 2;
    return mpq_class(b);
  }

  void check_same(const Quad& o) const {
    if (field != o.field) throw FieldError("field mismatch");
  }
};

using QuadInt = Quad<mpz_class>;
using FieldElem = Quad<mpq_class>;

enum class ArithOp { Add, Sub, Mul };

QuadInt qi_arith(const QuadInt& lhs, const QuadInt& rhs, ArithOp op);
/// Enclosure of |z| = sqrt(norm z).
Interval qi_abs(const QuadInt& z, Precision prec);
Interval fe_abs(const FieldElem& z, Precision prec);

FieldElem to_field(const QuadInt& z);
/// Exact inverse; throws DomainError on zero.
FieldElem inverse(const FieldElem& z);
FieldElem operator/(const FieldElem& x, const FieldElem& y);
/// Integral in the ring of integers (both basis coordinates are integers).
bool is_integral(const FieldElem& z);
/// Requires is_integral(z).
QuadInt to_integer(const FieldElem& z);
/// Smallest positive integer d with d*z integral.
mpz_class denominator(const FieldElem& z);
/// p + q*sqrt(-D) in basis coordinates.
FieldElem from_sqrt_coords(const mpq_class& p, const mpq_class& q, FieldSpec f);

/// Enclosures of the real and imaginary parts.
Interval real_enclosure(const FieldElem& z, Precision prec);
Interval imag_enclosure(const FieldElem& z, Precision prec);

/// Compact text form: "3", "-1/2", "1+2i" (D=1), "2-3s" (sqrt(-D)), "1+w".
std::string to_string(const QuadInt& z);
std::string to_string(const FieldElem& z);

struct AlphaPoint {
  QuadInt x;
  mpz_class y = 1;

  FieldElem value() const;
  bool operator==(const AlphaPoint& o) const { return x == o.x && y == o.y; }
};

/// Reduced form of num/den: the smallest positive y with y * (num/den) integral.
AlphaPoint alpha_normalize(const QuadInt& num, const mpz_class& den);
AlphaPoint alpha_from_value(const FieldElem& value);

/// Parses a comma-separated list such as "0,1/2,1+i/3" or "0,(1+s)/2,w".
/// Within an item, "i" and "s" stand for sqrt(-D) and "w" for the basis element w;
/// a trailing "/den" divides the whole numerator.
std::vector<AlphaPoint> parse_alpha_list(const std::string& text, FieldSpec field);
FieldElem parse_field_element(const std::string& text, FieldSpec field);

}  // namespace bakerforge
