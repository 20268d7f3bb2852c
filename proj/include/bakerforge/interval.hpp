#pragma once

// Closed real intervals with MPFR endpoints and outward (directed) rounding.
//
// Every operation returns an interval that contains the exact result for all
// points of its operands. Binary operations run at the larger of the two
// operand precisions.

#include <gmpxx.h>
#include <mpfr.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace bakerforge {

using Precision = mpfr_prec_t;

inline constexpr Precision kDefaultPrecision = 128;
inline constexpr Precision kPrecisionCap = 4096;

class Interval {
 public:
  explicit Interval(Precision prec = kDefaultPrecision);
  Interval(long value, Precision prec);
  Interval(const mpz_class& value, Precision prec);
  Interval(const mpq_class& value, Precision prec);

  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(const Interval& other);
  Interval& operator=(Interval&& other) noexcept;
  ~Interval();

  /// Smallest interval at `prec` that contains the decimal number `text`.
  static Interval from_string(const std::string& text, Precision prec);
  static Interval from_double(double value, Precision prec);
  /// [lo, hi] from two doubles; lo must not exceed hi.
  static Interval from_bounds(double lo, double hi, Precision prec);
  static Interval hull(const Interval& a, const Interval& b);
  static Interval pi(Precision prec);
  static Interval euler(Precision prec);  // e = exp(1)

  Precision precision() const { return prec_; }
  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }

  double lo_double() const;  // rounded down
  double hi_double() const;  // rounded up
  double mid_double() const;
  Interval midpoint() const;  // degenerate interval at an MPFR midpoint
  Interval radius() const;    // point interval at an upper bound of (hi - lo) / 2
  Interval width() const;     // point interval at an upper bound of hi - lo

  bool is_point() const;
  bool contains_zero() const;
  bool contains(const Interval& other) const;
  bool intersects(const Interval& other) const;

  /// Same enclosure rounded outward to a different precision.
  Interval with_precision(Precision prec) const;
  /// Widen by `r` on both sides (r taken as its upper endpoint, r >= 0).
  Interval inflate(const Interval& r) const;

  /// "[lo, hi]" with `digits` significant digits, rounded outward.
  std::string to_string(int digits = 17) const;
  std::string lo_string(int digits = 17) const;
  std::string hi_string(int digits = 17) const;

  Interval operator-() const;
  Interval& operator+=(const Interval& rhs);
  Interval& operator-=(const Interval& rhs);
  Interval& operator*=(const Interval& rhs);
  Interval& operator/=(const Interval& rhs);

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);

  friend Interval sqrt(const Interval& x);
  friend Interval log(const Interval& x);
  friend Interval exp(const Interval& x);
  friend Interval root(const Interval& x, unsigned long k);
  friend Interval abs(const Interval& x);
  friend Interval max(const Interval& a, const Interval& b);
  friend Interval min(const Interval& a, const Interval& b);
  friend Interval cos(const Interval& x);
  friend Interval sin(const Interval& x);

 private:
  struct Uninit {};
  Interval(Uninit, Precision prec);
  void check_finite(const char* where) const;

  Precision prec_;
  mpfr_t lo_;
  mpfr_t hi_;
};

Interval operator+(const Interval& a, long b);
Interval operator*(const Interval& a, long b);
Interval operator*(long a, const Interval& b);
Interval operator/(const Interval& a, long b);

Interval square(const Interval& x);
Interval pow(const Interval& x, unsigned long n);
/// x^y for x > 0.
Interval pow(const Interval& x, const Interval& y);

// Certain comparisons hold for every pair of points; "possibly" for some pair.
bool certainly_lt(const Interval& a, const Interval& b);
bool certainly_le(const Interval& a, const Interval& b);
bool certainly_gt(const Interval& a, const Interval& b);
bool certainly_ge(const Interval& a, const Interval& b);
bool possibly_le(const Interval& a, const Interval& b);
bool certainly_positive(const Interval& a);
bool certainly_negative(const Interval& a);

/// Error thrown when a computation leaves the domain of a function.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Runs `attempt(prec)` at `start`, doubling the precision up to `cap` until
/// the attempt returns a value. Returns nullopt if the cap is reached.
template <class F>
auto with_precision_escalation(Precision start, Precision cap, F&& attempt)
    -> decltype(attempt(start)) {
  for (Precision prec = start; prec <= cap; prec *= 2) {
    if (auto result = attempt(prec)) return result;
  }
  return std::nullopt;
}

}  // namespace bakerforge
