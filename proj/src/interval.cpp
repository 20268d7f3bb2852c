#include "bakerforge/interval.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

namespace bakerforge {

namespace {

// Astronomical thresholds such as exp(exp(434)) never materialize, but their
// logarithms (about e^440) and Sankilampi-size exponents (e^23000) do; those
// need a wider exponent range than the MPFR default.
struct ExponentRangeInit {
  ExponentRangeInit() {
    mpfr_set_emax(mpfr_get_emax_max());
    mpfr_set_emin(mpfr_get_emin_min());
  }
};
const ExponentRangeInit exponent_range_init;

Precision max_prec(const Interval& a, const Interval& b) {
  return std::max(a.precision(), b.precision());
}

std::string format_endpoint(mpfr_srcptr x, int digits, bool up) {
  char* buf = nullptr;
  int n = up ? mpfr_asprintf(&buf, "%.*RUg", digits, x)
             : mpfr_asprintf(&buf, "%.*RDg", digits, x);
  if (n < 0 || buf == nullptr) throw std::runtime_error("mpfr_asprintf failed");
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

}  // namespace

Interval::Interval(Uninit, Precision prec) : prec_(prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
}

Interval::Interval(Precision prec) : Interval(Uninit{}, prec) {
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(long value, Precision prec) : Interval(Uninit{}, prec) {
  mpfr_set_si(lo_, value, MPFR_RNDD);
  mpfr_set_si(hi_, value, MPFR_RNDU);
}

Interval::Interval(const mpz_class& value, Precision prec)
    : Interval(Uninit{}, prec) {
  mpfr_set_z(lo_, value.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(hi_, value.get_mpz_t(), MPFR_RNDU);
}

Interval::Interval(const mpq_class& value, Precision prec)
    : Interval(Uninit{}, prec) {
  mpfr_set_q(lo_, value.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, value.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(const Interval& other) : Interval(Uninit{}, other.prec_) {
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept
    : Interval(Uninit{}, other.prec_) {
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(const Interval& other) {
  if (this != &other) {
    prec_ = other.prec_;
    mpfr_set_prec(lo_, prec_);
    mpfr_set_prec(hi_, prec_);
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
  std::swap(prec_, other.prec_);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

void Interval::check_finite(const char* where) const {
  if (mpfr_nan_p(lo_) || mpfr_nan_p(hi_)) {
    throw DomainError(std::string(where) + ": NaN endpoint");
  }
  if (mpfr_inf_p(lo_) || mpfr_inf_p(hi_)) {
    throw std::overflow_error(std::string(where) + ": endpoint overflow");
  }
}

Interval Interval::from_string(const std::string& text, Precision prec) {
  Interval r(Uninit{}, prec);
  if (mpfr_set_str(r.lo_, text.c_str(), 10, MPFR_RNDD) != 0 ||
      mpfr_set_str(r.hi_, text.c_str(), 10, MPFR_RNDU) != 0) {
    throw std::invalid_argument("not a decimal number: " + text);
  }
  return r;
}

Interval Interval::from_double(double value, Precision prec) {
  Interval r(Uninit{}, prec);
  mpfr_set_d(r.lo_, value, MPFR_RNDD);
  mpfr_set_d(r.hi_, value, MPFR_RNDU);
  r.check_finite("from_double");
  return r;
}

Interval Interval::from_bounds(double lo, double hi, Precision prec) {
  if (!(lo <= hi)) throw std::invalid_argument("from_bounds: lo > hi");
  Interval r(Uninit{}, prec);
  mpfr_set_d(r.lo_, lo, MPFR_RNDD);
  mpfr_set_d(r.hi_, hi, MPFR_RNDU);
  return r;
}

Interval Interval::hull(const Interval& a, const Interval& b) {
  Interval r(Uninit{}, max_prec(a, b));
  mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::pi(Precision prec) {
  Interval r(Uninit{}, prec);
  mpfr_const_pi(r.lo_, MPFR_RNDD);
  mpfr_const_pi(r.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::euler(Precision prec) {
  return exp(Interval(1L, prec));
}

double Interval::lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double Interval::mid_double() const {
  return mpfr_get_d(midpoint().lo_, MPFR_RNDN);
}

Interval Interval::midpoint() const {
  Interval r(Uninit{}, prec_);
  mpfr_add(r.lo_, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(r.lo_, r.lo_, 1, MPFR_RNDN);
  // Round-to-nearest of a value inside [lo, hi] stays inside.
  if (mpfr_cmp(r.lo_, lo_) < 0) mpfr_set(r.lo_, lo_, MPFR_RNDN);
  if (mpfr_cmp(r.lo_, hi_) > 0) mpfr_set(r.lo_, hi_, MPFR_RNDN);
  mpfr_set(r.hi_, r.lo_, MPFR_RNDN);
  return r;
}

Interval Interval::width() const {
  Interval r(Uninit{}, prec_);
  mpfr_sub(r.hi_, hi_, lo_, MPFR_RNDU);
  mpfr_set(r.lo_, r.hi_, MPFR_RNDN);
  return r;
}

Interval Interval::radius() const {
  Interval r = width();
  mpfr_div_2ui(r.lo_, r.lo_, 1, MPFR_RNDU);
  mpfr_div_2ui(r.hi_, r.hi_, 1, MPFR_RNDU);
  return r;
}

bool Interval::is_point() const { return mpfr_equal_p(lo_, hi_) != 0; }

bool Interval::contains_zero() const {
  return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool Interval::contains(const Interval& other) const {
  return mpfr_lessequal_p(lo_, other.lo_) && mpfr_lessequal_p(other.hi_, hi_);
}

bool Interval::intersects(const Interval& other) const {
  return mpfr_lessequal_p(lo_, other.hi_) && mpfr_lessequal_p(other.lo_, hi_);
}

Interval Interval::with_precision(Precision prec) const {
  Interval r(Uninit{}, prec);
  mpfr_set(r.lo_, lo_, MPFR_RNDD);
  mpfr_set(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval Interval::inflate(const Interval& r) const {
  Interval out(Uninit{}, max_prec(*this, r));
  mpfr_sub(out.lo_, lo_, r.hi_, MPFR_RNDD);
  mpfr_add(out.hi_, hi_, r.hi_, MPFR_RNDU);
  return out;
}

std::string Interval::lo_string(int digits) const {
  return format_endpoint(lo_, digits, false);
}

std::string Interval::hi_string(int digits) const {
  return format_endpoint(hi_, digits, true);
}

std::string Interval::to_string(int digits) const {
  return "[" + lo_string(digits) + ", " + hi_string(digits) + "]";
}

Interval Interval::operator-() const {
  Interval r(Uninit{}, prec_);
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

Interval& Interval::operator+=(const Interval& rhs) { return *this = *this + rhs; }
Interval& Interval::operator-=(const Interval& rhs) { return *this = *this - rhs; }
Interval& Interval::operator*=(const Interval& rhs) { return *this = *this * rhs; }
Interval& Interval::operator/=(const Interval& rhs) { return *this = *this / rhs; }

Interval operator+(const Interval& a, const Interval& b) {
  Interval r(Interval::Uninit{}, max_prec(a, b));
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  r.check_finite("add");
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r(Interval::Uninit{}, max_prec(a, b));
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  r.check_finite("sub");
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  const Precision prec = max_prec(a, b);
  Interval r(Interval::Uninit{}, prec);
  mpfr_t t;
  mpfr_init2(t, prec);
  mpfr_srcptr as[2] = {a.lo_, a.hi_};
  mpfr_srcptr bs[2] = {b.lo_, b.hi_};
  bool first = true;
  for (auto x : as) {
    for (auto y : bs) {
      mpfr_mul(t, x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_mul(t, x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(t);
  r.check_finite("mul");
  return r;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw DomainError("division by an interval containing 0");
  const Precision prec = max_prec(a, b);
  Interval r(Interval::Uninit{}, prec);
  mpfr_t t;
  mpfr_init2(t, prec);
  mpfr_srcptr as[2] = {a.lo_, a.hi_};
  mpfr_srcptr bs[2] = {b.lo_, b.hi_};
  bool first = true;
  for (auto x : as) {
    for (auto y : bs) {
      mpfr_div(t, x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_div(t, x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(t);
  r.check_finite("div");
  return r;
}

Interval sqrt(const Interval& x) {
  if (mpfr_sgn(x.hi_) < 0) throw DomainError("sqrt of a negative interval");
  Interval r(Interval::Uninit{}, x.prec_);
  if (mpfr_sgn(x.lo_) < 0) {
    mpfr_set_zero(r.lo_, 1);
  } else {
    mpfr_sqrt(r.lo_, x.lo_, MPFR_RNDD);
  }
  mpfr_sqrt(r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

Interval log(const Interval& x) {
  if (mpfr_sgn(x.lo_) <= 0) throw DomainError("log of an interval not bounded away from 0");
  Interval r(Interval::Uninit{}, x.prec_);
  mpfr_log(r.lo_, x.lo_, MPFR_RNDD);
  mpfr_log(r.hi_, x.hi_, MPFR_RNDU);
  r.check_finite("log");
  return r;
}

Interval exp(const Interval& x) {
  Interval r(Interval::Uninit{}, x.prec_);
  mpfr_exp(r.lo_, x.lo_, MPFR_RNDD);
  mpfr_exp(r.hi_, x.hi_, MPFR_RNDU);
  r.check_finite("exp");
  return r;
}

Interval root(const Interval& x, unsigned long k) {
  if (k == 0) throw DomainError("zeroth root");
  if (mpfr_sgn(x.lo_) < 0) throw DomainError("root of an interval with negative points");
  Interval r(Interval::Uninit{}, x.prec_);
  mpfr_rootn_ui(r.lo_, x.lo_, k, MPFR_RNDD);
  mpfr_rootn_ui(r.hi_, x.hi_, k, MPFR_RNDU);
  return r;
}

Interval abs(const Interval& x) {
  if (mpfr_sgn(x.lo_) >= 0) return x;
  if (mpfr_sgn(x.hi_) <= 0) return -x;
  Interval r(Interval::Uninit{}, x.prec_);
  mpfr_set_zero(r.lo_, 1);
  mpfr_neg(r.hi_, x.lo_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

Interval max(const Interval& a, const Interval& b) {
  Interval r(Interval::Uninit{}, max_prec(a, b));
  mpfr_max(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval min(const Interval& a, const Interval& b) {
  Interval r(Interval::Uninit{}, max_prec(a, b));
  mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_min(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval operator+(const Interval& a, long b) { return a + Interval(b, a.precision()); }
Interval operator*(const Interval& a, long b) { return a * Interval(b, a.precision()); }
Interval operator*(long a, const Interval& b) { return Interval(a, b.precision()) * b; }
Interval operator/(const Interval& a, long b) { return a / Interval(b, a.precision()); }

Interval square(const Interval& x) {
  Interval a = abs(x);
  return a * a;
}

Interval pow(const Interval& x, unsigned long n) {
  Interval result(1L, x.precision());
  Interval base = x;
  while (n > 0) {
    if (n & 1UL) result *= base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

Interval pow(const Interval& x, const Interval& y) {
  return exp(y * log(x));
}

// cos and sin are 1-Lipschitz: evaluate at the midpoint and widen by the
// radius, then clip to [-1, 1].
namespace {
using TrigFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

void lipschitz_trig(mpfr_ptr lo, mpfr_ptr hi, const Interval& x, TrigFn fn) {
  Interval mid = x.midpoint();
  Interval rad = x.radius();
  fn(lo, mid.lo(), MPFR_RNDD);
  fn(hi, mid.lo(), MPFR_RNDU);
  mpfr_sub(lo, lo, rad.hi(), MPFR_RNDD);
  mpfr_add(hi, hi, rad.hi(), MPFR_RNDU);
  if (mpfr_cmp_si(lo, -1) < 0) mpfr_set_si(lo, -1, MPFR_RNDD);
  if (mpfr_cmp_si(hi, 1) > 0) mpfr_set_si(hi, 1, MPFR_RNDU);
}
}  // namespace

Interval cos(const Interval& x) {
  Interval r(Interval::Uninit{}, x.prec_);
  lipschitz_trig(r.lo_, r.hi_, x, mpfr_cos);
  return r;
}

Interval sin(const Interval& x) {
  Interval r(Interval::Uninit{}, x.prec_);
  lipschitz_trig(r.lo_, r.hi_, x, mpfr_sin);
  return r;
}

bool certainly_lt(const Interval& a, const Interval& b) {
  return mpfr_less_p(a.hi(), b.lo()) != 0;
}
bool certainly_le(const Interval& a, const Interval& b) {
  return mpfr_lessequal_p(a.hi(), b.lo()) != 0;
}
bool certainly_gt(const Interval& a, const Interval& b) { return certainly_lt(b, a); }
bool certainly_ge(const Interval& a, const Interval& b) { return certainly_le(b, a); }
bool possibly_le(const Interval& a, const Interval& b) {
  return mpfr_lessequal_p(a.lo(), b.hi()) != 0;
}
bool certainly_positive(const Interval& a) { return mpfr_sgn(a.lo()) > 0; }
bool certainly_negative(const Interval& a) { return mpfr_sgn(a.hi()) < 0; }

}  // namespace bakerforge
