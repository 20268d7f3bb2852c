#include "doctest.h"

#include <cmath>
#include <complex>

#include "bakerforge/field.hpp"
#include "bakerforge/surd.hpp"
#include "support.hpp"

using namespace bakerforge;
using testing::Rng;

namespace {

// Digits computed with mpmath at 60 significant digits.
const char* kLog2 = "0.693147180559945309417232121458176568075500134360255254120680";
const char* kE = "2.71828182845904523536028747135266249775724709369995957496697";
const char* kPi = "3.14159265358979323846264338327950288419716939937510582097494";
const char* kSqrtLog3 = "1.04814707396820494649123750332336501580319224047641767213737";

bool encloses(const Interval& x, const char* digits) {
  const Interval ref = Interval::from_string(digits, 256);
  // ref is itself a tight enclosure of a 60-digit decimal; allow 1e-55 slack.
  return x.intersects(ref.inflate(Interval::from_string("1e-55", 256)));
}

}  // namespace

TEST_CASE("interval constants enclose reference digits") {
  for (Precision p : {64, 128, 200}) {
    CHECK(encloses(log(Interval(2L, p)), kLog2));
    CHECK(encloses(Interval::euler(p), kE));
    CHECK(encloses(Interval::pi(p), kPi));
    CHECK(encloses(sqrt(log(Interval(3L, p))), kSqrtLog3));
  }
}

TEST_CASE("interval width shrinks with precision") {
  const Interval a = log(Interval(7L, 64));
  const Interval b = log(Interval(7L, 256));
  CHECK(certainly_lt(b.width(), a.width()));
  CHECK(a.contains(b));
}

TEST_CASE("interval arithmetic encloses long double results") {
  Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    const double x = 0.1 + 10 * rng.uniform();
    const double y = 0.1 + 10 * rng.uniform();
    const Interval X = Interval::from_double(x, 128);
    const Interval Y = Interval::from_double(y, 128);
    const long double lx = x, ly = y;
    const auto inside = [](const Interval& I, long double v) {
      const long double slack = 1e-15L * std::max<long double>(1, std::fabs(v));
      return I.lo_double() <= v + slack && v - slack <= I.hi_double();
    };
    CHECK(inside(X * Y, lx * ly));
    CHECK(inside(X / Y, lx / ly));
    CHECK(inside(X - Y, lx - ly));
    CHECK(inside(log(X), std::log(lx)));
    CHECK(inside(exp(X), std::exp(lx)));
    CHECK(inside(sqrt(X), std::sqrt(lx)));
    CHECK(inside(cos(X), std::cos(lx)));
    CHECK(inside(sin(X), std::sin(lx)));
    CHECK(inside(pow(X, Y), std::pow(lx, ly)));
  }
}

TEST_CASE("interval comparisons are three-valued") {
  const Interval a = Interval::from_bounds(1, 2, 64);
  const Interval b = Interval::from_bounds(1.5, 3, 64);
  CHECK_FALSE(certainly_lt(a, b));
  CHECK(possibly_le(a, b));
  CHECK(certainly_lt(a, Interval(3L, 64)));
  CHECK(certainly_positive(a));
  CHECK(Interval::from_bounds(-1, 1, 64).contains_zero());
}

TEST_CASE("interval domain errors") {
  CHECK_THROWS_AS(log(Interval(0L, 64)), DomainError);
  CHECK_THROWS_AS(sqrt(Interval(-1L, 64)), DomainError);
  CHECK_THROWS_AS(Interval(1L, 64) / Interval::from_bounds(-1, 1, 64), DomainError);
  CHECK_THROWS_AS(Interval::from_string("1.2.3", 64), std::invalid_argument);
}

TEST_CASE("rational intervals are exact or one ulp wide") {
  const Interval third(mpq_class(1) / 3, 128);
  CHECK(third.contains(Interval(mpq_class(1) / 3, 256)));
  CHECK(Interval(mpz_class(5), 64).is_point());
}

TEST_CASE("field parsing") {
  CHECK(FieldSpec::parse("Q").is_rational());
  CHECK(FieldSpec::parse("Q(i)").D == 1);
  CHECK(FieldSpec::parse("Q(sqrt(-3))").D == 3);
  CHECK(FieldSpec::parse("D=7").basis() == Basis::HalfInteger);
  CHECK(FieldSpec::parse("-2").basis() == Basis::OneAndSqrt);
  CHECK_THROWS_AS(FieldSpec::imaginary_quadratic(4), FieldError);
  CHECK_THROWS_AS(FieldSpec::imaginary_quadratic(0), FieldError);
}

TEST_CASE("Gaussian integer arithmetic matches machine complex integers") {
  const FieldSpec f = FieldSpec::imaginary_quadratic(1);
  Rng rng(5);
  for (int i = 0; i < 300; ++i) {
    const long a = rng.range(-50, 50), b = rng.range(-50, 50);
    const long c = rng.range(-50, 50), d = rng.range(-50, 50);
    const QuadInt x(a, b, f), y(c, d, f);
    const QuadInt p = qi_arith(x, y, ArithOp::Mul);
    CHECK(p.a == a * c - b * d);
    CHECK(p.b == a * d + b * c);
    CHECK(qi_arith(x, y, ArithOp::Add) == QuadInt(a + c, b + d, f));
    CHECK(qi_arith(x, y, ArithOp::Sub) == QuadInt(a - c, b - d, f));
    CHECK(x.norm() == a * a + b * b);
  }
}

TEST_CASE("Eisenstein arithmetic matches complex doubles") {
  const FieldSpec f = FieldSpec::imaginary_quadratic(3);
  const std::complex<double> w(0.5, std::sqrt(3.0) / 2);
  Rng rng(6);
  for (int i = 0; i < 300; ++i) {
    const long a = rng.range(-30, 30), b = rng.range(-30, 30);
    const long c = rng.range(-30, 30), d = rng.range(-30, 30);
    const QuadInt p = QuadInt(a, b, f) * QuadInt(c, d, f);
    const std::complex<double> ref = (double(a) + double(b) * w) * (double(c) + double(d) * w);
    const std::complex<double> got = double(p.a.get_si()) + double(p.b.get_si()) * w;
    CHECK(std::abs(ref - got) < 1e-9);
    CHECK(QuadInt(a, b, f).norm() == a * a + a * b + b * b);
  }
}

TEST_CASE("norm is multiplicative and conjugation gives the norm") {
  Rng rng(7);
  for (int i = 0; i < 300; ++i) {
    const FieldSpec f = testing::field_by_index(i);
    const long bx = f.is_rational() ? 0 : rng.range(-20, 20);
    const long by = f.is_rational() ? 0 : rng.range(-20, 20);
    const QuadInt x(rng.range(-20, 20), bx, f), y(rng.range(-20, 20), by, f);
    CHECK((x * y).norm() == x.norm() * y.norm());
    const QuadInt n = x * x.conj();
    CHECK(n.b == 0);
    CHECK(n.a == x.norm());
  }
}

TEST_CASE("field division and denominators") {
  const FieldSpec f = FieldSpec::imaginary_quadratic(1);
  const FieldElem x = parse_field_element("1+2i", f);
  const FieldElem y = parse_field_element("3-i", f);
  const FieldElem q = x / y;  // (1+2i)(3+i)/10 = (1+7i)/10
  CHECK(q.a == mpq_class(1, 10));
  CHECK(q.b == mpq_class(7, 10));
  CHECK(q * y == x);
  CHECK(denominator(q) == 10);
  CHECK_FALSE(is_integral(q));
  CHECK(is_integral(x));
  CHECK_THROWS_AS(inverse(FieldElem::zero(f)), DomainError);
}

TEST_CASE("half-integer basis parses (1+s)/2 as w") {
  const FieldSpec f = FieldSpec::imaginary_quadratic(3);
  const FieldElem w = parse_field_element("(1+s)/2", f);
  CHECK(w == to_field(QuadInt::omega(f)));
  CHECK(is_integral(w));
  CHECK(to_string(w) == "w");
}

TEST_CASE("alpha normalization picks the smallest denominator") {
  const FieldSpec f = FieldSpec::imaginary_quadratic(1);
  const AlphaPoint p = alpha_normalize(QuadInt(2, 4, f), 6);  // (1+2i)/3
  CHECK(p.y == 3);
  CHECK(p.x == QuadInt(1, 2, f));
  const AlphaPoint q = alpha_normalize(QuadInt(-4, 0, FieldSpec()), 6);
  CHECK(q.y == 3);
  CHECK(q.x == QuadInt(-2, 0, FieldSpec()));
  CHECK_THROWS(alpha_normalize(QuadInt(1, 0, FieldSpec()), -2));
}

TEST_CASE("surd comparison agrees with long double away from ties") {
  Rng rng(9);
  int decided = 0;
  for (int i = 0; i < 2000; ++i) {
    const Surd x{mpq_class(rng.range(-9, 9)), mpq_class(rng.range(-9, 9)) / rng.range(1, 4),
                 rng.range(0, 30)};
    const Surd y{mpq_class(rng.range(-9, 9)), mpq_class(rng.range(-9, 9)) / rng.range(1, 4),
                 rng.range(0, 30)};
    const auto value = [](const Surd& s) {
      return s.r.get_d() + s.s.get_d() * std::sqrt(static_cast<long double>(s.n.get_d()));
    };
    const long double dx = value(x), dy = value(y);
    if (std::fabs(dx - dy) < 1e-9) continue;
    ++decided;
    CHECK(compare(x, y) == (dx < dy ? -1 : 1));
  }
  CHECK(decided > 1500);
}

TEST_CASE("surd equality is exact") {
  CHECK(compare(Surd::root(2, 2), Surd::root(1, 8)) == 0);       // 2 sqrt 2 = sqrt 8
  CHECK(compare(Surd::sqrt_of(mpq_class(9, 4)), Surd::rational(mpq_class(3, 2))) == 0);
  CHECK(compare(Surd{1, 1, 2}, Surd::rational(2)) > 0);
  CHECK(Surd::sqrt_of(2).enclose(128).contains(sqrt(Interval(2L, 128))));
}

TEST_CASE("surd text form") {
  CHECK(Surd::sqrt_of(4).to_string() == "2");
  CHECK(Surd::sqrt_of(2).to_string() == "sqrt(2)");
}
