#include "doctest.h"

#include <cmath>

#include "bakerforge/forms.hpp"
#include "bakerforge/pade.hpp"
#include "bakerforge/polynomial.hpp"
#include "support.hpp"

using namespace bakerforge;

namespace {

const FieldSpec kQ = FieldSpec::rationals();
const FieldSpec kG = FieldSpec::imaginary_quadratic(1);

using QVec = std::vector<mpq_class>;

mpq_class fact(long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return mpq_class(f);
}

QVec rational_coeffs(const Poly& p) {
  QVec v;
  for (const auto& c : p.coeffs()) {
    REQUIRE(c.b == 0);
    v.push_back(c.a);
  }
  return v;
}

mpq_class qpow(const mpq_class& x, long k) {
  mpq_class r = 1;
  for (long i = 0; i < k; ++i) r *= x;
  return r;
}

// (d/dt - a)^k applied to p, then evaluated at t = 1.
mpq_class family_value(QVec p, const mpq_class& a, long k) {
  for (long step = 0; step < k; ++step) {
    QVec q(p.size());
    for (std::size_t h = 0; h < p.size(); ++h) {
      q[h] = -a * p[h];
      if (h + 1 < p.size()) q[h] += mpq_class(static_cast<long>(h + 1)) * p[h + 1];
    }
    p = q;
  }
  mpq_class s = 0;
  for (const auto& c : p) s += c;
  return s;
}

PadeSystem build(const char* alpha, FieldSpec f, std::vector<long> l, std::vector<long> nu,
                 SolveStrategy st = SolveStrategy::Exhaustive) {
  return construct_pade(AlphaVector::parse(alpha, f), PadeParams::make(l, nu), st, 128);
}

}  // namespace

TEST_CASE("polynomial arithmetic against direct evaluation") {
  testing::Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    std::vector<FieldElem> a, b;
    for (int k = 0; k < 5; ++k) a.push_back(FieldElem::rational(mpq_class(rng.range(-9, 9)) / rng.range(1, 5), kQ));
    for (int k = 0; k < 4; ++k) b.push_back(FieldElem::rational(mpq_class(rng.range(-9, 9)) / rng.range(1, 5), kQ));
    const Poly p(kQ, a), q(kQ, b);
    const FieldElem x = FieldElem::rational(mpq_class(rng.range(-5, 5)) / rng.range(1, 3), kQ);
    CHECK((p * q).eval(x) == p.eval(x) * q.eval(x));
    CHECK((p + q).eval(x) == p.eval(x) + q.eval(x));
    CHECK((p - q).eval(x) == p.eval(x) - q.eval(x));
    // Derivative of sum c_k t^k at x.
    mpq_class d = 0;
    for (std::size_t k = 1; k < a.size(); ++k) d += mpq_class(static_cast<long>(k)) * a[k].a * qpow(x.a, k - 1);
    CHECK(p.derivative().eval(x).a == d);
  }
}

TEST_CASE("exp series coefficients") {
  const FieldElem a = FieldElem::rational(mpq_class(3) / 2, kQ);
  const Poly e = Poly::exp_series(a, 8);
  for (long k = 0; k < 8; ++k) CHECK(e.coeff(static_cast<std::size_t>(k)).a == qpow(a.a, k) / fact(k));
  CHECK(Poly::monomial(kQ, FieldElem::one(kQ), 3).order() == 3);
}

TEST_CASE("exact determinant and rank") {
  std::vector<std::vector<FieldElem>> M(3, std::vector<FieldElem>(3));
  const long v[3][3] = {{2, -1, 0}, {1, 3, 4}, {0, 5, -2}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) M[i][j] = FieldElem::rational(v[i][j], kQ);
  // Cofactor expansion: 2(-6-20) + 1(-2-0) = -54.
  CHECK(determinant(M).a == -54);
  CHECK(rank(M) == 3);
  M[2] = M[0];
  CHECK(rank(M) == 2);
  CHECK(determinant(M).is_zero());
}

TEST_CASE("choose_nu examples") {
  const NuChoice c = choose_nu({8, 8}, Surd::rational(2));
  CHECK(c.nu == std::vector<long>{4, 4});
  CHECK_FALSE(c.clamped);
  CHECK(c.lmml == Check::Holds);
  CHECK(c.frac_mlm == Check::Holds);
  const NuChoice b = choose_nu({2, 2}, Surd::rational(4));
  CHECK(b.nu == std::vector<long>{1, 1});
  CHECK(b.clamped);
  CHECK_THROWS(choose_nu({2, 2}, Surd::rational(5)));
}

TEST_CASE("coefficient system rows are binomial times x^(L-h) y^h") {
  const AlphaVector a = AlphaVector::parse("0,1,2", kQ);
  const LinearSystem sys = build_coefficient_system(a, PadeParams::make({2, 2}, {1, 1}));
  REQUIRE(sys.M() == 2);
  REQUIRE(sys.N() == 5);
  const long b5[] = {1, 5, 10, 10, 5};
  for (long h = 0; h <= 4; ++h) {
    CHECK(sys.coeffs[0][h].a == b5[h]);
    CHECK(sys.coeffs[1][h].a == b5[h] * (1L << (4 - h)));
  }
  const AlphaVector half = AlphaVector::parse("0,1/2,1", kQ);
  const LinearSystem hs = build_coefficient_system(half, PadeParams::make({1, 1}, {1, 1}));
  // j = 1: x = 1, y = 2, L = 2, i = 1: binom(3, h) 2^h.
  CHECK(hs.coeffs[0][0].a == 1);
  CHECK(hs.coeffs[0][1].a == 6);
  CHECK(hs.coeffs[0][2].a == 12);
}

TEST_CASE("Pade system over Q: order, truncation and family by independent series") {
  const PadeSystem sys = build("0,1,2", kQ, {3, 3}, {1, 1});
  const long L = sys.L();
  CHECK(sys.bound_met);
  CHECK(sys.order_ok == Check::Holds);
  CHECK(sys.integral_ok == Check::Holds);
  CHECK(sys.truncation_ok == Check::Holds);
  bool nonzero = false;
  for (const auto& c : sys.c) nonzero = nonzero || !c.is_zero();
  CHECK(nonzero);

  const QVec a0 = rational_coeffs(sys.A0[0]);
  for (long h = 0; h <= L && h < static_cast<long>(a0.size()); ++h)
    CHECK(a0[h] == mpq_class(sys.c[h].a) * fact(L) / fact(h));
  CHECK(a0[0] == mpq_class(sys.c[0].a) * fact(L));

  for (std::size_t j = 1; j <= 2; ++j) {
    const mpq_class alpha = sys.alpha.points[j].value().a;
    const QVec aj = rational_coeffs(sys.A0[j]);
    for (long N = 0; N <= L + sys.params.nu[j - 1]; ++N) {
      mpq_class r = N < static_cast<long>(aj.size()) ? aj[N] : mpq_class(0);
      for (long h = 0; h <= std::min(N, L); ++h)
        if (h < static_cast<long>(a0.size())) r += a0[h] * qpow(alpha, N - h) / fact(N - h);
      CHECK(r == 0);
    }
  }

  const DerivedFamily fam = derive_family(sys);
  CHECK(fam.ineq_ok == Check::Holds);
  for (long k = 0; k <= fam.k_max; ++k) {
    CHECK(fam.values[k][0].a == family_value(a0, 0, k));
    for (std::size_t j = 1; j <= 2; ++j)
      CHECK(fam.values[k][j].a == family_value(rational_coeffs(sys.A0[j]), sys.alpha.points[j].value().a, k));
  }
  // Degrees per the recursion.
  CHECK(fam.A[1][0].degree() == sys.A0[0].degree() - 1);
  for (std::size_t j = 1; j <= 2; ++j) CHECK(fam.A[2][j].degree() == sys.A0[j].degree());
}

TEST_CASE("Gaussian system integrality and nonzero forms") {
  const PadeSystem sys = build("0,i,1+i", kG, {2, 2}, {1, 1});
  CHECK(sys.integral_ok == Check::Holds);
  const mpz_class g1L = 1;  // y_j = 1
  for (std::size_t j = 1; j <= 2; ++j)
    for (const auto& c : sys.A0[j].coeffs()) CHECK(is_integral(FieldElem(c.a * mpq_class(g1L), c.b * mpq_class(g1L), kG)));
  CHECK(sys.nonzero_ok == Check::Holds);
}

TEST_CASE("remainder series vanishes below the order") {
  const PadeSystem sys = build("0,1,1/2", kQ, {2, 2}, {1, 1});
  for (std::size_t j = 1; j <= 2; ++j) {
    const Poly R = remainder_series(sys.A0[0], sys.A0[j], sys.alpha.points[j].value(), 12);
    CHECK((R.is_zero() || R.order() >= sys.L() + sys.params.nu[j - 1] + 1));
  }
}

TEST_CASE("index selection") {
  std::vector<std::vector<FieldElem>> id(4, std::vector<FieldElem>(3, FieldElem::zero(kQ)));
  for (int i = 0; i < 3; ++i) id[i][i] = FieldElem::one(kQ);
  CHECK(select_indices(id, 2, 3) == std::vector<std::size_t>{0, 1, 2});
  // Row 1 duplicates row 0, so the scan skips it.
  id[1] = id[0];
  id[3][1] = FieldElem::one(kQ);
  CHECK(select_indices(id, 2, 3) == std::vector<std::size_t>{0, 2, 3});
}

TEST_CASE("Vandermonde factor of (0,1,2)") {
  CHECK(vandermonde_factor(AlphaVector::parse("0,1,2", kQ)).a == 2);
}

TEST_CASE("determinant factorization for m = 2") {
  for (const char* a : {"0,1,2", "0,1,1/2", "0,-1,3"}) {
    const PadeSystem sys = build(a, kQ, {3, 2}, {1, 1});
    const DerivedFamily fam = derive_family(sys);
    const DeterminantCheck det = family_determinant(sys, fam);
    CHECK(det.factor_ok == Check::Holds);
    CHECK(det.order >= det.order_floor);
    CHECK(det.degree - det.order <= det.h_degree_cap);
    CHECK(det.order_floor == 2 * sys.L() + sys.M() - 1);
  }
}

TEST_CASE("numerical forms on the integer instance") {
  const PadeSystem sys = build("0,1,2", kQ, {3, 3}, {1, 1});
  const DerivedFamily fam = derive_family(sys);
  const NumericalForms f = evaluate_forms(sys, fam, 128);
  CHECK(f.integral == Check::Holds);
  CHECK(f.det_nonzero == Check::Holds);
  CHECK(f.routes_agree == Check::Holds);
  REQUIRE(f.B.size() == 3);
  for (const auto& row : f.B)
    for (const auto& b : row) CHECK(b.b == 0);

  // The direct route matches B_k0 e^(alpha_j) + B_kj computed here.
  for (std::size_t k = 0; k < 3; ++k) {
    for (std::size_t j = 1; j <= 2; ++j) {
      const Interval ea = exp(Interval(sys.alpha.points[j].value().a, 256));
      const Interval v = Interval(f.B[k][0].a, 256) * ea + Interval(f.B[k][j].a, 256);
      CHECK(v.intersects(f.L_direct[k][j - 1].re));
    }
  }

  const RawBoundReport raw = check_raw_bounds(sys, fam, f);
  CHECK(raw.all == Check::Holds);
  CHECK(raw.index_ok == Check::Holds);
  CHECK(raw.index_cap == 7);
}

TEST_CASE("numerical forms over Q(i) have Gaussian integer entries") {
  const PadeSystem sys = build("0,i,2i", kG, {2, 2}, {1, 1});
  const DerivedFamily fam = derive_family(sys);
  const NumericalForms f = evaluate_forms(sys, fam, 128);
  CHECK(f.integral == Check::Holds);
  CHECK(f.nonintegral.empty());
  CHECK(check_raw_bounds(sys, fam, f).all == Check::Holds);
}

TEST_CASE("complex exponential enclosure") {
  const FieldElem z = parse_field_element("(1+2i)/2", kG);
  const ComplexInterval e = exp_enclosure(z, 128);
  const long double r = std::exp(0.5L);
  CHECK(e.re.mid_double() == doctest::Approx(double(r * std::cos(1.0L))).epsilon(1e-15));
  CHECK(e.im.mid_double() == doctest::Approx(double(r * std::sin(1.0L))).epsilon(1e-15));
}

TEST_CASE("residual shrinks as precision doubles") {
  const PadeSystem sys = build("0,1,2", kQ, {2, 2}, {1, 1});
  const DerivedFamily fam = derive_family(sys);
  const ConvergenceReport c = residual_convergence(sys, fam, {64, 128, 256});
  CHECK(c.halves == Check::Holds);
  REQUIRE(c.residuals.size() == 3);
  CHECK(certainly_lt(c.residuals[2], c.residuals[0]));
}

TEST_CASE("q and r bounds at L = 16") {
  const AlphaVector a = AlphaVector::parse("0,1,-1", kQ);
  const AlphaReport rep = analyze_alpha(a, 128);
  const PadeSystem sys = construct_pade(a, PadeParams::make({8, 8}, {4, 4}), SolveStrategy::KernelReduce, 128);
  const DerivedFamily fam = derive_family(sys);
  const NumericalForms f = evaluate_forms(sys, fam, 128);
  const QRReport qr = check_qr_bounds(sys, f, rep.base, rep.gh.log_gamma);
  CHECK_FALSE(qr.hypothesis_met);
  const long double l16 = std::log(16.0L);
  const long double b0 = std::sqrt(std::log(2.0L)) + std::log(2.0L) / (2 * std::sqrt(std::log(2.0L)));
  const long double q = 16 * l16 + b0 * 16 * std::sqrt(l16);
  CHECK(qr.q.mid_double() == doctest::Approx(double(q)).epsilon(1e-14));
}
