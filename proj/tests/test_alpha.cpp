#include "doctest.h"

#include <cmath>

#include "bakerforge/alpha.hpp"
#include "bakerforge/nested_log.hpp"
#include "support.hpp"

using namespace bakerforge;
using testing::near;
using testing::Rng;

namespace {

const FieldSpec kQ = FieldSpec::rationals();

bool contains(const Interval& x, long double v, long double rel = 1e-15L) {
  const long double slack = rel * std::max<long double>(1, std::fabs(v));
  return x.lo_double() <= v + slack && v - slack <= x.hi_double();
}

struct BaseOracle {
  long double b0, e0, b1, e1;
};

BaseOracle base_oracle(const testing::GOracle& g) {
  const long double l2 = std::log(g.g2), l4 = std::log(g.g4);
  const long double tail = l4 / (2 * std::sqrt(l2));
  return {std::sqrt(l2) + tail, 3 * std::sqrt(l2) + tail,
          std::max<long double>(0, std::log(g.g1) - l2 - l4),
          std::max<long double>(0, std::log(g.g1) + 2 * std::log(1 + g.g3) + 2 * std::log(2.0L) + 1 -
                                       l2 - l4)};
}

// Largest root of S log S = 2(e0 m S sqrt(log S) + e1 m S + e0 m^2 sqrt(log S) + 2 e0 m^2 + e1 m^2)
// by bisection on u = log S, bracketed from above.
long double log_S2_oracle(long double e0, long double e1, long double m) {
  const auto g = [&](long double u) {
    const long double S = std::exp(u);
    return S * u - 2 * (e0 * m * S * std::sqrt(u) + e1 * m * S + e0 * m * m * std::sqrt(u) +
                        2 * e0 * m * m + e1 * m * m);
  };
  long double hi = 1;
  while (g(hi) <= 0) hi *= 2;
  long double lo = hi / 2;
  while (g(lo) > 0 && lo > 1e-6) lo /= 2;
  for (int i = 0; i < 200; ++i) {
    const long double mid = (lo + hi) / 2;
    (g(mid) > 0 ? hi : lo) = mid;
  }
  return (lo + hi) / 2;
}

}  // namespace

TEST_CASE("g-tuple of the integer points") {
  for (int m = 2; m <= 6; ++m) {
    std::string list = "0";
    for (int j = 1; j <= m; ++j) list += "," + std::to_string(j);
    const GTuple g = compute_g(AlphaVector::parse(list, kQ), 128);
    CHECK(g.g1 == 1);
    CHECK(contains(g.g2, m + 1));
    CHECK(contains(g.g3, m));
    CHECK(contains(g.g4, 2));
    CHECK(g.chain == Check::Holds);
  }
}

TEST_CASE("g-tuple of the harmonic points") {
  for (int m = 2; m <= 8; ++m) {
    std::string list = "0";
    mpz_class l = 1;
    for (int j = 1; j <= m; ++j) {
      list += ",1/" + std::to_string(j);
      mpz_lcm_ui(l.get_mpz_t(), l.get_mpz_t(), j);
    }
    const GTuple g = compute_g(AlphaVector::parse(list, kQ), 128);
    CHECK(g.g1 == l);
    CHECK(contains(g.g2, m + 1));
    CHECK(contains(g.g3, 1));
    CHECK(contains(g.g4, m + 1));
  }
}

TEST_CASE("alpha vectors are validated") {
  CHECK_THROWS(AlphaVector::parse("0,1", kQ));
  CHECK_THROWS(AlphaVector::parse("1,2,3", kQ));
  CHECK_THROWS(AlphaVector::parse("0,1,1", kQ));
  CHECK_THROWS(AlphaVector::parse("0,1,2/2,3", kQ));
  CHECK_NOTHROW(AlphaVector::parse("0,1", kQ, 1));
}

TEST_CASE("base constants match the long double formulas") {
  Rng rng(21);
  for (int i = 0; i < 200; ++i) {
    const FieldSpec f = testing::field_by_index(i);
    const AlphaVector a = testing::random_alpha(rng, f, 2 + i % 4, 9, 9);
    const AlphaReport rep = analyze_alpha(a, 128);
    const BaseOracle o = base_oracle(testing::g_oracle(a));
    CHECK(contains(rep.base.b0, o.b0, 1e-14L));
    CHECK(contains(rep.base.e0, o.e0, 1e-14L));
    CHECK(contains(rep.base.b1, o.b1, 1e-14L));
    CHECK(contains(rep.base.e1, o.e1, 1e-14L));
    const long double m = a.m();
    CHECK(contains(rep.thm.A, o.b0 + o.e0 * m, 1e-14L));
    CHECK(contains(rep.thm.B, 1 + o.b0 + o.b1 + o.e1 * m, 1e-14L));
    CHECK(contains(rep.thm.C, m));
    CHECK(contains(rep.thm.D, o.b0 * m + o.e0 * m * m, 1e-14L));
    CHECK(contains(rep.thm.E, (1 + o.b0 + o.b1) * m + (2 * o.e0 + o.e1) * m * m, 1e-14L));
    CHECK(contains(rep.gh.log_gamma, std::pow(3 * m * o.e0, 2), 1e-14L));
  }
}

TEST_CASE("integer family constants") {
  for (int m = 2; m <= 5; ++m) {
    std::string list = "0";
    for (int j = 1; j <= m; ++j) list += "," + std::to_string(j);
    const AlphaReport rep = analyze_alpha(AlphaVector::parse(list, kQ), 128);
    const long double sl = std::sqrt(std::log(m + 1.0L));
    CHECK(contains(rep.base.b1, 0));
    CHECK(contains(rep.base.e1, std::log(2.0L) + std::log(m + 1.0L) + 1, 1e-14L));
    CHECK(contains(rep.thm.A, (3 * m + 1) * sl + (m + 1) * std::log(2.0L) / (2 * sl), 1e-14L));
    // log H0 = gamma log gamma / 2 with log gamma = (3 m e0)^2.
    const long double lg = std::pow(3 * m * (3 * sl + std::log(2.0L) / (2 * sl)), 2);
    CHECK(contains(rep.gh.log_H0, std::exp(lg) * lg / 2, 1e-12L));
  }
}

TEST_CASE("integer family m=2: log log H0 near 441") {
  const AlphaReport rep = analyze_alpha(AlphaVector::parse("0,1,2", kQ), 128);
  const double llh = log(rep.gh.log_H0).mid_double();
  CHECK(llh == doctest::Approx(441).epsilon(2.0 / 441));
}

TEST_CASE("e1 clamp example with m=3 harmonic data") {
  // g1 = 6, g2 = 4, g3 = 1, g4 = 4: e1 = 1 + log 6.
  const AlphaReport rep = analyze_alpha(AlphaVector::parse("0,1,1/2,1/3", kQ), 128);
  CHECK(contains(rep.base.e1, 1 + std::log(6.0L), 1e-14L));
  CHECK(rep.base.e1.mid_double() == doctest::Approx(2.7918).epsilon(1e-4));
}

TEST_CASE("theorem constants with zero base constants") {
  BaseConstants z;
  z.b0 = z.e0 = z.b1 = z.e1 = Interval(0L, 64);
  const ThmConstants k = compute_theorem_constants(z, 4);
  CHECK(contains(k.A, 0));
  CHECK(contains(k.B, 1));
  CHECK(contains(k.C, 4));
  CHECK(contains(k.D, 0));
  CHECK(contains(k.E, 4));
  CHECK(verify_e1_inequality(z, 4) == Check::Holds);
}

TEST_CASE("H0 modes over a quadratic field") {
  const FieldSpec f = FieldSpec::imaginary_quadratic(1);
  const AlphaReport rep = analyze_alpha(AlphaVector::parse("0,1,i", f), 128);
  const GammaH0 ax = compute_gamma_H0(rep.base, 2, f, 128, H0Mode::Axiomatic);
  CHECK(ax.mode == H0Mode::Axiomatic);
  CHECK(certainly_positive(ax.log_H0));
  // Over Q the Siegel branch never enters.
  const AlphaReport q = analyze_alpha(AlphaVector::parse("0,1,2", kQ), 128);
  CHECK_FALSE(q.gh.siegel_branch);
}

TEST_CASE("S2 matches an independent bisection") {
  Rng rng(33);
  for (int i = 0; i < 60; ++i) {
    const FieldSpec f = testing::field_by_index(i);
    const AlphaVector a = testing::random_alpha(rng, f, 2 + i % 3, 9, 9);
    const AlphaReport rep = analyze_alpha(a, 128);
    const S2Result s = solve_S2(rep.base, a.m());
    REQUIRE(s.bracketed);
    const long double u = log_S2_oracle(rep.base.e0.mid_double(), rep.base.e1.mid_double(), a.m());
    CHECK(near(s.log_S2.mid_double(), u, 1e-9L));
    CHECK(s.f_at_S2.contains(Interval(1L, 128)));
    CHECK(certainly_lt(s.f_at_double_S2, Interval(1L, 128)));
    CHECK(s.gamma_dominates == Check::Holds);
  }
}

TEST_CASE("S2 synthetic constants e0 = 1, e1 = 0, m = 2") {
  BaseConstants b;
  b.b0 = b.b1 = b.e1 = Interval(0L, 128);
  b.e0 = Interval(1L, 128);
  const S2Result s = solve_S2(b, 2);
  REQUIRE(s.bracketed);
  // S log S = 2 (2 S sqrt(log S) + 4 sqrt(log S) + 8)
  const long double u = s.log_S2.mid_double();
  const long double S = std::exp(u);
  const long double resid = S * u - 2 * (2 * S * std::sqrt(u) + 4 * std::sqrt(u) + 8);
  CHECK(std::fabs(resid) <= 1e-9L * S * u);
  CHECK(near(u, log_S2_oracle(1, 0, 2), 1e-10L));
}

TEST_CASE("z inverse at fixed points and small values") {
  ZQuery q;
  q.y = Interval::euler(128);
  const ZResult e = z_inverse(q);
  CHECK(e.converged);
  CHECK(e.z.intersects(Interval::euler(128)));

  for (long double y : {2 * std::exp(2.0L), 10.0L, 100.0L, 1e6L, 1e9L}) {
    q.y = Interval::from_double(static_cast<double>(y), 128);
    const ZResult r = z_inverse(q);
    REQUIRE(r.converged);
    CHECK(near(r.z.mid_double(), testing::z_oracle(q.y.mid_double()), 1e-15L));
  }
  // z(2e^2) = e^2, since e^2 log e^2 = 2e^2.
  q.y = 2L * exp(Interval(2L, 128));
  CHECK(z_inverse(q).z.intersects(exp(Interval(2L, 128))));
}

TEST_CASE("z inverse rejects y below e") {
  ZQuery q;
  q.y = Interval(2L, 64);
  CHECK_THROWS_AS(q.validate(), std::invalid_argument);
  CHECK_THROWS(z_inverse(q));
}

TEST_CASE("iterate sandwich z1 < z3 < z < z2 < z0") {
  const Interval y(100L, 128);
  const auto it = z_iterates(y, 8);
  ZQuery q;
  q.y = y;
  const Interval z = z_inverse(q).z;
  REQUIRE(it.size() == 9);
  CHECK(certainly_lt(it[1], it[3]));
  CHECK(certainly_lt(it[3], z));
  CHECK(certainly_lt(z, it[2]));
  CHECK(certainly_lt(it[2], it[0]));
  for (std::size_t k = 1; k + 2 < it.size(); k += 2) {
    CHECK(certainly_lt(it[k], it[k + 2]));
    CHECK(certainly_lt(it[k + 3], it[k + 1]));
  }
  const auto fixed = z_iterates(Interval::euler(128), 4);
  for (const auto& v : fixed) CHECK(v.intersects(Interval::euler(128)));
}

TEST_CASE("z two is y / log(y / log y)") {
  const Interval y(10L, 128);
  const long double ref = 10.0L / std::log(10.0L / std::log(10.0L));
  CHECK(contains(z_two(y), ref, 1e-15L));
  ZQuery q;
  q.y = y;
  CHECK(certainly_lt(z_inverse(q).z, z_two(y)));
}

TEST_CASE("xi epsilon") {
  ThmConstants k;
  k.A = k.B = k.C = k.D = k.E = Interval(0L, 128);
  const Interval log_H(50L, 128);
  const Interval f(2L, 128);
  CHECK(xi_epsilon(k, f, log_H).epsilon.contains(Interval(0L, 128)));

  // B = 1 alone, log H = e: eps = z(2e)/e.
  k.B = Interval(1L, 128);
  const Interval e = Interval::euler(128);
  const XiResult x = xi_epsilon(k, f, e);
  const long double ze = testing::z_oracle(2 * std::exp(1.0L));
  CHECK(contains(x.epsilon, ze / std::exp(1.0L), 1e-15L));
}

TEST_CASE("epsilon chain ordering and the 2 rho constant") {
  CHECK(two_rho(128).contains(Interval::from_string("2.048", 128)));
  const EpsilonChain low = epsilon_upper_chain(Interval::euler(128));
  CHECK(low.z_below_z2 == Check::Holds);
  const long double e = std::exp(1.0L);
  CHECK(contains(low.z2, 2 * e / std::log(2 * e / std::log(2 * e)), 1e-15L));
  for (long v : {10L, 1000L, 100000L}) {
    const EpsilonChain c = epsilon_upper_chain(Interval(v, 128));
    CHECK(c.z_below_z2 == Check::Holds);
    CHECK_FALSE(c.hypothesis_met);
    CHECK(c.z2_below_weak == Check::Indeterminate);  // not asserted below the threshold
  }
  // Above the integer family's threshold every link of the chain is asserted.
  const AlphaReport rep = analyze_alpha(AlphaVector::parse("0,1,2", FieldSpec()), 128);
  const EpsilonChain high = epsilon_upper_chain(rep.gh.log_H0 * 2L, rep.gh.log_gamma, rep.gh.log_H0);
  CHECK(high.hypothesis_met);
  CHECK(high.z_below_z2 == Check::Holds);
  CHECK(high.z2_below_middle == Check::Holds);
  CHECK(high.middle_below_weak == Check::Holds);
  CHECK(high.z2_below_weak == Check::Holds);
}

TEST_CASE("z is increasing") {
  Rng rng(2);
  for (int i = 0; i < 100; ++i) {
    const double y = 3 + 1e6 * rng.uniform();
    ZQuery a, b;
    a.y = Interval::from_double(y, 128);
    b.y = Interval::from_double(y * (1 + 1e-6), 128);
    CHECK(certainly_lt(z_inverse(a).z, z_inverse(b).z));
  }
}
