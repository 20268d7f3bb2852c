#include "doctest.h"

#include <cmath>

#include "bakerforge/bounds.hpp"
#include "bakerforge/report.hpp"
#include "support.hpp"

using namespace bakerforge;
using testing::near;

namespace {

const FieldSpec kQ = FieldSpec::rationals();
constexpr long double kRhoL = 1.024L;

std::vector<FieldElem> rationals(std::initializer_list<long> xs) {
  std::vector<FieldElem> v;
  for (long x : xs) v.push_back(FieldElem::rational(x, kQ));
  return v;
}

const Headline* headline(const PresetReport& p, const std::string& prefix) {
  for (const auto& h : p.headlines)
    if (h.name.rfind(prefix, 0) == 0) return &h;
  return nullptr;
}

struct K {
  long double A, B, C, D, E;
};

K constants_of(const AlphaReport& rep) {
  return {rep.thm.A.mid_double(), rep.thm.B.mid_double(), rep.thm.C.mid_double(), rep.thm.D.mid_double(),
          rep.thm.E.mid_double()};
}

}  // namespace

TEST_CASE("theorem bound matches a long double recomputation") {
  for (const char* a : {"0,1,2", "0,1/2,3", "0,-2,5,1/3"}) {
    const AlphaVector alpha = AlphaVector::parse(a, kQ);
    const AlphaReport rep = analyze_alpha(alpha, 128);
    const K k = constants_of(rep);
    for (long double lh : {1e3L, 1e6L, 1e12L}) {
      const BoundReport b = theorem_bound(alpha, HSpec::from_log(HMode::Theorem, Interval::from_double(double(lh), 128)), 128);
      const long double z = testing::z_oracle(2 * lh);
      const long double eps = k.A * std::sqrt(2 * z / lh) + k.B * z / lh + k.C * std::log(z) / lh +
                              k.D * std::sqrt(std::log(z)) / lh;
      CHECK(near(b.epsilon.mid_double(), eps, 1e-12L));
      CHECK(near(b.log_lower_bound.mid_double(), -std::log(2.0L) - k.E - (1 + eps) * lh, 1e-12L));
      CHECK(b.identity == Check::Holds);
      CHECK_FALSE(b.hypothesis_met);
      CHECK_FALSE(b.provenance.empty());
    }
  }
}

TEST_CASE("theorem bound with vanishing constants is 1 / (2 e^E H)") {
  ThmConstants k;
  k.A = k.B = k.C = k.D = Interval(0L, 128);
  k.E = Interval(3L, 128);
  const Interval lh(100L, 128);
  const BoundReport b = theorem_bound_from(k, 2, lh, Interval(1L, 128));
  CHECK(b.log_lower_bound.mid_double() == doctest::Approx(-std::log(2.0) - 3 - 100).epsilon(1e-15));
  CHECK(b.hypothesis_met);
}

TEST_CASE("theorem bound rejects the hat mode") {
  const AlphaVector a = AlphaVector::parse("0,1,2", kQ);
  CHECK_THROWS_AS(theorem_bound(a, HSpec::from_log(HMode::Hat, Interval(50L, 128)), 128), std::invalid_argument);
}

TEST_CASE("HSpec log sums") {
  const std::vector<Interval> H{Interval(3L, 128), Interval(5L, 128)};
  CHECK(HSpec::theorem(H, 2).log_H.mid_double() == doctest::Approx(std::log(4.0 * 3 * 4 * 5)));
  CHECK(HSpec::hat(H).log_H.mid_double() == doctest::Approx(std::log(15.0)));
}

TEST_CASE("integers m=2 at log log H = 442 meets the hypothesis") {
  const AlphaVector a = AlphaVector::parse("0,1,2", kQ);
  const Interval lh = exp(Interval(442L, 128));
  const BoundReport b = theorem_bound(a, HSpec::from_log(HMode::Theorem, lh), 128);
  CHECK(b.hypothesis_met);
  CHECK(b.identity == Check::Holds);
  const double scaled = (b.epsilon * sqrt(Interval(442L, 128))).hi_double();
  CHECK(scaled <= 18.0);
  const BoundReport c = corollary22_bound(a, HSpec::from_log(HMode::Theorem, lh), 128);
  CHECK(c.weaker == Check::Holds);
  CHECK(certainly_le(c.log_lower_bound, b.log_lower_bound));
}

TEST_CASE("closed-form corollary matches a long double recomputation") {
  const AlphaVector alpha = AlphaVector::parse("0,1,2", kQ);
  const K k = constants_of(analyze_alpha(alpha, 128));
  const long double lh = 1e8L, ll = std::log(lh);
  const BoundReport b = corollary22_bound(alpha, HSpec::from_log(HMode::Theorem, Interval::from_double(1e8, 128)), 128);
  const long double excess = 2 * k.A * std::sqrt(kRhoL) / std::sqrt(ll) + 2 * k.B * kRhoL / ll +
                             k.D / lh * std::sqrt(std::log(2 * kRhoL * lh / ll));
  const long double ref = -std::log(2.0L) - k.E - k.C * std::log(2 * kRhoL) + k.C * (std::log(ll) - std::log(lh)) -
                          (1 + excess) * lh;
  CHECK(near(b.log_lower_bound.mid_double(), ref, 1e-12L));
}

TEST_CASE("A-hat for the integer family") {
  const Cor23Report r = corollary23_Ahat(AlphaVector::parse("0,1,2", kQ), 128);
  CHECK(r.which == AhatCase::A);
  const long double l3 = std::sqrt(std::log(3.0L));
  const long double family = 1 + 0.670L * 2 + (2.252L + 6.072L * 2) * l3;
  CHECK(family <= 18);
  CHECK(r.Ahat_chain.hi_double() <= 18);
  CHECK(r.Ahat_direct.hi_double() <= 18);
  CHECK(r.loglog_Hhat0.mid_double() == doctest::Approx(441).epsilon(2.0 / 441));
  CHECK(r.side_condition == Check::Holds);
  // log H-hat0 = log H0 - m log 2m; the shift is far below the working precision here.
  CHECK(possibly_le(r.log_Hhat0, r.log_H0));
  CHECK(near(r.log_Hhat0.mid_double() / r.log_H0.mid_double(), 1.0L, 1e-12L));
}

TEST_CASE("B-hat for gamma = (0,1,2) and the shift invariance") {
  const Cor24Report r = corollary24_Bhat(rationals({0, 1, 2}), 128);
  CHECK(r.g1_gamma == 1);
  CHECK(r.g3_gamma == 2);
  CHECK(r.m2_case == 2);
  CHECK(r.X.mid_double() == doctest::Approx(std::log(3.0)));
  CHECK(r.loglog_M0.mid_double() == doctest::Approx(441).epsilon(2.0 / 441));
  CHECK(near(r.Bhat.mid_double(), 1 + 2 * r.ahat_eta.Ahat.mid_double(), 1e-12L));
  CHECK(r.eta_bounds == Check::Holds);
  // Shifting every gamma by a rational leaves eta unchanged.
  const Cor24Report s = corollary24_Bhat(rationals({5, 6, 7}), 128);
  CHECK(near(s.Bhat.mid_double(), r.Bhat.mid_double(), 1e-15L));
  CHECK_THROWS_AS(corollary24_Bhat({parse_field_element("i", FieldSpec::imaginary_quadratic(1)),
                                    FieldElem::zero(FieldSpec::imaginary_quadratic(1)),
                                    FieldElem::one(FieldSpec::imaginary_quadratic(1))},
                                   128),
                  FieldError);
}

TEST_CASE("prior-work formulas at gamma = (0,1,2)") {
  const ComparisonReport c = compare_prior(rationals({0, 1, 2}), 128);
  const long double m = 2, g1 = 1, g3 = 2, Y = std::log(2 * g1 * g3);
  const long double sa = 16 * m * m + m * std::log(2 * m) + 39 * m + 12 + (8 + 4 / m + 1 / (3 * m * m)) * Y;
  const long double sa_ll = std::pow(16 * m * m + 36 * m + m * std::log(2 * m) + 8 * Y, 2);
  const long double X = std::log(g1 * (1 + g3));
  const long double ma = 12 * std::pow(m + 1, 3) * std::sqrt(X);
  const long double ma_ll = std::log(16 * std::pow(m + 1, 4) * X) + 16 * std::pow(m + 1, 4) * X;
  const long double simple = std::sqrt(m) + (4 + std::sqrt(m) + 8 * m) * std::sqrt(Y);
  const long double simple_ll = std::log(56 * m * m * Y) + 111 * m * m * Y;
  CHECK(near(c.sankilampi_A.value.mid_double(), sa, 1e-14L));
  CHECK(near(c.sankilampi_A.loglog_threshold.mid_double(), sa_ll, 1e-14L));
  CHECK(near(c.mahler_B.value.mid_double(), ma, 1e-14L));
  CHECK(near(c.mahler_B.loglog_threshold.mid_double(), ma_ll, 1e-14L));
  CHECK(near(c.ours_A_simple.value.mid_double(), simple, 1e-14L));
  CHECK(near(c.ours_A_simple.loglog_threshold.mid_double(), simple_ll, 1e-14L));
  CHECK(sa <= 175);
  CHECK(std::fabs(ma - 340) <= 2);
  CHECK(std::fabs(ma_ll - 1432) <= 2);
  CHECK(std::fabs(sa_ll - 23442) <= 0.05L * 23442);
  CHECK(c.simple_le_sankilampi == Check::Holds);
  CHECK(c.case_le_sankilampi == Check::Holds);
  CHECK(c.B_le_mahler == Check::Holds);
}

TEST_CASE("family coefficients") {
  // kappa = 1 reproduces the integer family: c2 = 6 sqrt(rho) and c1 = 2 sqrt(rho) + 2 rho / 9.
  const auto [c1, c2] = example_ahat_coefficients(Interval(1L, 128));
  CHECK(c2.mid_double() == doctest::Approx(6 * std::sqrt(1.024)));
  CHECK(c1.mid_double() == doctest::Approx(2 * std::sqrt(1.024) + 2 * 1.024 / 9));
}

TEST_CASE("integer preset headlines") {
  const PresetReport p = example_preset(Preset::Integers, 2, 0, 128);
  CHECK(p.all == Check::Holds);
  CHECK(p.headlines.size() == 8);
  for (const auto& h : p.headlines) {
    INFO(h.name);
    CHECK(h.ok == Check::Holds);
  }
}

TEST_CASE("harmonic preset") {
  const PresetReport p = example_preset(Preset::Harmonic, 2, 0, 128);
  CHECK(p.lcm == 2);
  CHECK(p.all == Check::Holds);
  const PresetReport p6 = example_preset(Preset::Harmonic, 6, 0, 128);
  CHECK(p6.lcm == 60);
  CHECK_THROWS_AS(example_preset(Preset::Harmonic, 1, 0, 128), std::invalid_argument);
}

TEST_CASE("Gaussian disk points match a brute-force count") {
  for (long r2 : {2L, 4L, 5L, 10L, 25L}) {
    long count = 0;
    for (long a = -6; a <= 6; ++a)
      for (long b = -6; b <= 6; ++b) count += a * a + b * b <= r2;
    const auto pts = gaussian_disk_points(r2);
    CHECK(static_cast<long>(pts.size()) == count);
    CHECK(pts.front().is_zero());
    for (std::size_t i = 1; i < pts.size(); ++i) CHECK(pts[i - 1].norm() <= pts[i].norm());
  }
  const PresetReport p = example_preset(Preset::GaussianDisk, 0, 2, 128);
  CHECK(p.count == 9);
  CHECK(p.m == 8);
  CHECK(p.all == Check::Holds);
  const Headline* c1 = headline(p, "c1");
  const Headline* c2 = headline(p, "c2");
  REQUIRE(c1);
  REQUIRE(c2);
  CHECK(std::fabs(c1->computed.mid_double() - 1.596) <= 0.01);
  CHECK(std::fabs(c2->computed.mid_double() - 4.294) <= 0.01);
  CHECK_THROWS_AS(example_preset(Preset::GaussianDisk, 0, 1, 128), std::invalid_argument);
}

TEST_CASE("empirical table for alpha = (0,1)") {
  const EmpiricalTable t = empirical_check(AlphaVector::parse("0,1", kQ, 1), 2, 128);
  CHECK(t.candidates == 24);  // 5^2 - 1
  CHECK(t.rows.size() == 24);
  CHECK(t.all_nonzero == Check::Holds);
  CHECK(t.flagged == 0);
  REQUIRE(t.min_row.has_value());
  CHECK(t.rows[*t.min_row].abs_value.mid_double() == doctest::Approx(std::exp(1.0) - 2).epsilon(1e-12));
  CHECK_THROWS_AS(empirical_check(AlphaVector::parse("0,1,2", kQ), 30, 128), std::invalid_argument);
}

TEST_CASE("json envelope and writers") {
  const Json j = envelope("example", 128, true, to_json(example_preset(Preset::Integers, 2, 0, 128)));
  CHECK(j["schema"] == kSchema);
  CHECK(j["ok"] == true);
  const std::string csv = to_csv(j);
  CHECK(csv.rfind("key,value", 0) == 0);
  CHECK(csv.find("schema,baker-forge/1") != std::string::npos);
  CHECK(to_text(j).find("schema: baker-forge/1") != std::string::npos);
  CHECK(parse_format("csv") == Format::Csv);
  CHECK_THROWS(parse_format("xml"));
  // Intervals are [lo, hi] decimal strings.
  const Json iv = to_json(Interval::from_bounds(1, 2, 64));
  REQUIRE(iv.is_array());
  CHECK(std::stod(iv[0].get<std::string>()) == 1.0);
  CHECK(std::stod(iv[1].get<std::string>()) == 2.0);
}
