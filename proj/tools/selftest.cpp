#include "selftest.hpp"

#include <random>
#include <set>

namespace bakerforge {

namespace {

struct Tally {
  long run = 0;
  long passed = 0;
  std::vector<std::string> failures;

  void record(bool ok, const std::string& what) {
    ++run;
    if (ok) {
      ++passed;
    } else if (failures.size() < 5) {
      failures.push_back(what);
    }
  }
  Json json() const { return Json{{"run", run}, {"passed", passed}, {"failures", failures}}; }
  bool ok() const { return run == passed; }
};

FieldSpec pick_field(std::mt19937_64& rng) {
  switch (rng() % 3) {
    case 0: return FieldSpec::rationals();
    case 1: return FieldSpec::imaginary_quadratic(1);
    default: return FieldSpec::imaginary_quadratic(3);
  }
}

AlphaVector random_alpha(std::mt19937_64& rng, FieldSpec f, std::size_t m, long span, long max_den) {
  std::vector<AlphaPoint> pts{AlphaPoint{QuadInt::zero(f), 1}};
  std::set<std::string> seen{"0"};
  while (pts.size() < m + 1) {
    const long a = static_cast<long>(rng() % (2 * span + 1)) - span;
    const long b = f.is_rational() ? 0 : static_cast<long>(rng() % (2 * span + 1)) - span;
    const long den = 1 + static_cast<long>(rng() % max_den);
    const AlphaPoint p = alpha_normalize(QuadInt(mpz_class(a), mpz_class(b), f), mpz_class(den));
    if (seen.insert(to_string(p.value())).second) pts.push_back(p);
  }
  return AlphaVector::make(f, pts);
}

}  // namespace

Json run_selftest(std::uint64_t seed, Precision prec) {
  std::mt19937_64 rng(seed);
  Tally invariants, nested, siegel, pade, presets, dominance;

  for (int i = 0; i < 100; ++i) {
    const FieldSpec f = pick_field(rng);
    const AlphaVector a = random_alpha(rng, f, 2 + rng() % 3, 6, 5);
    const AlphaReport rep = analyze_alpha(a, prec);
    const S2Result s2 = solve_S2(rep.base, a.m());
    invariants.record(rep.g.chain == Check::Holds && rep.e1_check == Check::Holds &&
                          s2.gamma_dominates == Check::Holds,
                      a.to_string());
  }

  std::uniform_real_distribution<double> logy(1.0, std::log(1e9));
  for (int i = 0; i < 200; ++i) {
    ZQuery q;
    q.y = Interval::from_double(std::exp(logy(rng)), prec);
    const ZResult z = z_inverse(q);
    const Interval resid = abs(z.z * log(z.z) - q.y);
    nested.record(z.converged && certainly_le(resid, q.y * Interval::from_double(1e-12, prec)) &&
                      certainly_lt(z.z, z_two(q.y)),
                  q.y.to_string(10));
  }

  for (int i = 0; i < 60; ++i) {
    const FieldSpec f = pick_field(rng);
    const std::size_t N = 2 + rng() % 3;
    const std::size_t M = 1 + rng() % (N - 1);
    std::vector<std::vector<QuadInt>> rows(M);
    for (auto& row : rows) {
      bool nonzero = false;
      while (!nonzero) {
        row.clear();
        for (std::size_t n = 0; n < N; ++n) {
          const long a = static_cast<long>(rng() % 7) - 3;
          const long b = f.is_rational() ? 0 : static_cast<long>(rng() % 5) - 2;
          row.emplace_back(mpz_class(a), mpz_class(b), f);
          nonzero = nonzero || a != 0 || b != 0;
        }
      }
    }
    const LinearSystem sys = LinearSystem::make(f, rows);
    const SiegelSolution s = solve_small_system(sys, SiegelConstants::for_field(f, prec),
                                                SolveStrategy::KernelReduce, prec);
    siegel.record(verify_solution(sys, s.z) && s.bound_met, f.to_string());
  }

  for (const char* text : {"0,1,2", "0,1,1/2", "0,i,1+i", "0,w,1"}) {
    const FieldSpec f = std::string(text).find('i') != std::string::npos ? FieldSpec::imaginary_quadratic(1)
                        : std::string(text).find('w') != std::string::npos ? FieldSpec::imaginary_quadratic(3)
                                                                           : FieldSpec::rationals();
    const AlphaVector a = AlphaVector::parse(text, f);
    const PadeSystem sys = construct_pade(a, PadeParams::make({2, 2}, {1, 1}), SolveStrategy::Exhaustive, prec);
    const DerivedFamily fam = derive_family(sys);
    const DeterminantCheck det = family_determinant(sys, fam);
    const NumericalForms forms = evaluate_forms(sys, fam, prec);
    pade.record(sys.bound_met && sys.order_ok == Check::Holds && sys.integral_ok == Check::Holds &&
                    det.factor_ok == Check::Holds && forms.integral == Check::Holds &&
                    forms.det_nonzero == Check::Holds && forms.routes_agree == Check::Holds,
                text);
  }

  presets.record(example_preset(Preset::Integers, 2, 0, prec).all == Check::Holds, "integers m=2");
  presets.record(example_preset(Preset::Harmonic, 2, 0, prec).all == Check::Holds, "harmonic m=2");
  presets.record(example_preset(Preset::GaussianDisk, 0, 2, prec).all == Check::Holds, "gaussian_disk r^2=2");

  for (int i = 0; i < 50; ++i) {
    const AlphaVector a = random_alpha(rng, FieldSpec::rationals(), 2 + rng() % 4, 20, 12);
    std::vector<FieldElem> g;
    for (const auto& p : a.points) g.push_back(p.value());
    const ComparisonReport c = compare_prior(g, prec);
    dominance.record(c.simple_le_sankilampi == Check::Holds && c.case_le_sankilampi == Check::Holds,
                     a.to_string());
  }

  const bool ok = invariants.ok() && nested.ok() && siegel.ok() && pade.ok() && presets.ok() &&
                  dominance.ok();
  return Json{{"seed", seed},
              {"invariants", invariants.json()},
              {"nested_log", nested.json()},
              {"siegel", siegel.json()},
              {"pade_and_forms", pade.json()},
              {"presets", presets.json()},
              {"dominance", dominance.json()},
              {"ok", ok}};
}

}  // namespace bakerforge
