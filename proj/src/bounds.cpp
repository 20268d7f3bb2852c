#include "bakerforge/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace bakerforge {

namespace {

Interval num(const char* text, Precision prec) { return Interval::from_string(text, prec); }
Interval lit(long v, Precision prec) { return Interval(v, prec); }

Check le_check(const Interval& a, const Interval& b) {
  if (certainly_le(a, b)) return Check::Holds;
  if (certainly_gt(a, b)) return Check::Fails;
  return Check::Indeterminate;
}

Check both(Check a, Check b) {
  if (a == Check::Fails || b == Check::Fails) return Check::Fails;
  if (a == Check::Indeterminate || b == Check::Indeterminate) return Check::Indeterminate;
  return Check::Holds;
}

Check from_bool(bool ok) { return ok ? Check::Holds : Check::Fails; }

void require_rational(const std::vector<FieldElem>& gamma) {
  for (const auto& g : gamma) {
    if (!g.field.is_rational()) throw FieldError("prior-work formulas are stated over Q only");
  }
}

mpq_class abs_q(const mpq_class& q) { return q < 0 ? mpq_class(-q) : q; }

}  // namespace

// ---------------------------------------------------------------------------
// HSpec

HSpec HSpec::theorem(const std::vector<Interval>& H, std::size_t m) {
  if (H.size() != m) throw std::invalid_argument("need exactly m values H_1..H_m");
  HSpec h;
  h.H = H;
  h.mode = HMode::Theorem;
  const Precision prec = H.empty() ? kDefaultPrecision : H.front().precision();
  Interval sum(0L, prec);
  const Interval log2m = log(lit(2 * static_cast<long>(m), prec));
  for (const auto& v : H) {
    if (certainly_lt(v, lit(1, prec))) throw std::invalid_argument("H_i must be >= 1");
    sum += log2m + log(v);
  }
  h.log_H = sum;
  return h;
}

HSpec HSpec::hat(const std::vector<Interval>& H) {
  HSpec h;
  h.H = H;
  h.mode = HMode::Hat;
  const Precision prec = H.empty() ? kDefaultPrecision : H.front().precision();
  Interval sum(0L, prec);
  for (const auto& v : H) {
    if (certainly_lt(v, lit(1, prec))) throw std::invalid_argument("H_i must be >= 1");
    sum += log(v);
  }
  h.log_H = sum;
  return h;
}

HSpec HSpec::from_log(HMode mode, const Interval& log_H) {
  HSpec h;
  h.mode = mode;
  h.log_H = log_H;
  return h;
}

// ---------------------------------------------------------------------------
// Full and simplified lower bounds

BoundReport theorem_bound_from(const ThmConstants& k, std::size_t m, const Interval& log_H,
                               const Interval& log_H0) {
  const Precision prec = log_H.precision();
  const XiResult xi = xi_epsilon(k, lit(2, prec), log_H);
  const Interval log2 = log(lit(2, prec));

  BoundReport r;
  r.log_H = log_H;
  r.log_H0 = log_H0;
  r.epsilon = xi.epsilon;
  r.log_lower_bound = -log2 - k.E - (xi.epsilon + 1L) * log_H;
  r.hypothesis_met = certainly_ge(log_H, log_H0);
  const Interval back = r.log_lower_bound + log2 + k.E + (xi.epsilon + 1L) * log_H;
  r.identity = back.contains_zero() ? Check::Holds : Check::Fails;
  r.components = {{"A", k.A}, {"B", k.B}, {"C", k.C}, {"D", k.D}, {"E", k.E},
                  {"z(2 log H)", xi.z},
                  {"eps A-term", xi.terms[0]}, {"eps B-term", xi.terms[1]},
                  {"eps C-term", xi.terms[2]}, {"eps D-term", xi.terms[3]},
                  {"m", lit(static_cast<long>(m), prec)}};
  r.provenance = {
      "|b0 + b1 e^a1 + ... + bm e^am| > 1 / (2 e^E H^(1 + eps(H))), H = prod 2m H_i",
      "eps(H) = A sqrt(2z/log H) + B z/log H + C log z/log H + D sqrt(log z)/log H, z = z(2 log H)",
      "H0 = max{exp(gamma log gamma / 2), 2 log(s/t)}, log gamma = (3 m e0)^2"};
  return r;
}

BoundReport theorem_bound(const AlphaVector& alpha, const HSpec& h, Precision prec) {
  if (h.mode != HMode::Theorem) throw std::invalid_argument("theorem bound needs H = prod 2m H_i");
  const AlphaReport rep = analyze_alpha(alpha, prec);
  return theorem_bound_from(rep.thm, alpha.m(), h.log_H.with_precision(prec), rep.gh.log_H0);
}

BoundReport corollary22_from(const ThmConstants& k, std::size_t m, const Interval& log_H,
                             const Interval& log_H0) {
  const Precision prec = log_H.precision();
  const Interval r = rho(prec);
  const Interval tr = two_rho(prec);
  const Interval LL = log(log_H);
  const Interval weak_log = log(tr * log_H / LL);  // log(2 rho log H / log log H)

  // 1 + eps' with eps' the exponent excess; the (log log H / log H)^C / (2 rho)^C
  // prefactor equals H^(-C log(2 rho log H / log log H) / log H).
  const Interval excess = k.A * 2L * sqrt(r) / sqrt(LL) + k.B * tr / LL + k.D * sqrt(weak_log) / log_H;

  BoundReport out;
  out.log_H = log_H;
  out.log_H0 = log_H0;
  out.epsilon = excess + k.C * weak_log / log_H;
  out.log_lower_bound = -log(lit(2, prec)) - k.E - k.C * log(tr) + k.C * (log(LL) - log(log_H)) -
                        (excess + 1L) * log_H;
  out.hypothesis_met = certainly_ge(log_H, log_H0);
  const Interval back =
      out.log_lower_bound + log(lit(2, prec)) + k.E + (out.epsilon + 1L) * log_H;
  out.identity = back.contains_zero() ? Check::Holds : Check::Fails;
  out.components = {{"A", k.A}, {"B", k.B}, {"C", k.C}, {"D", k.D}, {"E", k.E},
                    {"rho", r},
                    {"C exponent", k.C},
                    {"D-term", k.D / log_H * sqrt(weak_log)},
                    {"m", lit(static_cast<long>(m), prec)}};
  out.provenance = {
      "1/(2 e^E (2 rho)^C) (log log H / log H)^C H^(-1 - 2 A sqrt(rho)/sqrt(log log H) - 2 B rho / "
      "log log H - D/log H sqrt(log(2 rho log H / log log H))), rho = 1.024",
      "valid for H >= H0, weaker than the bound with eps(H) = xi(z, H)"};

  const BoundReport full = theorem_bound_from(k, m, log_H, log_H0);
  out.weaker = out.hypothesis_met ? le_check(out.log_lower_bound, full.log_lower_bound)
                                  : Check::Indeterminate;
  out.components.push_back({"full log bound", full.log_lower_bound});
  return out;
}

BoundReport corollary22_bound(const AlphaVector& alpha, const HSpec& h, Precision prec) {
  if (h.mode != HMode::Theorem) throw std::invalid_argument("corollary bound needs H = prod 2m H_i");
  const AlphaReport rep = analyze_alpha(alpha, prec);
  return corollary22_from(rep.thm, alpha.m(), h.log_H.with_precision(prec), rep.gh.log_H0);
}

// ---------------------------------------------------------------------------
// A-hat

const char* ahat_case_name(AhatCase c) { return c == AhatCase::A ? "a" : "b"; }

namespace {

// 0: g1 <= g2 g4, 1: g1 > g2 g4, -1: undecided.
int case_split(const GTuple& g) {
  if (g.g2_exact.s == 0 && g.g4_exact.s == 0) {
    return mpq_class(g.g1) <= g.g2_exact.r * g.g4_exact.r ? 0 : 1;
  }
  for (Precision p = 128; p <= 2048; p *= 2) {
    const Interval lhs(g.g1, p);
    const Interval rhs = g.g2_exact.enclose(p) * g.g4_exact.enclose(p);
    if (certainly_le(lhs, rhs)) return 0;
    if (certainly_gt(lhs, rhs)) return 1;
  }
  return -1;
}

}  // namespace

Cor23Report corollary23_from(const AlphaReport& rep, Precision prec, bool direct) {
  const GTuple& g = rep.g;
  const long m = static_cast<long>(rep.alpha.m());
  const Interval sm = sqrt(lit(m, prec));
  const Interval g2 = g.g2_exact.enclose(prec);
  const Interval g3 = g.g3_exact.enclose(prec);

  const Interval common = lit(1, prec) +
                          (num("3.036", prec) + num("7.084", prec) * m) * sqrt(log(g2)) +
                          num("0.633", prec) * sm;
  const Interval form_a = common + num("0.580", prec) * sm * sqrt(log(g3 + 1L));
  const Interval form_b = common + (num("0.290", prec) + num("0.410", prec) * sm) *
                                       sqrt(log(Interval(g.g1, prec) * (g3 + 1L)));

  Cor23Report out;
  out.base = rep;
  const int split = case_split(g);
  out.which = split == 1 ? AhatCase::B : AhatCase::A;
  out.Ahat = split == 0 ? form_a : split == 1 ? form_b : max(form_a, form_b);

  const ThmConstants& k = rep.thm;
  const Interval log_H = rep.gh.log_H0.with_precision(prec);
  const Interval LL = log(log_H);
  const Interval log2m = log(lit(2 * m, prec));
  const Interval log_Hhat = log_H - log2m * m;
  const Interval sqrt_LLhat = sqrt(log(log_Hhat));
  out.log_H0 = log_H;
  out.log_Hhat0 = log_Hhat;
  out.loglog_Hhat0 = log(log_Hhat);

  const Interval r = rho(prec);
  const Interval chain = k.A * 2L * sqrt(r) + k.B * two_rho(prec) / sqrt(LL) +
                         k.C * LL * sqrt(LL) / log_H + k.D * LL / log_H;
  auto shift = [&](const Interval& eps) {
    return (log(lit(2, prec)) + k.E + (eps + 1L) * log2m * m) / log_Hhat;
  };
  out.Ahat_chain = chain + shift(chain / sqrt(LL)) * sqrt_LLhat;
  if (direct) {
    const XiResult xi = xi_epsilon(k, lit(2, prec), log_H);
    out.Ahat_direct = (xi.epsilon + shift(xi.epsilon)) * sqrt_LLhat;
    out.direct_computed = true;
  }

  const Interval t = square(rep.base.e0.with_precision(prec) * (3 * m));
  const Interval big = t * exp(t);
  const SiegelConstants sc = SiegelConstants::for_field(rep.alpha.field, prec);
  const Interval x = lit(2, prec) * log(sc.s / sc.t);
  if (!certainly_gt(x, lit(1, prec))) {
    out.side_premise = Check::Holds;  // log(2 log(s/t)) <= 0
  } else {
    out.side_premise = le_check(lit(2, prec) * log(x), big);
  }
  // log H0 = max{big / 2, log x}; subtracting m log 2m > 0 leaves only the second branch to check.
  out.side_condition = certainly_gt(x, lit(1, prec))
                           ? le_check(log(x) - log2m * m, big / 2L)
                           : Check::Holds;
  return out;
}

Cor23Report corollary23_Ahat(const AlphaVector& alpha, Precision prec, bool direct) {
  return corollary23_from(analyze_alpha(alpha, prec), prec, direct);
}

// ---------------------------------------------------------------------------
// B-hat

namespace {

Cor24Report bhat_impl(const std::vector<FieldElem>& gamma, Precision prec, bool direct) {
  require_rational(gamma);
  if (gamma.size() < 3) throw std::invalid_argument("need at least three rationals (m >= 2)");
  Cor24Report out;
  out.gamma = gamma;
  out.eta = AlphaVector::shifted_to_origin(FieldSpec::rationals(), gamma);
  const long m = static_cast<long>(out.eta.m());

  mpz_class g1 = 1;
  mpq_class g3 = 0;
  for (const auto& v : gamma) {
    mpz_class den = v.a.get_den();
    mpz_lcm(g1.get_mpz_t(), g1.get_mpz_t(), den.get_mpz_t());
    g3 = std::max(g3, abs_q(v.a));
  }
  out.g1_gamma = g1;
  out.g3_gamma = g3;
  const mpq_class P = mpq_class(g1) * (g3 + 1);
  out.X = log(Interval(P, prec));

  out.ahat_eta = corollary23_Ahat(out.eta, prec, direct);
  out.Bhat = out.ahat_eta.Ahat * m + 1L;
  out.c_m = m == 2 ? 13 : 12;
  out.cap = sqrt(out.X) * (out.c_m * m * m);
  out.cap_ok = le_check(out.Bhat, out.cap);
  if (m == 2) {
    out.m2_case = P == 2 ? 1 : P == 3 ? 2 : 3;
  }

  out.loglog_M0 = out.ahat_eta.loglog_Hhat0;
  const Interval k = out.X * (96 * m * m);
  out.loglog_M0_cap = log(k) + out.X * (192 * m * m);
  out.threshold_ok = le_check(out.loglog_M0, out.loglog_M0_cap);

  const GTuple& ge = out.ahat_eta.base.g;
  const bool g1_ok = ge.g1 <= g1;
  const bool g3_ok = ge.g3_exact <= Surd::rational(g3 * 2);
  const bool g4_ok = ge.g4_exact <= Surd::rational(mpq_class(g1) + 1);
  out.eta_bounds = from_bool(g1_ok && g3_ok && g4_ok);

  if (P >= 3) {
    const Interval lhs = sqrt(log(Interval(mpq_class(g1) * (g3 * 2 + 1), prec)));
    out.mean_value = le_check(lhs, sqrt(out.X) + num("0.331", prec));
  }
  return out;
}

}  // namespace

Cor24Report corollary24_Bhat(const std::vector<FieldElem>& gamma, Precision prec) {
  return bhat_impl(gamma, prec, true);
}

// ---------------------------------------------------------------------------
// Older explicit results

namespace {

ComparisonReport compare_impl(const std::vector<FieldElem>& gamma, Precision prec, bool direct,
                              Cor24Report* keep) {
  Cor24Report b = bhat_impl(gamma, prec, direct);
  const long m = static_cast<long>(b.eta.m());
  const GTuple& g = b.ahat_eta.base.g;
  mpq_class g3t = 1;
  for (const auto& pt : b.eta.points) g3t = std::max(g3t, abs_q(pt.value().a));
  const Interval Y = log(Interval(mpq_class(g.g1) * g3t * 2, prec));
  const Interval sm = sqrt(lit(m, prec));
  const Interval log2m = log(lit(2 * m, prec));

  ComparisonReport c;
  c.Y = Y;
  c.ours_A.value = b.ahat_eta.Ahat;
  c.ours_A.loglog_threshold = b.ahat_eta.loglog_Hhat0;

  c.ours_A_simple.value = sm + (sm + (4 + 8 * m)) * sqrt(Y);
  c.ours_A_simple.loglog_threshold = log(Y * (56 * m * m)) + Y * (111 * m * m);

  const Interval mq = lit(m, prec);
  c.sankilampi_A.value = lit(16 * m * m + 39 * m + 12, prec) + mq * log2m +
                         (lit(8, prec) + lit(4, prec) / mq + lit(1, prec) / (mq * mq * 3L)) * Y;
  c.sankilampi_A.loglog_threshold =
      square(lit(16 * m * m + 36 * m, prec) + mq * log2m + Y * 8L);

  c.ours_B.value = b.Bhat;
  c.ours_B.loglog_threshold = b.loglog_M0;

  const long m1 = m + 1;
  c.mahler_B.value = sqrt(b.X) * (12 * m1 * m1 * m1);
  const Interval km = b.X * (16 * m1 * m1 * m1 * m1);
  c.mahler_B.loglog_threshold = log(km) + km;

  c.simple_le_sankilampi = le_check(c.ours_A_simple.value, c.sankilampi_A.value);
  c.case_le_sankilampi = le_check(c.ours_A.value, c.sankilampi_A.value);
  c.case_le_simple = le_check(c.ours_A.value, c.ours_A_simple.value);
  c.B_le_mahler = le_check(c.ours_B.value, c.mahler_B.value);
  c.B_threshold_le_mahler = le_check(b.loglog_M0_cap, c.mahler_B.loglog_threshold);
  if (keep) *keep = std::move(b);
  return c;
}

}  // namespace

ComparisonReport compare_prior(const std::vector<FieldElem>& gamma, Precision prec) {
  return compare_impl(gamma, prec, false, nullptr);
}

// ---------------------------------------------------------------------------
// Example families

Preset parse_preset(const std::string& name) {
  if (name == "integers") return Preset::Integers;
  if (name == "harmonic") return Preset::Harmonic;
  if (name == "gaussian_disk" || name == "gaussian-disk") return Preset::GaussianDisk;
  throw std::invalid_argument("unknown preset: " + name);
}

const char* preset_name(Preset p) {
  switch (p) {
    case Preset::Integers: return "integers";
    case Preset::Harmonic: return "harmonic";
    case Preset::GaussianDisk: return "gaussian_disk";
  }
  return "?";
}

std::pair<Interval, Interval> example_ahat_coefficients(const Interval& kappa) {
  const Precision prec = kappa.precision();
  const Interval sr = sqrt(rho(prec));
  const Interval c1 = kappa * (sr * 2L + two_rho(prec) / 9L);
  const Interval c2 = kappa * sr * 6L;
  return {c1, c2};
}

std::vector<QuadInt> gaussian_disk_points(const mpq_class& r2) {
  const FieldSpec f = FieldSpec::imaginary_quadratic(1);
  mpz_class R = 0;
  while (mpq_class(R * R) <= r2) ++R;
  std::vector<QuadInt> pts;
  for (mpz_class a = -R; a <= R; ++a) {
    for (mpz_class b = -R; b <= R; ++b) {
      if (mpq_class(a * a + b * b) <= r2) pts.emplace_back(a, b, f);
    }
  }
  std::sort(pts.begin(), pts.end(), [](const QuadInt& x, const QuadInt& y) {
    const mpz_class nx = x.norm(), ny = y.norm();
    if (nx != ny) return nx < ny;
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  });
  return pts;
}

namespace {

void headline(PresetReport& r, std::string name, const Interval& v, const char* rel,
              double target, double tol, bool relative = false) {
  Headline h;
  h.name = std::move(name);
  h.computed = v;
  h.relation = rel;
  h.target = target;
  h.tolerance = tol;
  h.relative = relative;
  const Precision p = v.precision();
  if (h.relation == "<=") {
    h.ok = le_check(v, Interval::from_double(target, p));
  } else {
    const double slack = relative ? std::fabs(target) * tol : tol;
    const Interval lo = Interval::from_double(target, p) - Interval::from_double(slack, p);
    const Interval hi = Interval::from_double(target, p) + Interval::from_double(slack, p);
    h.ok = both(le_check(lo, v), le_check(v, hi));
  }
  r.headlines.push_back(std::move(h));
}

std::vector<FieldElem> values_of(const AlphaVector& a) {
  std::vector<FieldElem> v;
  for (const auto& p : a.points) v.push_back(p.value());
  return v;
}

void finish(PresetReport& r) {
  Check all = Check::Holds;
  for (const auto& h : r.headlines) all = both(all, h.ok);
  for (const auto& c : r.checks) all = both(all, c.second);
  r.all = all;
}

}  // namespace

PresetReport example_preset(Preset preset, long m, const mpq_class& r_squared, Precision prec) {
  PresetReport r;
  r.preset = preset;
  const FieldSpec Q = FieldSpec::rationals();

  if (preset == Preset::GaussianDisk) {
    if (r_squared < 2) throw std::invalid_argument("gaussian_disk needs r >= sqrt(2)");
    const FieldSpec f = FieldSpec::imaginary_quadratic(1);
    const auto pts = gaussian_disk_points(r_squared);
    std::vector<AlphaPoint> ap;
    for (const auto& z : pts) ap.push_back(AlphaPoint{z, 1});
    r.alpha = AlphaVector::make(f, ap);
    r.r_squared = r_squared;
    r.count = static_cast<long>(pts.size());
    m = r.count - 1;
  } else {
    if (m < 2) throw std::invalid_argument("presets need m >= 2");
    std::vector<AlphaPoint> ap;
    ap.push_back(AlphaPoint{QuadInt::zero(Q), 1});
    for (long j = 1; j <= m; ++j) {
      if (preset == Preset::Integers) {
        ap.push_back(AlphaPoint{QuadInt(mpz_class(j), 0, Q), 1});
      } else {
        ap.push_back(AlphaPoint{QuadInt::one(Q), mpz_class(j)});
      }
    }
    r.alpha = AlphaVector::make(Q, ap);
  }
  r.m = m;

  const AlphaReport rep = analyze_alpha(r.alpha, prec);
  r.cor23 = corollary23_from(rep, prec, true);
  const Interval mq = lit(m, prec);
  const Interval lm1 = log(lit(m + 1, prec));
  const Interval slm1 = sqrt(lm1);
  const long m2 = m * m;

  r.checks.push_back({"e1 inequality 25 m e1 <= (3 m e0)^2", rep.e1_check});
  r.checks.push_back({"g chain", rep.g.chain});
  r.checks.push_back({"side condition on log H-hat_0", r.cor23.side_condition});

  if (preset != Preset::GaussianDisk) {
    ComparisonReport cmp;
    Cor24Report b;
    cmp = compare_impl(values_of(r.alpha), prec, true, &b);
    r.cor24 = std::move(b);
    r.prior = std::move(cmp);
    r.checks.push_back({"simplified A-hat <= Sankilampi A-hat", r.prior->simple_le_sankilampi});
    r.checks.push_back({"B-hat <= c_m m^2 sqrt(log(g1(1+g3)))", r.cor24->cap_ok});
    r.checks.push_back({"log log M0 <= cap", r.cor24->threshold_ok});
  }

  const auto coeff = [&](const Interval& kappa) {
    const auto c = example_ahat_coefficients(kappa);
    r.formulas.push_back({"c1", c.first});
    r.formulas.push_back({"c2", c.second});
    return c;
  };
  r.formulas.push_back({"A-hat (case formula)", r.cor23.Ahat});
  r.formulas.push_back({"A-hat (rho chain at threshold)", r.cor23.Ahat_chain});
  r.formulas.push_back({"A-hat (exact z at threshold)", r.cor23.Ahat_direct});
  r.formulas.push_back({"log log H-hat_0", r.cor23.loglog_Hhat0});

  switch (preset) {
    case Preset::Integers: {
      coeff(lit(1, prec));
      const Interval ahat = lit(1, prec) + num("0.670", prec) * mq +
                            (num("2.252", prec) + num("6.072", prec) * mq) * slm1;
      const Interval ll = log(lit(m2, prec) * (num("40.5", prec) * lm1) + num("9.850", prec)) +
                          (num("81", prec) * lm1 + num("19.699", prec)) * m2;
      const Interval bhat = ahat * m + 1L;
      const Interval bhat_direct = r.cor23.Ahat_direct * m + 1L;
      r.formulas.push_back({"A-hat (family formula)", ahat});
      r.formulas.push_back({"log log H-hat_0 (family formula)", ll});
      r.formulas.push_back({"B-hat (family formula)", bhat});
      r.formulas.push_back({"B-hat (exact z at threshold)", bhat_direct});
      r.formulas.push_back({"B-hat (1 + m case formula)", r.cor24->Bhat});
      if (m == 2) {
        headline(r, "A-hat", ahat, "<=", 18, 0);
        headline(r, "log log H-hat_0", r.cor23.loglog_Hhat0, "~", 441, 2);
        headline(r, "Sankilampi A-hat", r.prior->sankilampi_A.value, "<=", 175, 0);
        headline(r, "Sankilampi log log H-hat_0", r.prior->sankilampi_A.loglog_threshold, "~",
                 23442, 0.05, true);
        headline(r, "B-hat", bhat, "<=", 36, 0);
        headline(r, "log log M0", r.cor24->loglog_M0, "~", 441, 2);
        headline(r, "Mahler B-hat", r.prior->mahler_B.value, "~", 340, 2);
        headline(r, "Mahler log log M0", r.prior->mahler_B.loglog_threshold, "~", 1432, 2);
      }
      break;
    }
    case Preset::Harmonic: {
      mpz_class l = 1;
      for (long j = 2; j <= m; ++j) {
        mpz_class jj = j;
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), jj.get_mpz_t());
      }
      r.lcm = l;
      const Interval rosser = num("1.030883", prec) * mq;
      r.checks.push_back({"lcm(1..m) <= exp(1.030883 m)", le_check(log(Interval(l, prec)), rosser)});
      coeff(lit(1, prec));
      const Interval ahat = lit(1, prec) + num("0.036", prec) * mq +
                            (num("3.036", prec) + num("7.084", prec) * mq) * slm1;
      const Interval ll = log(num("55.125", prec) * m2 * lm1) + num("110.25", prec) * m2 * lm1;
      const Interval sa = lit(16 * m2, prec) + mq * log(mq) + num("47.941", prec) * mq +
                          num("23.285", prec);
      const Interval sa_ll =
          square(lit(16 * m2, prec) + mq * log(mq) + num("44.998", prec) * mq + num("5.546", prec));
      const Interval lead = num("7.1", prec) * m2 * slm1;
      const Interval k_ma = num("16.1", prec) * (m * (m + 1) * (m + 1) * (m + 1) * (m + 1));
      r.formulas.push_back({"A-hat (family formula)", ahat});
      r.formulas.push_back({"log log H-hat_0 (family cap)", ll});
      r.formulas.push_back({"Sankilampi A-hat (family formula)", sa});
      r.formulas.push_back({"Sankilampi log log H-hat_0 (family formula)", sa_ll});
      r.formulas.push_back({"B-hat leading term 7.1 m^2 sqrt log(m+1)", lead});
      r.formulas.push_back({"B-hat (1 + m family formula)", ahat * m + 1L});
      r.formulas.push_back({"Mahler B-hat (family formula)", num("12.1", prec) * (m * (m + 1) * (m + 1) * (m + 1))});
      r.formulas.push_back({"Mahler log log M0 (family formula)", log(k_ma) + k_ma});
      // The m^2 sqrt log(m+1) coefficient of 1 + m A-hat(family) is 7.084.
      r.checks.push_back({"7.084 m^2 sqrt log(m+1) within the 7.1 leading term",
                          le_check(num("7.084", prec), num("7.1", prec))});
      r.checks.push_back({"Sankilampi A-hat <= family formula",
                          le_check(r.prior->sankilampi_A.value, sa)});
      r.checks.push_back({"Mahler B-hat <= family formula",
                          le_check(r.prior->mahler_B.value, num("12.1", prec) * (m * (m + 1) * (m + 1) * (m + 1)))});
      if (m == 2) headline(r, "lcm(1,2)", Interval(l, prec), "<=", std::exp(1.030883 * 2), 0);
      break;
    }
    case Preset::GaussianDisk: {
      const Interval kappa = sqrt(lit(1, prec) / 2L);
      const auto c = coeff(kappa);
      const Interval ahat = lit(1, prec) + (num("1.596", prec) + num("4.294", prec) * mq) * slm1;
      const Interval ll = log(lit(m2, prec) * (num("20.25", prec) * lm1 + num("9.604", prec))) +
                          (num("40.5", prec) * lm1 + num("19.207", prec)) * m2;
      r.formulas.push_back({"A-hat (family formula)", ahat});
      r.formulas.push_back({"A-hat (recomputed coefficients)", lit(1, prec) + (c.first + c.second * mq) * slm1});
      r.formulas.push_back({"log log H-hat_0 (family formula)", ll});
      const Interval g3 = rep.g.g3_exact.enclose(prec);
      const Interval pi = Interval::pi(prec);
      const Interval lo = pi * square(g3 - kappa);
      const Interval hi = pi * square(g3 + kappa);
      const Interval cnt = lit(r.count, prec);
      r.formulas.push_back({"pi (g3 - 1/sqrt 2)^2", lo});
      r.formulas.push_back({"pi (g3 + 1/sqrt 2)^2", hi});
      r.checks.push_back({"lattice count sandwich", both(le_check(lo, cnt), le_check(cnt, hi))});
      r.checks.push_back({"g2 <= sqrt(m+1)", le_check(rep.g.g2_exact.enclose(prec), sqrt(cnt))});
      r.checks.push_back({"g1 = 1, g4 = 2, g3 = g2 - 1",
                          from_bool(rep.g.g1 == 1 && compare(rep.g.g4_exact, Surd::rational(2)) == 0 &&
                                    compare(rep.g.g3_exact + 1, rep.g.g2_exact) == 0)});
      headline(r, "c1", c.first, "~", 1.596, 0.01);
      headline(r, "c2", c.second, "~", 4.294, 0.01);
      if (r_squared == 2) headline(r, "points", cnt, "~", 9, 0);
      break;
    }
  }
  finish(r);
  return r;
}

// ---------------------------------------------------------------------------
// Observed values of small linear forms

namespace {

std::vector<QuadInt> ring_ball(FieldSpec f, long box) {
  std::vector<QuadInt> out;
  const mpz_class b2 = mpz_class(box) * box;
  if (f.is_rational()) {
    for (long a = -box; a <= box; ++a) out.emplace_back(mpz_class(a), 0, f);
    return out;
  }
  for (long a = -2 * box; a <= 2 * box; ++a) {
    for (long b = -2 * box; b <= 2 * box; ++b) {
      QuadInt z(mpz_class(a), mpz_class(b), f);
      if (z.norm() <= b2) out.push_back(z);
    }
  }
  return out;
}

}  // namespace

EmpiricalTable empirical_check(const AlphaVector& alpha, long box, Precision prec) {
  if (box < 1) throw std::invalid_argument("box must be >= 1");
  EmpiricalTable t;
  t.alpha = alpha;
  t.box = box;
  const std::size_t n = alpha.points.size();
  const std::vector<QuadInt> ball = ring_ball(alpha.field, box);
  double total = std::pow(static_cast<double>(ball.size()), static_cast<double>(n)) - 1;
  if (total > static_cast<double>(kEmpiricalCap)) {
    throw std::invalid_argument("beta box has " + std::to_string(static_cast<long long>(total)) +
                                " candidates (cap " + std::to_string(kEmpiricalCap) + ")");
  }
  t.candidates = static_cast<std::size_t>(total);

  std::map<Precision, std::vector<ComplexInterval>> exps;
  auto exps_at = [&](Precision p) -> const std::vector<ComplexInterval>& {
    auto it = exps.find(p);
    if (it != exps.end()) return it->second;
    std::vector<ComplexInterval> v;
    for (const auto& a : alpha.points) v.push_back(exp_enclosure(a.value(), p));
    return exps.emplace(p, std::move(v)).first->second;
  };

  std::optional<AlphaReport> rep;
  const std::size_t m = alpha.m();
  if (m >= 2) rep = analyze_alpha(alpha, prec);
  std::map<std::vector<mpz_class>, BoundReport> cache;

  std::vector<std::size_t> idx(n, 0);
  const std::size_t zero_pos = [&] {
    for (std::size_t i = 0; i < ball.size(); ++i)
      if (ball[i].is_zero()) return i;
    return std::size_t{0};
  }();

  double best = 0;
  bool any_flagged = false;
  auto advance = [&] {
    std::size_t pos = 0;
    while (pos < n && ++idx[pos] == ball.size()) idx[pos++] = 0;
    return pos < n;
  };
  for (bool more = true; more; more = advance()) {
    bool all_zero = true;
    for (std::size_t i = 0; i < n; ++i) all_zero = all_zero && idx[i] == zero_pos;
    if (all_zero) continue;

    EmpiricalRow row;
    for (std::size_t i = 0; i < n; ++i) row.beta.push_back(ball[idx[i]]);
    for (Precision p = prec; p <= kPrecisionCap; p *= 2) {
      const auto& e = exps_at(p);
      ComplexInterval s(p);
      for (std::size_t i = 0; i < n; ++i) {
        if (!row.beta[i].is_zero()) s = s + ComplexInterval::from(to_field(row.beta[i]), p) * e[i];
      }
      row.value = s;
      row.abs_value = s.abs();
      row.precision = p;
      if (!row.abs_value.contains_zero()) {
        row.nonzero = true;
        break;
      }
    }
    if (!row.nonzero) {
      ++t.flagged;
      any_flagged = true;
    }

    if (rep) {
      std::vector<mpz_class> key;
      for (std::size_t i = 1; i < n; ++i) key.push_back(row.beta[i].norm());
      std::sort(key.begin(), key.end());
      auto it = cache.find(key);
      if (it == cache.end()) {
        Interval log_H(0L, prec);
        const Interval log2m = log(lit(2 * static_cast<long>(m), prec));
        for (const auto& nrm : key) {
          log_H += log2m;
          if (nrm > 1) log_H += log(Interval(nrm, prec)) / 2L;
        }
        it = cache.emplace(key, theorem_bound_from(rep->thm, m, log_H, rep->gh.log_H0)).first;
      }
      row.log_bound = it->second.log_lower_bound;
      row.hypothesis_met = it->second.hypothesis_met;
      if (row.hypothesis_met && row.nonzero) {
        row.violation = certainly_lt(log(row.abs_value), *row.log_bound);
        if (row.violation) ++t.violations;
      }
    }

    const double v = row.abs_value.mid_double();
    if (!t.min_row || v < best) {
      best = v;
      t.min_row = t.rows.size();
    }
    t.rows.push_back(std::move(row));
  }
  t.all_nonzero = any_flagged ? Check::Indeterminate : Check::Holds;
  return t;
}

}  // namespace bakerforge
