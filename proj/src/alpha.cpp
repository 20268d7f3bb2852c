#include "bakerforge/alpha.hpp"

#include <algorithm>

namespace bakerforge {

namespace {

Check combine(Check a, Check b) {
  if (a == Check::Fails || b == Check::Fails) return Check::Fails;
  if (a == Check::Indeterminate || b == Check::Indeterminate) return Check::Indeterminate;
  return Check::Holds;
}

Check le_check(const Interval& a, const Interval& b) {
  if (certainly_le(a, b)) return Check::Holds;
  if (certainly_gt(a, b)) return Check::Fails;
  return Check::Indeterminate;
}

Interval zero(Precision prec) { return Interval(0L, prec); }

}  // namespace

const char* check_name(Check c) {
  switch (c) {
    case Check::Holds: return "holds";
    case Check::Fails: return "fails";
    case Check::Indeterminate: return "indeterminate";
  }
  return "?";
}

AlphaVector AlphaVector::make(FieldSpec field, std::vector<AlphaPoint> points, std::size_t min_m) {
  if (points.size() < min_m + 1) {
    throw std::invalid_argument("need at least " + std::to_string(min_m + 1) +
                                " points (m >= " + std::to_string(min_m) + "), got " +
                                std::to_string(points.size()));
  }
  if (!points.front().x.is_zero()) throw std::invalid_argument("alpha_0 must be 0");
  for (std::size_t j = 0; j < points.size(); ++j) {
    const AlphaPoint& p = points[j];
    if (p.x.field != field) throw FieldError("point field does not match");
    if (!(alpha_normalize(p.x, p.y) == p)) {
      throw std::invalid_argument("alpha_" + std::to_string(j) + " is not in reduced form");
    }
    if (j > 0 && p.x.is_zero()) throw std::invalid_argument("alpha_j must be nonzero for j >= 1");
    for (std::size_t k = 0; k < j; ++k) {
      if (points[k] == p) {
        throw std::invalid_argument("alpha_" + std::to_string(k) + " and alpha_" +
                                    std::to_string(j) + " coincide");
      }
    }
  }
  return AlphaVector{field, std::move(points)};
}

AlphaVector AlphaVector::parse(const std::string& list, FieldSpec field, std::size_t min_m) {
  return make(field, parse_alpha_list(list, field), min_m);
}

AlphaVector AlphaVector::shifted_to_origin(FieldSpec field, const std::vector<FieldElem>& values) {
  if (values.empty()) throw std::invalid_argument("empty vector");
  std::vector<AlphaPoint> pts;
  for (const auto& v : values) pts.push_back(alpha_from_value(v - values.front()));
  return make(field, std::move(pts));
}

std::string AlphaVector::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < points.size(); ++j) {
    if (j) out += ",";
    out += bakerforge::to_string(points[j].value());
  }
  return out;
}

GTuple compute_g_unchecked(const AlphaVector& alpha, Precision prec) {
  GTuple g;
  g.g2_exact = Surd::rational(1);  // alpha_0 = 0/1
  g.g3_exact = Surd::rational(0);
  bool have_g4 = false;
  for (std::size_t j = 0; j < alpha.points.size(); ++j) {
    const AlphaPoint& p = alpha.points[j];
    mpz_lcm(g.g1.get_mpz_t(), g.g1.get_mpz_t(), p.y.get_mpz_t());
    const mpz_class N = p.x.norm();
    const Surd size{mpq_class(p.y), 1, N};
    g.g2_exact = max(g.g2_exact, size);
    g.g3_exact = max(g.g3_exact, Surd::sqrt_of(mpq_class(N) / (p.y * p.y)));
    if (j >= 1) {
      const Surd ratio = Surd::sqrt_of(mpq_class(p.y * p.y) / N) + 1;
      g.g4_exact = have_g4 ? max(g.g4_exact, ratio) : ratio;
      have_g4 = true;
    }
  }
  g.g2 = g.g2_exact.enclose(prec);
  g.g3 = g.g3_exact.enclose(prec);
  g.g4 = g.g4_exact.enclose(prec);

  auto require = [&](bool ok, const char* what) {
    if (!ok) {
      g.chain = Check::Fails;
      g.failures.emplace_back(what);
    }
  };
  const mpq_class g1q(g.g1);
  const Surd one_plus_g3 = g.g3_exact + 1;
  const Surd g1_one_plus_g3 = one_plus_g3 * g1q;
  const Surd cap = max(Surd::rational(1), g.g3_exact) * (2 * g1q);
  require(Surd::rational(2) <= g.g2_exact, "2 <= g2");
  require(g.g4_exact <= g.g2_exact, "g4 <= g2");
  require(one_plus_g3 <= g.g2_exact, "1 + g3 <= g2");
  require(g.g2_exact <= g1_one_plus_g3, "g2 <= g1 (1 + g3)");
  require(g1_one_plus_g3 <= cap, "g1 (1 + g3) <= 2 g1 max{1, g3}");

  // g1 < g2^m is strict (g1 <= prod y_j < g2^m), so enclosures settle it.
  Check power = Check::Indeterminate;
  for (Precision p = prec; p <= kPrecisionCap && power == Check::Indeterminate; p *= 2) {
    power = le_check(Interval(g.g1, p), pow(g.g2_exact.enclose(p), alpha.m()));
  }
  if (power != Check::Holds) {
    g.chain = combine(g.chain, power);
    g.failures.emplace_back(power == Check::Fails ? "g1 <= g2^m" : "g1 <= g2^m undecided");
  }
  return g;
}

GTuple compute_g(const AlphaVector& alpha, Precision prec) {
  GTuple g = compute_g_unchecked(alpha, prec);
  if (g.chain != Check::Holds) {
    std::string msg = "g-invariant chain violated:";
    for (const auto& f : g.failures) msg += " [" + f + "]";
    throw InvariantError(msg);
  }
  return g;
}

BaseConstants compute_base_constants(const GTuple& g, Precision prec) {
  const Interval g2 = g.g2_exact.enclose(prec);
  const Interval g3 = g.g3_exact.enclose(prec);
  const Interval g4 = g.g4_exact.enclose(prec);
  const Interval lg1 = log(Interval(g.g1, prec));
  const Interval lg2 = log(g2);
  const Interval lg4 = log(g4);
  const Interval slg2 = sqrt(lg2);
  const Interval tail = lg4 / (Interval(2L, prec) * slg2);
  const Interval log2 = log(Interval(2L, prec));

  BaseConstants b;
  b.b0 = slg2 + tail;
  b.e0 = Interval(3L, prec) * slg2 + tail;
  b.b1 = max(zero(prec), lg1 - lg2 - lg4);
  b.e1 = max(zero(prec), lg1 + Interval(2L, prec) * log(g3 + 1L) + Interval(2L, prec) * log2 +
                             Interval(1L, prec) - lg2 - lg4);
  return b;
}

ThmConstants compute_theorem_constants(const BaseConstants& b, std::size_t m) {
  const long ml = static_cast<long>(m);
  const Precision prec = b.b0.precision();
  ThmConstants t;
  t.A = b.b0 + b.e0 * ml;
  t.B = Interval(1L, prec) + b.b0 + b.b1 + b.e1 * ml;
  t.C = Interval(ml, prec);
  t.D = b.b0 * ml + b.e0 * (ml * ml);
  t.E = (Interval(1L, prec) + b.b0 + b.b1) * ml + (Interval(2L, prec) * b.e0 + b.e1) * (ml * ml);
  return t;
}

GammaH0 compute_gamma_H0(const BaseConstants& base, std::size_t m, FieldSpec field,
                         Precision prec, H0Mode mode) {
  GammaH0 out;
  out.mode = mode;
  const long ml = static_cast<long>(m);
  const Interval e0 = base.e0.with_precision(prec);
  const Interval log_gamma = square(e0 * (3 * ml));
  // log of e^{(gamma log gamma)/2} is (gamma log gamma)/2 = e^{log gamma} log gamma / 2.
  Interval log_H0 = exp(log_gamma) * log_gamma / 2L;

  if (!field.is_rational()) {
    const SiegelConstants k = SiegelConstants::for_field(field, prec);
    const Interval x = Interval(2L, prec) * log(k.s / k.t);
    if (certainly_positive(x)) {
      log_H0 = max(log_H0, log(x));
      out.siegel_branch = true;
    }
  }

  if (mode == H0Mode::Explicit) {
    out.log_gamma = log_gamma;
    out.log_H0 = log_H0;
    return out;
  }

  // Axiomatic variant: gamma = max{S2, 1}, L0 taken as the explicit threshold.
  const S2Result s2 = solve_S2(base, m);
  const Interval log_gamma_ax = max(zero(prec), s2.log_S2.with_precision(prec));
  Interval cand = max(log(Interval(ml, prec)), log_H0);
  cand = max(cand, exp(log_gamma_ax) * log_gamma_ax / 2L);
  cand = max(cand, Interval::euler(prec) / 2L);
  out.log_gamma = log_gamma_ax;
  out.log_H0 = cand;
  return out;
}

Check verify_e1_inequality(const BaseConstants& base, std::size_t m) {
  const long ml = static_cast<long>(m);
  return le_check(base.e1 * (25 * ml), square(base.e0 * (3 * ml)));
}

Check verify_base_bounds(const GTuple& g, const BaseConstants& base) {
  const Precision prec = base.e0.precision();
  Check e0_check = le_check(Interval(3L, prec) * sqrt(log(Interval(2L, prec))), base.e0);
  // b0 <= 3 e0 / 7 is equivalent to log g4 <= log g2.
  Check b0_check = g.g4_exact <= g.g2_exact ? Check::Holds : Check::Fails;
  if (certainly_gt(base.b0 * 7L, base.e0 * 3L)) b0_check = Check::Fails;
  return combine(e0_check, b0_check);
}

Interval s2_function(const BaseConstants& base, std::size_t m, const Interval& u) {
  const Precision prec = u.precision();
  const long ml = static_cast<long>(m);
  const Interval e0 = base.e0.with_precision(prec);
  const Interval e1 = base.e1.with_precision(prec);
  const Interval su = sqrt(u);
  const Interval S = exp(u);
  Interval sum = e0 * ml / su + e1 * ml / u + e0 * (ml * ml) / (S * su) +
                 (Interval(2L, prec) * e0 + e1) * (ml * ml) / (S * u);
  return sum * 2L;
}

S2Result solve_S2(const BaseConstants& base, std::size_t m, double tol) {
  const Precision prec = std::max<Precision>(base.e0.precision(), 128);
  const Interval one(1L, prec);
  S2Result r;

  Interval lo(1L, prec);
  int guard = 0;
  while (!certainly_gt(s2_function(base, m, lo), one)) {
    lo = lo / 2L;
    if (++guard > 200) throw DomainError("solve_S2: no lower bracket");
  }
  Interval hi = lo * 2L;
  guard = 0;
  while (!certainly_lt(s2_function(base, m, hi), one)) {
    hi = hi * 2L;
    if (++guard > 200) throw DomainError("solve_S2: no upper bracket");
  }
  r.bracketed = true;

  while (r.iterations < 4000) {
    const Interval width = hi - lo;
    if (certainly_le(width, lo * Interval::from_double(tol, prec))) break;
    const Interval mid = Interval::hull(lo, hi).midpoint();
    const Interval fm = s2_function(base, m, mid);
    ++r.iterations;
    if (certainly_gt(fm, one)) {
      lo = mid;
    } else if (certainly_lt(fm, one)) {
      hi = mid;
    } else {
      break;  // resolution limit of the working precision
    }
  }
  r.log_S2 = Interval::hull(lo, hi);
  r.f_at_S2 = s2_function(base, m, r.log_S2);
  r.f_at_double_S2 = s2_function(base, m, r.log_S2 + log(Interval(2L, prec)));
  const Interval log_gamma = square(base.e0.with_precision(prec) * (3 * static_cast<long>(m)));
  r.gamma_dominates = le_check(r.log_S2, log_gamma);
  return r;
}

AlphaReport analyze_alpha(const AlphaVector& alpha, Precision prec) {
  for (Precision p = prec;; p *= 2) {
    AlphaReport rep;
    rep.alpha = alpha;
    rep.g = compute_g(alpha, p);
    rep.base = compute_base_constants(rep.g, p);
    rep.thm = compute_theorem_constants(rep.base, alpha.m());
    rep.gh = compute_gamma_H0(rep.base, alpha.m(), alpha.field, p);
    rep.e1_check = verify_e1_inequality(rep.base, alpha.m());
    rep.base_check = verify_base_bounds(rep.g, rep.base);
    const bool settled =
        rep.e1_check != Check::Indeterminate && rep.base_check != Check::Indeterminate;
    if (settled || p * 2 > kPrecisionCap) return rep;
  }
}

}  // namespace bakerforge
