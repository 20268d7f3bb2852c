#include "bakerforge/forms.hpp"

#include <algorithm>
#include <stdexcept>

namespace bakerforge {

ComplexInterval ComplexInterval::from(const FieldElem& z, Precision prec) {
  return ComplexInterval(real_enclosure(z, prec), imag_enclosure(z, prec));
}

Interval ComplexInterval::abs() const { return sqrt(square(re) + square(im)); }

Interval ComplexInterval::radius() const {
  return sqrt(square(re.radius()) + square(im.radius()));
}

bool ComplexInterval::intersects(const ComplexInterval& o) const {
  return re.intersects(o.re) && im.intersects(o.im);
}

ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) {
  return ComplexInterval(a.re + b.re, a.im + b.im);
}

ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b) {
  return ComplexInterval(a.re - b.re, a.im - b.im);
}

ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
  return ComplexInterval(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}

ComplexInterval exp_enclosure(const FieldElem& a, Precision prec) {
  const Interval modulus = exp(real_enclosure(a, prec));
  const Interval arg = imag_enclosure(a, prec);
  if (a.field.is_rational()) return ComplexInterval(modulus, Interval(0L, prec));
  return ComplexInterval(modulus * cos(arg), modulus * sin(arg));
}

namespace {

mpz_class g1_power(const PadeSystem& sys) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), sys.g.g1.get_mpz_t(), static_cast<unsigned long>(sys.L()));
  return r;
}

mpz_class factorial(long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

// Degenerate interval at the upper endpoint.
Interval upper_point(const Interval& x) {
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), x.hi());
  return Interval(q, x.precision());
}

Check from_bool(bool ok) { return ok ? Check::Holds : Check::Fails; }

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

}  // namespace

ComplexInterval remainder_by_series(const PadeSystem& sys, const DerivedFamily& fam, std::size_t s,
                                    std::size_t j, Precision prec, long* terms) {
  const FieldSpec F = sys.alpha.field;
  const FieldElem alpha = sys.alpha.points[j].value();
  const Poly& A0 = fam.A[s][0];
  const Poly& Aj = fam.A[s][j];
  const mpq_class scale(g1_power(sys));
  const long d0 = A0.degree();
  const long L = sys.L();

  // R(1) = A_j(1) + sum_h a_h sum_{n >= 0} alpha^n/n!; the first T - h terms of
  // each inner sum are summed exactly and the rest bounded.
  const Interval alpha_abs = fe_abs(alpha, prec);
  const Interval eps = Interval(mpq_class(1), prec) / pow(Interval(2L, prec), static_cast<unsigned long>(prec));
  std::vector<FieldElem> e{FieldElem::one(F)};  // alpha^n / n!
  std::vector<FieldElem> E{FieldElem::zero(F)};  // E[K] = sum_{n < K} e_n
  auto extend = [&](std::size_t K) {
    while (E.size() <= K) {
      const std::size_t n = E.size() - 1;
      E.push_back(E.back() + e[n]);
      e.push_back(mpq_class(1, n + 1) * (e[n] * alpha));
    }
  };

  for (long T = std::max(L, d0) + 8;; T *= 2) {
    // tail of sum_{n >= K} x^n/n! <= x^K/K! / (1 - x/(K+1)), K = T - h
    Interval tail(0L, prec);
    bool ok = true;
    for (long h = 0; h <= d0 && ok; ++h) {
      const FieldElem& ah = A0.coeff(static_cast<std::size_t>(h));
      if (ah.is_zero()) continue;
      const long K = T - h;
      const Interval ratio = alpha_abs / Interval(K + 1, prec);
      if (!certainly_lt(ratio, Interval(1L, prec))) {
        ok = false;
        break;
      }
      const Interval head = pow(alpha_abs, static_cast<unsigned long>(K)) / Interval(factorial(K), prec);
      tail += fe_abs(ah, prec) * head / (Interval(1L, prec) - ratio);
    }
    if (!ok) continue;
    tail *= Interval(scale, prec);
    if (!certainly_le(tail, eps) && T < (1L << 16)) continue;

    extend(static_cast<std::size_t>(T));
    FieldElem partial = Aj.eval(FieldElem::one(F));
    for (long h = 0; h <= d0; ++h) {
      const FieldElem& ah = A0.coeff(static_cast<std::size_t>(h));
      if (!ah.is_zero()) partial += ah * E[static_cast<std::size_t>(T - h)];
    }
    partial = scale * partial;
    if (terms) *terms = T;
    ComplexInterval out = ComplexInterval::from(partial, prec);
    const Interval r = tail.with_precision(prec);
    out.re = out.re.inflate(r);
    if (!F.is_rational()) out.im = out.im.inflate(r);
    return out;
  }
}

NumericalForms evaluate_forms(const PadeSystem& sys, const DerivedFamily& fam, Precision prec) {
  const std::size_t m = sys.m();
  const FieldSpec F = sys.alpha.field;
  NumericalForms f;
  f.precision = prec;
  f.selected = fam.selected;
  const mpq_class scale(g1_power(sys));

  f.integral = Check::Holds;
  for (std::size_t k = 0; k <= m; ++k) {
    std::vector<FieldElem> row;
    std::vector<QuadInt> irow;
    for (std::size_t j = 0; j <= m; ++j) {
      const FieldElem b = scale * fam.values[fam.selected[k]][j];
      row.push_back(b);
      if (is_integral(b)) {
        irow.push_back(to_integer(b));
      } else {
        irow.push_back(QuadInt::zero(F));
        f.integral = Check::Fails;
        f.nonintegral.emplace_back(k, j);
      }
    }
    f.B_exact.push_back(std::move(row));
    f.B.push_back(std::move(irow));
  }
  f.det_B = determinant(f.B_exact);
  f.det_nonzero = from_bool(!f.det_B.is_zero());

  std::vector<ComplexInterval> exps;
  for (std::size_t j = 1; j <= m; ++j) exps.push_back(exp_enclosure(sys.alpha.points[j].value(), prec));

  f.routes_agree = Check::Holds;
  for (std::size_t k = 0; k <= m; ++k) {
    std::vector<ComplexInterval> direct, series;
    std::vector<long> nterms;
    const ComplexInterval B0 = ComplexInterval::from(f.B_exact[k][0], prec);
    for (std::size_t j = 1; j <= m; ++j) {
      direct.push_back(B0 * exps[j - 1] + ComplexInterval::from(f.B_exact[k][j], prec));
      long T = 0;
      series.push_back(remainder_by_series(sys, fam, fam.selected[k], j, prec, &T));
      nterms.push_back(T);
      if (!direct.back().intersects(series.back())) f.routes_agree = Check::Fails;
    }
    f.L_direct.push_back(std::move(direct));
    f.L_series.push_back(std::move(series));
    f.series_terms.push_back(std::move(nterms));
  }
  return f;
}

RawBoundReport check_raw_bounds(const PadeSystem& sys, const DerivedFamily& fam,
                                const NumericalForms& forms) {
  const Precision prec = forms.precision;
  const std::size_t m = sys.m();
  const long L = sys.L();
  RawBoundReport rep;
  rep.index_cap = sys.params.index_cap();
  rep.index_ok = Check::Holds;
  rep.max_c = Interval(0L, prec);
  for (const auto& c : sys.c) rep.max_c = max(rep.max_c, qi_abs(c, prec));
  rep.coeff_bound = sys.coeff_bound;

  const Interval g1L(g1_power(sys), prec);
  const Interval Lfact(factorial(L), prec);
  const Interval e = Interval::euler(prec);
  rep.all = Check::Holds;
  for (std::size_t k = 0; k <= m; ++k) {
    RawBoundRow row;
    row.k = k;
    row.s = fam.selected[k];
    if (static_cast<long>(row.s) > rep.index_cap) rep.index_ok = Check::Fails;
    row.B0_abs = ComplexInterval::from(forms.B_exact[k][0], prec).abs();
    row.B0_cap = e * g1L * Lfact * rep.max_c;
    row.ok = le_check(row.B0_abs, row.B0_cap);
    for (std::size_t j = 1; j <= m; ++j) {
      long V = L + sys.params.nu[j - 1] + 1 - static_cast<long>(row.s);
      if (V < 0) {
        V = 0;
        row.V_clamped = true;
      }
      const Interval a = fe_abs(sys.alpha.points[j].value(), prec);
      const Interval onea = Interval(1L, prec) + a;
      const Interval cap = g1L * pow(onea, static_cast<unsigned long>(V)) * exp(onea) * Lfact /
                           Interval(factorial(V), prec) * rep.max_c;
      // Either route's enclosure is a valid upper bound; use the tighter one.
      const Interval direct = forms.L_direct[k][j - 1].abs();
      const Interval series = forms.L_series[k][j - 1].abs();
      const Interval abs_L = certainly_le(series.width(), direct.width()) ? series : direct;
      row.V.push_back(V);
      row.L_abs.push_back(abs_L);
      row.L_cap.push_back(cap);
      row.ok = combine(row.ok, le_check(abs_L, cap));
    }
    rep.all = combine(rep.all, row.ok);
    rep.rows.push_back(std::move(row));
  }
  rep.all = combine(rep.all, rep.index_ok);
  return rep;
}

QRReport check_qr_bounds(const PadeSystem& sys, const NumericalForms& forms,
                         const BaseConstants& base, const Interval& log_gamma) {
  const Precision prec = forms.precision;
  const long L = sys.L();
  QRReport rep;
  const Interval logL = log(Interval(L, prec));
  const Interval sl = sqrt(logL);
  const Interval Li(L, prec);
  rep.q = Li * logL + base.b0.with_precision(prec) * Li * sl + base.b1.with_precision(prec) * Li;
  for (std::size_t j = 0; j < sys.m(); ++j) {
    rep.minus_r.push_back(Interval(-sys.params.l[j], prec) * logL +
                          base.e0.with_precision(prec) * Li * sl + base.e1.with_precision(prec) * Li);
  }
  const Interval lg = log_gamma.with_precision(prec);
  rep.hypothesis_met = certainly_ge(logL, exp(lg) * lg / 2L);
  for (std::size_t k = 0; k < forms.B_exact.size(); ++k) {
    const Interval b = ComplexInterval::from(forms.B_exact[k][0], prec).abs();
    rep.B_within.push_back(b.contains_zero() ? Check::Holds : le_check(log(b), rep.q));
    std::vector<Check> row;
    for (std::size_t j = 0; j < sys.m(); ++j) {
      const Interval a = forms.L_direct[k][j].abs();
      if (a.contains_zero()) {
        row.push_back(certainly_positive(a) ? Check::Holds : Check::Indeterminate);
      } else {
        row.push_back(le_check(log(a), rep.minus_r[j]));
      }
    }
    rep.L_within.push_back(std::move(row));
  }
  return rep;
}

ConvergenceReport residual_convergence(const PadeSystem& sys, const DerivedFamily& fam,
                                       const std::vector<Precision>& precisions) {
  ConvergenceReport rep;
  rep.halves = Check::Holds;
  for (Precision p : precisions) {
    const NumericalForms f = evaluate_forms(sys, fam, p);
    Interval worst(0L, p);
    for (std::size_t k = 0; k < f.L_direct.size(); ++k) {
      for (std::size_t j = 0; j < f.L_direct[k].size(); ++j) {
        worst = max(worst, upper_point((f.L_direct[k][j] - f.L_series[k][j]).abs()));
      }
    }
    if (!rep.residuals.empty()) {
      const Interval& prev = rep.residuals.back();
      if (!certainly_le(worst * 2L, prev)) rep.halves = Check::Fails;
    }
    rep.precisions.push_back(p);
    rep.residuals.push_back(worst);
  }
  return rep;
}

}  // namespace bakerforge
