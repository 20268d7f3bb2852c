#include "bakerforge/pade.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bakerforge {

long PadeParams::L() const {
  long s = 0;
  for (long v : l) s += v;
  return s;
}

long PadeParams::M() const {
  long s = 0;
  for (long v : nu) s += v;
  return s;
}

long PadeParams::index_cap() const {
  const long mm = static_cast<long>(m());
  return L() - M() + mm * (mm + 1) / 2;
}

PadeParams PadeParams::make(std::vector<long> l, std::vector<long> nu) {
  if (l.size() < 2) throw std::invalid_argument("need m >= 2 block lengths l_j");
  if (nu.size() != l.size()) throw std::invalid_argument("nu and l must have the same length");
  for (std::size_t j = 0; j < l.size(); ++j) {
    if (l[j] < 1) throw std::invalid_argument("l_j must be positive");
    if (nu[j] < 1 || nu[j] > l[j]) throw std::invalid_argument("need 1 <= nu_j <= l_j");
  }
  PadeParams p{std::move(l), std::move(nu)};
  if (p.M() > p.L()) throw std::invalid_argument("need M <= L");
  return p;
}

namespace {

Check combine(Check a, Check b) {
  if (a == Check::Fails || b == Check::Fails) return Check::Fails;
  if (a == Check::Indeterminate || b == Check::Indeterminate) return Check::Indeterminate;
  return Check::Holds;
}

Check from_bool(bool ok) { return ok ? Check::Holds : Check::Fails; }

Check cmp_le(const mpq_class& a, const mpq_class& b) { return from_bool(a <= b); }
Check cmp_lt(const mpq_class& a, const mpq_class& b) { return from_bool(a < b); }
Check cmp_le(const Interval& a, const Interval& b) {
  if (certainly_le(a, b)) return Check::Holds;
  if (certainly_gt(a, b)) return Check::Fails;
  return Check::Indeterminate;
}
Check cmp_lt(const Interval& a, const Interval& b) {
  if (certainly_lt(a, b)) return Check::Holds;
  if (certainly_ge(a, b)) return Check::Fails;
  return Check::Indeterminate;
}

// The three side inequalities, written in S = sqrt(log g2 / log L).
template <class T, class K>
void nu_checks(NuChoice& out, const T& S, long L, long M, long m, K k) {
  const T Ltheta = k(L) * (k(1) - S);
  out.lmml = combine(cmp_lt(Ltheta - k(m), k(M)), cmp_le(k(M), Ltheta));
  if (M >= L) {
    out.frac_mlm = out.frac_m2lm = Check::Fails;
    return;
  }
  out.frac_mlm = cmp_le(k(M) / k(L - M), k(1) / S - k(1));
  out.frac_m2lm = cmp_le(k(M * M) / k(2 * (L - M)), k(L) / (k(2) * S) - k(L) + k(L) * S / k(2));
}

// sqrt(log G / log L) when it is rational, i.e. G^(q^2) = L^(p^2) for small p/q.
std::optional<mpq_class> rational_ratio_root(const Surd& g2, long L) {
  // An irrational g2 = r + s sqrt(n) has no rational power.
  if (g2.s != 0 && !mpz_perfect_square_p(g2.n.get_mpz_t())) return std::nullopt;
  mpq_class gq = g2.r;
  if (g2.s != 0) {
    mpz_class rt;
    mpz_sqrt(rt.get_mpz_t(), g2.n.get_mpz_t());
    gq += g2.s * rt;
  }
  if (gq.get_den() != 1) return std::nullopt;
  const mpz_class G = gq.get_num();
  const double approx = std::sqrt(std::log(G.get_d()) / std::log(static_cast<double>(L)));
  for (unsigned long q = 1; q <= 64; ++q) {
    const long p = std::lround(approx * static_cast<double>(q));
    if (p <= 0) continue;
    mpz_class lhs, rhs;
    mpz_pow_ui(lhs.get_mpz_t(), G.get_mpz_t(), q * q);
    mpz_ui_pow_ui(rhs.get_mpz_t(), static_cast<unsigned long>(L), static_cast<unsigned long>(p * p));
    if (lhs == rhs) return mpq_class(p, q);
  }
  return std::nullopt;
}

mpz_class floor_of(mpfr_srcptr x) {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), x, MPFR_RNDD);
  return z;
}

}  // namespace

NuChoice choose_nu(const std::vector<long>& l, const Surd& g2, Precision prec) {
  long L = 0;
  for (long v : l) L += v;
  if (!(g2 <= Surd::rational(L))) {
    throw std::invalid_argument("choose_nu needs g2 <= L (g2 = " + g2.to_string() +
                                ", L = " + std::to_string(L) + ")");
  }
  const long m = static_cast<long>(l.size());
  NuChoice out;
  auto finish = [&](std::vector<mpz_class> floors) {
    for (const auto& f : floors) {
      long v = f.get_si();
      if (v < 1) {
        v = 1;
        out.clamped = true;
      }
      out.nu.push_back(v);
    }
  };

  if (const auto S = rational_ratio_root(g2, L)) {
    const mpq_class theta = 1 - *S;
    out.theta = Interval(theta, prec);
    std::vector<mpz_class> floors;
    for (long lj : l) {
      const mpq_class v = lj * theta;
      mpz_class f;
      mpz_fdiv_q(f.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
      floors.push_back(f);
    }
    finish(floors);
    long M = 0;
    for (long v : out.nu) M += v;
    nu_checks(out, *S, L, M, m, [](long v) { return mpq_class(v); });
    return out;
  }

  for (Precision p = prec;; p *= 2) {
    const Interval S = sqrt(log(g2.enclose(p)) / log(Interval(L, p)));
    const Interval theta = Interval(1L, p) - S;
    std::vector<mpz_class> floors;
    bool resolved = true;
    for (long lj : l) {
      const Interval v = theta * lj;
      const mpz_class lo = floor_of(v.lo()), hi = floor_of(v.hi());
      if (lo != hi) resolved = false;
      floors.push_back(lo);
    }
    if (!resolved) {
      if (p * 2 > kPrecisionCap) throw std::runtime_error("choose_nu: floor undecided at precision cap");
      continue;
    }
    out = NuChoice();
    out.theta = theta.with_precision(prec);
    finish(floors);
    long M = 0;
    for (long v : out.nu) M += v;
    nu_checks(out, S, L, M, m, [p](long v) { return Interval(v, p); });
    const bool settled = out.lmml != Check::Indeterminate &&
                         out.frac_mlm != Check::Indeterminate &&
                         out.frac_m2lm != Check::Indeterminate;
    if (settled || p * 2 > kPrecisionCap) return out;
  }
}

DefaultParams default_params(const AlphaVector& alpha, const std::vector<long>& l, Precision prec) {
  if (l.size() != alpha.m()) {
    throw std::invalid_argument("need one l_j per nonzero alpha_j (" + std::to_string(alpha.m()) + ")");
  }
  const GTuple g = compute_g(alpha, prec);
  long L = 0;
  for (long v : l) L += v;
  DefaultParams d;
  if (g.g2_exact <= Surd::rational(L)) {
    d.choice = choose_nu(l, g.g2_exact, prec);
    d.params = PadeParams::make(l, d.choice->nu);
  } else {
    d.fallback = true;
    d.params = PadeParams::make(l, std::vector<long>(l.size(), 1));
  }
  return d;
}

namespace {

QuadInt qi_pow(const QuadInt& x, long e) {
  QuadInt r = QuadInt::one(x.field);
  for (long i = 0; i < e; ++i) r = r * x;
  return r;
}

mpz_class binom(long n, long k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b;
}

mpz_class factorial(long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

}  // namespace

LinearSystem build_coefficient_system(const AlphaVector& alpha, const PadeParams& params) {
  if (params.m() != alpha.m()) throw std::invalid_argument("params and alpha disagree on m");
  const long L = params.L();
  std::vector<std::vector<QuadInt>> rows;
  for (std::size_t j = 1; j <= alpha.m(); ++j) {
    const AlphaPoint& p = alpha.points[j];
    // x^(L-h) y^h for h = 0..L
    std::vector<QuadInt> xy(static_cast<std::size_t>(L + 1));
    for (long h = 0; h <= L; ++h) {
      mpz_class yh;
      mpz_pow_ui(yh.get_mpz_t(), p.y.get_mpz_t(), static_cast<unsigned long>(h));
      xy[static_cast<std::size_t>(h)] = yh * qi_pow(p.x, L - h);
    }
    for (long i = 1; i <= params.nu[j - 1]; ++i) {
      std::vector<QuadInt> row;
      for (long h = 0; h <= L; ++h) row.push_back(binom(L + i, h) * xy[static_cast<std::size_t>(h)]);
      rows.push_back(std::move(row));
    }
  }
  return LinearSystem::make(alpha.field, std::move(rows));
}

RowSumCheck check_row_sums(const AlphaVector& alpha, const PadeParams& params,
                           const LinearSystem& sys, Precision prec) {
  RowSumCheck r;
  r.row_sums = sys.row_sums(prec);
  const long L = params.L();
  const long M = params.M();
  r.rows = Check::Holds;
  r.log_product = Interval(0L, prec);
  std::size_t row = 0;
  for (std::size_t j = 1; j <= alpha.m(); ++j) {
    const AlphaPoint& p = alpha.points[j];
    const Interval ax = qi_abs(p.x, prec);
    const Interval y(p.y, prec);
    for (long i = 1; i <= params.nu[j - 1]; ++i, ++row) {
      const Interval cap = pow(ax + y, static_cast<unsigned long>(L)) *
                           pow(Interval(1L, prec) + y / ax, static_cast<unsigned long>(i));
      r.row_caps.push_back(cap);
      r.rows = combine(r.rows, cmp_lt(r.row_sums[row], cap));
      r.log_product += log(r.row_sums[row]);
    }
  }
  const GTuple g = compute_g_unchecked(alpha, prec);
  r.log_cap = Interval(M * L, prec) * log(g.g2) + Interval(mpq_class(M * M) / 2, prec) * log(g.g4);
  r.product = cmp_le(r.log_product, r.log_cap);
  return r;
}

Poly remainder_series(const Poly& A_k0, const Poly& A_kj, const FieldElem& alpha, std::size_t order) {
  return A_k0.mul_truncated(Poly::exp_series(alpha, order), order) + A_kj;
}

PadeSystem construct_pade(const AlphaVector& alpha, const PadeParams& params, SolveStrategy strategy,
                          Precision prec) {
  if (params.m() != alpha.m()) throw std::invalid_argument("params and alpha disagree on m");
  const FieldSpec F = alpha.field;
  const long L = params.L();
  const long M = params.M();
  const std::size_t m = alpha.m();

  PadeSystem sys;
  sys.alpha = alpha;
  sys.params = params;
  sys.g = compute_g(alpha, prec);

  const LinearSystem lin = build_coefficient_system(alpha, params);
  const SiegelConstants consts = SiegelConstants::for_field(F, prec);
  sys.solution = solve_small_system(lin, consts, strategy, prec);
  if (!verify_solution(lin, sys.solution.z)) {
    throw std::logic_error("Siegel solver returned a non-solution");
  }
  sys.c = sys.solution.z;

  // Coefficient bound from g2^(ML) g4^(M^2/2), decided at rising precision.
  for (Precision p = prec;; p *= 2) {
    const Interval logprod = Interval(M * L, p) * log(sys.g.g2_exact.enclose(p)) +
                             Interval(mpq_class(M * M) / 2, p) * log(sys.g.g4_exact.enclose(p));
    const SiegelConstants k = SiegelConstants::for_field(F, p);
    const Interval bound = siegel_bound_from_log(F, k, static_cast<std::size_t>(M),
                                                 static_cast<std::size_t>(L + 1), logprod);
    if (p == prec) sys.coeff_bound = bound;
    const Check c = cmp_le(Interval(sys.solution.max_norm, p), square(bound));
    if (c != Check::Indeterminate || p * 2 > kPrecisionCap) {
      sys.bound_met = c == Check::Holds;
      break;
    }
  }

  // A_{0,0}(t) = sum c_h L!/h! t^h
  const mpz_class Lfact = factorial(L);
  std::vector<FieldElem> a00;
  for (long h = 0; h <= L; ++h) {
    const QuadInt& ch = sys.c[static_cast<std::size_t>(h)];
    a00.push_back(mpq_class(Lfact / factorial(h)) * to_field(ch));
  }
  sys.A0.push_back(Poly(F, std::move(a00)));
  const Poly A00 = sys.A0.front();

  long max_nu = 0;
  for (long v : params.nu) max_nu = std::max(max_nu, v);
  sys.horizon = static_cast<std::size_t>(L + max_nu + 1 + params.index_cap() + 1);
  sys.order.assign(m + 1, 0);

  mpz_class g1L;
  mpz_pow_ui(g1L.get_mpz_t(), sys.g.g1.get_mpz_t(), static_cast<unsigned long>(L));
  sys.order_ok = sys.integral_ok = sys.nonzero_ok = sys.truncation_ok = Check::Holds;
  if (A00.is_zero()) sys.nonzero_ok = Check::Fails;

  for (std::size_t j = 1; j <= m; ++j) {
    const FieldElem a = alpha.points[j].value();
    const Poly Aj = -(A00.mul_truncated(Poly::exp_series(a, static_cast<std::size_t>(L + 1)),
                                        static_cast<std::size_t>(L + 1)));
    sys.A0.push_back(Aj);
    if (Aj.is_zero()) sys.nonzero_ok = Check::Fails;

    // Independent route: r_{N,j} = sum_{h+n=N} c_h L!/h! alpha^n/n!.
    for (long N = 0; N <= L; ++N) {
      FieldElem r = FieldElem::zero(F);
      for (long h = 0; h <= N; ++h) {
        FieldElem an = FieldElem::one(F);
        for (long i = 0; i < N - h; ++i) an = an * a;
        r += mpq_class(Lfact) / (factorial(h) * factorial(N - h)) *
             (to_field(sys.c[static_cast<std::size_t>(h)]) * an);
      }
      if (Aj.coeff(static_cast<std::size_t>(N)) != -r) sys.truncation_ok = Check::Fails;
    }

    for (const auto& coef : Aj.coeffs()) {
      if (!is_integral(mpq_class(g1L) * coef)) sys.integral_ok = Check::Fails;
    }

    const Poly R = remainder_series(A00, Aj, a, sys.horizon);
    sys.order[j] = R.order();
    if (sys.order[j] >= 0 && sys.order[j] < L + params.nu[j - 1] + 1) sys.order_ok = Check::Fails;
  }
  return sys;
}

std::vector<std::size_t> select_indices(const std::vector<std::vector<FieldElem>>& values,
                                        std::size_t m, long cap) {
  std::vector<std::size_t> chosen;
  std::vector<std::vector<FieldElem>> rows;
  for (std::size_t k = 0; k < values.size() && static_cast<long>(k) <= cap; ++k) {
    rows.push_back(values[k]);
    if (rank(rows) == rows.size()) {
      chosen.push_back(k);
      if (chosen.size() == m + 1) return chosen;
    } else {
      rows.pop_back();
    }
  }
  throw std::runtime_error("no nonsingular selection of " + std::to_string(m + 1) +
                           " rows among indices 0.." + std::to_string(cap));
}

DerivedFamily derive_family(const PadeSystem& sys, std::optional<long> k_max) {
  const std::size_t m = sys.m();
  DerivedFamily fam;
  fam.k_max = k_max.value_or(sys.params.index_cap());
  if (fam.k_max < static_cast<long>(m)) throw std::invalid_argument("k_max must be at least m");

  std::vector<FieldElem> alphas;
  for (const auto& p : sys.alpha.points) alphas.push_back(p.value());

  fam.A.push_back(sys.A0);
  for (long k = 0; k < fam.k_max; ++k) {
    std::vector<Poly> next;
    for (std::size_t j = 0; j <= m; ++j) {
      const Poly& P = fam.A.back()[j];
      next.push_back(P.derivative() - alphas[j] * P);
    }
    fam.A.push_back(std::move(next));
  }

  fam.ineq_ok = Check::Holds;
  auto fail = [&](const std::string& what) {
    fam.ineq_ok = Check::Fails;
    fam.failures.push_back(what);
  };
  const long d00 = sys.A0[0].degree();
  const FieldElem one = FieldElem::one(sys.alpha.field);
  for (long k = 0; k <= fam.k_max; ++k) {
    const auto& row = fam.A[static_cast<std::size_t>(k)];
    const std::string at = " at k=" + std::to_string(k);
    if (k <= d00 && row[0].degree() != d00 - k) fail("deg A_{k,0}" + at);
    if (k > d00 && !row[0].is_zero()) fail("A_{k,0} should vanish" + at);
    for (std::size_t j = 1; j <= m; ++j) {
      if (row[j].degree() != sys.A0[j].degree()) fail("deg A_{k," + std::to_string(j) + "}" + at);
      const long ord0 = sys.order[j];
      if (ord0 >= 0 && ord0 < k) continue;  // bookkeeping only defined while ord R_{0,j} >= k
      const Poly R = remainder_series(row[0], row[j], alphas[j], sys.horizon - static_cast<std::size_t>(k));
      const long ord = R.order();
      const bool ok = ord0 < 0 ? ord < 0 : ord == ord0 - k;
      if (!ok) fail("ord R_{k," + std::to_string(j) + "}" + at);
    }
    std::vector<FieldElem> vals;
    for (const auto& P : row) vals.push_back(P.eval(one));
    fam.values.push_back(std::move(vals));
  }

  fam.selected = select_indices(fam.values, m, sys.params.index_cap());
  fam.b = static_cast<long>(*std::max_element(fam.selected.begin(), fam.selected.end())) -
          static_cast<long>(m);
  return fam;
}

FieldElem vandermonde_factor(const AlphaVector& alpha) {
  const std::size_t m = alpha.m();
  std::vector<std::vector<FieldElem>> V(m, std::vector<FieldElem>(m));
  for (std::size_t j = 1; j <= m; ++j) {
    FieldElem pw = FieldElem::one(alpha.field);
    const FieldElem a = alpha.points[j].value();
    for (std::size_t k = 1; k <= m; ++k) {
      pw = pw * a;
      V[k - 1][j - 1] = pw;
    }
  }
  return determinant(V);
}

DeterminantCheck family_determinant(const PadeSystem& sys, const DerivedFamily& fam) {
  const long m = static_cast<long>(sys.m());
  const long L = sys.L();
  const long M = sys.M();
  DeterminantCheck d;
  std::vector<std::vector<Poly>> mat(fam.A.begin(), fam.A.begin() + m + 1);
  d.delta = determinant(mat);
  d.order = d.delta.order();
  d.degree = d.delta.degree();
  d.order_floor = m * L + M - m * (m - 1) / 2;
  d.h_degree_cap = L - M + m * (m - 1) / 2;
  const bool factor = !d.delta.is_zero() && d.order >= d.order_floor &&
                      d.degree - d.order_floor <= d.h_degree_cap && d.degree <= (m + 1) * L;
  d.factor_ok = from_bool(factor);
  if (factor) d.delta.shifted_down(static_cast<std::size_t>(d.order_floor));  // exact division

  FieldElem lead = vandermonde_factor(sys.alpha);
  long expected_degree = 0;
  for (const auto& P : sys.A0) {
    if (P.is_zero()) {
      d.leading_ok = Check::Fails;
      return d;
    }
    lead = lead * P.leading();
    expected_degree += P.degree();
  }
  if ((m * (m + 1) / 2) % 2) lead = -lead;
  d.predicted_leading = lead;
  d.leading_ok = from_bool(!d.delta.is_zero() && d.degree == expected_degree && d.delta.leading() == lead);
  return d;
}

}  // namespace bakerforge
