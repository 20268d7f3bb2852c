#include "bakerforge/nested_log.hpp"

#include <stdexcept>

namespace bakerforge {

void ZQuery::validate() const {
  if (certainly_lt(y, Interval::euler(y.precision()))) {
    throw std::invalid_argument("z(y) needs y >= e, got " + y.to_string());
  }
  if (!(tol > 0 && tol < 1)) throw std::invalid_argument("tolerance must lie in (0, 1)");
  if (max_iter < 1) throw std::invalid_argument("max_iter must be positive");
}

namespace {

Interval endpoint(mpfr_srcptr x, Precision prec) {
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), x);
  return Interval(q, prec);
}

Interval g_of(const Interval& z, const Interval& y) { return z * log(z) - y; }

struct PointRoot {
  Interval lo, hi;  // g(lo) < 0 < g(hi) certified, or the bracket could not shrink further
  bool converged = false;
  int iterations = 0;
};

// Root of z log z = y0 for a point y0 >= e (approximately).
PointRoot point_root(const Interval& y0, double tol, int max_iter) {
  const Precision prec = y0.precision();
  const Interval zero(0L, prec);
  const Interval e = Interval::euler(prec);
  const Interval ye = max(y0, e);
  const Interval z1 = ye / log(ye);
  const Interval z2 = ye / log(z1);
  // Point endpoints of the iterate bracket; fall back to [1, y + e] if the signs disagree.
  PointRoot r;
  r.lo = endpoint(min(z1, z2).lo(), prec);
  r.hi = endpoint(max(z1, z2).hi(), prec);
  if (!certainly_lt(g_of(r.lo, y0), zero)) r.lo = Interval(1L, prec);
  if (!certainly_gt(g_of(r.hi, y0), zero)) r.hi = y0 + e;

  while (r.iterations < max_iter) {
    const Interval width = r.hi - r.lo;
    if (certainly_le(width, r.lo * Interval::from_double(tol, prec))) {
      r.converged = true;
      return r;
    }
    const Interval mid = Interval::hull(r.lo, r.hi).midpoint();
    const Interval gm = g_of(mid, y0);
    ++r.iterations;
    if (certainly_lt(gm, zero)) {
      r.lo = mid;
    } else if (certainly_gt(gm, zero)) {
      r.hi = mid;
    } else {
      r.converged = true;  // mid is within rounding of the root
      return r;
    }
  }
  return r;
}

}  // namespace

ZResult z_inverse(const ZQuery& q) {
  q.validate();
  const Precision prec = q.y.precision();
  ZResult out;
  const PointRoot low = point_root(endpoint(q.y.lo(), prec), q.tol, q.max_iter);
  if (q.y.is_point()) {
    out.z = Interval::hull(low.lo, low.hi);
    out.converged = low.converged;
    out.iterations = low.iterations;
    return out;
  }
  const PointRoot high = point_root(endpoint(q.y.hi(), prec), q.tol, q.max_iter);
  out.z = Interval::hull(low.lo, high.hi);
  out.converged = low.converged && high.converged;
  out.iterations = low.iterations + high.iterations;
  return out;
}

std::vector<Interval> z_iterates(const Interval& y, std::size_t n) {
  std::vector<Interval> z{y};
  for (std::size_t k = 1; k <= n; ++k) z.push_back(y / log(z.back()));
  return z;
}

Interval z_two(const Interval& y) { return y / log(y / log(y)); }

XiResult xi_epsilon(const ThmConstants& k, const Interval& f, const Interval& log_H) {
  const Precision prec = log_H.precision();
  const Interval y = f * log_H;
  if (certainly_lt(y, Interval::euler(prec))) {
    throw std::invalid_argument("xi_epsilon needs f log H > e");
  }
  const ZResult zr = z_inverse(ZQuery{y});
  XiResult r;
  r.z = zr.z;
  r.converged = zr.converged;
  const Interval log_z = log(zr.z);
  const Interval loglog_H = log(log_H);
  const Interval z_over = exp(log_z - loglog_H);  // z / log H
  r.terms[0] = k.A.with_precision(prec) * sqrt(f * z_over);
  r.terms[1] = k.B.with_precision(prec) * z_over;
  r.terms[2] = k.C.with_precision(prec) * exp(log(log_z) - loglog_H);
  r.terms[3] = k.D.with_precision(prec) * exp(log(sqrt(log_z)) - loglog_H);
  r.epsilon = r.terms[0] + r.terms[1] + r.terms[2] + r.terms[3];
  return r;
}

Interval rho(Precision prec) { return Interval(mpq_class(128, 125), prec); }
Interval two_rho(Precision prec) { return Interval(mpq_class(256, 125), prec); }

namespace {

Check lt_check(const Interval& a, const Interval& b) {
  if (certainly_lt(a, b)) return Check::Holds;
  if (certainly_ge(a, b)) return Check::Fails;
  return Check::Indeterminate;
}

}  // namespace

EpsilonChain epsilon_upper_chain(const Interval& log_H, const std::optional<Interval>& log_gamma,
                                 const std::optional<Interval>& log_H0) {
  const Precision prec = log_H.precision();
  EpsilonChain c;
  const Interval y = log_H * 2L;
  c.z = z_inverse(ZQuery{y}).z;
  c.z2 = z_two(y);
  const Interval loglog_H = log(log_H);
  c.weak = two_rho(prec) * log_H / loglog_H;
  c.z_below_z2 = lt_check(c.z, c.z2);
  c.hypothesis_met = log_H0 && certainly_ge(log_H, *log_H0);

  if (log_gamma) {
    // log(gamma log gamma) = log gamma + log log gamma
    const Interval lg = log_gamma->with_precision(prec);
    const Interval Lg = lg + log(lg);
    c.middle = Interval(2L, prec) * Lg / (Lg - log(Lg)) *
               (Interval(1L, prec) - log(Interval(2L, prec)) / log(y)) * log_H / loglog_H;
  }
  if (c.hypothesis_met) {
    c.z2_below_weak = lt_check(c.z2, c.weak);
    if (c.middle) {
      c.z2_below_middle = certainly_le(c.z2, *c.middle) ? Check::Holds
                          : certainly_gt(c.z2, *c.middle) ? Check::Fails
                                                          : Check::Indeterminate;
      c.middle_below_weak = lt_check(*c.middle, c.weak);
    }
  }
  return c;
}

}  // namespace bakerforge
