#include "bakerforge/siegel.hpp"

#include <algorithm>

namespace bakerforge {

LinearSystem LinearSystem::make(FieldSpec field, std::vector<std::vector<QuadInt>> coeffs) {
  LinearSystem sys{field, std::move(coeffs)};
  if (sys.coeffs.empty()) throw std::invalid_argument("linear system has no forms");
  const std::size_t N = sys.coeffs.front().size();
  if (sys.M() >= N) {
    throw std::invalid_argument("need fewer forms than unknowns (M < N), got M=" +
                                std::to_string(sys.M()) + " N=" + std::to_string(N));
  }
  for (const auto& row : sys.coeffs) {
    if (row.size() != N) throw std::invalid_argument("ragged coefficient matrix");
    bool nonzero = false;
    for (const auto& a : row) {
      if (a.field != field) throw FieldError("coefficient field does not match the system");
      nonzero = nonzero || !a.is_zero();
    }
    if (!nonzero) throw std::invalid_argument("all-zero form");
  }
  return sys;
}

std::vector<Interval> LinearSystem::row_sums(Precision prec) const {
  std::vector<Interval> out;
  for (const auto& row : coeffs) {
    Interval s(0L, prec);
    for (const auto& a : row) s += qi_abs(a, prec);
    out.push_back(s);
  }
  return out;
}

SiegelConstants SiegelConstants::for_field(FieldSpec field, Precision prec, bool asymptotic) {
  SiegelConstants k;
  k.asymptotic = asymptotic;
  if (field.is_rational()) {
    k.s = Interval(1L, prec);
    k.t = Interval(1L, prec);
    k.note = "rationals: s = t = 1, no 2c*sqrt(D) branch";
    return k;
  }
  const Interval two(2L, prec);
  const Interval quarter_root_D = root(Interval(field.D, prec), 4);
  const Interval sqrt_pi = sqrt(Interval::pi(prec));
  const bool half = field.residue() == 3;
  if (asymptotic) {
    k.s = (half ? sqrt(two) : two) * quarter_root_D / sqrt_pi;
    k.t = Interval(1L, prec);
  } else {
    k.s = (half ? two : two * sqrt(two)) * quarter_root_D / sqrt_pi;
    k.t = Interval(5L, prec) / (two * sqrt(two));
  }
  k.c = half ? two : two * sqrt(two);
  k.note = half ? "D = 3 mod 4 row: s = 2 D^(1/4)/sqrt(pi), c = 2 (row order assumed)"
                : "D = 1,2 mod 4 row: s = 2 sqrt(2) D^(1/4)/sqrt(pi), c = 2 sqrt(2) (row order assumed)";
  if (asymptotic) k.note += "; asymptotic s with t = 1";
  return k;
}

namespace {

Interval small_branch(FieldSpec field, const SiegelConstants& consts, Precision prec) {
  return Interval(2L, prec) * *consts.c * sqrt(Interval(field.D, prec));
}

}  // namespace

Interval siegel_bound(const LinearSystem& sys, const SiegelConstants& consts, Precision prec) {
  const std::size_t M = sys.M();
  const std::size_t N = sys.N();
  Interval product = pow(consts.t.with_precision(prec), M);
  for (const auto& a : sys.row_sums(prec)) product *= a;
  Interval main = consts.s.with_precision(prec) * root(product, N - M);
  if (sys.field.is_rational() || !consts.c) return main;
  return max(small_branch(sys.field, consts, prec), main);
}

Interval siegel_bound_from_log(FieldSpec field, const SiegelConstants& consts, std::size_t M,
                               std::size_t N, const Interval& log_product) {
  if (M >= N) throw std::invalid_argument("siegel bound needs M < N");
  const Precision prec = log_product.precision();
  Interval exponent = (Interval(static_cast<long>(M), prec) * log(consts.t.with_precision(prec)) +
                       log_product) / Interval(static_cast<long>(N - M), prec);
  Interval main = consts.s.with_precision(prec) * exp(exponent);
  if (field.is_rational() || !consts.c) return main;
  return max(small_branch(field, consts, prec), main);
}

SolveStrategy parse_strategy(const std::string& name) {
  if (name == "exhaustive") return SolveStrategy::Exhaustive;
  if (name == "kernel_reduce" || name == "kernel-reduce") return SolveStrategy::KernelReduce;
  throw std::invalid_argument("unknown strategy: " + name);
}

std::string strategy_name(SolveStrategy s) {
  return s == SolveStrategy::Exhaustive ? "exhaustive" : "kernel_reduce";
}

IntMatrix integer_equations(const LinearSystem& sys) {
  const std::size_t N = sys.N();
  IntMatrix E;
  if (sys.field.is_rational()) {
    for (const auto& row : sys.coeffs) {
      IntVector eq(N);
      for (std::size_t n = 0; n < N; ++n) eq[n] = row[n].a;
      E.push_back(std::move(eq));
    }
    return E;
  }
  const bool half = sys.field.basis() == Basis::HalfInteger;
  const long k = half ? sys.field.half_k() : sys.field.D;
  for (const auto& row : sys.coeffs) {
    // (al + be w)(u + v w): the 1-coordinate and the w-coordinate.
    IntVector re(2 * N), im(2 * N);
    for (std::size_t n = 0; n < N; ++n) {
      const mpz_class& al = row[n].a;
      const mpz_class& be = row[n].b;
      re[2 * n] = al;
      re[2 * n + 1] = -k * be;
      im[2 * n] = be;
      im[2 * n + 1] = half ? mpz_class(al + be) : al;
    }
    E.push_back(std::move(re));
    E.push_back(std::move(im));
  }
  return E;
}

IntMatrix modulus_form(FieldSpec field, std::size_t N, long* scale) {
  if (field.is_rational()) {
    IntMatrix Q(N, IntVector(N, 0));
    for (std::size_t n = 0; n < N; ++n) Q[n][n] = 1;
    if (scale) *scale = 1;
    return Q;
  }
  IntMatrix Q(2 * N, IntVector(2 * N, 0));
  const bool half = field.basis() == Basis::HalfInteger;
  for (std::size_t n = 0; n < N; ++n) {
    const std::size_t u = 2 * n;
    const std::size_t v = u + 1;
    if (half) {
      // 4 (u^2 + uv + k v^2)
      Q[u][u] = 4;
      Q[u][v] = Q[v][u] = 2;
      Q[v][v] = 4 * field.half_k();
    } else {
      Q[u][u] = 1;
      Q[v][v] = field.D;
    }
  }
  if (scale) *scale = half ? 4 : 1;
  return Q;
}

std::vector<QuadInt> normalize_sign(std::vector<QuadInt> z) {
  for (const auto& q : z) {
    if (q.a != 0) {
      if (q.a < 0) break;
      return z;
    }
    if (q.b != 0) {
      if (q.b < 0) break;
      return z;
    }
  }
  for (auto& q : z) q = -q;
  return z;
}

bool tie_break_less(const std::vector<QuadInt>& a, const std::vector<QuadInt>& b) {
  for (std::size_t n = 0; n < a.size() && n < b.size(); ++n) {
    if (a[n].a != b[n].a) return a[n].a < b[n].a;
    if (a[n].b != b[n].b) return a[n].b < b[n].b;
  }
  return a.size() < b.size();
}

namespace {

std::vector<QuadInt> to_quads(const IntVector& v, FieldSpec field, std::size_t N) {
  std::vector<QuadInt> z;
  z.reserve(N);
  for (std::size_t n = 0; n < N; ++n) {
    if (field.is_rational()) {
      z.emplace_back(v[n], mpz_class(0), field);
    } else {
      z.emplace_back(v[2 * n], v[2 * n + 1], field);
    }
  }
  return z;
}

mpz_class max_norm_of(const std::vector<QuadInt>& z) {
  mpz_class best = 0;
  for (const auto& q : z) best = std::max(best, q.norm());
  return best;
}

struct Candidate {
  std::vector<QuadInt> z;
  mpz_class norm = -1;

  bool offer(std::vector<QuadInt> cand) {
    cand = normalize_sign(std::move(cand));
    const mpz_class n = max_norm_of(cand);
    if (norm < 0 || n < norm || (n == norm && tie_break_less(cand, z))) {
      z = std::move(cand);
      norm = n;
      return true;
    }
    return false;
  }
};

// Is sqrt(max_norm) <= bound? Decided at rising precision.
bool within_bound(const mpz_class& max_norm, const LinearSystem& sys,
                  const SiegelConstants& consts, Precision prec, Interval* bound_out) {
  for (Precision p = prec; ; p *= 2) {
    SiegelConstants k = p == prec ? consts : SiegelConstants::for_field(sys.field, p, consts.asymptotic);
    Interval bound = siegel_bound(sys, k, p);
    if (p == prec) *bound_out = bound;
    const Interval lhs(max_norm, p);
    const Interval rhs = square(bound);
    if (certainly_le(lhs, rhs)) return true;
    if (certainly_gt(lhs, rhs)) return false;
    if (p * 2 > kPrecisionCap) return false;
  }
}

}  // namespace

SiegelSolution solve_small_system(const LinearSystem& sys, const SiegelConstants& consts,
                                  SolveStrategy strategy, Precision prec, std::size_t node_cap) {
  const std::size_t N = sys.N();
  const IntMatrix E = integer_equations(sys);
  const std::size_t cols = sys.field.is_rational() ? N : 2 * N;
  IntMatrix kernel = integer_kernel(E, cols);
  if (kernel.empty()) throw std::logic_error("kernel unexpectedly trivial");
  long scale = 1;
  const IntMatrix Q = modulus_form(sys.field, N, &scale);
  lll_reduce(kernel, Q);

  Candidate best;
  for (const auto& v : kernel) best.offer(to_quads(v, sys.field, N));

  SiegelSolution sol;
  sol.strategy_used = strategy;
  bool met = within_bound(best.norm, sys, consts, prec, &sol.bound);

  if (strategy == SolveStrategy::Exhaustive || !met) {
    sol.strategy_used = SolveStrategy::Exhaustive;
    const mpz_class Nz(static_cast<unsigned long>(N));
    auto stats = enumerate_ellipsoid(
        kernel, Q, scale * Nz * best.norm,
        [&](const IntVector& v) -> std::optional<mpz_class> {
          if (best.offer(to_quads(v, sys.field, N))) return scale * Nz * best.norm;
          return std::nullopt;
        },
        node_cap);
    sol.nodes = stats.nodes;
    sol.optimal = stats.complete;
    met = within_bound(best.norm, sys, consts, prec, &sol.bound);
  }

  sol.z = best.z;
  sol.max_norm = best.norm;
  sol.max_modulus = sqrt(Interval(best.norm, prec));
  sol.bound_met = met;
  return sol;
}

bool verify_solution(const LinearSystem& sys, const std::vector<QuadInt>& z) {
  if (z.size() != sys.N()) return false;
  if (std::all_of(z.begin(), z.end(), [](const QuadInt& q) { return q.is_zero(); })) return false;
  for (const auto& row : sys.coeffs) {
    QuadInt acc = QuadInt::zero(sys.field);
    for (std::size_t n = 0; n < z.size(); ++n) {
      if (z[n].field != sys.field) return false;
      acc += row[n] * z[n];
    }
    if (!acc.is_zero()) return false;
  }
  return true;
}

}  // namespace bakerforge
