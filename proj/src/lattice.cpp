#include "bakerforge/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bakerforge {

IntMatrix integer_kernel(const IntMatrix& E, std::size_t cols) {
  const std::size_t rows = E.size();
  // W = [E^T | I]; unimodular row operations keep the right block a basis change.
  IntMatrix W(cols, IntVector(rows + cols, 0));
  for (std::size_t i = 0; i < cols; ++i) {
    for (std::size_t r = 0; r < rows; ++r) {
      if (E[r].size() != cols) throw std::invalid_argument("ragged matrix");
      W[i][r] = E[r][i];
    }
    W[i][rows + i] = 1;
  }

  std::size_t pivot = 0;
  for (std::size_t c = 0; c < rows && pivot < cols; ++c) {
    while (true) {
      std::size_t best = cols;
      for (std::size_t i = pivot; i < cols; ++i) {
        if (W[i][c] != 0 && (best == cols || abs(W[i][c]) < abs(W[best][c]))) best = i;
      }
      if (best == cols) break;
      std::swap(W[pivot], W[best]);
      bool cleared = true;
      for (std::size_t i = pivot + 1; i < cols; ++i) {
        if (W[i][c] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), W[i][c].get_mpz_t(), W[pivot][c].get_mpz_t());
        for (std::size_t k = c; k < rows + cols; ++k) W[i][k] -= q * W[pivot][k];
        if (W[i][c] != 0) cleared = false;
      }
      if (cleared) {
        ++pivot;
        break;
      }
    }
  }

  IntMatrix kernel;
  for (std::size_t i = pivot; i < cols; ++i) {
    kernel.emplace_back(W[i].begin() + static_cast<std::ptrdiff_t>(rows), W[i].end());
  }
  return kernel;
}

mpz_class form_product(const IntMatrix& Q, const IntVector& x, const IntVector& y) {
  mpz_class total = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    mpz_class row = 0;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (Q[i][j] != 0 && y[j] != 0) row += Q[i][j] * y[j];
    }
    total += x[i] * row;
  }
  return total;
}

// Integral LLL in the style of Cohen, Algorithm 2.6.7: d[i] are the Gram
// determinants and lambda[k][j] = d[j] * mu[k][j], all integers.
void lll_reduce(IntMatrix& b, const IntMatrix& Q, long delta_num, long delta_den) {
  const std::size_t n = b.size();
  if (n <= 1) return;
  std::vector<mpz_class> d(n + 1, 0);
  IntMatrix lambda(n, IntVector(n, 0));
  d[0] = 1;
  d[1] = form_product(Q, b[0], b[0]);
  if (d[1] == 0) throw std::invalid_argument("lll_reduce: zero vector");

  auto redi = [&](std::size_t k, std::size_t l) {  // 1-based indices
    mpz_class& lam = lambda[k - 1][l - 1];
    if (2 * abs(lam) <= d[l]) return;
    // q = round(lam / d_l)
    mpz_class q;
    mpz_class num = 2 * lam + d[l];
    mpz_class den = 2 * d[l];
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    for (std::size_t t = 0; t < b[k - 1].size(); ++t) b[k - 1][t] -= q * b[l - 1][t];
    lam -= q * d[l];
    for (std::size_t i = 1; i < l; ++i) lambda[k - 1][i - 1] -= q * lambda[l - 1][i - 1];
  };

  std::size_t kmax = 1;
  auto swapi = [&](std::size_t k) {
    std::swap(b[k - 1], b[k - 2]);
    for (std::size_t j = 1; j + 2 <= k; ++j) std::swap(lambda[k - 1][j - 1], lambda[k - 2][j - 1]);
    const mpz_class lam = lambda[k - 1][k - 2];
    const mpz_class B = (d[k - 2] * d[k] + lam * lam) / d[k - 1];
    for (std::size_t i = k + 1; i <= kmax; ++i) {
      const mpz_class t = lambda[i - 1][k - 1];
      lambda[i - 1][k - 1] = (d[k] * lambda[i - 1][k - 2] - lam * t) / d[k - 1];
      lambda[i - 1][k - 2] = (B * t + lam * lambda[i - 1][k - 1]) / d[k];
    }
    d[k - 1] = B;
  };

  std::size_t k = 2;
  while (k <= n) {
    if (k > kmax) {
      kmax = k;
      for (std::size_t j = 1; j <= k; ++j) {
        mpz_class u = form_product(Q, b[k - 1], b[j - 1]);
        for (std::size_t i = 1; i < j; ++i) {
          u = (d[i] * u - lambda[k - 1][i - 1] * lambda[j - 1][i - 1]) / d[i - 1];
        }
        if (j < k) {
          lambda[k - 1][j - 1] = u;
        } else {
          d[k] = u;
          if (u == 0) throw std::invalid_argument("lll_reduce: dependent vectors");
        }
      }
    }
    redi(k, k - 1);
    const mpz_class lam = lambda[k - 1][k - 2];
    if (delta_den * d[k] * d[k - 2] < delta_num * d[k - 1] * d[k - 1] - delta_den * lam * lam) {
      swapi(k);
      k = std::max<std::size_t>(2, k - 1);
    } else {
      for (std::size_t l = k - 1; l-- > 1;) redi(k, l);
      ++k;
    }
  }
}

namespace {

long double to_ld(const mpq_class& q) {
  // Ratio of doubles loses range for huge values; the GSO data here stays moderate.
  return static_cast<long double>(q.get_d());
}

struct Enumerator {
  const IntMatrix& basis;
  const IntMatrix& Q;
  const std::function<std::optional<mpz_class>(const IntVector&)>& visit;
  std::size_t node_cap;

  Enumerator(const IntMatrix& b, const IntMatrix& q,
             const std::function<std::optional<mpz_class>(const IntVector&)>& v, std::size_t cap)
      : basis(b), Q(q), visit(v), node_cap(cap) {}

  std::size_t n = 0;
  std::vector<std::vector<long double>> mu;
  std::vector<long double> Bstar;
  std::vector<long> x;
  mpz_class radius;
  long double radius_ld = 0;
  EnumerationStats stats;
  bool aborted = false;

  void set_radius(const mpz_class& r) {
    radius = r;
    radius_ld = static_cast<long double>(r.get_d()) * (1.0L + 1e-9L) + 1e-9L;
  }

  void recurse(std::size_t i, long double partial, bool upper_zero) {
    long double c = 0;
    for (std::size_t k = i + 1; k < n; ++k) c -= mu[k][i] * static_cast<long double>(x[k]);
    const long double rem = (radius_ld - partial) / Bstar[i];
    if (rem < 0) return;
    const long double w = std::sqrt(rem);
    long lo = static_cast<long>(std::ceil(c - w - 1e-9L));
    const long hi = static_cast<long>(std::floor(c + w + 1e-9L));
    if (upper_zero) lo = std::max(lo, 0L);
    for (long xi = lo; xi <= hi && !aborted; ++xi) {
      if (++stats.nodes > node_cap) {
        aborted = true;
        stats.complete = false;
        return;
      }
      x[i] = xi;
      const long double diff = static_cast<long double>(xi) - c;
      const long double next = partial + Bstar[i] * diff * diff;
      if (next > radius_ld) continue;
      const bool zero_so_far = upper_zero && xi == 0;
      if (i == 0) {
        if (zero_so_far) continue;
        IntVector v(basis[0].size(), 0);
        for (std::size_t k = 0; k < n; ++k) {
          if (x[k] == 0) continue;
          for (std::size_t t = 0; t < v.size(); ++t) v[t] += x[k] * basis[k][t];
        }
        if (form_product(Q, v, v) > radius) continue;
        if (auto r = visit(v)) {
          if (*r < radius) set_radius(*r);
        }
      } else {
        recurse(i - 1, next, zero_so_far);
      }
    }
    x[i] = 0;
  }
};

}  // namespace

EnumerationStats enumerate_ellipsoid(
    const IntMatrix& basis, const IntMatrix& Q, mpz_class radius,
    const std::function<std::optional<mpz_class>(const IntVector&)>& visit,
    std::size_t node_cap) {
  Enumerator e(basis, Q, visit, node_cap);
  e.n = basis.size();
  if (e.n == 0) return e.stats;

  // Exact rational Gram-Schmidt data, then rounded for the search bounds.
  std::vector<std::vector<mpq_class>> mu(e.n, std::vector<mpq_class>(e.n, 0));
  std::vector<mpq_class> Bq(e.n, 0);
  for (std::size_t i = 0; i < e.n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      mpq_class r = mpq_class(form_product(Q, basis[i], basis[j]));
      for (std::size_t k = 0; k < j; ++k) r -= mu[j][k] * mu[i][k] * Bq[k];
      mu[i][j] = r / Bq[j];
    }
    mpq_class r = mpq_class(form_product(Q, basis[i], basis[i]));
    for (std::size_t k = 0; k < i; ++k) r -= mu[i][k] * mu[i][k] * Bq[k];
    Bq[i] = r;
  }
  e.mu.assign(e.n, std::vector<long double>(e.n, 0));
  e.Bstar.resize(e.n);
  for (std::size_t i = 0; i < e.n; ++i) {
    e.Bstar[i] = to_ld(Bq[i]);
    for (std::size_t j = 0; j < i; ++j) e.mu[i][j] = to_ld(mu[i][j]);
  }
  e.x.assign(e.n, 0);
  e.set_radius(radius);
  e.recurse(e.n - 1, 0, true);
  return e.stats;
}

}  // namespace bakerforge
