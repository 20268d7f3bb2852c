#pragma once

// Type-II Hermite-Pade approximations for (1, e^(alpha_1 t), ..., e^(alpha_m t)),
// the derived family A_{k,j} and the choice of a nonsingular set of rows.

#include <optional>
#include <string>
#include <vector>

#include "bakerforge/alpha.hpp"
#include "bakerforge/polynomial.hpp"
#include "bakerforge/siegel.hpp"

namespace bakerforge {

struct PadeParams {
  std::vector<long> l;   // l_1..l_m
  std::vector<long> nu;  // nu_1..nu_m

  long L() const;
  long M() const;
  std::size_t m() const { return l.size(); }
  /// Checks m >= 2, 1 <= nu_j <= l_j, M <= L.
  static PadeParams make(std::vector<long> l, std::vector<long> nu);
  /// cap on the row indices: L - M + m(m+1)/2
  long index_cap() const;
};

struct NuChoice {
  std::vector<long> nu;
  bool clamped = false;          // some floor was 0 and was raised to 1
  Interval theta;                // 1 - sqrt(log g2 / log L)
  Check lmml = Check::Indeterminate;        // L theta - m < M <= L theta
  Check frac_mlm = Check::Indeterminate;    // M/(L-M) <= sqrt(log L / log g2) - 1
  Check frac_m2lm = Check::Indeterminate;   // (M^2/2)/(L-M) <= L/2 sqrt(.) - L + L/2 sqrt(1/.)
};

/// nu_j = floor(l_j (1 - sqrt(log g2 / log L))), raised to 1 where it vanishes.
/// Throws std::invalid_argument if g2 > L.
NuChoice choose_nu(const std::vector<long>& l, const Surd& g2, Precision prec = kDefaultPrecision);

/// choose_nu when g2 <= L; otherwise nu_j = 1 and `fallback` is set.
struct DefaultParams {
  PadeParams params;
  std::optional<NuChoice> choice;
  bool fallback = false;
};
DefaultParams default_params(const AlphaVector& alpha, const std::vector<long>& l,
                             Precision prec = kDefaultPrecision);

/// One row per (j, i), i = 1..nu_j: sum_h binom(L+i, h) x_j^(L-h) y_j^h c_h = 0.
LinearSystem build_coefficient_system(const AlphaVector& alpha, const PadeParams& params);

struct RowSumCheck {
  std::vector<Interval> row_sums;
  std::vector<Interval> row_caps;  // (|x_j| + y_j)^L (1 + y_j/|x_j|)^i
  Check rows = Check::Indeterminate;
  Interval log_product;            // sum log A_row
  Interval log_cap;                // M L log g2 + (M^2/2) log g4
  Check product = Check::Indeterminate;
};
RowSumCheck check_row_sums(const AlphaVector& alpha, const PadeParams& params,
                           const LinearSystem& sys, Precision prec);

struct PadeSystem {
  AlphaVector alpha;
  PadeParams params;
  GTuple g;
  std::vector<QuadInt> c;         // c_0..c_L
  std::vector<Poly> A0;           // A_{0,0}, ..., A_{0,m}
  SiegelSolution solution;
  Interval coeff_bound;           // max{2c sqrt D, s t^(M/(L+1-M)) (g2^(ML) g4^(M^2/2))^(1/(L+1-M))}
  bool bound_met = false;         // max |c_h| <= coeff_bound
  std::vector<long> order;        // ord R_{0,j} (index 0 unused), -1 if above the series horizon
  std::size_t horizon = 0;        // series computed to t^(horizon-1)
  Check order_ok = Check::Indeterminate;
  Check integral_ok = Check::Indeterminate;  // g1^L A_{0,j} over the ring of integers
  Check nonzero_ok = Check::Indeterminate;   // every A_{0,j} nonzero
  Check truncation_ok = Check::Indeterminate;  // A_{0,j} = -[A_{0,0} e^(alpha_j t)]_L

  long L() const { return params.L(); }
  long M() const { return params.M(); }
  std::size_t m() const { return params.m(); }
};

PadeSystem construct_pade(const AlphaVector& alpha, const PadeParams& params,
                          SolveStrategy strategy, Precision prec = kDefaultPrecision);

/// A_{0,0}(t) e^(alpha t) as a series with `order` coefficients.
Poly remainder_series(const Poly& A_k0, const Poly& A_kj, const FieldElem& alpha,
                      std::size_t order);

struct DerivedFamily {
  long k_max = 0;
  std::vector<std::vector<Poly>> A;                 // A[k][j]
  std::vector<std::vector<FieldElem>> values;       // A_{k,j}(1)
  std::vector<std::size_t> selected;                // s(0..m)
  long b = 0;                                       // max selected - m
  Check ineq_ok = Check::Indeterminate;             // degree and order bookkeeping
  std::vector<std::string> failures;
};

/// A_{k+1,j} = A'_{k,j} - alpha_j A_{k,j} for k < k_max (default L - M + m(m+1)/2).
DerivedFamily derive_family(const PadeSystem& sys, std::optional<long> k_max = std::nullopt);

/// Greedy exact-rank scan over rows 0..cap; throws std::runtime_error if fewer
/// than m+1 independent rows exist.
std::vector<std::size_t> select_indices(const std::vector<std::vector<FieldElem>>& values,
                                        std::size_t m, long cap);

/// det(alpha_j^k), k, j = 1..m.
FieldElem vandermonde_factor(const AlphaVector& alpha);

struct DeterminantCheck {
  Poly delta;
  long order = -1;
  long degree = -1;
  long order_floor = 0;   // mL + M - m(m-1)/2
  long h_degree_cap = 0;  // L - M + m(m-1)/2
  Check factor_ok = Check::Indeterminate;
  FieldElem predicted_leading;
  Check leading_ok = Check::Indeterminate;
};

/// Delta(t) = det(A_{k,j}(t)), k, j = 0..m; verifies the t-power factorization and
/// the leading coefficient (-1)^(m(m+1)/2) a_00 ... a_0m det(alpha_j^k).
DeterminantCheck family_determinant(const PadeSystem& sys, const DerivedFamily& fam);

}  // namespace bakerforge
