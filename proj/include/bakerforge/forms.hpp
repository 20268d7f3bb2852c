#pragma once

// Numerical linear forms B_{k,0} e^(alpha_j) + B_{k,j} = L_{k,j} built from the
// selected rows of the derived family, with rigorous enclosures of L_{k,j}.

#include <string>
#include <vector>

#include "bakerforge/pade.hpp"

namespace bakerforge {

struct ComplexInterval {
  Interval re;
  Interval im;

  explicit ComplexInterval(Precision prec = kDefaultPrecision) : re(0L, prec), im(0L, prec) {}
  ComplexInterval(Interval r, Interval i) : re(std::move(r)), im(std::move(i)) {}
  static ComplexInterval from(const FieldElem& z, Precision prec);

  /// Enclosure of the modulus.
  Interval abs() const;
  /// Disk form: midpoint and a radius covering the rectangle.
  Interval mid_re() const { return re.midpoint(); }
  Interval mid_im() const { return im.midpoint(); }
  Interval radius() const;
  bool intersects(const ComplexInterval& o) const;

  friend ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b);
  friend ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b);
  friend ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b);
};

/// e^a for a field element a = p + q sqrt(-D).
ComplexInterval exp_enclosure(const FieldElem& a, Precision prec);

struct NumericalForms {
  Precision precision = kDefaultPrecision;
  std::vector<std::size_t> selected;
  std::vector<std::vector<FieldElem>> B_exact;  // (m+1) x (m+1), g1^L A_{s(k),j}(1)
  std::vector<std::vector<QuadInt>> B;          // filled where integral
  Check integral = Check::Indeterminate;
  std::vector<std::pair<std::size_t, std::size_t>> nonintegral;  // (k, j)
  FieldElem det_B;
  Check det_nonzero = Check::Indeterminate;
  // (m+1) x m; column j-1 holds L_{k,j}
  std::vector<std::vector<ComplexInterval>> L_direct;  // B_{k,0} e^(alpha_j) + B_{k,j}
  std::vector<std::vector<ComplexInterval>> L_series;  // g1^L R_{s(k),j}(1) by the series
  std::vector<std::vector<long>> series_terms;
  Check routes_agree = Check::Indeterminate;
};

NumericalForms evaluate_forms(const PadeSystem& sys, const DerivedFamily& fam, Precision prec);

/// g1^L R_{s,j}(1) from the exact partial sum of the remainder series plus a tail
/// bound; the number of terms grows until the tail is below 2^-prec.
ComplexInterval remainder_by_series(const PadeSystem& sys, const DerivedFamily& fam,
                                    std::size_t s, std::size_t j, Precision prec, long* terms);

struct RawBoundRow {
  std::size_t k = 0;
  std::size_t s = 0;
  Interval B0_abs, B0_cap;
  std::vector<Interval> L_abs, L_cap;  // j = 1..m
  std::vector<long> V;                 // L + nu_j + 1 - s(k), clamped at 0
  bool V_clamped = false;
  Check ok = Check::Indeterminate;
};

struct RawBoundReport {
  std::vector<RawBoundRow> rows;
  long index_cap = 0;
  Check index_ok = Check::Indeterminate;  // s(k) <= L - M + m(m+1)/2
  Interval max_c;                         // max |c_h|
  Interval coeff_bound;                   // reported alongside
  Check all = Check::Indeterminate;
};

/// |B_{k,0}| <= e g1^L L! max|c| and
/// |L_{k,j}| <= g1^L (1+|alpha_j|)^V e^(1+|alpha_j|) L!/V! max|c|, V = L + nu_j + 1 - s(k).
RawBoundReport check_raw_bounds(const PadeSystem& sys, const DerivedFamily& fam,
                                const NumericalForms& forms);

struct QRReport {
  Interval q;                          // L log L + b0 L sqrt(log L) + b1 L
  std::vector<Interval> minus_r;       // -l_j log L + e0 L sqrt(log L) + e1 L
  std::vector<Check> B_within;         // log |B_{k,0}| <= q, per k
  std::vector<std::vector<Check>> L_within;  // log |L_{k,j}| <= -r_j
  bool hypothesis_met = false;         // log L >= (gamma log gamma)/2
};

/// Informative: compares the forms with e^q(L) and e^-r_j at this L.
QRReport check_qr_bounds(const PadeSystem& sys, const NumericalForms& forms,
                         const BaseConstants& base, const Interval& log_gamma);

struct ConvergenceReport {
  std::vector<Precision> precisions;
  std::vector<Interval> residuals;  // upper bound of max |direct - series| over (k, j)
  Check halves = Check::Indeterminate;
};

/// Residual between the two routes at each precision; each doubling must at least halve it.
ConvergenceReport residual_convergence(const PadeSystem& sys, const DerivedFamily& fam,
                                       const std::vector<Precision>& precisions);

}  // namespace bakerforge
