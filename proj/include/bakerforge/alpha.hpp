#pragma once

// Invariants of a point vector alpha = (0, alpha_1, ..., alpha_m) and the
// explicit constants built from them.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "bakerforge/field.hpp"
#include "bakerforge/interval.hpp"
#include "bakerforge/siegel.hpp"
#include "bakerforge/surd.hpp"

namespace bakerforge {

class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AlphaVector {
  FieldSpec field;
  std::vector<AlphaPoint> points;  // points[0] == 0

  std::size_t m() const { return points.size() - 1; }

  /// Checks alpha_0 = 0, distinct points, reduced fractions and m >= min_m.
  static AlphaVector make(FieldSpec field, std::vector<AlphaPoint> points, std::size_t min_m = 2);
  static AlphaVector parse(const std::string& list, FieldSpec field, std::size_t min_m = 2);
  /// Shift so the first point becomes 0 (used for rational gamma vectors).
  static AlphaVector shifted_to_origin(FieldSpec field, const std::vector<FieldElem>& values);

  std::string to_string() const;
};

enum class Check { Holds, Fails, Indeterminate };
const char* check_name(Check c);

struct GTuple {
  mpz_class g1 = 1;
  Surd g2_exact, g3_exact, g4_exact;
  Interval g2, g3, g4;

  // max{g4, 1+g3} <= g2 <= g1 (1+g3) <= 2 g1 max{1, g3}, 2 <= g2, g1 <= g2^m
  Check chain = Check::Holds;
  std::vector<std::string> failures;
};

/// Computes g1..g4; throws InvariantError if the chain fails.
GTuple compute_g(const AlphaVector& alpha, Precision prec);
/// Same without throwing; the chain status is recorded in the result.
GTuple compute_g_unchecked(const AlphaVector& alpha, Precision prec);

struct BaseConstants {
  Interval b0, e0, b1, e1;
};

BaseConstants compute_base_constants(const GTuple& g, Precision prec);

struct ThmConstants {
  Interval A, B, C, D, E;
};

ThmConstants compute_theorem_constants(const BaseConstants& base, std::size_t m);

enum class H0Mode {
  Explicit,   // H0 = max{e^(gamma log gamma / 2), 2 log(s/t)}, log gamma = (3 m e0)^2
  Axiomatic,  // H0 = max{m, L0, e^(gamma log gamma / 2), e^(e/2)}, gamma = max{S2, 1}
};

struct GammaH0 {
  Interval log_gamma;
  Interval log_H0;
  bool siegel_branch = false;  // log(2 log(s/t)) exists and was included
  H0Mode mode = H0Mode::Explicit;
};

GammaH0 compute_gamma_H0(const BaseConstants& base, std::size_t m, FieldSpec field,
                         Precision prec, H0Mode mode = H0Mode::Explicit);

/// 25 m e1 <= (3 m e0)^2.
Check verify_e1_inequality(const BaseConstants& base, std::size_t m);
/// e0 >= 3 sqrt(log 2) and b0 <= 3 e0 / 7 (the latter exactly via g4 <= g2).
Check verify_base_bounds(const GTuple& g, const BaseConstants& base);

struct S2Result {
  Interval log_S2;          // enclosure of log S2
  Interval f_at_S2;         // f over the enclosure; contains 1
  Interval f_at_double_S2;  // f(2 S2), below 1
  Check gamma_dominates = Check::Indeterminate;  // (3 m e0)^2 >= log S2
  bool bracketed = false;
  int iterations = 0;
};

/// f(S) = 2 (e0 m / sqrt(log S) + e1 m / log S + e0 m^2 / (S sqrt(log S))
///           + (2 e0 m^2 + e1 m^2) / (S log S)), evaluated at log S = u.
Interval s2_function(const BaseConstants& base, std::size_t m, const Interval& u);
/// Largest root of S log S = 2 (e0 m S sqrt(log S) + e1 m S + e0 m^2 sqrt(log S)
/// + 2 e0 m^2 + e1 m^2), by bisection on u = log S with relative tolerance `tol`.
S2Result solve_S2(const BaseConstants& base, std::size_t m, double tol = 1e-12);

/// Everything above for one alpha vector.
struct AlphaReport {
  AlphaVector alpha;
  GTuple g;
  BaseConstants base;
  ThmConstants thm;
  GammaH0 gh;
  Check e1_check = Check::Indeterminate;
  Check base_check = Check::Indeterminate;
};

AlphaReport analyze_alpha(const AlphaVector& alpha, Precision prec);

}  // namespace bakerforge
