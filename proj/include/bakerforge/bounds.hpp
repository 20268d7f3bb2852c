#pragma once

// Explicit lower bounds for |beta_0 + beta_1 e^(alpha_1) + ... + beta_m e^(alpha_m)|,
// their simplified forms, the older explicit results they are compared against,
// and the worked example families. Thresholds are carried in log or log-log scale.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "bakerforge/alpha.hpp"
#include "bakerforge/forms.hpp"
#include "bakerforge/nested_log.hpp"

namespace bakerforge {

enum class HMode {
  Theorem,  // H = prod (2m H_i)
  Hat,      // H = prod H_i
};

struct HSpec {
  std::vector<Interval> H;  // H_1..H_m; empty when only log H is known
  HMode mode = HMode::Theorem;
  Interval log_H;

  /// log H = sum (log 2m + log H_i); requires m values, each >= 1.
  static HSpec theorem(const std::vector<Interval>& H, std::size_t m);
  static HSpec hat(const std::vector<Interval>& H);
  static HSpec from_log(HMode mode, const Interval& log_H);
};

struct Component {
  std::string name;
  Interval value;
};

struct BoundReport {
  Interval log_lower_bound;
  Interval epsilon;
  Interval log_H;
  Interval log_H0;
  bool hypothesis_met = false;  // log H >= log H0 with certainty
  std::vector<Component> components;
  std::vector<std::string> provenance;
  Check identity = Check::Indeterminate;  // bound + log 2 + E + (1 + eps) log H contains 0
  Check weaker = Check::Indeterminate;    // simplified form <= full form (when hypothesis met)
};

/// -log 2 - E - (1 + eps) log H with eps = xi(z, H), f = 2.
BoundReport theorem_bound_from(const ThmConstants& k, std::size_t m, const Interval& log_H,
                               const Interval& log_H0);
/// Throws std::invalid_argument unless h.mode is Theorem.
BoundReport theorem_bound(const AlphaVector& alpha, const HSpec& h, Precision prec);

/// Closed form with z(2 log H) replaced by 2 rho log H / log log H, rho = 1.024.
BoundReport corollary22_from(const ThmConstants& k, std::size_t m, const Interval& log_H,
                             const Interval& log_H0);
BoundReport corollary22_bound(const AlphaVector& alpha, const HSpec& h, Precision prec);

enum class AhatCase { A, B };  // g1 <= g2 g4, g1 > g2 g4
const char* ahat_case_name(AhatCase c);

struct Cor23Report {
  AhatCase which = AhatCase::A;
  Interval Ahat;         // case formula
  Interval Ahat_chain;   // rho-chain estimate of eps, plus the H-to-H-hat terms, at H0
  Interval Ahat_direct;  // same with eps = xi(z, H0) computed exactly
  bool direct_computed = false;
  Interval log_H0;
  Interval log_Hhat0;    // log H0 - m log 2m
  Interval loglog_Hhat0;
  // log Hhat0 <= (3 m e0)^2 e^((3 m e0)^2) / 2 when 2 log(2 log(s/t)) <= (3 m e0)^2 e^((3 m e0)^2)
  Check side_premise = Check::Indeterminate;
  Check side_condition = Check::Indeterminate;
  AlphaReport base;
};

/// The case formulas for A-hat and the threshold log H-hat_0.
Cor23Report corollary23_Ahat(const AlphaVector& alpha, Precision prec, bool direct = true);
Cor23Report corollary23_from(const AlphaReport& rep, Precision prec, bool direct);

struct Cor24Report {
  std::vector<FieldElem> gamma;
  AlphaVector eta;        // gamma - gamma_0
  Cor23Report ahat_eta;
  mpz_class g1_gamma;
  mpq_class g3_gamma;
  Interval X;             // log(g1 (1 + g3)) of gamma
  Interval Bhat;          // 1 + m A-hat(eta)
  long c_m = 12;
  Interval cap;           // c_m m^2 sqrt(X)
  Check cap_ok = Check::Indeterminate;
  int m2_case = 0;        // 1: g1(1+g3) = 2, 2: = 3, 3: >= 4; 0 when m >= 3
  Interval loglog_M0;     // log log H-hat_0(eta)
  Interval loglog_M0_cap; // log(96 m^2 X) + 192 m^2 X
  Check threshold_ok = Check::Indeterminate;
  Check eta_bounds = Check::Indeterminate;  // g1(eta) <= g1, g3(eta) <= 2 g3, g4(eta) <= 1 + g1
  Check mean_value = Check::Indeterminate;  // sqrt log(g1(1+2g3)) <= sqrt X + 0.331, if g1(1+g3) >= 3
};

/// gamma: m+1 distinct rationals in any order; throws FieldError outside Q.
Cor24Report corollary24_Bhat(const std::vector<FieldElem>& gamma, Precision prec);

struct PriorTerm {
  Interval value;
  Interval loglog_threshold;
};

struct ComparisonReport {
  PriorTerm ours_A;         // case formula, log log H-hat_0
  PriorTerm ours_A_simple;  // sqrt m + (4 + sqrt m + 8m) sqrt log(2 g1 g3~), 56 m^2 Y e^(111 m^2 Y)
  PriorTerm sankilampi_A;
  PriorTerm ours_B;         // 1 + m A-hat(eta), log log M0 cap
  PriorTerm mahler_B;
  Interval Y;               // log(2 g1 max(1, g3))
  Check simple_le_sankilampi = Check::Indeterminate;
  Check case_le_sankilampi = Check::Indeterminate;
  Check case_le_simple = Check::Indeterminate;
  Check B_le_mahler = Check::Indeterminate;
  Check B_threshold_le_mahler = Check::Indeterminate;
};

/// gamma as in corollary24_Bhat; the A-hat terms use eta = gamma - gamma_0.
ComparisonReport compare_prior(const std::vector<FieldElem>& gamma, Precision prec);

enum class Preset { Integers, Harmonic, GaussianDisk };
Preset parse_preset(const std::string& name);
const char* preset_name(Preset p);

struct Headline {
  std::string name;
  Interval computed;
  std::string relation;  // "<=", "~"
  double target = 0;
  double tolerance = 0;  // absolute; relative when `relative`
  bool relative = false;
  Check ok = Check::Indeterminate;
};

/// Coefficients (c1, c2) of 1 + c0 + (c1 + c2 m) sqrt log(m+1) when sqrt log g2 <= kappa sqrt log(m+1).
std::pair<Interval, Interval> example_ahat_coefficients(const Interval& kappa);

struct PresetReport {
  Preset preset = Preset::Integers;
  long m = 0;
  AlphaVector alpha;
  Cor23Report cor23;
  std::optional<Cor24Report> cor24;
  std::optional<ComparisonReport> prior;
  std::vector<Component> formulas;  // the family's closed forms at this m
  std::vector<Headline> headlines;
  std::vector<std::pair<std::string, Check>> checks;
  // gaussian_disk
  mpq_class r_squared = 0;
  long count = 0;
  // harmonic
  mpz_class lcm = 1;
  Check all = Check::Indeterminate;
};

/// integers: alpha_j = j; harmonic: alpha_j = 1/j; gaussian_disk: every Gaussian
/// integer of modulus <= r (r^2 given), 0 first. Throws std::invalid_argument on
/// m < 2 or r^2 < 2.
PresetReport example_preset(Preset preset, long m, const mpq_class& r_squared, Precision prec);

/// Gaussian integers with |z|^2 <= r2, ordered by norm, then real and imaginary part.
std::vector<QuadInt> gaussian_disk_points(const mpq_class& r2);

struct EmpiricalRow {
  std::vector<QuadInt> beta;
  ComplexInterval value;
  Interval abs_value;
  Precision precision = kDefaultPrecision;
  bool nonzero = false;
  std::optional<Interval> log_bound;  // theorem bound (m >= 2)
  bool hypothesis_met = false;
  bool violation = false;
};

struct EmpiricalTable {
  AlphaVector alpha;
  long box = 0;
  std::size_t candidates = 0;
  std::vector<EmpiricalRow> rows;
  std::size_t flagged = 0;     // enclosure still contains 0 at the precision cap
  std::size_t violations = 0;  // observed value below a bound whose hypothesis holds
  std::optional<std::size_t> min_row;
  Check all_nonzero = Check::Indeterminate;
};

inline constexpr std::size_t kEmpiricalCap = 10000;

/// Every beta in the ring of integers with 0 < max |beta_i| <= box. Throws
/// std::invalid_argument when there are more than kEmpiricalCap candidates.
EmpiricalTable empirical_check(const AlphaVector& alpha, long box, Precision prec);

}  // namespace bakerforge
