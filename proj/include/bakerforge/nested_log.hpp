#pragma once

// The inverse z(y) of y = z log z, its iterates z_k = y / log z_{k-1}, and the
// error term eps(H) built from it.

#include <optional>
#include <vector>

#include "bakerforge/alpha.hpp"
#include "bakerforge/interval.hpp"

namespace bakerforge {

struct ZQuery {
  Interval y;
  double tol = 1e-15;  // relative width of the root bracket
  int max_iter = 400;

  /// Throws std::invalid_argument unless y >= e (possibly equal), 0 < tol < 1, max_iter >= 1.
  void validate() const;
};

struct ZResult {
  Interval z;
  bool converged = false;
  int iterations = 0;
};

/// Bisection inside the bracket [z_1, z_2] given by the iterates.
ZResult z_inverse(const ZQuery& q);
/// z_0 = y, z_k = y / log z_{k-1}.
std::vector<Interval> z_iterates(const Interval& y, std::size_t n);
/// z_2(y) = y / log(y / log y).
Interval z_two(const Interval& y);

struct XiResult {
  Interval epsilon;
  Interval z;              // z(f log H)
  Interval terms[4];       // the A, B, C and D contributions
  bool converged = false;
};

/// eps = A (f z / log H)^(1/2) + B z / log H + C log z / log H + D (log z)^(1/2) / log H,
/// z = z(f log H). Ratios are formed as exp(log z - log log H).
XiResult xi_epsilon(const ThmConstants& k, const Interval& f, const Interval& log_H);

inline constexpr double kRho = 1.024;

struct EpsilonChain {
  Interval z;       // z(2 log H)
  Interval z2;      // z_2(2 log H)
  std::optional<Interval> middle;  // needs log gamma
  Interval weak;    // 2 rho log H / log log H
  Check z_below_z2 = Check::Indeterminate;
  // Asserted only when log H >= log H0 is certain; Indeterminate otherwise.
  Check z2_below_middle = Check::Indeterminate;
  Check middle_below_weak = Check::Indeterminate;
  Check z2_below_weak = Check::Indeterminate;
  bool hypothesis_met = false;
};

/// Upper bounds for z(2 log H): z_2, the gamma-dependent middle bound and 2 rho log H / log log H.
EpsilonChain epsilon_upper_chain(const Interval& log_H,
                                 const std::optional<Interval>& log_gamma = std::nullopt,
                                 const std::optional<Interval>& log_H0 = std::nullopt);

/// 2 rho as an exact rational enclosure (2.048).
Interval two_rho(Precision prec);
Interval rho(Precision prec);

}  // namespace bakerforge
