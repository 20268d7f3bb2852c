#pragma once

// Small nonzero solutions of homogeneous linear systems over Z or Z[w].

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bakerforge/field.hpp"
#include "bakerforge/interval.hpp"
#include "bakerforge/lattice.hpp"

namespace bakerforge {

struct LinearSystem {
  FieldSpec field;
  std::vector<std::vector<QuadInt>> coeffs;  // M rows of N entries

  /// Validates M < N, rectangular shape, matching fields and nonzero rows.
  static LinearSystem make(FieldSpec field, std::vector<std::vector<QuadInt>> coeffs);

  std::size_t M() const { return coeffs.size(); }
  std::size_t N() const { return coeffs.empty() ? 0 : coeffs.front().size(); }
  /// A_p = sum_n |a_pn| for each row.
  std::vector<Interval> row_sums(Precision prec) const;
};

struct SiegelConstants {
  Interval s;
  Interval t;
  std::optional<Interval> c;  // absent over Q
  bool asymptotic = false;
  std::string note;

  static SiegelConstants for_field(FieldSpec field, Precision prec, bool asymptotic = false);
};

/// max{2c sqrt(D), s t^(M/(N-M)) (A_1...A_M)^(1/(N-M))}; the first branch only
/// over imaginary quadratic fields.
Interval siegel_bound(const LinearSystem& sys, const SiegelConstants& consts, Precision prec);
/// Same bound from log(A_1...A_M), for products too large to form directly.
Interval siegel_bound_from_log(FieldSpec field, const SiegelConstants& consts, std::size_t M,
                               std::size_t N, const Interval& log_product);

enum class SolveStrategy { Exhaustive, KernelReduce };
SolveStrategy parse_strategy(const std::string& name);
std::string strategy_name(SolveStrategy s);

struct SiegelSolution {
  std::vector<QuadInt> z;
  mpz_class max_norm = 0;  // max_n |z_n|^2
  Interval max_modulus;
  Interval bound;
  bool bound_met = false;
  bool optimal = false;  // complete enumeration: no solution with smaller max modulus
  std::size_t nodes = 0;
  SolveStrategy strategy_used = SolveStrategy::Exhaustive;
};

inline constexpr std::size_t kDefaultNodeCap = 10'000'000;

/// Exhaustive: complete enumeration of the kernel lattice for the minimal
/// max modulus. KernelReduce: the best LLL-reduced kernel vector, falling back
/// to the enumeration if it misses the bound. Ties are broken by the
/// lexicographically smallest coordinate sequence after making the first
/// nonzero coordinate positive.
SiegelSolution solve_small_system(const LinearSystem& sys, const SiegelConstants& consts,
                                  SolveStrategy strategy, Precision prec = kDefaultPrecision,
                                  std::size_t node_cap = kDefaultNodeCap);

/// True iff z is nonzero and every form vanishes exactly.
bool verify_solution(const LinearSystem& sys, const std::vector<QuadInt>& z);

/// The coordinate system over Z (one or two equations per form).
IntMatrix integer_equations(const LinearSystem& sys);
/// Q with Q(v) = scale * sum |z_n|^2 for coordinates v of z.
IntMatrix modulus_form(FieldSpec field, std::size_t N, long* scale);
/// Sign normalization and order used for tie-breaking.
std::vector<QuadInt> normalize_sign(std::vector<QuadInt> z);
bool tie_break_less(const std::vector<QuadInt>& a, const std::vector<QuadInt>& b);

}  // namespace bakerforge
