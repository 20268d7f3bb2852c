#pragma once

// Hand-rolled generators and floating-point oracles shared by the tests. The
// oracles work in long double and never call into the library's interval code.

#include <cmath>
#include <functional>
#include <optional>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "bakerforge/alpha.hpp"
#include "bakerforge/siegel.hpp"

namespace testing {

using namespace bakerforge;

// splitmix64; fixed across platforms, unlike std:: distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : s_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  long range(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  double uniform() { return (next() >> 11) * (1.0 / 9007199254740992.0); }

 private:
  std::uint64_t s_;
};

inline FieldSpec field_by_index(int i) {
  switch (i % 3) {
    case 0: return FieldSpec::rationals();
    case 1: return FieldSpec::imaginary_quadratic(1);
    default: return FieldSpec::imaginary_quadratic(3);
  }
}

inline AlphaVector random_alpha(Rng& rng, FieldSpec f, std::size_t m, long span, long max_den) {
  std::vector<AlphaPoint> pts{AlphaPoint{QuadInt::zero(f), 1}};
  std::set<std::string> seen{"0"};
  while (pts.size() < m + 1) {
    const long a = rng.range(-span, span);
    const long b = f.is_rational() ? 0 : rng.range(-span, span);
    const long den = rng.range(1, max_den);
    const AlphaPoint p = alpha_normalize(QuadInt(mpz_class(a), mpz_class(b), f), mpz_class(den));
    if (seen.insert(to_string(p.value())).second) pts.push_back(p);
  }
  return AlphaVector::make(f, pts);
}

// Real and imaginary parts of a basis-coordinate pair (a, b) / y.
struct Complex {
  long double re = 0, im = 0;
  long double abs() const { return std::sqrt(re * re + im * im); }
};

inline Complex to_complex(const FieldElem& z) {
  const long double s = z.field.is_rational() ? 0.0L : std::sqrt(static_cast<long double>(z.field.D));
  return {static_cast<long double>(z.real_part().get_d()),
          static_cast<long double>(z.imag_sqrt_coeff().get_d()) * s};
}

struct GOracle {
  long double g1, g2, g3, g4;
};

// g1..g4 straight from the definitions, in long double.
inline GOracle g_oracle(const AlphaVector& a) {
  GOracle g{1, 0, 0, 0};
  mpz_class l = 1;
  for (std::size_t j = 0; j < a.points.size(); ++j) {
    const auto& p = a.points[j];
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), p.y.get_mpz_t());
    const long double x = to_complex(to_field(p.x)).abs();
    const long double y = p.y.get_d();
    g.g2 = std::max(g.g2, x + y);
    g.g3 = std::max(g.g3, x / y);
    if (j > 0) g.g4 = std::max(g.g4, 1 + y / x);
  }
  g.g1 = l.get_d();
  return g;
}

// Inverse of z log z by Newton's method in long double.
inline long double z_oracle(long double y) {
  long double z = y / std::log(y);
  for (int i = 0; i < 200; ++i) {
    const long double f = z * std::log(z) - y;
    const long double step = f / (std::log(z) + 1);
    z -= step;
    if (std::fabs(step) <= 1e-18L * z) break;
  }
  return z;
}

// Smallest max |z_n|^2 over nonzero solutions with every |z_n|^2 <= limit, by
// walking the whole coordinate box in machine integers. nullopt when none
// exists or the box has more than `cap` points.
inline std::optional<long> brute_min_norm(const LinearSystem& sys, long limit, long cap = 4'000'000) {
  const FieldSpec f = sys.field;
  const bool quad = !f.is_rational();
  const long reach = static_cast<long>(std::sqrt(static_cast<double>(limit))) * (quad ? 2 : 1) + 1;
  std::vector<std::pair<long, long>> coords;  // ring elements with norm <= limit
  for (long a = -reach; a <= reach; ++a) {
    for (long b = quad ? -reach : 0; b <= (quad ? reach : 0); ++b) {
      const long n = f.basis() == Basis::HalfInteger ? a * a + a * b + f.half_k() * b * b
                                                     : a * a + f.D * b * b;
      if (n <= limit) coords.emplace_back(a, b);
    }
  }
  const std::size_t N = sys.N();
  double total = 1;
  for (std::size_t n = 0; n < N; ++n) total *= static_cast<double>(coords.size());
  if (total > static_cast<double>(cap)) return std::nullopt;

  const auto norm = [&](std::pair<long, long> z) {
    return f.basis() == Basis::HalfInteger ? z.first * z.first + z.first * z.second + f.half_k() * z.second * z.second
                                           : z.first * z.first + f.D * z.second * z.second;
  };
  const auto mul = [&](long a, long b, long c, long d) -> std::pair<long, long> {
    if (f.basis() == Basis::HalfInteger) return {a * c - f.half_k() * b * d, a * d + b * c + b * d};
    return {a * c - f.D * b * d, a * d + b * c};
  };
  std::optional<long> best;
  std::vector<std::size_t> idx(N, 0);
  for (;;) {
    bool nonzero = false;
    long mx = 0;
    for (std::size_t n = 0; n < N; ++n) {
      const auto z = coords[idx[n]];
      nonzero = nonzero || z.first != 0 || z.second != 0;
      mx = std::max(mx, norm(z));
    }
    if (nonzero && (!best || mx < *best)) {
      bool zero = true;
      for (const auto& row : sys.coeffs) {
        long sa = 0, sb = 0;
        for (std::size_t n = 0; n < N; ++n) {
          const auto p = mul(row[n].a.get_si(), row[n].b.get_si(), coords[idx[n]].first, coords[idx[n]].second);
          sa += p.first;
          sb += p.second;
        }
        if (sa != 0 || sb != 0) {
          zero = false;
          break;
        }
      }
      if (zero) best = mx;
    }
    std::size_t k = 0;
    while (k < N && ++idx[k] == coords.size()) idx[k++] = 0;
    if (k == N) break;
  }
  return best;
}

inline LinearSystem random_system(Rng& rng, FieldSpec f, std::size_t M, std::size_t N, long span) {
  std::vector<std::vector<QuadInt>> rows(M);
  for (auto& row : rows) {
    bool nonzero = false;
    while (!nonzero) {
      row.clear();
      for (std::size_t n = 0; n < N; ++n) {
        const long a = rng.range(-span, span);
        const long b = f.is_rational() ? 0 : rng.range(-span, span);
        row.emplace_back(mpz_class(a), mpz_class(b), f);
        nonzero = nonzero || a != 0 || b != 0;
      }
    }
  }
  return LinearSystem::make(f, rows);
}

inline bool near(long double a, long double b, long double rel) {
  return std::fabs(a - b) <= rel * std::max<long double>(1, std::fabs(b));
}

}  // namespace testing
