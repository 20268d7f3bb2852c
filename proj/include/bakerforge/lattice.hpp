#pragma once

// Integer lattices: exact kernels, integral LLL and ellipsoid enumeration.

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace bakerforge {

using IntVector = std::vector<mpz_class>;
using IntMatrix = std::vector<IntVector>;  // row-major

/// Basis (as rows) of the integer kernel {x in Z^cols : E x = 0}.
IntMatrix integer_kernel(const IntMatrix& E, std::size_t cols);

/// x^T Q y for a symmetric integer form Q.
mpz_class form_product(const IntMatrix& Q, const IntVector& x, const IntVector& y);

/// In-place integral LLL (exact arithmetic on Gram data) of linearly independent
/// row vectors with respect to the positive definite form Q, with
/// Lovasz parameter delta = delta_num / delta_den.
void lll_reduce(IntMatrix& basis, const IntMatrix& Q, long delta_num = 99, long delta_den = 100);

struct EnumerationStats {
  std::size_t nodes = 0;
  bool complete = true;  // false if the node cap stopped the search
};

/// Calls `visit` for every nonzero lattice vector v (one of each pair +-v) with
/// Q(v) <= radius. `visit` may return a new, smaller radius.
EnumerationStats enumerate_ellipsoid(
    const IntMatrix& basis, const IntMatrix& Q, mpz_class radius,
    const std::function<std::optional<mpz_class>(const IntVector&)>& visit,
    std::size_t node_cap);

}  // namespace bakerforge
