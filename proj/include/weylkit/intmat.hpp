#pragma once

#include <vector>

#include "weylkit/bigint.hpp"
#include "weylkit/rootsys.hpp"

namespace weylkit {

using BigMatrix = std::vector<std::vector<BigInt>>;

BigMatrix to_big(IntMatrix const &m);
BigMatrix identity_matrix(std::size_t n);
BigMatrix matmul(BigMatrix const &a, BigMatrix const &b);
IntMatrix matmul(IntMatrix const &a, IntMatrix const &b);

/// Fraction-free (Bareiss) determinant.
BigInt determinant(BigMatrix m);

/**
 * Smith normal form diagonal d1 | d2 | ... | dn (non-negative; zeros last).
 * Pivots are chosen by least absolute value to keep entries small.
 */
std::vector<BigInt> smith_diagonal(BigMatrix m);

} // namespace weylkit
