#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "weylkit/numtheory.hpp"
#include "weylkit/permgroup.hpp"

namespace weylkit {

/**
 * A factorization H = AB, certified by |H| |A cap B| = |A| |B|.
 * `homogeneous` is empty when A and B have equal order above the
 * isomorphism cap, so A ~ B was not decided.
 */
struct FactorizationRecord {
  PermGroup H, A, B;
  BigInt intersection_order;
  bool proper = false; // both factors proper
  std::optional<bool> homogeneous;

  std::string homogeneity_tag() const;
};

/// Throws std::invalid_argument unless A, B <= H.  Empty when H != AB.
std::optional<FactorizationRecord> verify_factorization(PermGroup const &H, PermGroup const &A, PermGroup const &B);

using FactorPredicate = std::function<bool(PermGroup const &, PermGroup const &)>;

/// Sylow 2-subgroups of the two groups are isomorphic.
bool sylow2_isomorphic(PermGroup const &K, PermGroup const &L);

/**
 * Pairs of subgroup class representatives {K, L}, K listed before L, both of
 * order divisible by m, with H = KL and pred(K, L).  The candidate list is
 * enumerate_subgroups(H, m) unless supplied.  Since H = AB implies
 * H = A^x B^y, the outcome does not depend on the chosen representatives.
 */
std::vector<FactorizationRecord> search_factorizations(PermGroup const &H, std::uint64_t m,
                                                       FactorPredicate const &pred = {},
                                                       std::optional<std::vector<PermGroup>> candidates = {});

} // namespace weylkit
