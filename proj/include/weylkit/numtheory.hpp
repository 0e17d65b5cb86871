#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weylkit/bigint.hpp"

namespace weylkit {

// Deterministic for n < 3.3e24 (fixed witness set), strong probable prime above.
bool is_probable_prime(BigInt const &n);

/// Prime factorization n = prod p^e, n >= 1.  Trial division below 10^6,
/// then Pollard rho (Brent) with Miller-Rabin on the cofactors.
std::map<BigInt, unsigned> factor_integer(BigInt n);

// Smallest k >= 1 with q^k = 1 (mod r); r must be coprime to q.
std::uint64_t multiplicative_order(BigInt const &q, BigInt const &r);

struct PpdResult {
  BigInt q;
  unsigned n = 0;
  std::vector<BigInt> primes;                   // sorted
  std::optional<std::string> exception_reason; // "zsigmondy_26" or "mersenne_like_n2"
};

/// Primitive prime divisors of q^n - 1: primes dividing it but no q^i - 1, 0 < i < n.
PpdResult ppd(BigInt const &q, unsigned n);

/// Evaluates p^f >= (f_p)^p (always true; kept executable).
bool check_pf_bound(std::uint64_t p, std::uint64_t f);

} // namespace weylkit
