#include "weylkit/bigint.hpp"

#include <numeric>
#include <stdexcept>

namespace weylkit {

BigInt largest_ppart(BigInt n, std::uint64_t p)
{
  if (n == 0)
    throw std::invalid_argument("largest_ppart: n must be nonzero");
  if (p < 2)
    throw std::invalid_argument("largest_ppart: p must be prime");
  if (n < 0)
    n = -n;
  BigInt part = 1;
  while (n % p == 0) {
    n /= p;
    part *= p;
  }
  return part;
}

BigInt ipow(BigInt base, unsigned exp)
{
  BigInt r = 1;
  while (exp) {
    if (exp & 1u)
      r *= base;
    base *= base;
    exp >>= 1u;
  }
  return r;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b)
{
  if (a == 0 || b == 0)
    return 0;
  return a / std::gcd(a, b) * b;
}

bool is_prime_u64(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

} // namespace weylkit
