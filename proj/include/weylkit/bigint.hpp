#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace weylkit {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline std::string to_string(BigInt const &n) { return n.str(); }

// Largest power of p dividing n (n_p). n must be nonzero.
BigInt largest_ppart(BigInt n, std::uint64_t p);

BigInt ipow(BigInt base, unsigned exp);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

bool is_prime_u64(std::uint64_t n);

} // namespace weylkit
