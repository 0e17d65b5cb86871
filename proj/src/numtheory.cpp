#include "weylkit/numtheory.hpp"

#include <algorithm>
#include <stdexcept>


#include "weylkit/rng.hpp"

namespace weylkit {

namespace {

BigInt powmod(BigInt b, BigInt e, BigInt const &m)
{
  return boost::multiprecision::powm(b, e, m);
}

bool strong_probable_prime(BigInt const &n, BigInt const &a)
{
  BigInt d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  BigInt x = powmod(a % n, d, n);
  if (x == 1 || x == n - 1)
    return true;
  for (unsigned r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == n - 1)
      return true;
  }
  return false;
}

BigInt pollard_brent(BigInt const &n, std::uint64_t seed)
{
  if (n % 2 == 0)
    return 2;
  CounterRng rng(seed);
  for (;;) {
    BigInt y = BigInt(rng.next()) % n, c = BigInt(rng.next()) % (n - 1) + 1;
    std::uint64_t const m = 128;
    BigInt g = 1, r = 1, q = 1, x, ys;
    do {
      x = y;
      for (BigInt i = 0; i < r; ++i)
        y = (y * y + c) % n;
      BigInt k = 0;
      do {
        ys = y;
        for (std::uint64_t i = 0; i < m && k + i < r; ++i) {
          y = (y * y + c) % n;
          q = q * (x > y ? x - y : y - x) % n;
        }
        g = gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = (ys * ys + c) % n;
        g = gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n)
      return g;
  }
}

void factor_rec(BigInt const &n, std::map<BigInt, unsigned> &out, std::uint64_t &seed)
{
  if (n == 1)
    return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  BigInt d = pollard_brent(n, ++seed);
  factor_rec(d, out, seed);
  factor_rec(n / d, out, seed);
}

} // namespace

bool is_probable_prime(BigInt const &n)
{
  if (n < 2)
    return false;
  static unsigned const small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  for (unsigned p : small) {
    if (n == p)
      return true;
    if (n % p == 0)
      return false;
  }
  for (unsigned p : small)
    if (!strong_probable_prime(n, p))
      return false;
  return true;
}

std::map<BigInt, unsigned> factor_integer(BigInt n)
{
  if (n < 1)
    throw std::invalid_argument("factor_integer: n must be positive");
  std::map<BigInt, unsigned> out;
  for (std::uint64_t p = 2; p < 1'000'000 && BigInt(p) * p <= n; p += (p == 2 ? 1 : 2))
    while (n % p == 0) {
      n /= p;
      ++out[BigInt(p)];
    }
  std::uint64_t seed = 0x5a1d;
  factor_rec(n, out, seed);
  return out;
}

std::uint64_t multiplicative_order(BigInt const &q, BigInt const &r)
{
  if (r < 2 || gcd(q, r) != 1)
    throw std::invalid_argument("multiplicative_order: need r >= 2 coprime to q");
  // order divides lambda | phi(r); walk down the divisors of phi(r)
  BigInt phi = 1;
  for (auto const &[p, e] : factor_integer(r))
    phi *= ipow(p, e - 1) * (p - 1);
  BigInt ord = phi;
  for (auto const &[p, e] : factor_integer(phi)) {
    (void)e;
    while (ord % p == 0 && powmod(q % r, ord / p, r) == 1)
      ord /= p;
  }
  if (ord > BigInt(std::numeric_limits<std::uint64_t>::max()))
    throw std::overflow_error("multiplicative order exceeds 64 bits");
  return static_cast<std::uint64_t>(ord);
}

PpdResult ppd(BigInt const &q, unsigned n)
{
  if (q < 2 || n < 2)
    throw std::invalid_argument("ppd: need q >= 2 and n >= 2");
  PpdResult r{q, n, {}, std::nullopt};
  BigInt N = ipow(q, n) - 1;
  for (auto const &[p, e] : factor_integer(N)) {
    (void)e;
    if (q % p == 0)
      continue;
    if (multiplicative_order(q, p) == n)
      r.primes.push_back(p);
  }
  std::sort(r.primes.begin(), r.primes.end());
  if (r.primes.empty()) {
    BigInt qp1 = q + 1;
    bool two_power = (qp1 & (qp1 - 1)) == 0;
    if (q == 2 && n == 6)
      r.exception_reason = "zsigmondy_26";
    else if (n == 2 && two_power)
      r.exception_reason = "mersenne_like_n2";
    else
      throw std::logic_error("ppd: empty set outside the known exceptions");
  }
  return r;
}

bool check_pf_bound(std::uint64_t p, std::uint64_t f)
{
  if (p < 2 || f < 1)
    throw std::invalid_argument("check_pf_bound: need p >= 2 and f >= 1");
  BigInt fp = largest_ppart(BigInt(f), p);
  return ipow(BigInt(p), static_cast<unsigned>(f)) >= ipow(fp, static_cast<unsigned>(p));
}

} // namespace weylkit
