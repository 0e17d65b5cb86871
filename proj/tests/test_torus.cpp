#include "doctest.h"

#include <functional>

#include "weylkit/intmat.hpp"
#include "weylkit/numtheory.hpp"
#include "weylkit/parabolic.hpp"
#include "weylkit/rng.hpp"
#include "weylkit/torus.hpp"

using namespace weylkit;

namespace {

// #{x in (Z/N)^l : x A = 0 mod N}, by enumeration.
std::uint64_t brute_kernel(IntMatrix const &A, std::int64_t N)
{
  std::size_t const l = A.size();
  std::vector<std::int64_t> x(l, 0);
  std::uint64_t count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == l) {
      for (std::size_t j = 0; j < l; ++j) {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < l; ++i)
          s += x[i] * A[i][j];
        if (s % N != 0)
          return;
      }
      ++count;
      return;
    }
    for (x[k] = 0; x[k] < N; ++x[k])
      rec(k + 1);
  };
  rec(0);
  return count;
}

IntMatrix q_minus_one(IntMatrix M, int q, bool twisted)
{
  for (std::size_t i = 0; i < M.size(); ++i)
    for (std::size_t j = 0; j < M.size(); ++j)
      M[i][j] = (twisted ? -q : q) * M[i][j] - (i == j ? 1 : 0);
  return M;
}

} // namespace

TEST_CASE("torus order polynomials")
{
  auto F4 = WeylGroup::of("F4");
  CHECK(torus_order_poly(F4, F4.longest_element(), false).to_string() == "(q+1)^4");
  CHECK(torus_order_poly(F4, F4.group().identity(), false).to_string() == "(q-1)^4");
  auto E6 = WeylGroup::of("E6");
  Perm w = E6.word_to_element("123142314542314565423456");
  CHECK(torus_order_poly(E6, w, false) == FactoredPolynomial::parse("(q^2+q+1)^3"));
  CHECK(torus_order_poly(E6, E6.group().identity(), true) == FactoredPolynomial::parse("(q+1)^6"));
}

TEST_CASE("torus order is a class function")
{
  CounterRng rng(3);
  auto E6 = WeylGroup::of("E6");
  for (int k = 0; k < 10; ++k) {
    Perm w = E6.group().random_element(rng), x = E6.group().random_element(rng);
    for (bool tw : {false, true})
      CHECK(torus_order_poly(E6, w, tw) == torus_order_poly(E6, x.inverse() * w * x, tw));
  }
}

TEST_CASE("Smith normal form against brute kernel counts")
{
  auto F4 = WeylGroup::of("F4");
  auto t = torus_structure(F4, F4.longest_element(), false, BigInt(4));
  CHECK(t.invariant_factors == std::vector<BigInt>{5, 5, 5, 5});
  auto E6 = WeylGroup::of("E6");
  Perm w = E6.word_to_element("123142314542314565423456");
  auto t2 = torus_structure(E6, w, false, BigInt(2));
  CHECK(t2.invariant_factors == std::vector<BigInt>{7, 7, 7});
  CHECK(brute_kernel(q_minus_one(E6.coroot_matrix(w), 2, false), 7) == 343);

  CounterRng rng(9);
  int compared = 0;
  for (char const *label : {"G2", "B3", "F4"}) {
    auto W = WeylGroup::of(label);
    for (int k = 0; k < 12; ++k) {
      Perm x = W.group().random_element(rng);
      for (int q : {2, 3}) {
        for (bool tw : {false, true}) {
          auto st = torus_structure(W, x, tw, BigInt(q));
          auto A = q_minus_one(W.coroot_matrix(x), q, tw);
          BigInt det = determinant(to_big(A));
          CHECK(st.order() == abs(det));
          CHECK(torus_order_poly(W, x, tw).eval(BigInt(q)) == st.order());
          if (st.invariant_factors.empty())
            continue;
          BigInt N = st.invariant_factors.back();
          if (ipow(N, static_cast<unsigned>(W.rank())) > 200000)
            continue;
          CHECK(BigInt(brute_kernel(A, static_cast<std::int64_t>(N))) == st.order());
          ++compared;
        }
      }
    }
  }
  CHECK(compared > 20);
}

TEST_CASE("Smith normal form basics")
{
  CHECK(smith_diagonal({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}) == std::vector<BigInt>{2, 6, 12});
  CHECK(smith_diagonal({{0, 0}, {0, 3}}) == std::vector<BigInt>{3, 0});
  CHECK(determinant({{1, 2}, {3, 4}}) == -2);
}

TEST_CASE("centralizer module mod r")
{
  auto E6 = WeylGroup::of("E6");
  Perm w = E6.word_to_element("123142314542314565423456");
  auto m = centralizer_torus_module(E6, w, 7);
  CHECK(m.dimension == 6);
  CHECK_FALSE(m.generator_matrices.empty());
  CHECK_THROWS_AS(centralizer_torus_module(E6, w, 8), std::invalid_argument);
}

TEST_CASE("parabolic F4, J = {1,2,4}")
{
  auto W = WeylGroup::of("F4");
  auto datum = parabolic_datum(W, {1, 2, 4});
  CHECK(datum.W_J.order() == 12);
  CHECK(datum.coset_reps.size() == 96);

  // brute oracle: minimal length in each coset W_J x
  std::map<std::vector<Point>, std::size_t> min_len; // coset key -> minimal length
  auto const elts = datum.W_J.elements();
  W.group().for_each_element([&](Perm const &x) {
    std::vector<Point> key;
    std::set<Perm> coset;
    for (auto const &u : elts)
      coset.insert(u * x);
    auto const &least = *coset.begin();
    for (std::size_t i = 0; i < least.degree(); ++i)
      key.push_back(least[static_cast<Point>(i)]);
    auto len = W.length(x);
    auto [it, fresh] = min_len.emplace(key, len);
    if (!fresh)
      it->second = std::min(it->second, len);
  });
  CHECK(min_len.size() == 96);
  std::multiset<std::size_t> brute, ours;
  for (auto const &[k, v] : min_len)
    brute.insert(v);
  for (auto const &r : datum.coset_reps) {
    ours.insert(W.length(r));
    CHECK(reduce_to_coset_rep(W, {1, 2, 4}, r) == r);
  }
  CHECK(brute == ours);

  auto reports = double_cosets(datum);
  std::size_t total = 0, non_self = 0;
  for (auto const &r : reports) {
    total += r.coset_count;
    non_self += is_self_paired(r) ? 0 : 1;
    CHECK(suborbit_polynomial(datum, r).eval(BigInt(1)) == r.coset_count);
    CHECK(r.triple_count == triple_intersection_count(W, r.min_rep));
  }
  CHECK(total == 96);
  CHECK(non_self == 4);
}

TEST_CASE("rule_out_parabolic")
{
  CHECK(rule_out_parabolic(24, 7, 14, 2, 1));
  CHECK(rule_out_parabolic(24, 10, 10, 3, 4));
  CHECK(rule_out_parabolic_all_q(24, 7, 14));
  CHECK(rule_out_parabolic_all_q(24, 10, 10));
  CHECK_FALSE(rule_out_parabolic_all_q(24, 5, 10));
  CHECK_THROWS_AS(rule_out_parabolic(24, 25, 0, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(rule_out_parabolic(24, 12, 24, 2, 1), std::invalid_argument);
}

TEST_CASE("primitive prime divisors against trial division")
{
  auto trial_primes = [](std::uint64_t n) {
    std::vector<std::uint64_t> ps;
    for (std::uint64_t p = 2; p * p <= n; ++p)
      if (n % p == 0) {
        ps.push_back(p);
        while (n % p == 0)
          n /= p;
      }
    if (n > 1)
      ps.push_back(n);
    return ps;
  };
  for (std::uint64_t q = 2; q <= 16; ++q)
    for (unsigned n = 2; n <= 8; ++n) {
      std::uint64_t qn = 1;
      for (unsigned i = 0; i < n; ++i)
        qn *= q;
      std::vector<BigInt> want;
      for (auto p : trial_primes(qn - 1)) {
        bool primitive = true;
        std::uint64_t qi = 1;
        for (unsigned i = 1; i < n; ++i) {
          qi *= q;
          primitive = primitive && (qi - 1) % p != 0;
        }
        if (primitive)
          want.push_back(BigInt(p));
      }
      if (want.empty() && !((q == 2 && n == 6) || (n == 2 && ((q + 1) & q) == 0))) {
        CHECK_THROWS_AS(ppd(BigInt(q), n), std::logic_error); // q not a prime power
        continue;
      }
      auto r = ppd(BigInt(q), n);
      CHECK(r.primes == want);
      CHECK(r.exception_reason.has_value() == want.empty());
    }
  CHECK(ppd(BigInt(2), 6).exception_reason == "zsigmondy_26");
  CHECK(ppd(BigInt(7), 2).exception_reason == "mersenne_like_n2");
}

TEST_CASE("factor_integer and primality")
{
  for (std::uint64_t n = 1; n < 3000; ++n) {
    BigInt prod = 1;
    for (auto const &[p, e] : factor_integer(BigInt(n))) {
      CHECK(is_prime_u64(static_cast<std::uint64_t>(p)));
      prod *= ipow(p, e);
    }
    CHECK(prod == n);
  }
  BigInt big = BigInt("1000000007") * BigInt("998244353") * BigInt(1 << 20);
  auto f = factor_integer(big);
  CHECK(f.size() == 3);
  CHECK(f[BigInt(2)] == 20);
  CHECK(is_probable_prime(BigInt("170141183460469231731687303715884105727")));
  CHECK_FALSE(is_probable_prime(BigInt("3215031751")));
  CHECK(multiplicative_order(BigInt(2), BigInt(7)) == 3);
}

TEST_CASE("cyclotomic polynomials")
{
  for (unsigned n = 1; n <= 30; ++n) {
    Poly prod = Poly::constant(1);
    for (unsigned d = 1; d <= n; ++d)
      if (n % d == 0)
        prod = prod * Poly::cyclotomic(d);
    CHECK(prod == Poly::monomial(n) - Poly::constant(1));
    CHECK(Poly::cyclotomic(n).degree() == static_cast<int>(totient(n)));
  }
  auto f = FactoredPolynomial::parse("q^7*(q^2+q+1)*(q+1)");
  CHECK(f.to_string() == "q^7*(q^2+q+1)*(q+1)");
  CHECK(FactoredPolynomial::factor(f.expand()) == f);
  CHECK_THROWS_AS(FactoredPolynomial::factor(Poly({BigInt(1), BigInt(0), BigInt(1), BigInt(1)})), std::domain_error);
}
