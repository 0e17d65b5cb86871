#include "doctest.h"

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "weylkit/facto.hpp"
#include "weylkit/io.hpp"
#include "weylkit/rng.hpp"

using namespace weylkit;

namespace {

using ESet = std::set<Perm>;

ESet conj(ESet const &A, Perm const &x)
{
  ESet r;
  for (auto const &a : A)
    r.insert(x.inverse() * a * x);
  return r;
}

// Unordered pairs of distinct conjugacy classes of subgroups {A, B} with G = AB,
// counted by element products.
std::size_t brute_factorization_pairs(std::size_t degree, std::vector<Perm> const &gens)
{
  auto elts = oracle::closure(degree, gens);
  auto subs = oracle::all_subgroups(degree, gens);
  std::vector<ESet> reps;
  std::set<ESet> covered;
  for (auto const &S : subs) {
    if (covered.count(S))
      continue;
    reps.push_back(S);
    for (auto const &x : elts)
      covered.insert(conj(S, x));
  }
  std::size_t count = 0;
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j) {
      std::set<Perm> prod;
      for (auto const &a : reps[i])
        for (auto const &b : reps[j])
          prod.insert(a * b);
      count += prod.size() == elts.size() ? 1 : 0;
    }
  return count;
}

PermGroup from_set(std::size_t degree, ESet const &S) { return PermGroup(degree, std::vector<Perm>(S.begin(), S.end())); }

} // namespace

TEST_CASE("factorizations of small groups match a brute double loop")
{
  for (auto const &G : {PermGroup::symmetric(4), PermGroup::alternating(4), PermGroup::symmetric(3),
                        PermGroup(4, {Perm::from_cycles(4, "(1,2,3,4)"), Perm::from_cycles(4, "(1,3)")})}) {
    auto recs = search_factorizations(G, 1);
    CHECK(recs.size() == brute_factorization_pairs(G.degree(), G.generators()));
    for (auto const &r : recs) {
      CHECK(r.H.order() * r.intersection_order == r.A.order() * r.B.order());
      CHECK(verify_factorization(G, r.B, r.A).has_value()); // symmetric
    }
  }
}

TEST_CASE("factorization is invariant under conjugating the factors")
{
  auto G = PermGroup::symmetric(5);
  CounterRng rng(8);
  auto recs = search_factorizations(G, 1);
  CHECK_FALSE(recs.empty());
  for (auto const &r : recs) {
    Perm x = G.random_element(rng), y = G.random_element(rng);
    auto again = verify_factorization(G, r.A.conjugate(x), r.B.conjugate(y));
    REQUIRE(again.has_value());
  }
  // a non-factorization stays one
  auto C5 = PermGroup(5, {Perm::from_cycles(5, "(1,2,3,4,5)")});
  auto S4 = PermGroup(5, {Perm::from_cycles(5, "(1,2,3,4)"), Perm::from_cycles(5, "(1,2)")});
  CHECK(verify_factorization(G, C5, S4).has_value());
  auto C3 = PermGroup(5, {Perm::from_cycles(5, "(1,2,3)")});
  CHECK_FALSE(verify_factorization(G, C3, S4).has_value());
  CHECK_THROWS_AS(verify_factorization(C5, C3, C5), std::invalid_argument);
}

TEST_CASE("spot factorizations")
{
  auto A6 = io::load_group(io::fixture_path("a6"));
  auto r = verify_factorization(A6, io::load_group(io::fixture_path("a5_point")),
                                io::load_group(io::fixture_path("a5_transitive")));
  REQUIRE(r);
  CHECK(r->intersection_order == 10);
  CHECK(r->proper);
  CHECK(r->homogeneity_tag() == "homogeneous");

  auto M11 = io::load_group(io::fixture_path("m11"));
  auto r2 = verify_factorization(M11, io::load_group(io::fixture_path("m11_11_5")),
                                 io::load_group(io::fixture_path("m11_m9_2")));
  REQUIRE(r2);
  CHECK(r2->intersection_order == 1);
  CHECK(r2->homogeneity_tag() == "not homogeneous");
}

TEST_CASE("Sylow 2 predicate")
{
  auto S4 = PermGroup::symmetric(4);
  auto D8 = PermGroup(4, {Perm::from_cycles(4, "(1,2,3,4)"), Perm::from_cycles(4, "(1,3)")});
  auto C4 = PermGroup(4, {Perm::from_cycles(4, "(1,2,3,4)")});
  CHECK(sylow2_isomorphic(S4, D8));
  CHECK_FALSE(sylow2_isomorphic(S4, C4));
  CHECK(sylow2_isomorphic(PermGroup::alternating(5), PermGroup::alternating(4)));
}

TEST_CASE("GU3(2) search")
{
  auto GU = io::load_group(io::fixture_path("gu32"));
  auto SU = io::load_group(io::fixture_path("su32"));
  CHECK(GU.order() == 648);
  CHECK(SU.order() == 216);
  CHECK(sylow(GU, 3).order() == 81);
  CHECK(sylow(GU, 2).order() == 8);
  auto recs = search_factorizations(GU, 8, sylow2_isomorphic);
  CHECK(recs.size() == 11);
  for (auto const &f : recs) {
    bool big = f.A.same_group(GU) || f.B.same_group(GU) || f.A.same_group(SU) || f.B.same_group(SU);
    CHECK(big);
  }
  // the outcome does not depend on the minimal order filter
  CHECK(search_factorizations(GU, 1, sylow2_isomorphic).size() == 11);
}
