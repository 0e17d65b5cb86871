#include "doctest.h"

#include <map>

#include "oracles.hpp"
#include "weylkit/smallgroup.hpp"

using namespace weylkit;

namespace {

PermGroup grp(std::size_t n, std::vector<char const *> gens)
{
  std::vector<Perm> g;
  for (auto s : gens)
    g.push_back(Perm::from_cycles(n, s));
  return PermGroup(n, g);
}

std::size_t total(std::vector<SubgroupRecord> const &rs)
{
  std::size_t t = 0;
  for (auto const &r : rs)
    t += std::stoul(r.tags.at("class_size"));
  return t;
}

} // namespace

TEST_CASE("subgroups of S4")
{
  auto S4 = PermGroup::symmetric(4);
  auto rs = enumerate_subgroups(S4, 1);
  CHECK(rs.size() == 11);
  CHECK(total(rs) == 30);
  CHECK(oracle::all_subgroups(4, S4.generators()).size() == 30);
  for (auto const &r : rs)
    CHECK(r.group.is_subgroup_of(S4));
}

TEST_CASE("subgroups of C6 with order a multiple of 2")
{
  auto rs = enumerate_subgroups(PermGroup::cyclic(6), 2);
  REQUIRE(rs.size() == 2);
  CHECK(rs[0].group.order() == 2);
  CHECK(rs[1].group.order() == 6);
}

TEST_CASE("enumeration matches brute closure by order")
{
  std::vector<PermGroup> corpus = {
      grp(8, {"(1,2,3,4)(5,6,7,8)", "(1,5)(2,8)(3,7)(4,6)"}),      // Q8-like regular
      grp(6, {"(1,2)", "(3,4)", "(5,6)"}),                         // C2^3
      grp(7, {"(1,2,3,4,5,6,7)", "(2,3,5)(4,7,6)"}),               // 7:3
      grp(5, {"(1,2,3,4,5)", "(2,3,5,4)"}),                        // 5:4
      grp(6, {"(1,2,3)", "(4,5,6)", "(1,4)(2,5)(3,6)"}),           // C3 wr C2
      PermGroup::alternating(5),                                   // non-solvable path
      grp(5, {"(1,2,3,4,5)", "(1,2)"}),                            // S5
  };
  for (auto const &G : corpus) {
    auto rs = enumerate_subgroups(G, 1);
    std::map<std::size_t, std::size_t> by_order, brute_by_order;
    for (auto const &r : rs)
      by_order[static_cast<std::size_t>(r.group.order())] += std::stoul(r.tags.at("class_size"));
    for (auto const &s : oracle::all_subgroups(G.degree(), G.generators()))
      brute_by_order[s.size()] += 1;
    CHECK(by_order == brute_by_order);
  }
}

TEST_CASE("small group isomorphism")
{
  auto C4 = grp(4, {"(1,2,3,4)"});
  auto V4 = grp(4, {"(1,2)(3,4)", "(1,3)(2,4)"});
  CHECK_FALSE(small_group_isomorphic(C4, V4));
  auto D8a = grp(4, {"(1,2,3,4)", "(1,3)"});
  auto D8b = grp(8, {"(1,2)(3,4)(5,6)(7,8)", "(2,3)(4,5)(6,7)(1,8)"});
  REQUIRE(D8b.order() == 8);
  CHECK(small_group_isomorphic(D8a, D8b));
  auto Q8 = grp(8, {"(1,2,3,4)(5,6,7,8)", "(1,5,3,7)(2,8,4,6)"});
  REQUIRE(Q8.order() == 8);
  CHECK_FALSE(small_group_isomorphic(D8a, Q8));
  CHECK(small_group_isomorphic(PermGroup::symmetric(4), PermGroup::symmetric(4).conjugate(Perm::from_cycles(4, "(1,3)"))));
  CHECK_FALSE(small_group_isomorphic(PermGroup::symmetric(4), grp(8, {"(1,2,3)(4,5,6)", "(1,2)(4,5)", "(7,8)", "(1,4)(2,5)(3,6)"})));
}
