#include "doctest.h"

#include <set>

#include "oracles.hpp"
#include "weylkit/permgroup.hpp"

using namespace weylkit;
using oracle::closure;

namespace {

Perm cyc(std::size_t n, char const *s) { return Perm::from_cycles(n, s); }

PermGroup grp(std::size_t n, std::vector<char const *> gens)
{
  std::vector<Perm> g;
  for (auto s : gens)
    g.push_back(cyc(n, s));
  return PermGroup(n, g);
}

} // namespace

TEST_CASE("perm parsing and arithmetic")
{
  Perm a = cyc(4, "(1,2,3)");
  Perm b = cyc(4, "(1,2)");
  // right action: 1 -> 2 under a, then 2 -> 1 under b
  CHECK((a * b)[0] == 0);
  CHECK((a * b).to_cycles() == "(2,3)");
  CHECK(a.order() == 3);
  CHECK(a.pow(3).is_identity());
  CHECK(a.pow(-1) == a.inverse());
  CHECK(Perm(4).to_cycles() == "()");
  CHECK_THROWS_AS(cyc(3, "(1,4)"), std::invalid_argument);
  CHECK_THROWS_AS(cyc(3, "(1,2"), std::invalid_argument);
  CHECK_THROWS_AS(cyc(3, "(1,1)"), std::invalid_argument);
  CHECK_THROWS_AS(Perm(std::vector<Point>{0, 0}), std::invalid_argument);
}

TEST_CASE("small orders")
{
  CHECK(grp(3, {"(1,2)", "(1,2,3)"}).order() == 6);
  CHECK(PermGroup::symmetric(6).order() == 720);
  CHECK(PermGroup::alternating(6).order() == 360);
  CHECK(PermGroup::cyclic(7).order() == 7);
  CHECK(PermGroup::trivial(5).order() == 1);
  auto s3 = grp(3, {"(1,2)", "(1,2,3)"});
  CHECK(s3.contains(cyc(3, "(1,3)")));
  auto a4 = PermGroup::alternating(4);
  CHECK_FALSE(a4.contains(cyc(4, "(1,2)")));
  CHECK_THROWS_AS(a4.contains(Perm(5)), std::invalid_argument);
}

TEST_CASE("chain order matches element closure")
{
  std::vector<PermGroup> corpus = {
      grp(8, {"(1,2,3,4)(5,6,7,8)", "(1,5)(2,8)(3,7)(4,6)"}),
      grp(7, {"(1,2,3,4,5,6,7)", "(2,3,5)(4,7,6)"}),
      grp(6, {"(1,2,3,4,5)", "(1,6)(2,5)"}),
      grp(9, {"(1,2,3)", "(4,5,6)", "(7,8,9)", "(1,4,7)(2,5,8)(3,6,9)"}),
      grp(10, {"(1,2)(3,4)", "(5,6,7)", "(8,9,10)", "(1,3)(2,4)"}),
      PermGroup::symmetric(6),
      grp(8, {"(1,2,3,4,5,6,7)", "(1,2)(3,6)"}),
  };
  for (auto const &G : corpus) {
    auto elts = closure(G.degree(), G.generators());
    CHECK(G.order() == elts.size());
    std::set<Perm> listed;
    G.for_each_element([&](Perm const &g) { listed.insert(g); });
    CHECK(listed.size() == elts.size());
    for (auto const &g : elts)
      CHECK(G.contains(g));
  }
}

TEST_CASE("base prefix is respected")
{
  auto G = PermGroup::symmetric(6);
  std::vector<Point> prefix{4, 2};
  auto Gb = G.with_base(prefix);
  auto b = Gb.base();
  REQUIRE(b.size() >= 2);
  CHECK(b[0] == 4);
  CHECK(b[1] == 2);
  CHECK(Gb.order() == 720);
}

TEST_CASE("intersection, centralizer, set stabilizer against brute force")
{
  auto A6 = PermGroup::alternating(6);
  auto stab = grp(6, {"(2,3,4,5,6)", "(2,3,4)"});
  auto exotic = grp(6, {"(1,2,3,4,5)", "(1,6)(2,5)"});
  REQUIRE(stab.order() == 60);
  REQUIRE(exotic.order() == 60);
  CHECK(stab.is_subgroup_of(A6));
  CHECK(exotic.is_subgroup_of(A6));
  auto I = intersection(stab, exotic);
  CHECK(I.order() == 10);
  auto es = closure(6, stab.generators());
  std::size_t brute = 0;
  for (auto const &g : es)
    brute += exotic.contains(g);
  CHECK(brute == 10);
  CHECK(I.is_subgroup_of(stab));
  CHECK(I.is_subgroup_of(exotic));
  CHECK(intersection(A6, A6).order() == 360);
  CHECK(intersection(grp(3, {"(1,2)"}), grp(3, {"(1,3)"})).order() == 1);

  auto G = grp(8, {"(1,2,3,4,5,6,7)", "(1,2)(3,6)"});
  auto elts = closure(8, G.generators());
  for (auto const &g : {elts[3], elts[17], elts[100]}) {
    auto C = centralizer(G, g);
    std::size_t n = 0;
    for (auto const &x : elts)
      n += (x * g == g * x);
    CHECK(C.order() == n);
  }
  CHECK(centralizer(G, Perm(8)).order() == G.order());

  std::vector<Point> pts{0, 3, 5};
  auto S = set_stabilizer(G, pts);
  std::size_t n = 0;
  for (auto const &x : elts) {
    std::set<Point> im;
    for (Point p : pts)
      im.insert(x[p]);
    n += (im == std::set<Point>(pts.begin(), pts.end()));
  }
  CHECK(S.order() == n);
  std::vector<Point> all{0, 1, 2, 3, 4, 5, 6, 7};
  CHECK(set_stabilizer(G, all).order() == G.order());
}

TEST_CASE("centralizer and set stabilizer in S7")
{
  auto G = PermGroup::symmetric(7);
  CHECK(centralizer(G, cyc(7, "(1,2,3)(4,5)")).order() == 12);
  CHECK(centralizer(G, cyc(7, "(1,2)(3,4)")).order() == 48);
  std::vector<Point> pts{1, 4};
  CHECK(set_stabilizer(G, pts).order() == 240);
}

TEST_CASE("sylow subgroups")
{
  auto S4 = PermGroup::symmetric(4);
  auto P = sylow(S4, 2);
  CHECK(P.order() == 8);
  CHECK(is_p_group(P, 2));
  auto S7 = PermGroup::symmetric(7);
  CHECK(sylow(S7, 2).order() == 16);
  CHECK(sylow(S7, 3).order() == 9);
  CHECK(sylow(S7, 7).order() == 7);
  CHECK(sylow(S7, 11).order() == 1);
  CHECK_THROWS_AS(sylow(S7, 4), std::invalid_argument);
}

TEST_CASE("derived series and normal closure")
{
  CHECK(derived_subgroup(PermGroup::symmetric(4)).order() == 12);
  CHECK(derived_subgroup(PermGroup::alternating(4)).order() == 4);
  CHECK(is_solvable(PermGroup::symmetric(4)));
  CHECK_FALSE(is_solvable(PermGroup::alternating(5)));
  auto S5 = PermGroup::symmetric(5);
  CHECK(normal_closure(S5, {cyc(5, "(1,2,3)")}).order() == 60);
  CHECK(conjugacy_class_reps(S5).size() == 7);
}
