#include "doctest.h"

#include <map>
#include <numeric>
#include <set>

#include "weylkit/cosetgraph.hpp"
#include "weylkit/rng.hpp"

using namespace weylkit;

namespace {

// H-orbits on all s-arcs, enumerated as vertex sequences.
std::size_t all_arc_orbits(CosetDigraph const &G, unsigned s)
{
  std::vector<std::vector<std::size_t>> arcs;
  for (std::size_t v = 0; v < G.vertex_count(); ++v)
    arcs.push_back({v});
  for (unsigned i = 0; i < s; ++i) {
    std::vector<std::vector<std::size_t>> next;
    for (auto const &a : arcs)
      for (auto w : G.out_neighbours(a.back())) {
        auto b = a;
        b.push_back(w);
        next.push_back(b);
      }
    arcs = std::move(next);
  }
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t k = 0; k < arcs.size(); ++k)
    index[arcs[k]] = k;
  std::vector<std::size_t> parent(arcs.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t orbits = arcs.size();
  for (auto const &g : G.H().generators()) {
    Perm act = G.vertex_action(g);
    for (std::size_t k = 0; k < arcs.size(); ++k) {
      auto img = arcs[k];
      for (auto &v : img)
        v = act[static_cast<Point>(v)];
      auto a = find(k), b = find(index.at(img));
      if (a != b) {
        parent[a] = b;
        --orbits;
      }
    }
  }
  return orbits;
}

} // namespace

TEST_CASE("directed cycles")
{
  for (unsigned n : {3u, 5u, 7u, 8u}) {
    auto G = directed_cycle(n);
    CHECK(G.vertex_count() == n);
    CHECK(G.valency() == 1);
    CHECK(G.connected());
    for (unsigned s = 1; s <= 10; ++s)
      CHECK(s_arc_transitive(G, s).transitive);
    auto a = divisibility_audit(G, 3);
    CHECK(a.holds);
    CHECK(a.lhs == 1);
    CHECK(normalized_subgroup_probe(G).empty());
  }
  CHECK(directed_cycle(7).vertex_primitive() == true);
  CHECK(directed_cycle(8).vertex_primitive() == false);
}

TEST_CASE("Paley tournament on 7 points")
{
  auto P = paley_digraph(7);
  CHECK(P.vertex_count() == 7);
  CHECK(P.H().order() == 21);
  CHECK(P.valency() == 3);
  CHECK(s_arc_transitive(P, 1).transitive);
  auto r2 = s_arc_transitive(P, 2);
  CHECK_FALSE(r2.transitive);
  CHECK(r2.orbit_count == 3);
  CHECK(r2.arc_count == 63);
  CHECK(normalized_subgroup_probe(P).empty());
  CHECK(P.vertex_primitive() == true);
  CHECK_THROWS_AS(divisibility_audit(P, 2), std::invalid_argument);
  CHECK_THROWS_AS(paley_digraph(13), std::invalid_argument);
}

TEST_CASE("construction errors")
{
  auto S3 = PermGroup::symmetric(3);
  // an involution is self-paired
  CHECK_THROWS_AS(CosetDigraph(S3, PermGroup::trivial(3), Perm::from_cycles(3, "(1,2)")), std::invalid_argument);
  // h in Hv
  auto Hv = PermGroup(3, {Perm::from_cycles(3, "(1,2)")});
  CHECK_THROWS_AS(CosetDigraph(S3, Hv, Perm::from_cycles(3, "(1,2)")), std::invalid_argument);
  // Hv not in H
  auto C3 = PermGroup::cyclic(3);
  CHECK_THROWS_AS(CosetDigraph(C3, Hv, Perm::from_cycles(3, "(1,2,3)")), std::invalid_argument);
}

TEST_CASE("corpus: structure, criterion against independent orbit counts")
{
  auto corpus = digraph_corpus();
  CHECK(corpus.size() >= 20);
  CounterRng rng(4);
  bool saw_two_arc = false;
  for (auto const &[name, G] : corpus) {
    CAPTURE(name);
    // arcs are well defined on cosets and in/out valencies agree
    for (int k = 0; k < 5; ++k) {
      std::size_t v = rng.next() % G.vertex_count();
      Perm u = G.Hv().random_element(rng);
      CHECK(G.vertex_of(u * G.rep(v)) == v);
      CHECK(G.out_neighbours(v).size() == G.valency());
      CHECK(G.in_neighbours(v).size() == G.valency());
    }
    CHECK(G.Hv().order() % G.valency() == 0);
    bool prev = true;
    for (unsigned s = 1; s <= 3; ++s) {
      auto r = s_arc_transitive(G, s);
      CHECK((prev || !r.transitive));
      prev = r.transitive;
      if (r.arc_count <= 20000)
        CHECK((all_arc_orbits(G, s) == 1) == r.transitive);
      if (r.transitive) {
        auto a = divisibility_audit(G, s);
        CHECK(a.holds);
        CHECK(a.valency_power_divides);
      }
      if (s == 2 && r.transitive && G.valency() >= 2)
        saw_two_arc = true;
    }
    if (G.connected())
      CHECK(normalized_subgroup_probe(G).empty());
    auto d = G.valency_dichotomy_holds();
    CHECK((!d || *d));
  }
  CHECK(saw_two_arc);
}

TEST_CASE("negative control for the probe")
{
  PermGroup H(9, {Perm::from_cycles(9, "(1,2,3)"), Perm::from_cycles(9, "(4,5,6)"), Perm::from_cycles(9, "(7,8,9)")});
  CosetDigraph N(H, PermGroup(9, {Perm::from_cycles(9, "(1,2,3)")}), Perm::from_cycles(9, "(4,5,6)"));
  CHECK_FALSE(N.connected());
  CHECK_FALSE(N.core_free());
  CHECK(normalized_subgroup_probe(N).size() == 1);
}

TEST_CASE("eliminate")
{
  auto r = eliminate(BigInt(21), BigInt(1), BigInt(3), 2);
  CHECK(r.witnesses == std::vector<BigInt>{7});
  CHECK(r.s_bound == 2u);
  auto r1 = eliminate(BigInt(21), BigInt(3), BigInt(1), 1);
  CHECK(r1.witnesses == std::vector<BigInt>{7});
  CHECK(r1.s_bound == 1u);
  auto none = eliminate(BigInt(9), BigInt(3), BigInt(1), 2);
  CHECK(none.witnesses.empty());
  CHECK_FALSE(none.s_bound);
  CHECK_THROWS_AS(eliminate(BigInt(1), BigInt(1), BigInt(1), 2), std::invalid_argument);
  CHECK_THROWS_AS(eliminate(BigInt(6), BigInt(1), BigInt(1), 3), std::invalid_argument);
}
