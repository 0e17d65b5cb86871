#include "doctest.h"

#include <set>

#include "oracles.hpp"
#include "weylkit/rng.hpp"
#include "weylkit/weyl.hpp"

using namespace weylkit;

namespace {

IntMatrix mul(IntMatrix const &a, IntMatrix const &b)
{
  std::size_t n = a.size();
  IntMatrix r(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j)
        r[i][j] += a[i][k] * b[k][j];
  return r;
}

IntVec neg(IntVec v)
{
  for (auto &x : v)
    x = -x;
  return v;
}

IntVec simple(int rank, int i)
{
  IntVec v(static_cast<std::size_t>(rank), 0);
  v[static_cast<std::size_t>(i - 1)] = 1;
  return v;
}

} // namespace

TEST_CASE("root counts")
{
  CHECK(RootSystem::of("G2").size() == 12);
  CHECK(RootSystem::of("A3").size() == 12);
  CHECK(RootSystem::of("B3").size() == 18);
  CHECK(RootSystem::of("D4").size() == 24);
  CHECK(RootSystem::of("F4").size() == 48);
  CHECK(RootSystem::of("E6").size() == 72);
  auto F4 = RootSystem::of("F4");
  CHECK(F4.highest_root() == IntVec{2, 3, 4, 2});
  for (std::size_t k = 0; k < F4.size(); ++k)
    CHECK(F4.root(F4.negative_of(k)) == neg(F4.root(k)));
  CHECK_THROWS_AS(F4.index_of({1, 1, 1, 1, 1}), std::invalid_argument);
  CHECK_THROWS(RootSystem::of("Q7"));
}

TEST_CASE("Weyl group orders agree with brute closure")
{
  for (auto [label, order] : {std::pair{"G2", 12}, {"A3", 24}, {"B3", 48}, {"C3", 48}, {"D4", 192}, {"F4", 1152}}) {
    auto W = WeylGroup::of(label);
    CHECK(W.group().order() == order);
    CHECK(oracle::closure(W.degree(), W.simple_reflections()).size() == static_cast<std::size_t>(order));
  }
  CHECK(WeylGroup::of("E6").group().order() == 51840);
}

TEST_CASE("words, lengths and reduced words")
{
  auto G2 = WeylGroup::of("G2");
  for (auto const &w : G2.group().elements()) {
    auto word = G2.element_to_word(w);
    CHECK(word.size() == G2.length(w));
    CHECK(G2.word_to_element(word) == w);
  }
  CHECK(G2.word_to_element("").is_identity());
  CHECK(G2.word_to_element("11").is_identity());
  CHECK_THROWS(G2.word_to_element("13"));

  CounterRng rng(11);
  for (char const *label : {"F4", "E6"}) {
    auto W = WeylGroup::of(label);
    for (int k = 0; k < 300; ++k) {
      Perm w = W.group().random_element(rng);
      auto word = W.element_to_word(w);
      CHECK(word.size() == W.length(w));
      CHECK(W.word_to_element(word) == w);
    }
    Perm w0 = W.longest_element();
    CHECK(W.length(w0) == W.system().positive_count());
    CHECK((w0 * w0).is_identity());
  }
}

TEST_CASE("longest elements and diagram automorphisms")
{
  auto F4 = WeylGroup::of("F4");
  Perm w0 = F4.longest_element();
  for (auto const &r : F4.system().roots())
    CHECK(F4.image(r, w0) == neg(r));

  auto E6 = WeylGroup::of("E6");
  Perm e0 = E6.longest_element();
  auto a = [](int i) { return simple(6, i); };
  CHECK(E6.image(a(1), e0) == neg(a(6)));
  CHECK(E6.image(a(3), e0) == neg(a(5)));
  CHECK(E6.image(a(2), e0) == neg(a(2)));
  CHECK(E6.image(a(4), e0) == neg(a(4)));

  Perm tau = E6.extend_diagram_automorphism({5, 1, 4, 3, 2, 0});
  CHECK_FALSE(E6.group().contains(tau));
  CHECK(E6.group().conjugate(tau).same_group(E6.group()));
  for (auto const &r : E6.system().roots())
    CHECK(E6.image(r, e0 * tau) == neg(r));
  CHECK(E6.extend_diagram_automorphism({0, 1, 2, 3, 4, 5}).is_identity());
  CHECK_THROWS(E6.extend_diagram_automorphism({1, 0, 2, 3, 4, 5}));
}

TEST_CASE("matrices: homomorphism, pairing invariance and round trip")
{
  CounterRng rng(5);
  for (char const *label : {"G2", "B3", "F4", "E6"}) {
    auto W = WeylGroup::of(label);
    auto const &sys = W.system();
    for (int k = 0; k < 40; ++k) {
      Perm x = W.group().random_element(rng), y = W.group().random_element(rng);
      CHECK(W.root_matrix(x * y) == mul(W.root_matrix(x), W.root_matrix(y)));
      CHECK(W.coroot_matrix(x * y) == mul(W.coroot_matrix(x), W.coroot_matrix(y)));
      CHECK(W.from_root_matrix(W.root_matrix(x)) == x);
      // W preserves the form
      std::size_t i = rng.next() % sys.size(), j = rng.next() % sys.size();
      CHECK(sys.inner(W.image(sys.root(i), x), W.image(sys.root(j), x)) == sys.inner(sys.root(i), sys.root(j)));
    }
    // coroot action is the transpose inverse of the root action under the Cartan pairing
    auto const &C = sys.datum().cartan;
    std::size_t const l = C.size();
    for (auto const &s : W.simple_reflections()) {
      IntMatrix R = W.root_matrix(s), K = W.coroot_matrix(s);
      // <alpha_j^w, (alpha_i^vee)^w> = <alpha_j, alpha_i^vee>
      for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j) {
          long v = 0;
          for (std::size_t a = 0; a < l; ++a)
            for (std::size_t b = 0; b < l; ++b)
              v += R[j][a] * C[b][a] * K[i][b];
          CHECK(v == C[i][j]);
        }
    }
  }
}

TEST_CASE("the E6 word has order 3 and a centralizer of order 648")
{
  auto E6 = WeylGroup::of("E6");
  Perm w = E6.word_to_element("123142314542314565423456");
  CHECK(w.order() == 3);
  std::size_t brute = 0;
  E6.group().for_each_element([&](Perm const &g) { brute += (g * w == w * g) ? 1 : 0; });
  CHECK(brute == 648);
  CHECK(centralizer(E6.group(), w).order() == 648);
}

TEST_CASE("relative Weyl groups stabilize the base")
{
  auto W = WeylGroup::of("E6");
  auto delta = closed_subsystem(W.system(), {simple(6, 2), simple(6, 3), simple(6, 4), simple(6, 5)});
  CHECK(delta.members.size() == 24);
  CHECK(delta.component_types == std::vector<std::string>{"D4"});
  auto R = relative_weyl_group(W, delta);
  CHECK(R.group.order() == 6);
  std::set<std::size_t> base(delta.simple_roots.begin(), delta.simple_roots.end());
  std::set<std::size_t> members(delta.members.begin(), delta.members.end());
  for (auto const &g : R.group.generators()) {
    std::set<std::size_t> b2, m2;
    for (auto k : base)
      b2.insert(g[static_cast<Point>(k)]);
    for (auto k : members)
      m2.insert(g[static_cast<Point>(k)]);
    CHECK(b2 == base);
    CHECK(m2 == members);
  }
  CHECK(reflection_subgroup(W, delta).order() == 192);
}

TEST_CASE("Cartan type identification")
{
  for (char const *label : {"A3", "B3", "C3", "D4", "G2", "F4", "E6"})
    CHECK(identify_cartan_type(CartanDatum::of(label).cartan) == label);
}
