#include "doctest.h"

#include <set>

#include "weylkit/io.hpp"
#include "weylkit/modrep.hpp"
#include "weylkit/parabolic.hpp"
#include "weylkit/rng.hpp"

using namespace weylkit;

namespace {

using IVec = std::vector<std::int64_t>;
using IMat = std::vector<IVec>;

// Plain mod-p row reduction; returns the rank.
std::size_t rank_mod(IMat rows, std::int64_t p)
{
  std::size_t r = 0, n = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] % p == 0)
      ++piv;
    if (piv == rows.size())
      continue;
    std::swap(rows[piv], rows[r]);
    std::int64_t inv = 1;
    while (rows[r][c] * inv % p != 1)
      ++inv;
    for (auto &x : rows[r])
      x = x * inv % p;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && rows[i][c] % p) {
        std::int64_t f = rows[i][c];
        for (std::size_t j = 0; j < n; ++j)
          rows[i][j] = ((rows[i][j] - f * rows[r][j]) % p + p) % p;
      }
    ++r;
  }
  return r;
}

// Dimension of the span of v under the generators, by repeated image closure.
std::size_t spin_dim(IVec const &v, std::vector<IMat> const &gens, std::int64_t p)
{
  IMat span{v};
  std::size_t dim = rank_mod(span, p);
  for (bool grew = true; grew;) {
    grew = false;
    IMat cur = span;
    for (auto const &u : cur)
      for (auto const &g : gens) {
        IVec w(u.size(), 0);
        for (std::size_t i = 0; i < u.size(); ++i)
          for (std::size_t j = 0; j < u.size(); ++j)
            w[j] = (w[j] + u[i] * g[i][j]) % p;
        span.push_back(w);
        std::size_t d = rank_mod(span, p);
        if (d > dim) {
          dim = d;
          grew = true;
        } else {
          span.pop_back();
        }
      }
  }
  return dim;
}

// Irreducible iff every nonzero vector spins to the whole space.
bool brute_irreducible(std::vector<IMat> const &gens, std::int64_t p)
{
  std::size_t const n = gens[0].size();
  IVec v(n, 0);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i)
    total *= static_cast<std::uint64_t>(p);
  for (std::uint64_t code = 1; code < total; ++code) {
    std::uint64_t c = code;
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = static_cast<std::int64_t>(c % static_cast<std::uint64_t>(p));
      c /= static_cast<std::uint64_t>(p);
    }
    if (spin_dim(v, gens, p) < n)
      return false;
  }
  return true;
}

IMat random_invertible(CounterRng &rng, std::size_t n, std::int64_t p)
{
  for (;;) {
    IMat m(n, IVec(n));
    for (auto &row : m)
      for (auto &x : row)
        x = static_cast<std::int64_t>(rng.next() % static_cast<std::uint64_t>(p));
    if (rank_mod(m, p) == n)
      return m;
  }
}

IntMatrix to_int(IMat const &m)
{
  IntMatrix r;
  for (auto const &row : m)
    r.emplace_back(row.begin(), row.end());
  return r;
}

std::int64_t entry(BigRational const &x) { return static_cast<std::int64_t>(numerator(x)); }

MatModule coroot(WeylGroup const &W, std::vector<Perm> const &elts, std::uint64_t field)
{
  std::vector<IntMatrix> mats;
  for (auto const &g : elts)
    mats.push_back(W.coroot_matrix(g));
  return make_module(field, mats);
}

} // namespace

TEST_CASE("prime field verdicts agree with brute spinning")
{
  CounterRng rng(2024);
  int reducible = 0, irreducible = 0;
  for (std::int64_t p : {2, 3, 5})
    for (std::size_t n = 1; n <= 4; ++n) {
      if (p == 5 && n == 4)
        continue; // keeps the brute oracle cheap
      for (int trial = 0; trial < 12; ++trial) {
        std::vector<IMat> gens;
        std::size_t ng = 1 + trial % 2;
        for (std::size_t g = 0; g < ng; ++g) {
          IMat m = random_invertible(rng, n, p);
          if (trial % 3 == 0 && n > 1) // block upper triangular, then conjugated
            for (std::size_t i = n / 2; i < n; ++i)
              for (std::size_t j = 0; j < n / 2; ++j)
                m[i][j] = 0;
          if (rank_mod(m, p) < n)
            m = random_invertible(rng, n, p);
          gens.push_back(m);
        }
        std::vector<IntMatrix> ig;
        for (auto const &g : gens)
          ig.push_back(to_int(g));
        MatModule M = make_module(static_cast<std::uint64_t>(p), ig);
        auto res = is_irreducible(M, static_cast<std::uint64_t>(trial));
        bool const truth = brute_irreducible(gens, p);
        REQUIRE(res.verdict != Verdict::inconclusive);
        CHECK(res.irreducible() == truth);
        CHECK(exhaustive_irreducible(M) == truth);
        if (res.witness) {
          // witness check by hand
          std::size_t const d = res.witness->basis.size();
          CHECK(d > 0);
          CHECK(d < n);
          IMat basis;
          for (auto const &b : res.witness->basis) {
            IVec row;
            for (auto const &x : b)
              row.push_back(entry(x));
            basis.push_back(row);
          }
          for (auto const &g : gens)
            for (auto const &b : basis) {
              IVec w(n, 0);
              for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                  w[j] = (w[j] + b[i] * g[i][j]) % p;
              IMat ext = basis;
              ext.push_back(w);
              CHECK(rank_mod(ext, p) == d);
            }
        }
        (truth ? irreducible : reducible)++;
      }
    }
  CHECK(reducible > 10);
  CHECK(irreducible > 10);
}

TEST_CASE("rational modules")
{
  auto F4 = WeylGroup::of("F4");
  auto V = coroot(F4, F4.group().generators(), 0);
  CHECK(is_irreducible(V).irreducible());
  CHECK(is_irreducible(reduce_mod(V, 3)).irreducible());
  CHECK(is_irreducible(reduce_mod(V, 5)).irreducible());
  auto r2 = is_irreducible(reduce_mod(V, 2));
  CHECK(r2.verdict == Verdict::reducible);
  REQUIRE(r2.witness);
  CHECK(is_invariant_subspace(reduce_mod(V, 2), r2.witness->basis));

  // base change by random invertible rational matrices
  CounterRng rng(77);
  for (int k = 0; k < 5; ++k) {
    RatMatrix x(4, RatVector(4));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        x[i][j] = BigRational(static_cast<long>(rng.next() % 7) - 3, 1 + static_cast<long>(rng.next() % 3));
    for (std::size_t i = 0; i < 4; ++i)
      x[i][i] += 10; // diagonally dominant, so invertible
    CHECK(is_irreducible(conjugate_module(V, x)).irreducible());
  }

  auto S3 = permutation_module(PermGroup::symmetric(3), 0);
  auto rs = is_irreducible(S3);
  CHECK(rs.verdict == Verdict::reducible);
  CHECK(fixed_vectors(S3) == 1);
  CHECK(commutant_dimension(S3) == 2);

  // rank-3 parabolic fixes a vector
  auto P = parabolic_datum(F4, {1, 2, 3});
  auto VP = coroot(F4, P.W_J.generators(), 0);
  CHECK(fixed_vectors(VP) >= 1);
  CHECK(is_irreducible(VP).verdict == Verdict::reducible);

  auto one = make_module(0, {IntMatrix{{-1}}});
  CHECK(is_irreducible(one).irreducible());
  CHECK(fixed_vectors(make_module(5, {IntMatrix{{1, 0}, {0, 1}}})) == 2);
}

TEST_CASE("restriction and validation")
{
  auto F4 = WeylGroup::of("F4");
  auto V = coroot(F4, F4.group().generators(), 0);
  std::vector<std::vector<int>> all;
  for (std::size_t i = 1; i <= V.generators.size(); ++i)
    all.push_back({static_cast<int>(i)});
  auto R = restriction(V, all);
  CHECK(R.generators == V.generators);
  auto inv = restriction(V, {{1, -1}, {}});
  CHECK(inv.generators[0] == inv.generators[1]);
  CHECK_THROWS_AS(restriction(V, {{99}}), std::invalid_argument);
  CHECK_THROWS_AS(make_module(5, {IntMatrix{{1, 0}, {0, 0}}}), std::invalid_argument);
  CHECK_THROWS_AS(make_module(4, {IntMatrix{{1}}}), std::invalid_argument);
}

TEST_CASE("chopping permutation modules")
{
  auto dims = [](std::vector<CompositionFactor> const &fs) {
    std::multiset<std::size_t> d;
    for (auto const &f : fs)
      d.insert(f.module.dimension);
    return d;
  };
  CHECK(dims(chop_permutation_module(PermGroup::symmetric(3), 5)) == std::multiset<std::size_t>{1, 2});
  CHECK(dims(chop_permutation_module(PermGroup::cyclic(2), 2)) == std::multiset<std::size_t>{1, 1});
  auto s4 = dims(chop_permutation_module(PermGroup::symmetric(4), 2));
  std::size_t sum = 0;
  for (auto d : s4)
    sum += d;
  CHECK(sum == 4);
  auto M12 = io::load_group(io::fixture_path("m12"));
  auto fs = chop_permutation_module(M12, 5);
  CHECK(dims(fs) == std::multiset<std::size_t>{1, 11});
  for (auto const &f : fs) {
    CHECK(is_irreducible(f.module).irreducible());
    std::vector<RatMatrix> mats;
    for (auto const &g : M12.generators())
      mats.push_back(permutation_matrix(g));
    CHECK(f.apply(mats).generators == f.module.generators);
  }
  CHECK_THROWS(chop_permutation_module(PermGroup::symmetric(3), 11));
}

TEST_CASE("module JSON round trip")
{
  auto m = make_module(7, {IntMatrix{{0, 1}, {6, 0}}});
  auto back = io::module_from_json(io::module_to_json(m));
  CHECK(back.field == 7);
  CHECK(back.generators == m.generators);
  auto q = make_module(0, {IntMatrix{{2, 0}, {0, 1}}});
  auto qi = restriction(q, {{-1}});
  auto back2 = io::module_from_json(io::module_to_json(qi));
  CHECK(back2.generators == qi.generators);
}
