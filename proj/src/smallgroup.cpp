#include "weylkit/smallgroup.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <unordered_set>

namespace weylkit {

std::size_t ElementSet::count() const
{
  std::size_t c = 0;
  for (auto w : _w)
    c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::vector<std::uint32_t> ElementSet::members() const
{
  std::vector<std::uint32_t> out;
  for (std::size_t k = 0; k < _w.size(); ++k) {
    std::uint64_t w = _w[k];
    while (w) {
      out.push_back(static_cast<std::uint32_t>(k * 64 + static_cast<std::size_t>(std::countr_zero(w))));
      w &= w - 1;
    }
  }
  return out;
}

bool ElementSet::subset_of(ElementSet const &o) const
{
  for (std::size_t k = 0; k < _w.size(); ++k)
    if (_w[k] & ~o._w[k])
      return false;
  return true;
}

std::size_t ElementSet::hash() const noexcept
{
  std::uint64_t h = 0x84222325cbf29ce4ull;
  for (auto w : _w) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

SmallGroup::SmallGroup(PermGroup const &G, std::size_t cap) : _group(G)
{
  if (G.order() > BigInt(cap))
    throw CapExceeded("SmallGroup: order " + G.order().str() + " above table cap");
  _elts = G.elements(cap);
  // identity first, rest in sorted order for determinism
  std::sort(_elts.begin(), _elts.end());
  auto id = std::find(_elts.begin(), _elts.end(), G.identity());
  std::rotate(_elts.begin(), id, id + 1);
  std::size_t const n = _elts.size();
  for (std::size_t i = 0; i < n; ++i)
    _index.emplace(_elts[i], static_cast<std::uint32_t>(i));
  _table.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      _table[a * n + b] = _index.at(_elts[a] * _elts[b]);
  _inv.resize(n);
  _ord.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    _inv[a] = _index.at(_elts[a].inverse());
    _ord[a] = static_cast<std::uint32_t>(_elts[a].order());
  }
  for (auto const &g : G.generators())
    _gen_idx.push_back(_index.at(g));
}

std::uint32_t SmallGroup::index_of(Perm const &g) const
{
  auto it = _index.find(g);
  if (it == _index.end())
    throw std::invalid_argument("element not in group");
  return it->second;
}

ElementSet SmallGroup::closure(std::vector<std::uint32_t> const &gens) const
{
  ElementSet acc(order());
  acc.set(0);
  for (auto g : gens)
    acc = extend(acc, g);
  return acc;
}

ElementSet SmallGroup::extend(ElementSet const &U, std::uint32_t g) const
{
  if (U.test(g))
    return U;
  // new subgroup is generated by the members of U together with g; grow by
  // right multiplication with the generator list until closed
  std::vector<std::uint32_t> gens = U.members();
  gens.push_back(g);
  ElementSet R(order());
  std::vector<std::uint32_t> list = U.members();
  for (auto x : list)
    R.set(x);
  for (std::size_t k = 0; k < list.size(); ++k)
    for (auto s : gens) {
      std::uint32_t y = mul(list[k], s);
      if (!R.test(y)) {
        R.set(y);
        list.push_back(y);
      }
    }
  return R;
}

ElementSet SmallGroup::conjugate(ElementSet const &U, std::uint32_t x) const
{
  ElementSet R(order());
  for (auto a : U.members())
    R.set(conj(a, x));
  return R;
}

ElementSet SmallGroup::normalizer(ElementSet const &U) const
{
  auto mem = U.members();
  ElementSet N(order());
  for (std::uint32_t g = 0; g < order(); ++g) {
    bool ok = true;
    for (auto a : mem)
      if (!U.test(conj(a, g))) {
        ok = false;
        break;
      }
    if (ok)
      N.set(g);
  }
  return N;
}

std::size_t SmallGroup::centralizer_order(std::uint32_t a) const
{
  std::size_t c = 0;
  for (std::uint32_t g = 0; g < order(); ++g)
    c += (mul(a, g) == mul(g, a));
  return c;
}

namespace {

// Greedy generating set: repeatedly add the member whose adjunction
// gives the largest subgroup.
std::vector<std::uint32_t> small_generating_set(SmallGroup const &T, ElementSet const &U)
{
  std::vector<std::uint32_t> gens;
  ElementSet cur = T.closure({});
  std::size_t const target = U.count();
  auto mem = U.members();
  while (cur.count() < target) {
    std::uint32_t best = 0;
    std::size_t best_size = 0;
    ElementSet best_set;
    for (auto g : mem) {
      if (cur.test(g))
        continue;
      ElementSet e = T.extend(cur, g);
      if (e.count() > best_size) {
        best_size = e.count();
        best = g;
        best_set = std::move(e);
        if (best_size == target)
          break;
      }
    }
    gens.push_back(best);
    cur = std::move(best_set);
  }
  return gens;
}

} // namespace

PermGroup SmallGroup::to_perm_group(ElementSet const &U) const
{
  std::vector<Perm> gens;
  for (auto g : small_generating_set(*this, U))
    gens.push_back(_elts[g]);
  return PermGroup(_group.degree(), std::move(gens));
}

std::vector<SubgroupClass> subgroup_classes(SmallGroup const &T)
{
  bool const solvable = is_solvable(T.group());
  std::size_t const n = T.order();
  if (solvable ? n > kSolvableSubgroupCap : n > kBruteSubgroupCap)
    throw CapExceeded("subgroup enumeration: order " + std::to_string(n) + " above cap");

  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<SubgroupClass> classes;

  auto register_class = [&](ElementSet const &U) {
    std::vector<ElementSet> orbit{U};
    seen.insert(U);
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (auto x : T.generators()) {
        ElementSet c = T.conjugate(orbit[k], x);
        if (seen.insert(c).second)
          orbit.push_back(std::move(c));
      }
    classes.push_back({U, U.count(), orbit.size()});
  };

  register_class(T.closure({}));
  for (std::size_t ci = 0; ci < classes.size(); ++ci) {
    ElementSet const V = classes[ci].rep;
    ElementSet pool = solvable ? T.normalizer(V) : T.closure(T.generators());
    ElementSet covered = V;
    for (std::uint32_t g = 0; g < n; ++g) {
      if (!pool.test(g) || covered.test(g))
        continue;
      if (solvable) {
        // g must have prime order modulo V
        std::uint32_t k = 1, x = g;
        while (!V.test(x)) {
          x = T.mul(x, g);
          ++k;
        }
        if (!is_prime_u64(k))
          continue;
      }
      ElementSet U = T.extend(V, g);
      if (solvable)
        for (auto u : U.members())
          covered.set(u);
      else
        covered.set(g);
      if (!seen.count(U))
        register_class(U);
    }
  }
  std::stable_sort(classes.begin(), classes.end(),
                   [](SubgroupClass const &a, SubgroupClass const &b) { return a.order < b.order; });
  return classes;
}

std::vector<SubgroupRecord> enumerate_subgroups(PermGroup const &G, std::uint64_t order_multiple_of)
{
  if (order_multiple_of == 0)
    throw std::invalid_argument("enumerate_subgroups: order multiple must be positive");
  if (G.order() > BigInt(kSolvableSubgroupCap))
    throw CapExceeded("subgroup enumeration: order " + G.order().str() + " above cap");
  SmallGroup T(G);
  std::vector<SubgroupRecord> out;
  for (auto const &c : subgroup_classes(T)) {
    if (c.order % order_multiple_of != 0)
      continue;
    SubgroupRecord r{T.to_perm_group(c.rep), {}};
    r.tags["order"] = std::to_string(c.order);
    r.tags["class_size"] = std::to_string(c.class_size);
    out.push_back(std::move(r));
  }
  return out;
}

// ---------------------------------------------------------------------------
// isomorphism

namespace {

std::vector<std::uint64_t> element_keys(SmallGroup const &T)
{
  std::vector<std::uint64_t> k(T.order());
  for (std::uint32_t a = 0; a < T.order(); ++a) {
    // order, centralizer order, order of the square's centralizer
    std::uint32_t sq = T.mul(a, a);
    k[a] = (std::uint64_t(T.element_order(a)) << 40) | (std::uint64_t(T.centralizer_order(a)) << 20) |
           std::uint64_t(T.centralizer_order(sq));
  }
  return k;
}

} // namespace

bool small_group_isomorphic(PermGroup const &G, PermGroup const &H)
{
  if (G.order() != H.order())
    return false;
  if (G.order() > BigInt(kIsomorphismCap))
    throw CapExceeded("isomorphism test: order above cap");
  SmallGroup A(G, kIsomorphismCap), B(H, kIsomorphismCap);
  std::size_t const n = A.order();
  auto ka = element_keys(A), kb = element_keys(B);
  {
    auto sa = ka, sb = kb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb)
      return false;
  }
  if (n == 1)
    return true;
  auto gens = small_generating_set(A, A.closure(A.generators()));
  std::size_t const r = gens.size();

  std::vector<std::vector<std::uint32_t>> cand(r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::uint32_t b = 0; b < n; ++b)
      if (kb[b] == ka[gens[i]])
        cand[i].push_back(b);

  std::vector<std::uint32_t> img(r);
  // Builds the map on <gens[0..k]> by breadth-first words; returns false on
  // inconsistency or loss of injectivity.
  auto consistent = [&](std::size_t k) {
    std::vector<std::int64_t> phi(n, -1);
    std::vector<char> used(n, 0);
    phi[0] = 0;
    used[0] = 1;
    std::vector<std::uint32_t> list{0};
    for (std::size_t t = 0; t < list.size(); ++t)
      for (std::size_t i = 0; i <= k; ++i) {
        std::uint32_t x = A.mul(list[t], gens[i]);
        std::uint32_t y = B.mul(static_cast<std::uint32_t>(phi[list[t]]), img[i]);
        if (phi[x] < 0) {
          if (used[y])
            return false;
          phi[x] = y;
          used[y] = 1;
          list.push_back(x);
        } else if (phi[x] != y) {
          return false;
        }
      }
    return true;
  };

  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == r)
      return true;
    for (auto b : cand[i]) {
      img[i] = b;
      if (consistent(i) && rec(i + 1))
        return true;
    }
    return false;
  };
  // surjectivity follows from injectivity on a group of equal order
  return rec(0);
}

} // namespace weylkit
