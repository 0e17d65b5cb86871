#include "weylkit/cosetgraph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "weylkit/numtheory.hpp"
#include "weylkit/smallgroup.hpp"

namespace weylkit {

namespace {

std::vector<Point> all_points(std::size_t n)
{
  std::vector<Point> p(n);
  std::iota(p.begin(), p.end(), Point{0});
  return p;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x)
  {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b)
  {
    a = find(a);
    b = find(b);
    if (a == b)
      return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

// Orbit of `start` under permutations of {0..n-1}, sorted.
std::vector<std::size_t> orbit_of(std::size_t start, std::vector<Perm> const &gens)
{
  std::vector<std::size_t> orb{start};
  std::unordered_set<std::size_t> seen{start};
  for (std::size_t k = 0; k < orb.size(); ++k)
    for (auto const &g : gens) {
      std::size_t y = g[static_cast<Point>(orb[k])];
      if (seen.insert(y).second)
        orb.push_back(y);
    }
  std::sort(orb.begin(), orb.end());
  return orb;
}

} // namespace

CosetDigraph::CosetDigraph(PermGroup H, PermGroup Hv, Perm h)
    : _H(std::move(H)), _Hv(std::move(Hv)), _h(std::move(h))
{
  std::size_t const n = _H.degree();
  if (_Hv.degree() != n || _h.degree() != n)
    throw std::invalid_argument("coset digraph: degree mismatch");
  if (!_Hv.is_subgroup_of(_H))
    throw std::invalid_argument("coset digraph: Hv is not a subgroup of H");
  if (!_H.contains(_h))
    throw std::invalid_argument("coset digraph: h is not in H");
  if (_Hv.contains(_h))
    throw std::invalid_argument("coset digraph: h lies in Hv, so every vertex would carry a loop");
  BigInt const index = _H.order() / _Hv.order();
  if (index > BigInt(kCosetIndexCap))
    throw CapExceeded("coset digraph: index " + index.str() + " above cap");

  auto const pts = all_points(n);
  _chain = PermGroup(n, _Hv.generators(), pts);

  Perm const e = _H.identity();
  _reps.push_back(canonical(e));
  _index.emplace(_reps[0], 0);
  std::vector<std::vector<Point>> images(_H.generators().size());
  for (std::size_t k = 0; k < _reps.size(); ++k)
    for (std::size_t gi = 0; gi < _H.generators().size(); ++gi) {
      Perm y = canonical(_reps[k] * _H.generators()[gi]);
      auto [it, fresh] = _index.emplace(y, _reps.size());
      if (fresh)
        _reps.push_back(std::move(y));
      images[gi].push_back(static_cast<Point>(it->second));
    }
  if (BigInt(_reps.size()) != index)
    throw std::logic_error("coset digraph: vertex count differs from the index");
  for (auto &im : images)
    _gen_action.emplace_back(std::move(im));
  _vertex_group = PermGroup(_reps.size(), _gen_action);
  _core_free = _vertex_group.order() == _H.order();

  std::vector<Perm> hv_action;
  for (auto const &g : _Hv.generators())
    hv_action.push_back(vertex_action(g));
  _out0 = orbit_of(vertex_of(_h), hv_action);
  if (std::binary_search(_out0.begin(), _out0.end(), vertex_of(_h.inverse())))
    throw std::invalid_argument("coset digraph: h^-1 lies in Hv h Hv, the relation is not antisymmetric");

  auto gens = _Hv.generators();
  gens.push_back(_h);
  _connected = PermGroup(n, gens).order() == _H.order();
}

Perm CosetDigraph::canonical(Perm x) const
{
  // least element of Hv x, comparing images of 0, 1, ... in turn
  for (auto const &lv : _chain.levels()) {
    Point best = lv.base;
    for (Point t : lv.orbit)
      if (x[t] < x[best])
        best = t;
    if (best != lv.base)
      x = lv.rep(best) * x;
  }
  return x;
}

std::size_t CosetDigraph::vertex_of(Perm const &x) const
{
  auto it = _index.find(canonical(x));
  if (it == _index.end())
    throw std::invalid_argument("coset digraph: element is not in H");
  return it->second;
}

Perm CosetDigraph::vertex_action(Perm const &g) const
{
  std::vector<Point> im(_reps.size());
  for (std::size_t k = 0; k < _reps.size(); ++k)
    im[k] = static_cast<Point>(vertex_of(_reps[k] * g));
  return Perm(std::move(im));
}

std::vector<std::size_t> CosetDigraph::out_neighbours(std::size_t v) const
{
  std::vector<std::size_t> r;
  for (auto w : _out0)
    r.push_back(vertex_of(_reps[w] * _reps[v]));
  std::sort(r.begin(), r.end());
  return r;
}

std::vector<std::size_t> CosetDigraph::in_neighbours(std::size_t v) const
{
  std::vector<Perm> hv_action;
  for (auto const &g : _Hv.generators())
    hv_action.push_back(vertex_action(g));
  std::vector<std::size_t> r;
  for (auto w : orbit_of(vertex_of(_h.inverse()), hv_action))
    r.push_back(vertex_of(_reps[w] * _reps[v]));
  std::sort(r.begin(), r.end());
  return r;
}

std::optional<bool> CosetDigraph::vertex_primitive() const
{
  std::size_t const n = _reps.size();
  if (n > kPrimitivityIndexCap)
    return std::nullopt;
  if (n <= 2)
    return true;
  // one b per Hv-orbit suffices: blocks through {0, b} and {0, b^k} are images
  std::vector<Perm> hv_action;
  for (auto const &g : _Hv.generators())
    hv_action.push_back(vertex_action(g));
  std::vector<bool> done(n, false);
  done[0] = true;
  for (std::size_t b = 1; b < n; ++b) {
    if (done[b])
      continue;
    for (auto x : orbit_of(b, hv_action))
      done[x] = true;
    UnionFind uf(n);
    std::vector<std::pair<std::size_t, std::size_t>> queue{{0, b}};
    uf.unite(0, b);
    std::size_t merged = 1;
    for (std::size_t k = 0; k < queue.size(); ++k) {
      auto [x, y] = queue[k];
      for (auto const &a : _gen_action) {
        std::size_t ax = a[static_cast<Point>(x)], ay = a[static_cast<Point>(y)];
        std::size_t rx = uf.find(ax), ry = uf.find(ay);
        if (rx != ry) {
          uf.unite(rx, ry);
          ++merged;
          queue.emplace_back(rx, ry);
        }
      }
    }
    if (merged + 1 < n)
      return false;
  }
  return true;
}

std::optional<bool> CosetDigraph::valency_dichotomy_holds() const
{
  auto prim = vertex_primitive();
  if (!prim)
    return std::nullopt;
  if (!*prim)
    return true;
  bool prime_cycle = valency() == 1 && is_prime_u64(_reps.size());
  return prime_cycle || valency() >= 3;
}

// ---------------------------------------------------------------------------

SArcReport s_arc_transitive(CosetDigraph const &G, unsigned s)
{
  if (s == 0)
    throw std::invalid_argument("s_arc_transitive: s must be at least 1");
  SArcReport r;
  r.s = s;
  r.arc_count = BigInt(G.vertex_count()) * ipow(BigInt(G.valency()), s);

  // stabilizer of v_i = Hv h^i is Hv^(h^i)
  std::vector<PermGroup> stab;
  Perm hp = G.H().identity();
  for (unsigned i = 0; i <= s; ++i) {
    stab.push_back(G.Hv().conjugate(hp));
    hp = hp * G.h();
  }
  // from0[i] = H_{v0..vi}, from1[i] = H_{v1..vi} (i >= 1)
  std::vector<PermGroup> from0{stab[0]}, from1{PermGroup(), stab[1]};
  for (unsigned i = 1; i <= s; ++i)
    from0.push_back(intersection(from0.back(), stab[i]));
  for (unsigned i = 2; i <= s; ++i)
    from1.push_back(intersection(from1.back(), stab[i]));
  for (auto const &g : from0)
    r.chain_orders.push_back(g.order());

  r.transitive = true;
  for (unsigned i = 1; i < s && r.transitive; ++i) {
    // H_{v1..vi} = H_{v0..vi} H_{v1..v(i+1)}, with intersection H_{v0..v(i+1)}
    BigInt const x = from1[i].order(), a = from0[i].order(), b = from1[i + 1].order();
    r.transitive = x * from0[i + 1].order() == a * b;
  }

  r.orbit_count = brute_arc_orbits(G, G.Hv(), s);
  if (r.orbit_count && (*r.orbit_count == 1) != r.transitive)
    throw std::logic_error("s-arc criterion disagrees with the brute orbit count");
  return r;
}

std::optional<std::size_t> brute_arc_orbits(CosetDigraph const &G, PermGroup const &K, unsigned s)
{
  std::size_t const val = G.valency();
  BigInt total = ipow(BigInt(val), s);
  if (total > BigInt(kBruteArcCap))
    return std::nullopt;
  std::size_t const count = static_cast<std::size_t>(total);
  if (!K.is_subgroup_of(G.Hv()))
    throw std::invalid_argument("brute_arc_orbits: K must fix the base vertex");

  std::unordered_map<std::size_t, std::vector<std::size_t>> out;
  auto out_of = [&](std::size_t v) -> std::vector<std::size_t> const & {
    auto it = out.find(v);
    if (it == out.end())
      it = out.emplace(v, G.out_neighbours(v)).first;
    return it->second;
  };
  auto decode = [&](std::size_t code) {
    std::vector<std::size_t> seq{0};
    std::vector<std::size_t> digits(s);
    for (unsigned i = s; i-- > 0;) {
      digits[i] = code % val;
      code /= val;
    }
    for (unsigned i = 0; i < s; ++i)
      seq.push_back(out_of(seq.back())[digits[i]]);
    return seq;
  };
  auto encode = [&](std::vector<std::size_t> const &seq) {
    std::size_t code = 0;
    for (unsigned i = 0; i < s; ++i) {
      auto const &o = out_of(seq[i]);
      auto it = std::lower_bound(o.begin(), o.end(), seq[i + 1]);
      if (it == o.end() || *it != seq[i + 1])
        throw std::logic_error("brute_arc_orbits: image is not an arc");
      code = code * val + static_cast<std::size_t>(it - o.begin());
    }
    return code;
  };

  std::vector<Perm> acts;
  for (auto const &g : K.generators())
    acts.push_back(G.vertex_action(g));
  UnionFind uf(count);
  std::size_t orbits = count;
  for (std::size_t c = 0; c < count; ++c) {
    auto seq = decode(c);
    for (auto const &a : acts) {
      std::vector<std::size_t> img;
      for (auto v : seq)
        img.push_back(a[static_cast<Point>(v)]);
      if (uf.unite(c, encode(img)))
        --orbits;
    }
  }
  return orbits;
}

DivisibilityAudit divisibility_audit(CosetDigraph const &G, unsigned s)
{
  if (!s_arc_transitive(G, s).transitive)
    throw std::invalid_argument("divisibility_audit: the digraph is not (H, s)-arc-transitive");
  DivisibilityAudit a;
  BigInt const hv = G.Hv().order();
  BigInt const huv = intersection(G.Hv(), G.Hv().conjugate(G.h())).order();
  a.lhs = ipow(hv, s - 1);
  a.rhs = ipow(huv, s);
  a.holds = a.rhs % a.lhs == 0;
  a.valency_power_divides = hv % ipow(BigInt(G.valency()), s) == 0;
  return a;
}

std::vector<NormalizedSubgroupViolation> normalized_subgroup_probe(CosetDigraph const &G)
{
  std::vector<NormalizedSubgroupViolation> out;
  if (G.Hv().order() == 1)
    return out;
  SmallGroup T(G.Hv());
  for (auto const &c : subgroup_classes(T)) {
    if (c.class_size != 1 || c.order == 1)
      continue;
    PermGroup N = T.to_perm_group(c.rep);
    if (N.conjugate(G.h()).same_group(N))
      out.push_back({std::move(N)});
  }
  return out;
}

EliminationResult eliminate(BigInt const &m, BigInt const &O_order, BigInt const &HL_order, unsigned cyclic_rank)
{
  if (m < 2 || O_order < 1 || HL_order < 1)
    throw std::invalid_argument("eliminate: need m >= 2, |O| >= 1 and |H/L| >= 1");
  if (cyclic_rank != 1 && cyclic_rank != 2)
    throw std::invalid_argument("eliminate: the cyclic part must have rank 1 or 2");
  EliminationResult r;
  for (auto const &[p, e] : factor_integer(m)) {
    (void)e;
    if (O_order % p != 0 && largest_ppart(HL_order, static_cast<std::uint64_t>(p)) < largest_ppart(m, static_cast<std::uint64_t>(p)))
      r.witnesses.push_back(p);
  }
  if (!r.witnesses.empty())
    r.s_bound = cyclic_rank == 2 ? 2u : 1u;
  return r;
}

// ---------------------------------------------------------------------------

CosetDigraph directed_cycle(unsigned n)
{
  PermGroup C = PermGroup::cyclic(n);
  return CosetDigraph(C, PermGroup::trivial(n), C.generators().front());
}

CosetDigraph paley_digraph(unsigned q)
{
  if (!is_prime_u64(q) || q % 4 != 3)
    throw std::invalid_argument("paley_digraph: q must be a prime congruent to 3 mod 4");
  std::uint64_t g = 2;
  while (multiplicative_order(BigInt(g), BigInt(q)) != q - 1)
    ++g;
  std::vector<Point> t(q), m(q);
  for (unsigned x = 0; x < q; ++x) {
    t[x] = static_cast<Point>((x + 1) % q);
    m[x] = static_cast<Point>(x * g * g % q);
  }
  Perm const trans(t), mult(m);
  PermGroup H(q, {trans, mult});
  PermGroup Hv(q, {mult});
  return CosetDigraph(H, Hv, trans);
}

namespace {

PermGroup group_of(std::size_t n, std::vector<std::string> const &cycles)
{
  std::vector<Perm> gens;
  for (auto const &c : cycles)
    gens.push_back(Perm::from_cycles(n, c));
  return PermGroup(n, gens);
}

// For every proper nontrivial subgroup class of H, up to `per_class` connected
// core-free digraphs with pairwise different out-neighbourhoods of the base.
void add_instances(std::string const &label, PermGroup const &H, std::size_t per_class,
                   std::vector<DigraphInstance> &out)
{
  SmallGroup T(H);
  for (auto const &c : subgroup_classes(T)) {
    if (c.order < 2 || c.order == T.order())
      continue;
    PermGroup const Hv = T.to_perm_group(c.rep);
    std::vector<std::vector<std::size_t>> seen;
    for (std::uint32_t x = 0; x < T.order() && seen.size() < per_class; ++x) {
      try {
        CosetDigraph G(H, Hv, T.element(x));
        if (!G.connected() || !G.core_free())
          continue;
        if (std::find(seen.begin(), seen.end(), G.out_neighbours_of_base()) != seen.end())
          continue;
        seen.push_back(G.out_neighbours_of_base());
        out.push_back({label + "/" + std::to_string(c.order) + "#" + std::to_string(out.size()), std::move(G)});
      } catch (std::invalid_argument const &) {
      }
    }
  }
}

} // namespace

std::vector<DigraphInstance> digraph_corpus()
{
  std::vector<DigraphInstance> out;
  for (unsigned p : {3u, 5u, 7u, 11u, 13u})
    out.push_back({"cycle" + std::to_string(p), directed_cycle(p)});
  for (unsigned n : {4u, 6u, 9u})
    out.push_back({"cycle" + std::to_string(n), directed_cycle(n)});
  for (unsigned q : {3u, 7u, 11u, 19u, 23u})
    out.push_back({"paley" + std::to_string(q), paley_digraph(q)});

  // valency 2 and 2-arc-transitive, not 3-arc-transitive
  PermGroup const S5 = PermGroup::symmetric(5);
  out.push_back({"S5/2^2 2-arc", CosetDigraph(S5, group_of(5, {"(4,5)", "(2,3)"}), Perm::from_cycles(5, "(1,2,4)(3,5)"))});

  add_instances("S4", PermGroup::symmetric(4), 2, out);
  add_instances("A5", PermGroup::alternating(5), 2, out);
  add_instances("S5", S5, 2, out);
  add_instances("L2(7)", group_of(7, {"(1,2,3,4,5,6,7)", "(2,3,5)(4,7,6)", "(1,2)(3,6)"}), 2, out);
  return out;
}

} // namespace weylkit
