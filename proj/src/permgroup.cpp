#include "weylkit/permgroup.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace weylkit {

namespace {

std::vector<Point> orbit_under(std::size_t degree, std::vector<Perm> const &gens, Point x)
{
  std::vector<bool> seen(degree, false);
  std::vector<Point> orb{x};
  seen[x] = true;
  for (std::size_t k = 0; k < orb.size(); ++k)
    for (auto const &s : gens) {
      Point y = s[orb[k]];
      if (!seen[y]) {
        seen[y] = true;
        orb.push_back(y);
      }
    }
  return orb;
}

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x)
  {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  // returns the surviving root
  std::size_t unite(std::size_t a, std::size_t b)
  {
    a = find(a);
    b = find(b);
    if (a == b)
      return a;
    if (b < a)
      std::swap(a, b);
    parent[b] = a;
    return a;
  }
  std::vector<std::size_t> parent;
};

} // namespace

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators, std::span<Point const> base_prefix)
    : _degree(degree)
{
  for (auto &g : generators) {
    if (g.degree() != degree)
      throw std::invalid_argument("generator degree does not match group degree");
    if (!g.is_identity())
      _gens.push_back(std::move(g));
  }
  for (Point b : base_prefix)
    if (b >= degree)
      throw std::invalid_argument("base point out of range");
  schreier_sims(base_prefix);
}

PermGroup PermGroup::symmetric(std::size_t n)
{
  std::vector<Perm> gens;
  if (n >= 2) {
    std::vector<Point> cyc(n);
    for (std::size_t i = 0; i < n; ++i)
      cyc[i] = static_cast<Point>((i + 1) % n);
    gens.emplace_back(std::move(cyc));
    std::vector<Point> tr(n);
    std::iota(tr.begin(), tr.end(), Point{0});
    std::swap(tr[0], tr[1]);
    gens.emplace_back(std::move(tr));
  }
  return PermGroup(n, std::move(gens));
}

PermGroup PermGroup::alternating(std::size_t n)
{
  std::vector<Perm> gens;
  for (std::size_t i = 2; i < n; ++i) {
    std::vector<Point> img(n);
    std::iota(img.begin(), img.end(), Point{0});
    img[0] = 1;
    img[1] = static_cast<Point>(i);
    img[i] = 0;
    gens.emplace_back(std::move(img));
  }
  return PermGroup(n, std::move(gens));
}

PermGroup PermGroup::cyclic(std::size_t n)
{
  std::vector<Point> cyc(n);
  for (std::size_t i = 0; i < n; ++i)
    cyc[i] = static_cast<Point>((i + 1) % n);
  return PermGroup(n, {Perm(std::move(cyc))});
}

void PermGroup::add_level(Point b)
{
  Level lv;
  lv.base = b;
  lv.orbit_index.assign(_degree, -1);
  _levels.push_back(std::move(lv));
}

void PermGroup::rebuild_orbit(Level &lv) const
{
  std::fill(lv.orbit_index.begin(), lv.orbit_index.end(), -1);
  lv.orbit.assign(1, lv.base);
  lv.transversal.assign(1, Perm(_degree));
  lv.transversal_inv.assign(1, Perm(_degree));
  lv.orbit_index[lv.base] = 0;
  for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
    for (auto const &s : lv.gens) {
      Point y = s[lv.orbit[k]];
      if (lv.orbit_index[y] >= 0)
        continue;
      lv.orbit_index[y] = static_cast<std::int32_t>(lv.orbit.size());
      lv.orbit.push_back(y);
      Perm u = lv.transversal[k] * s;
      lv.transversal_inv.push_back(u.inverse());
      lv.transversal.push_back(std::move(u));
    }
  }
}

Point PermGroup::choose_base_point(Perm const &h) const
{
  // generators fixing every current base point, plus h
  std::vector<Perm> fixing{h};
  for (auto const &s : _gens) {
    bool fixes = true;
    for (auto const &lv : _levels)
      if (s[lv.base] != lv.base) {
        fixes = false;
        break;
      }
    if (fixes)
      fixing.push_back(s);
  }
  Point best = 0;
  std::size_t best_len = 0;
  std::vector<bool> visited(_degree, false);
  for (Point x = 0; x < _degree; ++x) {
    if (h[x] == x || visited[x])
      continue;
    auto orb = orbit_under(_degree, fixing, x);
    for (Point y : orb)
      visited[y] = true;
    if (orb.size() > best_len) {
      best_len = orb.size();
      best = x;
    }
  }
  return best;
}

void PermGroup::schreier_sims(std::span<Point const> prefix)
{
  _levels.clear();
  for (Point b : prefix) {
    bool dup = false;
    for (auto const &lv : _levels)
      dup = dup || lv.base == b;
    if (!dup)
      add_level(b);
  }

  for (auto const &s : _gens) {
    bool fixes_all = true;
    for (auto const &lv : _levels)
      if (s[lv.base] != lv.base) {
        fixes_all = false;
        break;
      }
    if (fixes_all)
      add_level(choose_base_point(s));
  }

  for (std::size_t i = 0; i < _levels.size(); ++i) {
    for (auto const &s : _gens) {
      bool fixes = true;
      for (std::size_t j = 0; j < i; ++j)
        if (s[_levels[j].base] != _levels[j].base) {
          fixes = false;
          break;
        }
      if (fixes)
        _levels[i].gens.push_back(s);
    }
    rebuild_orbit(_levels[i]);
  }

  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(_levels.size()) - 1;
  while (i >= 0) {
    auto const li = static_cast<std::size_t>(i);
    bool changed = false;
    for (std::size_t k = 0; k < _levels[li].orbit.size() && !changed; ++k) {
      for (std::size_t si = 0; si < _levels[li].gens.size(); ++si) {
        Level const &lv = _levels[li];
        Point gamma = lv.orbit[k];
        Perm const &s = lv.gens[si];
        Point delta = s[gamma];
        Perm g = lv.transversal[k] * s;
        if (g == lv.rep(delta))
          continue;
        g *= lv.rep_inv(delta);
        auto [h, j] = strip(std::move(g), li + 1);
        if (j < _levels.size() || !h.is_identity()) {
          if (j == _levels.size()) {
            Point b = choose_base_point(h);
            add_level(b);
          }
          for (std::size_t l = li + 1; l <= j; ++l) {
            _levels[l].gens.push_back(h);
            rebuild_orbit(_levels[l]);
          }
          i = static_cast<std::ptrdiff_t>(j);
          changed = true;
          break;
        }
      }
    }
    if (!changed)
      --i;
  }

  // trailing levels with trivial orbits that are not part of the prefix are dropped
  while (!_levels.empty() && _levels.back().orbit.size() == 1) {
    bool in_prefix = std::find(prefix.begin(), prefix.end(), _levels.back().base) != prefix.end();
    if (in_prefix)
      break;
    _levels.pop_back();
  }
  if (_gens.empty()) {
    // a trivial group keeps only prefix levels, which all have trivial orbits
    bool all_trivial = std::all_of(_levels.begin(), _levels.end(), [](Level const &l) { return l.orbit.size() == 1; });
    if (all_trivial && prefix.empty())
      _levels.clear();
  }
}

std::vector<Point> PermGroup::base() const
{
  std::vector<Point> b;
  for (auto const &lv : _levels)
    b.push_back(lv.base);
  return b;
}

std::vector<std::size_t> PermGroup::basic_orbit_lengths() const
{
  std::vector<std::size_t> r;
  for (auto const &lv : _levels)
    r.push_back(lv.orbit.size());
  return r;
}

BigInt PermGroup::order() const
{
  BigInt n = 1;
  for (auto const &lv : _levels)
    n *= lv.orbit.size();
  return n;
}

std::uint64_t PermGroup::order_u64() const
{
  BigInt n = order();
  if (n > BigInt(std::numeric_limits<std::uint64_t>::max()))
    throw CapExceeded("group order exceeds 64 bits");
  return static_cast<std::uint64_t>(n);
}

std::pair<Perm, std::size_t> PermGroup::strip(Perm g, std::size_t from) const
{
  for (std::size_t l = from; l < _levels.size(); ++l) {
    Level const &lv = _levels[l];
    Point gamma = g[lv.base];
    if (!lv.in_orbit(gamma))
      return {std::move(g), l};
    g *= lv.rep_inv(gamma);
  }
  return {std::move(g), _levels.size()};
}

bool PermGroup::contains(Perm const &g) const
{
  if (g.degree() != _degree)
    throw std::invalid_argument("degree mismatch in membership test");
  auto [h, j] = strip(g);
  return j == _levels.size() && h.is_identity();
}

std::vector<Point> PermGroup::orbit(Point x) const { return orbit_under(_degree, _gens, x); }

std::vector<std::vector<Point>> PermGroup::orbits() const
{
  std::vector<std::vector<Point>> result;
  std::vector<bool> seen(_degree, false);
  for (Point x = 0; x < _degree; ++x) {
    if (seen[x])
      continue;
    auto orb = orbit(x);
    for (Point y : orb)
      seen[y] = true;
    std::sort(orb.begin(), orb.end());
    result.push_back(std::move(orb));
  }
  return result;
}

bool PermGroup::is_transitive() const { return _degree == 0 || orbit(0).size() == _degree; }

PermGroup PermGroup::with_base(std::span<Point const> prefix) const { return PermGroup(_degree, _gens, prefix); }

PermGroup PermGroup::conjugate(Perm const &x) const
{
  std::vector<Perm> gens;
  for (auto const &g : _gens)
    gens.push_back(g.conjugate(x));
  return PermGroup(_degree, std::move(gens));
}

bool PermGroup::is_subgroup_of(PermGroup const &other) const
{
  if (other.degree() != _degree)
    return false;
  for (auto const &g : _gens)
    if (!other.contains(g))
      return false;
  return true;
}

bool PermGroup::same_group(PermGroup const &other) const
{
  return order() == other.order() && is_subgroup_of(other);
}

Perm PermGroup::random_element(CounterRng &rng) const
{
  Perm g(_degree);
  for (auto it = _levels.rbegin(); it != _levels.rend(); ++it)
    g *= it->transversal[rng.below(it->orbit.size())];
  return g;
}

void PermGroup::for_each_element(std::function<void(Perm const &)> const &fn) const
{
  // elements are u_{k-1} ... u_1 u_0 with u_i from the level-i transversal
  std::function<void(std::size_t, Perm const &)> rec = [&](std::size_t l, Perm const &acc) {
    if (l == 0) {
      fn(acc);
      return;
    }
    Level const &lv = _levels[l - 1];
    for (auto const &u : lv.transversal)
      rec(l - 1, acc * u);
  };
  rec(_levels.size(), Perm(_degree));
}

std::vector<Perm> PermGroup::elements(std::uint64_t cap) const
{
  if (order() > BigInt(cap))
    throw CapExceeded("element listing cap exceeded (order " + order().str() + ")");
  std::vector<Perm> out;
  out.reserve(static_cast<std::size_t>(order_u64()));
  for_each_element([&](Perm const &g) { out.push_back(g); });
  return out;
}

// ---------------------------------------------------------------------------
// backtrack search

PermGroup subgroup_search(PermGroup const &G0, std::span<Point const> base_prefix, PartialPrune const &prune,
                          LeafTest const &test, SearchLimits limits)
{
  PermGroup G = G0.with_base(base_prefix);
  auto const &levels = G.levels();
  std::size_t const n = G.degree();
  std::size_t const k = levels.size();
  std::vector<Point> base = G.base();
  std::uint64_t nodes = 0;

  std::vector<Perm> found;
  UnionFind uf(n);
  std::vector<bool> done_root(n, false);

  std::vector<Point> images;
  images.reserve(k);

  std::function<std::optional<Perm>(std::size_t, Perm const &)> dfs = [&](std::size_t l,
                                                                          Perm const &x) -> std::optional<Perm> {
    if (++nodes > limits.max_nodes)
      throw CapExceeded("backtrack search node limit exceeded");
    if (l == k) {
      if (test(x))
        return x;
      return std::nullopt;
    }
    auto const &lv = levels[l];
    for (std::size_t t = 0; t < lv.orbit.size(); ++t) {
      images.push_back(x[lv.orbit[t]]);
      if (prune(base, images)) {
        auto r = dfs(l + 1, lv.transversal[t] * x);
        if (r) {
          images.pop_back();
          return r;
        }
      }
      images.pop_back();
    }
    return std::nullopt;
  };

  for (std::size_t ii = k; ii-- > 0;) {
    auto const &lv = levels[ii];
    std::fill(done_root.begin(), done_root.end(), false);
    // roots of the current union-find describe orbits of <found>
    done_root[uf.find(lv.base)] = true;
    for (std::size_t t = 1; t < lv.orbit.size(); ++t) {
      Point delta = lv.orbit[t];
      if (done_root[uf.find(delta)])
        continue;
      images.assign(base.begin(), base.begin() + static_cast<std::ptrdiff_t>(ii));
      images.push_back(delta);
      std::optional<Perm> hit;
      if (prune(base, images))
        hit = dfs(ii + 1, lv.transversal[t]);
      if (hit) {
        for (auto const &cyc : hit->cycles())
          for (std::size_t c = 1; c < cyc.size(); ++c) {
            std::size_t r1 = uf.find(cyc[0]), r2 = uf.find(cyc[c]);
            bool d = done_root[r1] || done_root[r2];
            std::size_t r = uf.unite(r1, r2);
            done_root[r] = d;
          }
        found.push_back(std::move(*hit));
      }
      done_root[uf.find(delta)] = true;
    }
  }
  return PermGroup(n, std::move(found));
}

namespace {

// Is there h in H (whose chain starts with `base`) with base[j]^h == images[j]?
bool partial_image_possible(PermGroup const &H, std::span<Point const> images)
{
  auto const &lv = H.levels();
  Perm c(H.degree());
  for (std::size_t j = 0; j < images.size(); ++j) {
    Point gamma = c[images[j]];
    if (j >= lv.size())
      return true; // chain exhausted: no further pruning information
    if (!lv[j].in_orbit(gamma))
      return false;
    c *= lv[j].rep_inv(gamma);
  }
  return true;
}

} // namespace

PermGroup intersection(PermGroup const &G, PermGroup const &H, SearchLimits limits)
{
  if (G.degree() != H.degree())
    throw std::invalid_argument("intersection: degree mismatch");
  PermGroup const &A = G.order() <= H.order() ? G : H;
  PermGroup const &B = G.order() <= H.order() ? H : G;
  if (A.is_trivial())
    return PermGroup::trivial(G.degree());
  std::vector<Point> base = A.base();
  // extend B's chain so that every base point of A is a level of B
  PermGroup Bb = B.with_base(base);
  auto const nb = base.size();
  auto prune = [&](std::span<Point const>, std::span<Point const> images) {
    if (images.size() > nb)
      return true;
    return partial_image_possible(Bb, images);
  };
  return subgroup_search(A, base, prune, [&](Perm const &g) { return B.contains(g); }, limits);
}

PermGroup centralizer(PermGroup const &G, Perm const &g, SearchLimits limits)
{
  if (!G.contains(g))
    throw std::invalid_argument("centralizer: element not in group");
  std::vector<Point> prefix;
  for (auto const &cyc : g.cycles())
    if (cyc.size() > 1)
      prefix.insert(prefix.end(), cyc.begin(), cyc.end());
  PermGroup Gb = G.with_base(prefix);
  std::vector<Point> base = Gb.base();
  // position of b^g inside the base, if present
  std::vector<std::ptrdiff_t> pos_of(G.degree(), -1);
  for (std::size_t j = 0; j < base.size(); ++j)
    pos_of[base[j]] = static_cast<std::ptrdiff_t>(j);
  auto prune = [&](std::span<Point const> b, std::span<Point const> images) {
    std::size_t j = images.size() - 1;
    // images respect c: (b_j^g)^x == (b_j^x)^g whenever b_j^g is an earlier base point
    for (std::size_t t = 0; t <= j; ++t) {
      std::ptrdiff_t p = pos_of[g[b[t]]];
      if (p >= 0 && static_cast<std::size_t>(p) <= j && (t == j || static_cast<std::size_t>(p) == j))
        if (images[static_cast<std::size_t>(p)] != g[images[t]])
          return false;
    }
    return true;
  };
  return subgroup_search(Gb, base, prune, [&](Perm const &x) { return x * g == g * x; }, limits);
}

PermGroup set_stabilizer(PermGroup const &G, std::span<Point const> points, SearchLimits limits)
{
  std::vector<bool> in_set(G.degree(), false);
  std::vector<Point> prefix;
  for (Point p : points) {
    if (p >= G.degree())
      throw std::invalid_argument("set_stabilizer: point out of range");
    if (!in_set[p])
      prefix.push_back(p);
    in_set[p] = true;
  }
  auto prune = [&](std::span<Point const> b, std::span<Point const> images) {
    std::size_t j = images.size() - 1;
    return in_set[b[j]] == in_set[images[j]];
  };
  auto test = [&](Perm const &x) {
    for (Point p : prefix)
      if (!in_set[x[p]])
        return false;
    return true;
  };
  return subgroup_search(G, prefix, prune, test, limits);
}

PermGroup normalizer(PermGroup const &G, PermGroup const &H, SearchLimits limits)
{
  if (G.degree() != H.degree())
    throw std::invalid_argument("normalizer: degree mismatch");
  std::vector<std::size_t> orbit_size(G.degree(), 0);
  for (auto const &o : H.orbits())
    for (Point x : o)
      orbit_size[x] = o.size();
  auto prune = [&](std::span<Point const> b, std::span<Point const> images) {
    std::size_t j = images.size() - 1;
    return orbit_size[b[j]] == orbit_size[images[j]];
  };
  auto test = [&](Perm const &x) {
    for (auto const &h : H.generators())
      if (!H.contains(h.conjugate(x)))
        return false;
    return true;
  };
  return subgroup_search(G, {}, prune, test, limits);
}

bool is_p_group(PermGroup const &G, std::uint64_t p)
{
  BigInt n = G.order();
  while (n % p == 0)
    n /= p;
  return n == 1;
}

PermGroup sylow(PermGroup const &G, std::uint64_t p, std::uint64_t cap)
{
  if (!is_prime_u64(p))
    throw std::invalid_argument("sylow: p must be prime");
  if (G.order() > BigInt(cap))
    throw CapExceeded("sylow: group order above cap");
  BigInt target = largest_ppart(G.order(), p);
  PermGroup P = PermGroup::trivial(G.degree());
  CounterRng rng(0x51109 + p);
  while (P.order() < target) {
    PermGroup N = normalizer(G, P);
    bool grown = false;
    std::uint64_t const tries = 4096;
    for (std::uint64_t t = 0; t < tries && !grown; ++t) {
      Perm x = N.random_element(rng);
      std::uint64_t ord = x.order();
      std::uint64_t pp = 1;
      while (ord % p == 0) {
        ord /= p;
        pp *= p;
      }
      if (pp == 1)
        continue;
      Perm y = x.pow(static_cast<long long>(ord));
      if (P.contains(y))
        continue;
      auto gens = P.generators();
      gens.push_back(y);
      P = PermGroup(G.degree(), std::move(gens));
      grown = true;
    }
    if (!grown) {
      // exhaustive fallback over N
      N.for_each_element([&](Perm const &x) {
        if (grown)
          return;
        std::uint64_t ord = x.order();
        std::uint64_t pp = 1;
        while (ord % p == 0) {
          ord /= p;
          pp *= p;
        }
        if (pp == 1)
          return;
        Perm y = x.pow(static_cast<long long>(ord));
        if (P.contains(y))
          return;
        auto gens = P.generators();
        gens.push_back(y);
        P = PermGroup(G.degree(), std::move(gens));
        grown = true;
      });
      if (!grown)
        throw std::logic_error("sylow: no p-element found in normalizer");
    }
  }
  return P;
}

PermGroup normal_closure(PermGroup const &G, std::vector<Perm> const &gens)
{
  std::vector<Perm> ngens;
  for (auto const &g : gens)
    if (!g.is_identity())
      ngens.push_back(g);
  PermGroup N(G.degree(), ngens);
  std::deque<Perm> queue(ngens.begin(), ngens.end());
  while (!queue.empty()) {
    Perm h = std::move(queue.front());
    queue.pop_front();
    for (auto const &x : G.generators()) {
      Perm c = h.conjugate(x);
      if (!N.contains(c)) {
        ngens.push_back(c);
        queue.push_back(c);
        N = PermGroup(G.degree(), ngens);
      }
    }
  }
  return N;
}

PermGroup derived_subgroup(PermGroup const &G)
{
  std::vector<Perm> comms;
  auto const &gs = G.generators();
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j) {
      Perm c = gs[i].inverse() * gs[j].inverse() * gs[i] * gs[j];
      if (!c.is_identity())
        comms.push_back(std::move(c));
    }
  return normal_closure(G, comms);
}

bool is_solvable(PermGroup const &G)
{
  PermGroup H = G;
  while (!H.is_trivial()) {
    PermGroup D = derived_subgroup(H);
    if (D.order() == H.order())
      return false;
    H = std::move(D);
  }
  return true;
}

std::vector<Perm> conjugacy_class_reps(PermGroup const &G, std::uint64_t cap)
{
  auto elts = G.elements(cap);
  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> reps;
  std::sort(elts.begin(), elts.end());
  for (auto const &g : elts) {
    if (seen.count(g))
      continue;
    reps.push_back(g);
    std::vector<Perm> cls{g};
    seen.insert(g);
    for (std::size_t k = 0; k < cls.size(); ++k)
      for (auto const &x : G.generators()) {
        Perm c = cls[k].conjugate(x);
        if (seen.insert(c).second)
          cls.push_back(std::move(c));
      }
  }
  return reps;
}

} // namespace weylkit
