#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "weylkit/bigint.hpp"
#include "weylkit/perm.hpp"
#include "weylkit/rng.hpp"

namespace weylkit {

/// Raised when an explicit resource cap would be exceeded.  Results are
/// never truncated silently.
class CapExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/**
 * Permutation group with a stabilizer chain built by deterministic
 * Schreier-Sims.  Base points beyond a caller supplied prefix are chosen
 * greedily, taking the moved point with the largest orbit.
 */
class PermGroup {
public:
  struct Level {
    Point base = 0;
    std::vector<Perm> gens;                // strong generators fixing earlier base points
    std::vector<Point> orbit;              // basic orbit, orbit[0] == base
    std::vector<std::int32_t> orbit_index; // point -> position in orbit, or -1
    std::vector<Perm> transversal;         // transversal[k] maps base to orbit[k]
    std::vector<Perm> transversal_inv;

    bool in_orbit(Point x) const { return orbit_index[x] >= 0; }
    Perm const &rep(Point x) const { return transversal[static_cast<std::size_t>(orbit_index[x])]; }
    Perm const &rep_inv(Point x) const { return transversal_inv[static_cast<std::size_t>(orbit_index[x])]; }
  };

  PermGroup() = default;
  PermGroup(std::size_t degree, std::vector<Perm> generators, std::span<Point const> base_prefix = {});

  static PermGroup trivial(std::size_t degree) { return PermGroup(degree, {}); }
  static PermGroup symmetric(std::size_t n);
  static PermGroup alternating(std::size_t n);
  static PermGroup cyclic(std::size_t n);

  std::size_t degree() const { return _degree; }
  std::vector<Perm> const &generators() const { return _gens; }
  std::vector<Level> const &levels() const { return _levels; }
  std::vector<Point> base() const;
  std::vector<std::size_t> basic_orbit_lengths() const;

  BigInt order() const;
  std::uint64_t order_u64() const;
  bool is_trivial() const { return _gens.empty(); }

  bool contains(Perm const &g) const;
  // Sift g through the chain starting at `from`; returns residue and the
  // level where sifting stopped (levels().size() on success).
  std::pair<Perm, std::size_t> strip(Perm g, std::size_t from = 0) const;

  std::vector<Point> orbit(Point x) const;
  std::vector<std::vector<Point>> orbits() const;
  bool is_transitive() const;

  PermGroup with_base(std::span<Point const> prefix) const;
  PermGroup conjugate(Perm const &x) const;
  bool is_subgroup_of(PermGroup const &other) const;
  bool same_group(PermGroup const &other) const;

  Perm identity() const { return Perm(_degree); }
  Perm random_element(CounterRng &rng) const;

  void for_each_element(std::function<void(Perm const &)> const &fn) const;
  std::vector<Perm> elements(std::uint64_t cap = 2'000'000) const;

private:
  void schreier_sims(std::span<Point const> prefix);
  void add_level(Point b);
  void rebuild_orbit(Level &lv) const;
  Point choose_base_point(Perm const &h) const;

  std::size_t _degree = 0;
  std::vector<Perm> _gens;
  std::vector<Level> _levels;
};

struct SearchLimits {
  std::uint64_t max_nodes = 200'000'000;
};

// Partial prune receives the search base and the images of its first
// images.size() points; returning false discards the whole subtree.
using PartialPrune = std::function<bool(std::span<Point const> base, std::span<Point const> images)>;
using LeafTest = std::function<bool(Perm const &)>;

/**
 * Backtrack search for the subgroup {g in G : test(g)}.  `test` must define
 * a subgroup and `prune` must be a necessary condition on base images.
 * The search walks base images level by level and skips orbits of the
 * subgroup found so far.
 */
PermGroup subgroup_search(PermGroup const &G, std::span<Point const> base_prefix, PartialPrune const &prune,
                          LeafTest const &test, SearchLimits limits = {});

PermGroup intersection(PermGroup const &G, PermGroup const &H, SearchLimits limits = {});
PermGroup centralizer(PermGroup const &G, Perm const &g, SearchLimits limits = {});
PermGroup set_stabilizer(PermGroup const &G, std::span<Point const> points, SearchLimits limits = {});
// Elements of G normalizing H (H need not lie in G).
PermGroup normalizer(PermGroup const &G, PermGroup const &H, SearchLimits limits = {});

inline constexpr std::uint64_t kSylowOrderCap = 10'000'000;
PermGroup sylow(PermGroup const &G, std::uint64_t p, std::uint64_t cap = kSylowOrderCap);
bool is_p_group(PermGroup const &G, std::uint64_t p);

PermGroup normal_closure(PermGroup const &G, std::vector<Perm> const &gens);
PermGroup derived_subgroup(PermGroup const &G);
bool is_solvable(PermGroup const &G);
// One representative per conjugacy class of elements (element listing; capped).
std::vector<Perm> conjugacy_class_reps(PermGroup const &G, std::uint64_t cap = 200'000);

} // namespace weylkit
