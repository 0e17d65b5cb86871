#pragma once

#include <cstdint>
#include <map>
#include <unordered_map>
#include <string>
#include <vector>

#include "weylkit/permgroup.hpp"

namespace weylkit {

/// Fixed-size bit set over the elements of a SmallGroup.
class ElementSet {
public:
  ElementSet() = default;
  explicit ElementSet(std::size_t n) : _n(n), _w((n + 63) / 64, 0) {}

  std::size_t universe() const { return _n; }
  bool test(std::size_t i) const { return (_w[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { _w[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  std::size_t count() const;
  std::vector<std::uint32_t> members() const;
  bool subset_of(ElementSet const &o) const;

  bool operator==(ElementSet const &) const = default;
  std::size_t hash() const noexcept;

private:
  std::size_t _n = 0;
  std::vector<std::uint64_t> _w;
};

struct ElementSetHash {
  std::size_t operator()(ElementSet const &s) const noexcept { return s.hash(); }
};

/**
 * Cayley-table view of a permutation group of modest order.  Elements are
 * indexed 0..n-1 with index 0 the identity; products follow the Perm
 * convention (a then b).
 */
class SmallGroup {
public:
  static constexpr std::size_t kDefaultCap = 5000;

  explicit SmallGroup(PermGroup const &G, std::size_t cap = kDefaultCap);

  std::size_t order() const { return _elts.size(); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return _table[std::size_t(a) * order() + b]; }
  std::uint32_t inv(std::uint32_t a) const { return _inv[a]; }
  std::uint32_t conj(std::uint32_t a, std::uint32_t x) const { return mul(mul(inv(x), a), x); }
  std::uint32_t element_order(std::uint32_t a) const { return _ord[a]; }
  Perm const &element(std::uint32_t i) const { return _elts[i]; }
  std::uint32_t index_of(Perm const &g) const;
  std::vector<std::uint32_t> const &generators() const { return _gen_idx; }
  PermGroup const &group() const { return _group; }

  ElementSet closure(std::vector<std::uint32_t> const &gens) const;
  ElementSet extend(ElementSet const &U, std::uint32_t g) const;
  ElementSet conjugate(ElementSet const &U, std::uint32_t x) const;
  // {g : U^g = U}
  ElementSet normalizer(ElementSet const &U) const;
  std::size_t centralizer_order(std::uint32_t a) const;
  PermGroup to_perm_group(ElementSet const &U) const;

private:
  PermGroup _group;
  std::vector<Perm> _elts;
  std::unordered_map<Perm, std::uint32_t, PermHash> _index;
  std::vector<std::uint32_t> _table;
  std::vector<std::uint32_t> _inv;
  std::vector<std::uint32_t> _ord;
  std::vector<std::uint32_t> _gen_idx;
};

struct SubgroupRecord {
  PermGroup group;
  std::map<std::string, std::string> tags; // "order", "class_size", ...
};

inline constexpr std::uint64_t kBruteSubgroupCap = 500;
inline constexpr std::uint64_t kSolvableSubgroupCap = 2000;

/**
 * One representative per conjugacy class of subgroups whose order is a
 * multiple of `order_multiple_of`.  Solvable groups up to order 2000 use
 * cyclic extension; other groups up to order 500 use brute closure.
 * Representatives are ordered by (order, first-found).
 */
std::vector<SubgroupRecord> enumerate_subgroups(PermGroup const &G, std::uint64_t order_multiple_of = 1);

// Same enumeration, returning element sets inside `T` with class sizes.
struct SubgroupClass {
  ElementSet rep;
  std::size_t order = 0;
  std::size_t class_size = 0;
};
std::vector<SubgroupClass> subgroup_classes(SmallGroup const &T);

inline constexpr std::uint64_t kIsomorphismCap = 1000;

/// Exact isomorphism test for groups of order at most kIsomorphismCap.
bool small_group_isomorphic(PermGroup const &G, PermGroup const &H);

} // namespace weylkit
