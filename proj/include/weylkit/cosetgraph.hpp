#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "weylkit/permgroup.hpp"

namespace weylkit {

inline constexpr std::size_t kCosetIndexCap = 100'000;
inline constexpr std::uint64_t kBruteArcCap = 1'000'000;
inline constexpr std::size_t kPrimitivityIndexCap = 5'000;

/**
 * Coset digraph of H on the right cosets of Hv: Hv x -> Hv y whenever
 * y x^-1 lies in Hv h Hv.  Vertex k is the coset of reps[k], the
 * lexicographically least element of the coset (images of 1, 2, ... in
 * turn), and vertex 0 is Hv itself.
 *
 * Construction throws std::invalid_argument when Hv is not a subgroup of H,
 * when h lies in Hv (loops) or when h^-1 lies in Hv h Hv (not antisymmetric),
 * and CapExceeded above kCosetIndexCap vertices.
 */
class CosetDigraph {
public:
  CosetDigraph(PermGroup H, PermGroup Hv, Perm h);

  PermGroup const &H() const { return _H; }
  PermGroup const &Hv() const { return _Hv; }
  Perm const &h() const { return _h; }

  std::size_t vertex_count() const { return _reps.size(); }
  Perm const &rep(std::size_t v) const { return _reps[v]; }
  std::size_t vertex_of(Perm const &x) const; // vertex of the coset Hv x
  Perm vertex_action(Perm const &g) const;    // g acting on vertices

  std::vector<std::size_t> const &out_neighbours_of_base() const { return _out0; }
  std::vector<std::size_t> out_neighbours(std::size_t v) const;
  std::vector<std::size_t> in_neighbours(std::size_t v) const;

  std::size_t valency() const { return _out0.size(); }
  bool connected() const { return _connected; }
  // H acts faithfully on the vertices
  bool core_free() const { return _core_free; }
  PermGroup const &vertex_group() const { return _vertex_group; }

  // Minimal blocks through {0, b}; empty when the index is above the cap.
  std::optional<bool> vertex_primitive() const;
  // Vertex-primitive and arc-transitive implies prime cycle or valency >= 3.
  std::optional<bool> valency_dichotomy_holds() const;

private:
  Perm canonical(Perm x) const;

  PermGroup _H, _Hv, _chain;
  Perm _h;
  std::vector<Perm> _reps;
  std::unordered_map<Perm, std::size_t, PermHash> _index;
  std::vector<Perm> _gen_action;
  PermGroup _vertex_group;
  std::vector<std::size_t> _out0;
  bool _connected = false;
  bool _core_free = false;
};

struct SArcReport {
  unsigned s = 0;
  BigInt arc_count;                      // vertex_count * valency^s
  std::optional<std::size_t> orbit_count; // brute force, when at most kBruteArcCap arcs start at a vertex
  bool transitive = false;               // chained factorization criterion
  std::vector<BigInt> chain_orders;      // |H_{v0...vi}| for i = 0..s
};

/**
 * (H, s)-arc-transitivity along v0 -> v1 -> ... with v_i = Hv h^i: H is
 * transitive on arcs by construction, and for i = 1..s-1 the criterion is
 * H_{v1...vi} = H_{v0...vi} H_{v1...v(i+1)}.  Whenever the brute orbit count
 * is available it must agree, otherwise std::logic_error is thrown.
 */
SArcReport s_arc_transitive(CosetDigraph const &G, unsigned s);

/// Orbits of K <= Hv on s-arcs starting at vertex 0 (empty above the cap).
std::optional<std::size_t> brute_arc_orbits(CosetDigraph const &G, PermGroup const &K, unsigned s);

struct DivisibilityAudit {
  bool holds = false;
  BigInt lhs;                  // |Hv|^(s-1)
  BigInt rhs;                  // |Hv cap Hv^h|^s
  bool valency_power_divides = false; // valency^s | |Hv|
};

/// Throws std::invalid_argument unless Γ is (H, s)-arc-transitive.
DivisibilityAudit divisibility_audit(CosetDigraph const &G, unsigned s);

struct NormalizedSubgroupViolation {
  PermGroup N; // nontrivial normal subgroup of Hv with N^h = N
};

/// Nontrivial normal subgroups of Hv normalized by h (empty for connected core-free Γ).
std::vector<NormalizedSubgroupViolation> normalized_subgroup_probe(CosetDigraph const &G);

/**
 * Arithmetic core of the torus-stabilizer eliminations: primes r | m with
 * |O|_r = 1 and |H/L|_r < m_r.  With L_v = C_m^2.O any such r gives s <= 2,
 * with L_v = C_m.O it gives s <= 1.
 */
struct EliminationResult {
  std::vector<BigInt> witnesses;
  std::optional<unsigned> s_bound;
};
EliminationResult eliminate(BigInt const &m, BigInt const &O_order, BigInt const &HL_order, unsigned cyclic_rank);

/// Named corpus of small coset digraphs used by the test suites.
struct DigraphInstance {
  std::string name;
  CosetDigraph graph;
};
std::vector<DigraphInstance> digraph_corpus();

/// Paley tournament on F_q (q = 3 mod 4 prime) as a coset digraph of F_q:((q-1)/2).
CosetDigraph paley_digraph(unsigned q);
/// Directed n-cycle from the regular cyclic group.
CosetDigraph directed_cycle(unsigned n);

} // namespace weylkit
