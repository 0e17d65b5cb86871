#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace weylkit {

using IntVec = std::vector<int>;
using IntMatrix = std::vector<std::vector<int>>;

/**
 * Cartan data of a finite irreducible root system in Bourbaki labelling.
 *
 * cartan[i][j] = <alpha_j, alpha_i^vee> = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i),
 * so row i describes the reflection s_i.  `form` is the symmetric Gram
 * matrix scaled so that every entry is an integer.
 */
struct CartanDatum {
  std::string type_label; // "F4", "E6", "G2", "A3", "B3", "C3", "D4", ...
  int rank = 0;
  IntMatrix cartan;
  IntMatrix form;

  static CartanDatum of(std::string const &label);
  static bool supported(std::string const &label);
};

/**
 * All roots of a finite root system as integer coefficient vectors over the
 * simple roots.  Order: positive roots by (height, lexicographic), then
 * their negatives in the same order, so root k and root k + N are negatives
 * of each other when N is the number of positive roots.
 */
class RootSystem {
public:
  explicit RootSystem(CartanDatum datum);
  static RootSystem of(std::string const &label) { return RootSystem(CartanDatum::of(label)); }

  CartanDatum const &datum() const { return _datum; }
  int rank() const { return _datum.rank; }
  std::size_t size() const { return _roots.size(); }
  std::size_t positive_count() const { return _roots.size() / 2; }
  std::vector<IntVec> const &roots() const { return _roots; }
  IntVec const &root(std::size_t k) const { return _roots.at(k); }

  // Index of the simple root alpha_{i+1} (0-based i).
  std::size_t simple_index(int i) const;
  bool is_positive(std::size_t k) const { return k < positive_count(); }
  std::size_t negative_of(std::size_t k) const;
  int height(std::size_t k) const;

  bool contains(IntVec const &v) const { return _index.count(v) != 0; }
  // Throws std::invalid_argument when v is not a root.
  std::size_t index_of(IntVec const &v) const;

  int inner(IntVec const &a, IntVec const &b) const;
  // <b, a^vee> = 2 (a, b) / (a, a)
  int pairing(IntVec const &b, IntVec const &a) const;
  // s_mirror(target); both must be roots
  IntVec reflect(IntVec const &mirror, IntVec const &target) const;
  // squared length of the simple root alpha_{i+1} in the scaled form
  int simple_length(int i) const { return _datum.form[i][i]; }

  IntVec highest_root() const;

  // Human label like "a2", "-a0" style is built by callers; this gives
  // "(1,2,3,2)" notation.
  static std::string format(IntVec const &v);

  nlohmann::json to_json() const;

private:
  CartanDatum _datum;
  std::vector<IntVec> _roots;
  std::map<IntVec, std::size_t> _index;
};

struct Subsystem {
  RootSystem const *parent = nullptr;
  std::vector<std::size_t> members;      // sorted root indices
  std::vector<std::size_t> simple_roots; // root indices of a base
  std::vector<std::string> component_types;
  std::vector<std::vector<std::size_t>> components; // base roots per component

  bool contains(std::size_t k) const;
};

/**
 * Smallest negation- and reflection-closed set of roots containing the
 * seeds.  When the seeds are a base of that set they are kept as its simple
 * roots (so negative seeds such as -alpha_0 are allowed); otherwise the base
 * induced by the parent's positive roots is used.
 */
Subsystem closed_subsystem(RootSystem const &sys, std::vector<IntVec> const &seeds);

/**
 * Dynkin type of a Cartan matrix of an irreducible system, matched up to
 * simultaneous permutation of rows and columns.  Double bonds in rank 2 are
 * reported as C2.  Throws when no catalogue entry matches.
 */
std::string identify_cartan_type(IntMatrix const &cartan);

} // namespace weylkit
