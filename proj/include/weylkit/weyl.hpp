#pragma once

#include <string>
#include <vector>

#include "weylkit/permgroup.hpp"
#include "weylkit/rootsys.hpp"

namespace weylkit {

/**
 * Weyl group realised as permutations of the roots.
 *
 * Conventions (fixed everywhere in the library):
 *  - permutations act on the right on root indices, and the word "i1 i2 ..."
 *    is the product s_i1 * s_i2 * ..., applying s_i1 first;
 *  - root_matrix(w) acts on coefficient row vectors from the right:
 *    row j holds the coefficients of alpha_j^w, so
 *    root_matrix(a * b) == root_matrix(a) * root_matrix(b);
 *  - coroot_matrix(w) is the same action written on the coroot basis.
 */
class WeylGroup {
public:
  explicit WeylGroup(RootSystem sys);
  static WeylGroup of(std::string const &label) { return WeylGroup(RootSystem::of(label)); }

  RootSystem const &system() const { return _sys; }
  PermGroup const &group() const { return _group; }
  std::vector<Perm> const &simple_reflections() const { return _simple; }
  int rank() const { return _sys.rank(); }
  std::size_t degree() const { return _sys.size(); }

  // Root permutation induced by the reflection in an arbitrary root.
  Perm reflection(IntVec const &root) const;

  // Letters are 1-based digits; multi-digit ranks are not supported by the
  // digit string form, use the vector form instead.
  Perm word_to_element(std::string const &word) const;
  Perm word_to_element(std::vector<int> const &letters) const;
  std::vector<int> element_to_word(Perm const &w) const;
  static std::string word_string(std::vector<int> const &letters);

  std::size_t length(Perm const &w) const;
  Perm longest_element() const;
  // alpha_{i+1}^w < 0
  bool has_descent(Perm const &w, int i) const;

  IntMatrix root_matrix(Perm const &w) const;
  IntMatrix coroot_matrix(Perm const &w) const;
  // The root permutation determined by a root-space matrix (throws when the
  // matrix does not permute the roots).
  Perm from_root_matrix(IntMatrix const &m) const;

  /**
   * Extends a permutation of the simple roots (0-based images) preserving the
   * Cartan matrix to a permutation of all roots.
   */
  Perm extend_diagram_automorphism(std::vector<int> const &simple_map) const;

  // "a1", "-a0" style labels are not built here; this returns the root vector.
  IntVec image(IntVec const &root, Perm const &w) const;

private:
  RootSystem _sys;
  std::vector<Perm> _simple;
  PermGroup _group;
};

/**
 * W_Delta realised as the set stabilizer in W of the base of Delta, together
 * with the permutation each generator induces on that base.
 */
struct RelativeWeylGroup {
  Subsystem subsystem;
  PermGroup group;
  // induced[g][k] = position in subsystem.simple_roots of the image of the
  // k-th base root under generator g
  std::vector<std::vector<std::size_t>> induced;
  // all induced permutations of the base (the diagram action as a set)
  std::vector<std::vector<std::size_t>> induced_group;
};

RelativeWeylGroup relative_weyl_group(WeylGroup const &W, Subsystem const &delta);

/// Subgroup of W generated by the reflections in the base of delta.
PermGroup reflection_subgroup(WeylGroup const &W, Subsystem const &delta);

} // namespace weylkit
