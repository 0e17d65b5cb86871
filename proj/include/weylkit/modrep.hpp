#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weylkit/bigint.hpp"
#include "weylkit/permgroup.hpp"
#include "weylkit/rootsys.hpp"

namespace weylkit {

using RatVector = std::vector<BigRational>;
using RatMatrix = std::vector<RatVector>;

/**
 * Matrix module acting on row vectors from the right.  `field` is 0 for the
 * rationals or a prime p; over F_p every entry is an integer in [0, p).
 */
struct MatModule {
  std::uint64_t field = 0;
  std::size_t dimension = 0;
  std::vector<RatMatrix> generators;

  bool is_rational() const { return field == 0; }
  std::string field_name() const;
  /// Throws std::invalid_argument on shape errors, bad entries, or singular generators.
  void validate() const;
};

struct SubmoduleWitness {
  std::vector<RatVector> basis; // echelonized
};

enum class Verdict { irreducible, reducible, inconclusive };

struct IrreducibilityResult {
  Verdict verdict = Verdict::inconclusive;
  std::optional<SubmoduleWitness> witness; // set iff reducible
  std::string method;

  bool irreducible() const { return verdict == Verdict::irreducible; }
};

MatModule make_module(std::uint64_t field, std::vector<IntMatrix> const &generators);
RatMatrix to_rat(IntMatrix const &m);

/// Permutation matrix of g: e_i g = e_{i^g}.
RatMatrix permutation_matrix(Perm const &g);
MatModule permutation_module(PermGroup const &G, std::uint64_t p);

/// Reduction of a rational module modulo p.  Throws std::domain_error when a
/// generator or its inverse has a denominator divisible by p.
MatModule reduce_mod(MatModule const &m, std::uint64_t p);

/**
 * Generators are the evaluated words.  A word lists 1-based generator
 * indices, negative for inverses; the empty word is the identity.
 */
MatModule restriction(MatModule const &m, std::vector<std::vector<int>> const &words);

/// Base change g -> x^-1 g x by an invertible matrix x over the module's field.
MatModule conjugate_module(MatModule const &m, RatMatrix const &x);

bool is_invariant_subspace(MatModule const &m, std::vector<RatVector> const &basis);

/**
 * Over F_p: Holt-Rees meataxe with Norton's criterion.  When no element with
 * nullity equal to its factor degree turns up, every projective point of the
 * smallest null space found (and of its dual) is spun, which decides the
 * question completely.
 *
 * Over Q: Norton's test on rational eigenvalues of random algebra elements,
 * then reductions modulo good primes (an irreducible reduction of an
 * invariant lattice forces irreducibility), then kernels of commutant
 * elements.  Anything left is reported as inconclusive.
 *
 * Witnesses are re-verified before they are returned.
 */
IrreducibilityResult is_irreducible(MatModule const &m, std::uint64_t seed = 0x6d617461ULL);

/// Brute force over all nonzero vectors (up to scalars); needs p^dim <= 2^20.
bool exhaustive_irreducible(MatModule const &m);

/**
 * Action on the left kernel {v : v a = 0}.  The kernel must be invariant,
 * which holds whenever a commutes with every generator.
 */
MatModule kernel_submodule(MatModule const &m, RatMatrix const &a);

/// Dimension of the common fixed space of the generators.
std::size_t fixed_vectors(MatModule const &m);

/// Dimension of {x : x g = g x for every generator}.
std::size_t commutant_dimension(MatModule const &m);

/**
 * A composition factor together with the chain of sub/quotient steps that
 * carves it out of the original module, so further group elements can be
 * pushed through the same chain.
 */
struct CompositionFactor {
  struct Step {
    bool quotient = false;
    std::vector<RatVector> basis; // echelonized invariant subspace of the previous space
  };
  MatModule module;
  std::vector<Step> steps;

  /// Action of arbitrary matrices of the parent module on this factor.
  MatModule apply(std::vector<RatMatrix> const &parent_matrices) const;
};

/// Composition factors bottom up.  Throws if any irreducibility test is inconclusive.
std::vector<CompositionFactor> composition_factors(MatModule const &m, std::uint64_t seed = 0x6d617461ULL);

constexpr std::size_t kChopDegreeCap = 24;
constexpr std::uint64_t kChopOrderCap = 1'000'000;
constexpr std::uint64_t kChopPrimeCap = 7;

/// Composition factors of the natural permutation module of G over F_p.
std::vector<CompositionFactor> chop_permutation_module(PermGroup const &G, std::uint64_t p);

} // namespace weylkit
