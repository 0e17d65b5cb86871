#pragma once

#include <vector>

#include "weylkit/polynomial.hpp"
#include "weylkit/weyl.hpp"

namespace weylkit {

/// |det(qN - I)| (or |det(-qN - I)| when twisted) with N the root matrix of w^-1.
FactoredPolynomial torus_order_poly(WeylGroup const &W, Perm const &w, bool twisted);
// The unfactored polynomial, normalised to positive leading coefficient.
Poly torus_order_poly_expanded(WeylGroup const &W, Perm const &w, bool twisted);

struct TorusStructure {
  BigInt q;
  bool twisted = false;
  std::vector<BigInt> invariant_factors; // d1 | d2 | ..., entries equal to 1 dropped
  BigInt order() const;
};

/// Invariant factors of Z^l / (qM - I) Z^l with M the coroot matrix of w
/// (negated when twisted).
TorusStructure torus_structure(WeylGroup const &W, Perm const &w, bool twisted, BigInt const &q);

struct TorusActionModule {
  std::uint64_t characteristic = 0;
  int dimension = 0;
  std::vector<Perm> source_elements;                      // generators of C_W(w)
  std::vector<std::vector<std::vector<std::int64_t>>> generator_matrices; // entries in [0, r)
};

/// Coroot action of a generating set of C_W(w), reduced mod r, on row vectors.
TorusActionModule centralizer_torus_module(WeylGroup const &W, Perm const &w, std::uint64_t r);

} // namespace weylkit
