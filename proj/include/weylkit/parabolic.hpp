#pragma once

#include <vector>

#include "weylkit/polynomial.hpp"
#include "weylkit/weyl.hpp"

namespace weylkit {

/**
 * W_J together with the minimal-length representatives of its right cosets
 * W_J x.  J holds 1-based simple-root labels.
 */
struct ParabolicDatum {
  WeylGroup const *W = nullptr;
  std::vector<int> J;
  PermGroup W_J;
  std::vector<Perm> coset_reps; // sorted by (length, permutation)
};

ParabolicDatum parabolic_datum(WeylGroup const &W, std::vector<int> const &J);

// Minimal element of W_J x.
Perm reduce_to_coset_rep(WeylGroup const &W, std::vector<int> const &J, Perm x);

struct DoubleCosetReport {
  Perm min_rep;
  std::vector<int> min_rep_word;
  bool self_paired = false;
  bool self_paired_exact = false; // w^-1 in W_J w W_J by direct membership
  FactoredPolynomial length_poly;
  std::size_t coset_count = 0;
  std::size_t triple_count = 0;
  std::vector<std::size_t> coset_indices; // into ParabolicDatum::coset_reps
};

/**
 * One report per (W_J, W_J)-double coset, in order of (length of minimal
 * representative, representative).  Throws std::logic_error if the order
 * test and the exact membership test for self-pairedness ever disagree, or
 * if a double coset has more than one element of minimal length.
 */
std::vector<DoubleCosetReport> double_cosets(ParabolicDatum const &datum);

FactoredPolynomial suborbit_polynomial(ParabolicDatum const &datum, DoubleCosetReport const &report);

bool is_self_paired(DoubleCosetReport const &report);

// |Phi+ cap (Phi+)^w cap (Phi+)^(w^-1)|
std::size_t triple_intersection_count(WeylGroup const &W, Perm const &w);

/**
 * Exponent test for the p-part identity |Hv|_p |Huvv1|_p = |Huv|_p |Hvv1|_p.
 * Evaluates q^(2(a-e)) f_p^2 < q^(a+m) f_p exactly at q = p^f.  Throws
 * std::invalid_argument when e > a or m > a - e (the triple count cannot
 * exceed the p-exponent of the arc stabilizer).
 */
bool rule_out_parabolic(unsigned a_exp, unsigned e_exp, unsigned m, std::uint64_t p, unsigned f);

/**
 * The same test for every prime power q at once: using p^f >= (f_p)^p one
 * has f_p <= q^(1/2), so the identity is impossible for all q exactly when
 * m + 2e - a >= 1.
 */
bool rule_out_parabolic_all_q(unsigned a_exp, unsigned e_exp, unsigned m);

} // namespace weylkit
