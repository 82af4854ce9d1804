#pragma once

#include <string>
#include <utility>
#include <vector>

#include "levi/realform.hpp"
#include "levi/rootsys.hpp"

namespace levi {

struct SweepReport {
  long long checks = 0;
  std::vector<std::string> failures;
  std::vector<std::string> skipped;  // budget exhaustion, never counted as pass

  bool ok() const { return failures.empty(); }
  void merge(const SweepReport& o);
};

// Weight enumeration helpers. For B/C/D the bound caps the first coordinate;
// for A it caps the sum of absolute values of the (traceless) coordinates.
std::vector<Weight> radical_dominant_weights(const LieType& t, int bound);
std::vector<Weight> dominant_integral_weights(const LieType& t, int bound);

// Closed-form membership vs tableau counters vs (optionally) the Freudenthal
// oracle, over every real form of A_1..A_{rank_bound}, B_2.., C_2..,
// D_3..D_{rank_bound} and every radical dominant weight within weight_bound.
SweepReport verify_form_sweep(int rank_bound, int weight_bound, bool with_oracle,
                              long long box_budget, int jobs);

// Tableau character formulas vs the Freudenthal recursion. Each entry pairs a
// type with its weight bound (interpreted as in the enumeration helpers).
SweepReport verify_characters(const std::vector<std::pair<LieType, int>>& suite,
                              long long box_budget);

// Closed-form column-pair admissibility vs the rewrite-step BFS oracle, over
// all ordered pairs of strongly standard columns.
SweepReport verify_admissible(int rank_bound);

// The explicit null tableau families: standardness, nullity and exact
// syndromes over the whole parameter grid with subscripts up to 2*kmax+1.
SweepReport verify_families(int kmax);

// For every classical B/C/D real form up to rank_bound and every primitive
// member weight of its closed-form set, the designated explicit filling is
// standard, null, of the right shape, and has syndrome disjoint from the
// union of Theta and sigma(Theta).
SweepReport verify_basis_fillings(int rank_bound);

// Recomputes primitive_basis(type) and independently checks that every
// element is radical, dominant and indecomposable, and that every radical
// dominant weight in the search box decomposes into basis elements.
SweepReport verify_primitive_basis(const LieType& type);

// Young-order column chains vs the Bruhat-order oracle on weight tuples, over
// all tuples of at most tuple_len nonempty strongly standard columns.
SweepReport verify_bruhat_young(const LieType& t, int tuple_len);

// Height bounds for codominant null standard tableaux: h <= min(t, 2x),
// h >= 2(t-x), and the strengthened bound when half the box count is odd.
SweepReport verify_height_bounds(const LieType& g, int max_boxes);

}  // namespace levi
