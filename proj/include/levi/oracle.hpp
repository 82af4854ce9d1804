#pragma once

#include <map>
#include <vector>

#include "levi/budget.hpp"
#include "levi/rootsys.hpp"

namespace levi {

// Character of V_lambda: weight -> multiplicity, deterministic (lexicographic)
// order.
using CharacterTable = std::map<Weight, long long>;

// Weyl dimension formula, exact.
long long weyl_dim(const Weight& lambda, const LieType& g);

// Full character via the Freudenthal recursion; dimension guarded by budget.
CharacterTable weight_multiplicities(const Weight& lambda, const LieType& g,
                                     long long dim_budget = 10000000);

// Multiplicity of the trivial l(Theta)-representation in V_lambda, by
// iterative highest-weight extraction against l(Theta)-characters.
long long dim_invariants_oracle(const Weight& lambda, const LieType& g,
                                const ThetaSet& theta,
                                long long dim_budget = 10000000);

}  // namespace levi
