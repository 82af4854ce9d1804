#pragma once

#include <optional>
#include <string>
#include <vector>

#include "levi/budget.hpp"
#include "levi/realform.hpp"
#include "levi/rootsys.hpp"

namespace levi {

struct ClassificationVerdict {
  bool in_table;
  // Present iff in_table is false; names the violated condition.
  std::optional<std::string> failed_condition;
};

// Closed-form membership test for the set of dominant weights lambda with a
// nonzero l-invariant vector in V_lambda, where l is the centralizer of a
// maximal split torus of the given real form. Requires lambda dominant
// integral for the complexified type.
ClassificationVerdict m_table_membership(const RealForm& form, const Weight& lambda);

// Redundant reformulation of the condition for the su / so / sp2(p,q)
// families, split by whether p is below a quarter of p+q. Assumes lambda is
// radical dominant; nullopt for forms the reformulation does not cover.
std::optional<bool> table3_membership(const RealForm& form, const Weight& lambda);

struct MonoidElementSet {
  std::vector<Weight> elements;
  LieType context;
};

// Hilbert basis of the monoid of radical dominant weights: the elements not
// expressible as a sum of two nonzero radical dominant weights.
MonoidElementSet primitive_basis(const LieType& type);

// Property harness for closure under addition: membership (computed by the
// tableau counters) of lambda and mu must imply membership of lambda + mu.
bool additivity_check(const RealForm& form, const Weight& lambda, const Weight& mu,
                      long long box_budget = 64);

// Membership via the tableau counters (classical complexifications only).
bool tableau_membership(const RealForm& form, const Weight& lambda,
                        long long box_budget = 64);

}  // namespace levi
