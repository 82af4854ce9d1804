#pragma once

#include <map>
#include <string>
#include <vector>

#include "levi/budget.hpp"
#include "levi/rootsys.hpp"
#include "levi/younga.hpp"

namespace levi {

// A column over the barred alphabet, top to bottom; positive = plain symbol,
// negative = barred. The alphabet order places 1 < ... < r < -r < ... < -1.
using Column = std::vector<int>;

// Position of a symbol in the alphabet order at rank r.
int symbol_key(int s, int r);

bool strongly_standard(const Column& c, int r);

// All strongly standard columns at rank r, grouped callers' way via height.
std::vector<Column> all_columns(int r);
std::vector<Column> columns_of_height(int r, int h);

Weight column_weight(const Column& c, int r);

std::string column_str(const Column& c);
Column parse_column(const std::string& s);

// c <= c' in the Young order of the given type: side by side they form a
// semistandard tableau; type D additionally imposes the rectangle parity
// condition on full top-interval rectangles.
bool young_compare(const Column& c, const Column& cp, const LieType& g);

// (c, c') is an edge of the Hasse diagram of the Young order (c below c').
bool hasse_cover(const Column& c, const Column& cp, const LieType& g);

// Closed-form admissibility of the pair (c, c'), c above c' in Young order.
bool admissible_pair(const Column& c, const Column& cp, const LieType& g);

// Reference oracle: breadth-first search from c' using the simple-reflection
// column rewrites; true iff c is reachable.
bool admissible_oracle(const Column& c, const Column& cp, const LieType& g);

struct DoubledTableau {
  std::vector<Column> columns;  // left to right, heights nonincreasing

  std::string str() const;
};

// Doubled shape (2 lambda_1, ..., 2 lambda_{r-1}, 2 |lambda_r|).
Diagram psi_shape(const Weight& lambda, const LieType& g);

struct TableauReport {
  bool g_standard;
  Weight weight;     // half the sum of the column weights
  int sign;          // -1, 0 or +1
  bool codominant;   // with respect to the Theta argument
  ThetaSet syndrome; // simple roots failing the prefix codominance test
};
TableauReport evaluate_tableau(const DoubledTableau& t, const LieType& g,
                               const ThetaSet& theta = {});

struct DoubledFilters {
  bool null = false;
  int sign = 2;  // -1, 0, +1, or 2 meaning any
  bool codominant = false;
};
std::vector<DoubledTableau> enumerate_doubled(const Diagram& shape, const LieType& g,
                                              const DoubledFilters& filters,
                                              const ThetaSet& theta = {},
                                              long long box_budget = 64);

// Character of V_lambda as a weight multiset, via doubled tableaux of shape
// psi_shape(lambda) carrying the same sign as lambda_r.
std::map<Weight, long long> character_bcd(const Weight& lambda, const LieType& g,
                                          long long box_budget = 64);

// Number of null, correctly signed, Theta-codominant tableaux of shape
// psi_shape(lambda); equals the dimension of the l(Theta)-invariant subspace.
long long count_invariants_bcd(const Weight& lambda, const LieType& g,
                               const ThetaSet& theta, long long box_budget = 64);

// The explicit two- and four-column null tableau families. name is one of
// "T", "T'", "S", "S'"; K (and L when the family takes two subscripts) are
// the written subscripts, e.g. ("T", 4) or ("T'", 5, 3). Pass L = -1 for the
// single-subscript families.
DoubledTableau family_tableau(const std::string& name, int K, int L = -1);

// Every symbol's absolute value increased by x, signs kept.
DoubledTableau shift_tableau(const DoubledTableau& t, int x);

// The outer automorphism of D_r: r and barred r exchanged everywhere.
DoubledTableau sigma_tableau(const DoubledTableau& t, int r);

}  // namespace levi
