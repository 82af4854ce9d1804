#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "levi/budget.hpp"
#include "levi/rootsys.hpp"

namespace levi {

// Young diagram of a fixed order: row lengths padded with zeros to the order.
struct Diagram {
  std::vector<long long> rows;

  Diagram() = default;
  explicit Diagram(std::vector<long long> r) : rows(std::move(r)) {}
  Diagram(std::initializer_list<long long> r) : rows(r) {}

  int order() const { return (int)rows.size(); }
  long long boxes() const;
  // Height of column j (1-based): number of rows of length >= j.
  long long col_height(long long j) const;
  bool valid() const;  // nonincreasing, nonnegative
  std::string str() const;
  static Diagram parse(const std::string& s, int order = -1);

  friend bool operator==(const Diagram& a, const Diagram& b) { return a.rows == b.rows; }
  friend bool operator<(const Diagram& a, const Diagram& b) { return a.rows < b.rows; }
};

Diagram operator+(const Diagram& a, const Diagram& b);
bool contains(const Diagram& outer, const Diagram& inner);

// One column of height h at a given order (h = 0 gives the empty diagram).
Diagram column_diagram(int order, long long h);

struct SkewDiagram {
  Diagram outer;
  Diagram inner;
};

// Largest number of boxes in a single column of the skew diagram.
long long skew_thickness(const SkewDiagram& s);

// Row-indexed filling with symbols from {1..n}.
struct TableauA {
  std::vector<std::vector<int>> rows;

  Diagram shape(int order) const;
  long long boxes() const;
  std::string str() const;
};

struct ShapeStats {
  Rat offset;         // average row length
  Weight sln_shape;   // rows minus offset
  Diagram reduced;    // same sln-shape, empty last row
};
ShapeStats shape_stats(const Diagram& p);

struct TableauFlags {
  bool semistandard;
  bool balanced;
  bool codominant;
  Weight total_weight;  // symbol counts minus the shape offset
};
TableauFlags check_tableau_a(const TableauA& t, int n, const ThetaSet& theta);

// Suffix variant of the prefix test in check_tableau_a; the two agree on
// balanced tableaux but differ in general.
bool tableau_dominant_a(const TableauA& t, int n, const ThetaSet& theta);

// Nested chain (empty = p_0 in ... in p_n = shape) with horizontal-strip
// steps; symbol s occupies p_s minus p_{s-1}. Inverse reconstructs the
// tableau.
std::vector<Diagram> strip_decompose(const TableauA& t, int n);
TableauA strip_compose(const std::vector<Diagram>& chain);

// Bridge lengths b_1..b_n of a skew diagram: maximal height-1 column runs at
// each height, b_i = min(q_{i-1}, p_i) - max(q_i, p_{i+1}) clamped at zero.
std::vector<long long> bridges(const SkewDiagram& s);

struct TwoRowFilling {
  bool exists;
  // When exists: c[i] = number of leading 1-boxes in bridge i+1; the bridge
  // has its first c[i] boxes filled with 1 and the rest with 2.
  std::vector<long long> witness;
};
// Existence of a balanced semistandard {1,2}-filling of the skew diagram
// whose every column prefix has at least as many 2s as 1s.
TwoRowFilling exists_filling_2row(const SkewDiagram& s);

// Closed-form existence of a Theta-codominant balanced semistandard filling.
// Supported Theta shapes: empty; {1..k-1}; the odd indices {1,3,..,n-1} for
// even order n. Other shapes are rejected (use enumerate_fillings_a).
bool exists_balanced_filling(const Diagram& p, const ThetaSet& theta);

// The two linear inequalities on row lengths (even order) whose conjunction
// with integer offset characterizes the diagrams admitting odd-index
// codominant balanced fillings.
bool odd_theta_inequalities(const Diagram& p);

// Conditions tying an order-n diagram p to an order-(n-2) companion q: q
// satisfies the inequalities at its own order, #p - #q is even, q sits
// inside p with skew thickness at most 2, and no bridge of p/q holds a
// strict majority of all bridge boxes. Closed under componentwise addition.
bool induction_pair_conditions(const Diagram& p, const Diagram& q);

// For p primitive in the monoid cut out by the odd-index inequalities and
// even box count (order n = 2m >= 4): the order-(n-2) companion diagrams
// whose box counts straddle (n-2)/n * #p. direction: -1 or +1.
Diagram construct_slmH_partner(const Diagram& p, int direction);

struct FillingFilters {
  bool balanced = false;
  bool codominant = false;  // with respect to the theta argument
  bool dominant = false;
};
std::vector<TableauA> enumerate_fillings_a(const Diagram& p, int n,
                                           const FillingFilters& filters,
                                           const ThetaSet& theta = {},
                                           long long box_budget = 24);

// Number of reduced Theta-dominant semistandard tableaux of sln-shape lambda
// with total weight zero; equals the dimension of the l(Theta)-invariant
// subspace of the sl_n representation V_lambda.
long long count_null_dominant_a(const Weight& lambda, int n, const ThetaSet& theta,
                                long long box_budget = 64);

// Full character of the sl_n representation V_lambda as a weight multiset,
// via reduced semistandard tableaux.
std::map<Weight, long long> character_a(const Weight& lambda, int n,
                                        long long box_budget = 64);

}  // namespace levi
