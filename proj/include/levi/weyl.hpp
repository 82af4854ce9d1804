#pragma once

#include <cstdint>
#include <vector>

#include "levi/rootsys.hpp"

namespace levi {

// Signed permutation: w(e_i) = sign[i] * e_{perm[i]} (0-based). Type A uses
// all-plus signs; type D has an even number of minus signs.
struct WeylElement {
  std::vector<int> perm;
  std::vector<int8_t> sign;

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.perm == b.perm && a.sign == b.sign;
  }
};

WeylElement weyl_identity(int n);
Weight weyl_apply(const WeylElement& w, const Weight& v);
Weight weyl_apply_inverse(const WeylElement& w, const Weight& v);
WeylElement weyl_compose(const WeylElement& a, const WeylElement& b);  // a after b

// Enumerated Weyl group of a classical type with length and Bruhat covers.
struct WeylGroup {
  LieType type;
  std::vector<WeylElement> elems;
  std::vector<int> length;
  // cover_up[i] = indices j with elems[j] = s_beta * elems[i], l(j) = l(i)+1.
  std::vector<std::vector<int>> cover_up;
  // Full upward reachability bitsets when the group is small enough.
  std::vector<std::vector<uint64_t>> upset;

  int index_of(const WeylElement& w) const;
  bool leq(int i, int j) const;  // elems[i] <=_B elems[j]
};

// Cached; classical types only, default rank bound 6.
const WeylGroup& weyl_group(const LieType& t, int rank_bound = 6);

bool bruhat_leq(const LieType& t, const WeylElement& w1, const WeylElement& w2,
                int rank_bound = 6);

int weyl_length(const LieType& t, const WeylElement& w);

// True iff there exist w_1 <=_B ... <=_B w_N with weights[i] in w_i h^+.
bool bruhat_tuple_oracle(const LieType& t, const std::vector<Weight>& weights,
                         int rank_bound = 6);

}  // namespace levi
