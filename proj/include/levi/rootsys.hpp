#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "levi/rat.hpp"

namespace levi {

enum class Fam { A, B, C, D, E, F, G };

struct LieType {
  Fam fam;
  int rank;

  friend bool operator==(const LieType& a, const LieType& b) {
    return a.fam == b.fam && a.rank == b.rank;
  }
  friend bool operator<(const LieType& a, const LieType& b) {
    if (a.fam != b.fam) return a.fam < b.fam;
    return a.rank < b.rank;
  }
  std::string str() const;
};

LieType parse_type(const std::string& s);
bool valid_type(const LieType& t, std::string* why = nullptr);

// Ambient e-coordinate dimension: r+1 for A_r, r for B/C/D, 8 for E, 4 for F4,
// 3 for G2.
int ambient_dim(const LieType& t);

struct RootSystem {
  LieType type;
  int dim;                           // ambient dimension
  std::vector<Weight> simple;        // alpha_1..alpha_r, Bourbaki numbering
  std::vector<Weight> positive;      // all positive roots
  std::vector<Weight> fundamental;   // varpi_1..varpi_r
  Weight rho;                        // half sum of positive roots
  long long weyl_order;
};

// Cached per type.
const RootSystem& root_system(const LieType& t);

// Expand v in the simple-root basis; nullopt if v is not in the span.
std::optional<Weight> simple_root_coords(const LieType& t, const Weight& v);

struct WeightClass {
  bool dominant;
  bool integral;  // in P
  bool radical;   // in Q
};

WeightClass classify_weight(const LieType& t, const Weight& w);
// Same flags computed from the generic coroot/lattice definitions (used to
// cross-check the closed-form classical rules).
WeightClass classify_weight_generic(const LieType& t, const Weight& w);

Weight dominant_representative(const LieType& t, const Weight& v);

// sigma: outer automorphism of D_r negating the last coordinate; identity on
// other types.
Weight apply_sigma(const LieType& t, const Weight& w);

// Theta is a set of simple-root indices in 1..r.
using ThetaSet = std::set<int>;

// Image of a ThetaSet under sigma (swaps r-1 and r in type D).
ThetaSet sigma_theta(const LieType& t, const ThetaSet& theta);

std::string theta_str(const ThetaSet& th);

}  // namespace levi
