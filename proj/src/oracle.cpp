#include "levi/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

namespace levi {

namespace {

using boost::multiprecision::cpp_int;
using IVec = std::vector<long long>;

struct IVecHash {
  size_t operator()(const IVec& v) const {
    size_t h = 1469598103934665603ull;
    for (long long x : v) {
      h ^= (size_t)(x + 0x9e3779b97f4a7c15ull);
      h *= 1099511628211ull;
    }
    return h;
  }
};

using MultMap = std::unordered_map<IVec, long long, IVecHash>;

long long idot(const IVec& a, const IVec& b) {
  long long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}
IVec iadd(const IVec& a, const IVec& b) {
  IVec r = a;
  for (size_t i = 0; i < a.size(); ++i) r[i] += b[i];
  return r;
}
IVec isub(const IVec& a, const IVec& b) {
  IVec r = a;
  for (size_t i = 0; i < a.size(); ++i) r[i] -= b[i];
  return r;
}

long long lcm_ll(long long a, long long b) { return a / std::gcd(a, b) * b; }

IVec scale_weight(const Weight& w, long long scale) {
  IVec v(w.size());
  for (size_t i = 0; i < w.size(); ++i) {
    long long q = scale / w[i].den;
    v[i] = w[i].num * q;
  }
  return v;
}

Weight unscale_weight(const IVec& v, long long scale) {
  Weight w(v.size());
  for (size_t i = 0; i < v.size(); ++i) w[i] = Rat(v[i], scale);
  return w;
}

// A root datum in scaled integer coordinates; works for a full algebra or for
// the semisimple part of a Levi subalgebra.
struct Datum {
  std::vector<IVec> simple;
  std::vector<IVec> positive;
  std::vector<int> pos_height;  // height of each positive root
  IVec rho;
};

// Freudenthal recursion computing multiplicities at every weight of V_lambda.
// lambda must be dominant for the datum; weights outside the datum's span
// (central components) ride along untouched.
MultMap freudenthal(const Datum& d, const IVec& lambda) {
  MultMap all;
  all[lambda] = 1;
  if (d.simple.empty()) return all;

  IVec lr = iadd(lambda, d.rho);
  long long top_norm = idot(lr, lr);

  std::vector<IVec> level = {lambda};
  int h = 0;
  while (!level.empty()) {
    ++h;
    std::vector<IVec> next;
    MultMap seen_next;
    for (const IVec& x : level) {
      for (const IVec& a : d.simple) {
        IVec y = isub(x, a);
        if (seen_next.count(y)) continue;
        seen_next[y] = 0;
        IVec yr = iadd(y, d.rho);
        long long denom = top_norm - idot(yr, yr);
        if (denom <= 0) continue;
        long long num = 0;
        for (size_t pi = 0; pi < d.positive.size(); ++pi) {
          const IVec& al = d.positive[pi];
          int ht = d.pos_height[pi];
          IVec z = y;
          for (int k = 1; k * ht <= h; ++k) {
            z = iadd(z, al);
            auto it = all.find(z);
            if (it == all.end()) continue;
            num += it->second * idot(z, al);
          }
        }
        num *= 2;
        if (num == 0) continue;
        if (num % denom != 0) throw std::logic_error("freudenthal: non-integer multiplicity");
        all[y] = num / denom;
        next.push_back(y);
      }
    }
    level = std::move(next);
  }
  return all;
}

int height_of(const LieType& t, const Weight& root) {
  auto c = simple_root_coords(t, root);
  Rat s;
  for (const Rat& x : *c) s += x;
  if (!s.is_integer()) throw std::logic_error("non-integer root height");
  return (int)s.num;
}

long long common_scale(const LieType& g, const Weight& lambda) {
  const RootSystem& rs = root_system(g);
  long long scale = 2;
  for (const Rat& x : lambda) scale = lcm_ll(scale, x.den);
  for (const Weight& a : rs.simple)
    for (const Rat& x : a) scale = lcm_ll(scale, x.den);
  return scale;
}

Datum full_datum(const LieType& g, long long scale) {
  const RootSystem& rs = root_system(g);
  Datum d;
  for (const Weight& a : rs.simple) d.simple.push_back(scale_weight(a, scale));
  for (const Weight& a : rs.positive) {
    d.positive.push_back(scale_weight(a, scale));
    d.pos_height.push_back(height_of(g, a));
  }
  d.rho = scale_weight(rs.rho, scale);
  return d;
}

}  // namespace

long long weyl_dim(const Weight& lambda, const LieType& g) {
  const RootSystem& rs = root_system(g);
  WeightClass c = classify_weight(g, lambda);
  if (!c.dominant || !c.integral)
    throw std::invalid_argument("weyl_dim: lambda must be dominant integral");
  Weight lr = lambda + rs.rho;
  cpp_int num = 1, den = 1;
  for (const Weight& a : rs.positive) {
    Rat x = dot(lr, a);
    Rat y = dot(rs.rho, a);
    num *= cpp_int(x.num) * cpp_int(y.den);
    den *= cpp_int(x.den) * cpp_int(y.num);
  }
  cpp_int q = num / den;
  if (q * den != num) throw std::logic_error("weyl_dim: non-integer result");
  if (q > cpp_int(std::numeric_limits<long long>::max()))
    throw std::overflow_error("weyl_dim: result exceeds int64");
  return (long long)q;
}

CharacterTable weight_multiplicities(const Weight& lambda, const LieType& g,
                                     long long dim_budget) {
  long long dim = weyl_dim(lambda, g);
  if (dim > dim_budget) throw BudgetExceeded("weight_multiplicities: dimension over budget");

  long long scale = common_scale(g, lambda);
  Datum d = full_datum(g, scale);
  MultMap all = freudenthal(d, scale_weight(lambda, scale));

  long long total = 0;
  CharacterTable out;
  for (const auto& [v, m] : all) {
    out[unscale_weight(v, scale)] = m;
    total += m;
  }
  if (total != dim) throw std::logic_error("freudenthal: character size mismatch");
  return out;
}

long long dim_invariants_oracle(const Weight& lambda, const LieType& g,
                                const ThetaSet& theta, long long dim_budget) {
  const RootSystem& rs = root_system(g);
  long long dim = weyl_dim(lambda, g);
  if (dim > dim_budget) throw BudgetExceeded("dim_invariants_oracle: dimension over budget");

  long long scale = common_scale(g, lambda);
  Datum d = full_datum(g, scale);
  MultMap all = freudenthal(d, scale_weight(lambda, scale));

  // Levi subsystem: positive roots supported on Theta.
  Datum l;
  for (int i : theta) {
    if (i < 1 || i > (int)rs.simple.size())
      throw std::invalid_argument("dim_invariants_oracle: bad Theta index");
    l.simple.push_back(scale_weight(rs.simple[i - 1], scale));
  }
  for (const Weight& a : rs.positive) {
    auto c = simple_root_coords(g, a);
    bool in_span = true;
    int ht = 0;
    for (size_t k = 0; k < c->size(); ++k) {
      if ((*c)[k].is_zero()) continue;
      if (!theta.count((int)k + 1)) {
        in_span = false;
        break;
      }
      ht += (int)(*c)[k].num;
    }
    if (in_span) {
      l.positive.push_back(scale_weight(a, scale));
      l.pos_height.push_back(ht);
    }
  }
  l.rho.assign(ambient_dim(g), 0);
  for (const IVec& a : l.positive) l.rho = iadd(l.rho, a);
  // rho_l as half-sum: keep doubled to stay integral; only sign/order of
  // idot(mu, rho_l) matters below, and the sub-Freudenthal gets the true
  // half-sum via its own scale. To keep a single scale, rescale everything
  // once more by 2.
  // (simple/pos entries doubled as well, weights doubled.)
  {
    for (auto& v : l.simple)
      for (auto& x : v) x *= 2;
    for (auto& v : l.positive)
      for (auto& x : v) x *= 2;
    MultMap doubled;
    for (const auto& [v, m] : all) {
      IVec w = v;
      for (auto& x : w) x *= 2;
      doubled[w] = m;
    }
    all = std::move(doubled);
  }

  // Sort residual weights by decreasing <mu, rho_l>, then lexicographically:
  // the maximum over a nonzero residual l-character is always attained at a
  // highest weight of some component.
  std::vector<std::pair<IVec, long long>> order(all.begin(), all.end());
  std::sort(order.begin(), order.end(), [&](const auto& A, const auto& B) {
    long long ka = idot(A.first, l.rho), kb = idot(B.first, l.rho);
    if (ka != kb) return ka > kb;
    return A.first > B.first;
  });

  long long invariants = 0;
  size_t ptr = 0;
  long long remaining = dim;
  while (remaining > 0) {
    while (ptr < order.size() && all[order[ptr].first] == 0) ++ptr;
    if (ptr == order.size()) throw std::logic_error("extraction: residual lost");
    IVec mu = order[ptr].first;
    long long m = all[mu];
    // Highest weights are Theta-dominant.
    for (const IVec& a : l.simple)
      if (idot(mu, a) < 0) throw std::logic_error("extraction: non-dominant highest weight");

    bool is_zero_weight = std::all_of(mu.begin(), mu.end(), [](long long x) { return x == 0; });
    if (is_zero_weight) invariants += m;

    MultMap comp = freudenthal(l, mu);
    for (const auto& [v, cm] : comp) {
      auto it = all.find(v);
      if (it == all.end() || it->second < m * cm)
        throw std::logic_error("extraction: negative residual");
      it->second -= m * cm;
      remaining -= m * cm;
    }
  }
  return invariants;
}

}  // namespace levi
