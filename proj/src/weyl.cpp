#include "levi/weyl.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace levi {

WeylElement weyl_identity(int n) {
  WeylElement w;
  w.perm.resize(n);
  std::iota(w.perm.begin(), w.perm.end(), 0);
  w.sign.assign(n, 1);
  return w;
}

Weight weyl_apply(const WeylElement& w, const Weight& v) {
  Weight out(v.size());
  for (size_t i = 0; i < v.size(); ++i)
    out[w.perm[i]] = w.sign[i] < 0 ? -v[i] : v[i];
  return out;
}

Weight weyl_apply_inverse(const WeylElement& w, const Weight& v) {
  Weight out(v.size());
  for (size_t i = 0; i < v.size(); ++i)
    out[i] = w.sign[i] < 0 ? -v[w.perm[i]] : v[w.perm[i]];
  return out;
}

WeylElement weyl_compose(const WeylElement& a, const WeylElement& b) {
  size_t n = a.perm.size();
  WeylElement c;
  c.perm.resize(n);
  c.sign.resize(n);
  for (size_t i = 0; i < n; ++i) {
    c.perm[i] = a.perm[b.perm[i]];
    c.sign[i] = (int8_t)(a.sign[b.perm[i]] * b.sign[i]);
  }
  return c;
}

namespace {

using Key = std::pair<std::vector<int>, std::vector<int8_t>>;

struct GroupData {
  WeylGroup g;
  std::map<Key, int> index;
};

int length_of(const RootSystem& rs, const WeylElement& w) {
  int len = 0;
  for (const Weight& a : rs.positive)
    if (dot(weyl_apply(w, a), rs.rho).sgn() < 0) ++len;
  return len;
}

// A reflection s_beta as a signed permutation (classical types).
WeylElement reflection_of(int n, const Weight& beta) {
  WeylElement s = weyl_identity(n);
  std::vector<int> nz;
  for (int i = 0; i < n; ++i)
    if (!beta[i].is_zero()) nz.push_back(i);
  if (nz.size() == 1) {
    s.sign[nz[0]] = -1;  // e_i or 2e_i
  } else {
    int i = nz[0], j = nz[1];
    s.perm[i] = j;
    s.perm[j] = i;
    if (beta[i].sgn() == beta[j].sgn()) {  // e_i + e_j
      s.sign[i] = -1;
      s.sign[j] = -1;
    }
  }
  return s;
}

GroupData build_group(const LieType& t) {
  if (t.fam != Fam::A && t.fam != Fam::B && t.fam != Fam::C && t.fam != Fam::D)
    throw std::invalid_argument("weyl_group: classical types only");
  const RootSystem& rs = root_system(t);
  int n = rs.dim;
  GroupData gd;
  gd.g.type = t;

  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    if (t.fam == Fam::A) {
      WeylElement w{p, std::vector<int8_t>(n, 1)};
      gd.g.elems.push_back(w);
    } else {
      for (int mask = 0; mask < (1 << n); ++mask) {
        if (t.fam == Fam::D && __builtin_popcount(mask) % 2) continue;
        WeylElement w;
        w.perm = p;
        w.sign.resize(n);
        for (int i = 0; i < n; ++i) w.sign[i] = (mask >> i) & 1 ? -1 : 1;
        gd.g.elems.push_back(w);
      }
    }
  } while (std::next_permutation(p.begin(), p.end()));

  int N = (int)gd.g.elems.size();
  for (int i = 0; i < N; ++i)
    gd.index[{gd.g.elems[i].perm, gd.g.elems[i].sign}] = i;

  gd.g.length.resize(N);
  for (int i = 0; i < N; ++i) gd.g.length[i] = length_of(rs, gd.g.elems[i]);

  std::vector<WeylElement> refl;
  for (const Weight& b : rs.positive) refl.push_back(reflection_of(n, b));
  // C_r has both e_i-e_j / e_i+e_j and 2e_i roots giving duplicate
  // reflections; harmless for cover computation.

  gd.g.cover_up.resize(N);
  for (int i = 0; i < N; ++i) {
    for (const WeylElement& s : refl) {
      WeylElement w2 = weyl_compose(s, gd.g.elems[i]);
      auto it = gd.index.find({w2.perm, w2.sign});
      int j = it->second;
      if (gd.g.length[j] == gd.g.length[i] + 1) gd.g.cover_up[i].push_back(j);
    }
    std::sort(gd.g.cover_up[i].begin(), gd.g.cover_up[i].end());
    gd.g.cover_up[i].erase(
        std::unique(gd.g.cover_up[i].begin(), gd.g.cover_up[i].end()),
        gd.g.cover_up[i].end());
  }

  if (N <= 4096) {
    int words = (N + 63) / 64;
    gd.g.upset.assign(N, std::vector<uint64_t>(words, 0));
    std::vector<int> order(N);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return gd.g.length[a] > gd.g.length[b]; });
    for (int i : order) {
      gd.g.upset[i][i / 64] |= 1ull << (i % 64);
      for (int j : gd.g.cover_up[i])
        for (int wdx = 0; wdx < words; ++wdx) gd.g.upset[i][wdx] |= gd.g.upset[j][wdx];
    }
  }
  return gd;
}

std::map<LieType, GroupData>& group_cache() {
  static std::map<LieType, GroupData> cache;
  return cache;
}
std::mutex& group_mutex() {
  static std::mutex m;
  return m;
}

const GroupData& group_data(const LieType& t, int rank_bound) {
  if (t.rank > rank_bound)
    throw std::invalid_argument("weyl_group: rank exceeds enumeration bound");
  std::lock_guard<std::mutex> lock(group_mutex());
  auto& cache = group_cache();
  auto it = cache.find(t);
  if (it == cache.end()) it = cache.emplace(t, build_group(t)).first;
  return it->second;
}

}  // namespace

int WeylGroup::index_of(const WeylElement& w) const {
  // linear fallback (only used through bruhat_leq which goes via GroupData)
  for (size_t i = 0; i < elems.size(); ++i)
    if (elems[i] == w) return (int)i;
  return -1;
}

bool WeylGroup::leq(int i, int j) const {
  if (i == j) return true;
  if (length[i] >= length[j]) return false;
  if (!upset.empty()) return (upset[i][j / 64] >> (j % 64)) & 1;
  // BFS upward from i along covers, bounded by length[j].
  std::vector<char> seen(elems.size(), 0);
  std::queue<int> q;
  q.push(i);
  seen[i] = 1;
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    if (x == j) return true;
    if (length[x] >= length[j]) continue;
    for (int y : cover_up[x])
      if (!seen[y]) {
        seen[y] = 1;
        q.push(y);
      }
  }
  return false;
}

const WeylGroup& weyl_group(const LieType& t, int rank_bound) {
  return group_data(t, rank_bound).g;
}

bool bruhat_leq(const LieType& t, const WeylElement& w1, const WeylElement& w2,
                int rank_bound) {
  const GroupData& gd = group_data(t, rank_bound);
  auto i = gd.index.find({w1.perm, w1.sign});
  auto j = gd.index.find({w2.perm, w2.sign});
  if (i == gd.index.end() || j == gd.index.end())
    throw std::invalid_argument("bruhat_leq: element not in group");
  return gd.g.leq(i->second, j->second);
}

int weyl_length(const LieType& t, const WeylElement& w) {
  return length_of(root_system(t), w);
}

bool bruhat_tuple_oracle(const LieType& t, const std::vector<Weight>& weights,
                         int rank_bound) {
  if (weights.empty()) return true;
  const WeylGroup& g = weyl_group(t, rank_bound);
  int N = (int)g.elems.size();

  auto candidates = [&](const Weight& v) {
    std::vector<char> c(N, 0);
    for (int i = 0; i < N; ++i)
      c[i] = classify_weight(t, weyl_apply_inverse(g.elems[i], v)).dominant;
    return c;
  };

  std::vector<char> cur = candidates(weights[0]);
  for (size_t k = 1; k < weights.size(); ++k) {
    // Upward closure of cur along Bruhat covers.
    std::vector<char> up = cur;
    std::vector<int> order(N);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return g.length[a] < g.length[b]; });
    for (int i : order)
      if (up[i])
        for (int j : g.cover_up[i]) up[j] = 1;
    std::vector<char> cand = candidates(weights[k]);
    for (int i = 0; i < N; ++i) cur[i] = up[i] && cand[i];
  }
  for (int i = 0; i < N; ++i)
    if (cur[i]) return true;
  return false;
}

}  // namespace levi
