#include "levi/doubled.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace levi {

namespace {

int rank_of(const LieType& g) {
  if (g.fam != Fam::B && g.fam != Fam::C && g.fam != Fam::D)
    throw std::invalid_argument("doubled tableaux need type B, C or D");
  std::string why;
  if (!valid_type(g, &why)) throw std::invalid_argument(why);
  return g.rank;
}

// Strict alphabet order; in type D, r and barred r are incomparable.
bool alpha_lt(int s, int t, const LieType& g) {
  if (s == t) return false;
  int r = g.rank;
  if (g.fam == Fam::D && std::abs(s) == r && std::abs(t) == r) return false;
  return symbol_key(s, r) < symbol_key(t, r);
}

bool alpha_leq(int s, int t, const LieType& g) { return s == t || alpha_lt(s, t, g); }

int unbarred_count(const Column& c) {
  return (int)std::count_if(c.begin(), c.end(), [](int s) { return s > 0; });
}

void sort_column(Column& c, int r) {
  std::sort(c.begin(), c.end(),
            [r](int a, int b) { return symbol_key(a, r) < symbol_key(b, r); });
}

// Rowwise comparison and, in type D, the rectangle parity condition: if the
// absolute values of both columns over some rows i0..i0+k-1 each form the top
// interval {r-k+1..r}, the total unbarred counts must agree mod 2.
bool young_leq(const Column& c, const Column& cp, const LieType& g) {
  if (c.size() < cp.size()) return false;
  for (size_t i = 0; i < cp.size(); ++i)
    if (!alpha_leq(c[i], cp[i], g)) return false;
  if (g.fam != Fam::D) return true;
  int r = g.rank;
  int m = (int)cp.size();
  for (int k = 1; k <= std::min(m, r); ++k) {
    std::set<int> target;
    for (int v = r - k + 1; v <= r; ++v) target.insert(v);
    for (int i0 = 0; i0 + k <= m; ++i0) {
      std::set<int> a, b;
      for (int i = i0; i < i0 + k; ++i) {
        a.insert(std::abs(c[i]));
        b.insert(std::abs(cp[i]));
      }
      if (a == target && b == target &&
          (unbarred_count(c) - unbarred_count(cp)) % 2 != 0)
        return false;
    }
  }
  return true;
}

void require_standard(const Column& c, const LieType& g) {
  if (!strongly_standard(c, g.rank))
    throw std::invalid_argument("column is not strongly standard: " + column_str(c));
}

// Maximal runs of consecutive absolute values, as (a, b) with content a+1..b.
std::vector<std::pair<int, int>> interval_data(const Column& c) {
  std::vector<int> abs;
  for (int s : c) abs.push_back(std::abs(s));
  std::sort(abs.begin(), abs.end());
  std::vector<std::pair<int, int>> runs;
  for (size_t i = 0; i < abs.size();) {
    size_t j = i;
    while (j + 1 < abs.size() && abs[j + 1] == abs[j] + 1) ++j;
    runs.push_back({abs[i] - 1, abs[j]});
    i = j + 1;
  }
  return runs;
}

std::vector<int> int_column_weight(const Column& c, int r) {
  std::vector<int> w(r, 0);
  for (int s : c) w[std::abs(s) - 1] += s > 0 ? 1 : -1;
  return w;
}

// Sign contributed by a height-r column (0 when the tableau has none).
int tableau_sign(const DoubledTableau& t, const LieType& g) {
  int r = g.rank;
  if (t.columns.empty() || (int)t.columns.front().size() < r) return 0;
  if (g.fam != Fam::D) return 1;
  int barred = (int)t.columns.front().size() - unbarred_count(t.columns.front());
  return barred % 2 ? -1 : 1;
}

// <w, alpha_i> > 0 for the i-th simple root, on integer e-coordinates.
bool simple_root_positive(const std::vector<int>& w, int i, const LieType& g) {
  int r = g.rank;
  if (i < r) return w[i - 1] > w[i];
  if (g.fam == Fam::D) return w[r - 2] + w[r - 1] > 0;
  return w[r - 1] > 0;
}

Column make_runs(std::initializer_list<std::pair<int, int>> up,
                 std::initializer_list<std::pair<int, int>> down) {
  Column c;
  for (auto [a, b] : up)
    for (int s = a; s <= b; ++s) c.push_back(s);
  for (auto [a, b] : down)
    for (int s = a; s >= b; --s) c.push_back(-s);
  return c;
}

}  // namespace

int symbol_key(int s, int r) { return s > 0 ? s : 2 * r + 1 + s; }

bool strongly_standard(const Column& c, int r) {
  std::set<int> abs;
  int prev_key = 0;
  for (int s : c) {
    int a = std::abs(s);
    if (a < 1 || a > r) return false;
    if (!abs.insert(a).second) return false;
    int k = symbol_key(s, r);
    if (k <= prev_key) return false;
    prev_key = k;
  }
  return !c.empty();
}

std::vector<Column> all_columns(int r) {
  std::vector<Column> out;
  long long total = 1;
  for (int i = 0; i < r; ++i) total *= 3;
  for (long long code = 1; code < total; ++code) {
    Column c;
    long long x = code;
    for (int a = 1; a <= r; ++a, x /= 3) {
      int d = (int)(x % 3);
      if (d == 1) c.push_back(a);
      else if (d == 2) c.push_back(-a);
    }
    sort_column(c, r);
    out.push_back(std::move(c));
  }
  auto key_vec = [r](const Column& c) {
    std::vector<int> k;
    for (int s : c) k.push_back(symbol_key(s, r));
    return k;
  };
  std::sort(out.begin(), out.end(), [&](const Column& a, const Column& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return key_vec(a) < key_vec(b);
  });
  return out;
}

std::vector<Column> columns_of_height(int r, int h) {
  std::vector<Column> out;
  for (auto& c : all_columns(r))
    if ((int)c.size() == h) out.push_back(c);
  return out;
}

Weight column_weight(const Column& c, int r) {
  auto w = int_column_weight(c, r);
  Weight out(r);
  for (int i = 0; i < r; ++i) out[i] = Rat(w[i]);
  return out;
}

std::string column_str(const Column& c) {
  std::string s;
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s;
}

Column parse_column(const std::string& s) {
  Column c;
  size_t pos = 0;
  while (pos < s.size()) {
    auto comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (!tok.empty()) c.push_back(std::stoi(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return c;
}

bool young_compare(const Column& c, const Column& cp, const LieType& g) {
  rank_of(g);
  require_standard(c, g);
  require_standard(cp, g);
  return young_leq(c, cp, g);
}

bool hasse_cover(const Column& c, const Column& cp, const LieType& g) {
  int r = rank_of(g);
  require_standard(c, g);
  require_standard(cp, g);
  if (c.size() == cp.size() + 1) {
    // Truncation: drop the last box; the removed symbol must be maximal among
    // the symbols that could be appended to the shorter column, i.e. those y
    // with neither y nor its bar already present.
    for (size_t i = 0; i < cp.size(); ++i)
      if (c[i] != cp[i]) return false;
    int s = c.back();
    for (int a = 1; a <= r; ++a)
      for (int y : {a, -a})
        if (std::find(cp.begin(), cp.end(), y) == cp.end() &&
            std::find(cp.begin(), cp.end(), -y) == cp.end() && alpha_lt(s, y, g))
          return false;
    return true;
  }
  if (c.size() != cp.size()) return false;
  std::vector<size_t> diff;
  for (size_t i = 0; i < c.size(); ++i)
    if (c[i] != cp[i]) diff.push_back(i);
  if (diff.size() == 1) {
    // One box s -> t; every strictly intermediate symbol must occur barred in
    // both columns.
    int s = c[diff[0]], t = cp[diff[0]];
    if (!alpha_lt(s, t, g)) return false;
    for (int a = 1; a <= r; ++a)
      for (int x : {a, -a})
        if (alpha_lt(s, x, g) && alpha_lt(x, t, g)) {
          if (std::find(c.begin(), c.end(), -x) == c.end()) return false;
          if (std::find(cp.begin(), cp.end(), -x) == cp.end()) return false;
        }
    return true;
  }
  if (diff.size() == 2) {
    // Two boxes: s and barred t become t and barred s, with (s, t) an edge of
    // the alphabet order.
    int s = c[diff[0]], t = cp[diff[0]];
    if (c[diff[1]] != -t || cp[diff[1]] != -s) return false;
    if (!alpha_lt(s, t, g)) return false;
    for (int a = 1; a <= r; ++a)
      for (int x : {a, -a})
        if (alpha_lt(s, x, g) && alpha_lt(x, t, g)) return false;
    return true;
  }
  return false;
}

bool admissible_pair(const Column& c, const Column& cp, const LieType& g) {
  int r = rank_of(g);
  require_standard(c, g);
  require_standard(cp, g);
  if (!young_leq(cp, c, g)) return false;
  if (c.size() != cp.size()) return false;
  auto runs = interval_data(c), runsp = interval_data(cp);
  if (runs != runsp) return false;
  for (const auto& [a, b] : runs) {
    int x = 0, xp = 0;
    for (int s : c)
      if (s > a && s <= b) ++x;
    for (int s : cp)
      if (s > a && s <= b) ++xp;
    if (b == r && g.fam == Fam::B) continue;
    if (b == r && g.fam == Fam::D) {
      if ((x - xp) % 2 != 0) return false;
    } else if (x != xp) {
      return false;
    }
  }
  return true;
}

bool admissible_oracle(const Column& c, const Column& cp, const LieType& g) {
  int r = rank_of(g);
  require_standard(c, g);
  require_standard(cp, g);
  std::set<Column> seen{cp};
  std::deque<Column> queue{cp};
  auto push = [&](Column next) {
    sort_column(next, r);
    if (seen.insert(next).second) queue.push_back(next);
  };
  while (!queue.empty()) {
    Column cur = queue.front();
    queue.pop_front();
    if (cur == c) return true;
    auto has = [&](int s) { return std::find(cur.begin(), cur.end(), s) != cur.end(); };
    auto replaced = [&](int from1, int to1, int from2, int to2) {
      Column next;
      for (int s : cur) {
        if (s == from1) next.push_back(to1);
        else if (s == from2) next.push_back(to2);
        else next.push_back(s);
      }
      return next;
    };
    for (int i = 1; i < r; ++i)
      if (has(i) && has(-(i + 1))) push(replaced(i, i + 1, -(i + 1), -i));
    if (g.fam == Fam::B && has(r)) push(replaced(r, -r, 0, 0));
    if (g.fam == Fam::D && has(r - 1) && has(r))
      push(replaced(r - 1, -r, r, -(r - 1)));
  }
  return false;
}

std::string DoubledTableau::str() const {
  std::string s;
  for (const auto& c : columns) s += "(" + column_str(c) + ")";
  return s;
}

Diagram psi_shape(const Weight& lambda, const LieType& g) {
  int r = rank_of(g);
  if ((int)lambda.size() != r) throw std::invalid_argument("weight length must equal the rank");
  auto cls = classify_weight(g, lambda);
  if (!cls.dominant || !cls.integral)
    throw std::invalid_argument("psi_shape needs a dominant integral weight");
  std::vector<long long> rows;
  for (int i = 0; i < r; ++i) {
    Rat v = Rat(2) * lambda[i];
    if (i == r - 1 && v.sgn() < 0) v = -v;
    if (!v.is_integer()) throw std::logic_error("doubled row length not integral");
    rows.push_back(v.num);
  }
  return Diagram(rows);
}

TableauReport evaluate_tableau(const DoubledTableau& t, const LieType& g,
                               const ThetaSet& theta) {
  int r = rank_of(g);
  TableauReport rep;
  rep.g_standard = true;
  int n = (int)t.columns.size();
  for (const auto& c : t.columns)
    if (!strongly_standard(c, r)) rep.g_standard = false;
  if (rep.g_standard) {
    for (int j = 1; j < n; ++j)
      if (!young_leq(t.columns[j - 1], t.columns[j], g)) rep.g_standard = false;
    for (int j = 2; j <= n; ++j)
      if (j % 2 == n % 2 && !admissible_pair(t.columns[j - 1], t.columns[j - 2], g))
        rep.g_standard = false;
  }
  std::vector<int> acc(r, 0);
  std::set<int> syndrome;
  for (const auto& c : t.columns) {
    for (int s : c) {
      int a = std::abs(s);
      if (a >= 1 && a <= r) acc[a - 1] += s > 0 ? 1 : -1;
    }
    for (int i = 1; i <= r; ++i)
      if (simple_root_positive(acc, i, g)) syndrome.insert(i);
  }
  rep.weight = Weight(r);
  for (int i = 0; i < r; ++i) rep.weight[i] = Rat(acc[i], 2);
  rep.sign = tableau_sign(t, g);
  rep.syndrome = syndrome;
  rep.codominant = true;
  for (int i : theta)
    if (syndrome.count(i)) rep.codominant = false;
  return rep;
}

std::vector<DoubledTableau> enumerate_doubled(const Diagram& shape, const LieType& g,
                                              const DoubledFilters& filters,
                                              const ThetaSet& theta,
                                              long long box_budget) {
  int r = rank_of(g);
  if (!shape.valid() || shape.order() > r)
    throw std::invalid_argument("bad doubled shape: " + shape.str());
  if (shape.boxes() > box_budget)
    throw BudgetExceeded("doubled shape has " + std::to_string(shape.boxes()) +
                         " boxes, budget " + std::to_string(box_budget));
  int n = (int)(shape.rows.empty() ? 0 : shape.rows[0]);
  std::vector<int> heights;
  for (int j = 1; j <= n; ++j) heights.push_back((int)shape.col_height(j));
  std::vector<DoubledTableau> out;
  if (n == 0) {
    if (filters.sign == 2 || filters.sign == 0) out.push_back({});
    return out;
  }
  std::vector<std::vector<Column>> cand(r + 1);
  for (auto& c : all_columns(r)) cand[c.size()].push_back(c);
  std::vector<long long> boxes_after(n + 1, 0);
  for (int j = n - 1; j >= 0; --j) boxes_after[j] = boxes_after[j + 1] + heights[j];

  std::vector<Column> cols;
  std::vector<int> acc(r, 0);
  auto rec = [&](auto&& self, int j) -> void {
    if (j == n) {
      if (filters.null)
        for (int v : acc)
          if (v != 0) return;
      DoubledTableau t{cols};
      if (filters.sign != 2 && tableau_sign(t, g) != filters.sign) return;
      out.push_back(std::move(t));
      return;
    }
    for (const auto& c : cand[heights[j]]) {
      if (j > 0 && !young_leq(cols[j - 1], c, g)) continue;
      if (j > 0 && (j + 1) % 2 == n % 2 && !admissible_pair(c, cols[j - 1], g)) continue;
      if (j == 0 && filters.sign != 2) {
        DoubledTableau first{{c}};
        int s = heights[0] == r ? tableau_sign(first, g) : 0;
        if (s != filters.sign) continue;
      }
      auto w = int_column_weight(c, r);
      for (int i = 0; i < r; ++i) acc[i] += w[i];
      bool ok = true;
      if (filters.null) {
        long long total = 0;
        for (int v : acc) total += std::abs(v);
        if (total > boxes_after[j + 1]) ok = false;
        for (int v : acc)
          if (std::abs(v) > n - j - 1) ok = false;
      }
      if (ok && filters.codominant)
        for (int i : theta)
          if (simple_root_positive(acc, i, g)) ok = false;
      if (ok) {
        cols.push_back(c);
        self(self, j + 1);
        cols.pop_back();
      }
      for (int i = 0; i < r; ++i) acc[i] -= w[i];
    }
  };
  rec(rec, 0);
  return out;
}

std::map<Weight, long long> character_bcd(const Weight& lambda, const LieType& g,
                                          long long box_budget) {
  int r = rank_of(g);
  Diagram shape = psi_shape(lambda, g);
  DoubledFilters filters;
  if (g.fam == Fam::D && lambda[r - 1].sgn() != 0) filters.sign = lambda[r - 1].sgn();
  std::map<Weight, long long> chi;
  for (const auto& t : enumerate_doubled(shape, g, filters, {}, box_budget)) {
    std::vector<int> acc(r, 0);
    for (const auto& c : t.columns)
      for (int s : c) acc[std::abs(s) - 1] += s > 0 ? 1 : -1;
    Weight w(r);
    for (int i = 0; i < r; ++i) w[i] = Rat(acc[i], 2);
    ++chi[w];
  }
  return chi;
}

long long count_invariants_bcd(const Weight& lambda, const LieType& g,
                               const ThetaSet& theta, long long box_budget) {
  int r = rank_of(g);
  Diagram shape = psi_shape(lambda, g);
  DoubledFilters filters;
  filters.null = true;
  filters.codominant = true;
  if (g.fam == Fam::D && lambda[r - 1].sgn() != 0) filters.sign = lambda[r - 1].sgn();
  return (long long)enumerate_doubled(shape, g, filters, theta, box_budget).size();
}

DoubledTableau family_tableau(const std::string& name, int K, int L) {
  auto bad = [&]() {
    throw std::invalid_argument("unknown family " + name + "[" + std::to_string(K) +
                                (L >= 0 ? "," + std::to_string(L) : "") + "]");
  };
  DoubledTableau t;
  if (name == "T" && L < 0 && K >= 1 && K % 2 == 1) {
    int k = (K - 1) / 2;
    t.columns = {make_runs({{1, k + 1}}, {{2 * k + 1, k + 2}}),
                 make_runs({{k + 2, 2 * k + 1}}, {{k + 1, 1}})};
  } else if (name == "T" && L < 0 && K >= 2 && K % 2 == 0) {
    int k = K / 2;
    t.columns = {make_runs({{1, k}}, {{2 * k, k + 1}}),
                 make_runs({{k + 1, 2 * k}}, {{k, 1}})};
  } else if (name == "T'" && L < 0 && K >= 4 && K % 2 == 0) {
    int k = K / 2;
    t.columns = {make_runs({{1, k - 1}, {k + 1, k + 1}}, {{2 * k, k + 2}, {k, k}}),
                 make_runs({{k, k}, {k + 2, 2 * k}}, {{k + 1, k + 1}, {k - 1, 1}})};
  } else if (name == "T" && L >= 1 && K % 2 == 1 && L % 2 == 1 && K >= L) {
    int k = (K - 1) / 2, l = (L - 1) / 2;
    Column rep = make_runs({{k + 2, k + l + 1}}, {{k + 1, k - l + 1}});
    t.columns = {make_runs({{1, k + 1}}, {{2 * k + 1, k + 2}}),
                 make_runs({{k - l + 1, k + 1}, {k + l + 2, 2 * k + 1}},
                           {{k + l + 1, k + 2}, {k - l, 1}}),
                 rep, rep};
  } else if (name == "T" && L >= 1 && K % 2 == 0 && L % 2 == 1 && K > L) {
    int k = K / 2, l = (L - 1) / 2;
    Column rep = make_runs({{k + 2, k + l + 1}}, {{k + 1, k - l + 1}});
    t.columns = {make_runs({{1, k + 1}}, {{2 * k, k + 2}}),
                 make_runs({{k - l + 1, k + 1}, {k + l + 2, 2 * k}},
                           {{k + l + 1, k + 2}, {k - l, 1}}),
                 rep, rep};
  } else if (name == "T'" && L >= 3 && K % 2 == 1 && L % 2 == 1 && K >= L) {
    int k = (K - 1) / 2, l = (L - 1) / 2;
    Column rep = make_runs({{k + 3, k + l + 1}}, {{k + 2, k - l + 1}});
    t.columns = {make_runs({{1, k + 2}}, {{2 * k + 1, k + 3}}),
                 make_runs({{k - l + 1, k + 2}, {k + l + 2, 2 * k + 1}},
                           {{k + l + 1, k + 3}, {k - l, 1}}),
                 rep, rep};
  } else if (name == "T'" && L == 1 && K >= 3 && K % 2 == 1) {
    int k = (K - 1) / 2;
    Column rep = make_runs({}, {{k + 2, k + 2}});
    t.columns = {make_runs({{1, k}, {k + 2, k + 2}}, {{2 * k + 1, k + 3}, {k + 1, k + 1}}),
                 make_runs({{k + 1, 2 * k + 1}}, {{k, 1}}),
                 rep, rep};
  } else if (name == "S" && K >= 3 && K % 2 == 1 && (L < 0 || L == K)) {
    int k = (K - 1) / 2;
    t.columns = {make_runs({{1, k + 1}, {2 * k + 1, 2 * k + 1}}, {{2 * k, k + 2}}),
                 make_runs({{1, k}}, {{2 * k + 1, k + 1}}),
                 make_runs({{k + 1, 2 * k}}, {{2 * k + 1, 2 * k + 1}, {k, 1}}),
                 make_runs({{k + 2, 2 * k + 1}}, {{k + 1, 1}})};
  } else if (name == "S'" && K >= 5 && K % 2 == 1 && (L < 0 || L == K)) {
    int k = (K - 1) / 2;
    t.columns = {make_runs({{1, 2 * k + 1}}, {}),
                 make_runs({{1, 2 * k - 2}, {2 * k, 2 * k}},
                           {{2 * k + 1, 2 * k + 1}, {2 * k - 1, 2 * k - 1}}),
                 make_runs({{2 * k - 1, 2 * k - 1}},
                           {{2 * k + 1, 2 * k}, {2 * k - 2, 1}}),
                 make_runs({{2 * k + 1, 2 * k + 1}}, {{2 * k, 1}})};
  } else {
    bad();
  }
  return t;
}

DoubledTableau shift_tableau(const DoubledTableau& t, int x) {
  DoubledTableau out;
  for (const auto& c : t.columns) {
    Column nc;
    for (int s : c) {
      int a = std::abs(s) + x;
      if (a < 1) throw std::invalid_argument("shift_tableau: symbol out of range");
      nc.push_back(s > 0 ? a : -a);
    }
    out.columns.push_back(std::move(nc));
  }
  return out;
}

DoubledTableau sigma_tableau(const DoubledTableau& t, int r) {
  DoubledTableau out;
  for (const auto& c : t.columns) {
    Column nc;
    for (int s : c) nc.push_back(std::abs(s) == r ? -s : s);
    sort_column(nc, r);
    out.columns.push_back(std::move(nc));
  }
  return out;
}

}  // namespace levi
