#include "levi/younga.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace levi {

long long Diagram::boxes() const {
  return std::accumulate(rows.begin(), rows.end(), 0ll);
}

long long Diagram::col_height(long long j) const {
  long long h = 0;
  for (long long r : rows)
    if (r >= j) ++h;
  return h;
}

bool Diagram::valid() const {
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] < 0) return false;
    if (i && rows[i] > rows[i - 1]) return false;
  }
  return true;
}

std::string Diagram::str() const {
  std::string s;
  for (size_t i = 0; i < rows.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(rows[i]);
  }
  return s;
}

Diagram Diagram::parse(const std::string& s, int order) {
  Diagram d;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) d.rows.push_back(std::stoll(tok));
  if (order >= 0) {
    if ((int)d.rows.size() > order) throw std::invalid_argument("diagram exceeds order");
    d.rows.resize(order, 0);
  }
  if (!d.valid()) throw std::invalid_argument("diagram rows must be nonincreasing");
  return d;
}

Diagram operator+(const Diagram& a, const Diagram& b) {
  if (a.order() != b.order()) throw std::invalid_argument("diagram order mismatch");
  Diagram c = a;
  for (int i = 0; i < b.order(); ++i) c.rows[i] += b.rows[i];
  return c;
}

bool contains(const Diagram& outer, const Diagram& inner) {
  if (outer.order() != inner.order()) throw std::invalid_argument("diagram order mismatch");
  for (int i = 0; i < outer.order(); ++i)
    if (inner.rows[i] > outer.rows[i]) return false;
  return true;
}

Diagram column_diagram(int order, long long h) {
  if (h < 0 || h > order) throw std::invalid_argument("column height out of range");
  Diagram d;
  d.rows.assign(order, 0);
  for (long long i = 0; i < h; ++i) d.rows[i] = 1;
  return d;
}

long long skew_thickness(const SkewDiagram& s) {
  if (!contains(s.outer, s.inner)) throw std::invalid_argument("inner not contained in outer");
  long long t = 0;
  long long width = s.outer.rows.empty() ? 0 : s.outer.rows[0];
  for (long long j = 1; j <= width; ++j)
    t = std::max(t, s.outer.col_height(j) - s.inner.col_height(j));
  return t;
}

Diagram TableauA::shape(int order) const {
  Diagram d;
  for (const auto& r : rows) d.rows.push_back((long long)r.size());
  if ((int)d.rows.size() > order) throw std::invalid_argument("tableau exceeds order");
  d.rows.resize(order, 0);
  return d;
}

long long TableauA::boxes() const {
  long long b = 0;
  for (const auto& r : rows) b += (long long)r.size();
  return b;
}

std::string TableauA::str() const {
  std::string s;
  for (size_t i = 0; i < rows.size(); ++i) {
    if (i) s += "/";
    for (size_t j = 0; j < rows[i].size(); ++j) {
      if (j) s += ",";
      s += std::to_string(rows[i][j]);
    }
  }
  return s;
}

ShapeStats shape_stats(const Diagram& p) {
  if (!p.valid()) throw std::invalid_argument("invalid diagram");
  int n = p.order();
  if (n == 0) throw std::invalid_argument("diagram of order zero");
  ShapeStats st;
  st.offset = Rat(p.boxes(), n);
  st.sln_shape.resize(n);
  for (int i = 0; i < n; ++i) st.sln_shape[i] = Rat(p.rows[i]) - st.offset;
  st.reduced.rows.resize(n);
  for (int i = 0; i < n; ++i) st.reduced.rows[i] = p.rows[i] - p.rows[n - 1];
  return st;
}

namespace {

bool tableau_semistandard(const TableauA& t, int n) {
  for (size_t i = 0; i < t.rows.size(); ++i) {
    if (i && t.rows[i].size() > t.rows[i - 1].size()) return false;
    for (size_t j = 0; j < t.rows[i].size(); ++j) {
      int s = t.rows[i][j];
      if (s < 1 || s > n) throw std::invalid_argument("tableau symbol out of range");
      if (j && s < t.rows[i][j - 1]) return false;          // rows nondecreasing
      if (i && s <= t.rows[i - 1][j]) return false;         // columns strictly increasing
    }
  }
  return true;
}

// Symbol counts in columns [from, to) of the tableau.
std::vector<long long> column_range_counts(const TableauA& t, int n, size_t from, size_t to) {
  std::vector<long long> c(n + 1, 0);
  for (const auto& row : t.rows)
    for (size_t j = from; j < std::min(to, row.size()); ++j) ++c[row[j]];
  return c;
}

}  // namespace

TableauFlags check_tableau_a(const TableauA& t, int n, const ThetaSet& theta) {
  TableauFlags f;
  f.semistandard = tableau_semistandard(t, n);
  Diagram shape = t.shape(n);
  ShapeStats st = shape_stats(shape);
  auto counts = column_range_counts(t, n, 0, shape.rows.empty() ? 0 : (size_t)shape.rows[0]);
  f.balanced = true;
  for (int s = 2; s <= n; ++s)
    if (counts[s] != counts[1]) f.balanced = false;
  f.total_weight.resize(n);
  for (int s = 1; s <= n; ++s) f.total_weight[s - 1] = Rat(counts[s]) - st.offset;

  f.codominant = true;
  size_t width = shape.rows.empty() ? 0 : (size_t)shape.rows[0];
  std::vector<long long> pref(n + 1, 0);
  for (size_t j = 0; j < width && f.codominant; ++j) {
    for (const auto& row : t.rows)
      if (j < row.size()) ++pref[row[j]];
    for (int i : theta)
      if (i >= 1 && i < n && pref[i] > pref[i + 1]) f.codominant = false;
  }
  return f;
}

bool tableau_dominant_a(const TableauA& t, int n, const ThetaSet& theta) {
  Diagram shape = t.shape(n);
  size_t width = shape.rows.empty() ? 0 : (size_t)shape.rows[0];
  std::vector<long long> suf(n + 1, 0);
  for (size_t jj = width; jj-- > 0;) {
    for (const auto& row : t.rows)
      if (jj < row.size()) ++suf[row[jj]];
    for (int i : theta)
      if (i >= 1 && i < n && suf[i] < suf[i + 1]) return false;
  }
  return true;
}

std::vector<Diagram> strip_decompose(const TableauA& t, int n) {
  if (!tableau_semistandard(t, n)) throw std::invalid_argument("tableau not semistandard");
  std::vector<Diagram> chain(n + 1);
  for (int s = 0; s <= n; ++s) chain[s].rows.assign(t.rows.size(), 0);
  for (size_t i = 0; i < t.rows.size(); ++i)
    for (size_t j = 0; j < t.rows[i].size(); ++j)
      for (int s = t.rows[i][j]; s <= n; ++s)
        chain[s].rows[i] = (long long)j + 1;
  return chain;
}

TableauA strip_compose(const std::vector<Diagram>& chain) {
  if (chain.empty()) throw std::invalid_argument("empty chain");
  TableauA t;
  const Diagram& last = chain.back();
  t.rows.resize(last.rows.size());
  for (size_t i = 0; i < last.rows.size(); ++i) t.rows[i].resize(last.rows[i]);
  for (size_t s = 1; s < chain.size(); ++s)
    for (size_t i = 0; i < last.rows.size(); ++i) {
      long long lo = chain[s - 1].rows[i], hi = chain[s].rows[i];
      for (long long j = lo; j < hi; ++j) t.rows[i][j] = (int)s;
    }
  while (!t.rows.empty() && t.rows.back().empty()) t.rows.pop_back();
  return t;
}

std::vector<long long> bridges(const SkewDiagram& s) {
  if (!contains(s.outer, s.inner)) throw std::invalid_argument("inner not contained in outer");
  int n = s.outer.order();
  auto p = [&](int i) { return i <= n ? s.outer.rows[i - 1] : 0ll; };
  auto q = [&](int i) { return i >= 1 ? s.inner.rows[i - 1] : 0ll; };
  std::vector<long long> b(n);
  for (int i = 1; i <= n; ++i) {
    long long lo = std::max(q(i), p(i + 1));
    long long hi = i == 1 ? p(1) : std::min(q(i - 1), p(i));
    b[i - 1] = std::max(0ll, hi - lo);
  }
  return b;
}

TwoRowFilling exists_filling_2row(const SkewDiagram& s) {
  TwoRowFilling out{false, {}};
  long long total = s.outer.boxes() - s.inner.boxes();
  if (total % 2 != 0) return out;
  if (skew_thickness(s) > 2) return out;
  std::vector<long long> b = bridges(s);
  long long bsum = std::accumulate(b.begin(), b.end(), 0ll);
  for (long long bi : b)
    if (2 * bi > bsum) return out;
  out.exists = true;
  // Fill the leftmost half of all bridge boxes with 2s and the rightmost half
  // with 1s; when the cut falls inside a bridge, swap within that bridge.
  long long half = bsum / 2;
  out.witness.resize(b.size());
  long long acc = 0;
  for (size_t i = 0; i < b.size(); ++i) {
    long long before = acc;
    acc += b[i];
    if (acc <= half)
      out.witness[i] = 0;
    else if (before >= half)
      out.witness[i] = b[i];
    else
      out.witness[i] = half - (bsum - acc);
  }
  return out;
}

bool odd_theta_inequalities(const Diagram& p) {
  int n = p.order();
  if (n % 2) throw std::invalid_argument("odd-index condition needs even order");
  int m = n / 2;
  auto pr = [&](int i) { return p.rows[i - 1]; };
  long long first = -pr(1);
  for (int i = 2; i <= m + 1; ++i) first += pr(i);
  for (int i = m + 2; i <= 2 * m; ++i) first -= pr(i);
  long long second = -pr(2 * m);
  for (int i = 1; i <= m - 1; ++i) second -= pr(i);
  for (int i = m; i <= 2 * m - 1; ++i) second += pr(i);
  return first >= 0 && second <= 0;
}

bool induction_pair_conditions(const Diagram& p, const Diagram& q) {
  int n = p.order();
  if (q.order() != n - 2) throw std::invalid_argument("companion must have order n-2");
  if (!p.valid() || !q.valid()) throw std::invalid_argument("invalid diagram");
  if (!odd_theta_inequalities(q)) return false;
  if ((p.boxes() - q.boxes()) % 2 != 0) return false;
  Diagram qpad = q;
  qpad.rows.resize(n, 0);
  if (!contains(p, qpad)) return false;
  SkewDiagram s{p, qpad};
  if (skew_thickness(s) > 2) return false;
  auto b = bridges(s);
  long long bsum = std::accumulate(b.begin(), b.end(), 0ll);
  for (long long bi : b)
    if (2 * bi > bsum) return false;
  return true;
}

bool exists_balanced_filling(const Diagram& p, const ThetaSet& theta) {
  if (!p.valid()) throw std::invalid_argument("invalid diagram");
  int n = p.order();
  bool integer_offset = p.boxes() % n == 0;
  if (theta.empty()) return integer_offset;

  bool contiguous = true;
  for (int i = 1; i <= (int)theta.size(); ++i)
    if (!theta.count(i)) contiguous = false;
  if (contiguous && *theta.rbegin() < n) {
    int k = (int)theta.size() + 1;
    if (!integer_offset) return false;
    long long a = p.boxes() / n;
    return p.rows[k - 1] >= a && a >= p.rows[n - k];
  }

  bool odd_pattern = n % 2 == 0;
  for (int i = 1; i <= n - 1 && odd_pattern; ++i)
    if (theta.count(i) != (i % 2 == 1 ? 1u : 0u)) odd_pattern = false;
  if (odd_pattern) return integer_offset && odd_theta_inequalities(p);

  throw std::invalid_argument("exists_balanced_filling: unsupported Theta shape");
}

namespace {

// Coordinates of a diagram in the single-column basis: x_i = p_i - p_{i+1}.
std::vector<long long> column_coords(const Diagram& p) {
  int n = p.order();
  std::vector<long long> x(n + 1, 0);
  for (int i = 1; i <= n; ++i) x[i] = p.rows[i - 1] - (i < n ? p.rows[i] : 0);
  return x;
}

Diagram from_columns(int order, const std::vector<std::pair<long long, long long>>& cols) {
  Diagram d;
  d.rows.assign(order, 0);
  for (auto [h, mult] : cols) {
    if (h < 0 || h > order) throw std::logic_error("partner column out of range");
    for (long long i = 0; i < h; ++i) d.rows[i] += mult;
  }
  std::sort(d.rows.begin(), d.rows.end(), std::greater<>());
  return d;
}

}  // namespace

Diagram construct_slmH_partner(const Diagram& p, int direction) {
  if (!p.valid()) throw std::invalid_argument("invalid diagram");
  int n = p.order();
  if (n < 4 || n % 2) throw std::invalid_argument("order must be even and at least 4");
  int m = n / 2;
  bool minus = direction < 0;
  auto x = column_coords(p);
  std::vector<int> support;
  for (int i = 1; i <= n; ++i)
    if (x[i] != 0) support.push_back(i);

  auto result = [&](std::initializer_list<std::pair<long long, long long>> cols) {
    return from_columns(n - 2, std::vector<std::pair<long long, long long>>(cols));
  };

  // Single column C_i, i even.
  if (support.size() == 1 && x[support[0]] == 1) {
    int i = support[0];
    if (i >= 2 && i % 2 == 0) {
      if (i < n && !minus) return result({{i, 1}});
      return result({{i - 2, 1}});
    }
  }
  // C_i + a C_1.
  if (support.size() == 2 && support[0] == 1 && x[support[1]] == 1) {
    int i = support[1];
    long long a = x[1];
    if (a > 0 && a <= std::min<long long>(i - 2, n - i) && (i + a) % 2 == 0) {
      if (a < n - i && !minus) return result({{i, 1}, {1, a}});
      return result({{i - 1, 1}, {1, a - 1}});
    }
  }
  // a C_{n-1} + C_i.
  if (support.size() == 2 && support[1] == n - 1 && x[support[0]] == 1) {
    int i = support[0];
    long long a = x[n - 1];
    if (a > 0 && a <= std::min<long long>(i, n - 2 - i) && (i + a) % 2 == 0) {
      if (a == i || !minus)
        return result({{n - 2, 1}, {n - 3, a - 1}, {i - 1, 1}});
      return result({{n - 3, a}, {i - 2, 1}});
    }
  }
  // C_j + C_i, i < j both odd.
  if (support.size() == 2 && x[support[0]] == 1 && x[support[1]] == 1) {
    int i = support[0], j = support[1];
    if (i % 2 && j % 2 && i >= 2 && j <= n - 2) {
      if (i + j < n && !minus) return result({{j, 1}, {i, 1}});
      if (i + j <= n) return result({{j - 1, 1}, {i - 1, 1}});
      if (minus) return result({{j - 2, 1}, {i - 2, 1}});
      return result({{j - 1, 1}, {i - 1, 1}});
    }
  }
  // 2 C_i, i odd.
  if (support.size() == 1 && x[support[0]] == 2) {
    int i = support[0];
    if (i % 2 && i >= 2 && i <= n - 2) {
      if (i < m && !minus) return result({{i, 2}});
      if (i <= m) return result({{i, 1}, {i - 2, 1}});
      if (minus) return result({{i - 2, 2}});
      return result({{i, 1}, {i - 2, 1}});
    }
  }
  throw std::invalid_argument("diagram is not a primitive basis element");
}

namespace {

void enumerate_chains(const Diagram& p, int n, int s, std::vector<long long>& cur,
                      std::vector<Diagram>& chain, const FillingFilters& filters,
                      const ThetaSet& theta, long long target_strip,
                      std::vector<TableauA>& out) {
  int nrows = p.order();
  if (s > n) {
    for (int i = 0; i < nrows; ++i)
      if (cur[i] != p.rows[i]) return;
    TableauA t = strip_compose(chain);
    if (filters.codominant || filters.dominant) {
      if (filters.codominant && !check_tableau_a(t, n, theta).codominant) return;
      if (filters.dominant && !tableau_dominant_a(t, n, theta)) return;
    }
    out.push_back(std::move(t));
    return;
  }
  // Column-height prune: each remaining strip adds at most one box per column.
  long long width = p.rows.empty() ? 0 : p.rows[0];
  for (long long j = 1; j <= width; ++j) {
    long long need = 0, have = 0;
    for (int i = 0; i < nrows; ++i) {
      if (p.rows[i] >= j) ++need;
      if (cur[i] >= j) ++have;
    }
    if (need - have > n - s + 1) return;
  }

  // Choose the next diagram in the chain row by row.
  std::vector<long long> next(nrows);
  std::function<void(int, long long)> rec = [&](int i, long long added) {
    if (filters.balanced && added > target_strip) return;
    if (i == nrows) {
      if (filters.balanced && added != target_strip) return;
      Diagram d;
      d.rows = next;
      chain.push_back(d);
      std::vector<long long> save = cur;
      cur = next;
      enumerate_chains(p, n, s + 1, cur, chain, filters, theta, target_strip, out);
      cur = save;
      chain.pop_back();
      return;
    }
    long long lo = cur[i];
    long long hi = std::min(p.rows[i], i == 0 ? p.rows[0] : cur[i - 1]);
    if (i > 0) hi = std::min(hi, next[i - 1]);
    for (long long v = lo; v <= hi; ++v) {
      next[i] = v;
      rec(i + 1, added + v - lo);
    }
  };
  rec(0, 0);
}

}  // namespace

std::vector<TableauA> enumerate_fillings_a(const Diagram& p, int n,
                                           const FillingFilters& filters,
                                           const ThetaSet& theta, long long box_budget) {
  if (!p.valid()) throw std::invalid_argument("invalid diagram");
  if (p.order() > n) throw std::invalid_argument("diagram order exceeds symbol count");
  if (p.boxes() > box_budget) throw BudgetExceeded("enumerate_fillings_a: box budget exceeded");

  Diagram padded = p;
  padded.rows.resize(n, 0);
  long long target_strip = 0;
  if (filters.balanced) {
    if (padded.boxes() % n != 0) return {};
    target_strip = padded.boxes() / n;
  }
  std::vector<TableauA> out;
  std::vector<long long> cur(padded.order(), 0);
  std::vector<Diagram> chain;
  {
    Diagram empty;
    empty.rows.assign(padded.order(), 0);
    chain.push_back(empty);
  }
  enumerate_chains(padded, n, 1, cur, chain, filters, theta, target_strip, out);
  return out;
}

namespace {

Diagram reduced_diagram_of(const Weight& lambda, int n) {
  if ((int)lambda.size() != n) throw std::invalid_argument("weight length mismatch");
  Diagram d;
  d.rows.resize(n);
  for (int i = 0; i < n; ++i) {
    Rat diff = lambda[i] - lambda[n - 1];
    if (!diff.is_integer() || diff.sgn() < 0 ||
        (i > 0 && lambda[i] > lambda[i - 1]))
      throw std::invalid_argument("weight not dominant integral for sl_n");
    d.rows[i] = diff.num;
  }
  return d;
}

}  // namespace

long long count_null_dominant_a(const Weight& lambda, int n, const ThetaSet& theta,
                                long long box_budget) {
  Diagram red = reduced_diagram_of(lambda, n);
  if (red.boxes() % n != 0) return 0;
  FillingFilters f;
  f.balanced = true;
  f.dominant = true;
  return (long long)enumerate_fillings_a(red, n, f, theta, box_budget).size();
}

std::map<Weight, long long> character_a(const Weight& lambda, int n, long long box_budget) {
  Diagram red = reduced_diagram_of(lambda, n);
  ShapeStats st = shape_stats(red);
  Rat shift;
  for (const Rat& x : lambda) shift += x;
  shift /= Rat(n);
  std::map<Weight, long long> out;
  for (const TableauA& t : enumerate_fillings_a(red, n, {}, {}, box_budget)) {
    auto counts = column_range_counts(t, n, 0, red.rows.empty() ? 0 : (size_t)red.rows[0]);
    Weight nu(n);
    for (int s = 1; s <= n; ++s) nu[s - 1] = Rat(counts[s]) - st.offset + shift;
    ++out[nu];
  }
  return out;
}

}  // namespace levi
