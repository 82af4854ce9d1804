#include "levi/rootsys.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace levi {

std::string LieType::str() const {
  switch (fam) {
    case Fam::A: return "A" + std::to_string(rank);
    case Fam::B: return "B" + std::to_string(rank);
    case Fam::C: return "C" + std::to_string(rank);
    case Fam::D: return "D" + std::to_string(rank);
    case Fam::E: return "E" + std::to_string(rank);
    case Fam::F: return "F4";
    case Fam::G: return "G2";
  }
  return "?";
}

LieType parse_type(const std::string& s) {
  if (s.size() < 2) throw std::invalid_argument("bad LieType: " + s);
  Fam f;
  switch (s[0]) {
    case 'A': f = Fam::A; break;
    case 'B': f = Fam::B; break;
    case 'C': f = Fam::C; break;
    case 'D': f = Fam::D; break;
    case 'E': f = Fam::E; break;
    case 'F': f = Fam::F; break;
    case 'G': f = Fam::G; break;
    default: throw std::invalid_argument("bad LieType: " + s);
  }
  int r = std::stoi(s.substr(1));
  LieType t{f, r};
  std::string why;
  if (!valid_type(t, &why)) throw std::invalid_argument("bad LieType " + s + ": " + why);
  return t;
}

bool valid_type(const LieType& t, std::string* why) {
  auto fail = [&](const char* m) {
    if (why) *why = m;
    return false;
  };
  switch (t.fam) {
    case Fam::A:
      if (t.rank < 1) return fail("A_r needs r >= 1");
      return true;
    case Fam::B:
    case Fam::C:
      if (t.rank < 1) return fail("rank >= 1 required");
      return true;
    case Fam::D:
      if (t.rank < 3) return fail("D_r needs r >= 3");
      return true;
    case Fam::E:
      if (t.rank < 6 || t.rank > 8) return fail("E rank in {6,7,8}");
      return true;
    case Fam::F:
      if (t.rank != 4) return fail("F rank 4");
      return true;
    case Fam::G:
      if (t.rank != 2) return fail("G rank 2");
      return true;
  }
  return fail("unknown family");
}

int ambient_dim(const LieType& t) {
  switch (t.fam) {
    case Fam::A: return t.rank + 1;
    case Fam::B:
    case Fam::C:
    case Fam::D: return t.rank;
    case Fam::E: return 8;
    case Fam::F: return 4;
    case Fam::G: return 3;
  }
  return 0;
}

namespace {

Weight e_vec(int dim, int i, Rat c = Rat(1)) {
  Weight w(dim, Rat(0));
  w[i] = c;
  return w;
}

// Solve A x = b by Gaussian elimination; A square and invertible.
std::vector<Rat> solve_linear(std::vector<std::vector<Rat>> A, std::vector<Rat> b) {
  int n = (int)A.size();
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int row = col; row < n; ++row)
      if (!A[row][col].is_zero()) {
        piv = row;
        break;
      }
    if (piv < 0) throw std::runtime_error("solve_linear: singular matrix");
    std::swap(A[col], A[piv]);
    std::swap(b[col], b[piv]);
    Rat d = A[col][col];
    for (int j = col; j < n; ++j) A[col][j] /= d;
    b[col] /= d;
    for (int row = 0; row < n; ++row) {
      if (row == col || A[row][col].is_zero()) continue;
      Rat f = A[row][col];
      for (int j = col; j < n; ++j) A[row][j] -= f * A[col][j];
      b[row] -= f * b[col];
    }
  }
  return b;
}

std::vector<Weight> simple_roots_of(const LieType& t) {
  int r = t.rank;
  int d = ambient_dim(t);
  std::vector<Weight> s;
  auto diff = [&](int i, int j) {
    Weight w(d, Rat(0));
    w[i] = Rat(1);
    w[j] = Rat(-1);
    return w;
  };
  switch (t.fam) {
    case Fam::A:
      for (int i = 0; i < r; ++i) s.push_back(diff(i, i + 1));
      break;
    case Fam::B:
      for (int i = 0; i + 1 < r; ++i) s.push_back(diff(i, i + 1));
      s.push_back(e_vec(d, r - 1));
      break;
    case Fam::C:
      for (int i = 0; i + 1 < r; ++i) s.push_back(diff(i, i + 1));
      s.push_back(e_vec(d, r - 1, Rat(2)));
      break;
    case Fam::D:
      for (int i = 0; i + 1 < r; ++i) s.push_back(diff(i, i + 1));
      {
        Weight w(d, Rat(0));
        w[r - 2] = Rat(1);
        w[r - 1] = Rat(1);
        s.push_back(w);
      }
      break;
    case Fam::G: {
      s.push_back(diff(0, 1));
      Weight w(3, Rat(0));
      w[0] = Rat(-2);
      w[1] = Rat(1);
      w[2] = Rat(1);
      s.push_back(w);
      break;
    }
    case Fam::F: {
      s.push_back(diff(1, 2));
      s.push_back(diff(2, 3));
      s.push_back(e_vec(4, 3));
      Weight w(4, Rat(0));
      w[0] = Rat(1, 2);
      w[1] = Rat(-1, 2);
      w[2] = Rat(-1, 2);
      w[3] = Rat(-1, 2);
      s.push_back(w);
      break;
    }
    case Fam::E: {
      // alpha_1..alpha_8 of E8 per Bourbaki; E6/E7 take the first 6/7.
      Weight a1(8, Rat(-1, 2));
      a1[0] = Rat(1, 2);
      a1[7] = Rat(1, 2);
      s.push_back(a1);
      Weight a2(8, Rat(0));
      a2[0] = Rat(1);
      a2[1] = Rat(1);
      s.push_back(a2);
      s.push_back(diff(1, 0));
      s.push_back(diff(2, 1));
      s.push_back(diff(3, 2));
      if (r >= 6) s.push_back(diff(4, 3));
      if (r >= 7) s.push_back(diff(5, 4));
      if (r >= 8) s.push_back(diff(6, 5));
      s.resize(r);
      break;
    }
  }
  return s;
}

std::vector<Weight> all_roots_of(const LieType& t) {
  int r = t.rank;
  int d = ambient_dim(t);
  std::vector<Weight> roots;
  auto add = [&](const Weight& w) { roots.push_back(w); };
  switch (t.fam) {
    case Fam::A:
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          if (i != j) {
            Weight w(d, Rat(0));
            w[i] = Rat(1);
            w[j] = Rat(-1);
            add(w);
          }
      break;
    case Fam::B:
    case Fam::C:
    case Fam::D:
      for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
          for (int si : {1, -1})
            for (int sj : {1, -1}) {
              Weight w(d, Rat(0));
              w[i] = Rat(si);
              w[j] = Rat(sj);
              add(w);
            }
      if (t.fam == Fam::B)
        for (int i = 0; i < r; ++i)
          for (int si : {1, -1}) add(e_vec(d, i, Rat(si)));
      if (t.fam == Fam::C)
        for (int i = 0; i < r; ++i)
          for (int si : {1, -1}) add(e_vec(d, i, Rat(2 * si)));
      break;
    case Fam::G:
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          if (i != j) {
            Weight w(3, Rat(0));
            w[i] = Rat(1);
            w[j] = Rat(-1);
            add(w);
          }
      for (int i = 0; i < 3; ++i)
        for (int si : {1, -1}) {
          Weight w(3, Rat(-si));
          w[i] = Rat(2 * si);
          add(w);
        }
      break;
    case Fam::F:
      for (int i = 0; i < 4; ++i)
        for (int si : {1, -1}) add(e_vec(4, i, Rat(si)));
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
          for (int si : {1, -1})
            for (int sj : {1, -1}) {
              Weight w(4, Rat(0));
              w[i] = Rat(si);
              w[j] = Rat(sj);
              add(w);
            }
      for (int mask = 0; mask < 16; ++mask) {
        Weight w(4, Rat(0));
        for (int i = 0; i < 4; ++i) w[i] = Rat((mask >> i) & 1 ? -1 : 1, 2);
        add(w);
      }
      break;
    case Fam::E: {
      if (r == 8) {
        for (int i = 0; i < 8; ++i)
          for (int j = i + 1; j < 8; ++j)
            for (int si : {1, -1})
              for (int sj : {1, -1}) {
                Weight w(8, Rat(0));
                w[i] = Rat(si);
                w[j] = Rat(sj);
                add(w);
              }
        for (int mask = 0; mask < 256; ++mask) {
          if (__builtin_popcount(mask) % 2) continue;
          Weight w(8, Rat(0));
          for (int i = 0; i < 8; ++i) w[i] = Rat((mask >> i) & 1 ? -1 : 1, 2);
          add(w);
        }
      } else if (r == 7) {
        for (int i = 0; i < 6; ++i)
          for (int j = i + 1; j < 6; ++j)
            for (int si : {1, -1})
              for (int sj : {1, -1}) {
                Weight w(8, Rat(0));
                w[i] = Rat(si);
                w[j] = Rat(sj);
                add(w);
              }
        for (int s : {1, -1}) {
          Weight w(8, Rat(0));
          w[6] = Rat(s);
          w[7] = Rat(-s);
          add(w);
        }
        for (int mask = 0; mask < 64; ++mask) {
          if (__builtin_popcount(mask) % 2 == 0) continue;
          for (int s : {1, -1}) {
            Weight w(8, Rat(0));
            for (int i = 0; i < 6; ++i) w[i] = Rat(s * ((mask >> i) & 1 ? -1 : 1), 2);
            w[6] = Rat(-s, 2);
            w[7] = Rat(s, 2);
            add(w);
          }
        }
      } else {  // E6
        for (int i = 0; i < 5; ++i)
          for (int j = i + 1; j < 5; ++j)
            for (int si : {1, -1})
              for (int sj : {1, -1}) {
                Weight w(8, Rat(0));
                w[i] = Rat(si);
                w[j] = Rat(sj);
                add(w);
              }
        for (int mask = 0; mask < 32; ++mask) {
          if (__builtin_popcount(mask) % 2) continue;
          for (int s : {1, -1}) {
            Weight w(8, Rat(0));
            for (int i = 0; i < 5; ++i) w[i] = Rat(s * ((mask >> i) & 1 ? -1 : 1), 2);
            w[5] = Rat(-s, 2);
            w[6] = Rat(-s, 2);
            w[7] = Rat(s, 2);
            add(w);
          }
        }
      }
      break;
    }
  }
  return roots;
}

long long weyl_order_of(const LieType& t) {
  auto fact = [](int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  switch (t.fam) {
    case Fam::A: return fact(t.rank + 1);
    case Fam::B:
    case Fam::C: return fact(t.rank) << t.rank;
    case Fam::D: return fact(t.rank) << (t.rank - 1);
    case Fam::G: return 12;
    case Fam::F: return 1152;
    case Fam::E:
      if (t.rank == 6) return 51840;
      if (t.rank == 7) return 2903040;
      return 696729600;
  }
  return 0;
}

RootSystem build_root_system(const LieType& t) {
  std::string why;
  if (!valid_type(t, &why)) throw std::invalid_argument("root_system: " + why);
  RootSystem rs;
  rs.type = t;
  rs.dim = ambient_dim(t);
  rs.simple = simple_roots_of(t);
  rs.weyl_order = weyl_order_of(t);

  int r = t.rank;
  // Gram matrix of the simple roots, used to expand vectors in them.
  std::vector<std::vector<Rat>> gram(r, std::vector<Rat>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) gram[i][j] = dot(rs.simple[i], rs.simple[j]);

  auto expand = [&](const Weight& v) -> std::optional<std::vector<Rat>> {
    std::vector<Rat> rhs(r);
    for (int i = 0; i < r; ++i) rhs[i] = dot(rs.simple[i], v);
    std::vector<Rat> c = solve_linear(gram, rhs);
    // Verify v is actually in the span.
    Weight back(rs.dim, Rat(0));
    for (int i = 0; i < r; ++i) back = back + c[i] * rs.simple[i];
    if (!(back == v)) return std::nullopt;
    return c;
  };

  for (const Weight& root : all_roots_of(t)) {
    auto c = expand(root);
    if (!c) throw std::runtime_error("root outside simple span");
    bool nonneg = true;
    for (const Rat& x : *c)
      if (x.sgn() < 0) {
        nonneg = false;
        break;
      }
    if (nonneg) rs.positive.push_back(root);
  }

  // Fundamental weights: varpi_i = sum_k c_k alpha_k with
  // <varpi_i, alpha_j^vee> = delta_ij, i.e. sum_k c_k A_{jk} = delta_ij.
  std::vector<std::vector<Rat>> cartan(r, std::vector<Rat>(r));
  for (int j = 0; j < r; ++j)
    for (int k = 0; k < r; ++k) cartan[j][k] = coroot_pair(rs.simple[k], rs.simple[j]);
  for (int i = 0; i < r; ++i) {
    std::vector<Rat> rhs(r, Rat(0));
    rhs[i] = Rat(1);
    std::vector<Rat> c = solve_linear(cartan, rhs);
    Weight w(rs.dim, Rat(0));
    for (int k = 0; k < r; ++k) w = w + c[k] * rs.simple[k];
    rs.fundamental.push_back(w);
  }

  rs.rho = Weight(rs.dim, Rat(0));
  for (const Weight& a : rs.positive) rs.rho = rs.rho + Rat(1, 2) * a;
  return rs;
}

}  // namespace

const RootSystem& root_system(const LieType& t) {
  static std::map<LieType, RootSystem> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(t);
  if (it == cache.end()) it = cache.emplace(t, build_root_system(t)).first;
  return it->second;
}

std::optional<Weight> simple_root_coords(const LieType& t, const Weight& v) {
  const RootSystem& rs = root_system(t);
  int r = t.rank;
  std::vector<std::vector<Rat>> gram(r, std::vector<Rat>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) gram[i][j] = dot(rs.simple[i], rs.simple[j]);
  std::vector<Rat> rhs(r);
  for (int i = 0; i < r; ++i) rhs[i] = dot(rs.simple[i], v);
  std::vector<Rat> c;
  try {
    c = solve_linear(gram, rhs);
  } catch (const std::runtime_error&) {
    return std::nullopt;
  }
  Weight back(rs.dim, Rat(0));
  for (int i = 0; i < r; ++i) back = back + c[i] * rs.simple[i];
  if (!(back == v)) return std::nullopt;
  return Weight(c.begin(), c.end());
}

WeightClass classify_weight_generic(const LieType& t, const Weight& w) {
  const RootSystem& rs = root_system(t);
  if ((int)w.size() != rs.dim) throw std::invalid_argument("classify_weight: length mismatch");
  WeightClass out{true, true, false};
  for (const Weight& a : rs.simple) {
    Rat p = coroot_pair(w, a);
    if (p.sgn() < 0) out.dominant = false;
    if (!p.is_integer()) out.integral = false;
  }
  auto c = simple_root_coords(t, w);
  out.radical = c.has_value();
  if (out.radical)
    for (const Rat& x : *c)
      if (!x.is_integer()) out.radical = false;
  return out;
}

WeightClass classify_weight(const LieType& t, const Weight& w) {
  const RootSystem& rs = root_system(t);
  if ((int)w.size() != rs.dim) throw std::invalid_argument("classify_weight: length mismatch");
  int n = rs.dim;
  auto all_int = [&] {
    for (const Rat& x : w)
      if (!x.is_integer()) return false;
    return true;
  };
  auto all_half = [&] {
    for (const Rat& x : w)
      if (x.den != 2) return false;
    return true;
  };
  Rat sum;
  for (const Rat& x : w) sum += x;

  WeightClass out{true, false, false};
  switch (t.fam) {
    case Fam::A: {
      for (int i = 0; i + 1 < n; ++i)
        if (w[i] < w[i + 1]) out.dominant = false;
      out.integral = true;
      for (int i = 0; i + 1 < n; ++i)
        if (!(w[i] - w[i + 1]).is_integer()) out.integral = false;
      out.radical = all_int() && sum.is_zero();
      break;
    }
    case Fam::B: {
      for (int i = 0; i + 1 < n; ++i)
        if (w[i] < w[i + 1]) out.dominant = false;
      if (w[n - 1].sgn() < 0) out.dominant = false;
      out.integral = all_int() || all_half();
      out.radical = all_int();
      break;
    }
    case Fam::C: {
      for (int i = 0; i + 1 < n; ++i)
        if (w[i] < w[i + 1]) out.dominant = false;
      if (w[n - 1].sgn() < 0) out.dominant = false;
      out.integral = all_int();
      out.radical = all_int() && sum.num % 2 == 0 && sum.is_integer();
      break;
    }
    case Fam::D: {
      for (int i = 0; i + 2 < n; ++i)
        if (w[i] < w[i + 1]) out.dominant = false;
      Rat absl = w[n - 1].sgn() < 0 ? -w[n - 1] : w[n - 1];
      if (w[n - 2] < absl) out.dominant = false;
      out.integral = all_int() || all_half();
      out.radical = all_int() && sum.is_integer() && sum.num % 2 == 0;
      break;
    }
    default:
      return classify_weight_generic(t, w);
  }
  return out;
}

Weight dominant_representative(const LieType& t, const Weight& v) {
  Weight w = v;
  switch (t.fam) {
    case Fam::A:
      std::sort(w.begin(), w.end(), [](const Rat& a, const Rat& b) { return b < a; });
      return w;
    case Fam::B:
    case Fam::C:
      for (auto& x : w)
        if (x.sgn() < 0) x = -x;
      std::sort(w.begin(), w.end(), [](const Rat& a, const Rat& b) { return b < a; });
      return w;
    case Fam::D: {
      int neg = 0;
      for (auto& x : w)
        if (x.sgn() < 0) {
          ++neg;
          x = -x;
        }
      std::sort(w.begin(), w.end(), [](const Rat& a, const Rat& b) { return b < a; });
      if (neg % 2) w.back() = -w.back();
      return w;
    }
    default: {
      // Generic: reflect at negative simple coroots until dominant.
      const RootSystem& rs = root_system(t);
      bool changed = true;
      while (changed) {
        changed = false;
        for (const Weight& a : rs.simple) {
          Rat p = coroot_pair(w, a);
          if (p.sgn() < 0) {
            w = w - p * a;
            changed = true;
          }
        }
      }
      return w;
    }
  }
}

Weight apply_sigma(const LieType& t, const Weight& w) {
  if (t.fam != Fam::D) return w;
  Weight out = w;
  out.back() = -out.back();
  return out;
}

ThetaSet sigma_theta(const LieType& t, const ThetaSet& theta) {
  if (t.fam != Fam::D) return theta;
  ThetaSet out;
  int r = t.rank;
  for (int i : theta) {
    if (i == r - 1)
      out.insert(r);
    else if (i == r)
      out.insert(r - 1);
    else
      out.insert(i);
  }
  return out;
}

std::string theta_str(const ThetaSet& th) {
  std::string s = "{";
  bool first = true;
  for (int i : th) {
    if (!first) s += ",";
    first = false;
    s += std::to_string(i);
  }
  return s + "}";
}

}  // namespace levi
