#include "levi/monoid.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "levi/doubled.hpp"
#include "levi/younga.hpp"

namespace levi {

namespace {

ClassificationVerdict ok() { return {true, std::nullopt}; }
ClassificationVerdict fail(std::string why) { return {false, std::move(why)}; }

// Coordinate access with the convention lambda_i = 0 for i beyond the rank.
Rat lam(const Weight& lambda, int i) {
  if (i < 1 || i > (int)lambda.size()) return Rat(0);
  return lambda[i - 1];
}

Rat lam_sum(const Weight& lambda, int from, int to) {
  Rat s;
  for (int i = from; i <= to; ++i) s += lam(lambda, i);
  return s;
}

bool even(const Rat& v) {
  if (!v.is_integer()) throw std::logic_error("parity of a non-integer");
  return v.num % 2 == 0;
}

}  // namespace

ClassificationVerdict m_table_membership(const RealForm& form, const Weight& lambda) {
  LieType t = complexified_type(form);
  if ((int)lambda.size() != ambient_dim(t))
    throw std::invalid_argument("lambda must have " + std::to_string(ambient_dim(t)) +
                                " coordinates for " + t.str());
  auto cls = classify_weight(t, lambda);
  if (!cls.dominant || !cls.integral)
    throw std::invalid_argument("lambda must be dominant integral for " + t.str());
  if (!cls.radical) return fail("lambda lies outside the root lattice Q");

  switch (form.kind) {
    case FormKind::sl_R:
    case FormKind::sp2_R:
    case FormKind::cx:
      return ok();
    case FormKind::su: {
      int p = form.p, n = form.p + form.q;
      if (2 * p == n) return ok();
      if (!(lam(lambda, n - 2 * p) >= Rat(0)))
        return fail("lambda_{n-2p} >= 0 fails");
      if (!(Rat(0) >= lam(lambda, 2 * p + 1)))
        return fail("0 >= lambda_{2p+1} fails");
      return ok();
    }
    case FormKind::sl_H: {
      int m = form.p;
      if (!(lam_sum(lambda, 2, m + 1) >= Rat(0)))
        return fail("sum_{i=2}^{m+1} lambda_i >= 0 fails");
      if (!(Rat(0) >= lam_sum(lambda, m, 2 * m - 1)))
        return fail("0 >= sum_{i=m}^{2m-1} lambda_i fails");
      return ok();
    }
    case FormKind::so_odd: {
      int r = t.rank, p = form.p;
      if (!(lam(lambda, 2 * p + 1) == Rat(0)))
        return fail("lambda_{2p+1} = 0 fails");
      if (!even(lam_sum(lambda, 1, r)) && !(lam(lambda, 2 * r - 2 * p + 1) > Rat(0)))
        return fail("lambda_{2r-2p+1} > 0 fails (|lambda| odd)");
      return ok();
    }
    case FormKind::sp2: {
      if (form.p == 1 && form.q == 1) {
        if (!even(lam(lambda, 2))) return fail("lambda_2 even fails");
        return ok();
      }
      if (!(lam(lambda, 4 * form.p + 1) == Rat(0)))
        return fail("lambda_{4p+1} = 0 fails");
      return ok();
    }
    case FormKind::so_even: {
      if (!(lam(lambda, 2 * form.p + 1) == Rat(0)))
        return fail("lambda_{2p+1} = 0 fails");
      return ok();
    }
    case FormKind::so_star: {
      if (t.rank == 3) {
        Rat a3 = lam(lambda, 3);
        if (a3.sgn() < 0) a3 = -a3;
        if (!(a3 <= lam(lambda, 1) - lam(lambda, 2)))
          return fail("|lambda_3| <= lambda_1 - lambda_2 fails");
      }
      return ok();
    }
    case FormKind::exceptional: {
      if (is_compact_form(form) && !is_zero(lambda))
        return fail("compact form accepts only lambda = 0");
      return ok();
    }
  }
  throw std::logic_error("unreachable");
}

std::optional<bool> table3_membership(const RealForm& form, const Weight& lambda) {
  int p = form.p, q = form.q;
  switch (form.kind) {
    case FormKind::su: {
      if (q == p) return true;
      if (4 * p < p + q) {
        for (int i = 2 * p + 1; i <= q - p; ++i)
          if (!(lam(lambda, i) == Rat(0))) return false;
        return true;
      }
      return lam(lambda, q - p) >= Rat(0) && Rat(0) >= lam(lambda, 2 * p + 1);
    }
    case FormKind::so_odd: {
      if (4 * p < p + q)
        return lam(lambda, 2 * p + 1) == Rat(0) && even(lam_sum(lambda, 1, 2 * p));
      return lam(lambda, q - p) > Rat(0) || even(lam_sum(lambda, 1, q - p - 1));
    }
    case FormKind::sp2: {
      if (p == 1 && q == 1) return even(lam(lambda, 2));
      if (4 * p < p + q) return lam(lambda, 4 * p + 1) == Rat(0);
      return true;
    }
    case FormKind::so_even: {
      if (4 * p < p + q) return lam(lambda, 2 * p + 1) == Rat(0);
      return true;
    }
    default:
      return std::nullopt;
  }
}

MonoidElementSet primitive_basis(const LieType& type) {
  std::string why;
  if (!valid_type(type, &why)) throw std::invalid_argument(why);
  const auto& rs = root_system(type);
  int r = type.rank;

  // varpi_i in the simple-root basis, and the order d_i of its class in P/Q.
  std::vector<std::vector<Rat>> wcoords(r);
  std::vector<long long> d(r, 1);
  for (int i = 0; i < r; ++i) {
    auto c = simple_root_coords(type, rs.fundamental[i]);
    if (!c) throw std::logic_error("fundamental weight outside root span");
    wcoords[i] = *c;
    for (const auto& v : (*c)) d[i] = std::lcm(d[i], v.den);
  }

  // Any radical dominant lambda with some fundamental coordinate x_i > d_i
  // splits off d_i * varpi_i (itself radical dominant), so primitives live in
  // the box 0 <= x_i <= d_i.
  std::vector<long long> dim(r);
  long long total = 1;
  for (int i = 0; i < r; ++i) {
    dim[i] = d[i] + 1;
    total *= dim[i];
  }

  auto decode = [&](long long idx, std::vector<long long>& x) {
    for (int i = 0; i < r; ++i) {
      x[i] = idx % dim[i];
      idx /= dim[i];
    }
  };
  auto encode = [&](const std::vector<long long>& x) {
    long long idx = 0;
    for (int i = r - 1; i >= 0; --i) idx = idx * dim[i] + x[i];
    return idx;
  };

  std::vector<char> radical(total, 0);
  for (long long idx = 0; idx < total; ++idx) {
    std::vector<long long> x(r);
    decode(idx, x);
    bool ok = true;
    for (int j = 0; j < r && ok; ++j) {
      Rat c;
      for (int i = 0; i < r; ++i) c += Rat(x[i]) * wcoords[i][j];
      ok = c.is_integer();
    }
    radical[idx] = ok;
  }

  // Scan by increasing total coordinate so that all potential summands of a
  // candidate (componentwise smaller, radical) are already classified.
  std::vector<long long> order(total);
  std::iota(order.begin(), order.end(), 0);
  std::vector<long long> height(total, 0);
  for (long long idx = 0; idx < total; ++idx) {
    std::vector<long long> x(r);
    decode(idx, x);
    for (long long v : x) height[idx] += v;
  }
  std::sort(order.begin(), order.end(), [&](long long a, long long b) {
    if (height[a] != height[b]) return height[a] < height[b];
    return a < b;
  });

  std::vector<std::vector<long long>> basis;
  for (long long idx : order) {
    if (!radical[idx]) continue;
    std::vector<long long> x(r);
    decode(idx, x);
    if (height[idx] == 0) continue;
    bool primitive = true;
    for (const auto& b : basis) {
      std::vector<long long> y(r);
      bool nonneg = true, nonzero = false;
      for (int i = 0; i < r; ++i) {
        y[i] = x[i] - b[i];
        if (y[i] < 0) nonneg = false;
        if (y[i] > 0) nonzero = true;
      }
      if (nonneg && nonzero && radical[encode(y)]) {
        primitive = false;
        break;
      }
    }
    if (primitive) basis.push_back(x);
  }

  MonoidElementSet out;
  out.context = type;
  for (const auto& x : basis) {
    Weight w(rs.dim, Rat(0));
    for (int i = 0; i < r; ++i)
      w = w + Rat(x[i]) * rs.fundamental[i];
    out.elements.push_back(w);
  }
  std::sort(out.elements.begin(), out.elements.end(),
            [](const Weight& a, const Weight& b) {
              for (size_t i = 0; i < a.size(); ++i) {
                if (a[i] != b[i]) return b[i] < a[i];
              }
              return false;
            });
  return out;
}

bool tableau_membership(const RealForm& form, const Weight& lambda,
                        long long box_budget) {
  LieType t = complexified_type(form);
  ThetaSet theta = theta_of(form);
  switch (t.fam) {
    case Fam::A:
      return count_null_dominant_a(lambda, t.rank + 1, theta, box_budget) > 0;
    case Fam::B:
    case Fam::C:
    case Fam::D:
      return count_invariants_bcd(lambda, t, theta, box_budget) > 0;
    default:
      throw std::invalid_argument("tableau counters cover classical types only");
  }
}

bool additivity_check(const RealForm& form, const Weight& lambda, const Weight& mu,
                      long long box_budget) {
  bool in_l = tableau_membership(form, lambda, box_budget);
  bool in_m = tableau_membership(form, mu, box_budget);
  if (!in_l || !in_m) return true;
  return tableau_membership(form, lambda + mu, box_budget);
}

}  // namespace levi
