#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "levi/realform.hpp"
#include "levi/rootsys.hpp"
#include "levi/weyl.hpp"

using namespace levi;

namespace {

Weight w(const std::string& s) { return parse_weight(s); }

const std::vector<LieType> kClassical = {
    {Fam::A, 1}, {Fam::A, 2}, {Fam::A, 3}, {Fam::B, 2}, {Fam::B, 3},
    {Fam::C, 2}, {Fam::C, 3}, {Fam::D, 3}, {Fam::D, 4}};

}  // namespace

TEST_CASE("simple roots and fundamental weights per Bourbaki") {
  const auto& b2 = root_system({Fam::B, 2});
  CHECK(b2.simple[0] == w("1,-1"));
  CHECK(b2.simple[1] == w("0,1"));

  const auto& a1 = root_system({Fam::A, 1});
  CHECK(a1.simple[0] == w("1,-1"));
  CHECK(a1.fundamental[0] == w("1/2,-1/2"));

  const auto& d3 = root_system({Fam::D, 3});
  CHECK(d3.simple[0] == w("1,-1,0"));
  CHECK(d3.simple[1] == w("0,1,-1"));
  CHECK(d3.simple[2] == w("0,1,1"));
}

TEST_CASE("fundamental weights pair as delta_ij with simple coroots") {
  for (const auto& t : kClassical) {
    const auto& rs = root_system(t);
    for (int i = 0; i < t.rank; ++i)
      for (int j = 0; j < t.rank; ++j) {
        Rat pair = coroot_pair(rs.fundamental[i], rs.simple[j]);
        CHECK(pair == Rat(i == j ? 1 : 0));
      }
  }
}

TEST_CASE("classify_weight closed-form rules") {
  auto a2 = classify_weight({Fam::A, 2}, w("1,0,-1"));
  CHECK(a2.dominant);
  CHECK(a2.integral);
  CHECK(a2.radical);

  auto c2 = classify_weight({Fam::C, 2}, w("1,0"));
  CHECK(c2.dominant);
  CHECK(c2.integral);
  CHECK_FALSE(c2.radical);

  auto d3 = classify_weight({Fam::D, 3}, w("1,1,-1"));
  CHECK(d3.dominant);
  CHECK(d3.integral);
  CHECK_FALSE(d3.radical);
}

TEST_CASE("classify_weight agrees with the generic lattice definitions") {
  for (const auto& t : kClassical) {
    int d = ambient_dim(t);
    // Walk a small grid of (half-)integer vectors, including non-dominant and
    // non-integral ones.
    std::vector<Weight> pool;
    std::vector<Rat> vals = {Rat(-2), Rat(-1), Rat(-1, 2), Rat(0), Rat(1, 2), Rat(1), Rat(2)};
    Weight cur(d, Rat(0));
    long long total = 1;
    for (int i = 0; i < d; ++i) total *= (long long)vals.size();
    for (long long idx = 0; idx < total && idx < 20000; ++idx) {
      long long k = idx;
      for (int i = 0; i < d; ++i) {
        cur[i] = vals[k % vals.size()];
        k /= vals.size();
      }
      if (t.fam == Fam::A) {
        Rat s;
        for (const auto& x : cur) s += x;
        if (!s.is_zero()) continue;
      }
      auto fast = classify_weight(t, cur);
      auto slow = classify_weight_generic(t, cur);
      CHECK(fast.dominant == slow.dominant);
      CHECK(fast.integral == slow.integral);
      CHECK(fast.radical == slow.radical);
    }
  }
}

TEST_CASE("radical implies integral") {
  for (const auto& t : kClassical) {
    int d = ambient_dim(t);
    Weight cur(d, Rat(0));
    for (int a = -2; a <= 2; ++a)
      for (int b = -2; b <= 2; ++b) {
        cur[0] = Rat(a);
        cur[d - 1] = Rat(b);
        auto c = classify_weight(t, cur);
        if (c.radical) CHECK(c.integral);
      }
  }
}

TEST_CASE("theta sets of classical real forms") {
  CHECK(theta_of(parse_form("so(2,5)")) == ThetaSet{3});
  CHECK(theta_of(parse_form("sl_H(2)")) == ThetaSet{1, 3});
  CHECK(theta_of(parse_form("sp2_R(3)")) == ThetaSet{});
  CHECK(theta_of(parse_form("su(1,3)")) == ThetaSet{2});
  CHECK(theta_of(parse_form("so*(6)")) == ThetaSet{1});
  CHECK(theta_of(parse_form("so(0,9)")) == (ThetaSet{1, 2, 3, 4}));
}

TEST_CASE("dominant_representative") {
  CHECK(dominant_representative({Fam::B, 2}, w("0,-1")) == w("1,0"));
  // Type D allows only even sign changes: two barred entries unbar, three do
  // not.
  CHECK(dominant_representative({Fam::D, 3}, w("-1,-1,1")) == w("1,1,1"));
  CHECK(dominant_representative({Fam::D, 3}, w("-1,-1,-1")) == w("1,1,-1"));
  CHECK(dominant_representative({Fam::A, 2}, w("-1,1,0")) == w("1,0,-1"));
}

TEST_CASE("dominant_representative is idempotent and constant on orbits") {
  for (const auto& t : kClassical) {
    if (t.rank > 3) continue;
    const auto& wg = weyl_group(t);
    Weight v = w(t.fam == Fam::A ? (t.rank == 1 ? "2,-2" : t.rank == 2 ? "2,-1,-1" : "2,1,-1,-2")
                                 : (t.rank == 2 ? "2,1" : "2,1,1"));
    Weight rep = dominant_representative(t, v);
    CHECK(dominant_representative(t, rep) == rep);
    for (const auto& e : wg.elems)
      CHECK(dominant_representative(t, weyl_apply(e, v)) == rep);
  }
}

TEST_CASE("Bruhat order basics") {
  LieType b2{Fam::B, 2};
  const auto& wg = weyl_group(b2);
  WeylElement id = weyl_identity(2);
  for (const auto& e : wg.elems) CHECK(bruhat_leq(b2, id, e));

  LieType a2{Fam::A, 2};
  WeylElement s1{{1, 0, 2}, {1, 1, 1}};
  WeylElement s2{{0, 2, 1}, {1, 1, 1}};
  WeylElement s1s2 = weyl_compose(s1, s2);
  CHECK(bruhat_leq(a2, s1, s1s2));

  WeylElement longest{{0, 1}, {-1, -1}};
  WeylElement b2s1{{1, 0}, {1, 1}};
  CHECK(weyl_length(b2, longest) == 4);
  CHECK_FALSE(bruhat_leq(b2, longest, b2s1));
}

TEST_CASE("Bruhat order is a partial order") {
  for (LieType t : {LieType{Fam::A, 2}, LieType{Fam::B, 2}, LieType{Fam::C, 2}, LieType{Fam::D, 3}}) {
    const auto& wg = weyl_group(t);
    int n = (int)wg.elems.size();
    for (int i = 0; i < n; ++i) {
      CHECK(wg.leq(i, i));
      for (int j = 0; j < n; ++j) {
        if (i != j && wg.leq(i, j)) CHECK_FALSE(wg.leq(j, i));
        for (int k = 0; k < n; ++k)
          if (wg.leq(i, j) && wg.leq(j, k)) CHECK(wg.leq(i, k));
      }
    }
  }
}

TEST_CASE("sigma automorphism") {
  CHECK(apply_sigma({Fam::D, 3}, w("1,1,-1")) == w("1,1,1"));
  CHECK(apply_sigma({Fam::B, 2}, w("1,0")) == w("1,0"));
  CHECK(apply_sigma({Fam::D, 4}, w("0,0,0,0")) == w("0,0,0,0"));
  // Involution.
  Weight v = w("1,1/2,-3");
  CHECK(apply_sigma({Fam::D, 3}, apply_sigma({Fam::D, 3}, v)) == v);
  // Theta sets: indices r-1 and r swapped in type D.
  CHECK(sigma_theta({Fam::D, 4}, ThetaSet{1, 3}) == (ThetaSet{1, 4}));
  CHECK(sigma_theta({Fam::D, 4}, ThetaSet{1, 2}) == (ThetaSet{1, 2}));
  CHECK(sigma_theta({Fam::B, 3}, ThetaSet{2, 3}) == (ThetaSet{2, 3}));
}

TEST_CASE("real form parsing round trips") {
  for (const char* s : {"su(1,2)", "sl_R(4)", "sl_H(2)", "so(2,5)", "sp2_R(3)",
                        "sp2(1,1)", "so(3,5)", "so*(8)", "EIV", "FII"}) {
    RealForm f = parse_form(s);
    CHECK(parse_form(f.str()).str() == f.str());
  }
  CHECK(complexified_type(parse_form("sl_H(2)")) == (LieType{Fam::A, 3}));
  CHECK(complexified_type(parse_form("so(2,5)")) == (LieType{Fam::B, 3}));
  CHECK(complexified_type(parse_form("so*(8)")) == (LieType{Fam::D, 4}));
  CHECK(is_compact_form(parse_form("so(0,9)")));
  CHECK_FALSE(is_compact_form(parse_form("so(1,8)")));
}
