#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <vector>

#include "levi/doubled.hpp"
#include "levi/oracle.hpp"

using namespace levi;

namespace {

const LieType kB2{Fam::B, 2};
const LieType kB3{Fam::B, 3};
const LieType kC2{Fam::C, 2};
const LieType kD3{Fam::D, 3};

DoubledTableau tab(std::vector<Column> cols) { return DoubledTableau{std::move(cols)}; }

}  // namespace

TEST_CASE("column weights") {
  CHECK(column_weight({1, -3}, 3) == parse_weight("1,0,-1"));
  CHECK(column_weight({1, 2, 3}, 3) == parse_weight("1,1,1"));
  CHECK(column_weight({1, 2, -3}, 3) == parse_weight("1,1,-1"));
}

TEST_CASE("strongly standard columns") {
  CHECK(strongly_standard({1, 2, -1}, 3) == false);  // 1 and barred 1 together
  CHECK(strongly_standard({2, 1}, 3) == false);      // not increasing
  CHECK(strongly_standard({1, 3, -2}, 3));
  CHECK((int)all_columns(2).size() == 8);   // 3^2 - 1
  CHECK((int)all_columns(3).size() == 26);  // 3^3 - 1
  for (const auto& c : all_columns(3)) CHECK(strongly_standard(c, 3));
}

TEST_CASE("Young order basics") {
  CHECK(young_compare({1, -2}, {2, -1}, kC2));
  CHECK_FALSE(young_compare({3}, {-3}, kD3));  // rank symbol parity in type D
  for (const auto& c : all_columns(2))
    for (const auto& g : {kB2, kC2})
      CHECK(young_compare(c, c, g));
}

TEST_CASE("Young order with parity is transitive in type D") {
  auto cols = all_columns(3);
  for (const auto& a : cols)
    for (const auto& b : cols) {
      if (!young_compare(a, b, kD3)) continue;
      for (const auto& c : cols)
        if (young_compare(b, c, kD3)) CHECK(young_compare(a, c, kD3));
    }
}

TEST_CASE("Hasse edges") {
  CHECK(hasse_cover({1}, {2}, kB2));
  CHECK_FALSE(hasse_cover({1}, {-1}, kB2));
  // Truncation edge: the removed symbol is the largest one whose barred and
  // unbarred versions are both absent from the shorter column.
  CHECK(hasse_cover({1, -2}, {1}, kB2));
  CHECK_FALSE(hasse_cover({1, 2}, {1}, kB2));  // {1,2} < {1,-2} < {1}
}

TEST_CASE("Hasse edges are the transitive reduction of the Young order") {
  for (const LieType& g : {kB3, LieType{Fam::C, 3}, kD3}) {
    auto cols = all_columns(g.rank);
    int n = (int)cols.size();
    // leq[i][j]: strict comparability i < j.
    std::vector<std::vector<char>> lt(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        lt[i][j] = i != j && young_compare(cols[i], cols[j], g);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        bool cover = lt[i][j];
        if (cover)
          for (int k = 0; k < n && cover; ++k)
            if (lt[i][k] && lt[k][j]) cover = false;
        CHECK(hasse_cover(cols[i], cols[j], g) == cover);
      }
  }
}

TEST_CASE("admissible pairs") {
  CHECK(admissible_pair({2, -1}, {1, -2}, kC2));
  CHECK_FALSE(admissible_pair({1}, {2}, kB2));
  for (const auto& c : all_columns(2)) CHECK(admissible_pair(c, c, kC2));
  CHECK_FALSE(admissible_oracle({1}, {-1}, {Fam::C, 1}));
}

TEST_CASE("closed-form admissibility matches the rewrite oracle at rank 3") {
  for (const LieType& g : {kB3, LieType{Fam::C, 3}, kD3}) {
    auto cols = all_columns(3);
    for (const auto& c : cols)
      for (const auto& cp : cols)
        CHECK(admissible_pair(c, cp, g) == admissible_oracle(c, cp, g));
  }
}

TEST_CASE("doubled shape") {
  CHECK(psi_shape(parse_weight("2,1,1"), kB3) == (Diagram{4, 2, 2}));
  CHECK(psi_shape(parse_weight("1,1,-1"), kD3) == (Diagram{2, 2, 2}));
  CHECK(psi_shape(parse_weight("0,0"), kB2) == (Diagram{0, 0}));
}

TEST_CASE("tableau evaluation") {
  auto t2 = evaluate_tableau(tab({{1, -2}, {2, -1}}), kB2);
  CHECK(t2.g_standard);
  CHECK(is_zero(t2.weight));
  CHECK(t2.syndrome == ThetaSet{1});

  auto v = evaluate_tableau(tab({{2}, {-2}}), kB2);
  CHECK(v.g_standard);
  CHECK(is_zero(v.weight));
  CHECK(v.syndrome == ThetaSet{2});

  auto e = evaluate_tableau(tab({}), kB2);
  CHECK(e.g_standard);
  CHECK(is_zero(e.weight));
  CHECK(e.sign == 0);
  CHECK(e.syndrome.empty());
}

TEST_CASE("null tableaux have even row lengths and fully paired columns") {
  DoubledFilters null_only;
  null_only.null = true;
  for (const LieType& g : {kB2, kC2, kD3}) {
    for (const Diagram& shape : {Diagram{2, 2}, Diagram{4, 2}, Diagram{2, 2, 2}}) {
      if ((int)shape.rows.size() > g.rank) continue;
      for (const auto& t : enumerate_doubled(shape, g, null_only)) {
        std::map<int, int> height_counts;
        for (const auto& c : t.columns) height_counts[(int)c.size()]++;
        long long cum = 0;
        // Right-to-left pairing never strands a column: counting from the
        // shortest height, the running column count stays even.
        for (auto it = height_counts.begin(); it != height_counts.end(); ++it) {
          cum += it->second;
          CHECK(cum % 2 == 0);
        }
      }
    }
  }
}

TEST_CASE("enumeration of doubled tableaux") {
  DoubledFilters null_only;
  null_only.null = true;
  auto nulls = enumerate_doubled(Diagram{2}, kB2, null_only);
  REQUIRE(nulls.size() == 1);
  CHECK(nulls[0].columns == std::vector<Column>{{2}, {-2}});

  auto all = enumerate_doubled(Diagram{2}, kB2, {});
  CHECK(all.size() == 5);
  std::map<Weight, long long> weights;
  for (const auto& t : all) weights[evaluate_tableau(t, kB2).weight]++;
  CHECK(weights == weight_multiplicities(parse_weight("1,0"), kB2));

  auto empty = enumerate_doubled(Diagram{0, 0, 0}, kD3, {});
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].columns.empty());
}

TEST_CASE("character formula matches Freudenthal on small weights") {
  CHECK(character_bcd(parse_weight("1,0"), kB2) ==
        weight_multiplicities(parse_weight("1,0"), kB2));

  auto triv = character_bcd(parse_weight("0,0"), kC2);
  CHECK(triv.size() == 1);
  CHECK(triv[parse_weight("0,0")] == 1);

  auto adj = character_bcd(parse_weight("2,0"), kC2);
  CHECK(adj == weight_multiplicities(parse_weight("2,0"), kC2));
  long long dim = 0;
  for (const auto& [mu, m] : adj) dim += m;
  CHECK(dim == 10);
  CHECK(adj[parse_weight("0,0")] == 2);

  CHECK(character_bcd(parse_weight("1,1"), kC2) ==
        weight_multiplicities(parse_weight("1,1"), kC2));

  // Both halves of a sign-split D weight.
  for (const char* l : {"1,1,1", "1,1,-1"})
    CHECK(character_bcd(parse_weight(l), kD3) ==
          weight_multiplicities(parse_weight(l), kD3));
}

TEST_CASE("invariant counting for so and sp") {
  CHECK(count_invariants_bcd(parse_weight("1,0"), kB2, ThetaSet{2}) == 0);
  long long d = count_invariants_bcd(parse_weight("1,1"), kB2, ThetaSet{2});
  CHECK(d >= 1);
  CHECK(d == dim_invariants_oracle(parse_weight("1,1"), kB2, ThetaSet{2}));
  CHECK(count_invariants_bcd(parse_weight("0,0,0"), kD3, ThetaSet{1}) == 1);
}

TEST_CASE("explicit families") {
  auto t2 = family_tableau("T", 2);
  CHECK(t2.columns == std::vector<Column>{{1, -2}, {2, -1}});

  // T_4 is standard and null in every type of rank >= 4.
  auto t4 = family_tableau("T", 4);
  for (const LieType& g : {LieType{Fam::B, 4}, LieType{Fam::C, 4}, LieType{Fam::D, 4}}) {
    auto rep = evaluate_tableau(t4, g);
    CHECK(rep.g_standard);
    CHECK(is_zero(rep.weight));
    CHECK(rep.syndrome == ThetaSet{2});
  }

  // S_{3,3} lives at rank 3 and is used for D_3; it is not C_3-standard.
  auto s33 = family_tableau("S", 3);
  auto d = evaluate_tableau(s33, kD3);
  CHECK(d.g_standard);
  CHECK(is_zero(d.weight));
  CHECK_FALSE(evaluate_tableau(s33, {Fam::C, 3}).g_standard);
}

TEST_CASE("shifted tableaux") {
  auto t2 = family_tableau("T", 2);
  auto up = shift_tableau(t2, 1);
  CHECK(up.columns == std::vector<Column>{{2, -3}, {3, -2}});
  auto rep = evaluate_tableau(up, kB3);
  CHECK(rep.g_standard);
  CHECK(is_zero(rep.weight));
  CHECK(rep.syndrome == ThetaSet{2});
  CHECK(shift_tableau(t2, 0).columns == t2.columns);
}

TEST_CASE("sigma on tableaux") {
  auto s33 = family_tableau("S", 3);
  auto flipped = sigma_tableau(s33, 3);
  CHECK(sigma_tableau(flipped, 3).columns == s33.columns);

  auto a = evaluate_tableau(s33, kD3);
  auto b = evaluate_tableau(flipped, kD3);
  CHECK(b.g_standard);
  CHECK(b.sign == -a.sign);
  CHECK(b.weight == apply_sigma(kD3, a.weight));

  // Single columns: weights intertwine with sigma.
  for (const auto& c : all_columns(3)) {
    DoubledTableau t{{c}};
    CHECK(evaluate_tableau(sigma_tableau(t, 3), kD3).weight ==
          apply_sigma(kD3, evaluate_tableau(t, kD3).weight));
  }
}
