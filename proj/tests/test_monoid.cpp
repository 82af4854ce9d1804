#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <vector>

#include "levi/monoid.hpp"
#include "levi/verify.hpp"

using namespace levi;

TEST_CASE("closed-form membership verdicts") {
  auto su = m_table_membership(parse_form("su(1,2)"), parse_weight("1,0,-1"));
  CHECK(su.in_table);
  CHECK_FALSE(su.failed_condition.has_value());

  auto sp = m_table_membership(parse_form("sp2(1,1)"), parse_weight("1,1"));
  CHECK_FALSE(sp.in_table);
  CHECK(sp.failed_condition == "lambda_2 even fails");

  CHECK(m_table_membership(parse_form("so*(6)"), parse_weight("1,1,0")).in_table);
  CHECK_FALSE(m_table_membership(parse_form("so*(6)"), parse_weight("2,2,2")).in_table);
}

TEST_CASE("radicality is necessary, split and complex forms need nothing more") {
  auto v = m_table_membership(parse_form("sl_R(3)"), parse_weight("1,1,-2"));
  CHECK(v.in_table);
  // sp2_R is split: every radical dominant weight qualifies.
  CHECK(m_table_membership(parse_form("sp2_R(2)"), parse_weight("3,1")).in_table);
  // Non-radical weights are rejected outright.
  auto nr = m_table_membership(parse_form("sp2_R(2)"), parse_weight("1,0"));
  CHECK_FALSE(nr.in_table);
  CHECK(nr.failed_condition.has_value());
}

TEST_CASE("compact forms accept only zero") {
  CHECK(m_table_membership(parse_form("so(0,9)"), parse_weight("0,0,0,0")).in_table);
  CHECK_FALSE(m_table_membership(parse_form("so(0,9)"), parse_weight("1,1,0,0")).in_table);
  CHECK(m_table_membership(parse_form("FII"), parse_weight("1,1,0,0")).in_table);
}

TEST_CASE("reformulated conditions agree with the main table") {
  for (int r = 2; r <= 4; ++r) {
    for (Fam fam : {Fam::A, Fam::B, Fam::C, Fam::D}) {
      LieType t{fam, r};
      if (!valid_type(t)) continue;
      for (const auto& form : forms_of_type(t)) {
        if (!table3_membership(form, radical_dominant_weights(t, 2).front()).has_value())
          continue;
        for (const auto& lambda : radical_dominant_weights(t, 3)) {
          auto main = m_table_membership(form, lambda);
          auto alt = table3_membership(form, lambda);
          REQUIRE(alt.has_value());
          CHECK(main.in_table == *alt);
        }
      }
    }
  }
}

TEST_CASE("primitive bases of small monoids") {
  auto a1 = primitive_basis({Fam::A, 1});
  REQUIRE(a1.elements.size() == 1);
  CHECK(a1.elements[0] == parse_weight("1,-1"));

  auto f4 = primitive_basis({Fam::F, 4});
  REQUIRE(f4.elements.size() == 4);
  const auto& rs = root_system({Fam::F, 4});
  for (const auto& varpi : rs.fundamental)
    CHECK(std::count(f4.elements.begin(), f4.elements.end(), varpi) == 1);
}

TEST_CASE("basis elements are radical and dominant") {
  for (LieType t : {LieType{Fam::A, 3}, LieType{Fam::B, 3}, LieType{Fam::C, 3},
                    LieType{Fam::D, 4}, LieType{Fam::G, 2}}) {
    auto basis = primitive_basis(t);
    CHECK(!basis.elements.empty());
    for (const auto& w : basis.elements) {
      auto c = classify_weight_generic(t, w);
      CHECK(c.dominant);
      CHECK(c.radical);
    }
  }
}

TEST_CASE("tableau membership agrees with the closed form on spot checks") {
  struct Case {
    const char* form;
    const char* lambda;
  };
  for (const Case& c : {Case{"su(1,3)", "1,0,0,-1"}, Case{"su(1,3)", "3,-1,-1,-1"},
                        Case{"so(1,4)", "1,1"}, Case{"so(1,4)", "1,0"},
                        Case{"sp2(1,1)", "1,1"}, Case{"sp2(1,1)", "2,2"},
                        Case{"so*(6)", "1,1,0"}, Case{"so*(6)", "2,1,1"}}) {
    RealForm f = parse_form(c.form);
    Weight l = parse_weight(c.lambda);
    CHECK(tableau_membership(f, l) == m_table_membership(f, l).in_table);
  }
}

TEST_CASE("membership is closed under addition") {
  CHECK(additivity_check(parse_form("so(1,4)"), parse_weight("1,1"), parse_weight("1,1")));
  CHECK(additivity_check(parse_form("su(1,2)"), parse_weight("1,0,-1"), parse_weight("1,0,-1")));
  CHECK(additivity_check(parse_form("sp2(1,1)"), parse_weight("0,0"), parse_weight("2,2")));
}
