#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rigidtrace/simplices.hpp"

using namespace rigidtrace;

namespace {

int count_vertical(const SimplexCat& s) {
  int n = 0;
  for (bool v : s.vertical) n += v ? 1 : 0;
  return n;
}

void check_fiber_reports(const SimplexCat& s) {
  for (int i = 0; i < s.base.n_obj; ++i) {
    SimplexFiberReport r = fiber_report(s, i);
    CAPTURE(i);
    CAPTURE(r.failure);
    CHECK(r.cofibered);
    CHECK(r.has_terminal);
    CHECK(r.witness_is_point);
    CHECK(s.obj_chain[r.terminal_obj] == std::vector<int>{i});

    // the point is the only terminal object of the vertical fiber
    Fiber fb = simplex_fiber(s, i);
    int terminals = 0;
    for (int t = 0; t < fb.cat.n_obj; ++t) {
      bool term = true;
      for (int a = 0; a < fb.cat.n_obj && term; ++a)
        if (fb.cat.hom(a, t).size() != 1) term = false;
      if (term) ++terminals;
    }
    CHECK(terminals == 1);
  }
}

}  // namespace

TEST_CASE("counts on one point and arrow bases") {
  SimplexCat pt = category_of_simplices(fincat_terminal(), 2);
  CHECK(pt.total.n_obj == 3);  // one chain per dimension
  CHECK(pt.total.n_mor() == 31);
  CHECK(count_vertical(pt) == 19);
  // every projection image is an identity, yet not every morphism is
  // vertical: degenerate chains map to the point in several ways
  for (int m = 0; m < pt.total.n_mor(); ++m)
    CHECK(pt.base.is_identity(pt.pi.mmap[m]));

  SimplexCat a1 = category_of_simplices(fincat_delta1(), 1);
  CHECK(a1.total.n_obj == 5);  // two points, three edges with degeneracies
  CHECK(a1.total.n_mor() == 19);
  CHECK(check_category(a1.total).empty());
  CHECK(check_functor(a1.total, a1.base, a1.pi).empty());

  // the nondegenerate edge starts at 0
  int edge = -1;
  for (int a = 0; a < a1.total.n_obj; ++a)
    if (a1.obj_chain[a] == std::vector<int>{0, 2}) edge = a;
  REQUIRE(edge >= 0);
  CHECK(a1.pi.omap[edge] == 0);
}

TEST_CASE("vertical morphisms sit strictly inside the identity preimage") {
  SimplexCat s = category_of_simplices(fincat_delta1(), 2);
  CHECK(check_functor(s.total, s.base, s.pi).empty());
  int strict = 0;
  for (int m = 0; m < s.total.n_mor(); ++m) {
    if (s.vertical[m]) CHECK(s.base.is_identity(s.pi.mmap[m]));
    if (!s.vertical[m] && s.base.is_identity(s.pi.mmap[m])) ++strict;
  }
  CHECK(strict > 0);  // e.g. the degenerate edge at 0 onto its own point

  // vertical morphisms contain the identities and compose
  for (int a = 0; a < s.total.n_obj; ++a) CHECK(s.vertical[s.total.id(a)]);
  for (int m2 = 0; m2 < s.total.n_mor(); ++m2)
    for (int m1 = 0; m1 < s.total.n_mor(); ++m1) {
      if (!s.total.composable(m2, m1)) continue;
      if (s.vertical[m2] && s.vertical[m1]) CHECK(s.vertical[s.total.compose(m2, m1)]);
    }

  // the degenerate edge maps onto its point twice, once vertically
  int pt0 = -1, dg0 = -1;
  for (int a = 0; a < s.total.n_obj; ++a) {
    if (s.obj_chain[a] == std::vector<int>{0}) pt0 = a;
    if (s.obj_chain[a] == std::vector<int>{0, s.base.id(0)}) dg0 = a;
  }
  REQUIRE(pt0 >= 0);
  REQUIRE(dg0 >= 0);
  auto down = s.total.hom(dg0, pt0);
  CHECK(down.size() == 2);
  int vertical_down = 0;
  for (int m : down) {
    CHECK(s.base.is_identity(s.pi.mmap[m]));
    vertical_down += s.vertical[m] ? 1 : 0;
  }
  CHECK(vertical_down == 1);
}

TEST_CASE("fiber reports across the test bases") {
  SUBCASE("one point") { check_fiber_reports(category_of_simplices(fincat_terminal(), 3)); }
  SUBCASE("arrow") {
    SimplexCat s = category_of_simplices(fincat_delta1(), 3);
    CHECK(s.total.n_obj == 14);
    check_fiber_reports(s);
    Fiber f0 = simplex_fiber(s, 0);
    Fiber f1 = simplex_fiber(s, 1);
    CHECK(f0.cat.n_obj == 10);
    CHECK(f1.cat.n_obj == 4);
    CHECK(check_category(f0.cat).empty());
  }
  SUBCASE("triangle") {
    SimplexCat s = category_of_simplices(fincat_delta2(), 3);
    CHECK(s.total.n_obj == 34);
    check_fiber_reports(s);
  }
  SUBCASE("contractible pair") {
    SimplexCat s = category_of_simplices(fincat_contractible_pair(), 3);
    CHECK(s.total.n_obj == 30);
    check_fiber_reports(s);
  }
  SUBCASE("groupoid with parallel arrows") {
    // the large instance: four arrows out of every object
    SimplexCat s = category_of_simplices(fincat_pair_groupoid_z2(), 3);
    CHECK(s.total.n_obj == 170);
    CHECK(s.total.n_mor() == 10040);
    check_fiber_reports(s);
    CHECK(check_simplex_factorization(s).empty());
  }
}

TEST_CASE("lifts exist but are not unique") {
  SimplexCat s = category_of_simplices(fincat_delta1(), 2);
  // chains over 1 of dimension < 2 receive a lift of the arrow
  int pt1 = -1;
  for (int a = 0; a < s.total.n_obj; ++a)
    if (s.obj_chain[a] == std::vector<int>{1}) pt1 = a;
  REQUIRE(pt1 >= 0);
  int lifts = 0;
  for (int m = 0; m < s.total.n_mor(); ++m)
    if (s.total.tgt(m) == pt1 && s.pi.mmap[m] == 2) ++lifts;
  // one each from [0,u] and [0,id,u], two from [0,u,id]: the composite
  // past a degenerate tail still projects to the arrow
  CHECK(lifts == 4);
  CHECK(fiber_report(s, 1).cofibered);
}

TEST_CASE("vertical factorization") {
  CHECK(check_simplex_factorization(category_of_simplices(fincat_terminal(), 3)).empty());
  CHECK(check_simplex_factorization(category_of_simplices(fincat_delta1(), 3)).empty());
  CHECK(check_simplex_factorization(category_of_simplices(fincat_delta2(), 3)).empty());
  CHECK(
      check_simplex_factorization(category_of_simplices(fincat_contractible_pair(), 3)).empty());
}

TEST_CASE("degenerate bound and bad input") {
  SimplexCat s = category_of_simplices(fincat_delta1(), 0);
  CHECK(s.total.n_obj == 2);
  CHECK(s.total.n_mor() == 2);
  SimplexFiberReport r = fiber_report(s, 0);
  CHECK(r.cofibered);  // nothing to lift below dimension 0
  CHECK(r.has_terminal);
  CHECK(r.witness_is_point);
  CHECK_THROWS_AS(category_of_simplices(fincat_delta1(), -1), std::invalid_argument);
}
