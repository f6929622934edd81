#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rigidtrace/gamma_cat.hpp"
#include "rigidtrace/monoidal_nerve.hpp"
#include "rigidtrace/smc.hpp"

using namespace rigidtrace;

namespace {

MatrixCat<Rat>::Mor rat_mor(int s, int t, const std::vector<long>& entries) {
  MatrixCat<Rat>::Mor f{s, t, mat_zero(t, s, Rat(0))};
  for (size_t i = 0; i < entries.size(); ++i) f.m.a[i] = Rat(entries[i]);
  return f;
}

}  // namespace

TEST_CASE("canonical section over a tuple") {
  auto c = matrix_cat_rat(6);
  auto d2 = nerve_section_obj(c, {2, 3});
  CHECK(d2.n == 2);
  CHECK(d2.x == std::vector<int>{2, 3, 6});
  CHECK(nerve_check_obj(c, d2).empty());
  // sorted merge of ({1},{2}) needs no swaps; the reversed order is the twist
  CHECK(nerve_rho_at(c, d2, 1, 2) == c.id(6));
  CHECK(nerve_rho_at(c, d2, 2, 1) == c.sym(3, 2));
  // gluing against the empty subset is the identity
  CHECK(nerve_rho_at(c, d2, 0, 3) == c.id(6));

  auto d3 = nerve_section_obj(c, {2, 2, 3});
  CHECK(d3.x == std::vector<int>{2, 2, 4, 3, 6, 6, 12});
  CHECK(nerve_check_obj(c, d3).empty());
  CHECK(nerve_rho_at(c, d3, 2, 5) == c.tensor_mor(c.sym(2, 2), c.id(3)));
}

TEST_CASE("pushforward reindexes by preimages") {
  auto c = matrix_cat_rat(6);
  auto d2 = nerve_section_obj(c, {2, 3});

  auto tw = nerve_push_obj(c, gamma_twist(), d2);
  CHECK(tw.x == std::vector<int>{3, 2, 6});
  CHECK(nerve_rho_at(c, tw, 1, 2) == c.sym(3, 2));
  CHECK(nerve_check_obj(c, tw).empty());

  // folding [2] -> [1] lands on the total tensor
  CHECK(nerve_push_obj(c, gamma_fold(2), d2) == nerve_obj1(c, 6));
  // the unit inclusion [0] -> [1] produces the unit object
  auto e = nerve_section_obj(c, {});
  CHECK(nerve_push_obj(c, gamma_fold(0), e) == nerve_obj1(c, 1));
}

TEST_CASE("gluing checks catch corrupted data") {
  auto c = matrix_cat_rat(6);
  auto d2 = nerve_section_obj(c, {2, 3});
  d2.rho[{1, 2}] = rat_mor(6, 6, {2, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0,
                                  0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1});
  CHECK(!nerve_check_obj(c, d2).empty());

  auto bad = nerve_section_obj(c, {2, 3});
  bad.x[2] = 5;  // wrong total: gluing endpoints break
  CHECK(!nerve_check_obj(c, bad).empty());
}

TEST_CASE("lift forces higher components from singleton ones") {
  auto c = matrix_cat_rat(6);
  auto a = nerve_section_obj(c, {2, 3});
  auto f = rat_mor(2, 2, {1, 2, 3, 4});
  auto g = rat_mor(3, 3, {0, 1, 0, 0, 0, 1, 1, 0, 0});
  auto F = nerve_lift(c, a, a, {f, g});
  CHECK(F.g[0] == f);
  CHECK(F.g[1] == g);
  CHECK(F.g[2] == c.tensor_mor(f, g));
  CHECK(nerve_check_mor(c, F).empty());
  // fold transports the lift to the plain tensor of the components
  CHECK(nerve_push_mor(c, gamma_fold(2), F) == nerve_mor1(c, c.tensor_mor(f, g)));

  auto broken = F;
  broken.g[2] = c.id(6);
  CHECK(!nerve_check_mor(c, broken).empty());

  // identity lift is the identity
  CHECK(nerve_lift(c, a, a, {c.id(2), c.id(3)}) == nerve_id(c, a));
}

TEST_CASE("transport is strictly functorial") {
  auto c = matrix_cat_rat(8);
  auto a = nerve_section_obj(c, {2, 3});
  auto F = nerve_lift(c, a, a, {rat_mor(2, 2, {1, 1, 0, 1}), rat_mor(3, 3, {2, 0, 0, 0, 1, 0, 0, 0, 1})});
  CHECK(nerve_check_functorial(c, F, 3).empty());

  auto t = smc_from_cmonoid(cmonoid_cyclic(3));
  auto b = nerve_section_obj(t, {1, 2, 2});
  CHECK(b.x == std::vector<int>{1, 2, 0, 2, 0, 1, 2});
  auto G = nerve_lift(t, b, b, {t.id(1), t.id(2), t.id(2)});
  CHECK(nerve_check_functorial(t, G, 3).empty());
}

TEST_CASE("rational matrix view is special by construction") {
  auto c = matrix_cat_rat(2);
  std::vector<MatrixCat<Rat>::Mor> mors{rat_mor(2, 2, {1, 2, 0, 1}),
                                        rat_mor(1, 2, {3, 4})};
  auto rep = nerve_is_special(c, {1, 2}, mors, 4);
  CHECK(rep.ok);
  CHECK(rep.exhaustive);

  // truncating the tuple sample is reported honestly
  auto trunc = nerve_is_special(c, {1, 2}, {}, 4, 8);
  CHECK(trunc.ok);
  CHECK(!trunc.exhaustive);
}

TEST_CASE("product category") {
  auto p2 = product_fincat(fincat_delta1(), 2);
  CHECK(p2.n_obj == 4);
  CHECK(p2.n_mor() == 9);
  CHECK(check_category(p2).empty());
  CHECK(p2.hom(0, 3).size() == 1);  // (0,0) -> (1,1)
  CHECK(p2.hom(3, 0).empty());

  auto p0 = product_fincat(fincat_delta1(), 0);
  CHECK(p0.n_obj == 1);
  CHECK(p0.n_mor() == 1);
  CHECK(check_category(p0).empty());
}

TEST_CASE("discrete levelwise categories from a set-level nerve") {
  for (int k : {1, 2, 3}) {
    auto e = k == 1 ? cmonoid_trivial() : cmonoid_cyclic(k);
    auto g = gamma_cat_discrete(nerve_monoid(e, 4));
    CHECK(check_gamma_cat(g, 3).empty());
    auto rep = is_special(g);
    CHECK(rep.ok);
    CHECK(rep.level_ok == std::vector<bool>(5, true));
  }

  // identity on the nose: tuple ids match product encoding
  auto g2 = gamma_cat_discrete(nerve_monoid(cmonoid_cyclic(2), 2));
  CHECK(segal_functor(g2, 2).omap == std::vector<int>{0, 1, 2, 3});

  // the padded assignment has two objects at level 0, so it cannot be special
  auto badrep = is_special(gamma_cat_discrete(padded_nerve(cmonoid_cyclic(2), 3)));
  CHECK(!badrep.ok);
  CHECK(badrep.failing_level == 0);
  CHECK(!badrep.level_ok[0]);
}

TEST_CASE("padded levels are special through genuine equivalences") {
  auto g = gamma_cat_padded(cmonoid_cyclic(2), 4);
  CHECK(g.level[0].n_obj == 2);
  CHECK(g.level[4].n_obj == 32);
  CHECK(g.level[4].n_mor() == 64);
  CHECK(check_gamma_cat(g, 3).empty());
  auto rep = is_special(g);
  CHECK(rep.ok);
  // level 0 is equivalent, not isomorphic, to the terminal category
  CHECK(g.level[0].n_obj != fincat_terminal().n_obj);
}

TEST_CASE("materialized nerve of the one-dimensional matrix category") {
  auto c = matrix_cat_fp(2, 1);
  auto g = materialize_nerve(c, 4);
  REQUIRE(g.level.size() == 5);
  CHECK(g.level[0].n_obj == 1);
  CHECK(g.level[1].n_obj == 2);
  CHECK(g.level[1].n_mor() == 5);
  CHECK(g.level[2].n_obj == 4);
  CHECK(g.level[2].n_mor() == 25);
  CHECK(g.level[4].n_obj == 16);
  CHECK(g.level[4].n_mor() == 625);
  for (int n = 0; n <= 4; ++n) CHECK(check_category(g.level[n]).empty());
  CHECK(check_gamma_cat(g, 3).empty());
  auto rep = is_special(g);
  CHECK(rep.ok);
  CHECK(rep.level_ok == std::vector<bool>(5, true));

  // enumeration stays within budget here but refuses unbounded hom-sets
  CHECK_THROWS_AS(materialize_nerve(matrix_cat_rat(1), 2), std::runtime_error);
}
