#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rigidtrace/fincat.hpp"

using namespace rigidtrace;

// one-object category with End = Z/2
static FinCat z2_monoid_cat() {
  FinCatBuilder b;
  b.add_object();
  int e = b.add_morphism(0, 0);
  int s = b.add_morphism(0, 0);
  b.set_identity(0, e);
  b.set_compose(s, s, e);
  return b.build();
}

TEST_CASE("check_category accepts valid categories") {
  CHECK(check_category(fincat_terminal()).empty());
  CHECK(check_category(fincat_delta1()).empty());
  CHECK(check_category(fincat_delta2()).empty());
  CHECK(check_category(fincat_contractible_pair()).empty());
  CHECK(check_category(fincat_pair_groupoid_z2()).empty());
}

TEST_CASE("check_category names a bad composition entry") {
  FinCatBuilder b;
  b.add_object();
  b.add_object();
  b.set_identity(0, b.add_morphism(0, 0));
  b.set_identity(1, b.add_morphism(1, 1));
  int f = b.add_morphism(0, 1);
  FinCat c = b.raw();
  // corrupt: f o id0 should be f, point it at id0 (wrong target)
  c.comp[static_cast<size_t>(f) * c.n_mor() + 0] = 0;
  auto rep = check_category(c);
  REQUIRE(!rep.empty());
  CHECK(rep[0].find("compose(2,0)") != std::string::npos);
}

TEST_CASE("independent associativity sweep on accepted categories") {
  for (const FinCat& c : {fincat_delta2(), fincat_pair_groupoid_z2(), z2_monoid_cat()}) {
    for (int h = 0; h < c.n_mor(); ++h)
      for (int g = 0; g < c.n_mor(); ++g)
        for (int f = 0; f < c.n_mor(); ++f) {
          if (c.tgt(f) != c.src(g) || c.tgt(g) != c.src(h)) continue;
          CHECK(c.compose(c.compose(h, g), f) == c.compose(h, c.compose(g, f)));
        }
  }
}

TEST_CASE("mor_inverse and iso_classes") {
  FinCat g = fincat_contractible_pair();
  auto inv = mor_inverse(g, 2);
  REQUIRE(inv.has_value());
  CHECK(*inv == 3);
  CHECK(!mor_inverse(fincat_delta1(), 2).has_value());
  CHECK(iso_classes(g) == std::vector<int>{0, 0});
  CHECK(iso_classes(fincat_delta1()) == std::vector<int>{0, 1});
  CHECK(iso_classes(fincat_pair_groupoid_z2()) == std::vector<int>{0, 0});
}

TEST_CASE("comma_under shapes and initial object") {
  FinCat d1 = fincat_delta1();
  CommaUnder c0 = comma_under(d1, 0);
  CHECK(c0.cat.n_obj == 2);
  CHECK(c0.cat.n_mor() == 3);
  CHECK(check_functor(c0.cat, d1, c0.to_base).empty());
  // id_0 (comma object 0) is initial: exactly one morphism to every object
  for (int y = 0; y < c0.cat.n_obj; ++y) CHECK(c0.cat.hom(0, y).size() == 1);

  CommaUnder c1 = comma_under(d1, 1);
  CHECK(c1.cat.n_obj == 1);
  CHECK(c1.cat.n_mor() == 1);

  FinCat d2 = fincat_delta2();
  CommaUnder c2 = comma_under(d2, 0);
  CHECK(c2.cat.n_obj == 3);
  CHECK(c2.cat.n_mor() == 6);
  // to_base is an isomorphism onto the base here
  CHECK(check_functor(c2.cat, d2, c2.to_base).empty());
  CHECK(is_equivalence(c2.cat, d2, c2.to_base).ok);
  for (int y = 0; y < c2.cat.n_obj; ++y) CHECK(c2.cat.hom(0, y).size() == 1);
}

TEST_CASE("comma_under under a groupoid object") {
  FinCat g = fincat_pair_groupoid_z2();
  CommaUnder c = comma_under(g, 0);
  CHECK(c.cat.n_obj == 4);
  CHECK(check_category(c.cat).empty());
  for (int y = 0; y < c.cat.n_obj; ++y) CHECK(c.cat.hom(0, y).size() == 1);
}

TEST_CASE("nerve_truncated counts") {
  CHECK(nerve_truncated(fincat_terminal(), 3).counts() == std::vector<int>{1, 1, 1, 1});
  CHECK(nerve_truncated(fincat_delta1(), 2).counts() == std::vector<int>{2, 3, 4});
  // two objects with Z/2-torsor hom-sets: 8 morphisms total
  CHECK(nerve_truncated(fincat_pair_groupoid_z2(), 1).counts() == std::vector<int>{2, 8});
}

TEST_CASE("simplicial identities hold up to dimension 4") {
  for (const FinCat& c : {fincat_terminal(), fincat_delta1(), fincat_delta2(),
                          fincat_contractible_pair(), z2_monoid_cat()}) {
    TruncatedSSet s = nerve_truncated(c, 4);
    CHECK(check_simplicial(s).empty());
  }
}

TEST_CASE("nerve faces compose chains") {
  FinCat d2 = fincat_delta2();
  TruncatedSSet s = nerve_truncated(d2, 2);
  // locate the chain [0, f01, f12]; its inner face is [0, f02]
  int k = -1;
  for (size_t i = 0; i < s.cells[2].size(); ++i)
    if (s.cells[2][i] == std::vector<int>{0, 3, 4}) k = static_cast<int>(i);
  REQUIRE(k >= 0);
  CHECK(s.cells[1][s.face[2][1][k]] == std::vector<int>{0, 5});
  CHECK(s.cells[1][s.face[2][0][k]] == std::vector<int>{1, 4});
  CHECK(s.cells[1][s.face[2][2][k]] == std::vector<int>{0, 3});
}

TEST_CASE("functor and naturality validation") {
  FinCat d1 = fincat_delta1();
  FinCat z2 = z2_monoid_cat();
  FinFunctor collapse{{0, 0}, {0, 0, 0}};  // everything to the identity
  CHECK(check_functor(d1, z2, collapse).empty());
  FinFunctor twist{{0, 0}, {0, 0, 1}};  // sends the arrow to s: still a functor
  CHECK(check_functor(d1, z2, twist).empty());
  FinFunctor broken{{0, 0}, {1, 0, 0}};  // identity of 0 maps to s
  CHECK(!check_functor(d1, z2, broken).empty());

  // eta = (s, id) is not natural for F = G = collapse
  NatTransf eta{1, 0};
  CHECK(!check_natural(d1, z2, collapse, collapse, eta).empty());
  NatTransf good{0, 0};
  CHECK(check_natural(d1, z2, collapse, collapse, good).empty());
}

TEST_CASE("all_functors enumerates exactly the functors") {
  FinCat d1 = fincat_delta1();
  auto fs = all_functors(d1, d1);
  CHECK(fs.size() == 3);
  for (const auto& f : fs) CHECK(check_functor(d1, d1, f).empty());
  CHECK(all_functors(fincat_terminal(), fincat_pair_groupoid_z2()).size() == 2);
  CHECK(all_functors(fincat_pair_groupoid_z2(), fincat_terminal()).size() == 1);
  // functors z2 -> z2: monoid maps Z/2 -> Z/2 (two of them)
  FinCat z2 = z2_monoid_cat();
  CHECK(all_functors(z2, z2).size() == 2);
}

TEST_CASE("is_equivalence verdicts") {
  FinCat d2 = fincat_delta2();
  CHECK(is_equivalence(d2, d2, identity_functor(d2)).ok);

  FinCat d1 = fincat_delta1();
  FinCat pt = fincat_terminal();
  FinFunctor to_pt{{0, 0}, {0, 0, 0}};
  CHECK(!is_equivalence(d1, pt, to_pt).ok);

  FinCat g = fincat_contractible_pair();
  FinFunctor incl{{0}, {0}};
  auto w = is_equivalence(pt, g, incl);
  REQUIRE(w.ok);
  CHECK(w.preimage_obj == std::vector<int>{0, 0});
  CHECK(g.src(w.iso[1]) == 0);
  CHECK(g.tgt(w.iso[1]) == 1);
  CHECK(mor_inverse(g, w.iso[1]).has_value());
}

// brute-force equivalence oracle: search for a quasi-inverse with natural isos
static bool natiso_exists(const FinCat& a, const FinFunctor& h) {
  // natural isomorphism h => id_a, components chosen among invertible morphisms
  std::vector<std::vector<int>> cands(a.n_obj);
  for (int x = 0; x < a.n_obj; ++x) {
    for (int m : a.hom(h.omap[x], x))
      if (mor_inverse(a, m)) cands[x].push_back(m);
    if (cands[x].empty()) return false;
  }
  std::vector<size_t> pick(a.n_obj, 0);
  while (true) {
    NatTransf eta(a.n_obj);
    for (int x = 0; x < a.n_obj; ++x) eta[x] = cands[x][pick[x]];
    if (check_natural(a, a, h, identity_functor(a), eta).empty()) return true;
    int i = a.n_obj - 1;
    while (i >= 0 && pick[i] + 1 == cands[i].size()) pick[i--] = 0;
    if (i < 0) return false;
    ++pick[i];
  }
}

static bool quasi_inverse_exists(const FinCat& a, const FinCat& b, const FinFunctor& f) {
  for (const auto& g : all_functors(b, a)) {
    if (!natiso_exists(a, compose_functors(g, f))) continue;
    if (natiso_exists(b, compose_functors(f, g))) return true;
  }
  return false;
}

TEST_CASE("is_equivalence agrees with quasi-inverse search") {
  FinCat d1 = fincat_delta1(), d2 = fincat_delta2(), pt = fincat_terminal();
  FinCat g = fincat_contractible_pair(), gz = fincat_pair_groupoid_z2();
  FinCat z2 = z2_monoid_cat();
  FinFunctor to_z2;  // quotient of the pair groupoid onto one object
  to_z2.omap = {0, 0};
  to_z2.mmap.resize(gz.n_mor());
  for (int m = 0; m < gz.n_mor(); ++m) {
    // morphism ids were added in (x,y,eps) lex order: eps = m & 1
    to_z2.mmap[m] = m & 1;
  }
  REQUIRE(check_functor(gz, z2, to_z2).empty());

  struct Case {
    const FinCat* a;
    const FinCat* b;
    FinFunctor f;
  };
  std::vector<Case> cases = {
      {&d2, &d2, identity_functor(d2)},
      {&d1, &pt, FinFunctor{{0, 0}, {0, 0, 0}}},
      {&pt, &g, FinFunctor{{0}, {0}}},
      {&g, &pt, FinFunctor{{0, 0}, {0, 0, 0, 0}}},
      {&d1, &d1, FinFunctor{{0, 0}, {0, 0, 0}}},
      {&gz, &z2, to_z2},
  };
  for (const auto& c : cases) {
    REQUIRE(check_functor(*c.a, *c.b, c.f).empty());
    CHECK(is_equivalence(*c.a, *c.b, c.f).ok == quasi_inverse_exists(*c.a, *c.b, c.f));
  }
}
