#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rigidtrace/gamma_cat.hpp"
#include "rigidtrace/reconstruction.hpp"
#include "rigidtrace/smc.hpp"

using namespace rigidtrace;

namespace {

MatrixCat<Rat>::Mor rat_mor(int s, int t, const std::vector<long>& entries) {
  MatrixCat<Rat>::Mor f{s, t, mat_zero(t, s, Rat(0))};
  for (size_t i = 0; i < entries.size(); ++i) f.m.a[i] = Rat(entries[i]);
  return f;
}

}  // namespace

TEST_CASE("matrix category roundtrip is the identity comparison") {
  auto c = matrix_cat_rat(2);
  auto rec = monoidal_from_gamma(nerve_backend(c));

  std::vector<MatrixCat<Rat>::Mor> mors{rat_mor(2, 2, {1, 2, 3, 4}),
                                        rat_mor(1, 2, {5, 6}),
                                        rat_mor(2, 1, {7, 8})};
  CHECK(compare_reconstruction(c, rec, {1, 2}, mors).empty());
  CHECK(rec.unit() == nerve_obj1(c, 1));
  CHECK(rec.sym(nerve_obj1(c, 2), nerve_obj1(c, 2)) == nerve_mor1(c, c.sym(2, 2)));

  std::vector<NerveObj<MatrixCat<Rat>>> view{nerve_obj1(c, 1), nerve_obj1(c, 2)};
  std::vector<NerveMor<MatrixCat<Rat>>> nm;
  for (const auto& f : mors) nm.push_back(nerve_mor1(c, f));
  auto rep = coherence_report(rec, view, nm);
  CHECK(rep.ok());
  CHECK(rep.pentagon_ok);
  CHECK(rep.hexagon_ok);
  CHECK(rep.sym_involutive);
  CHECK(rep.sym_natural);
  CHECK(rep.constraints_identity);
  CHECK(rep.first_failure.empty());
}

TEST_CASE("discrete monoid roundtrips through the nerve backend") {
  std::vector<FinCMonoid> monoids{cmonoid_trivial(), cmonoid_cyclic(2), cmonoid_cyclic(3),
                                  cmonoid_truncated_add()};
  for (const auto& e : monoids) {
    auto t = smc_from_cmonoid(e);
    auto rec = monoidal_from_gamma(nerve_backend(t));
    std::vector<int> objs, mors;
    for (int x = 0; x < e.n; ++x) {
      objs.push_back(x);
      mors.push_back(t.id(x));
    }
    CHECK(compare_reconstruction(t, rec, objs, mors).empty());
    // the tensor is the monoid operation
    for (int a = 0; a < e.n; ++a)
      for (int b = 0; b < e.n; ++b)
        CHECK(rec.tensor_obj(nerve_obj1(t, a), nerve_obj1(t, b)) ==
              nerve_obj1(t, e.mul(a, b)));

    std::vector<NerveObj<TableSMC>> view;
    std::vector<NerveMor<TableSMC>> nm;
    for (int x : objs) view.push_back(nerve_obj1(t, x));
    for (int f : mors) nm.push_back(nerve_mor1(t, f));
    auto rep = coherence_report(rec, view, nm);
    CHECK(rep.ok());
    CHECK(rep.constraints_identity);
    // in a discrete category the symmetry is an identity as well
    for (int a = 0; a < e.n; ++a)
      for (int b = 0; b < e.n; ++b) {
        auto s = rec.sym(nerve_obj1(t, a), nerve_obj1(t, b));
        CHECK(s == nerve_id(t, rec.b.src(s)));
      }
  }
}

TEST_CASE("discrete monoid through materialized levels") {
  auto g = gamma_cat_discrete(nerve_monoid(cmonoid_cyclic(3), 4));
  auto rec = monoidal_from_gamma(FinGammaBackend{g});
  CHECK(rec.unit() == GcObj{1, 0});
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      CHECK(rec.tensor_obj(GcObj{1, a}, GcObj{1, b}) == GcObj{1, (a + b) % 3});

  std::vector<GcObj> view{GcObj{1, 0}, GcObj{1, 1}, GcObj{1, 2}};
  std::vector<GcMor> mors;
  for (const auto& x : view) mors.push_back(rec.b.id(x));
  auto rep = coherence_report(rec, view, mors);
  CHECK(rep.ok());
  CHECK(rep.constraints_identity);

  // trivial monoid: one object, one morphism at every level
  auto g1 = gamma_cat_discrete(nerve_monoid(cmonoid_trivial(), 4));
  auto rec1 = monoidal_from_gamma(FinGammaBackend{g1});
  CHECK(rec1.unit() == GcObj{1, 0});
  CHECK(rec1.tensor_obj(GcObj{1, 0}, GcObj{1, 0}) == GcObj{1, 0});
  auto rep1 = coherence_report(rec1, {GcObj{1, 0}}, {rec1.b.id(GcObj{1, 0})});
  CHECK(rep1.ok());
}

TEST_CASE("padded levels reconstruct through non-identity counits") {
  auto g = gamma_cat_padded(cmonoid_cyclic(2), 4);
  FinGammaBackend bk{g};
  auto rec = monoidal_from_gamma(bk);

  // object id at level 1 = tuple*2 + tag
  auto obj = [](int e, int tag) { return GcObj{1, e * 2 + tag}; };
  CHECK(rec.unit() == obj(0, 0));

  // matching tags have an on-the-nose section, so the tag survives and the
  // tuple parts add; mixed tags fall back to the lowest preimage, tag 0
  CHECK(rec.tensor_obj(obj(1, 1), obj(1, 1)) == obj(0, 1));
  CHECK(rec.tensor_obj(obj(1, 0), obj(0, 1)) == obj(1, 0));
  CHECK(rec.tensor_obj(obj(0, 0), obj(0, 1)) == obj(0, 0));

  // the mixed-tag section is forced into genuinely non-identity counits
  auto s = rec.b.section({obj(1, 0), obj(0, 1)});
  CHECK(s.obj.level == 2);
  bool some_nonid = false;
  for (const auto& k : s.counit)
    if (!(k == rec.b.id(rec.b.tgt(k)))) some_nonid = true;
  CHECK(some_nonid);

  std::vector<GcObj> view{obj(0, 0), obj(0, 1), obj(1, 0), obj(1, 1)};
  std::vector<GcMor> mors;
  for (const auto& x : view) mors.push_back(rec.b.id(x));
  // every hom-set here is a singleton, so include the comparison morphisms
  for (int f = 0; f < g.level[1].n_mor(); ++f) mors.push_back(GcMor{1, f});
  auto rep = coherence_report(rec, view, mors);
  CHECK(rep.pentagon_ok);
  CHECK(rep.hexagon_ok);
  CHECK(rep.sym_involutive);
  CHECK(rep.sym_natural);
}

TEST_CASE("materialized matrix nerve reconstructs dimension arithmetic") {
  auto c = matrix_cat_fp(2, 1);
  auto g = materialize_nerve(c, 4);
  FinGammaBackend bk{g};
  auto rec = monoidal_from_gamma(bk);

  // level-1 ids follow the enumeration: object d = dimension d
  CHECK(rec.unit() == GcObj{1, 1});
  CHECK(rec.tensor_obj(GcObj{1, 1}, GcObj{1, 1}) == GcObj{1, 1});
  CHECK(rec.tensor_obj(GcObj{1, 0}, GcObj{1, 1}) == GcObj{1, 0});
  CHECK(rec.tensor_obj(GcObj{1, 0}, GcObj{1, 0}) == GcObj{1, 0});

  std::vector<GcObj> view{GcObj{1, 0}, GcObj{1, 1}};
  std::vector<GcMor> mors;
  for (int f = 0; f < g.level[1].n_mor(); ++f) mors.push_back(GcMor{1, f});
  auto rep = coherence_report(rec, view, mors);
  CHECK(rep.ok());
  CHECK(rep.constraints_identity);

  // zero scalar tensored with itself is the zero scalar
  GcMor zero{1, -1};
  for (int f : g.level[1].hom(1, 1))
    if (f != g.level[1].id(1)) zero = GcMor{1, f};
  REQUIRE(zero.id >= 0);
  CHECK(rec.tensor_mor(zero, zero) == zero);
  CHECK(rec.tensor_mor(bk.id(GcObj{1, 1}), zero) == zero);
}

TEST_CASE("non-special data is rejected with the offending level") {
  auto g = gamma_cat_discrete(padded_nerve(cmonoid_cyclic(2), 3));
  FinGammaBackend bk{g};
  auto rec = monoidal_from_gamma(bk);
  // the two passenger coordinates disagree, so no preimage exists
  bool threw = false;
  try {
    rec.tensor_obj(GcObj{1, 0}, GcObj{1, 3});
  } catch (const NotSpecialError& e) {
    threw = true;
    CHECK(e.level == 2);
  }
  CHECK(threw);
}
