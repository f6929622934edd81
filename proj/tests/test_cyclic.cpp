#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rigidtrace/cyclic.hpp"

using namespace rigidtrace;

namespace {

template <typename K>
bool mat_zero_check(const Matrix<K>& m) {
  for (const K& v : m.a)
    if (!kis_zero(v)) return false;
  return true;
}

// identities plus the commutativity consequence b_1 = 0, on both complexes
template <typename K>
void check_operator_identities(const FDAlgebra<K>& a, int bound) {
  MixedComplex<K> full = mixed_complex(a, bound);
  MixedComplex<K> norm = normalized_complex(a, bound);
  CHECK(check_mixed_identities(full).empty());
  CHECK(check_mixed_identities(norm).empty());
  CHECK(mat_zero_check(full.b[1]));
  CHECK(mat_zero_check(norm.b[1]));
}

template <typename K>
void check_hh_dims(const FDAlgebra<K>& a, const std::vector<int>& expect) {
  MixedComplex<K> full = mixed_complex(a, 5);
  MixedComplex<K> norm = normalized_complex(a, 5);
  for (int n = 0; n < static_cast<int>(expect.size()); ++n) {
    CAPTURE(n);
    HomologyResult<K> hf = hochschild_homology(full, n);
    HomologyResult<K> hn = hochschild_homology(norm, n);
    CHECK(hf.dim == expect[n]);
    CHECK(hn.dim == expect[n]);
    CHECK(static_cast<int>(hf.reps.size()) == expect[n]);
    for (const auto& v : hf.reps)
      CHECK(alg_is_zero(mat_vec(full.b[n], v, a.exemplar())));
  }
}

AlgMatrix<Rat> scalar_entries(const FDAlgebra<Rat>& a, std::vector<std::vector<Rat>> rows) {
  int r = static_cast<int>(rows.size());
  AlgMatrix<Rat> m = amat_zero(a, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) m.at(i, j) = {rows[i][j]};
  return m;
}

}  // namespace

TEST_CASE("algebra validation") {
  CHECK(check_algebra(algebra_field(Rat(1))).empty());
  CHECK(check_algebra(algebra_field(Fp(1, 3))).empty());
  CHECK(check_algebra(algebra_pair(Rat(1))).empty());
  CHECK(check_algebra(algebra_dual_numbers(Rat(1))).empty());
  CHECK(check_algebra(algebra_dual_numbers(Fp(1, 3))).empty());

  // any symmetric change to the lone generator still yields K[x]/(x^2 - f),
  // so corrupt one side of a product instead
  FDAlgebra<Rat> bad = algebra_dual_numbers(Rat(1));
  bad.mul[1][0] = {Rat(1), Rat(0)};
  auto viol = check_algebra(bad);
  REQUIRE(!viol.empty());
  bool mentions = false;
  for (const auto& s : viol)
    if (s.find("commutative") != std::string::npos) mentions = true;
  CHECK(mentions);

  FDAlgebra<Rat> nounit = algebra_pair(Rat(1));
  nounit.unit = {Rat(1), Rat(0)};
  viol = check_algebra(nounit);
  REQUIRE(!viol.empty());
  CHECK(viol[0].find("unit") != std::string::npos);

  CHECK_THROWS_AS(mixed_complex(bad, 3), std::invalid_argument);
}

TEST_CASE("operator identities hold to degree five") {
  check_operator_identities(algebra_field(Rat(1)), 5);
  check_operator_identities(algebra_pair(Rat(1)), 5);
  check_operator_identities(algebra_dual_numbers(Rat(1)), 5);
  check_operator_identities(algebra_dual_numbers(Fp(1, 3)), 5);
  check_operator_identities(algebra_field(Fp(1, 3)), 5);
}

TEST_CASE("ground field collapses") {
  MixedComplex<Rat> full = mixed_complex(algebra_field(Rat(1)), 5);
  // alternating faces cancel pairwise in odd degree and leave one in even
  CHECK(full.b[2].at(0, 0) == Rat(1));
  CHECK(full.b[3].at(0, 0) == Rat(0));
  CHECK(full.B[0].at(0, 0) == Rat(2));

  MixedComplex<Rat> norm = normalized_complex(algebra_field(Rat(1)), 5);
  CHECK(norm.dim == std::vector<int>{1, 0, 0, 0, 0, 0});

  MixedComplex<Rat> pairnorm = normalized_complex(algebra_pair(Rat(1)), 5);
  CHECK(pairnorm.dim == std::vector<int>{2, 2, 2, 2, 2, 2});
  CHECK(pairnorm.algebra.basis[0] == "1");
}

TEST_CASE("adapted presentations") {
  FDAlgebra<Rat> ad = adapted_form(algebra_pair(Rat(1)));
  CHECK(check_algebra(ad).empty());
  CHECK(ad.unit == std::vector<Rat>{Rat(1), Rat(0)});
  // the completion picks the first idempotent; it squares to itself
  CHECK(ad.mul[1][1] == std::vector<Rat>{Rat(0), Rat(1)});

  FDAlgebra<Rat> dd = adapted_form(algebra_dual_numbers(Rat(1)));
  CHECK(check_algebra(dd).empty());
  CHECK(dd.mul[1][1] == std::vector<Rat>{Rat(0), Rat(0)});
}

TEST_CASE("hochschild dimensions agree across both routes") {
  check_hh_dims(algebra_field(Rat(1)), {1, 0, 0, 0});
  check_hh_dims(algebra_pair(Rat(1)), {2, 0, 0, 0});
  check_hh_dims(algebra_dual_numbers(Rat(1)), {2, 1, 1, 1});
  check_hh_dims(algebra_dual_numbers(Fp(1, 3)), {2, 1, 1, 1});

  MixedComplex<Rat> m = mixed_complex(algebra_field(Rat(1)), 5);
  CHECK_THROWS_AS(hochschild_homology(m, 5), std::invalid_argument);
}

TEST_CASE("negative cyclic truncations") {
  SUBCASE("rationals stay one dimensional") {
    for (bool normalized : {false, true}) {
      MixedComplex<Rat> m = normalized ? normalized_complex(algebra_field(Rat(1)), 5)
                                       : mixed_complex(algebra_field(Rat(1)), 5);
      for (int k : {1, 2}) {
        NegCyclicReport r = negative_cyclic(m, 0, k);
        CHECK(r.dim == 1);
        CHECK(r.stabilized);
      }
    }
  }
  SUBCASE("orthogonal idempotents give two") {
    for (bool normalized : {false, true}) {
      MixedComplex<Rat> m = normalized ? normalized_complex(algebra_pair(Rat(1)), 5)
                                       : mixed_complex(algebra_pair(Rat(1)), 5);
      NegCyclicReport r = negative_cyclic(m, 0, 2);
      CHECK(r.dim == 2);
      CHECK(r.prev_dim == 2);
      CHECK(r.stabilized);
    }
  }
  SUBCASE("dual numbers in characteristic zero") {
    for (bool normalized : {false, true}) {
      MixedComplex<Rat> m = normalized ? normalized_complex(algebra_dual_numbers(Rat(1)), 5)
                                       : mixed_complex(algebra_dual_numbers(Rat(1)), 5);
      for (int k : {1, 2}) {
        NegCyclicReport r = negative_cyclic(m, 0, k);
        CHECK(r.dim == 2);
        CHECK(r.stabilized);
      }
      NegCyclicReport r1 = negative_cyclic(m, 1, 1);
      CHECK(r1.dim == 1);
      CHECK(r1.stabilized);
    }
  }
  SUBCASE("dual numbers in characteristic three do not stabilize") {
    // the odd scaling factors of the raising operator vanish mod 3, so the
    // truncation keeps picking up a new class
    for (bool normalized : {false, true}) {
      MixedComplex<Fp> m = normalized ? normalized_complex(algebra_dual_numbers(Fp(1, 3)), 5)
                                      : mixed_complex(algebra_dual_numbers(Fp(1, 3)), 5);
      NegCyclicReport r1 = negative_cyclic(m, 0, 1);
      CHECK(r1.dim == 2);
      CHECK(r1.stabilized);
      NegCyclicReport r2 = negative_cyclic(m, 0, 2);
      CHECK(r2.dim == 3);
      CHECK(r2.prev_dim == 2);
      CHECK(!r2.stabilized);
    }
  }
  SUBCASE("bounds enforced") {
    MixedComplex<Rat> m = mixed_complex(algebra_field(Rat(1)), 5);
    CHECK_THROWS_AS(negative_cyclic(m, 0, 3), std::invalid_argument);
    CHECK_THROWS_AS(negative_cyclic(m, -1, 0), std::invalid_argument);
  }
}

TEST_CASE("chern character over the rationals") {
  FDAlgebra<Rat> a = algebra_field(Rat(1));
  MixedComplex<Rat> m = mixed_complex(a, 6);

  AlgMatrix<Rat> unit = amat_identity(a, 1);
  NegCyclicCycle<Rat> c = chern_character(m, unit, 2);
  CHECK(check_cycle(m, c).empty());
  CHECK(c.comp[0] == std::vector<Rat>{Rat(1)});
  CHECK(c.comp[1] == std::vector<Rat>{Rat(-2)});
  CHECK(c.comp[2] == std::vector<Rat>{Rat(12)});

  AlgMatrix<Rat> proj = scalar_entries(a, {{Rat(1), Rat(0)}, {Rat(0), Rat(0)}});
  REQUIRE(amat_is_idempotent(a, proj));
  NegCyclicCycle<Rat> cp = chern_character(m, proj, 2);
  CHECK(cp.comp == c.comp);  // same trace, same lift

  // conjugating the projector moves nothing: the difference of traces is an
  // exact boundary, here literally zero since b vanishes in degree one
  AlgMatrix<Rat> g = scalar_entries(a, {{Rat(1), Rat(1)}, {Rat(0), Rat(1)}});
  AlgMatrix<Rat> ginv = scalar_entries(a, {{Rat(1), Rat(-1)}, {Rat(0), Rat(1)}});
  CHECK(amat_mul(a, g, ginv) == amat_identity(a, 2));
  AlgMatrix<Rat> conj = amat_mul(a, amat_mul(a, g, proj), ginv);
  CHECK(amat_is_idempotent(a, conj));
  CHECK(conj.at(0, 0) == std::vector<Rat>{Rat(1)});
  CHECK(conj.at(0, 1) == std::vector<Rat>{Rat(-1)});
  CHECK(conj.at(1, 0) == std::vector<Rat>{Rat(0)});
  CHECK(conj.at(1, 1) == std::vector<Rat>{Rat(0)});
  std::vector<Rat> diff = amat_trace(a, conj);
  std::vector<Rat> base = amat_trace(a, proj);
  for (size_t i = 0; i < diff.size(); ++i) diff[i] = diff[i] - base[i];
  CHECK(alg_is_zero(diff));
  CHECK(solve(m.b[1], diff, Rat(1)).has_value());
}

TEST_CASE("chern character over a product and dual numbers") {
  FDAlgebra<Rat> pr = algebra_pair(Rat(1));
  MixedComplex<Rat> mp = mixed_complex(pr, 6);
  AlgMatrix<Rat> half = amat_zero(pr, 1);
  half.at(0, 0) = {Rat(1), Rat(0)};
  REQUIRE(amat_is_idempotent(pr, half));
  NegCyclicCycle<Rat> c = chern_character(mp, half, 2);
  CHECK(check_cycle(mp, c).empty());
  CHECK(c.comp[0] == std::vector<Rat>{Rat(1), Rat(0)});
  CHECK(chern_character(mp, half, 2).comp == c.comp);  // deterministic

  FDAlgebra<Rat> dn = algebra_dual_numbers(Rat(1));
  MixedComplex<Rat> md = mixed_complex(dn, 4);
  AlgMatrix<Rat> e = amat_zero(dn, 2);
  e.at(0, 0) = dn.unit;
  e.at(0, 1) = {Rat(0), Rat(1)};  // nilpotent corner entry
  REQUIRE(amat_is_idempotent(dn, e));
  NegCyclicCycle<Rat> cd = chern_character(md, e, 1);
  CHECK(check_cycle(md, cd).empty());
  CHECK(cd.comp[0] == std::vector<Rat>{Rat(1), Rat(0)});

  AlgMatrix<Rat> g = amat_identity(dn, 2);
  g.at(0, 1) = {Rat(0), Rat(1)};
  AlgMatrix<Rat> ginv = amat_identity(dn, 2);
  ginv.at(0, 1) = {Rat(0), Rat(-1)};
  CHECK(amat_mul(dn, g, ginv) == amat_identity(dn, 2));
  AlgMatrix<Rat> p10 = amat_zero(dn, 2);
  p10.at(0, 0) = dn.unit;
  AlgMatrix<Rat> conj = amat_mul(dn, amat_mul(dn, g, p10), ginv);
  CHECK(amat_is_idempotent(dn, conj));
  CHECK(amat_trace(dn, conj) == amat_trace(dn, p10));
}

TEST_CASE("degree zero traces add and multiply") {
  FDAlgebra<Rat> pr = algebra_pair(Rat(1));
  AlgMatrix<Rat> half = amat_zero(pr, 1);
  half.at(0, 0) = {Rat(1), Rat(0)};
  AlgMatrix<Rat> one = amat_identity(pr, 1);

  AlgMatrix<Rat> both = amat_dirsum(pr, half, one);
  CHECK(amat_is_idempotent(pr, both));
  CHECK(amat_trace(pr, both) == alg_add(amat_trace(pr, half), amat_trace(pr, one)));

  AlgMatrix<Rat> prod = amat_kron(pr, both, half);
  CHECK(amat_is_idempotent(pr, prod));
  CHECK(amat_trace(pr, prod) == alg_mul(pr, amat_trace(pr, both), amat_trace(pr, half)));

  FDAlgebra<Fp> dn3 = algebra_dual_numbers(Fp(1, 3));
  AlgMatrix<Fp> u = amat_identity(dn3, 2);
  AlgMatrix<Fp> s = amat_dirsum(dn3, u, amat_identity(dn3, 1));
  CHECK(amat_trace(dn3, s) == alg_add(amat_trace(dn3, u), amat_trace(dn3, amat_identity(dn3, 1))));
}

TEST_CASE("guards") {
  CHECK_THROWS_AS(mixed_complex(algebra_pair(Rat(1)), 15), std::length_error);

  FDAlgebra<Rat> a = algebra_field(Rat(1));
  MixedComplex<Rat> norm = normalized_complex(a, 4);
  AlgMatrix<Rat> unit = amat_identity(a, 1);
  CHECK_THROWS_AS(chern_character(norm, unit, 1), std::invalid_argument);

  MixedComplex<Rat> m = mixed_complex(a, 4);
  CHECK_THROWS_AS(chern_character(m, unit, 2), std::invalid_argument);  // needs bound 6

  AlgMatrix<Rat> notid = amat_identity(a, 1);
  notid.at(0, 0) = {Rat(2)};
  CHECK_THROWS_AS(chern_character(m, notid, 1), std::invalid_argument);
}
