#include "rigidtrace/selftest.hpp"

#include <chrono>
#include <stdexcept>
#include <string>
#include <vector>

#include "rigidtrace/bord.hpp"
#include "rigidtrace/cyclic.hpp"
#include "rigidtrace/fibration.hpp"
#include "rigidtrace/fincat.hpp"
#include "rigidtrace/gamma.hpp"
#include "rigidtrace/reconstruction.hpp"
#include "rigidtrace/simplices.hpp"
#include "rigidtrace/smc.hpp"

namespace rigidtrace {

namespace {

std::string plural(long long n, const char* what) { return std::to_string(n) + " " + what; }

// 1. trace(g compose f) = trace(f compose g) over F2 matrices, objects <= 2,
// every composable pair.
CriterionResult crit1() {
  auto c = matrix_cat_fp(2, 2);
  long long pairs = 0, bad = 0;
  for (int x = 0; x <= 2; ++x)
    for (int y = 0; y <= 2; ++y) {
      auto dx = matrix_standard_dual(c, x);
      auto dy = matrix_standard_dual(c, y);
      for (const auto& f : c.hom(x, y))
        for (const auto& g : c.hom(y, x)) {
          ++pairs;
          auto lhs = c.scalar_of(trace(c, dx, c.compose(g, f)));
          auto rhs = c.scalar_of(trace(c, dy, c.compose(f, g)));
          if (!(lhs == rhs)) ++bad;
        }
    }
  return {1, "trace cyclicity", bad == 0 && pairs == 297,
          plural(pairs, "composable pairs") + ", " + plural(bad, "mismatches")};
}

template <typename K>
bool degree_zero_add_mul(const FDAlgebra<K>& a, long long& checked) {
  K z = kzero(a.exemplar());
  K o = kone(a.exemplar());
  std::vector<AlgMatrix<K>> es{amat_zero(a, 1), amat_identity(a, 1), amat_identity(a, 2)};
  AlgMatrix<K> diag = amat_zero(a, 2);
  diag.at(0, 0) = a.unit;
  es.push_back(diag);
  // idempotent basis vectors as 1 x 1 projectors (picks up (1,0) in K x K)
  for (int i = 0; i < a.dim(); ++i) {
    AlgMatrix<K> m = amat_zero(a, 1);
    std::vector<K> v(a.dim(), z);
    v[i] = o;
    m.at(0, 0) = v;
    if (amat_is_idempotent(a, m)) es.push_back(m);
  }
  bool ok = true;
  for (const auto& e : es)
    for (const auto& f : es) {
      ++checked;
      auto sum = amat_trace(a, amat_dirsum(a, e, f));
      if (!(sum == alg_add(amat_trace(a, e), amat_trace(a, f)))) ok = false;
      auto prod = amat_trace(a, amat_kron(a, e, f));
      if (!(prod == alg_mul(a, amat_trace(a, e), amat_trace(a, f)))) ok = false;
    }
  return ok;
}

// 2. trace(f tensor g) = trace(f) trace(g) at the criterion-1 scale, plus
// additivity/multiplicativity of the degree-0 trace on idempotents over every
// test algebra.
CriterionResult crit2() {
  auto c = matrix_cat_fp(2, 2);
  long long pairs = 0, bad = 0;
  for (int x = 0; x <= 2; ++x)
    for (int y = 0; y <= 2; ++y) {
      auto dx = matrix_standard_dual(c, x);
      auto dy = matrix_standard_dual(c, y);
      auto dxy = matrix_standard_dual(c, x * y);
      for (const auto& f : c.hom(x, x))
        for (const auto& g : c.hom(y, y)) {
          ++pairs;
          auto lhs = c.scalar_of(trace(c, dxy, c.tensor_mor(f, g)));
          auto rhs = c.scalar_of(trace(c, dx, f)) * c.scalar_of(trace(c, dy, g));
          if (!(lhs == rhs)) ++bad;
        }
    }
  long long idem = 0;
  bool alg_ok = degree_zero_add_mul(algebra_field(Rat(0)), idem) &&
                degree_zero_add_mul(algebra_pair(Rat(0)), idem) &&
                degree_zero_add_mul(algebra_dual_numbers(Rat(0)), idem) &&
                degree_zero_add_mul(algebra_dual_numbers(Fp(0, 3)), idem);
  return {2, "trace multiplicativity and degree-zero additivity",
          bad == 0 && pairs == 361 && alg_ok,
          plural(pairs, "endomorphism pairs") + ", " + plural(bad, "mismatches") + ", " +
              plural(idem, "idempotent pairs")};
}

// 3. Every object of the F2 matrix category up to dimension 3 is dualizable
// and any two duality data are related by exactly one compatible isomorphism.
CriterionResult crit3() {
  auto c = matrix_cat_fp(2, 3);
  long long data_total = 0, pairs = 0;
  bool ok = true;
  for (int x = 0; x <= 3; ++x) {
    auto data = all_duals(c, x);
    if (data.empty()) ok = false;
    data_total += static_cast<long long>(data.size());
    for (const auto& d : data)
      if (!(d.dual == x)) ok = false;
    auto candidates = c.hom(x, x);  // every datum's dual is x, so one hom-set serves all pairs
    for (const auto& d : data)
      for (const auto& d2 : data) {
        ++pairs;
        int count = 0;
        for (const auto& phi : candidates) {
          if (!c.is_iso(phi)) continue;
          bool u_ok = c.compose(c.tensor_mor(phi, c.id(x)), d.u) == d2.u;
          bool t_ok = c.compose(d2.t, c.tensor_mor(c.id(x), phi)) == d.t;
          if (u_ok && t_ok) ++count;
        }
        if (count != 1) ok = false;
      }
  }
  return {3, "dual uniqueness", ok,
          plural(data_total, "duality data") + ", " + plural(pairs, "ordered pairs compared")};
}

// 4. nerve_monoid is special through level 4 for the four test monoids; the
// padded variant fails and names level 0.
CriterionResult crit4() {
  bool ok = true;
  int special = 0;
  for (const FinCMonoid& e : {cmonoid_trivial(), cmonoid_cyclic(2), cmonoid_cyclic(3),
                              cmonoid_truncated_add()}) {
    SpecialReport r = is_special(nerve_monoid(e, 4), 4);
    if (r.ok)
      ++special;
    else
      ok = false;
  }
  SpecialReport bad = is_special(padded_nerve(cmonoid_cyclic(2), 4), 4);
  bool corrupt_ok = !bad.ok && bad.failing_level == 0 && !bad.level_ok[0];
  return {4, "special nerve condition", ok && corrupt_ok,
          plural(special, "monoids special") + ", corrupted nerve fails at level " +
              std::to_string(bad.failing_level)};
}

// 5. The structure rebuilt from levelwise nerve data agrees with the ambient
// tensor on the nose and passes the coherence report, for the rational matrix
// view {1,2} and every discrete-monoid SMC.
CriterionResult crit5() {
  bool ok = true;
  long long checks = 0;
  {
    auto c = matrix_cat_rat(2);
    auto rec = monoidal_from_gamma(nerve_backend(c));
    auto mor = [&](int s, int t, std::vector<long> entries) {
      MatrixCat<Rat>::Mor f{s, t, mat_zero(t, s, Rat(0))};
      for (size_t i = 0; i < entries.size(); ++i) f.m.a[i] = Rat(entries[i]);
      return f;
    };
    std::vector<MatrixCat<Rat>::Mor> mors{mor(2, 2, {1, 2, 3, 4}), mor(1, 2, {5, 6}),
                                          mor(2, 1, {7, 8})};
    if (!compare_reconstruction(c, rec, {1, 2}, mors).empty()) ok = false;
    std::vector<NerveObj<MatrixCat<Rat>>> view{nerve_obj1(c, 1), nerve_obj1(c, 2)};
    std::vector<NerveMor<MatrixCat<Rat>>> nm;
    for (const auto& f : mors) nm.push_back(nerve_mor1(c, f));
    if (!coherence_report(rec, view, nm).ok()) ok = false;
    ++checks;
  }
  for (const FinCMonoid& e : {cmonoid_trivial(), cmonoid_cyclic(2), cmonoid_cyclic(3),
                              cmonoid_truncated_add()}) {
    auto t = smc_from_cmonoid(e);
    auto rec = monoidal_from_gamma(nerve_backend(t));
    std::vector<int> objs, mors;
    for (int x = 0; x < e.n; ++x) {
      objs.push_back(x);
      mors.push_back(t.id(x));
    }
    if (!compare_reconstruction(t, rec, objs, mors).empty()) ok = false;
    for (int a = 0; a < e.n; ++a)
      for (int b = 0; b < e.n; ++b)
        if (!(rec.tensor_obj(nerve_obj1(t, a), nerve_obj1(t, b)) ==
              nerve_obj1(t, e.mul(a, b))))
          ok = false;
    std::vector<NerveObj<TableSMC>> view;
    std::vector<NerveMor<TableSMC>> nm;
    for (int x : objs) view.push_back(nerve_obj1(t, x));
    for (int f : mors) nm.push_back(nerve_mor1(t, f));
    if (!coherence_report(rec, view, nm).ok()) ok = false;
    ++checks;
  }
  return {5, "monoidal reconstruction", ok, plural(checks, "categories rebuilt")};
}

// 6. Every strict diagram over delta1 with fibers of at most 2 objects and 4
// morphisms integrates to a fibered category whose fibers recover the inputs
// and whose cartesian sections evaluate back to the fibers.
CriterionResult crit6() {
  auto cats = small_categories(2, 4);
  FinCat d1 = fincat_delta1();
  long long diagrams = 0;
  bool ok = cats.size() == 66;
  for (const auto& a : cats)
    for (const auto& b : cats)
      for (const auto& f : all_functors(a, b)) {
        CatDiagram d;
        d.base = d1;
        d.fiber = {a, b};
        d.arrow = {identity_functor(a), identity_functor(b), f};
        if (!check_diagram(d).empty()) {
          ok = false;
          continue;
        }
        FiberedCat p = integrate(d);
        if (!check_fibered(p).empty()) ok = false;
        for (int i = 0; i < 2 && ok; ++i) {
          Fiber fb = fiber_of(p, i);
          FinFunctor e;
          e.omap.assign(d.fiber[i].n_obj, -1);
          e.mmap.assign(d.fiber[i].n_mor(), -1);
          for (size_t k = 0; k < fb.objs.size(); ++k)
            e.omap[p.obj_fiber[fb.objs[k]]] = static_cast<int>(k);
          for (size_t k = 0; k < fb.mors.size(); ++k)
            e.mmap[p.fiber_comp[fb.mors[k]]] = static_cast<int>(k);
          if (!check_functor(d.fiber[i], fb.cat, e).empty()) ok = false;
          else if (!is_equivalence(d.fiber[i], fb.cat, e).ok) ok = false;
        }
        if (!cartesian_sections_roundtrip(d).ok) ok = false;
        ++diagrams;
      }
  return {6, "Grothendieck roundtrip", ok && diagrams == 16539, plural(diagrams, "diagrams")};
}

// 7. b^2 = B^2 = bB + Bb = 0 exactly, full and normalized, degree bound 5.
CriterionResult crit7() {
  bool ok = true;
  int complexes = 0;
  auto run = [&](const auto& a) {
    if (!check_mixed_identities(mixed_complex(a, 5)).empty()) ok = false;
    if (!check_mixed_identities(normalized_complex(a, 5)).empty()) ok = false;
    complexes += 2;
  };
  run(algebra_field(Rat(0)));
  run(algebra_pair(Rat(0)));
  run(algebra_dual_numbers(Rat(0)));
  run(algebra_dual_numbers(Fp(0, 3)));
  return {7, "mixed complex identities", ok, plural(complexes, "complexes checked to degree 5")};
}

// 8. Full bar complex and normalized complex give identical Hochschild
// dimensions in degrees 0..3.
CriterionResult crit8() {
  bool ok = true;
  long long degrees = 0;
  auto run = [&](const auto& a) {
    auto full = mixed_complex(a, 5);
    auto norm = normalized_complex(a, 5);
    for (int n = 0; n <= 3; ++n) {
      ++degrees;
      if (hochschild_homology(full, n).dim != hochschild_homology(norm, n).dim) ok = false;
    }
  };
  run(algebra_field(Rat(0)));
  run(algebra_pair(Rat(0)));
  run(algebra_dual_numbers(Rat(0)));
  run(algebra_dual_numbers(Fp(0, 3)));
  return {8, "two-route Hochschild agreement", ok, plural(degrees, "degree comparisons")};
}

// 9. chern_character lifts every test idempotent to u-order 2, c_0 is the
// entrywise matrix trace, and conjugation moves c_0 by an exact b-boundary.
CriterionResult crit9() {
  bool ok = true;
  int lifts = 0;
  auto lift_ok = [&](const auto& m, const auto& e) {
    auto cyc = chern_character(m, e, 2);
    if (!check_cycle(m, cyc).empty()) ok = false;
    if (!(cyc.comp[0] == amat_trace(m.algebra, e))) ok = false;
    ++lifts;
  };
  auto aq = algebra_field(Rat(0));
  auto mq = mixed_complex(aq, 6);
  lift_ok(mq, amat_identity(aq, 1));
  AlgMatrix<Rat> diag = amat_zero(aq, 2);
  diag.at(0, 0) = aq.unit;
  lift_ok(mq, diag);
  // diag conjugated by [[1,1],[0,1]]
  AlgMatrix<Rat> conj = amat_zero(aq, 2);
  conj.at(0, 0) = {Rat(1)};
  conj.at(0, 1) = {Rat(-1)};
  lift_ok(mq, conj);
  auto pair = algebra_pair(Rat(0));
  auto mp = mixed_complex(pair, 6);
  AlgMatrix<Rat> e10 = amat_zero(pair, 1);
  e10.at(0, 0) = {Rat(1), Rat(0)};
  lift_ok(mp, e10);
  // conjugation difference of degree-0 traces is an exact boundary
  std::vector<Rat> diff = amat_trace(aq, conj);
  Rat dtr = amat_trace(aq, diag)[0];
  diff[0] = diff[0] - dtr;
  if (!solve(mq.b[1], diff, Rat(0))) ok = false;
  return {9, "Chern lift", ok, plural(lifts, "idempotents lifted to u-order 2")};
}

// 10. evaluate(bord_trace(g)) equals the character for every rational
// irreducible of Z/2 and Z/3, and the abstract categorical trace of the
// g-labeled strand is the g-labeled circle.
CriterionResult crit10() {
  bool ok = true;
  long long checks = 0;
  auto run = [&](const FinGroup& grp, const GroupRep<Rat>& rep) {
    for (int g = 0; g < grp.n; ++g) {
      ++checks;
      auto ev = evaluate(grp, rep, bord_trace(grp, g), Rat(0));
      if (!(ev.rows == 1 && ev.cols == 1 && ev.at(0, 0) == mat_trace(rep.rho[g], Rat(0))))
        ok = false;
    }
  };
  FinGroup z2 = group_cyclic(2), z3 = group_cyclic(3);
  run(z2, rep_trivial(z2, Rat(0)));
  run(z2, rep_sign_cyclic2(Rat(0)));
  run(z3, rep_trivial(z3, Rat(0)));
  run(z3, rep_rotation_cyclic3(Rat(0)));
  for (const FinGroup& grp : {z2, z3}) {
    BordCat c{grp, 2, 1};
    auto data = all_duals(c, SignedWord{1});
    if (data.empty()) ok = false;
    for (const auto& d : data)
      for (int g = 0; g < grp.n; ++g) {
        ++checks;
        if (!(trace(c, d, bord_strand(grp, g)) == bord_trace(grp, g))) ok = false;
      }
  }
  return {10, "bordism character agreement", ok, plural(checks, "evaluations compared")};
}

// 11. In the truncated simplex category at N = 3 of each test base, every
// fiber has the one-point chain as terminal object and the projection is
// cofibered.
CriterionResult crit11() {
  bool ok = true;
  long long fibers = 0;
  for (const FinCat& base : {fincat_terminal(), fincat_delta1(), fincat_delta2(),
                             fincat_pair_groupoid_z2()}) {
    SimplexCat s = category_of_simplices(base, 3);
    for (int i = 0; i < base.n_obj; ++i) {
      ++fibers;
      SimplexFiberReport r = fiber_report(s, i);
      if (!(r.cofibered && r.has_terminal && r.witness_is_point)) ok = false;
    }
  }
  return {11, "simplex fiber witnesses", ok, plural(fibers, "fibers certified")};
}

}  // namespace

CriterionResult run_criterion(int k) {
  switch (k) {
    case 1: return crit1();
    case 2: return crit2();
    case 3: return crit3();
    case 4: return crit4();
    case 5: return crit5();
    case 6: return crit6();
    case 7: return crit7();
    case 8: return crit8();
    case 9: return crit9();
    case 10: return crit10();
    case 11: return crit11();
    default: throw std::invalid_argument("run_criterion: criterion number out of range");
  }
}

std::vector<CriterionResult> run_acceptance() {
  auto start = std::chrono::steady_clock::now();
  std::vector<CriterionResult> out;
  for (int k = 1; k <= 11; ++k) out.push_back(run_criterion(k));
  auto elapsed = std::chrono::steady_clock::now() - start;
  bool in_budget = elapsed < std::chrono::seconds(120);
  out.push_back({12, "selftest budget", in_budget,
                 in_budget ? "all criteria completed within the 120 second budget"
                           : "time budget of 120 seconds exceeded"});
  return out;
}

}  // namespace rigidtrace
