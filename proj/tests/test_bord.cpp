#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rigidtrace/bord.hpp"
#include "rigidtrace/smc.hpp"

using namespace rigidtrace;

namespace {

Rat scalar(const FinGroup& grp, const GroupRep<Rat>& rep, const Bordism& b) {
  Matrix<Rat> m = evaluate(grp, rep, b, Rat(1));
  REQUIRE(m.rows == 1);
  REQUIRE(m.cols == 1);
  return m.at(0, 0);
}

// evaluate(g after f) = evaluate(g) * evaluate(f), exhaustive at small size
void functoriality_sweep(const FinGroup& grp, const std::vector<GroupRep<Rat>>& reps) {
  BordCat c{grp, 3, 2};
  std::vector<SignedWord> words = c.objects();
  long long pairs = 0;
  for (const SignedWord& v : words) {
    for (const SignedWord& u : words) {
      if (u.size() + v.size() > 3) continue;
      std::vector<Bordism> fs = c.hom(u, v);
      if (fs.empty()) continue;
      for (const SignedWord& w : words) {
        if (v.size() + w.size() > 3) continue;
        std::vector<Bordism> gs = c.hom(v, w);
        if (gs.empty()) continue;
        for (const GroupRep<Rat>& rep : reps) {
          std::vector<Matrix<Rat>> ef, eg;
          for (const Bordism& f : fs) ef.push_back(evaluate(grp, rep, f, Rat(1)));
          for (const Bordism& g : gs) eg.push_back(evaluate(grp, rep, g, Rat(1)));
          for (size_t i = 0; i < fs.size(); ++i)
            for (size_t j = 0; j < gs.size(); ++j) {
              Bordism gf = c.compose(gs[j], fs[i]);
              REQUIRE(evaluate(grp, rep, gf, Rat(1)) == eg[j] * ef[i]);
              ++pairs;
            }
        }
      }
    }
  }
  CHECK(pairs > 0);
}

}  // namespace

TEST_CASE("group tables") {
  for (const FinGroup& g : {group_trivial(), group_cyclic(2), group_cyclic(3), group_sym3()}) {
    CHECK(check_group(g).empty());
    for (int a = 0; a < g.n; ++a) CHECK(g.op(a, g.inv(a)) == g.unit);
  }
  FinGroup s3 = group_sym3();
  CHECK(s3.op(1, 3) != s3.op(3, 1));
  CHECK(s3.class_rep(2) == 1);
  CHECK(s3.class_rep(4) == 3);
  CHECK(s3.class_rep(5) == 3);
  CHECK(s3.class_reps() == std::vector<int>{0, 1, 3});
  CHECK(group_cyclic(3).class_reps() == std::vector<int>{0, 1, 2});

  FinGroup broken = group_cyclic(3);
  broken.mul[4] = 0;  // 1*1 = 0 kills associativity
  CHECK(!check_group(broken).empty());
  CHECK_THROWS_AS(group_cyclic(0), std::invalid_argument);
}

TEST_CASE("bordism validation") {
  FinGroup g2 = group_cyclic(2);
  BordCat c{g2, 2, 0};
  CHECK(check_bordism(g2, c.id({1, -1})).empty());
  CHECK(check_bordism(g2, bord_strand(g2, 1)).empty());
  CHECK(check_bordism(g2, bord_trace(g2, 1)).empty());

  Bordism cup{{}, {-1, 1}, {BordArc{0, 1, 0}}, {}};
  Bordism cap{{1, -1}, {}, {BordArc{0, 1, 0}}, {}};
  CHECK(check_bordism(g2, cup).empty());
  CHECK(check_bordism(g2, cap).empty());

  // a through strand must keep its sign: + to - has two entering ends
  Bordism bad{{1}, {-1}, {BordArc{0, 1, 0}}, {}};
  auto viol = check_bordism(g2, bad);
  REQUIRE(!viol.empty());
  CHECK(viol[0].find("entering") != std::string::npos);

  Bordism dup{{1, -1}, {1, -1}, {BordArc{0, 2, 0}, BordArc{0, 2, 0}}, {}};
  CHECK(!check_bordism(g2, dup).empty());

  FinGroup s3 = group_sym3();
  Bordism badcirc{{}, {}, {}, {4}};  // 4 is conjugate to 3, not a class name
  viol = check_bordism(s3, badcirc);
  REQUIRE(!viol.empty());
  CHECK(viol[0].find("representative") != std::string::npos);

  CHECK_THROWS_AS(bord_strand(g2, 5), std::invalid_argument);
}

TEST_CASE("gluing: identities, zigzag, strands") {
  FinGroup s3 = group_sym3();
  BordCat c{s3, 2, 0};
  Bordism idp = c.id({1});
  CHECK(c.compose(idp, idp) == idp);

  Bordism cup{{}, {-1, 1}, {BordArc{0, 1, 0}}, {}};
  Bordism cap{{1, -1}, {}, {BordArc{0, 1, 0}}, {}};
  Bordism zig = c.compose(c.tensor_mor(cap, idp), c.tensor_mor(idp, cup));
  CHECK(zig == idp);
  Bordism idm = c.id({-1});
  Bordism zag = c.compose(c.tensor_mor(idm, cap), c.tensor_mor(cup, idm));
  CHECK(zag == idm);

  // strands compose like the group, read upward
  for (int g = 0; g < s3.n; ++g)
    for (int h = 0; h < s3.n; ++h)
      CHECK(c.compose(bord_strand(s3, h), bord_strand(s3, g)) ==
            bord_strand(s3, s3.op(h, g)));

  CHECK_THROWS_AS(c.compose(cup, cup), std::invalid_argument);
}

TEST_CASE("closed loops become labeled circles") {
  FinGroup s3 = group_sym3();
  BordCat c{s3, 2, 0};
  Bordism cup{{}, {-1, 1}, {BordArc{0, 1, 0}}, {}};
  Bordism cap{{1, -1}, {}, {BordArc{0, 1, 0}}, {}};
  DualityDatum<BordCat> datum{{1}, {-1}, cap, cup};
  REQUIRE(validate_duality(c, datum));

  // two half loops with labels g then h close into one circle labeled [hg]
  for (int g = 0; g < s3.n; ++g)
    for (int h = 0; h < s3.n; ++h) {
      Bordism two = c.compose(bord_strand(s3, h), bord_strand(s3, g));
      Bordism tr = trace(c, datum, two);
      CHECK(tr == bord_trace(s3, s3.op(h, g)));
      // cyclicity as conjugacy classes, nontrivially: hg != gh in general
      CHECK(tr == trace(c, datum, c.compose(bord_strand(s3, g), bord_strand(s3, h))));
    }

  // the abstract trace and the direct construction agree elementwise
  for (const FinGroup& grp : {group_trivial(), group_cyclic(2), group_cyclic(3)}) {
    BordCat cc{grp, 2, 0};
    auto found = find_dual(cc, SignedWord{1});
    REQUIRE(found.status == SearchStatus::Found);
    CHECK(found.datum->dual == SignedWord{-1});
    for (int g = 0; g < grp.n; ++g)
      CHECK(trace(cc, *found.datum, bord_strand(grp, g)) == bord_trace(grp, g));
  }
}

TEST_CASE("plus and minus are mutual duals and nothing else shows up") {
  FinGroup g2 = group_cyclic(2);
  BordCat c{g2, 3, 0};
  auto rp = find_dual(c, SignedWord{1});
  REQUIRE(rp.status == SearchStatus::Found);
  CHECK(rp.datum->dual == SignedWord{-1});
  auto rm = find_dual(c, SignedWord{-1});
  REQUIRE(rm.status == SearchStatus::Found);
  CHECK(rm.datum->dual == SignedWord{1});

  // every datum pairs a cap label with its inverse cup label; the trace does
  // not depend on which one is used
  auto data = all_duals(c, SignedWord{1});
  CHECK(data.size() == 2);
  for (const auto& d : data) {
    CHECK(d.dual == SignedWord{-1});
    for (int g = 0; g < g2.n; ++g)
      CHECK(trace(c, d, bord_strand(g2, g)) == bord_trace(g2, g));
  }

  // the unit has itself as dual; an empty-boundary search stays cheap
  auto ru = find_dual(c, SignedWord{});
  REQUIRE(ru.status == SearchStatus::Found);
  CHECK(ru.datum->dual == SignedWord{});
}

TEST_CASE("smc axioms on the truncated view") {
  FinGroup g2 = group_cyclic(2);
  BordCat c{g2, 2, 0};
  std::vector<SignedWord> objs = c.objects();
  CHECK(objs.size() == 7);
  Bordism cup{{}, {-1, 1}, {BordArc{0, 1, 1}}, {}};
  Bordism cap{{1, -1}, {}, {BordArc{0, 1, 1}}, {}};
  std::vector<Bordism> sample = {c.id({}),          c.id({1}),        bord_strand(g2, 1),
                                 cup,               cap,              c.sym({1}, {-1}),
                                 bord_trace(g2, 1), c.sym({1, 1}, {-1})};
  CHECK(validate_smc(c, objs, sample).empty());
}

TEST_CASE("hom enumeration") {
  FinGroup g2 = group_cyclic(2);
  BordCat c{g2, 2, 0};
  CHECK(c.hom(SignedWord{1}, SignedWord{1}).size() == 2);
  CHECK(c.hom(SignedWord{1}, SignedWord{-1}).empty());
  CHECK(c.hom(SignedWord{1}, SignedWord{}).empty());  // odd slot count
  CHECK(c.hom(SignedWord{1, -1}, SignedWord{}).size() == 2);

  BordCat c1{g2, 2, 1};
  CHECK(c1.hom_size(SignedWord{}, SignedWord{}) == 3);  // no circle, [0], [1]
  CHECK(c1.hom_size(SignedWord{1}, SignedWord{1}) == 6);

  // counts match the lists and every listed morphism is valid
  std::vector<SignedWord> objs = c1.objects();
  for (const SignedWord& a : objs)
    for (const SignedWord& b : objs) {
      std::vector<Bordism> h = c1.hom(a, b);
      CHECK(static_cast<long long>(h.size()) == c1.hom_size(a, b));
      for (const Bordism& m : h) CHECK(check_bordism(g2, m).empty());
    }
}

TEST_CASE("representations and their expansion") {
  Rat one(1);
  FinGroup t = group_trivial();
  FinGroup g2 = group_cyclic(2);
  FinGroup g3 = group_cyclic(3);
  FinGroup s3 = group_sym3();
  CHECK(check_rep(t, rep_trivial(t, one), one).empty());
  CHECK(check_rep(g2, rep_sign_cyclic2(one), one).empty());
  CHECK(check_rep(g3, rep_rotation_cyclic3(one), one).empty());
  CHECK(check_rep(s3, rep_sign_sym3(one), one).empty());
  CHECK(check_rep(s3, rep_std_sym3(one), one).empty());

  CHECK(rep_character(rep_rotation_cyclic3(one), one) ==
        std::vector<Rat>{Rat(2), Rat(-1), Rat(-1)});
  CHECK(rep_character(rep_std_sym3(one), one) ==
        std::vector<Rat>{Rat(2), Rat(-1), Rat(-1), Rat(0), Rat(0), Rat(0)});

  GroupRep<Rat> bad = rep_sign_cyclic2(one);
  bad.rho[1].at(0, 0) = Rat(2);
  CHECK(!check_rep(g2, bad, one).empty());

  auto grown = expand_rep(g3, {{1, rotation_order3(one)}}, one);
  CHECK(grown.rho == rep_rotation_cyclic3(one).rho);
  Matrix<Rat> s = mat_zero(2, 2, one);
  s.at(0, 1) = one;
  s.at(1, 0) = one;
  auto grown3 = expand_rep(s3, {{1, rotation_order3(one)}, {3, s}}, one);
  CHECK(grown3.rho == rep_std_sym3(one).rho);
  CHECK_THROWS_AS(expand_rep(g2, {}, one), std::invalid_argument);
}

TEST_CASE("characters come out of circles") {
  Rat one(1);
  FinGroup t = group_trivial();
  FinGroup g2 = group_cyclic(2);
  FinGroup g3 = group_cyclic(3);
  FinGroup s3 = group_sym3();

  // the trivial character is 1 at every element of every group
  for (const FinGroup* grp : {&t, &g2, &g3, &s3}) {
    GroupRep<Rat> triv = rep_trivial(*grp, one);
    for (int g = 0; g < grp->n; ++g)
      CHECK(scalar(*grp, triv, bord_trace(*grp, g)) == Rat(1));
  }

  CHECK(scalar(g2, rep_sign_cyclic2(one), bord_trace(g2, 1)) == Rat(-1));
  CHECK(scalar(g3, rep_rotation_cyclic3(one), bord_trace(g3, 1)) == Rat(-1));
  CHECK(scalar(g3, rep_rotation_cyclic3(one), bord_trace(g3, 0)) == Rat(2));

  // chi(g) = tr rho(g) for every element, including conjugates of the
  // class representative the circle actually stores
  for (const GroupRep<Rat>& rep : {rep_sign_sym3(one), rep_std_sym3(one)}) {
    std::vector<Rat> chi = rep_character(rep, one);
    for (int g = 0; g < s3.n; ++g) CHECK(scalar(s3, rep, bord_trace(s3, g)) == chi[g]);
  }

  GroupRep<Rat> broken = rep_sign_cyclic2(one);
  broken.rho[1].at(0, 0) = Rat(2);
  CHECK_THROWS_AS(evaluate(g2, broken, bord_trace(g2, 1), one), std::invalid_argument);
}

TEST_CASE("evaluation is a strict monoidal functor") {
  Rat one(1);
  FinGroup t = group_trivial();
  FinGroup g2 = group_cyclic(2);
  FinGroup g3 = group_cyclic(3);

  SUBCASE("functoriality, exhaustive to three boundary points and two circles") {
    functoriality_sweep(t, {rep_trivial(t, one)});
    functoriality_sweep(g2, {rep_trivial(g2, one), rep_sign_cyclic2(one)});
    functoriality_sweep(g3, {rep_trivial(g3, one), rep_rotation_cyclic3(one)});
  }

  SUBCASE("monoidality on all pairs with two boundary points") {
    BordCat c{g2, 2, 1};
    std::vector<SignedWord> words = c.objects();
    std::vector<Bordism> all;
    for (const SignedWord& u : words)
      for (const SignedWord& v : words) {
        if (u.size() + v.size() > 2) continue;
        std::vector<Bordism> h = c.hom(u, v);
        all.insert(all.end(), h.begin(), h.end());
      }
    GroupRep<Rat> rep = rep_sign_cyclic2(one);
    for (const Bordism& f : all)
      for (const Bordism& g : all) {
        Matrix<Rat> lhs = evaluate(g2, rep, c.tensor_mor(f, g), one);
        Matrix<Rat> rhs = kron(evaluate(g2, rep, f, one), evaluate(g2, rep, g, one));
        REQUIRE(lhs == rhs);
      }
    CHECK(all.size() > 20);
  }

  SUBCASE("identity bordisms evaluate to identity matrices") {
    GroupRep<Rat> rep = rep_rotation_cyclic3(one);
    BordCat c{g3, 2, 0};
    CHECK(evaluate(g3, rep, c.id({1, -1}), one) == mat_identity(4, one));
    CHECK(evaluate(g3, rep, c.id({}), one) == mat_identity(1, one));
  }
}
