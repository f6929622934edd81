#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "rigidtrace/fincat.hpp"
#include "rigidtrace/gamma.hpp"
#include "rigidtrace/gamma_cat.hpp"
#include "rigidtrace/monoidal_nerve.hpp"

// Rebuilds the symmetric monoidal structure carried by levelwise nerve data.
// Quasi-inverse sections of the combined level maps give the tensor, the
// twist transport gives the symmetry, and comparison isomorphisms between
// bracketings give the associator. Everything is generic over a backend:
//
//   LObj, LMor          equality-comparable; level-1 values drive the API
//   Section             { LObj obj; vector<LMor> counit; } where counit[i]
//                       maps push_obj(s_{i+1}, obj) to the i-th tuple entry
//   push_obj, push_mor  strictly functorial transport along pointed maps
//   compose, id, inv, src, tgt
//   section(tuple)      a section of the combined map over level-1 objects,
//                       with invertible counits
//   lift(a, b, comps)   the unique F: a.obj -> b.obj whose transport along
//                       every s_i equals inv(b.counit[i]) o comps[i] o
//                       a.counit[i]; throws when missing or ambiguous

namespace rigidtrace {

// Bracketing of a tuple; leaves are consecutive positions left to right.
struct BTree;
using BTreeP = std::shared_ptr<const BTree>;
struct BTree {
  BTreeP l, r;  // both null at a leaf
  bool is_leaf() const { return l == nullptr; }
};

inline BTreeP bleaf() { return std::make_shared<BTree>(); }

inline BTreeP bnode(BTreeP a, BTreeP b) {
  auto t = std::make_shared<BTree>();
  t->l = std::move(a);
  t->r = std::move(b);
  return t;
}

inline int btree_size(const BTreeP& t) {
  return t->is_leaf() ? 1 : btree_size(t->l) + btree_size(t->r);
}

// Thrown when a section or unique lift fails to exist: the levelwise data
// does not satisfy the Segal condition at the recorded level.
struct NotSpecialError : std::runtime_error {
  int level;
  NotSpecialError(int lv, const std::string& msg)
      : std::runtime_error(msg + " (level " + std::to_string(lv) + ")"), level(lv) {}
};

// Backend over the lazily enumerated nerve of a strict SMC. Sections are the
// canonical sorted-tensor families, so every counit is an identity and the
// lift reduces to the componentwise formula.
template <typename C>
struct NerveBackend {
  C c;

  using LObj = NerveObj<C>;
  using LMor = NerveMor<C>;
  struct Section {
    LObj obj;
    std::vector<LMor> counit;
  };

  LObj push_obj(const GammaMap& u, const LObj& x) const { return nerve_push_obj(c, u, x); }
  LMor push_mor(const GammaMap& u, const LMor& f) const { return nerve_push_mor(c, u, f); }
  LMor compose(const LMor& g, const LMor& f) const { return nerve_compose(c, g, f); }
  LMor id(const LObj& x) const { return nerve_id(c, x); }
  LMor inv(const LMor& f) const { return nerve_inv(c, f); }
  LObj src(const LMor& f) const { return f.a; }
  LObj tgt(const LMor& f) const { return f.b; }

  Section section(const std::vector<LObj>& xs) const {
    std::vector<typename C::Obj> ts;
    for (const auto& x : xs) ts.push_back(x.x.at(0));
    Section s;
    s.obj = nerve_section_obj(c, ts);
    for (const auto& x : xs) s.counit.push_back(nerve_id(c, x));
    return s;
  }

  LMor lift(const Section& a, const Section& b, const std::vector<LMor>& comps) const {
    int n = a.obj.n;
    std::vector<typename C::Mor> gs;
    for (int i = 0; i < n; ++i) {
      LMor t = compose(inv(b.counit[i]), compose(comps[i], a.counit[i]));
      gs.push_back(t.g.at(0));
    }
    return nerve_lift(c, a.obj, b.obj, gs);
  }
};

template <typename C>
NerveBackend<C> nerve_backend(C c) {
  return NerveBackend<C>{std::move(c)};
}

// Object and morphism handles into a fixed level of a FinGammaCat.
struct GcObj {
  int level = 0;
  int id = 0;
  friend bool operator==(const GcObj& a, const GcObj& b) {
    return a.level == b.level && a.id == b.id;
  }
};

struct GcMor {
  int level = 0;
  int id = 0;
  friend bool operator==(const GcMor& a, const GcMor& b) {
    return a.level == b.level && a.id == b.id;
  }
};

// Backend over materialized levelwise data. Sections are found by scanning:
// an object whose combined transport hits the tuple on the nose wins (counit
// identity), otherwise the lowest object id admitting componentwise
// isomorphisms, each chosen with the lowest morphism id. Lifts scan the hom
// set for the unique transport-matching morphism. Either search failing
// means the data is not special; NotSpecialError records the level.
struct FinGammaBackend {
  FinGammaCat g;
  std::shared_ptr<std::map<std::vector<int>, FinFunctor>> cache =
      std::make_shared<std::map<std::vector<int>, FinFunctor>>();

  using LObj = GcObj;
  using LMor = GcMor;
  struct Section {
    LObj obj;
    std::vector<LMor> counit;
  };

  const FinFunctor& transport(const GammaMap& u) const {
    std::vector<int> key{u.n, u.m};
    key.insert(key.end(), u.f.begin(), u.f.end());
    auto it = cache->find(key);
    if (it == cache->end()) it = cache->emplace(key, g.act(u)).first;
    return it->second;
  }

  LObj push_obj(const GammaMap& u, const LObj& x) const {
    if (x.level != u.n) throw std::invalid_argument("push_obj: level mismatch");
    return LObj{u.m, transport(u).omap.at(x.id)};
  }

  LMor push_mor(const GammaMap& u, const LMor& f) const {
    if (f.level != u.n) throw std::invalid_argument("push_mor: level mismatch");
    return LMor{u.m, transport(u).mmap.at(f.id)};
  }

  LMor compose(const LMor& h, const LMor& f) const {
    if (h.level != f.level) throw std::invalid_argument("compose: level mismatch");
    int r = g.level[h.level].compose(h.id, f.id);
    if (r < 0) throw std::invalid_argument("compose: endpoint mismatch");
    return LMor{h.level, r};
  }

  LMor id(const LObj& x) const { return LMor{x.level, g.level[x.level].id(x.id)}; }

  LMor inv(const LMor& f) const {
    auto r = mor_inverse(g.level[f.level], f.id);
    if (!r) throw std::invalid_argument("inv: morphism not invertible");
    return LMor{f.level, *r};
  }

  LObj src(const LMor& f) const { return LObj{f.level, g.level[f.level].src(f.id)}; }
  LObj tgt(const LMor& f) const { return LObj{f.level, g.level[f.level].tgt(f.id)}; }

  Section section(const std::vector<LObj>& xs) const {
    int n = static_cast<int>(xs.size());
    const FinCat& lv = g.level.at(n);
    const FinCat& l1 = g.level.at(1);
    std::vector<const FinFunctor*> si;
    for (int i = 1; i <= n; ++i) si.push_back(&transport(segal_map(n, i)));
    for (int X = 0; X < lv.n_obj; ++X) {
      bool nose = true;
      for (int i = 0; i < n && nose; ++i) nose = si[i]->omap[X] == xs[i].id;
      if (!nose) continue;
      Section s;
      s.obj = LObj{n, X};
      for (int i = 0; i < n; ++i) s.counit.push_back(id(xs[i]));
      return s;
    }
    for (int X = 0; X < lv.n_obj; ++X) {
      Section s;
      s.obj = LObj{n, X};
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) {
        ok = false;
        for (int f : l1.hom(si[i]->omap[X], xs[i].id))
          if (mor_inverse(l1, f)) {
            s.counit.push_back(LMor{1, f});
            ok = true;
            break;
          }
      }
      if (ok) return s;
    }
    throw NotSpecialError(n, "no preimage of the tuple under the combined level map");
  }

  LMor lift(const Section& a, const Section& b, const std::vector<LMor>& comps) const {
    int n = a.obj.level;
    const FinCat& lv = g.level.at(n);
    std::vector<int> want;
    for (int i = 0; i < n; ++i)
      want.push_back(compose(inv(b.counit[i]), compose(comps[i], a.counit[i])).id);
    std::vector<const FinFunctor*> si;
    for (int i = 1; i <= n; ++i) si.push_back(&transport(segal_map(n, i)));
    int found = -1;
    for (int f : lv.hom(a.obj.id, b.obj.id)) {
      bool match = true;
      for (int i = 0; i < n && match; ++i) match = si[i]->mmap[f] == want[i];
      if (!match) continue;
      if (found >= 0)
        throw NotSpecialError(n, "lift ambiguous: combined level map not faithful");
      found = f;
    }
    if (found < 0) throw NotSpecialError(n, "lift missing: combined level map not full");
    return LMor{n, found};
  }
};

// The rebuilt structure. All operations take and return level-1 handles.
template <typename B>
struct Reconstructed {
  B b;

  using LObj = typename B::LObj;
  using LMor = typename B::LMor;
  using Sec = typename B::Section;

  LObj unit() const { return b.push_obj(gamma_fold(0), b.section({}).obj); }

  LObj tensor_obj(const LObj& x, const LObj& y) const {
    return b.push_obj(gamma_fold(2), b.section({x, y}).obj);
  }

  LMor tensor_mor(const LMor& f, const LMor& g) const {
    Sec a = b.section({b.src(f), b.src(g)});
    Sec c = b.section({b.tgt(f), b.tgt(g)});
    return b.push_mor(gamma_fold(2), b.lift(a, c, {f, g}));
  }

  LMor sym(const LObj& x, const LObj& y) const {
    Sec d = b.section({x, y});
    Sec dt;
    dt.obj = b.push_obj(gamma_twist(), d.obj);
    dt.counit = {d.counit[1], d.counit[0]};
    Sec e = b.section({y, x});
    return b.push_mor(gamma_fold(2), b.lift(dt, e, {b.id(y), b.id(x)}));
  }

  LObj tree_obj(const BTreeP& t, const std::vector<LObj>& xs, int lo) const {
    if (t->is_leaf()) return xs[lo];
    return tensor_obj(tree_obj(t->l, xs, lo),
                      tree_obj(t->r, xs, lo + btree_size(t->l)));
  }

  // Comparison iso push(fold, s.obj) -> tree_obj(t), natural in the section.
  // Recursive: restrict the section to the two leaf blocks, compare each,
  // then lift the pair against the canonical section of the two halves.
  LMor theta(const BTreeP& t, const Sec& s, const std::vector<LObj>& xs, int lo) const {
    int k = btree_size(t);
    if (k == 1) return s.counit[0];
    int j = btree_size(t->l);
    Sec s1;
    s1.obj = b.push_obj(gamma_first(k, j), s.obj);
    s1.counit.assign(s.counit.begin(), s.counit.begin() + j);
    Sec s2;
    s2.obj = b.push_obj(gamma_rest(k, j), s.obj);
    s2.counit.assign(s.counit.begin() + j, s.counit.end());
    LMor th1 = theta(t->l, s1, xs, lo);
    LMor th2 = theta(t->r, s2, xs, lo + j);
    LObj o1 = tree_obj(t->l, xs, lo);
    LObj o2 = tree_obj(t->r, xs, lo + j);
    Sec pair;
    pair.obj = b.push_obj(gamma_split(k, j), s.obj);
    pair.counit = {th1, th2};
    return b.push_mor(gamma_fold(2), b.lift(pair, b.section({o1, o2}), {b.id(o1), b.id(o2)}));
  }

  // (x (x) y) (x) z -> x (x) (y (x) z), via the two comparisons out of the
  // canonical triple section.
  LMor assoc(const LObj& x, const LObj& y, const LObj& z) const {
    std::vector<LObj> xs{x, y, z};
    Sec s = b.section(xs);
    BTreeP left = bnode(bnode(bleaf(), bleaf()), bleaf());
    BTreeP right = bnode(bleaf(), bnode(bleaf(), bleaf()));
    return b.compose(theta(right, s, xs, 0), b.inv(theta(left, s, xs, 0)));
  }
};

template <typename B>
Reconstructed<B> monoidal_from_gamma(B backend) {
  return Reconstructed<B>{std::move(backend)};
}

struct CoherenceReport {
  bool pentagon_ok = true;
  bool hexagon_ok = true;
  bool sym_involutive = true;
  bool sym_natural = true;
  bool constraints_identity = true;  // every associator is an identity
  std::string first_failure;

  bool ok() const { return pentagon_ok && hexagon_ok && sym_involutive && sym_natural; }
};

// Pentagon over all quadruples from the view, verified against the level-4
// witness: each of the five bracketing comparisons out of the quadruple
// section must intertwine the corresponding pentagon edge, and the two
// composite paths must agree. Hexagon, symmetry involutivity and symmetry
// naturality are checked directly at levels <= 3.
template <typename B>
CoherenceReport coherence_report(const Reconstructed<B>& rec,
                                 const std::vector<typename B::LObj>& view,
                                 const std::vector<typename B::LMor>& mors) {
  using LMor = typename B::LMor;
  CoherenceReport rep;
  auto fail = [&](bool& flag, const std::string& what) {
    flag = false;
    if (rep.first_failure.empty()) rep.first_failure = what;
  };
  const B& b = rec.b;

  for (const auto& w : view)
    for (const auto& x : view)
      for (const auto& y : view)
        for (const auto& z : view) {
          std::vector<typename B::LObj> xs{w, x, y, z};
          auto s4 = b.section(xs);
          BTreeP v1 = bnode(bnode(bnode(bleaf(), bleaf()), bleaf()), bleaf());
          BTreeP v2 = bnode(bnode(bleaf(), bnode(bleaf(), bleaf())), bleaf());
          BTreeP v3 = bnode(bleaf(), bnode(bnode(bleaf(), bleaf()), bleaf()));
          BTreeP v4 = bnode(bleaf(), bnode(bleaf(), bnode(bleaf(), bleaf())));
          BTreeP v5 = bnode(bnode(bleaf(), bleaf()), bnode(bleaf(), bleaf()));
          LMor t1 = rec.theta(v1, s4, xs, 0);
          LMor t2 = rec.theta(v2, s4, xs, 0);
          LMor t3 = rec.theta(v3, s4, xs, 0);
          LMor t4 = rec.theta(v4, s4, xs, 0);
          LMor t5 = rec.theta(v5, s4, xs, 0);
          LMor e12 = rec.tensor_mor(rec.assoc(w, x, y), b.id(z));
          LMor e23 = rec.assoc(w, rec.tensor_obj(x, y), z);
          LMor e34 = rec.tensor_mor(b.id(w), rec.assoc(x, y, z));
          LMor e15 = rec.assoc(rec.tensor_obj(w, x), y, z);
          LMor e54 = rec.assoc(w, x, rec.tensor_obj(y, z));
          bool edges = b.compose(e12, t1) == t2 && b.compose(e23, t2) == t3 &&
                       b.compose(e34, t3) == t4 && b.compose(e15, t1) == t5 &&
                       b.compose(e54, t5) == t4;
          bool direct = b.compose(e34, b.compose(e23, e12)) == b.compose(e54, e15);
          if (!edges || !direct)
            fail(rep.pentagon_ok, edges ? "pentagon composite mismatch"
                                        : "pentagon witness comparison failed");
        }

  for (const auto& x : view)
    for (const auto& y : view)
      for (const auto& z : view) {
        LMor lhs = b.compose(rec.assoc(y, z, x),
                             b.compose(rec.sym(x, rec.tensor_obj(y, z)), rec.assoc(x, y, z)));
        LMor rhs = b.compose(rec.tensor_mor(b.id(y), rec.sym(x, z)),
                             b.compose(rec.assoc(y, x, z),
                                       rec.tensor_mor(rec.sym(x, y), b.id(z))));
        if (!(lhs == rhs)) fail(rep.hexagon_ok, "hexagon mismatch");
        LMor a = rec.assoc(x, y, z);
        if (!(a == b.id(b.src(a)))) fail(rep.constraints_identity, "associator not identity");
      }

  for (const auto& x : view)
    for (const auto& y : view) {
      LMor s = rec.sym(x, y);
      if (!(b.compose(rec.sym(y, x), s) == b.id(b.src(s))))
        fail(rep.sym_involutive, "symmetry not involutive");
    }

  for (const auto& f : mors)
    for (const auto& g : mors) {
      LMor lhs = b.compose(rec.sym(b.tgt(f), b.tgt(g)), rec.tensor_mor(f, g));
      LMor rhs = b.compose(rec.tensor_mor(g, f), rec.sym(b.src(f), b.src(g)));
      if (!(lhs == rhs)) fail(rep.sym_natural, "symmetry not natural");
    }

  return rep;
}

// For nerve backends the rebuilt structure should agree with the ambient one
// on the nose, so the comparison isomorphism is the identity. Returns the
// mismatches; empty means unit, tensor, symmetry agree exactly and every
// associator is an identity.
template <typename C>
std::vector<std::string> compare_reconstruction(const C& c,
                                                const Reconstructed<NerveBackend<C>>& rec,
                                                const std::vector<typename C::Obj>& objs,
                                                const std::vector<typename C::Mor>& mors) {
  std::vector<std::string> bad;
  if (!(rec.unit() == nerve_obj1(c, c.unit()))) bad.push_back("unit mismatch");
  for (const auto& x : objs)
    for (const auto& y : objs) {
      auto got = rec.tensor_obj(nerve_obj1(c, x), nerve_obj1(c, y));
      if (!(got == nerve_obj1(c, c.tensor_obj(x, y)))) {
        bad.push_back("tensor object mismatch");
        continue;
      }
      auto s = rec.sym(nerve_obj1(c, x), nerve_obj1(c, y));
      if (!(s == nerve_mor1(c, c.sym(x, y)))) bad.push_back("symmetry mismatch");
      for (const auto& z : objs) {
        auto a = rec.assoc(nerve_obj1(c, x), nerve_obj1(c, y), nerve_obj1(c, z));
        if (!(a == nerve_id(c, rec.b.src(a)))) bad.push_back("associator not identity");
      }
    }
  for (const auto& f : mors)
    for (const auto& g : mors) {
      auto got = rec.tensor_mor(nerve_mor1(c, f), nerve_mor1(c, g));
      if (!(got == nerve_mor1(c, c.tensor_mor(f, g)))) bad.push_back("tensor morphism mismatch");
    }
  return bad;
}

}  // namespace rigidtrace
