#pragma once

#include <bit>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rigidtrace/gamma.hpp"

namespace rigidtrace {

// Nonempty subsets of {1..n} are bitmasks 1..2^n-1; bit i-1 encodes element i.

inline std::vector<int> mask_bits(int mask) {
  std::vector<int> out;
  for (int i = 1; mask >> (i - 1); ++i)
    if (mask & (1 << (i - 1))) out.push_back(i);
  return out;
}

// Subset of {1..u.n} mapping into the given subset of {1..u.m}.
inline int mask_preimage(const GammaMap& u, int tmask) {
  int out = 0;
  for (int i = 1; i <= u.n; ++i)
    if (u(i) > 0 && (tmask >> (u(i) - 1)) & 1) out |= 1 << (i - 1);
  return out;
}

template <typename C>
typename C::Obj tensor_list(const C& c, const std::vector<typename C::Obj>& zs) {
  auto acc = c.unit();
  for (const auto& z : zs) acc = c.tensor_obj(acc, z);
  return acc;
}

// Morphism z_0 x...x z_{r-1} -> z_{ord[0]} x...x z_{ord[r-1]} assembled from
// adjacent symmetries in selection-sort order; by symmetric coherence any
// swap order gives the same morphism, this one makes results deterministic.
template <typename C>
typename C::Mor reorder_mor(const C& c, const std::vector<typename C::Obj>& zs,
                            const std::vector<int>& ord) {
  int r = static_cast<int>(zs.size());
  std::vector<int> cur(r);
  for (int i = 0; i < r; ++i) cur[i] = i;
  auto part_obj = [&](int from, int to) {
    std::vector<typename C::Obj> part;
    for (int k = from; k < to; ++k) part.push_back(zs[cur[k]]);
    return tensor_list(c, part);
  };
  auto m = c.id(tensor_list(c, zs));
  for (int j = 0; j < r; ++j) {
    int k = j;
    while (cur[k] != ord[j]) ++k;
    for (; k > j; --k) {
      auto step = c.tensor_mor(
          c.tensor_mor(c.id(part_obj(0, k - 1)), c.sym(zs[cur[k - 1]], zs[cur[k]])),
          c.id(part_obj(k + 1, r)));
      m = c.compose(step, m);
      std::swap(cur[k - 1], cur[k]);
    }
  }
  return m;
}

// Object of the monoidal nerve at level [n]: one object of C per nonempty
// subset of {1..n} (the empty subset is implicitly the unit) plus gluing
// isomorphisms rho_{S,T}: x_S x x_T -> x_{S u T} for disjoint nonempty S, T.
// Transport along a pointed map reindexes everything by preimages, which is
// functorial on the nose; bare tuples with fiberwise tensors would only be
// functorial up to the symmetry (compare a twist followed by a fold).
template <typename C>
struct NerveObj {
  int n = 0;
  std::vector<typename C::Obj> x;                      // index mask-1
  std::map<std::pair<int, int>, typename C::Mor> rho;  // keyed by (smask, tmask)

  friend bool operator==(const NerveObj& a, const NerveObj& b) {
    return a.n == b.n && a.x == b.x && a.rho == b.rho;
  }
};

// Morphism of nerve objects: one component per nonempty subset, compatible
// with the gluing data; the compatibility forces every component from the
// singleton ones.
template <typename C>
struct NerveMor {
  NerveObj<C> a, b;
  std::vector<typename C::Mor> g;  // index mask-1

  friend bool operator==(const NerveMor& x, const NerveMor& y) {
    return x.a == y.a && x.b == y.b && x.g == y.g;
  }
};

template <typename C>
typename C::Obj nerve_obj_at(const C& c, const NerveObj<C>& X, int mask) {
  return mask == 0 ? c.unit() : X.x[mask - 1];
}

template <typename C>
typename C::Mor nerve_rho_at(const C& c, const NerveObj<C>& X, int s, int t) {
  if (s == 0 || t == 0) return c.id(nerve_obj_at(c, X, s | t));
  auto it = X.rho.find({s, t});
  if (it == X.rho.end()) throw std::logic_error("nerve: missing gluing component");
  return it->second;
}

// Canonical object over a tuple of C-objects: x_S is the tensor in increasing
// index order and the gluing data are the sorted-merge symmetries.
template <typename C>
NerveObj<C> nerve_section_obj(const C& c, const std::vector<typename C::Obj>& xs) {
  NerveObj<C> X;
  X.n = static_cast<int>(xs.size());
  int full = (1 << X.n) - 1;
  for (int mask = 1; mask <= full; ++mask) {
    std::vector<typename C::Obj> part;
    for (int i : mask_bits(mask)) part.push_back(xs[i - 1]);
    X.x.push_back(tensor_list(c, part));
  }
  for (int s = 1; s <= full; ++s)
    for (int t = 1; t <= full; ++t) {
      if (s & t) continue;
      auto order = mask_bits(s);
      auto bt = mask_bits(t);
      order.insert(order.end(), bt.begin(), bt.end());
      std::vector<typename C::Obj> zs;
      for (int i : order) zs.push_back(xs[i - 1]);
      std::vector<int> ord;
      for (int v : mask_bits(s | t))
        for (size_t k = 0; k < order.size(); ++k)
          if (order[k] == v) ord.push_back(static_cast<int>(k));
      X.rho[{s, t}] = reorder_mor(c, zs, ord);
    }
  return X;
}

template <typename C>
NerveObj<C> nerve_push_obj(const C& c, const GammaMap& u, const NerveObj<C>& X) {
  if (X.n != u.n) throw std::invalid_argument("nerve_push_obj: level mismatch");
  NerveObj<C> Y;
  Y.n = u.m;
  int full = (1 << u.m) - 1;
  for (int tm = 1; tm <= full; ++tm) Y.x.push_back(nerve_obj_at(c, X, mask_preimage(u, tm)));
  for (int s = 1; s <= full; ++s)
    for (int t = 1; t <= full; ++t) {
      if (s & t) continue;
      Y.rho[{s, t}] = nerve_rho_at(c, X, mask_preimage(u, s), mask_preimage(u, t));
    }
  return Y;
}

template <typename C>
NerveMor<C> nerve_push_mor(const C& c, const GammaMap& u, const NerveMor<C>& F) {
  NerveMor<C> G;
  G.a = nerve_push_obj(c, u, F.a);
  G.b = nerve_push_obj(c, u, F.b);
  int full = (1 << u.m) - 1;
  for (int tm = 1; tm <= full; ++tm) {
    int pm = mask_preimage(u, tm);
    G.g.push_back(pm == 0 ? c.id(c.unit()) : F.g[pm - 1]);
  }
  return G;
}

template <typename C>
NerveMor<C> nerve_id(const C& c, const NerveObj<C>& X) {
  NerveMor<C> F;
  F.a = X;
  F.b = X;
  for (const auto& xs : X.x) F.g.push_back(c.id(xs));
  return F;
}

template <typename C>
NerveMor<C> nerve_compose(const C& c, const NerveMor<C>& G, const NerveMor<C>& F) {
  if (!(F.b == G.a)) throw std::invalid_argument("nerve_compose: endpoint mismatch");
  NerveMor<C> H;
  H.a = F.a;
  H.b = G.b;
  for (size_t k = 0; k < F.g.size(); ++k) H.g.push_back(c.compose(G.g[k], F.g[k]));
  return H;
}

template <typename C>
NerveMor<C> nerve_inv(const C& c, const NerveMor<C>& F) {
  NerveMor<C> R;
  R.a = F.b;
  R.b = F.a;
  for (const auto& m : F.g) R.g.push_back(c.inv(m));
  return R;
}

template <typename C>
NerveObj<C> nerve_obj1(const C&, typename C::Obj x) {
  NerveObj<C> X;
  X.n = 1;
  X.x = {x};
  return X;
}

template <typename C>
NerveMor<C> nerve_mor1(const C& c, const typename C::Mor& f) {
  NerveMor<C> F;
  F.a = nerve_obj1(c, c.src(f));
  F.b = nerve_obj1(c, c.tgt(f));
  F.g = {f};
  return F;
}

// Gluing data validity: endpoints, invertibility, compatibility with the
// symmetry, and the pasting identity over pairwise disjoint triples.
template <typename C>
std::vector<std::string> nerve_check_obj(const C& c, const NerveObj<C>& X) {
  std::vector<std::string> bad;
  int full = (1 << X.n) - 1;
  auto at = [](int s, int t) { return "(" + std::to_string(s) + "," + std::to_string(t) + ")"; };
  if (static_cast<int>(X.x.size()) != full) {
    bad.push_back("component count wrong");
    return bad;
  }
  for (int s = 1; s <= full; ++s)
    for (int t = 1; t <= full; ++t) {
      if (s & t) continue;
      auto it = X.rho.find({s, t});
      if (it == X.rho.end()) {
        bad.push_back("missing gluing at " + at(s, t));
        continue;
      }
      const auto& r = it->second;
      if (!(c.src(r) == c.tensor_obj(X.x[s - 1], X.x[t - 1])) || !(c.tgt(r) == X.x[(s | t) - 1])) {
        bad.push_back("gluing endpoints wrong at " + at(s, t));
        continue;
      }
      if (!c.is_iso(r)) bad.push_back("gluing not invertible at " + at(s, t));
      auto flip = X.rho.find({t, s});
      if (flip != X.rho.end() &&
          !(c.compose(flip->second, c.sym(X.x[s - 1], X.x[t - 1])) == r))
        bad.push_back("gluing incompatible with the symmetry at " + at(s, t));
    }
  if (!bad.empty()) return bad;
  for (int s = 1; s <= full; ++s)
    for (int t = 1; t <= full; ++t) {
      if (s & t) continue;
      for (int w = 1; w <= full; ++w) {
        if ((s & w) || (t & w)) continue;
        auto lhs = c.compose(nerve_rho_at(c, X, s | t, w),
                             c.tensor_mor(nerve_rho_at(c, X, s, t), c.id(X.x[w - 1])));
        auto rhs = c.compose(nerve_rho_at(c, X, s, t | w),
                             c.tensor_mor(c.id(X.x[s - 1]), nerve_rho_at(c, X, t, w)));
        if (!(lhs == rhs))
          bad.push_back("gluing pasting fails at " + at(s, t) + "+" + std::to_string(w));
      }
    }
  return bad;
}

template <typename C>
std::vector<std::string> nerve_check_mor(const C& c, const NerveMor<C>& F) {
  std::vector<std::string> bad;
  int full = (1 << F.a.n) - 1;
  if (F.a.n != F.b.n || static_cast<int>(F.g.size()) != full) {
    bad.push_back("component count wrong");
    return bad;
  }
  for (int mask = 1; mask <= full; ++mask)
    if (!(c.src(F.g[mask - 1]) == F.a.x[mask - 1]) || !(c.tgt(F.g[mask - 1]) == F.b.x[mask - 1]))
      bad.push_back("component endpoints wrong at mask " + std::to_string(mask));
  if (!bad.empty()) return bad;
  for (int s = 1; s <= full; ++s)
    for (int t = 1; t <= full; ++t) {
      if (s & t) continue;
      auto lhs = c.compose(F.g[(s | t) - 1], nerve_rho_at(c, F.a, s, t));
      auto rhs = c.compose(nerve_rho_at(c, F.b, s, t),
                           c.tensor_mor(F.g[s - 1], F.g[t - 1]));
      if (!(lhs == rhs))
        bad.push_back("component not compatible with gluing at (" + std::to_string(s) + "," +
                      std::to_string(t) + ")");
    }
  return bad;
}

// The unique morphism A -> B with the given singleton components: every
// other component is forced by gluing compatibility. Validates the result.
template <typename C>
NerveMor<C> nerve_lift(const C& c, const NerveObj<C>& A, const NerveObj<C>& B,
                       const std::vector<typename C::Mor>& comps) {
  if (A.n != B.n || static_cast<int>(comps.size()) != A.n)
    throw std::invalid_argument("nerve_lift: component count mismatch");
  NerveMor<C> F;
  F.a = A;
  F.b = B;
  int full = (1 << A.n) - 1;
  F.g.assign(full, c.id(c.unit()));
  for (int mask = 1; mask <= full; ++mask) {
    if (std::popcount(static_cast<unsigned>(mask)) == 1) {
      F.g[mask - 1] = comps[mask_bits(mask)[0] - 1];
      continue;
    }
    int lo = mask & -mask;
    int rest = mask ^ lo;
    auto mid = c.tensor_mor(F.g[lo - 1], F.g[rest - 1]);
    F.g[mask - 1] = c.compose(nerve_rho_at(c, B, lo, rest),
                              c.compose(mid, c.inv(nerve_rho_at(c, A, lo, rest))));
  }
  auto bad = nerve_check_mor(c, F);
  if (!bad.empty()) throw std::invalid_argument("nerve_lift: " + bad.front());
  return F;
}

// Transport respects identities and composition of pointed maps, exhaustively
// over all maps out of the object's level with targets <= bound.
template <typename C>
std::vector<std::string> nerve_check_functorial(const C& c, const NerveMor<C>& F, int bound) {
  std::vector<std::string> bad;
  const NerveObj<C>& X = F.a;
  if (!(nerve_push_obj(c, gamma_id(X.n), X) == X)) bad.push_back("identity moves an object");
  if (!(nerve_push_mor(c, gamma_id(X.n), F) == F)) bad.push_back("identity moves a morphism");
  for (int m = 0; m <= bound; ++m)
    for (const auto& u : gamma_maps(X.n, m)) {
      auto Xu = nerve_push_obj(c, u, X);
      auto Fu = nerve_push_mor(c, u, F);
      for (int k = 0; k <= bound; ++k)
        for (const auto& v : gamma_maps(m, k)) {
          auto vu = compose_gamma(v, u);
          if (!(nerve_push_obj(c, v, Xu) == nerve_push_obj(c, vu, X)))
            bad.push_back("object transport not functorial through level " + std::to_string(m));
          if (!(nerve_push_mor(c, v, Fu) == nerve_push_mor(c, vu, F)))
            bad.push_back("morphism transport not functorial through level " + std::to_string(m));
        }
    }
  return bad;
}

struct NerveSpecialReport {
  bool ok = false;
  int failing_level = -1;
  std::string reason;
  bool exhaustive = true;  // false when the tuple sample was truncated
};

// Segal condition witnessed constructively on a view: every tuple has the
// canonical section as an on-the-nose preimage (valid gluing data, singleton
// transports returning the tuple exactly), and component tuples lift along it
// compatibly; higher components of any morphism are forced by its singleton
// ones through the gluing isomorphisms, so the lift is unique.
template <typename C>
NerveSpecialReport nerve_is_special(const C& c, const std::vector<typename C::Obj>& view,
                                    const std::vector<typename C::Mor>& mors, int bound,
                                    size_t tuple_cap = 4096) {
  NerveSpecialReport rep;
  for (int n = 0; n <= bound; ++n) {
    std::vector<std::vector<int>> obj_tuples, mor_tuples;
    if (n > 0 && view.empty()) continue;
    std::vector<int> idx(n, 0);
    for (bool more = true; more;) {
      obj_tuples.push_back(idx);
      if (obj_tuples.size() >= tuple_cap) {
        rep.exhaustive = false;
        break;
      }
      more = false;
      for (int i = n - 1; i >= 0; --i) {
        if (++idx[i] < static_cast<int>(view.size())) {
          more = true;
          break;
        }
        idx[i] = 0;
      }
    }
    idx.assign(n, 0);
    if (!mors.empty())
      for (bool more = true; more;) {
        mor_tuples.push_back(idx);
        if (mor_tuples.size() >= tuple_cap) {
          rep.exhaustive = false;
          break;
        }
        more = false;
        for (int i = n - 1; i >= 0; --i) {
          if (++idx[i] < static_cast<int>(mors.size())) {
            more = true;
            break;
          }
          idx[i] = 0;
        }
      }
    for (const auto& tup : obj_tuples) {
      std::vector<typename C::Obj> xs;
      for (int i : tup) xs.push_back(view[i]);
      auto X = nerve_section_obj(c, xs);
      auto bad = nerve_check_obj(c, X);
      if (!bad.empty()) {
        rep.failing_level = n;
        rep.reason = "section object invalid: " + bad.front();
        return rep;
      }
      for (int i = 1; i <= n; ++i)
        if (!(nerve_push_obj(c, segal_map(n, i), X) == nerve_obj1(c, xs[i - 1]))) {
          rep.failing_level = n;
          rep.reason = "singleton transport does not return the tuple entry";
          return rep;
        }
    }
    for (const auto& tup : mor_tuples) {
      std::vector<typename C::Mor> fs;
      std::vector<typename C::Obj> srcs, tgts;
      for (int i : tup) {
        fs.push_back(mors[i]);
        srcs.push_back(c.src(mors[i]));
        tgts.push_back(c.tgt(mors[i]));
      }
      NerveMor<C> F;
      try {
        F = nerve_lift(c, nerve_section_obj(c, srcs), nerve_section_obj(c, tgts), fs);
      } catch (const std::exception& e) {
        rep.failing_level = n;
        rep.reason = e.what();
        return rep;
      }
      for (int i = 1; i <= n; ++i)
        if (!(nerve_push_mor(c, segal_map(n, i), F) == nerve_mor1(c, fs[i - 1]))) {
          rep.failing_level = n;
          rep.reason = "singleton transport does not return the component";
          return rep;
        }
    }
  }
  rep.ok = true;
  return rep;
}

}  // namespace rigidtrace
