#pragma once

#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "rigidtrace/fincat.hpp"
#include "rigidtrace/gamma.hpp"
#include "rigidtrace/monoidal_nerve.hpp"

namespace rigidtrace {

// Finite category per level [n], n <= bound, with a transport functor per
// pointed map between levels in range. Everything is materialized, so the
// Segal condition can be decided honestly by equivalence checks.
struct FinGammaCat {
  int bound = 0;
  std::vector<FinCat> level;
  std::function<FinFunctor(const GammaMap&)> act;
};

// Transport respects identities and composition, exhaustively over all
// pointed maps between levels <= maxn; each transport is a valid functor.
std::vector<std::string> check_gamma_cat(const FinGammaCat& g, int maxn);

// n-fold product category: objects and morphisms are tuples encoded
// most-significant-first; composition is componentwise. Built raw: the
// product of valid categories is valid.
FinCat product_fincat(const FinCat& c, int n);

// Combined transport along (s_1,...,s_n) into the n-fold product of level
// [1]; for n = 0 the unique functor to the terminal category.
FinFunctor segal_functor(const FinGammaCat& g, int n);

// Segal condition for category levels: the combined transport is an
// equivalence at every level <= bound (level 0 equivalent to terminal).
SpecialReport is_special(const FinGammaCat& g);

// Levelwise discrete category on a set-valued level assignment.
FinGammaCat gamma_cat_discrete(const GammaSet& x);

// Level [n] = E^n tuples times a contractible two-object groupoid; transport
// acts by fiberwise sums on the tuple and leaves the groupoid tag untouched.
// Level 0 is equivalent, not equal, to the terminal category, so the Segal
// condition holds while preimage searches must produce non-identity
// comparison isomorphisms.
FinGammaCat gamma_cat_padded(const FinCMonoid& e, int bound);

// Every nerve object and morphism over the category's object view, tabulated
// level by level. Feasible only when hom-sets and gluing choices are tiny;
// enumeration work beyond the budget throws std::runtime_error.
template <typename C>
FinGammaCat materialize_nerve(const C& c, int bound, long long budget = 4000000) {
  struct Level {
    std::vector<NerveObj<C>> objs;
    std::vector<NerveMor<C>> mors;
    std::vector<int> msrc, mtgt;
  };
  auto levels = std::make_shared<std::vector<Level>>();
  long long spent = 0;
  auto charge = [&](long long k) {
    spent += k;
    if (spent > budget) throw std::runtime_error("materialize_nerve: budget exceeded");
  };
  auto objs = c.objects();

  for (int n = 0; n <= bound; ++n) {
    Level lv;
    int full = (1 << n) - 1;
    // enumerate the component objects; prune by iso-compatibility with the
    // canonical split mask = lowest bit + rest
    std::vector<NerveObj<C>> partial;
    {
      NerveObj<C> seed;
      seed.n = n;
      partial.push_back(seed);
    }
    for (int mask = 1; mask <= full; ++mask) {
      std::vector<NerveObj<C>> next;
      for (const auto& p : partial)
        for (const auto& cand : objs) {
          charge(1);
          if (std::popcount(static_cast<unsigned>(mask)) > 1) {
            int lo = mask & -mask, rest = mask ^ lo;
            auto prod = c.tensor_obj(p.x[lo - 1], p.x[rest - 1]);
            auto hs = c.hom_size(prod, cand);
            if (hs < 0) throw std::runtime_error("materialize_nerve: hom not enumerable");
            charge(hs);
            bool has_iso = false;
            for (const auto& h : c.hom(prod, cand))
              if (c.is_iso(h)) has_iso = true;
            if (!has_iso) continue;
          }
          auto q = p;
          q.x.push_back(cand);
          next.push_back(q);
        }
      partial = std::move(next);
    }
    // enumerate gluing data per component assignment
    std::vector<std::pair<int, int>> pairs;
    for (int s = 1; s <= full; ++s)
      for (int t = 1; t <= full; ++t)
        if (!(s & t)) pairs.push_back({s, t});
    for (const auto& p : partial) {
      std::vector<std::vector<typename C::Mor>> cands;
      bool feasible = true;
      for (auto [s, t] : pairs) {
        std::vector<typename C::Mor> isos;
        auto prod = c.tensor_obj(p.x[s - 1], p.x[t - 1]);
        auto hs = c.hom_size(prod, p.x[(s | t) - 1]);
        if (hs < 0) throw std::runtime_error("materialize_nerve: hom not enumerable");
        charge(hs);
        for (const auto& h : c.hom(prod, p.x[(s | t) - 1]))
          if (c.is_iso(h)) isos.push_back(h);
        if (isos.empty()) {
          feasible = false;
          break;
        }
        cands.push_back(std::move(isos));
      }
      if (!feasible) continue;
      std::vector<size_t> pick(pairs.size(), 0);
      for (bool more = true; more;) {
        charge(1);
        NerveObj<C> X = p;
        for (size_t k = 0; k < pairs.size(); ++k) X.rho[pairs[k]] = cands[k][pick[k]];
        if (nerve_check_obj(c, X).empty()) lv.objs.push_back(X);
        more = false;
        for (size_t k = pick.size(); k-- > 0;) {
          if (++pick[k] < cands[k].size()) {
            more = true;
            break;
          }
          pick[k] = 0;
        }
        if (pick.empty()) break;
      }
    }
    // morphisms: all compatible component families between each object pair
    for (size_t a = 0; a < lv.objs.size(); ++a)
      for (size_t b = 0; b < lv.objs.size(); ++b) {
        const auto& X = lv.objs[a];
        const auto& Y = lv.objs[b];
        std::vector<std::vector<typename C::Mor>> cands;
        bool feasible = true;
        long long count = 1;
        for (int mask = 1; mask <= full; ++mask) {
          auto hs = c.hom_size(X.x[mask - 1], Y.x[mask - 1]);
          if (hs == 0) {
            feasible = false;
            break;
          }
          if (hs < 0) throw std::runtime_error("materialize_nerve: hom not enumerable");
          count *= hs;
          if (count > budget) throw std::runtime_error("materialize_nerve: budget exceeded");
          charge(hs);
          cands.push_back(c.hom(X.x[mask - 1], Y.x[mask - 1]));
        }
        if (!feasible) continue;
        charge(count);
        std::vector<size_t> pick(cands.size(), 0);
        for (bool more = true; more;) {
          NerveMor<C> F;
          F.a = X;
          F.b = Y;
          for (size_t k = 0; k < cands.size(); ++k) F.g.push_back(cands[k][pick[k]]);
          if (nerve_check_mor(c, F).empty()) {
            lv.mors.push_back(F);
            lv.msrc.push_back(static_cast<int>(a));
            lv.mtgt.push_back(static_cast<int>(b));
          }
          more = false;
          for (size_t k = pick.size(); k-- > 0;) {
            if (++pick[k] < cands[k].size()) {
              more = true;
              break;
            }
            pick[k] = 0;
          }
          if (pick.empty()) break;
        }
      }
    levels->push_back(std::move(lv));
  }

  auto find_obj = [levels](int n, const NerveObj<C>& X) {
    const auto& lv = (*levels)[n];
    for (size_t i = 0; i < lv.objs.size(); ++i)
      if (lv.objs[i] == X) return static_cast<int>(i);
    throw std::logic_error("materialize_nerve: transported object not in the table");
  };
  auto find_mor = [levels](int n, const NerveMor<C>& F) {
    const auto& lv = (*levels)[n];
    for (size_t i = 0; i < lv.mors.size(); ++i)
      if (lv.mors[i] == F) return static_cast<int>(i);
    throw std::logic_error("materialize_nerve: transported morphism not in the table");
  };

  FinGammaCat g;
  g.bound = bound;
  for (int n = 0; n <= bound; ++n) {
    const auto& lv = (*levels)[n];
    FinCat fc;
    fc.n_obj = static_cast<int>(lv.objs.size());
    fc.mor_src = lv.msrc;
    fc.mor_tgt = lv.mtgt;
    for (int i = 0; i < fc.n_obj; ++i) fc.ident.push_back(find_mor(n, nerve_id(c, lv.objs[i])));
    int m = fc.n_mor();
    fc.comp.assign(static_cast<size_t>(m) * m, -1);
    for (int gg = 0; gg < m; ++gg)
      for (int f = 0; f < m; ++f) {
        if (lv.mtgt[f] != lv.msrc[gg]) continue;
        fc.comp[static_cast<size_t>(gg) * m + f] =
            find_mor(n, nerve_compose(c, lv.mors[gg], lv.mors[f]));
      }
    g.level.push_back(fc);
  }
  g.act = [levels, find_obj, find_mor, c](const GammaMap& u) {
    FinFunctor f;
    const auto& lv = (*levels)[u.n];
    for (const auto& X : lv.objs) f.omap.push_back(find_obj(u.m, nerve_push_obj(c, u, X)));
    for (const auto& F : lv.mors) f.mmap.push_back(find_mor(u.m, nerve_push_mor(c, u, F)));
    return f;
  };
  return g;
}

}  // namespace rigidtrace
