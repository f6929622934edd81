#include "rigidtrace/gamma_cat.hpp"

#include <map>

namespace rigidtrace {

static bool functor_eq(const FinFunctor& a, const FinFunctor& b) {
  return a.omap == b.omap && a.mmap == b.mmap;
}

std::vector<std::string> check_gamma_cat(const FinGammaCat& g, int maxn) {
  std::vector<std::string> bad;
  if (maxn > g.bound) maxn = g.bound;
  // transports can be expensive to evaluate; every map consulted below has
  // levels <= maxn, so one table covers identities, factors and composites
  std::map<std::vector<int>, FinFunctor> cache;
  auto act = [&](const GammaMap& u) -> const FinFunctor& {
    std::vector<int> key{u.n, u.m};
    key.insert(key.end(), u.f.begin(), u.f.end());
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(std::move(key), g.act(u)).first;
    return it->second;
  };
  for (int n = 0; n <= maxn; ++n) {
    if (!functor_eq(act(gamma_id(n)), identity_functor(g.level[n])))
      bad.push_back("identity transport wrong at level " + std::to_string(n));
    for (int m = 0; m <= maxn; ++m)
      for (const auto& u : gamma_maps(n, m)) {
        const auto& fu = act(u);
        auto fb = check_functor(g.level[n], g.level[m], fu);
        if (!fb.empty()) {
          bad.push_back("transport not a functor: " + fb.front());
          continue;
        }
        for (int k = 0; k <= maxn; ++k)
          for (const auto& v : gamma_maps(m, k))
            if (!functor_eq(act(compose_gamma(v, u)), compose_functors(act(v), fu)))
              bad.push_back("transport not functorial at levels " + std::to_string(n) + "," +
                            std::to_string(m) + "," + std::to_string(k));
      }
  }
  return bad;
}

FinCat product_fincat(const FinCat& c, int n) {
  FinCat p;
  long long nobj = 1, nmor = 1;
  for (int i = 0; i < n; ++i) {
    nobj *= c.n_obj;
    nmor *= c.n_mor();
  }
  p.n_obj = static_cast<int>(nobj);
  auto obj_digits = [&](long long e) { return tuple_decode(e, n, c.n_obj); };
  auto mor_digits = [&](long long e) { return tuple_decode(e, n, c.n_mor()); };
  for (long long f = 0; f < nmor; ++f) {
    auto d = mor_digits(f);
    std::vector<int> s(n), t(n);
    for (int i = 0; i < n; ++i) {
      s[i] = c.src(d[i]);
      t[i] = c.tgt(d[i]);
    }
    p.mor_src.push_back(static_cast<int>(tuple_encode(s, c.n_obj)));
    p.mor_tgt.push_back(static_cast<int>(tuple_encode(t, c.n_obj)));
  }
  for (long long x = 0; x < nobj; ++x) {
    auto d = obj_digits(x);
    std::vector<int> ids(n);
    for (int i = 0; i < n; ++i) ids[i] = c.id(d[i]);
    p.ident.push_back(static_cast<int>(tuple_encode(ids, c.n_mor())));
  }
  p.comp.assign(static_cast<size_t>(nmor) * nmor, -1);
  for (long long g = 0; g < nmor; ++g) {
    auto dg = mor_digits(g);
    for (long long f = 0; f < nmor; ++f) {
      if (p.mor_tgt[f] != p.mor_src[g]) continue;
      auto df = mor_digits(f);
      std::vector<int> comp(n);
      for (int i = 0; i < n; ++i) comp[i] = c.compose(dg[i], df[i]);
      p.comp[static_cast<size_t>(g) * nmor + f] =
          static_cast<int>(tuple_encode(comp, c.n_mor()));
    }
  }
  return p;
}

FinFunctor segal_functor(const FinGammaCat& g, int n) {
  const FinCat& lv = g.level[n];
  const FinCat& one = g.level[1];
  std::vector<FinFunctor> si;
  for (int i = 1; i <= n; ++i) si.push_back(g.act(segal_map(n, i)));
  FinFunctor f;
  for (int x = 0; x < lv.n_obj; ++x) {
    std::vector<int> d(n);
    for (int i = 0; i < n; ++i) d[i] = si[i].omap[x];
    f.omap.push_back(static_cast<int>(tuple_encode(d, one.n_obj)));
  }
  for (int m = 0; m < lv.n_mor(); ++m) {
    std::vector<int> d(n);
    for (int i = 0; i < n; ++i) d[i] = si[i].mmap[m];
    f.mmap.push_back(static_cast<int>(tuple_encode(d, one.n_mor())));
  }
  return f;
}

SpecialReport is_special(const FinGammaCat& g) {
  SpecialReport rep;
  rep.level_ok.assign(g.bound + 1, false);
  for (int n = 0; n <= g.bound; ++n) {
    FinCat target = n == 0 ? fincat_terminal() : product_fincat(g.level[1], n);
    auto w = is_equivalence(g.level[n], target, segal_functor(g, n));
    rep.level_ok[n] = w.ok;
    if (!w.ok && rep.failing_level < 0) {
      rep.failing_level = n;
      rep.reason = "combined transport not an equivalence: " + w.failure;
    }
  }
  rep.ok = rep.failing_level < 0;
  return rep;
}

FinGammaCat gamma_cat_discrete(const GammaSet& x) {
  FinGammaCat g;
  g.bound = x.bound;
  for (int n = 0; n <= x.bound; ++n) {
    FinCatBuilder b;
    for (long long i = 0; i < x.size[n]; ++i) {
      int o = b.add_object();
      int m = b.add_morphism(o, o);
      b.set_identity(o, m);
      b.set_compose(m, m, m);
    }
    g.level.push_back(b.build());
  }
  g.act = [x](const GammaMap& u) {
    FinFunctor f;
    for (long long i = 0; i < x.size[u.n]; ++i) {
      int img = static_cast<int>(x.act(u, i));
      f.omap.push_back(img);
      f.mmap.push_back(img);
    }
    return f;
  };
  return g;
}

FinGammaCat gamma_cat_padded(const FinCMonoid& e, int bound) {
  FinGammaCat g;
  g.bound = bound;
  std::vector<long long> tuples(bound + 1, 1);
  for (int n = 1; n <= bound; ++n) tuples[n] = tuples[n - 1] * e.n;
  for (int n = 0; n <= bound; ++n) {
    FinCatBuilder b;
    // object id = tuple*2 + tag, morphism id = tuple*4 + 2*src_tag + tgt_tag
    for (long long t = 0; t < tuples[n]; ++t)
      for (int tag = 0; tag < 2; ++tag) b.add_object();
    for (long long t = 0; t < tuples[n]; ++t)
      for (int a = 0; a < 2; ++a)
        for (int bb = 0; bb < 2; ++bb) {
          int m = b.add_morphism(static_cast<int>(t * 2 + a), static_cast<int>(t * 2 + bb));
          if (a == bb) b.set_identity(static_cast<int>(t * 2 + a), m);
        }
    for (long long t = 0; t < tuples[n]; ++t)
      for (int a = 0; a < 2; ++a)
        for (int bb = 0; bb < 2; ++bb)
          for (int cc = 0; cc < 2; ++cc)
            b.set_compose(static_cast<int>(t * 4 + 2 * bb + cc),
                          static_cast<int>(t * 4 + 2 * a + bb),
                          static_cast<int>(t * 4 + 2 * a + cc));
    g.level.push_back(b.build());
  }
  auto nm = nerve_monoid(e, bound);
  g.act = [nm, tuples](const GammaMap& u) {
    FinFunctor f;
    for (long long t = 0; t < tuples[u.n]; ++t) {
      long long img = nm.act(u, t);
      f.omap.push_back(static_cast<int>(img * 2));
      f.omap.push_back(static_cast<int>(img * 2 + 1));
      for (int k = 0; k < 4; ++k) f.mmap.push_back(static_cast<int>(img * 4 + k));
    }
    return f;
  };
  return g;
}

}  // namespace rigidtrace
