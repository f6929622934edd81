#include "rigidtrace/fibration.hpp"

#include <map>
#include <stdexcept>

namespace rigidtrace {

std::vector<std::string> check_diagram(const CatDiagram& f) {
  std::vector<std::string> bad;
  if (static_cast<int>(f.fiber.size()) != f.base.n_obj)
    bad.push_back("fiber count differs from base object count");
  if (static_cast<int>(f.arrow.size()) != f.base.n_mor())
    bad.push_back("arrow count differs from base morphism count");
  if (!bad.empty()) return bad;
  for (const auto& r : check_category(f.base)) bad.push_back("base: " + r);
  for (int i = 0; i < f.base.n_obj; ++i)
    for (const auto& r : check_category(f.fiber[i]))
      bad.push_back("fiber " + std::to_string(i) + ": " + r);
  if (!bad.empty()) return bad;
  for (int u = 0; u < f.base.n_mor(); ++u)
    for (const auto& r : check_functor(f.fiber[f.base.src(u)], f.fiber[f.base.tgt(u)], f.arrow[u]))
      bad.push_back("arrow " + std::to_string(u) + ": " + r);
  if (!bad.empty()) return bad;
  for (int i = 0; i < f.base.n_obj; ++i) {
    FinFunctor idf = identity_functor(f.fiber[i]);
    const FinFunctor& a = f.arrow[f.base.id(i)];
    if (a.omap != idf.omap || a.mmap != idf.mmap)
      bad.push_back("arrow over id of object " + std::to_string(i) + " is not the identity");
  }
  for (int v = 0; v < f.base.n_mor(); ++v)
    for (int u = 0; u < f.base.n_mor(); ++u) {
      if (!f.base.composable(v, u)) continue;
      FinFunctor vu = compose_functors(f.arrow[v], f.arrow[u]);
      const FinFunctor& a = f.arrow[f.base.compose(v, u)];
      if (a.omap != vu.omap || a.mmap != vu.mmap)
        bad.push_back("arrow over compose(" + std::to_string(v) + "," + std::to_string(u) +
                      ") is not the composite of the arrows");
    }
  return bad;
}

FiberedCat integrate(const CatDiagram& f) {
  const FinCat& b = f.base;
  FiberedCat p;
  p.base = b;
  std::vector<int> off(b.n_obj + 1, 0);
  for (int i = 0; i < b.n_obj; ++i) off[i + 1] = off[i] + f.fiber[i].n_obj;
  FinCatBuilder bld;
  for (int i = 0; i < b.n_obj; ++i)
    for (int x = 0; x < f.fiber[i].n_obj; ++x) {
      bld.add_object();
      p.proj.omap.push_back(i);
      p.obj_fiber.push_back(x);
    }
  std::map<std::vector<int>, int> mid;  // (u, x, g) -> total morphism
  for (int u = 0; u < b.n_mor(); ++u) {
    int i = b.src(u), j = b.tgt(u);
    for (int x = 0; x < f.fiber[i].n_obj; ++x) {
      int fx = f.arrow[u].omap[x];
      for (int g = 0; g < f.fiber[j].n_mor(); ++g) {
        if (f.fiber[j].src(g) != fx) continue;
        int m = bld.add_morphism(off[i] + x, off[j] + f.fiber[j].tgt(g));
        mid[{u, x, g}] = m;
        p.base_mor.push_back(u);
        p.fiber_comp.push_back(g);
        p.cartesian.push_back(mor_inverse(f.fiber[j], g).has_value());
      }
    }
  }
  for (int i = 0; i < b.n_obj; ++i)
    for (int x = 0; x < f.fiber[i].n_obj; ++x)
      bld.set_identity(off[i] + x, mid.at({b.id(i), x, f.fiber[i].id(x)}));
  int nm = static_cast<int>(p.base_mor.size());
  for (int m2 = 0; m2 < nm; ++m2)
    for (int m1 = 0; m1 < nm; ++m1) {
      if (bld.mor_tgt[m1] != bld.mor_src[m2]) continue;
      int v = p.base_mor[m2], u = p.base_mor[m1];
      int x = p.obj_fiber[bld.mor_src[m1]];
      int k = b.tgt(v);
      int c = f.fiber[k].compose(p.fiber_comp[m2], f.arrow[v].mmap[p.fiber_comp[m1]]);
      bld.set_compose(m2, m1, mid.at({b.compose(v, u), x, c}));
    }
  p.total = bld.build();
  p.proj.mmap = p.base_mor;
  return p;
}

bool is_cartesian_pullback(const FiberedCat& p, int m) {
  const FinCat& t = p.total;
  const FinCat& b = p.base;
  int a = t.src(m), y = t.tgt(m);
  int u = p.proj.mmap[m];
  int j = b.tgt(u);
  for (int z = 0; z < t.n_obj; ++z) {
    int k = p.proj.omap[z];
    for (int g : t.hom(a, z))
      for (int w : b.hom(j, k)) {
        if (b.compose(w, u) != p.proj.mmap[g]) continue;
        int count = 0;
        for (int h : t.hom(y, z))
          if (p.proj.mmap[h] == w && t.compose(h, m) == g) ++count;
        if (count != 1) return false;
      }
  }
  return true;
}

bool is_cartesian_component(const FiberedCat& p, int m) {
  if (!p.has_tables()) throw std::logic_error("is_cartesian_component: no decomposition tables");
  return p.cartesian[m];
}

bool is_cartesian(const FiberedCat& p, int m) {
  return p.has_tables() ? is_cartesian_component(p, m) : is_cartesian_pullback(p, m);
}

std::vector<std::string> check_fibered(const FiberedCat& p) {
  std::vector<std::string> bad = check_functor(p.total, p.base, p.proj);
  if (!bad.empty()) return bad;
  for (int a = 0; a < p.total.n_obj; ++a) {
    int i = p.proj.omap[a];
    for (int u = 0; u < p.base.n_mor(); ++u) {
      if (p.base.src(u) != i) continue;
      bool found = false;
      for (int m = 0; m < p.total.n_mor() && !found; ++m)
        if (p.total.src(m) == a && p.proj.mmap[m] == u && is_cartesian(p, m)) found = true;
      if (!found)
        bad.push_back("no cartesian lift of base morphism " + std::to_string(u) + " at object " +
                      std::to_string(a));
    }
  }
  return bad;
}

Fiber fiber_of(const FiberedCat& p, int i) {
  Fiber r;
  std::vector<int> oidx(p.total.n_obj, -1);
  FinCatBuilder bld;
  for (int a = 0; a < p.total.n_obj; ++a)
    if (p.proj.omap[a] == i) {
      oidx[a] = bld.add_object();
      r.objs.push_back(a);
    }
  std::vector<int> midx(p.total.n_mor(), -1);
  for (int m = 0; m < p.total.n_mor(); ++m) {
    if (oidx[p.total.src(m)] < 0 || oidx[p.total.tgt(m)] < 0) continue;
    if (!p.base.is_identity(p.proj.mmap[m])) continue;
    midx[m] = bld.add_morphism(oidx[p.total.src(m)], oidx[p.total.tgt(m)]);
    r.mors.push_back(m);
  }
  for (int a : r.objs) bld.set_identity(oidx[a], midx[p.total.id(a)]);
  for (int m2 : r.mors)
    for (int m1 : r.mors) {
      if (!p.total.composable(m2, m1)) continue;
      bld.set_compose(midx[m2], midx[m1], midx[p.total.compose(m2, m1)]);
    }
  r.cat = bld.build();
  return r;
}

SectionReport cartesian_sections_roundtrip(const CatDiagram& f, std::size_t cap) {
  SectionReport rep;
  FiberedCat p = integrate(f);
  int nb = f.base.n_obj;
  rep.per_object.assign(nb, false);
  for (int i = 0; i < nb; ++i) {
    CommaUnder cu = comma_under(f.base, i);
    std::vector<FinFunctor> cands;
    try {
      cands = all_functors(cu.cat, p.total, cap);
    } catch (const std::runtime_error&) {
      rep.cap_exceeded = true;
      rep.failure =
          "functor enumeration over base object " + std::to_string(i) + " exceeded the cap";
      return rep;
    }
    int o0 = -1;  // the comma object (i, id_i)
    for (size_t k = 0; k < cu.obj_mor.size(); ++k)
      if (cu.obj_mor[k] == f.base.id(i)) o0 = static_cast<int>(k);
    std::vector<FinFunctor> secs;
    for (const auto& s : cands) {
      FinFunctor ps = compose_functors(p.proj, s);
      if (ps.omap != cu.to_base.omap || ps.mmap != cu.to_base.mmap) continue;
      bool cart = true;
      for (int m = 0; m < cu.cat.n_mor() && cart; ++m)
        if (!is_cartesian(p, s.mmap[m])) cart = false;
      if (cart) secs.push_back(s);
    }
    // category of sections; morphisms are vertical natural transformations
    FinCatBuilder bld;
    for (size_t s = 0; s < secs.size(); ++s) bld.add_object();
    int nco = cu.cat.n_obj;
    std::vector<std::vector<int>> comps;   // per section morphism: components
    std::map<std::vector<int>, int> midx;  // (src, tgt, components) -> morphism
    for (size_t s = 0; s < secs.size(); ++s)
      for (size_t s2 = 0; s2 < secs.size(); ++s2) {
        std::vector<std::vector<int>> choices(nco);
        bool any = true;
        for (int o = 0; o < nco && any; ++o) {
          int jb = cu.to_base.omap[o];
          for (int h : p.total.hom(secs[s].omap[o], secs[s2].omap[o]))
            if (p.proj.mmap[h] == f.base.id(jb)) choices[o].push_back(h);
          if (choices[o].empty()) any = false;
        }
        if (!any) continue;
        std::vector<int> pick(nco, 0);
        while (true) {
          NatTransf eta(nco);
          for (int o = 0; o < nco; ++o) eta[o] = choices[o][pick[o]];
          if (check_natural(cu.cat, p.total, secs[s], secs[s2], eta).empty()) {
            int m = bld.add_morphism(static_cast<int>(s), static_cast<int>(s2));
            comps.push_back(eta);
            std::vector<int> key{static_cast<int>(s), static_cast<int>(s2)};
            key.insert(key.end(), eta.begin(), eta.end());
            midx[key] = m;
          }
          int o = nco - 1;
          while (o >= 0 && pick[o] + 1 == static_cast<int>(choices[o].size())) pick[o--] = 0;
          if (o < 0) break;
          ++pick[o];
        }
      }
    for (size_t s = 0; s < secs.size(); ++s) {
      std::vector<int> key{static_cast<int>(s), static_cast<int>(s)};
      for (int o = 0; o < nco; ++o) key.push_back(p.total.id(secs[s].omap[o]));
      bld.set_identity(static_cast<int>(s), midx.at(key));
    }
    int nsm = static_cast<int>(comps.size());
    for (int m2 = 0; m2 < nsm; ++m2)
      for (int m1 = 0; m1 < nsm; ++m1) {
        if (bld.mor_tgt[m1] != bld.mor_src[m2]) continue;
        std::vector<int> key{bld.mor_src[m1], bld.mor_tgt[m2]};
        for (int o = 0; o < nco; ++o) key.push_back(p.total.compose(comps[m2][o], comps[m1][o]));
        bld.set_compose(m2, m1, midx.at(key));
      }
    FinCat sc = bld.build();
    FinFunctor ev;  // evaluate at the comma object (i, id_i)
    for (size_t s = 0; s < secs.size(); ++s) ev.omap.push_back(p.obj_fiber[secs[s].omap[o0]]);
    for (int m = 0; m < nsm; ++m) ev.mmap.push_back(p.fiber_comp[comps[m][o0]]);
    auto fbad = check_functor(sc, f.fiber[i], ev);
    if (!fbad.empty()) {
      if (rep.failure.empty())
        rep.failure = "base object " + std::to_string(i) + ": evaluation is not a functor: " + fbad[0];
      continue;
    }
    EquivalenceWitness w = is_equivalence(sc, f.fiber[i], ev);
    rep.per_object[i] = w.ok;
    if (!w.ok && rep.failure.empty())
      rep.failure = "base object " + std::to_string(i) + ": " + w.failure;
  }
  rep.ok = true;
  for (int i = 0; i < nb; ++i)
    if (!rep.per_object[i]) rep.ok = false;
  return rep;
}

}  // namespace rigidtrace
