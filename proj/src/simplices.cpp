#include "rigidtrace/simplices.hpp"

#include <map>
#include <stdexcept>

namespace rigidtrace {

namespace {

int chain_vertex(const FinCat& base, const std::vector<int>& ch, int k) {
  return k == 0 ? ch[0] : base.tgt(ch[k]);
}

// Composite ch(a -> b); the identity of vertex a when a == b.
int chain_stretch(const FinCat& base, const std::vector<int>& ch, int a, int b) {
  int m = base.id(chain_vertex(base, ch, a));
  for (int k = a + 1; k <= b; ++k) m = base.compose(ch[k], m);
  return m;
}

std::vector<int> pullback_chain(const FinCat& base, const std::vector<int>& u,
                                const std::vector<int>& f) {
  std::vector<int> v{chain_vertex(base, u, f[0])};
  for (size_t k = 1; k < f.size(); ++k) v.push_back(chain_stretch(base, u, f[k - 1], f[k]));
  return v;
}

}  // namespace

SimplexCat category_of_simplices(const FinCat& base, int bound) {
  if (bound < 0) throw std::invalid_argument("category_of_simplices: negative bound");
  SimplexCat s;
  s.base = base;
  s.bound = bound;
  TruncatedSSet nv = nerve_truncated(base, bound);
  FinCatBuilder bld;
  std::map<std::vector<int>, int> oid;
  for (int n = 0; n <= bound; ++n)
    for (const auto& chain : nv.cells[n]) {
      int a = bld.add_object();
      s.obj_chain.push_back(chain);
      oid[chain] = a;
      s.pi.omap.push_back(chain[0]);
    }
  std::map<std::pair<int, std::vector<int>>, int> mid;  // (source, map) -> morphism
  for (int a = 0; a < static_cast<int>(s.obj_chain.size()); ++a) {
    const auto& u = s.obj_chain[a];
    int n = static_cast<int>(u.size()) - 1;
    for (int m = 0; m <= bound; ++m) {
      std::vector<int> f(m + 1, 0);  // monotone maps [m] -> [n], lex order
      while (true) {
        int mo = bld.add_morphism(a, oid.at(pullback_chain(base, u, f)));
        s.mor_map.push_back(f);
        mid[{a, f}] = mo;
        s.pi.mmap.push_back(chain_stretch(base, u, 0, f[0]));
        s.vertical.push_back(f[0] == 0);
        int t = m;
        while (t >= 0 && f[t] == n) --t;
        if (t < 0) break;
        ++f[t];
        for (int k = t + 1; k <= m; ++k) f[k] = f[t];
      }
    }
  }
  for (int a = 0; a < static_cast<int>(s.obj_chain.size()); ++a) {
    std::vector<int> iota(s.obj_chain[a].size());
    for (size_t k = 0; k < iota.size(); ++k) iota[k] = static_cast<int>(k);
    bld.set_identity(a, mid.at({a, iota}));
  }
  int nm = static_cast<int>(s.mor_map.size());
  for (int m2 = 0; m2 < nm; ++m2)
    for (int m1 = 0; m1 < nm; ++m1) {
      if (bld.mor_tgt[m1] != bld.mor_src[m2]) continue;
      const auto& f = s.mor_map[m1];
      const auto& g = s.mor_map[m2];
      std::vector<int> fg(g.size());
      for (size_t k = 0; k < g.size(); ++k) fg[k] = f[g[k]];
      bld.set_compose(m2, m1, mid.at({bld.mor_src[m1], fg}));
    }
  s.total = bld.build();
  return s;
}

Fiber simplex_fiber(const SimplexCat& s, int i) {
  Fiber r;
  std::vector<int> oidx(s.total.n_obj, -1);
  FinCatBuilder bld;
  for (int a = 0; a < s.total.n_obj; ++a)
    if (s.pi.omap[a] == i) {
      oidx[a] = bld.add_object();
      r.objs.push_back(a);
    }
  std::vector<int> midx(s.total.n_mor(), -1);
  for (int m = 0; m < s.total.n_mor(); ++m) {
    if (!s.vertical[m] || oidx[s.total.src(m)] < 0) continue;
    midx[m] = bld.add_morphism(oidx[s.total.src(m)], oidx[s.total.tgt(m)]);
    r.mors.push_back(m);
  }
  for (int a : r.objs) bld.set_identity(oidx[a], midx[s.total.id(a)]);
  for (int m2 : r.mors)
    for (int m1 : r.mors) {
      if (!s.total.composable(m2, m1)) continue;
      bld.set_compose(midx[m2], midx[m1], midx[s.total.compose(m2, m1)]);
    }
  r.cat = bld.build();
  return r;
}

SimplexFiberReport fiber_report(const SimplexCat& s, int i) {
  SimplexFiberReport r;
  r.cofibered = true;
  for (int a = 0; a < s.total.n_obj && r.cofibered; ++a) {
    if (s.pi.omap[a] != i || s.obj_dim(a) + 1 > s.bound) continue;
    for (int h = 0; h < s.base.n_mor(); ++h) {
      if (s.base.tgt(h) != i) continue;
      bool found = false;
      for (int m = 0; m < s.total.n_mor() && !found; ++m)
        if (s.total.tgt(m) == a && s.pi.mmap[m] == h) found = true;
      if (!found) {
        r.cofibered = false;
        r.failure = "no lift of base morphism " + std::to_string(h) + " into chain object " +
                    std::to_string(a);
        break;
      }
    }
  }
  Fiber fb = simplex_fiber(s, i);
  for (int t = 0; t < fb.cat.n_obj && !r.has_terminal; ++t) {
    bool terminal = true;
    for (int a = 0; a < fb.cat.n_obj && terminal; ++a)
      if (fb.cat.hom(a, t).size() != 1) terminal = false;
    if (terminal) {
      r.has_terminal = true;
      r.terminal_obj = fb.objs[t];
    }
  }
  if (!r.has_terminal) {
    if (r.failure.empty())
      r.failure = "no terminal object in the fiber over " + std::to_string(i);
    return r;
  }
  r.witness_is_point = s.obj_chain[r.terminal_obj] == std::vector<int>{i};
  if (!r.witness_is_point && r.failure.empty())
    r.failure = "terminal object over " + std::to_string(i) + " is not the constant point";
  return r;
}

std::vector<std::string> check_simplex_factorization(const SimplexCat& s) {
  std::vector<std::string> bad;
  std::map<std::vector<int>, int> oid;
  for (int a = 0; a < s.total.n_obj; ++a) oid[s.obj_chain[a]] = a;
  std::map<std::pair<int, std::vector<int>>, int> mid;
  for (int m = 0; m < s.total.n_mor(); ++m) mid[{s.total.src(m), s.mor_map[m]}] = m;
  for (int m = 0; m < s.total.n_mor(); ++m) {
    if (s.vertical[m]) continue;  // factors through itself and the identity
    int b = s.total.tgt(m);
    if (s.obj_dim(b) + 1 > s.bound) continue;  // no room for the prepended chain
    int h = s.pi.mmap[m];
    std::vector<int> wch{s.base.src(h), h};
    wch.insert(wch.end(), s.obj_chain[b].begin() + 1, s.obj_chain[b].end());
    auto wo = oid.find(wch);
    if (wo == oid.end()) {
      bad.push_back("prepended chain missing for morphism " + std::to_string(m));
      continue;
    }
    const auto& f = s.mor_map[m];
    std::vector<int> lift_map(f.size());  // [dim b] -> [dim b + 1], skips vertex 0
    for (size_t k = 0; k < f.size(); ++k) lift_map[k] = static_cast<int>(k) + 1;
    std::vector<int> vert_map{0};  // [dim b + 1] -> [dim a]
    vert_map.insert(vert_map.end(), f.begin(), f.end());
    auto lm = mid.find({wo->second, lift_map});
    auto vm = mid.find({s.total.src(m), vert_map});
    if (lm == mid.end() || vm == mid.end()) {
      bad.push_back("factorization pieces missing for morphism " + std::to_string(m));
      continue;
    }
    if (!s.vertical[vm->second])
      bad.push_back("first factor of morphism " + std::to_string(m) + " is not vertical");
    if (s.total.compose(lm->second, vm->second) != m)
      bad.push_back("factorization does not recompose morphism " + std::to_string(m));
  }
  return bad;
}

}  // namespace rigidtrace
