#include "rigidtrace/fincat.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace rigidtrace {

std::vector<int> FinCat::hom(int x, int y) const {
  std::vector<int> out;
  for (int f = 0; f < n_mor(); ++f)
    if (mor_src[f] == x && mor_tgt[f] == y) out.push_back(f);
  return out;
}

int FinCatBuilder::add_object() {
  ident.push_back(-1);
  return n_obj++;
}

int FinCatBuilder::add_morphism(int s, int t) {
  mor_src.push_back(s);
  mor_tgt.push_back(t);
  return static_cast<int>(mor_src.size()) - 1;
}

void FinCatBuilder::set_identity(int x, int f) { ident[x] = f; }

void FinCatBuilder::set_compose(int g, int f, int gf) { entries.push_back({g, f, gf}); }

FinCat FinCatBuilder::raw() const {
  FinCat c;
  c.n_obj = n_obj;
  c.mor_src = mor_src;
  c.mor_tgt = mor_tgt;
  c.ident = ident;
  int m = c.n_mor();
  c.comp.assign(static_cast<size_t>(m) * m, -1);
  for (const auto& e : entries) {
    if (e[0] < 0 || e[0] >= m || e[1] < 0 || e[1] >= m) continue;
    c.comp[static_cast<size_t>(e[0]) * m + e[1]] = e[2];
  }
  // entries with identities on either side are implied; fill what is missing
  for (int x = 0; x < n_obj; ++x) {
    int i = ident[x];
    if (i < 0 || i >= m) continue;
    for (int f = 0; f < m; ++f) {
      if (mor_tgt[f] == x && c.comp[static_cast<size_t>(i) * m + f] < 0)
        c.comp[static_cast<size_t>(i) * m + f] = f;
      if (mor_src[f] == x && c.comp[static_cast<size_t>(f) * m + i] < 0)
        c.comp[static_cast<size_t>(f) * m + i] = f;
    }
  }
  return c;
}

FinCat FinCatBuilder::build() const {
  FinCat c = raw();
  auto report = check_category(c);
  if (!report.empty()) {
    std::string msg = "invalid category:";
    for (const auto& r : report) msg += "\n  " + r;
    throw std::invalid_argument(msg);
  }
  return c;
}

std::vector<std::string> check_category(const FinCat& c) {
  std::vector<std::string> bad;
  int m = c.n_mor();
  if (c.mor_tgt.size() != c.mor_src.size()) {
    bad.push_back("morphism source/target lists have different lengths");
    return bad;
  }
  if (static_cast<int>(c.ident.size()) != c.n_obj) {
    bad.push_back("identity list length differs from object count");
    return bad;
  }
  if (c.comp.size() != static_cast<size_t>(m) * m) {
    bad.push_back("composition table size is not (morphisms)^2");
    return bad;
  }
  for (int f = 0; f < m; ++f)
    if (c.src(f) < 0 || c.src(f) >= c.n_obj || c.tgt(f) < 0 || c.tgt(f) >= c.n_obj)
      bad.push_back("morphism " + std::to_string(f) + " has out-of-range endpoint");
  if (!bad.empty()) return bad;
  for (int x = 0; x < c.n_obj; ++x) {
    int i = c.ident[x];
    if (i < 0 || i >= m)
      bad.push_back("object " + std::to_string(x) + " has out-of-range identity id");
    else if (c.src(i) != x || c.tgt(i) != x)
      bad.push_back("identity " + std::to_string(i) + " of object " + std::to_string(x) +
                    " is not an endomorphism of it");
  }
  if (!bad.empty()) return bad;
  for (int g = 0; g < m; ++g)
    for (int f = 0; f < m; ++f) {
      int gf = c.compose(g, f);
      if (!c.composable(g, f)) {
        if (gf != -1)
          bad.push_back("compose(" + std::to_string(g) + "," + std::to_string(f) +
                        ") defined on a non-composable pair");
        continue;
      }
      if (gf < 0 || gf >= m) {
        bad.push_back("compose(" + std::to_string(g) + "," + std::to_string(f) +
                      ") missing or out of range");
        continue;
      }
      if (c.src(gf) != c.src(f) || c.tgt(gf) != c.tgt(g))
        bad.push_back("compose(" + std::to_string(g) + "," + std::to_string(f) + ") = " +
                      std::to_string(gf) + " has wrong endpoints");
    }
  if (!bad.empty()) return bad;
  for (int f = 0; f < m; ++f) {
    if (c.compose(f, c.id(c.src(f))) != f)
      bad.push_back("right identity law fails at morphism " + std::to_string(f));
    if (c.compose(c.id(c.tgt(f)), f) != f)
      bad.push_back("left identity law fails at morphism " + std::to_string(f));
  }
  for (int h = 0; h < m; ++h)
    for (int g = 0; g < m; ++g) {
      if (!c.composable(h, g)) continue;
      int hg = c.compose(h, g);
      for (int f = 0; f < m; ++f) {
        if (!c.composable(g, f)) continue;
        if (c.compose(hg, f) != c.compose(h, c.compose(g, f)))
          bad.push_back("associativity fails on (" + std::to_string(h) + "," + std::to_string(g) +
                        "," + std::to_string(f) + ")");
      }
    }
  return bad;
}

std::optional<int> mor_inverse(const FinCat& c, int f) {
  for (int g : c.hom(c.tgt(f), c.src(f)))
    if (c.compose(g, f) == c.id(c.src(f)) && c.compose(f, g) == c.id(c.tgt(f))) return g;
  return std::nullopt;
}

namespace {
int uf_find(std::vector<int>& up, int x) {
  while (up[x] != x) x = up[x] = up[up[x]];
  return x;
}
}  // namespace

std::vector<int> iso_classes(const FinCat& c) {
  std::vector<int> up(c.n_obj);
  for (int i = 0; i < c.n_obj; ++i) up[i] = i;
  for (int f = 0; f < c.n_mor(); ++f)
    if (mor_inverse(c, f)) {
      int a = uf_find(up, c.src(f)), b = uf_find(up, c.tgt(f));
      if (a != b) up[std::max(a, b)] = std::min(a, b);
    }
  std::vector<int> cls(c.n_obj, -1);
  int next = 0;
  for (int i = 0; i < c.n_obj; ++i) {
    int r = uf_find(up, i);
    if (cls[r] < 0) cls[r] = next++;
    cls[i] = cls[r];
  }
  return cls;
}

std::vector<std::string> check_functor(const FinCat& a, const FinCat& b, const FinFunctor& f) {
  std::vector<std::string> bad;
  if (static_cast<int>(f.omap.size()) != a.n_obj ||
      static_cast<int>(f.mmap.size()) != a.n_mor()) {
    bad.push_back("map lengths do not match the source category");
    return bad;
  }
  for (int x = 0; x < a.n_obj; ++x)
    if (f.omap[x] < 0 || f.omap[x] >= b.n_obj)
      bad.push_back("object " + std::to_string(x) + " maps out of range");
  for (int m = 0; m < a.n_mor(); ++m)
    if (f.mmap[m] < 0 || f.mmap[m] >= b.n_mor())
      bad.push_back("morphism " + std::to_string(m) + " maps out of range");
  if (!bad.empty()) return bad;
  for (int m = 0; m < a.n_mor(); ++m) {
    int fm = f.mmap[m];
    if (b.src(fm) != f.omap[a.src(m)] || b.tgt(fm) != f.omap[a.tgt(m)])
      bad.push_back("morphism " + std::to_string(m) + " has wrong image endpoints");
  }
  for (int x = 0; x < a.n_obj; ++x)
    if (f.mmap[a.id(x)] != b.id(f.omap[x]))
      bad.push_back("identity of object " + std::to_string(x) + " not preserved");
  for (int g = 0; g < a.n_mor(); ++g)
    for (int h = 0; h < a.n_mor(); ++h) {
      if (!a.composable(g, h)) continue;
      if (f.mmap[a.compose(g, h)] != b.compose(f.mmap[g], f.mmap[h]))
        bad.push_back("composition not preserved on (" + std::to_string(g) + "," +
                      std::to_string(h) + ")");
    }
  return bad;
}

FinFunctor identity_functor(const FinCat& a) {
  FinFunctor f;
  f.omap.resize(a.n_obj);
  f.mmap.resize(a.n_mor());
  for (int i = 0; i < a.n_obj; ++i) f.omap[i] = i;
  for (int i = 0; i < a.n_mor(); ++i) f.mmap[i] = i;
  return f;
}

FinFunctor compose_functors(const FinFunctor& g, const FinFunctor& f) {
  FinFunctor r;
  r.omap.resize(f.omap.size());
  r.mmap.resize(f.mmap.size());
  for (size_t i = 0; i < f.omap.size(); ++i) r.omap[i] = g.omap[f.omap[i]];
  for (size_t i = 0; i < f.mmap.size(); ++i) r.mmap[i] = g.mmap[f.mmap[i]];
  return r;
}

std::vector<std::string> check_natural(const FinCat& a, const FinCat& b, const FinFunctor& f,
                                       const FinFunctor& g, const NatTransf& eta) {
  std::vector<std::string> bad;
  if (static_cast<int>(eta.size()) != a.n_obj) {
    bad.push_back("component count differs from object count");
    return bad;
  }
  for (int x = 0; x < a.n_obj; ++x) {
    int e = eta[x];
    if (e < 0 || e >= b.n_mor() || b.src(e) != f.omap[x] || b.tgt(e) != g.omap[x])
      bad.push_back("component at object " + std::to_string(x) + " has wrong endpoints");
  }
  if (!bad.empty()) return bad;
  for (int m = 0; m < a.n_mor(); ++m)
    if (b.compose(eta[a.tgt(m)], f.mmap[m]) != b.compose(g.mmap[m], eta[a.src(m)]))
      bad.push_back("naturality square fails at morphism " + std::to_string(m));
  return bad;
}

EquivalenceWitness is_equivalence(const FinCat& a, const FinCat& b, const FinFunctor& f) {
  EquivalenceWitness w;
  for (int x = 0; x < a.n_obj; ++x)
    for (int y = 0; y < a.n_obj; ++y) {
      auto ha = a.hom(x, y);
      auto hb = b.hom(f.omap[x], f.omap[y]);
      std::vector<bool> hit(b.n_mor(), false);
      for (int m : ha) {
        if (hit[f.mmap[m]]) {
          w.failure = "not faithful on hom(" + std::to_string(x) + "," + std::to_string(y) + ")";
          return w;
        }
        hit[f.mmap[m]] = true;
      }
      if (ha.size() != hb.size()) {
        w.failure = "not full on hom(" + std::to_string(x) + "," + std::to_string(y) + ")";
        return w;
      }
    }
  w.preimage_obj.assign(b.n_obj, -1);
  w.iso.assign(b.n_obj, -1);
  for (int y = 0; y < b.n_obj; ++y) {
    for (int x = 0; x < a.n_obj && w.iso[y] < 0; ++x)
      for (int m : b.hom(f.omap[x], y))
        if (mor_inverse(b, m)) {
          w.preimage_obj[y] = x;
          w.iso[y] = m;
          break;
        }
    if (w.iso[y] < 0) {
      w.failure = "object " + std::to_string(y) + " not isomorphic to any image";
      return w;
    }
  }
  w.ok = true;
  return w;
}

namespace {
void functor_rec(const FinCat& a, const FinCat& b, const std::vector<int>& order, size_t k,
                 FinFunctor& f, std::vector<FinFunctor>& out, size_t cap) {
  if (k == order.size()) {
    // pruning above misses triples whose composite is assigned last; recheck
    if (!check_functor(a, b, f).empty()) return;
    if (out.size() >= cap) throw std::runtime_error("functor enumeration cap exceeded");
    out.push_back(f);
    return;
  }
  int m = order[k];
  for (int c : b.hom(f.omap[a.src(m)], f.omap[a.tgt(m)])) {
    f.mmap[m] = c;
    bool ok = true;
    // verify every composition triple whose factors are all assigned so far
    for (int g = 0; g < a.n_mor() && ok; ++g) {
      if (f.mmap[g] < 0) continue;
      if (a.composable(m, g)) {
        int t = a.compose(m, g);
        if (f.mmap[t] >= 0 && f.mmap[t] != b.compose(c, f.mmap[g])) ok = false;
      }
      if (ok && a.composable(g, m)) {
        int t = a.compose(g, m);
        if (f.mmap[t] >= 0 && f.mmap[t] != b.compose(f.mmap[g], c)) ok = false;
      }
    }
    if (ok) functor_rec(a, b, order, k + 1, f, out, cap);
    f.mmap[m] = -1;
  }
}
}  // namespace

std::vector<FinFunctor> all_functors(const FinCat& a, const FinCat& b, size_t cap) {
  std::vector<FinFunctor> out;
  if (b.n_obj == 0) {
    if (a.n_obj == 0) out.push_back(FinFunctor{});
    return out;
  }
  std::vector<int> order;
  FinFunctor f;
  f.omap.assign(a.n_obj, 0);
  std::vector<int> omap(a.n_obj, 0);
  while (true) {
    f.omap = omap;
    f.mmap.assign(a.n_mor(), -1);
    for (int x = 0; x < a.n_obj; ++x) f.mmap[a.id(x)] = b.id(omap[x]);
    order.clear();
    for (int m = 0; m < a.n_mor(); ++m)
      if (!a.is_identity(m)) order.push_back(m);
    functor_rec(a, b, order, 0, f, out, cap);
    int i = a.n_obj - 1;
    while (i >= 0 && omap[i] == b.n_obj - 1) omap[i--] = 0;
    if (i < 0) break;
    ++omap[i];
  }
  return out;
}

CommaUnder comma_under(const FinCat& base, int i) {
  if (i < 0 || i >= base.n_obj) throw std::invalid_argument("comma_under: unknown object id");
  CommaUnder r;
  for (int f = 0; f < base.n_mor(); ++f)
    if (base.src(f) == i) r.obj_mor.push_back(f);
  std::map<int, int> obj_of;  // base morphism -> comma object
  FinCatBuilder bld;
  for (size_t k = 0; k < r.obj_mor.size(); ++k) {
    bld.add_object();
    obj_of[r.obj_mor[k]] = static_cast<int>(k);
  }
  std::map<std::vector<int>, int> mor_of;  // (from, to, h) -> comma morphism
  for (size_t af = 0; af < r.obj_mor.size(); ++af)
    for (size_t at = 0; at < r.obj_mor.size(); ++at) {
      int ff = r.obj_mor[af], ft = r.obj_mor[at];
      for (int h : base.hom(base.tgt(ff), base.tgt(ft)))
        if (base.compose(h, ff) == ft) {
          int m = bld.add_morphism(static_cast<int>(af), static_cast<int>(at));
          r.mor_h.push_back(h);
          mor_of[{static_cast<int>(af), static_cast<int>(at), h}] = m;
          if (af == at && base.is_identity(h)) bld.set_identity(static_cast<int>(af), m);
        }
    }
  for (int m2 = 0; m2 < static_cast<int>(r.mor_h.size()); ++m2)
    for (int m1 = 0; m1 < static_cast<int>(r.mor_h.size()); ++m1) {
      if (bld.mor_tgt[m1] != bld.mor_src[m2]) continue;
      int h = base.compose(r.mor_h[m2], r.mor_h[m1]);
      bld.set_compose(m2, m1, mor_of.at({bld.mor_src[m1], bld.mor_tgt[m2], h}));
    }
  r.cat = bld.build();
  r.to_base.omap.resize(r.obj_mor.size());
  for (size_t k = 0; k < r.obj_mor.size(); ++k) r.to_base.omap[k] = base.tgt(r.obj_mor[k]);
  r.to_base.mmap = r.mor_h;
  return r;
}

namespace {

// Serialized (n, m, src, tgt, comp) after relabeling objects by operm and
// non-identity morphisms by mperm[t-n]. Assumes ident[x] == x.
std::vector<int> relabel_key(const FinCat& c, const std::vector<int>& operm,
                             const std::vector<int>& mperm) {
  int n = c.n_obj, m = c.n_mor();
  std::vector<int> rho(m);
  for (int x = 0; x < n; ++x) rho[x] = operm[x];
  for (int t = n; t < m; ++t) rho[t] = mperm[t - n];
  std::vector<int> nsrc(m), ntgt(m), ncomp(static_cast<size_t>(m) * m, -1);
  for (int f = 0; f < m; ++f) {
    nsrc[rho[f]] = operm[c.src(f)];
    ntgt[rho[f]] = operm[c.tgt(f)];
  }
  for (int g = 0; g < m; ++g)
    for (int f = 0; f < m; ++f) {
      int gf = c.compose(g, f);
      if (gf >= 0) ncomp[static_cast<size_t>(rho[g]) * m + rho[f]] = rho[gf];
    }
  std::vector<int> key{n, m};
  key.insert(key.end(), nsrc.begin(), nsrc.end());
  key.insert(key.end(), ntgt.begin(), ntgt.end());
  key.insert(key.end(), ncomp.begin(), ncomp.end());
  return key;
}

std::vector<int> canonical_cat_key(const FinCat& c) {
  int n = c.n_obj, m = c.n_mor();
  std::vector<int> operm(n), best;
  std::iota(operm.begin(), operm.end(), 0);
  do {
    std::vector<int> mperm(m - n);
    std::iota(mperm.begin(), mperm.end(), n);
    do {
      auto key = relabel_key(c, operm, mperm);
      if (best.empty() || key < best) best = key;
    } while (std::next_permutation(mperm.begin(), mperm.end()));
  } while (std::next_permutation(operm.begin(), operm.end()));
  return best;
}

FinCat cat_from_key(const std::vector<int>& key) {
  FinCat c;
  c.n_obj = key[0];
  int m = key[1];
  c.mor_src.assign(key.begin() + 2, key.begin() + 2 + m);
  c.mor_tgt.assign(key.begin() + 2 + m, key.begin() + 2 + 2 * m);
  c.comp.assign(key.begin() + 2 + 2 * m, key.end());
  c.ident.resize(c.n_obj);
  std::iota(c.ident.begin(), c.ident.end(), 0);
  return c;
}

// Fill the undetermined composition cells in every consistent way; each
// completed table that passes check_category is canonicalized into seen.
void fill_comp_rec(FinCat& c, const std::vector<std::pair<int, int>>& cells,
                   const std::vector<std::vector<int>>& vals, size_t at,
                   std::set<std::vector<int>>& seen, std::vector<FinCat>& out) {
  if (at == cells.size()) {
    if (!check_category(c).empty()) return;
    auto key = canonical_cat_key(c);
    if (seen.insert(key).second) out.push_back(cat_from_key(key));
    return;
  }
  auto [g, f] = cells[at];
  for (int v : vals[at]) {
    c.comp[static_cast<size_t>(g) * c.n_mor() + f] = v;
    fill_comp_rec(c, cells, vals, at + 1, seen, out);
  }
  c.comp[static_cast<size_t>(g) * c.n_mor() + f] = -1;
}

}  // namespace

std::vector<FinCat> small_categories(int max_obj, int max_mor) {
  std::vector<FinCat> out;
  std::set<std::vector<int>> seen;
  for (int n = 0; n <= max_obj; ++n) {
    if (n == 0) {
      out.push_back(FinCat{});
      continue;
    }
    for (int k = n; k <= max_mor; ++k) {
      int extra = k - n;
      std::vector<int> st(extra, 0);  // packed (src, tgt) per non-identity
      while (true) {
        FinCat c;
        c.n_obj = n;
        c.mor_src.resize(k);
        c.mor_tgt.resize(k);
        c.ident.resize(n);
        for (int x = 0; x < n; ++x) {
          c.mor_src[x] = c.mor_tgt[x] = x;
          c.ident[x] = x;
        }
        for (int t = 0; t < extra; ++t) {
          c.mor_src[n + t] = st[t] / n;
          c.mor_tgt[n + t] = st[t] % n;
        }
        c.comp.assign(static_cast<size_t>(k) * k, -1);
        for (int g = 0; g < k; ++g)
          if (c.src(g) < n) c.comp[static_cast<size_t>(g) * k + c.src(g)] = g;
        for (int f = 0; f < k; ++f)
          if (c.tgt(f) < n) c.comp[static_cast<size_t>(c.tgt(f)) * k + f] = f;
        std::vector<std::pair<int, int>> cells;
        std::vector<std::vector<int>> vals;
        for (int g = n; g < k; ++g)
          for (int f = n; f < k; ++f) {
            if (c.tgt(f) != c.src(g)) continue;
            cells.push_back({g, f});
            std::vector<int> vs;
            for (int h = 0; h < k; ++h)
              if (c.src(h) == c.src(f) && c.tgt(h) == c.tgt(g)) vs.push_back(h);
            vals.push_back(vs);
          }
        fill_comp_rec(c, cells, vals, 0, seen, out);
        int t = extra - 1;
        while (t >= 0 && st[t] == n * n - 1) st[t--] = 0;
        if (t < 0) break;
        ++st[t];
      }
    }
  }
  return out;
}

namespace {
int chain_end(const FinCat& c, const std::vector<int>& chain) {
  return chain.size() == 1 ? chain[0] : c.tgt(chain.back());
}
}  // namespace

TruncatedSSet nerve_truncated(const FinCat& c, int max_dim) {
  TruncatedSSet s;
  s.max_dim = max_dim;
  s.cells.resize(max_dim + 1);
  std::vector<std::map<std::vector<int>, int>> index(max_dim + 1);
  for (int x = 0; x < c.n_obj; ++x) {
    index[0][{x}] = static_cast<int>(s.cells[0].size());
    s.cells[0].push_back({x});
  }
  for (int n = 1; n <= max_dim; ++n)
    for (const auto& ch : s.cells[n - 1]) {
      int end = chain_end(c, ch);
      for (int f = 0; f < c.n_mor(); ++f) {
        if (c.src(f) != end) continue;
        auto ext = ch;
        ext.push_back(f);
        index[n][ext] = static_cast<int>(s.cells[n].size());
        s.cells[n].push_back(ext);
      }
    }
  s.face.resize(max_dim + 1);
  for (int n = 1; n <= max_dim; ++n) {
    s.face[n].assign(n + 1, std::vector<int>(s.cells[n].size()));
    for (size_t k = 0; k < s.cells[n].size(); ++k) {
      const auto& ch = s.cells[n][k];
      for (int i = 0; i <= n; ++i) {
        std::vector<int> d;
        if (i == 0) {
          d.push_back(c.tgt(ch[1]));
          for (int j = 2; j <= n; ++j) d.push_back(ch[j]);
        } else if (i == n) {
          d.assign(ch.begin(), ch.end() - 1);
        } else {
          d.assign(ch.begin(), ch.begin() + i);
          d.push_back(c.compose(ch[i + 1], ch[i]));
          for (int j = i + 2; j <= n; ++j) d.push_back(ch[j]);
        }
        s.face[n][i][k] = index[n - 1].at(d);
      }
    }
  }
  s.degen.resize(max_dim);
  for (int n = 0; n < max_dim; ++n) {
    s.degen[n].assign(n + 1, std::vector<int>(s.cells[n].size()));
    for (size_t k = 0; k < s.cells[n].size(); ++k) {
      const auto& ch = s.cells[n][k];
      for (int i = 0; i <= n; ++i) {
        int v = i == 0 ? ch[0] : c.tgt(ch[i]);
        std::vector<int> d(ch.begin(), ch.begin() + i + 1);
        d.push_back(c.id(v));
        for (int j = i + 1; j <= n; ++j) d.push_back(ch[j]);
        s.degen[n][i][k] = index[n + 1].at(d);
      }
    }
  }
  return s;
}

std::vector<int> TruncatedSSet::counts() const {
  std::vector<int> out;
  for (const auto& lv : cells) out.push_back(static_cast<int>(lv.size()));
  return out;
}

std::vector<std::string> check_simplicial(const TruncatedSSet& s) {
  std::vector<std::string> bad;
  auto note = [&](int n, int k, const std::string& what) {
    bad.push_back(what + " fails at dim " + std::to_string(n) + " cell " + std::to_string(k));
  };
  for (int n = 2; n <= s.max_dim; ++n)
    for (size_t k = 0; k < s.cells[n].size(); ++k)
      for (int j = 1; j <= n; ++j)
        for (int i = 0; i < j; ++i)
          if (s.face[n - 1][i][s.face[n][j][k]] != s.face[n - 1][j - 1][s.face[n][i][k]])
            note(n, static_cast<int>(k), "d_i d_j");
  for (int n = 0; n + 2 <= s.max_dim; ++n)
    for (size_t k = 0; k < s.cells[n].size(); ++k)
      for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= j; ++i)
          if (s.degen[n + 1][i][s.degen[n][j][k]] != s.degen[n + 1][j + 1][s.degen[n][i][k]])
            note(n, static_cast<int>(k), "s_i s_j");
  for (int n = 0; n + 1 <= s.max_dim; ++n)
    for (size_t k = 0; k < s.cells[n].size(); ++k)
      for (int j = 0; j <= n; ++j) {
        int sj = s.degen[n][j][k];
        for (int i = 0; i <= n + 1; ++i) {
          int lhs = s.face[n + 1][i][sj];
          if (i == j || i == j + 1) {
            if (lhs != static_cast<int>(k)) note(n, static_cast<int>(k), "d_i s_i");
          } else if (i < j) {
            if (lhs != s.degen[n - 1][j - 1][s.face[n][i][k]]) note(n, static_cast<int>(k), "d_i s_j (i<j)");
          } else {
            if (lhs != s.degen[n - 1][j][s.face[n][i - 1][k]]) note(n, static_cast<int>(k), "d_i s_j (i>j+1)");
          }
        }
      }
  return bad;
}

FinCat fincat_terminal() {
  FinCatBuilder b;
  b.add_object();
  b.set_identity(0, b.add_morphism(0, 0));
  return b.build();
}

FinCat fincat_delta1() {
  FinCatBuilder b;
  b.add_object();
  b.add_object();
  b.set_identity(0, b.add_morphism(0, 0));
  b.set_identity(1, b.add_morphism(1, 1));
  b.add_morphism(0, 1);
  return b.build();
}

FinCat fincat_delta2() {
  FinCatBuilder b;
  for (int i = 0; i < 3; ++i) {
    b.add_object();
    b.set_identity(i, b.add_morphism(i, i));
  }
  int f01 = b.add_morphism(0, 1);
  int f12 = b.add_morphism(1, 2);
  int f02 = b.add_morphism(0, 2);
  b.set_compose(f12, f01, f02);
  return b.build();
}

FinCat fincat_contractible_pair() {
  FinCatBuilder b;
  b.add_object();
  b.add_object();
  b.set_identity(0, b.add_morphism(0, 0));
  b.set_identity(1, b.add_morphism(1, 1));
  int f = b.add_morphism(0, 1);
  int g = b.add_morphism(1, 0);
  b.set_compose(g, f, 0);
  b.set_compose(f, g, 1);
  return b.build();
}

FinCat fincat_pair_groupoid_z2() {
  // objects 0,1; morphism (x,y,eps) at id 4*... use index x*4 + y*2 + eps? keep a table
  FinCatBuilder b;
  b.add_object();
  b.add_object();
  int idx[2][2][2];
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int e = 0; e < 2; ++e) idx[x][y][e] = b.add_morphism(x, y);
  b.set_identity(0, idx[0][0][0]);
  b.set_identity(1, idx[1][1][0]);
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int z = 0; z < 2; ++z)
        for (int e1 = 0; e1 < 2; ++e1)
          for (int e2 = 0; e2 < 2; ++e2)
            b.set_compose(idx[y][z][e2], idx[x][y][e1], idx[x][z][e1 ^ e2]);
  return b.build();
}

}  // namespace rigidtrace
