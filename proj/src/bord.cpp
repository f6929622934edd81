#include "rigidtrace/bord.hpp"

namespace rigidtrace {

std::vector<int> FinGroup::class_reps() const {
  std::vector<int> out;
  for (int g = 0; g < n; ++g)
    if (class_rep(g) == g) out.push_back(g);
  return out;
}

std::vector<std::string> check_group(const FinGroup& g) {
  std::vector<std::string> out;
  if (g.n < 1) {
    out.push_back("order must be positive");
    return out;
  }
  if (static_cast<int>(g.mul.size()) != g.n * g.n) {
    out.push_back("multiplication table has wrong size");
    return out;
  }
  for (int v : g.mul)
    if (v < 0 || v >= g.n) {
      out.push_back("table entry outside the element range");
      return out;
    }
  if (g.unit < 0 || g.unit >= g.n) {
    out.push_back("unit outside the element range");
    return out;
  }
  for (int a = 0; a < g.n; ++a) {
    if (g.op(g.unit, a) != a) out.push_back("unit fails on the left of " + std::to_string(a));
    if (g.op(a, g.unit) != a) out.push_back("unit fails on the right of " + std::to_string(a));
  }
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b)
      for (int c = 0; c < g.n; ++c)
        if (g.op(g.op(a, b), c) != g.op(a, g.op(b, c))) {
          out.push_back("not associative at (" + std::to_string(a) + "," + std::to_string(b) +
                        "," + std::to_string(c) + ")");
          return out;
        }
  for (int a = 0; a < g.n; ++a) {
    bool has = false;
    for (int b = 0; b < g.n; ++b)
      if (g.op(a, b) == g.unit && g.op(b, a) == g.unit) has = true;
    if (!has) out.push_back("element " + std::to_string(a) + " has no inverse");
  }
  return out;
}

FinGroup group_trivial() { return FinGroup{1, 0, {0}}; }

FinGroup group_cyclic(int n) {
  if (n < 1) throw std::invalid_argument("group_cyclic: order must be positive");
  FinGroup g{n, 0, {}};
  g.mul.assign(static_cast<size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.mul[static_cast<size_t>(a) * n + b] = (a + b) % n;
  return g;
}

FinGroup group_sym3() {
  const std::vector<std::vector<int>> perms = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                               {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
  FinGroup g{6, 0, {}};
  g.mul.assign(36, -1);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::vector<int> c(3);
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      for (int k = 0; k < 6; ++k)
        if (perms[k] == c) g.mul[static_cast<size_t>(a) * 6 + b] = k;
    }
  return g;
}

std::vector<std::string> check_bordism(const FinGroup& grp, const Bordism& b) {
  std::vector<std::string> out;
  for (int s : b.src)
    if (s != 1 && s != -1) {
      out.push_back("source signs must be +1 or -1");
      return out;
    }
  for (int s : b.tgt)
    if (s != 1 && s != -1) {
      out.push_back("target signs must be +1 or -1");
      return out;
    }
  int total = static_cast<int>(b.src.size() + b.tgt.size());
  std::vector<int> seen(total, 0);
  int last_a = -1;
  for (const BordArc& a : b.arcs) {
    if (a.a < 0 || a.b < 0 || a.a >= total || a.b >= total) {
      out.push_back("arc endpoint outside the slot range");
      return out;
    }
    if (a.a >= a.b) out.push_back("arc endpoints must be strictly ordered");
    if (a.a < last_a) out.push_back("arcs must be sorted by least endpoint");
    last_a = a.a;
    ++seen[a.a];
    ++seen[a.b];
    if (a.g < 0 || a.g >= grp.n)
      out.push_back("arc label outside the group");
    else if (bord_slot_enters(b, a.a) == bord_slot_enters(b, a.b))
      out.push_back("arc needs one entering and one leaving endpoint");
  }
  for (int s = 0; s < total; ++s)
    if (seen[s] != 1) {
      out.push_back("matching is not perfect at slot " + std::to_string(s));
      break;
    }
  for (size_t i = 0; i < b.circles.size(); ++i) {
    int c = b.circles[i];
    if (c < 0 || c >= grp.n)
      out.push_back("circle label outside the group");
    else if (grp.class_rep(c) != c)
      out.push_back("circle label is not a class representative");
    if (i > 0 && c < b.circles[i - 1]) out.push_back("circles must be sorted");
  }
  return out;
}

Bordism bord_strand(const FinGroup& grp, int g) {
  if (g < 0 || g >= grp.n) throw std::invalid_argument("bord_strand: label outside the group");
  return Bordism{{1}, {1}, {BordArc{0, 1, g}}, {}};
}

Bordism bord_trace(const FinGroup& grp, int g) {
  if (g < 0 || g >= grp.n) throw std::invalid_argument("bord_trace: label outside the group");
  return Bordism{{}, {}, {}, {grp.class_rep(g)}};
}

SignedWord BordCat::tensor_obj(const Obj& a, const Obj& b) const {
  SignedWord out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Bordism BordCat::id(const Obj& x) const {
  Bordism out{x, x, {}, {}};
  int m = static_cast<int>(x.size());
  for (int i = 0; i < m; ++i) out.arcs.push_back({i, m + i, grp.unit});
  return out;
}

namespace {

// per-slot view of the matching: partner slot and label read away from here
struct ArcTable {
  std::vector<int> other;
  std::vector<int> lab;
};

ArcTable arc_table(const FinGroup& grp, const Bordism& b) {
  ArcTable t;
  int total = static_cast<int>(b.src.size() + b.tgt.size());
  t.other.assign(total, -1);
  t.lab.assign(total, grp.unit);
  for (const BordArc& a : b.arcs) {
    t.other[a.a] = a.b;
    t.lab[a.a] = a.g;
    t.other[a.b] = a.a;
    t.lab[a.b] = grp.inv(a.g);
  }
  return t;
}

}  // namespace

Bordism BordCat::compose(const Mor& g, const Mor& f) const {
  if (f.tgt != g.src) throw std::invalid_argument("compose: boundary words do not match");
  int mf = static_cast<int>(f.src.size());
  int k = static_cast<int>(f.tgt.size());
  int mg = k;
  int ng = static_cast<int>(g.tgt.size());
  ArcTable tf = arc_table(grp, f);
  ArcTable tg = arc_table(grp, g);
  Bordism out{f.src, g.tgt, {}, {}};
  int m = mf, total = mf + ng;
  std::vector<char> freeused(total, 0);
  std::vector<char> glued(static_cast<size_t>(k), 0);
  // strands between free boundary slots; monodromy composes later-on-the-left
  for (int cs = 0; cs < total; ++cs) {
    if (freeused[cs]) continue;
    int side = cs < m ? 0 : 1;  // 0 walks in f, 1 walks in g
    int slot = cs < m ? cs : mg + (cs - m);
    int acc = grp.unit;
    int ce = -1;
    while (true) {
      const ArcTable& t = side == 0 ? tf : tg;
      int nxt = t.other[slot];
      acc = grp.op(t.lab[slot], acc);
      if (side == 0) {
        if (nxt < mf) {
          ce = nxt;
          break;
        }
        glued[nxt - mf] = 1;
        side = 1;
        slot = nxt - mf;
      } else {
        if (nxt >= mg) {
          ce = m + (nxt - mg);
          break;
        }
        glued[nxt] = 1;
        side = 0;
        slot = mf + nxt;
      }
    }
    freeused[cs] = 1;
    freeused[ce] = 1;
    out.arcs.push_back({cs, ce, acc});
  }
  // leftover glue points lie on closed loops; each yields one circle
  std::vector<int> loops;
  for (int j0 = 0; j0 < k; ++j0) {
    if (glued[j0]) continue;
    int side = 1, slot = j0, acc = grp.unit;
    while (true) {
      const ArcTable& t = side == 1 ? tg : tf;
      int nxt = t.other[slot];
      acc = grp.op(t.lab[slot], acc);
      int j = side == 1 ? nxt : nxt - mf;
      glued[j] = 1;
      if (side == 1) {
        side = 0;
        slot = mf + j;
      } else {
        side = 1;
        slot = j;
      }
      if (side == 1 && slot == j0) break;
    }
    loops.push_back(grp.class_rep(acc));
  }
  out.circles = f.circles;
  out.circles.insert(out.circles.end(), g.circles.begin(), g.circles.end());
  out.circles.insert(out.circles.end(), loops.begin(), loops.end());
  std::sort(out.circles.begin(), out.circles.end());
  return out;
}

Bordism BordCat::tensor_mor(const Mor& f, const Mor& g) const {
  int mf = static_cast<int>(f.src.size());
  int nf = static_cast<int>(f.tgt.size());
  int mg = static_cast<int>(g.src.size());
  Bordism out{tensor_obj(f.src, g.src), tensor_obj(f.tgt, g.tgt), {}, {}};
  auto fslot = [&](int s) { return s < mf ? s : mg + s; };
  auto gslot = [&](int s) { return s < mg ? mf + s : mf + nf + s; };
  for (const BordArc& a : f.arcs) out.arcs.push_back({fslot(a.a), fslot(a.b), a.g});
  for (const BordArc& a : g.arcs) out.arcs.push_back({gslot(a.a), gslot(a.b), a.g});
  std::sort(out.arcs.begin(), out.arcs.end(),
            [](const BordArc& x, const BordArc& y) { return x.a < y.a; });
  out.circles = f.circles;
  out.circles.insert(out.circles.end(), g.circles.begin(), g.circles.end());
  std::sort(out.circles.begin(), out.circles.end());
  return out;
}

Bordism BordCat::sym(const Obj& x, const Obj& y) const {
  int p = static_cast<int>(x.size());
  int q = static_cast<int>(y.size());
  Bordism out{tensor_obj(x, y), tensor_obj(y, x), {}, {}};
  for (int i = 0; i < p; ++i) out.arcs.push_back({i, p + q + q + i, grp.unit});
  for (int j = 0; j < q; ++j) out.arcs.push_back({p + j, p + q + j, grp.unit});
  return out;
}

std::vector<SignedWord> BordCat::objects() const {
  std::vector<SignedWord> out{{}};
  std::vector<SignedWord> layer{{}};
  for (int len = 1; len <= max_points; ++len) {
    std::vector<SignedWord> next;
    for (const SignedWord& w : layer)
      for (int s : {1, -1}) {
        SignedWord v = w;
        v.push_back(s);
        next.push_back(std::move(v));
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

namespace {

// sign-compatible perfect matchings, arcs listed smallest endpoint first
void matchings_rec(const Bordism& shape, std::vector<char>& used, std::vector<BordArc>& cur,
                   std::vector<std::vector<BordArc>>& out) {
  int total = static_cast<int>(used.size());
  int i = 0;
  while (i < total && used[i]) ++i;
  if (i == total) {
    out.push_back(cur);
    return;
  }
  used[i] = 1;
  for (int j = i + 1; j < total; ++j) {
    if (used[j]) continue;
    if (bord_slot_enters(shape, i) == bord_slot_enters(shape, j)) continue;
    used[j] = 1;
    cur.push_back({i, j, 0});
    matchings_rec(shape, used, cur, out);
    cur.pop_back();
    used[j] = 0;
  }
  used[i] = 0;
}

long long count_matchings(const Bordism& shape, std::vector<char>& used) {
  int total = static_cast<int>(used.size());
  int i = 0;
  while (i < total && used[i]) ++i;
  if (i == total) return 1;
  long long sum = 0;
  used[i] = 1;
  for (int j = i + 1; j < total; ++j) {
    if (used[j]) continue;
    if (bord_slot_enters(shape, i) == bord_slot_enters(shape, j)) continue;
    used[j] = 1;
    sum += count_matchings(shape, used);
    used[j] = 0;
  }
  used[i] = 0;
  return sum;
}

// nondecreasing class-representative tuples of each length up to the cap
void circle_sets_rec(const std::vector<int>& reps, int cap, size_t from, std::vector<int>& cur,
                     std::vector<std::vector<int>>& out) {
  out.push_back(cur);
  if (static_cast<int>(cur.size()) == cap) return;
  for (size_t i = from; i < reps.size(); ++i) {
    cur.push_back(reps[i]);
    circle_sets_rec(reps, cap, i, cur, out);
    cur.pop_back();
  }
}

}  // namespace

long long BordCat::hom_size(const Obj& a, const Obj& b) const {
  Bordism shape{a, b, {}, {}};
  int total = static_cast<int>(a.size() + b.size());
  if (total % 2 != 0) return 0;
  std::vector<char> used(total, 0);
  long long match = count_matchings(shape, used);
  long long labels = 1;
  for (int i = 0; i < total / 2; ++i) labels *= grp.n;
  std::vector<int> reps = grp.class_reps();
  std::vector<std::vector<int>> sets;
  std::vector<int> cur;
  circle_sets_rec(reps, max_circles, 0, cur, sets);
  return match * labels * static_cast<long long>(sets.size());
}

std::vector<Bordism> BordCat::hom(const Obj& a, const Obj& b) const {
  Bordism shape{a, b, {}, {}};
  int total = static_cast<int>(a.size() + b.size());
  std::vector<Bordism> out;
  if (total % 2 != 0) return out;
  std::vector<char> used(total, 0);
  std::vector<BordArc> cur;
  std::vector<std::vector<BordArc>> matchings;
  matchings_rec(shape, used, cur, matchings);
  std::vector<int> reps = grp.class_reps();
  std::vector<std::vector<int>> sets;
  std::vector<int> circ;
  circle_sets_rec(reps, max_circles, 0, circ, sets);
  int arcs = total / 2;
  for (const std::vector<BordArc>& mt : matchings) {
    std::vector<int> digits(static_cast<size_t>(arcs), 0);
    while (true) {
      Bordism m{a, b, mt, {}};
      for (int i = 0; i < arcs; ++i) m.arcs[i].g = digits[i];
      for (const std::vector<int>& cs : sets) {
        m.circles = cs;
        out.push_back(m);
      }
      int i = arcs;
      while (i > 0 && digits[i - 1] == grp.n - 1) digits[--i] = 0;
      if (i == 0) break;
      ++digits[i - 1];
    }
  }
  return out;
}

}  // namespace rigidtrace
