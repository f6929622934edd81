#include "rigidtrace/smc.hpp"

#include <algorithm>
#include <numeric>

namespace rigidtrace {

PermCat::Mor PermCat::id(Obj x) const {
  Mor m{x, std::vector<int>(x)};
  std::iota(m.p.begin(), m.p.end(), 0);
  return m;
}

PermCat::Mor PermCat::compose(const Mor& g, const Mor& f) const {
  if (f.n != g.n) throw std::invalid_argument("compose: strand count mismatch");
  Mor r{f.n, std::vector<int>(f.n)};
  for (int i = 0; i < f.n; ++i) r.p[i] = g.p[f.p[i]];
  return r;
}

PermCat::Mor PermCat::tensor_mor(const Mor& f, const Mor& g) const {
  Mor r{f.n + g.n, std::vector<int>(f.n + g.n)};
  for (int i = 0; i < f.n; ++i) r.p[i] = f.p[i];
  for (int i = 0; i < g.n; ++i) r.p[f.n + i] = f.n + g.p[i];
  return r;
}

PermCat::Mor PermCat::sym(Obj x, Obj y) const {
  Mor r{x + y, std::vector<int>(x + y)};
  for (int i = 0; i < x; ++i) r.p[i] = y + i;
  for (int j = 0; j < y; ++j) r.p[x + j] = j;
  return r;
}

std::vector<PermCat::Obj> PermCat::objects() const {
  std::vector<Obj> out;
  for (int i = 0; i <= maxn; ++i) out.push_back(i);
  return out;
}

long long PermCat::hom_size(Obj a, Obj b) const {
  if (a != b) return 0;
  long long n = 1;
  for (int i = 2; i <= a; ++i) n *= i;
  return n;
}

std::vector<PermCat::Mor> PermCat::hom(Obj a, Obj b) const {
  std::vector<Mor> out;
  if (a != b) return out;
  Mor m = id(a);
  do out.push_back(m);
  while (std::next_permutation(m.p.begin(), m.p.end()));
  return out;
}

bool PermCat::is_iso(const Mor&) const { return true; }

PermCat::Mor PermCat::inv(const Mor& f) const {
  Mor r{f.n, std::vector<int>(f.p.size())};
  for (size_t i = 0; i < f.p.size(); ++i) r.p[f.p[i]] = static_cast<int>(i);
  return r;
}

std::vector<TableSMC::Obj> TableSMC::objects() const {
  std::vector<Obj> out;
  for (int i = 0; i < cat.n_obj; ++i) out.push_back(i);
  return out;
}

std::vector<std::string> check_table_smc(const TableSMC& t) {
  std::vector<std::string> bad = check_category(t.cat);
  if (!bad.empty()) return bad;
  size_t no = t.cat.n_obj, nm = t.cat.n_mor();
  if (t.tens_obj.size() != no * no || t.tens_mor.size() != nm * nm ||
      t.sym_tab.size() != no * no) {
    bad.push_back("tensor/symmetry table size mismatch");
    return bad;
  }
  for (int v : t.tens_obj)
    if (v < 0 || v >= t.cat.n_obj) bad.push_back("tensor object entry out of range");
  for (int v : t.tens_mor)
    if (v < 0 || v >= t.cat.n_mor()) bad.push_back("tensor morphism entry out of range");
  for (int v : t.sym_tab)
    if (v < 0 || v >= t.cat.n_mor()) bad.push_back("symmetry entry out of range");
  if (!bad.empty()) return bad;
  // endpoint discipline of the morphism tensor
  for (int f = 0; f < t.cat.n_mor(); ++f)
    for (int g = 0; g < t.cat.n_mor(); ++g) {
      int fg = t.tensor_mor(f, g);
      if (t.src(fg) != t.tensor_obj(t.src(f), t.src(g)) ||
          t.tgt(fg) != t.tensor_obj(t.tgt(f), t.tgt(g)))
        bad.push_back("morphism tensor has wrong endpoints on (" + std::to_string(f) + "," +
                      std::to_string(g) + ")");
    }
  for (int a = 0; a < t.cat.n_obj; ++a)
    for (int b = 0; b < t.cat.n_obj; ++b) {
      int s = t.sym(a, b);
      if (t.src(s) != t.tensor_obj(a, b) || t.tgt(s) != t.tensor_obj(b, a))
        bad.push_back("symmetry has wrong endpoints on (" + std::to_string(a) + "," +
                      std::to_string(b) + ")");
    }
  if (!bad.empty()) return bad;
  auto objs = t.objects();
  std::vector<int> mors(t.cat.n_mor());
  std::iota(mors.begin(), mors.end(), 0);
  auto more = validate_smc(t, objs, mors);
  bad.insert(bad.end(), more.begin(), more.end());
  return bad;
}

TableSMC smc_from_cmonoid(const FinCMonoid& e) {
  TableSMC t;
  FinCatBuilder b;
  for (int i = 0; i < e.n; ++i) {
    b.add_object();
    b.set_identity(i, b.add_morphism(i, i));
  }
  t.cat = b.build();  // morphism id i = identity of object i
  t.unit_obj = e.unit;
  t.tens_obj.resize(static_cast<size_t>(e.n) * e.n);
  t.tens_mor.resize(static_cast<size_t>(e.n) * e.n);
  t.sym_tab.resize(static_cast<size_t>(e.n) * e.n);
  for (int a = 0; a < e.n; ++a)
    for (int b2 = 0; b2 < e.n; ++b2) {
      size_t k = static_cast<size_t>(a) * e.n + b2;
      t.tens_obj[k] = e.mul(a, b2);
      t.tens_mor[k] = e.mul(a, b2);
      t.sym_tab[k] = e.mul(a, b2);
    }
  return t;
}

TableSMC smc_idempotent_endo() {
  TableSMC t;
  FinCatBuilder b;
  b.add_object();  // 0 = unit
  b.add_object();  // 1 = a
  int iu = b.add_morphism(0, 0);
  int ia = b.add_morphism(1, 1);
  int ee = b.add_morphism(1, 1);
  b.set_identity(0, iu);
  b.set_identity(1, ia);
  b.set_compose(ee, ee, ee);
  t.cat = b.build();
  t.unit_obj = 0;
  t.tens_obj = {0, 1, 1, 1};
  // unit strand is neutral; on a tensor a every square with e collapses to e
  t.tens_mor.assign(9, -1);
  auto set = [&](int f, int g, int v) { t.tens_mor[static_cast<size_t>(f) * 3 + g] = v; };
  set(iu, iu, iu);
  set(iu, ia, ia);
  set(iu, ee, ee);
  set(ia, iu, ia);
  set(ee, iu, ee);
  set(ia, ia, ia);
  set(ia, ee, ee);
  set(ee, ia, ee);
  set(ee, ee, ee);
  t.sym_tab = {iu, ia, ia, ia};
  return t;
}

TableSMC table_smc_restrict(const TableSMC& t, const std::vector<int>& objs) {
  std::vector<int> oidx(t.cat.n_obj, -1);
  for (size_t i = 0; i < objs.size(); ++i) oidx[objs[i]] = static_cast<int>(i);
  if (oidx[t.unit_obj] < 0) throw std::invalid_argument("restriction must keep the unit");
  for (int a : objs)
    for (int b : objs)
      if (oidx[t.tensor_obj(a, b)] < 0)
        throw std::invalid_argument("restriction not closed under tensor");
  std::vector<int> midx(t.cat.n_mor(), -1);
  std::vector<int> keep;
  for (int m = 0; m < t.cat.n_mor(); ++m)
    if (oidx[t.src(m)] >= 0 && oidx[t.tgt(m)] >= 0) {
      midx[m] = static_cast<int>(keep.size());
      keep.push_back(m);
    }
  FinCatBuilder b;
  for (size_t i = 0; i < objs.size(); ++i) b.add_object();
  for (int m : keep) b.add_morphism(oidx[t.src(m)], oidx[t.tgt(m)]);
  for (size_t i = 0; i < objs.size(); ++i) b.set_identity(static_cast<int>(i), midx[t.id(objs[i])]);
  for (int g : keep)
    for (int f : keep)
      if (t.cat.composable(g, f)) b.set_compose(midx[g], midx[f], midx[t.compose(g, f)]);
  TableSMC r;
  r.cat = b.build();
  r.unit_obj = oidx[t.unit_obj];
  size_t no = objs.size(), nm = keep.size();
  r.tens_obj.resize(no * no);
  r.sym_tab.resize(no * no);
  r.tens_mor.resize(nm * nm);
  for (size_t i = 0; i < no; ++i)
    for (size_t j = 0; j < no; ++j) {
      r.tens_obj[i * no + j] = oidx[t.tensor_obj(objs[i], objs[j])];
      r.sym_tab[i * no + j] = midx[t.sym(objs[i], objs[j])];
    }
  for (size_t i = 0; i < nm; ++i)
    for (size_t j = 0; j < nm; ++j) r.tens_mor[i * nm + j] = midx[t.tensor_mor(keep[i], keep[j])];
  return r;
}

MatrixCat<Rat> matrix_cat_rat(int maxdim) { return MatrixCat<Rat>{Rat(0), maxdim, -1}; }

MatrixCat<Fp> matrix_cat_fp(std::int64_t p, int maxdim) {
  return MatrixCat<Fp>{Fp(0, p), maxdim, p};
}

}  // namespace rigidtrace
