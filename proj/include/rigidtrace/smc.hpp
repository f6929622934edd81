#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rigidtrace/fincat.hpp"
#include "rigidtrace/gamma.hpp"
#include "rigidtrace/matrix.hpp"

namespace rigidtrace {

// A strict symmetric monoidal category is any type C providing:
//   types Obj, Mor (both equality-comparable)
//   unit() -> Obj                        strict two-sided tensor unit
//   tensor_obj(a, b), tensor_mor(f, g)   strictly associative tensor
//   compose(g, f), id(x), src(f), tgt(f)
//   sym(x, y) -> Mor                     symmetry x tensor y -> y tensor x
//   objects() -> vector<Obj>             enumeration view (may be a truncation)
//   hom_size(a, b) -> long long          -1 when not enumerable
//   hom(a, b) -> vector<Mor>             deterministic order, only if enumerable
// Tensor must be strict on the nose; all algorithms below rely on it.
// The nerve and reconstruction machinery additionally needs
//   is_iso(f) -> bool
//   inv(f) -> Mor                        two-sided inverse, throws when absent

template <typename C>
struct DualityDatum {
  typename C::Obj x;
  typename C::Obj dual;
  typename C::Mor t;  // x tensor dual -> unit
  typename C::Mor u;  // unit -> dual tensor x
};

// Both zigzag composites must be identities.
template <typename C>
bool validate_duality(const C& c, const DualityDatum<C>& d) {
  auto unit = c.unit();
  if (!(c.src(d.t) == c.tensor_obj(d.x, d.dual)) || !(c.tgt(d.t) == unit)) return false;
  if (!(c.src(d.u) == unit) || !(c.tgt(d.u) == c.tensor_obj(d.dual, d.x))) return false;
  auto tri1 = c.compose(c.tensor_mor(d.t, c.id(d.x)), c.tensor_mor(c.id(d.x), d.u));
  if (!(tri1 == c.id(d.x))) return false;
  auto tri2 = c.compose(c.tensor_mor(c.id(d.dual), d.t), c.tensor_mor(d.u, c.id(d.dual)));
  return tri2 == c.id(d.dual);
}

enum class SearchStatus { Found, NotRigid, CapExceeded };

template <typename C>
struct FindDualResult {
  SearchStatus status = SearchStatus::NotRigid;
  std::optional<DualityDatum<C>> datum;
  long long searched = 0;  // (t,u) pairs examined
};

// Exhaustive search over candidate duals in enumeration order; for each
// candidate y the two hom-sets are enumerated unless their combined size
// exceeds cap, in which case the candidate is skipped and the overall
// verdict degrades from "not rigid" to "cap exceeded".
template <typename C>
FindDualResult<C> find_dual(const C& c, typename C::Obj x, long long cap = 1000000) {
  FindDualResult<C> r;
  bool skipped = false;
  auto unit = c.unit();
  for (auto y : c.objects()) {
    long long ts = c.hom_size(c.tensor_obj(x, y), unit);
    long long us = c.hom_size(unit, c.tensor_obj(y, x));
    if (ts < 0 || us < 0 || ts + us > cap) {
      skipped = true;
      continue;
    }
    for (const auto& t : c.hom(c.tensor_obj(x, y), unit))
      for (const auto& u : c.hom(unit, c.tensor_obj(y, x))) {
        ++r.searched;
        DualityDatum<C> d{x, y, t, u};
        if (validate_duality(c, d)) {
          r.status = SearchStatus::Found;
          r.datum = d;
          return r;
        }
      }
  }
  r.status = skipped ? SearchStatus::CapExceeded : SearchStatus::NotRigid;
  return r;
}

// Every valid datum for x, in enumeration order.
template <typename C>
std::vector<DualityDatum<C>> all_duals(const C& c, typename C::Obj x, long long cap = 1000000) {
  std::vector<DualityDatum<C>> out;
  auto unit = c.unit();
  for (auto y : c.objects()) {
    long long ts = c.hom_size(c.tensor_obj(x, y), unit);
    long long us = c.hom_size(unit, c.tensor_obj(y, x));
    if (ts < 0 || us < 0 || ts + us > cap)
      throw std::runtime_error("all_duals: candidate hom enumeration over cap");
    for (const auto& t : c.hom(c.tensor_obj(x, y), unit))
      for (const auto& u : c.hom(unit, c.tensor_obj(y, x))) {
        DualityDatum<C> d{x, y, t, u};
        if (validate_duality(c, d)) out.push_back(d);
      }
  }
  return out;
}

// t after sym(dual, x) after (id_dual tensor f) after u, an endomorphism of
// the unit. Independent of the chosen datum.
template <typename C>
typename C::Mor trace(const C& c, const DualityDatum<C>& d, const typename C::Mor& f) {
  if (!(c.src(f) == d.x) || !(c.tgt(f) == d.x))
    throw std::invalid_argument("trace: not an endomorphism of the datum's object");
  auto stage = c.compose(c.tensor_mor(c.id(d.dual), f), d.u);
  return c.compose(d.t, c.compose(c.sym(d.dual, d.x), stage));
}

struct RigidReport {
  std::vector<int> rigid;        // indices into the object view
  std::vector<int> capped;       // indices where the search was inconclusive
  bool closed_under_tensor = false;
  bool contains_unit = false;
};

// Classifies the object view by find_dual and re-verifies the closure
// properties duals are guaranteed to have.
template <typename C>
RigidReport rigid_objects(const C& c, long long cap = 1000000) {
  RigidReport r;
  auto objs = c.objects();
  std::vector<typename C::Obj> rig;
  for (size_t i = 0; i < objs.size(); ++i) {
    auto res = find_dual(c, objs[i], cap);
    if (res.status == SearchStatus::Found) {
      r.rigid.push_back(static_cast<int>(i));
      rig.push_back(objs[i]);
    } else if (res.status == SearchStatus::CapExceeded) {
      r.capped.push_back(static_cast<int>(i));
    }
  }
  for (const auto& x : rig)
    if (x == c.unit()) r.contains_unit = true;
  r.closed_under_tensor = true;
  for (const auto& x : rig)
    for (const auto& y : rig) {
      auto xy = c.tensor_obj(x, y);
      bool in_view = false, found = false;
      for (const auto& z : objs)
        if (z == xy) in_view = true;
      for (const auto& z : rig)
        if (z == xy) found = true;
      if (in_view && !found) r.closed_under_tensor = false;
    }
  return r;
}

// Structural SMC axioms over the given object and morphism samples.
// Exhaustive when the samples are the whole category.
template <typename C>
std::vector<std::string> validate_smc(const C& c, const std::vector<typename C::Obj>& objs,
                                      const std::vector<typename C::Mor>& mors) {
  std::vector<std::string> bad;
  auto unit = c.unit();
  auto objname = [&](size_t i) { return "object #" + std::to_string(i); };
  for (size_t i = 0; i < objs.size(); ++i) {
    if (!(c.tensor_obj(unit, objs[i]) == objs[i]) || !(c.tensor_obj(objs[i], unit) == objs[i]))
      bad.push_back("unit law fails on " + objname(i));
    if (!(c.compose(c.sym(objs[i], unit), c.sym(unit, objs[i])) ==
          c.id(c.tensor_obj(unit, objs[i]))))
      bad.push_back("unit symmetry not involutive on " + objname(i));
    if (!(c.sym(unit, objs[i]) == c.id(objs[i])))
      bad.push_back("unit symmetry not the identity on " + objname(i));
  }
  for (size_t i = 0; i < objs.size(); ++i)
    for (size_t j = 0; j < objs.size(); ++j) {
      if (!(c.tensor_mor(c.id(objs[i]), c.id(objs[j])) == c.id(c.tensor_obj(objs[i], objs[j]))))
        bad.push_back("tensor of identities fails on " + objname(i) + "," + objname(j));
      auto s = c.sym(objs[i], objs[j]);
      if (!(c.compose(c.sym(objs[j], objs[i]), s) == c.id(c.tensor_obj(objs[i], objs[j]))))
        bad.push_back("symmetry not involutive on " + objname(i) + "," + objname(j));
      for (size_t k = 0; k < objs.size(); ++k) {
        if (!(c.tensor_obj(c.tensor_obj(objs[i], objs[j]), objs[k]) ==
              c.tensor_obj(objs[i], c.tensor_obj(objs[j], objs[k]))))
          bad.push_back("tensor not associative on objects");
        // strict hexagon
        auto lhs = c.sym(objs[i], c.tensor_obj(objs[j], objs[k]));
        auto rhs = c.compose(c.tensor_mor(c.id(objs[j]), c.sym(objs[i], objs[k])),
                             c.tensor_mor(c.sym(objs[i], objs[j]), c.id(objs[k])));
        if (!(lhs == rhs)) bad.push_back("hexagon fails on a triple");
      }
    }
  for (const auto& f : mors) {
    if (!(c.tensor_mor(c.id(unit), f) == f) || !(c.tensor_mor(f, c.id(unit)) == f))
      bad.push_back("unit law fails on a morphism");
    for (const auto& g : mors) {
      auto nat_lhs = c.compose(c.sym(c.tgt(f), c.tgt(g)), c.tensor_mor(f, g));
      auto nat_rhs = c.compose(c.tensor_mor(g, f), c.sym(c.src(f), c.src(g)));
      if (!(nat_lhs == nat_rhs)) bad.push_back("symmetry not natural on a pair");
      for (const auto& h : mors)
        if (!(c.tensor_mor(c.tensor_mor(f, g), h) == c.tensor_mor(f, c.tensor_mor(g, h))))
          bad.push_back("tensor not associative on morphisms");
    }
  }
  // bifunctoriality over composable pairs from the sample
  for (const auto& f : mors)
    for (const auto& f2 : mors) {
      if (!(c.src(f2) == c.tgt(f))) continue;
      for (const auto& g : mors)
        for (const auto& g2 : mors) {
          if (!(c.src(g2) == c.tgt(g))) continue;
          auto lhs = c.compose(c.tensor_mor(f2, g2), c.tensor_mor(f, g));
          auto rhs = c.tensor_mor(c.compose(f2, f), c.compose(g2, g));
          if (!(lhs == rhs)) bad.push_back("tensor not bifunctorial on a pair");
        }
    }
  return bad;
}

// Matrix category over an exact field: objects are dimensions, a morphism
// n -> m is an m x n matrix, tensor is the Kronecker product. Objects are
// unbounded; maxdim only bounds the enumeration view.
template <typename K>
struct MatrixCat {
  using Obj = int;
  struct Mor {
    int s = 0, t = 0;
    Matrix<K> m;  // t x s
    bool operator==(const Mor& o) const { return s == o.s && t == o.t && m == o.m; }
  };

  K ex;                    // field exemplar (carries the modulus for prime fields)
  int maxdim = 0;          // enumeration view bound
  long long field_size = -1;  // -1 when infinite

  Obj unit() const { return 1; }
  Obj tensor_obj(Obj a, Obj b) const { return a * b; }
  Obj src(const Mor& f) const { return f.s; }
  Obj tgt(const Mor& f) const { return f.t; }

  Mor id(Obj x) const { return Mor{x, x, mat_identity(x, ex)}; }

  Mor compose(const Mor& g, const Mor& f) const {
    if (f.t != g.s) throw std::invalid_argument("compose: dimension mismatch");
    return Mor{f.s, g.t, g.m * f.m};
  }

  Mor tensor_mor(const Mor& f, const Mor& g) const {
    return Mor{f.s * g.s, f.t * g.t, kron(f.m, g.m)};
  }

  // sends basis vector e_i tensor e_j of x tensor y to e_j tensor e_i
  Mor sym(Obj x, Obj y) const {
    Matrix<K> m = mat_zero(x * y, x * y, ex);
    for (int i = 0; i < x; ++i)
      for (int j = 0; j < y; ++j) m.at(j * x + i, i * y + j) = kone(ex);
    return Mor{x * y, y * x, m};
  }

  std::vector<Obj> objects() const {
    std::vector<Obj> out;
    for (int i = 0; i <= maxdim; ++i) out.push_back(i);
    return out;
  }

  long long hom_size(Obj a, Obj b) const {
    long long cells = static_cast<long long>(a) * b;
    if (cells == 0) return 1;
    if (field_size < 0) return -1;
    long long n = 1;
    for (long long i = 0; i < cells; ++i) {
      if (n > (1LL << 40) / field_size) return -1;
      n *= field_size;
    }
    return n;
  }

  std::vector<Mor> hom(Obj a, Obj b) const {
    long long n = hom_size(a, b);
    if (n < 0) throw std::runtime_error("hom: not enumerable over this field");
    std::vector<Mor> out;
    Mor cur{a, b, mat_zero(b, a, ex)};
    std::vector<int> digits(static_cast<size_t>(a) * b, 0);
    while (true) {
      out.push_back(cur);
      size_t i = digits.size();
      while (i > 0 && digits[i - 1] == field_size - 1) digits[--i] = 0;
      if (i == 0 || digits.empty()) break;
      ++digits[i - 1];
      for (size_t k = 0; k < digits.size(); ++k) cur.m.a[k] = kfrom_int(ex, digits[k]);
    }
    return out;
  }

  K scalar_of(const Mor& f) const {
    if (f.s != 1 || f.t != 1) throw std::invalid_argument("scalar_of: not an endomorphism of 1");
    return f.m.at(0, 0);
  }

  bool is_iso(const Mor& f) const { return f.s == f.t && is_invertible(f.m, ex); }

  Mor inv(const Mor& f) const {
    auto w = inverse(f.m, ex);
    if (f.s != f.t || !w) throw std::invalid_argument("inv: morphism is not invertible");
    return Mor{f.t, f.s, *w};
  }
};

// Free strict symmetric monoidal category on one object: objects are
// multiplicities, morphisms are permutations (hom(n,m) empty for n != m).
// The generator has no dual: there are no morphisms to the unit at all.
struct PermCat {
  using Obj = int;
  struct Mor {
    int n = 0;
    std::vector<int> p;  // image of strand i is p[i]
    bool operator==(const Mor& o) const { return n == o.n && p == o.p; }
  };

  int maxn = 0;

  Obj unit() const { return 0; }
  Obj tensor_obj(Obj a, Obj b) const { return a + b; }
  Obj src(const Mor& f) const { return f.n; }
  Obj tgt(const Mor& f) const { return f.n; }
  Mor id(Obj x) const;
  Mor compose(const Mor& g, const Mor& f) const;
  Mor tensor_mor(const Mor& f, const Mor& g) const;
  Mor sym(Obj x, Obj y) const;
  std::vector<Obj> objects() const;
  long long hom_size(Obj a, Obj b) const;
  std::vector<Mor> hom(Obj a, Obj b) const;
  bool is_iso(const Mor& f) const;
  Mor inv(const Mor& f) const;
};

// Symmetric monoidal structure on a finite category, everything tabulated.
struct TableSMC {
  using Obj = int;
  using Mor = int;

  FinCat cat;
  int unit_obj = 0;
  std::vector<int> tens_obj;  // n_obj * n_obj
  std::vector<int> tens_mor;  // n_mor * n_mor
  std::vector<int> sym_tab;   // n_obj * n_obj -> morphism id

  Obj unit() const { return unit_obj; }
  Obj tensor_obj(Obj a, Obj b) const { return tens_obj[static_cast<size_t>(a) * cat.n_obj + b]; }
  Mor tensor_mor(Mor f, Mor g) const { return tens_mor[static_cast<size_t>(f) * cat.n_mor() + g]; }
  Mor sym(Obj a, Obj b) const { return sym_tab[static_cast<size_t>(a) * cat.n_obj + b]; }
  Mor compose(Mor g, Mor f) const { return cat.compose(g, f); }
  Mor id(Obj x) const { return cat.id(x); }
  Obj src(Mor f) const { return cat.src(f); }
  Obj tgt(Mor f) const { return cat.tgt(f); }
  std::vector<Obj> objects() const;
  long long hom_size(Obj a, Obj b) const { return static_cast<long long>(cat.hom(a, b).size()); }
  std::vector<Mor> hom(Obj a, Obj b) const { return cat.hom(a, b); }
  bool is_iso(Mor f) const { return mor_inverse(cat, f).has_value(); }
  Mor inv(Mor f) const {
    auto w = mor_inverse(cat, f);
    if (!w) throw std::invalid_argument("inv: morphism is not invertible");
    return *w;
  }
};

// Exhaustive validation: underlying category axioms plus all SMC axioms.
std::vector<std::string> check_table_smc(const TableSMC& t);

// Discrete symmetric monoidal category on a commutative monoid: objects are
// the elements, the only morphisms are identities.
TableSMC smc_from_cmonoid(const FinCMonoid& e);

// Unit plus one idempotent object a (a tensor a = a) carrying a non-invertible
// idempotent endomorphism; there are no morphisms between a and the unit, so
// a has no dual.
TableSMC smc_idempotent_endo();

// Full monoidal subcategory of a TableSMC on the given objects; the object
// set must contain the unit and be tensor-closed.
TableSMC table_smc_restrict(const TableSMC& t, const std::vector<int>& objs);

MatrixCat<Rat> matrix_cat_rat(int maxdim);
MatrixCat<Fp> matrix_cat_fp(std::int64_t p, int maxdim);

// The standard duality datum in a matrix category: dual object = same
// dimension, pairing/copairing reshape the identity matrix.
template <typename K>
DualityDatum<MatrixCat<K>> matrix_standard_dual(const MatrixCat<K>& c, int x) {
  typename MatrixCat<K>::Mor t{x * x, 1, mat_zero(1, x * x, c.ex)};
  typename MatrixCat<K>::Mor u{1, x * x, mat_zero(x * x, 1, c.ex)};
  for (int i = 0; i < x; ++i) {
    t.m.at(0, i * x + i) = kone(c.ex);
    u.m.at(i * x + i, 0) = kone(c.ex);
  }
  return DualityDatum<MatrixCat<K>>{x, x, t, u};
}

}  // namespace rigidtrace
