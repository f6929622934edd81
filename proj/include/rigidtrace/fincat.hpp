#pragma once

#include <optional>
#include <string>
#include <vector>

namespace rigidtrace {

// Finite category. Objects and morphisms are dense integer ids; the
// composition table is total over composable pairs (-1 elsewhere).
// Values produced by FinCatBuilder::build have passed check_category;
// raw aggregates (e.g. parsed from files) may be invalid and must be
// checked before use.
struct FinCat {
  int n_obj = 0;
  std::vector<int> mor_src;
  std::vector<int> mor_tgt;
  std::vector<int> ident;  // object -> identity morphism id
  std::vector<int> comp;   // comp[g*m + f] = g∘f, -1 when tgt(f) != src(g)

  int n_mor() const { return static_cast<int>(mor_src.size()); }
  int src(int f) const { return mor_src[f]; }
  int tgt(int f) const { return mor_tgt[f]; }
  int id(int x) const { return ident[x]; }
  bool composable(int g, int f) const { return mor_tgt[f] == mor_src[g]; }
  int compose(int g, int f) const { return comp[static_cast<size_t>(g) * n_mor() + f]; }
  bool is_identity(int f) const { return mor_src[f] == mor_tgt[f] && ident[mor_src[f]] == f; }
  std::vector<int> hom(int x, int y) const;
};

struct FinCatBuilder {
  int n_obj = 0;
  std::vector<int> mor_src;
  std::vector<int> mor_tgt;
  std::vector<int> ident;
  std::vector<std::vector<int>> entries;  // (g, f, gf)

  int add_object();
  int add_morphism(int s, int t);
  void set_identity(int x, int f);
  void set_compose(int g, int f, int gf);
  FinCat raw() const;    // assemble without validation
  FinCat build() const;  // throws std::invalid_argument listing violations
};

// Empty iff all category axioms hold. Violations name the offending
// morphism ids. Never throws; malformed indices become violations.
std::vector<std::string> check_category(const FinCat& c);

// Two-sided inverse of f, if any.
std::optional<int> mor_inverse(const FinCat& c, int f);

// Object -> iso-class id (0-based, ordered by least member object).
std::vector<int> iso_classes(const FinCat& c);

struct FinFunctor {
  std::vector<int> omap;  // object -> object
  std::vector<int> mmap;  // morphism -> morphism
};

std::vector<std::string> check_functor(const FinCat& a, const FinCat& b, const FinFunctor& f);

FinFunctor identity_functor(const FinCat& a);
FinFunctor compose_functors(const FinFunctor& g, const FinFunctor& f);

// Natural transformation F => G: component morphism of b per object of a.
using NatTransf = std::vector<int>;

std::vector<std::string> check_natural(const FinCat& a, const FinCat& b, const FinFunctor& f,
                                       const FinFunctor& g, const NatTransf& eta);

struct EquivalenceWitness {
  bool ok = false;
  std::string failure;            // first failure, empty when ok
  std::vector<int> preimage_obj;  // per object of the target: chosen source object
  std::vector<int> iso;           // per object of the target: iso F(preimage) -> object
};

// Fully faithful + essentially surjective, with deterministic witness
// (lowest-id preimage and iso). Assumes f passes check_functor.
EquivalenceWitness is_equivalence(const FinCat& a, const FinCat& b, const FinFunctor& f);

// All functors a -> b, lexicographic in (object map, morphism map).
// Throws std::runtime_error if more than cap candidates would be emitted.
std::vector<FinFunctor> all_functors(const FinCat& a, const FinCat& b, size_t cap = 1000000);

struct CommaUnder {
  FinCat cat;                // objects: morphisms i -> j of the base
  std::vector<int> obj_mor;  // comma object -> base morphism id
  std::vector<int> mor_h;    // comma morphism -> underlying base morphism h
  FinFunctor to_base;        // sends (i -> j) to j
};

CommaUnder comma_under(const FinCat& base, int i);

// Iso-class representatives of every category with at most max_obj objects
// and at most max_mor morphisms. Identities are morphisms 0..n_obj-1 in
// object order and each representative carries its minimal relabeling.
// Exhaustive search over composition tables; intended for tiny bounds.
std::vector<FinCat> small_categories(int max_obj, int max_mor);

// Truncated nerve. An n-simplex is a composable chain stored as
// [x0, f1, ..., fn]; dimension 0 stores [x0].
struct TruncatedSSet {
  int max_dim = 0;
  std::vector<std::vector<std::vector<int>>> cells;  // cells[n][k] = chain
  std::vector<std::vector<std::vector<int>>> face;   // face[n][i][k], 1 <= n, 0 <= i <= n
  std::vector<std::vector<std::vector<int>>> degen;  // degen[n][i][k], n < max_dim
  std::vector<int> counts() const;
};

TruncatedSSet nerve_truncated(const FinCat& c, int max_dim);

// Empty iff all simplicial identities hold on stored cells.
std::vector<std::string> check_simplicial(const TruncatedSSet& s);

// Stock instances used across the test suite and the selftest.
FinCat fincat_terminal();
FinCat fincat_delta1();  // 0 -> 1
FinCat fincat_delta2();  // poset 0 < 1 < 2
FinCat fincat_contractible_pair();  // two objects, unique iso each way
FinCat fincat_pair_groupoid_z2();   // two objects, hom-sets = Z/2 torsors (8 morphisms)

}  // namespace rigidtrace
