#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rigidtrace/fincat.hpp"

namespace rigidtrace {

// Strict diagram of categories over a finite base: one fiber per base
// object, one functor per base morphism, identities and composites sent
// on the nose.
struct CatDiagram {
  FinCat base;
  std::vector<FinCat> fiber;       // per base object
  std::vector<FinFunctor> arrow;   // per base morphism
};

// Empty iff base and fibers pass check_category, every arrow passes
// check_functor, arrow[id_i] is the identity and arrow[v∘u] equals
// arrow[v]∘arrow[u] exactly.
std::vector<std::string> check_diagram(const CatDiagram& f);

// Category sitting over a base. Instances produced by integrate also
// carry the decomposition of every object as (base object, fiber object)
// and of every morphism as (base morphism, fiber morphism); hand-built
// instances leave those tables empty.
struct FiberedCat {
  FinCat base;
  FinCat total;
  FinFunctor proj;                // total -> base
  std::vector<int> obj_fiber;     // total object -> fiber object id
  std::vector<int> base_mor;      // total morphism -> base morphism id
  std::vector<int> fiber_comp;    // total morphism -> fiber morphism id
  std::vector<bool> cartesian;    // total morphism -> fiber component invertible

  bool has_tables() const { return !base_mor.empty() || total.n_mor() == 0; }
};

// Grothendieck construction. Objects are pairs (i, x) with x in fiber[i];
// a morphism (i,x) -> (j,y) is a pair (u: i -> j, g: arrow[u](x) -> y) and
// (v,d)∘(u,g) = (v∘u, d∘arrow[v](g)). Assumes check_diagram(f) is empty.
FiberedCat integrate(const CatDiagram& f);

// Universal property: m: a -> b over u is cartesian iff for every z, every
// g: a -> z and every w: proj(b) -> proj(z) with w∘u = proj(g) admit a
// unique h: b -> z over w with h∘m = g. Works on any FiberedCat.
bool is_cartesian_pullback(const FiberedCat& p, int m);

// Decomposition route: the fiber component of m is invertible. Requires
// tables, i.e. an integrate output.
bool is_cartesian_component(const FiberedCat& p, int m);

// Component route when tables are present, pullback route otherwise.
bool is_cartesian(const FiberedCat& p, int m);

// Empty iff proj is a functor and every pair (object a, base morphism u
// out of proj(a)) admits a cartesian lift with source a.
std::vector<std::string> check_fibered(const FiberedCat& p);

// Vertical subcategory over base object i, with its object and morphism
// ids inside the total category.
struct Fiber {
  FinCat cat;
  std::vector<int> objs;
  std::vector<int> mors;
};

Fiber fiber_of(const FiberedCat& p, int i);

struct SectionReport {
  bool ok = false;
  std::vector<bool> per_object;  // per base object: evaluation is an equivalence
  bool cap_exceeded = false;
  std::string failure;           // first failure, empty when ok
};

// For each base object i: build the category of cartesian sections of the
// integrated diagram over the comma category i/base (functors S with
// proj∘S equal to the comma projection on the nose and every image
// morphism cartesian; morphisms are vertical natural transformations),
// then check that evaluation at the (i, id_i) object is an equivalence
// onto fiber[i]. cap bounds the functor enumeration per base object.
SectionReport cartesian_sections_roundtrip(const CatDiagram& f, std::size_t cap = 100000);

}  // namespace rigidtrace
