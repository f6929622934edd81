#pragma once

#include <string>
#include <vector>

#include "rigidtrace/fibration.hpp"
#include "rigidtrace/fincat.hpp"

namespace rigidtrace {

// Truncated simplex category of a finite category. Objects are composable
// chains [x0, f1, ..., fn] of dimension n <= bound, degenerate entries
// included; a morphism from chain u of dimension n to chain v of
// dimension m is a monotone map f: [m] -> [n] with u∘f = v, stored as its
// value list. The projection sends a chain to its first vertex and a
// morphism to the composite u(0 -> f(0)). A morphism is vertical when
// f(0) = 0; its projection is then an identity, but not conversely, since
// a chain whose initial segment composes to an identity maps to its first
// vertex in several ways.
struct SimplexCat {
  FinCat base;
  int bound = 0;
  FinCat total;
  FinFunctor pi;                            // total -> base
  std::vector<bool> vertical;               // per total morphism: f(0) = 0
  std::vector<std::vector<int>> obj_chain;  // per object: [x0, f1, ..., fn]
  std::vector<std::vector<int>> mor_map;    // per morphism: f(0), ..., f(m)

  int obj_dim(int a) const { return static_cast<int>(obj_chain[a].size()) - 1; }
};

SimplexCat category_of_simplices(const FinCat& base, int bound);

// Subcategory of chains starting at i with vertical morphisms between
// them, with object and morphism ids into the total category.
Fiber simplex_fiber(const SimplexCat& s, int i);

struct SimplexFiberReport {
  bool cofibered = false;       // arrows landing at i lift against chains below the bound
  bool has_terminal = false;    // the vertical fiber has a terminal object
  int terminal_obj = -1;        // total object id of the lowest terminal witness
  bool witness_is_point = false;  // witness is the dimension-0 chain at i
  std::string failure;          // first failure, empty when all checks pass
};

// Exhaustive per-object report. The lift check asks, for every chain over
// i with dimension < bound and every base morphism h: j -> i, for a total
// morphism into the chain projecting to h; prepending h to the chain
// always provides one inside the truncation.
SimplexFiberReport fiber_report(const SimplexCat& s, int i);

// Empty iff every morphism whose target dimension is below the bound
// factors as a vertical morphism followed by the canonical lift that
// prepends the projected arrow to the target chain.
std::vector<std::string> check_simplex_factorization(const SimplexCat& s);

}  // namespace rigidtrace
