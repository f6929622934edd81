#pragma once

#include <functional>
#include <string>
#include <vector>

namespace rigidtrace {

// Pointed map [n] -> [m] between the pointed sets {0,...,n}; f[0] = 0 always.
struct GammaMap {
  int n = 0;
  int m = 0;
  std::vector<int> f;  // size n+1

  int operator()(int i) const { return f[i]; }
  friend bool operator==(const GammaMap& a, const GammaMap& b) {
    return a.n == b.n && a.m == b.m && a.f == b.f;
  }
};

GammaMap gamma_id(int n);
GammaMap segal_map(int n, int i);  // s_i(j) = 1 iff j = i
std::vector<GammaMap> gamma_maps(int n, int m);
GammaMap compose_gamma(const GammaMap& g, const GammaMap& f);  // g after f

// [n] -> [1] collapsing every positive element; [0] -> [1] for n = 0 and the
// identity for n = 1.
inline GammaMap gamma_fold(int n) {
  GammaMap u;
  u.n = n;
  u.m = 1;
  u.f.assign(n + 1, 1);
  u.f[0] = 0;
  return u;
}

// [2] -> [2] exchanging 1 and 2.
inline GammaMap gamma_twist() { return GammaMap{2, 2, {0, 2, 1}}; }

// [k] -> [2] sending 1..j to 1 and j+1..k to 2.
inline GammaMap gamma_split(int k, int j) {
  GammaMap u;
  u.n = k;
  u.m = 2;
  u.f.assign(k + 1, 0);
  for (int i = 1; i <= k; ++i) u.f[i] = i <= j ? 1 : 2;
  return u;
}

// [k] -> [j] keeping 1..j and collapsing the rest to the basepoint.
inline GammaMap gamma_first(int k, int j) {
  GammaMap u;
  u.n = k;
  u.m = j;
  u.f.assign(k + 1, 0);
  for (int i = 1; i <= j; ++i) u.f[i] = i;
  return u;
}

// [k] -> [k-j] shifting j+1..k down and collapsing 1..j to the basepoint.
inline GammaMap gamma_rest(int k, int j) {
  GammaMap u;
  u.n = k;
  u.m = k - j;
  u.f.assign(k + 1, 0);
  for (int i = j + 1; i <= k; ++i) u.f[i] = i - j;
  return u;
}

// Numbering of the smash pairing: (i,j) with 1<=i<=n, 1<=j<=m enumerated
// i-major, landing in {1..nm}. The object itself is just [n*m].
int smash_index(int n, int m, int i, int j);
// The symmetry automorphism of [nm]: i-major index of (i,j) |-> j-major index.
GammaMap shuffle(int n, int m);

struct FinCMonoid {
  int n = 0;            // elements 0..n-1
  std::vector<int> op;  // n*n table
  int unit = 0;

  int mul(int a, int b) const { return op[static_cast<size_t>(a) * n + b]; }
};

std::vector<std::string> check_cmonoid(const FinCMonoid& e);

FinCMonoid cmonoid_trivial();
FinCMonoid cmonoid_cyclic(int k);
// {0,1,2,T} with saturating addition; T absorbs.
FinCMonoid cmonoid_truncated_add();

// Tuple coding for power sets E^len: x_1 is the most significant digit.
std::vector<int> tuple_decode(long long idx, int len, int base);
long long tuple_encode(const std::vector<int>& x, int base);

// Functor Gamma -> Set up to a level bound, with sets coded as 0..size-1.
struct GammaSet {
  int bound = 0;
  std::vector<long long> size;  // size[n] = |X([n])|
  std::function<long long(const GammaMap&, long long)> act;
};

// X([n]) = E^n, with u_!(x)_j the fiberwise sum (unit on empty fibers).
GammaSet nerve_monoid(const FinCMonoid& e, int bound);

// Deliberately wrong exponent X([n]) = E^(n+1): a passenger coordinate is
// carried along untouched, which keeps the assignment functorial but breaks
// the level-0 singleton condition whenever |E| > 1.
GammaSet padded_nerve(const FinCMonoid& e, int bound);

// X(id) = id and X(v compose u) = X(v) X(u), exhaustive over all levels <= bound.
std::vector<std::string> check_gamma_functorial(const GammaSet& x, int bound);

struct SpecialReport {
  bool ok = false;
  int failing_level = -1;
  std::string reason;
  std::vector<bool> level_ok;  // indexed by level 0..bound
};

// Segal-map condition for sets: X([0]) a singleton and the combined
// (s_1,...,s_n) map a bijection X([n]) -> X([1])^n for each n <= bound.
SpecialReport is_special(const GammaSet& x, int bound);

}  // namespace rigidtrace
