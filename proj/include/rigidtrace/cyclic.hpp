#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rigidtrace/matrix.hpp"

namespace rigidtrace {

// Finite-dimensional commutative unital algebra over an exact field,
// presented by structure constants in a chosen basis. Everything downstream
// (tensor powers, boundary operators, homology ranks) stays exact.
template <typename K>
struct FDAlgebra {
  std::vector<std::string> basis;                // labels, one per basis vector
  std::vector<std::vector<std::vector<K>>> mul;  // mul[i][j] = coefficients of basis_i * basis_j
  std::vector<K> unit;                           // coefficients of 1

  int dim() const { return static_cast<int>(basis.size()); }
  // any stored scalar works as the constants exemplar (carries the modulus)
  K exemplar() const { return unit.at(0); }
};

// Exhaustive structure check on basis pairs/triples: sizes, unit law,
// commutativity, associativity. Empty result means valid.
template <typename K>
std::vector<std::string> check_algebra(const FDAlgebra<K>& a);

template <typename K>
std::vector<K> alg_mul(const FDAlgebra<K>& a, const std::vector<K>& x, const std::vector<K>& y);

template <typename K>
std::vector<K> alg_add(const std::vector<K>& x, const std::vector<K>& y);

template <typename K>
bool alg_is_zero(const std::vector<K>& x);

// Stock algebras. The exemplar fixes the scalar field.
template <typename K>
FDAlgebra<K> algebra_field(const K& exemplar);  // the ground field itself
template <typename K>
FDAlgebra<K> algebra_pair(const K& exemplar);  // K x K, orthogonal idempotents
template <typename K>
FDAlgebra<K> algebra_dual_numbers(const K& exemplar);  // K[x]/(x^2)

// Isomorphic copy whose first basis vector is the unit. Needed to name the
// degenerate tensors (unit in a slot past the first) by coordinates.
template <typename K>
FDAlgebra<K> adapted_form(const FDAlgebra<K>& a);

// Chain-level model of the circle action on the cyclic bar construction,
// truncated at a degree bound. Degree n holds A^{(n+1) tensor}; b lowers
// degree, B raises it, and b^2 = B^2 = bB + Bb = 0 exactly. The normalized
// variant quotients by tensors with a unit slot past the first; its algebra
// field holds the adapted presentation the coordinates refer to.
template <typename K>
struct MixedComplex {
  FDAlgebra<K> algebra;
  int bound = 0;
  bool normalized = false;
  std::vector<int> dim;                 // dim[n] = dim C_n, n = 0..bound
  std::vector<std::vector<long>> code;  // code[n][p] = encoded basis tensor of C_n
  std::vector<Matrix<K>> b;             // b[n]: C_n -> C_{n-1}, n >= 1; b[0] has no rows
  std::vector<Matrix<K>> B;             // B[n]: C_n -> C_{n+1}, n = 0..bound-1
};

// Tensor index <-> flat code, first slot major.
inline long tensor_code(const std::vector<int>& idx, int d) {
  long c = 0;
  for (int v : idx) c = c * d + v;
  return c;
}
inline std::vector<int> tensor_decode(long c, int d, int len) {
  std::vector<int> idx(len);
  for (int k = len - 1; k >= 0; --k) {
    idx[k] = static_cast<int>(c % d);
    c /= d;
  }
  return idx;
}

template <typename K>
MixedComplex<K> mixed_complex(const FDAlgebra<K>& a, int bound, long dim_cap = 4096);
template <typename K>
MixedComplex<K> normalized_complex(const FDAlgebra<K>& a, int bound, long dim_cap = 4096);

// The three operator identities, as exact matrix products over the stored
// range. Empty result means all hold.
template <typename K>
std::vector<std::string> check_mixed_identities(const MixedComplex<K>& m);

template <typename K>
struct HomologyResult {
  int dim = 0;
  std::vector<std::vector<K>> reps;  // cycle representatives, independent mod boundaries
};

// ker(b_n)/im(b_{n+1}) by exact rank. Requires n < bound.
template <typename K>
HomologyResult<K> hochschild_homology(const MixedComplex<K>& m, int n);

struct NegCyclicReport {
  int dim = 0;
  int prev_dim = -1;  // dimension one truncation earlier, -1 at order 0
  bool stabilized = false;
};

// Homology in degree n of the u-truncated total complex
// (sum over j <= uorder of C_{n+2j}, differential b + uB).
// Requires n >= 0 and n + 2*uorder < bound.
template <typename K>
NegCyclicReport negative_cyclic(const MixedComplex<K>& m, int n, int uorder);

// Square matrix with entries in the algebra, each entry a coefficient vector.
template <typename K>
struct AlgMatrix {
  int r = 0;
  int d = 0;
  std::vector<std::vector<K>> e;  // r*r entries, row-major

  std::vector<K>& at(int i, int j) { return e[static_cast<size_t>(i) * r + j]; }
  const std::vector<K>& at(int i, int j) const { return e[static_cast<size_t>(i) * r + j]; }

  friend bool operator==(const AlgMatrix& x, const AlgMatrix& y) {
    return x.r == y.r && x.d == y.d && x.e == y.e;
  }
  friend bool operator!=(const AlgMatrix& x, const AlgMatrix& y) { return !(x == y); }
};

template <typename K>
AlgMatrix<K> amat_zero(const FDAlgebra<K>& a, int r);
template <typename K>
AlgMatrix<K> amat_identity(const FDAlgebra<K>& a, int r);
template <typename K>
AlgMatrix<K> amat_mul(const FDAlgebra<K>& a, const AlgMatrix<K>& x, const AlgMatrix<K>& y);
template <typename K>
bool amat_is_idempotent(const FDAlgebra<K>& a, const AlgMatrix<K>& x);
template <typename K>
std::vector<K> amat_trace(const FDAlgebra<K>& a, const AlgMatrix<K>& x);
template <typename K>
AlgMatrix<K> amat_dirsum(const FDAlgebra<K>& a, const AlgMatrix<K>& x, const AlgMatrix<K>& y);
template <typename K>
AlgMatrix<K> amat_kron(const FDAlgebra<K>& a, const AlgMatrix<K>& x, const AlgMatrix<K>& y);

// Degree-0 trace with its circle-invariance witnesses: components c_0, c_2,
// ..., c_{2*uorder} with b(c_0) = 0 and B(c_{2j}) + b(c_{2j+2}) = 0.
template <typename K>
struct NegCyclicCycle {
  int uorder = 0;
  std::vector<std::vector<K>> comp;  // comp[j] = c_{2j}
};

// c_0 is the entrywise matrix trace of the idempotent; higher components are
// solved from b(c_{2j+2}) = -B(c_{2j}) with the canonical echelon solution
// (free variables zero), so output is reproducible. Requires a full (not
// normalized) complex with bound >= 2*uorder + 2 and e idempotent.
// Inconsistency of a linear system would contradict the lifting theorem this
// models, so it throws logic_error rather than returning.
template <typename K>
NegCyclicCycle<K> chern_character(const MixedComplex<K>& m, const AlgMatrix<K>& e, int uorder);

template <typename K>
std::vector<std::string> check_cycle(const MixedComplex<K>& m, const NegCyclicCycle<K>& c);

// ---- implementation ----

template <typename K>
std::vector<K> alg_add(const std::vector<K>& x, const std::vector<K>& y) {
  std::vector<K> r = x;
  for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] + y[i];
  return r;
}

template <typename K>
bool alg_is_zero(const std::vector<K>& x) {
  for (const K& v : x)
    if (!kis_zero(v)) return false;
  return true;
}

template <typename K>
std::vector<K> alg_mul(const FDAlgebra<K>& a, const std::vector<K>& x, const std::vector<K>& y) {
  int d = a.dim();
  std::vector<K> r(d, kzero(a.exemplar()));
  for (int i = 0; i < d; ++i) {
    if (kis_zero(x[i])) continue;
    for (int j = 0; j < d; ++j) {
      if (kis_zero(y[j])) continue;
      K c = x[i] * y[j];
      for (int k = 0; k < d; ++k) r[k] = r[k] + c * a.mul[i][j][k];
    }
  }
  return r;
}

template <typename K>
std::vector<std::string> check_algebra(const FDAlgebra<K>& a) {
  std::vector<std::string> out;
  int d = a.dim();
  if (d < 1) {
    out.push_back("algebra must have positive dimension");
    return out;
  }
  if (static_cast<int>(a.unit.size()) != d) {
    out.push_back("unit coefficient count does not match dimension");
    return out;
  }
  if (static_cast<int>(a.mul.size()) != d) {
    out.push_back("structure constant table has wrong size");
    return out;
  }
  for (int i = 0; i < d; ++i) {
    if (static_cast<int>(a.mul[i].size()) != d) {
      out.push_back("structure constant row " + std::to_string(i) + " has wrong size");
      return out;
    }
    for (int j = 0; j < d; ++j)
      if (static_cast<int>(a.mul[i][j].size()) != d) {
        out.push_back("structure constants (" + std::to_string(i) + "," + std::to_string(j) +
                      ") have wrong size");
        return out;
      }
  }
  K zero = kzero(a.exemplar());
  auto basis_vec = [&](int i) {
    std::vector<K> v(d, zero);
    v[i] = kone(a.exemplar());
    return v;
  };
  for (int i = 0; i < d; ++i) {
    if (alg_mul(a, a.unit, basis_vec(i)) != basis_vec(i))
      out.push_back("unit fails on the left of basis " + std::to_string(i));
    if (alg_mul(a, basis_vec(i), a.unit) != basis_vec(i))
      out.push_back("unit fails on the right of basis " + std::to_string(i));
  }
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      if (a.mul[i][j] != a.mul[j][i])
        out.push_back("not commutative on basis pair (" + std::to_string(i) + "," +
                      std::to_string(j) + ")");
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        if (alg_mul(a, a.mul[i][j], basis_vec(k)) != alg_mul(a, basis_vec(i), a.mul[j][k]))
          out.push_back("not associative on basis triple (" + std::to_string(i) + "," +
                        std::to_string(j) + "," + std::to_string(k) + ")");
  return out;
}

template <typename K>
FDAlgebra<K> algebra_field(const K& exemplar) {
  FDAlgebra<K> a;
  a.basis = {"1"};
  a.mul = {{{kone(exemplar)}}};
  a.unit = {kone(exemplar)};
  return a;
}

template <typename K>
FDAlgebra<K> algebra_pair(const K& exemplar) {
  K z = kzero(exemplar), o = kone(exemplar);
  FDAlgebra<K> a;
  a.basis = {"p", "q"};
  a.mul = {{{o, z}, {z, z}}, {{z, z}, {z, o}}};
  a.unit = {o, o};
  return a;
}

template <typename K>
FDAlgebra<K> algebra_dual_numbers(const K& exemplar) {
  K z = kzero(exemplar), o = kone(exemplar);
  FDAlgebra<K> a;
  a.basis = {"1", "eps"};
  a.mul = {{{o, z}, {z, o}}, {{z, o}, {z, z}}};
  a.unit = {o, z};
  return a;
}

template <typename K>
FDAlgebra<K> adapted_form(const FDAlgebra<K>& a) {
  int d = a.dim();
  K ex = a.exemplar();
  K zero = kzero(ex), one = kone(ex);
  // columns: the unit first, then standard vectors that keep the rank growing
  std::vector<std::vector<K>> cols;
  cols.push_back(a.unit);
  for (int s = 0; s < d && static_cast<int>(cols.size()) < d; ++s) {
    std::vector<K> cand(d, zero);
    cand[s] = one;
    Matrix<K> probe(d, static_cast<int>(cols.size()) + 1, zero);
    for (size_t c = 0; c < cols.size(); ++c)
      for (int r = 0; r < d; ++r) probe.at(r, static_cast<int>(c)) = cols[c][r];
    for (int r = 0; r < d; ++r) probe.at(r, static_cast<int>(cols.size())) = cand[r];
    if (rank(probe) == static_cast<int>(cols.size()) + 1) cols.push_back(cand);
  }
  Matrix<K> P(d, d, zero);
  for (int c = 0; c < d; ++c)
    for (int r = 0; r < d; ++r) P.at(r, c) = cols[c][r];
  std::optional<Matrix<K>> Pinv = inverse(P, ex);
  if (!Pinv) throw std::logic_error("unit completion failed to produce a basis");
  FDAlgebra<K> out;
  out.basis.resize(d);
  out.basis[0] = "1";
  for (int i = 1; i < d; ++i) out.basis[i] = "w" + std::to_string(i);
  out.unit.assign(d, zero);
  out.unit[0] = one;
  out.mul.assign(d, std::vector<std::vector<K>>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      out.mul[i][j] = mat_vec(*Pinv, alg_mul(a, cols[i], cols[j]), ex);
  return out;
}

namespace cyclic_detail {

// b(tensor) and B(tensor) as (code, coefficient) term lists over the target
// tensor power; signs follow the classical normalization (wrap-around face
// carries (-1)^n, the cyclic permutation on degree n carries (-1)^n).
template <typename K>
void emit_b_terms(const FDAlgebra<K>& a, const std::vector<int>& idx,
                  std::vector<std::pair<long, K>>& out) {
  int n = static_cast<int>(idx.size()) - 1;
  int d = a.dim();
  for (int i = 0; i < n; ++i) {
    const std::vector<K>& pr = a.mul[idx[i]][idx[i + 1]];
    for (int k = 0; k < d; ++k) {
      if (kis_zero(pr[k])) continue;
      std::vector<int> t;
      t.reserve(n);
      for (int s = 0; s < i; ++s) t.push_back(idx[s]);
      t.push_back(k);
      for (int s = i + 2; s <= n; ++s) t.push_back(idx[s]);
      K c = pr[k];
      if (i % 2 == 1) c = -c;
      out.emplace_back(tensor_code(t, d), c);
    }
  }
  const std::vector<K>& wrap = a.mul[idx[n]][idx[0]];
  for (int k = 0; k < d; ++k) {
    if (kis_zero(wrap[k])) continue;
    std::vector<int> t;
    t.reserve(n);
    t.push_back(k);
    for (int s = 1; s < n; ++s) t.push_back(idx[s]);
    K c = wrap[k];
    if (n % 2 == 1) c = -c;
    out.emplace_back(tensor_code(t, d), c);
  }
}

template <typename K>
void emit_B_terms(const FDAlgebra<K>& a, const std::vector<int>& idx,
                  std::vector<std::pair<long, K>>& out) {
  int n = static_cast<int>(idx.size()) - 1;
  int d = a.dim();
  for (int k = 0; k <= n; ++k) {
    // k-fold cyclic shift: last k entries move to the front
    std::vector<int> rot(n + 1);
    for (int j = 0; j <= n; ++j) rot[j] = idx[(j + n + 1 - k) % (n + 1)];
    bool neg_rot = (n * k) % 2 == 1;
    for (int u = 0; u < d; ++u) {
      if (kis_zero(a.unit[u])) continue;
      K c = a.unit[u];
      if (neg_rot) c = -c;
      std::vector<int> y;
      y.reserve(n + 2);
      y.push_back(u);
      for (int j = 0; j <= n; ++j) y.push_back(rot[j]);
      out.emplace_back(tensor_code(y, d), c);
      // subtract the degree-(n+1) cyclic operator of that term
      std::vector<int> ry(n + 2);
      ry[0] = y[n + 1];
      for (int j = 0; j <= n; ++j) ry[j + 1] = y[j];
      K rc = c;
      if ((n + 1) % 2 == 0) rc = -rc;
      out.emplace_back(tensor_code(ry, d), rc);
    }
  }
}

template <typename K>
MixedComplex<K> build_complex(const FDAlgebra<K>& given, int bound, bool normalized,
                              long dim_cap) {
  if (bound < 1) throw std::invalid_argument("degree bound must be >= 1");
  {
    std::vector<std::string> bad = check_algebra(given);
    if (!bad.empty()) throw std::invalid_argument("invalid algebra: " + bad[0]);
  }
  MixedComplex<K> m;
  m.algebra = normalized ? adapted_form(given) : given;
  m.bound = bound;
  m.normalized = normalized;
  const FDAlgebra<K>& a = m.algebra;
  int d = a.dim();
  K ex = a.exemplar();
  K zero = kzero(ex);

  std::vector<long> full(bound + 1);
  long p = 1;
  for (int n = 0; n <= bound; ++n) {
    if (p > dim_cap / d) throw std::length_error("tensor power dimension exceeds the cap");
    p *= d;
    full[n] = p;
  }
  m.dim.assign(bound + 1, 0);
  m.code.assign(bound + 1, {});
  // pos[n][code] = row of that tensor in C_n, -1 when not a basis element
  std::vector<std::vector<int>> pos(bound + 1);
  for (int n = 0; n <= bound; ++n) {
    pos[n].assign(full[n], -1);
    for (long c = 0; c < full[n]; ++c) {
      if (normalized) {
        std::vector<int> idx = tensor_decode(c, d, n + 1);
        bool degen = false;
        for (int s = 1; s <= n; ++s)
          if (idx[s] == 0) degen = true;
        if (degen) continue;
      }
      pos[n][c] = m.dim[n]++;
      m.code[n].push_back(c);
    }
  }

  m.b.resize(bound + 1);
  m.b[0] = Matrix<K>(0, m.dim[0], zero);
  for (int n = 1; n <= bound; ++n) {
    Matrix<K> mb(m.dim[n - 1], m.dim[n], zero);
    for (int col = 0; col < m.dim[n]; ++col) {
      std::vector<int> idx = tensor_decode(m.code[n][col], d, n + 1);
      std::vector<std::pair<long, K>> terms;
      emit_b_terms(a, idx, terms);
      for (const auto& [c, v] : terms) {
        int row = pos[n - 1][c];
        if (row >= 0) mb.at(row, col) = mb.at(row, col) + v;
      }
    }
    m.b[n] = std::move(mb);
  }
  m.B.resize(bound);
  for (int n = 0; n < bound; ++n) {
    Matrix<K> mB(m.dim[n + 1], m.dim[n], zero);
    for (int col = 0; col < m.dim[n]; ++col) {
      std::vector<int> idx = tensor_decode(m.code[n][col], d, n + 1);
      std::vector<std::pair<long, K>> terms;
      emit_B_terms(a, idx, terms);
      for (const auto& [c, v] : terms) {
        int row = pos[n + 1][c];
        if (row >= 0) mB.at(row, col) = mB.at(row, col) + v;
      }
    }
    m.B[n] = std::move(mB);
  }
  return m;
}

template <typename K>
bool mat_is_zero(const Matrix<K>& m) {
  for (const K& v : m.a)
    if (!kis_zero(v)) return false;
  return true;
}

}  // namespace cyclic_detail

template <typename K>
MixedComplex<K> mixed_complex(const FDAlgebra<K>& a, int bound, long dim_cap) {
  return cyclic_detail::build_complex<K>(a, bound, false, dim_cap);
}

template <typename K>
MixedComplex<K> normalized_complex(const FDAlgebra<K>& a, int bound, long dim_cap) {
  return cyclic_detail::build_complex<K>(a, bound, true, dim_cap);
}

template <typename K>
std::vector<std::string> check_mixed_identities(const MixedComplex<K>& m) {
  std::vector<std::string> out;
  for (int n = 2; n <= m.bound; ++n)
    if (!cyclic_detail::mat_is_zero(m.b[n - 1] * m.b[n]))
      out.push_back("b*b nonzero on degree " + std::to_string(n));
  for (int n = 0; n + 2 <= m.bound; ++n)
    if (!cyclic_detail::mat_is_zero(m.B[n + 1] * m.B[n]))
      out.push_back("B*B nonzero on degree " + std::to_string(n));
  for (int n = 0; n < m.bound; ++n) {
    Matrix<K> anti = m.b[n + 1] * m.B[n];
    if (n >= 1) anti = anti + m.B[n - 1] * m.b[n];
    if (!cyclic_detail::mat_is_zero(anti))
      out.push_back("bB + Bb nonzero on degree " + std::to_string(n));
  }
  return out;
}

template <typename K>
HomologyResult<K> hochschild_homology(const MixedComplex<K>& m, int n) {
  if (n < 0 || n >= m.bound)
    throw std::invalid_argument("homology degree needs the bound to exceed it by one");
  K ex = m.algebra.exemplar();
  std::vector<std::vector<K>> kernel = nullspace(m.b[n], ex);
  HomologyResult<K> res;
  res.dim = static_cast<int>(kernel.size()) - rank(m.b[n + 1]);
  // pick kernel vectors that raise the rank of image-plus-reps, greedily
  std::vector<std::vector<K>> span;
  for (int c = 0; c < m.b[n + 1].cols; ++c) {
    std::vector<K> col(m.dim[n], kzero(ex));
    for (int r = 0; r < m.dim[n]; ++r) col[r] = m.b[n + 1].at(r, c);
    span.push_back(std::move(col));
  }
  int srank = rank(m.b[n + 1]);
  for (const std::vector<K>& v : kernel) {
    Matrix<K> probe(m.dim[n], static_cast<int>(span.size()) + 1, kzero(ex));
    for (size_t c = 0; c < span.size(); ++c)
      for (int r = 0; r < m.dim[n]; ++r) probe.at(r, static_cast<int>(c)) = span[c][r];
    for (int r = 0; r < m.dim[n]; ++r) probe.at(r, static_cast<int>(span.size())) = v[r];
    if (rank(probe) == srank + 1) {
      span.push_back(v);
      srank += 1;
      res.reps.push_back(v);
    }
  }
  return res;
}

template <typename K>
NegCyclicReport negative_cyclic(const MixedComplex<K>& m, int n, int uorder) {
  if (n < 0 || uorder < 0 || n + 2 * uorder >= m.bound)
    throw std::invalid_argument("truncation does not fit under the degree bound");
  K ex = m.algebra.exemplar();
  K zero = kzero(ex);

  // total-complex differential into degree deg-1 at truncation k
  auto block = [&](int deg, int k) {
    std::vector<int> scol, trow;  // slot offsets
    int cols = 0, rows = 0;
    for (int j = 0; j <= k; ++j) {
      scol.push_back(cols);
      if (deg + 2 * j >= 0) cols += m.dim[deg + 2 * j];
      trow.push_back(rows);
      if (deg - 1 + 2 * j >= 0) rows += m.dim[deg - 1 + 2 * j];
    }
    Matrix<K> D(rows, cols, zero);
    for (int j = 0; j <= k; ++j) {
      int q = deg + 2 * j;
      if (q < 0) continue;
      if (q >= 1) {
        const Matrix<K>& bq = m.b[q];
        for (int r = 0; r < bq.rows; ++r)
          for (int c = 0; c < bq.cols; ++c) D.at(trow[j] + r, scol[j] + c) = bq.at(r, c);
      }
      if (j + 1 <= k) {
        const Matrix<K>& Bq = m.B[q];
        for (int r = 0; r < Bq.rows; ++r)
          for (int c = 0; c < Bq.cols; ++c)
            D.at(trow[j + 1] + r, scol[j] + c) = D.at(trow[j + 1] + r, scol[j] + c) + Bq.at(r, c);
      }
    }
    return D;
  };
  auto dim_at = [&](int k) {
    Matrix<K> Dn = block(n, k);
    Matrix<K> Dn1 = block(n + 1, k);
    return (Dn.cols - rank(Dn)) - rank(Dn1);
  };

  NegCyclicReport rep;
  rep.dim = dim_at(uorder);
  if (uorder >= 1) {
    rep.prev_dim = dim_at(uorder - 1);
    rep.stabilized = rep.dim == rep.prev_dim;
  }
  return rep;
}

template <typename K>
AlgMatrix<K> amat_zero(const FDAlgebra<K>& a, int r) {
  AlgMatrix<K> x;
  x.r = r;
  x.d = a.dim();
  x.e.assign(static_cast<size_t>(r) * r, std::vector<K>(a.dim(), kzero(a.exemplar())));
  return x;
}

template <typename K>
AlgMatrix<K> amat_identity(const FDAlgebra<K>& a, int r) {
  AlgMatrix<K> x = amat_zero(a, r);
  for (int i = 0; i < r; ++i) x.at(i, i) = a.unit;
  return x;
}

template <typename K>
AlgMatrix<K> amat_mul(const FDAlgebra<K>& a, const AlgMatrix<K>& x, const AlgMatrix<K>& y) {
  if (x.r != y.r || x.d != y.d) throw std::invalid_argument("matrix shape mismatch");
  AlgMatrix<K> z = amat_zero(a, x.r);
  for (int i = 0; i < x.r; ++i)
    for (int j = 0; j < x.r; ++j)
      for (int k = 0; k < x.r; ++k)
        z.at(i, j) = alg_add(z.at(i, j), alg_mul(a, x.at(i, k), y.at(k, j)));
  return z;
}

template <typename K>
bool amat_is_idempotent(const FDAlgebra<K>& a, const AlgMatrix<K>& x) {
  return amat_mul(a, x, x) == x;
}

template <typename K>
std::vector<K> amat_trace(const FDAlgebra<K>& a, const AlgMatrix<K>& x) {
  std::vector<K> t(a.dim(), kzero(a.exemplar()));
  for (int i = 0; i < x.r; ++i) t = alg_add(t, x.at(i, i));
  return t;
}

template <typename K>
AlgMatrix<K> amat_dirsum(const FDAlgebra<K>& a, const AlgMatrix<K>& x, const AlgMatrix<K>& y) {
  if (x.d != y.d) throw std::invalid_argument("coefficient length mismatch");
  AlgMatrix<K> z = amat_zero(a, x.r + y.r);
  for (int i = 0; i < x.r; ++i)
    for (int j = 0; j < x.r; ++j) z.at(i, j) = x.at(i, j);
  for (int i = 0; i < y.r; ++i)
    for (int j = 0; j < y.r; ++j) z.at(x.r + i, x.r + j) = y.at(i, j);
  return z;
}

template <typename K>
AlgMatrix<K> amat_kron(const FDAlgebra<K>& a, const AlgMatrix<K>& x, const AlgMatrix<K>& y) {
  AlgMatrix<K> z = amat_zero(a, x.r * y.r);
  for (int i1 = 0; i1 < x.r; ++i1)
    for (int j1 = 0; j1 < x.r; ++j1)
      for (int i2 = 0; i2 < y.r; ++i2)
        for (int j2 = 0; j2 < y.r; ++j2)
          z.at(i1 * y.r + i2, j1 * y.r + j2) = alg_mul(a, x.at(i1, j1), y.at(i2, j2));
  return z;
}

template <typename K>
NegCyclicCycle<K> chern_character(const MixedComplex<K>& m, const AlgMatrix<K>& e, int uorder) {
  if (m.normalized) throw std::invalid_argument("lift components live in the full complex");
  if (uorder < 0 || m.bound < 2 * uorder + 2)
    throw std::invalid_argument("degree bound must be at least 2*uorder + 2");
  if (e.d != m.algebra.dim()) throw std::invalid_argument("entry coefficients do not match the algebra");
  if (!amat_is_idempotent(m.algebra, e)) throw std::invalid_argument("matrix is not idempotent");
  K ex = m.algebra.exemplar();
  NegCyclicCycle<K> cyc;
  cyc.uorder = uorder;
  cyc.comp.push_back(amat_trace(m.algebra, e));
  for (int j = 0; j < uorder; ++j) {
    std::vector<K> rhs = mat_vec(m.B[2 * j], cyc.comp[j], ex);
    for (K& v : rhs) v = -v;
    std::optional<std::vector<K>> next = solve(m.b[2 * j + 2], rhs, ex);
    if (!next)
      throw std::logic_error("lift component " + std::to_string(2 * j + 2) +
                             " has no solution; the lifting theorem forbids this");
    cyc.comp.push_back(std::move(*next));
  }
  return cyc;
}

template <typename K>
std::vector<std::string> check_cycle(const MixedComplex<K>& m, const NegCyclicCycle<K>& c) {
  std::vector<std::string> out;
  if (static_cast<int>(c.comp.size()) != c.uorder + 1) {
    out.push_back("component count does not match the u-order");
    return out;
  }
  for (int j = 0; j <= c.uorder; ++j)
    if (2 * j > m.bound || static_cast<int>(c.comp[j].size()) != m.dim[2 * j]) {
      out.push_back("component " + std::to_string(2 * j) + " has the wrong dimension");
      return out;
    }
  K ex = m.algebra.exemplar();
  // b vanishes on degree 0 by commutativity, so only the linked identities bite
  for (int j = 0; j < c.uorder; ++j) {
    std::vector<K> lhs =
        alg_add(mat_vec(m.B[2 * j], c.comp[j], ex), mat_vec(m.b[2 * j + 2], c.comp[j + 1], ex));
    if (!alg_is_zero(lhs))
      out.push_back("B(c_" + std::to_string(2 * j) + ") + b(c_" + std::to_string(2 * j + 2) +
                    ") is nonzero");
  }
  return out;
}

}  // namespace rigidtrace
