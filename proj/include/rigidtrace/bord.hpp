#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rigidtrace/matrix.hpp"

namespace rigidtrace {

// Finite group as a flat multiplication table, op(a, b) = row a column b.
// Representations compose the same way: rho(op(a, b)) = rho(a) * rho(b).
struct FinGroup {
  int n = 0;
  int unit = 0;
  std::vector<int> mul;  // n * n entries

  int op(int a, int b) const { return mul[static_cast<size_t>(a) * n + b]; }

  int inv(int a) const {
    for (int b = 0; b < n; ++b)
      if (op(a, b) == unit && op(b, a) == unit) return b;
    throw std::invalid_argument("inv: element has no inverse");
  }

  // smallest conjugate, the canonical name of the conjugacy class
  int class_rep(int g) const {
    int best = g;
    for (int h = 0; h < n; ++h) best = std::min(best, op(op(h, g), inv(h)));
    return best;
  }

  std::vector<int> class_reps() const;
};

std::vector<std::string> check_group(const FinGroup& g);

FinGroup group_trivial();
FinGroup group_cyclic(int n);
FinGroup group_sym3();  // permutations of three letters, composition right to left

// Compact oriented 0-manifold: +1 for a positively oriented point, -1 else.
using SignedWord = std::vector<int>;

// Arc of a bordism between endpoint slots a < b; sources come first in the
// slot numbering, then targets. The label is the monodromy read from a to b;
// reading the other way inverts it.
struct BordArc {
  int a = 0;
  int b = 0;
  int g = 0;
  bool operator==(const BordArc& o) const { return a == o.a && b == o.b && g == o.g; }
};

// Diffeomorphism class of an oriented 1-bordism with monodromy: a labeled
// perfect matching of the boundary slots plus free circles, which only
// remember the conjugacy class of their monodromy. Arcs sorted by least
// endpoint and circles sorted make equality syntactic.
struct Bordism {
  SignedWord src;
  SignedWord tgt;
  std::vector<BordArc> arcs;
  std::vector<int> circles;  // conjugacy class representatives

  bool operator==(const Bordism& o) const {
    return src == o.src && tgt == o.tgt && arcs == o.arcs && circles == o.circles;
  }
};

// A slot is entering when the strand is oriented into the bordism there:
// positive sources and negative targets. Every valid arc has exactly one
// entering and one leaving endpoint; that single rule is the sign
// compatibility of through strands, cups and caps at once.
inline bool bord_slot_enters(const Bordism& b, int slot) {
  int m = static_cast<int>(b.src.size());
  return slot < m ? b.src[slot] > 0 : b.tgt[slot - m] < 0;
}

std::vector<std::string> check_bordism(const FinGroup& grp, const Bordism& b);

Bordism bord_strand(const FinGroup& grp, int g);  // endomorphism of (+), label g
Bordism bord_trace(const FinGroup& grp, int g);   // empty boundary, one circle [g]

// The bordism category over a finite group. Objects are signed words with
// concatenation as a strict tensor; composition glues matchings along the
// shared boundary, multiplying monodromies along concatenated strands and
// emitting a circle for every closed loop. objects() truncates at max_points
// letters and hom() at max_circles circles; composition and tensor stay
// total regardless of the view bounds.
struct BordCat {
  using Obj = SignedWord;
  using Mor = Bordism;

  FinGroup grp;
  int max_points = 2;
  int max_circles = 0;

  Obj unit() const { return {}; }
  Obj tensor_obj(const Obj& a, const Obj& b) const;
  Obj src(const Mor& f) const { return f.src; }
  Obj tgt(const Mor& f) const { return f.tgt; }
  Mor id(const Obj& x) const;
  Mor compose(const Mor& g, const Mor& f) const;
  Mor tensor_mor(const Mor& f, const Mor& g) const;
  Mor sym(const Obj& x, const Obj& y) const;
  std::vector<Obj> objects() const;
  long long hom_size(const Obj& a, const Obj& b) const;
  std::vector<Mor> hom(const Obj& a, const Obj& b) const;
};

// Group element to invertible matrix, one entry per element.
template <typename K>
struct GroupRep {
  std::vector<Matrix<K>> rho;
};

template <typename K>
std::vector<std::string> check_rep(const FinGroup& g, const GroupRep<K>& rep, const K& ex) {
  std::vector<std::string> out;
  if (static_cast<int>(rep.rho.size()) != g.n) {
    out.push_back("one matrix per group element required");
    return out;
  }
  int d = rep.rho[0].rows;
  if (d < 1) {
    out.push_back("representation dimension must be positive");
    return out;
  }
  for (int a = 0; a < g.n; ++a)
    if (rep.rho[a].rows != d || rep.rho[a].cols != d) {
      out.push_back("matrix for element " + std::to_string(a) + " is not " + std::to_string(d) +
                    " square");
      return out;
    }
  if (!(rep.rho[g.unit] == mat_identity(d, ex)))
    out.push_back("unit does not map to the identity matrix");
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b)
      if (!(rep.rho[a] * rep.rho[b] == rep.rho[g.op(a, b)]))
        out.push_back("group law fails at (" + std::to_string(a) + "," + std::to_string(b) + ")");
  return out;
}

template <typename K>
std::vector<K> rep_character(const GroupRep<K>& rep, const K& ex) {
  std::vector<K> out;
  for (const Matrix<K>& m : rep.rho) out.push_back(mat_trace(m, ex));
  return out;
}

// Matrices for a generating set, closed under multiplication into the full
// table. Throws when the listed elements do not generate the group.
template <typename K>
GroupRep<K> expand_rep(const FinGroup& g, const std::vector<std::pair<int, Matrix<K>>>& gens,
                       const K& ex) {
  int d = gens.empty() ? 1 : gens.front().second.rows;
  GroupRep<K> rep;
  rep.rho.assign(g.n, mat_zero(d, d, ex));
  std::vector<char> known(g.n, 0);
  rep.rho[g.unit] = mat_identity(d, ex);
  known[g.unit] = 1;
  for (const auto& [e, mat] : gens) {
    if (e < 0 || e >= g.n) throw std::invalid_argument("expand_rep: element out of range");
    if (mat.rows != d || mat.cols != d)
      throw std::invalid_argument("expand_rep: generator matrices must share one square size");
    rep.rho[e] = mat;
    known[e] = 1;
  }
  bool grew = true;
  while (grew) {
    grew = false;
    for (int x = 0; x < g.n; ++x) {
      if (!known[x]) continue;
      for (const auto& [e, mat] : gens) {
        int y = g.op(e, x);
        if (known[y]) continue;
        rep.rho[y] = mat * rep.rho[x];
        known[y] = 1;
        grew = true;
      }
    }
  }
  for (int x = 0; x < g.n; ++x)
    if (!known[x]) throw std::invalid_argument("expand_rep: listed elements do not generate");
  return rep;
}

template <typename K>
GroupRep<K> rep_trivial(const FinGroup& g, const K& ex) {
  GroupRep<K> r;
  r.rho.assign(g.n, mat_identity(1, ex));
  return r;
}

template <typename K>
GroupRep<K> rep_sign_cyclic2(const K& ex) {
  GroupRep<K> r;
  r.rho.assign(2, mat_identity(1, ex));
  r.rho[1].at(0, 0) = -kone(ex);
  return r;
}

// generator of order three as the companion matrix of x^2 + x + 1
template <typename K>
Matrix<K> rotation_order3(const K& ex) {
  Matrix<K> a = mat_zero(2, 2, ex);
  a.at(0, 1) = -kone(ex);
  a.at(1, 0) = kone(ex);
  a.at(1, 1) = -kone(ex);
  return a;
}

template <typename K>
GroupRep<K> rep_rotation_cyclic3(const K& ex) {
  Matrix<K> a = rotation_order3(ex);
  GroupRep<K> r;
  r.rho = {mat_identity(2, ex), a, a * a};
  return r;
}

template <typename K>
GroupRep<K> rep_sign_sym3(const K& ex) {
  GroupRep<K> r;
  r.rho.assign(6, mat_identity(1, ex));
  for (int g : {3, 4, 5}) r.rho[g].at(0, 0) = -kone(ex);
  return r;
}

// the two dimensional irreducible of the symmetric group on three letters
template <typename K>
GroupRep<K> rep_std_sym3(const K& ex) {
  Matrix<K> a = rotation_order3(ex);
  Matrix<K> s = mat_zero(2, 2, ex);
  s.at(0, 1) = kone(ex);
  s.at(1, 0) = kone(ex);
  GroupRep<K> r;
  r.rho = {mat_identity(2, ex), a, a * a, s, s * a, s * (a * a)};
  return r;
}

// Tensor network evaluation: each arc contributes rho(h)[exit, enter] with h
// the label read along the strand's flow, each circle a character factor.
// Rows index the target tensor space, columns the source, first slot major,
// matching the Kronecker convention of the matrix category.
template <typename K>
Matrix<K> evaluate(const FinGroup& grp, const GroupRep<K>& rep, const Bordism& bd, const K& ex) {
  std::vector<std::string> bad = check_bordism(grp, bd);
  if (!bad.empty()) throw std::invalid_argument("evaluate: " + bad.front());
  bad = check_rep(grp, rep, ex);
  if (!bad.empty()) throw std::invalid_argument("evaluate: " + bad.front());
  int d = rep.rho[0].rows;
  int m = static_cast<int>(bd.src.size());
  int n = static_cast<int>(bd.tgt.size());
  long long cols = 1, rows = 1;
  for (int i = 0; i < m; ++i) {
    cols *= d;
    if (cols > (1 << 20)) throw std::length_error("evaluate: source tensor space too large");
  }
  for (int j = 0; j < n; ++j) {
    rows *= d;
    if (rows > (1 << 20)) throw std::length_error("evaluate: target tensor space too large");
  }
  struct Leg {
    int enter = 0;
    int exit = 0;
    const Matrix<K>* w = nullptr;
  };
  std::vector<Leg> legs;
  for (const BordArc& arc : bd.arcs) {
    bool fwd = bord_slot_enters(bd, arc.a);
    int h = fwd ? arc.g : grp.inv(arc.g);
    legs.push_back({fwd ? arc.a : arc.b, fwd ? arc.b : arc.a, &rep.rho[h]});
  }
  K cf = kone(ex);
  for (int c : bd.circles) cf = cf * mat_trace(rep.rho[c], ex);
  Matrix<K> out(static_cast<int>(rows), static_cast<int>(cols), kzero(ex));
  std::vector<int> idx(static_cast<size_t>(m) + n, 0);
  for (long long r = 0; r < rows; ++r)
    for (long long c = 0; c < cols; ++c) {
      long long cc = c;
      for (int i = m - 1; i >= 0; --i) {
        idx[i] = static_cast<int>(cc % d);
        cc /= d;
      }
      long long rr = r;
      for (int j = n - 1; j >= 0; --j) {
        idx[static_cast<size_t>(m) + j] = static_cast<int>(rr % d);
        rr /= d;
      }
      K w = cf;
      for (const Leg& l : legs) w = w * l.w->at(idx[l.exit], idx[l.enter]);
      out.at(static_cast<int>(r), static_cast<int>(c)) = w;
    }
  return out;
}

}  // namespace rigidtrace
