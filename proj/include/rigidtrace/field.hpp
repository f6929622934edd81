#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rigidtrace {

// Exact rational scalar. All core arithmetic in the library is exact; there is
// no floating point anywhere.
using Rat = mpq_class;

inline Rat rat_from_string(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

// Prime-field element carrying its modulus. Values are kept in [0, p).
// Mixing moduli is a programming error and throws.
struct Fp {
  std::int64_t v = 0;
  std::int64_t p = 2;

  Fp() = default;
  Fp(std::int64_t value, std::int64_t modulus) : v(value % modulus), p(modulus) {
    if (modulus < 2) throw std::invalid_argument("modulus must be >= 2");
    if (v < 0) v += p;
  }

  friend Fp operator+(const Fp& a, const Fp& b) {
    a.check(b);
    return Fp(a.v + b.v, a.p);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    a.check(b);
    return Fp(a.v - b.v, a.p);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    a.check(b);
    return Fp(a.v * b.v, a.p);
  }
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
  Fp operator-() const { return Fp(-v, p); }
  friend bool operator==(const Fp& a, const Fp& b) {
    a.check(b);
    return a.v == b.v;
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

  Fp inverse() const {
    if (v == 0) throw std::domain_error("division by zero in F_p");
    // extended Euclid; p is prime so every nonzero element is invertible
    std::int64_t a = v, m = p, x0 = 0, x1 = 1;
    while (a > 1) {
      std::int64_t q = a / m;
      std::int64_t t = m;
      m = a % m;
      a = t;
      t = x0;
      x0 = x1 - q * x0;
      x1 = t;
    }
    return Fp(x1, p);
  }

  void check(const Fp& o) const {
    if (p != o.p) throw std::invalid_argument("mixed moduli");
  }
};

inline std::string to_string(const Fp& x) { return std::to_string(x.v); }

// Exemplar-based constants: Fp needs a modulus to make 0 and 1, so every
// generic routine takes constants from an element it already has.
inline Rat kzero(const Rat&) { return Rat(0); }
inline Rat kone(const Rat&) { return Rat(1); }
inline Fp kzero(const Fp& e) { return Fp(0, e.p); }
inline Fp kone(const Fp& e) { return Fp(1, e.p); }

inline Rat kfrom_int(const Rat&, long v) { return Rat(v); }
inline Fp kfrom_int(const Fp& e, long v) { return Fp(v, e.p); }

template <typename K>
bool kis_zero(const K& x) {
  return x == kzero(x);
}

}  // namespace rigidtrace
