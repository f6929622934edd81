#include "rigidtrace/gamma.hpp"

#include <map>
#include <stdexcept>

namespace rigidtrace {

GammaMap gamma_id(int n) {
  GammaMap u{n, n, std::vector<int>(n + 1)};
  for (int i = 0; i <= n; ++i) u.f[i] = i;
  return u;
}

GammaMap segal_map(int n, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("segal_map: index out of range");
  GammaMap u{n, 1, std::vector<int>(n + 1, 0)};
  u.f[i] = 1;
  return u;
}

std::vector<GammaMap> gamma_maps(int n, int m) {
  std::vector<GammaMap> out;
  GammaMap u{n, m, std::vector<int>(n + 1, 0)};
  while (true) {
    out.push_back(u);
    int i = n;
    while (i >= 1 && u.f[i] == m) u.f[i--] = 0;
    if (i < 1) break;
    ++u.f[i];
  }
  return out;
}

GammaMap compose_gamma(const GammaMap& g, const GammaMap& f) {
  if (f.m != g.n) throw std::invalid_argument("compose_gamma: source/target mismatch");
  GammaMap u{f.n, g.m, std::vector<int>(f.n + 1)};
  for (int i = 0; i <= f.n; ++i) u.f[i] = g.f[f.f[i]];
  return u;
}

int smash_index(int n, int m, int i, int j) {
  (void)n;
  return (i - 1) * m + j;
}

GammaMap shuffle(int n, int m) {
  GammaMap u{n * m, n * m, std::vector<int>(n * m + 1, 0)};
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= m; ++j) u.f[smash_index(n, m, i, j)] = smash_index(m, n, j, i);
  return u;
}

std::vector<std::string> check_cmonoid(const FinCMonoid& e) {
  std::vector<std::string> bad;
  if (e.n <= 0 || static_cast<int>(e.op.size()) != e.n * e.n || e.unit < 0 || e.unit >= e.n) {
    bad.push_back("malformed table");
    return bad;
  }
  for (int a = 0; a < e.n; ++a)
    for (int b = 0; b < e.n; ++b) {
      if (e.mul(a, b) < 0 || e.mul(a, b) >= e.n) {
        bad.push_back("product out of range");
        return bad;
      }
      if (e.mul(a, b) != e.mul(b, a))
        bad.push_back("not commutative at (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
  for (int a = 0; a < e.n; ++a)
    if (e.mul(e.unit, a) != a) bad.push_back("unit fails at " + std::to_string(a));
  for (int a = 0; a < e.n; ++a)
    for (int b = 0; b < e.n; ++b)
      for (int c = 0; c < e.n; ++c)
        if (e.mul(e.mul(a, b), c) != e.mul(a, e.mul(b, c)))
          bad.push_back("not associative at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                        std::to_string(c) + ")");
  return bad;
}

FinCMonoid cmonoid_trivial() { return FinCMonoid{1, {0}, 0}; }

FinCMonoid cmonoid_cyclic(int k) {
  FinCMonoid e{k, std::vector<int>(static_cast<size_t>(k) * k), 0};
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) e.op[static_cast<size_t>(a) * k + b] = (a + b) % k;
  return e;
}

FinCMonoid cmonoid_truncated_add() {
  // elements 0,1,2,3 with 3 = T; sums beyond 2 saturate to T
  FinCMonoid e{4, std::vector<int>(16), 0};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      int s = (a == 3 || b == 3) ? 3 : a + b;
      e.op[static_cast<size_t>(a) * 4 + b] = s > 2 ? 3 : s;
    }
  return e;
}

std::vector<int> tuple_decode(long long idx, int len, int base) {
  std::vector<int> x(len);
  for (int i = len - 1; i >= 0; --i) {
    x[i] = static_cast<int>(idx % base);
    idx /= base;
  }
  return x;
}

long long tuple_encode(const std::vector<int>& x, int base) {
  long long idx = 0;
  for (int v : x) idx = idx * base + v;
  return idx;
}

namespace {
long long pow_ll(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}
}  // namespace

GammaSet nerve_monoid(const FinCMonoid& e, int bound) {
  GammaSet x;
  x.bound = bound;
  for (int n = 0; n <= bound; ++n) x.size.push_back(pow_ll(e.n, n));
  x.act = [e](const GammaMap& u, long long idx) -> long long {
    std::vector<int> in = tuple_decode(idx, u.n, e.n);
    std::vector<int> out(u.m, e.unit);
    for (int i = 1; i <= u.n; ++i)
      if (u.f[i] != 0) out[u.f[i] - 1] = e.mul(out[u.f[i] - 1], in[i - 1]);
    return tuple_encode(out, e.n);
  };
  return x;
}

GammaSet padded_nerve(const FinCMonoid& e, int bound) {
  GammaSet x;
  x.bound = bound;
  for (int n = 0; n <= bound; ++n) x.size.push_back(pow_ll(e.n, n + 1));
  x.act = [e](const GammaMap& u, long long idx) -> long long {
    std::vector<int> in = tuple_decode(idx, u.n + 1, e.n);
    std::vector<int> out(u.m + 1, e.unit);
    out[0] = in[0];
    for (int i = 1; i <= u.n; ++i)
      if (u.f[i] != 0) out[u.f[i]] = e.mul(out[u.f[i]], in[i]);
    return tuple_encode(out, e.n);
  };
  return x;
}

std::vector<std::string> check_gamma_functorial(const GammaSet& x, int bound) {
  std::vector<std::string> bad;
  for (int n = 0; n <= bound; ++n) {
    GammaMap id = gamma_id(n);
    for (long long v = 0; v < x.size[n]; ++v)
      if (x.act(id, v) != v) {
        bad.push_back("identity fails at level " + std::to_string(n));
        break;
      }
  }
  for (int a = 0; a <= bound; ++a)
    for (int b = 0; b <= bound; ++b) {
      auto us = gamma_maps(a, b);
      for (int c = 0; c <= bound; ++c) {
        auto vs = gamma_maps(b, c);
        for (const auto& u : us)
          for (const auto& v : vs) {
            GammaMap vu = compose_gamma(v, u);
            for (long long w = 0; w < x.size[a]; ++w)
              if (x.act(vu, w) != x.act(v, x.act(u, w))) {
                bad.push_back("functoriality fails on a pair [" + std::to_string(a) + "]->[" +
                              std::to_string(b) + "]->[" + std::to_string(c) + "]");
                return bad;
              }
          }
      }
    }
  return bad;
}

SpecialReport is_special(const GammaSet& x, int bound) {
  SpecialReport r;
  r.level_ok.assign(bound + 1, true);
  auto fail = [&](int level, const std::string& why) {
    r.level_ok[level] = false;
    if (r.failing_level < 0) {
      r.failing_level = level;
      r.reason = why;
    }
  };
  if (x.size[0] != 1) fail(0, "level 0 has " + std::to_string(x.size[0]) + " elements");
  for (int n = 1; n <= bound; ++n) {
    long long expect = 1;
    for (int i = 0; i < n; ++i) expect *= x.size[1];
    if (x.size[n] != expect) {
      fail(n, "level size mismatch");
      continue;
    }
    std::map<std::vector<long long>, long long> seen;
    bool inj = true;
    for (long long v = 0; v < x.size[n] && inj; ++v) {
      std::vector<long long> img(n);
      for (int i = 1; i <= n; ++i) img[i - 1] = x.act(segal_map(n, i), v);
      if (!seen.emplace(img, v).second) {
        fail(n, "combined Segal map not injective");
        inj = false;
      }
    }
  }
  r.ok = r.failing_level < 0;
  return r;
}

}  // namespace rigidtrace
