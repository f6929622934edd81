#include "rigidtrace/json_io.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

namespace rigidtrace {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

const Json& need(const Json& j, const char* key) {
  if (!j.is_object()) bad("expected an object carrying field '" + std::string(key) + "'");
  auto it = j.find(key);
  if (it == j.end()) bad("missing field '" + std::string(key) + "'");
  return *it;
}

long long as_ll(const Json& v, const std::string& what) {
  if (!v.is_number_integer() && !v.is_number_unsigned()) bad(what + " must be an integer");
  return v.get<long long>();
}

int as_int(const Json& v, const std::string& what) {
  long long x = as_ll(v, what);
  if (x < -(1LL << 30) || x > (1LL << 30)) bad(what + " out of range");
  return static_cast<int>(x);
}

int need_int(const Json& j, const char* key) { return as_int(need(j, key), std::string("'") + key + "'"); }

const Json& need_array(const Json& j, const char* key) {
  const Json& v = need(j, key);
  if (!v.is_array()) bad("field '" + std::string(key) + "' must be an array");
  return v;
}

std::string need_str(const Json& j, const char* key) {
  const Json& v = need(j, key);
  if (!v.is_string()) bad("field '" + std::string(key) + "' must be a string");
  return v.get<std::string>();
}

int index_in(const Json& v, int bound, const std::string& what) {
  int x = as_int(v, what);
  if (x < 0 || x >= bound) bad(what + " out of range");
  return x;
}

// strict "all digits" object key, so "07" or "1 " cannot alias an index
int key_index(const std::string& k, int bound) {
  if (k.empty() || k.size() > 9) bad("bad object key '" + k + "'");
  for (char c : k)
    if (!std::isdigit(static_cast<unsigned char>(c))) bad("bad object key '" + k + "'");
  int x = std::stoi(k);
  if (x >= bound || (x != 0 && k[0] == '0') || (x == 0 && k.size() != 1))
    bad("object key '" + k + "' out of range");
  return x;
}

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Rat parse_rat(const Json& v, const std::string& what) {
  if (v.is_number_integer() || v.is_number_unsigned())
    return Rat(static_cast<long>(v.get<long long>()));
  if (!v.is_string()) bad(what + " must be an integer or a \"p/q\" string");
  try {
    return rat_from_string(v.get<std::string>());
  } catch (const std::invalid_argument&) {
    bad(what + " is not a rational: " + v.get<std::string>());
  }
}

Fp parse_fp(const Json& v, long long p, const std::string& what) {
  return Fp(as_ll(v, what), p);
}

Json rat_json(const Rat& r) { return Json(to_string(r)); }
Json fp_json(const Fp& x) { return Json(x.v); }

std::vector<Rat> parse_coeffs_rat(const Json& v, int d, const std::string& what) {
  if (!v.is_array() || static_cast<int>(v.size()) != d)
    bad(what + " must be an array of " + std::to_string(d) + " coefficients");
  std::vector<Rat> out;
  for (const Json& e : v) out.push_back(parse_rat(e, what));
  return out;
}

std::vector<Fp> parse_coeffs_fp(const Json& v, int d, long long p, const std::string& what) {
  if (!v.is_array() || static_cast<int>(v.size()) != d)
    bad(what + " must be an array of " + std::to_string(d) + " coefficients");
  std::vector<Fp> out;
  for (const Json& e : v) out.push_back(parse_fp(e, p, what));
  return out;
}

// Cayley-table shape shared by monoids and groups.
void parse_table(const Json& j, int& n, std::vector<int>& op, int& unit) {
  const Json& els = need_array(j, "elements");
  n = static_cast<int>(els.size());
  if (n < 1) bad("'elements' must be nonempty");
  for (int i = 0; i < n; ++i)
    if (as_int(els[i], "'elements' entry") != i) bad("'elements' must be [0.." + std::to_string(n - 1) + "]");
  const Json& rows = need_array(j, "op");
  if (static_cast<int>(rows.size()) != n) bad("'op' must have one row per element");
  op.clear();
  for (const Json& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != n) bad("'op' rows must have length " + std::to_string(n));
    for (const Json& v : row) op.push_back(index_in(v, n, "'op' entry"));
  }
  unit = index_in(need(j, "unit"), n, "'unit'");
}

Json emit_table(int n, const std::vector<int>& op, int unit) {
  Json j;
  Json els = Json::array();
  for (int i = 0; i < n; ++i) els.push_back(i);
  j["elements"] = els;
  Json rows = Json::array();
  for (int a = 0; a < n; ++a) {
    Json row = Json::array();
    for (int b = 0; b < n; ++b) row.push_back(op[static_cast<size_t>(a) * n + b]);
    rows.push_back(row);
  }
  j["op"] = rows;
  j["unit"] = unit;
  return j;
}

template <typename K>
Json emit_algebra_k(const FDAlgebra<K>& a, const std::function<Json(const K&)>& scalar) {
  Json j;
  j["basis"] = a.basis;
  Json mul = Json::array();
  for (int i = 0; i < a.dim(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < a.dim(); ++k) {
      Json entry = Json::array();
      for (const K& c : a.mul[i][k]) entry.push_back(scalar(c));
      row.push_back(entry);
    }
    mul.push_back(row);
  }
  j["mul"] = mul;
  Json unit = Json::array();
  for (const K& c : a.unit) unit.push_back(scalar(c));
  j["unit"] = unit;
  return j;
}

template <typename K>
Json emit_algmatrix_k(const AlgMatrix<K>& m, const std::function<Json(const K&)>& scalar) {
  Json rows = Json::array();
  for (int i = 0; i < m.r; ++i) {
    Json row = Json::array();
    for (int k = 0; k < m.r; ++k) {
      Json entry = Json::array();
      for (const K& c : m.at(i, k)) entry.push_back(scalar(c));
      row.push_back(entry);
    }
    rows.push_back(row);
  }
  Json j;
  j["matrix"] = rows;
  return j;
}

template <typename K>
Json emit_matrix_k(const Matrix<K>& m, const std::function<Json(const K&)>& scalar) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows; ++i) {
    Json row = Json::array();
    for (int k = 0; k < m.cols; ++k) row.push_back(scalar(m.at(i, k)));
    rows.push_back(row);
  }
  Json j;
  j["rows"] = m.rows;
  j["cols"] = m.cols;
  j["matrix"] = rows;
  return j;
}

void check_matrix_shape(const Json& j, int& r, int& c, const Json*& rows) {
  r = need_int(j, "rows");
  c = need_int(j, "cols");
  if (r < 0 || c < 0) bad("matrix dimensions must be nonnegative");
  rows = &need_array(j, "matrix");
  if (static_cast<int>(rows->size()) != r) bad("'matrix' must have 'rows' rows");
  for (const Json& row : *rows)
    if (!row.is_array() || static_cast<int>(row.size()) != c) bad("'matrix' rows must have 'cols' entries");
}

}  // namespace

Json emit_fincat(const FinCat& c) {
  Json j;
  Json objs = Json::array();
  for (int i = 0; i < c.n_obj; ++i) objs.push_back(i);
  j["objects"] = objs;
  Json mors = Json::array();
  for (int f = 0; f < c.n_mor(); ++f)
    mors.push_back(Json{{"id", f}, {"src", c.src(f)}, {"tgt", c.tgt(f)}});
  j["morphisms"] = mors;
  Json ids = Json::object();
  for (int x = 0; x < c.n_obj; ++x) ids[std::to_string(x)] = c.ident[x];
  j["identities"] = ids;
  Json comp = Json::array();
  int m = c.n_mor();
  for (int g = 0; g < m; ++g)
    for (int f = 0; f < m; ++f) {
      int gf = c.comp[static_cast<size_t>(g) * m + f];
      if (gf >= 0) comp.push_back(Json::array({g, f, gf}));
    }
  j["compose"] = comp;
  return j;
}

FinCat parse_fincat(const Json& j) {
  FinCat c;
  const Json& objs = need_array(j, "objects");
  c.n_obj = static_cast<int>(objs.size());
  for (int i = 0; i < c.n_obj; ++i)
    if (as_int(objs[i], "'objects' entry") != i) bad("'objects' must be [0.." + std::to_string(c.n_obj - 1) + "]");
  const Json& mors = need_array(j, "morphisms");
  int m = static_cast<int>(mors.size());
  for (int f = 0; f < m; ++f) {
    const Json& e = mors[f];
    if (need_int(e, "id") != f) bad("'morphisms' ids must be dense and in order");
    c.mor_src.push_back(index_in(need(e, "src"), c.n_obj, "'src'"));
    c.mor_tgt.push_back(index_in(need(e, "tgt"), c.n_obj, "'tgt'"));
  }
  c.ident.assign(c.n_obj, -1);
  const Json& ids = need(j, "identities");
  if (!ids.is_object()) bad("'identities' must be an object");
  for (const auto& [k, v] : ids.items()) {
    int x = key_index(k, c.n_obj);
    c.ident[x] = index_in(v, m, "identity of object " + k);
  }
  for (int x = 0; x < c.n_obj; ++x)
    if (c.ident[x] < 0) bad("missing identity for object " + std::to_string(x));
  c.comp.assign(static_cast<size_t>(m) * m, -1);
  for (const Json& t : need_array(j, "compose")) {
    if (!t.is_array() || t.size() != 3) bad("'compose' entries must be [g, f, gf] triples");
    int g = index_in(t[0], m, "'compose' g");
    int f = index_in(t[1], m, "'compose' f");
    int gf = index_in(t[2], m, "'compose' gf");
    int& slot = c.comp[static_cast<size_t>(g) * m + f];
    if (slot >= 0 && slot != gf) bad("conflicting 'compose' entries for one pair");
    slot = gf;
  }
  return c;
}

Json emit_functor(const FinFunctor& f) {
  Json j;
  j["omap"] = f.omap;
  j["mmap"] = f.mmap;
  return j;
}

FinFunctor parse_functor(const Json& j) {
  FinFunctor f;
  for (const Json& v : need_array(j, "omap")) f.omap.push_back(as_int(v, "'omap' entry"));
  for (const Json& v : need_array(j, "mmap")) f.mmap.push_back(as_int(v, "'mmap' entry"));
  return f;
}

Json emit_cmonoid(const FinCMonoid& e) { return emit_table(e.n, e.op, e.unit); }

FinCMonoid parse_cmonoid(const Json& j) {
  FinCMonoid e;
  parse_table(j, e.n, e.op, e.unit);
  return e;
}

Json emit_group(const FinGroup& g) { return emit_table(g.n, g.mul, g.unit); }

FinGroup parse_group(const Json& j) {
  FinGroup g;
  parse_table(j, g.n, g.mul, g.unit);
  return g;
}

Json emit_algebra(const FDAlgebra<Rat>& a) {
  Json j = emit_algebra_k<Rat>(a, rat_json);
  j["field"] = "Q";
  return j;
}

Json emit_algebra(const FDAlgebra<Fp>& a) {
  Json j = emit_algebra_k<Fp>(a, fp_json);
  j["field"] = "Fp";
  j["p"] = a.exemplar().p;
  return j;
}

AnyAlgebra parse_algebra(const Json& j) {
  AnyAlgebra out;
  std::string field = need_str(j, "field");
  const Json& basis = need_array(j, "basis");
  int d = static_cast<int>(basis.size());
  if (d < 1) bad("'basis' must be nonempty");
  std::vector<std::string> labels;
  for (const Json& v : basis) {
    if (!v.is_string()) bad("'basis' entries must be strings");
    labels.push_back(v.get<std::string>());
  }
  const Json& mul = need_array(j, "mul");
  if (static_cast<int>(mul.size()) != d) bad("'mul' must have one row per basis vector");
  for (const Json& row : mul)
    if (!row.is_array() || static_cast<int>(row.size()) != d) bad("'mul' rows must have length " + std::to_string(d));
  long long p = 0;
  if (field == "Q") {
    out.rational = true;
  } else if (field == "Fp") {
    p = as_ll(need(j, "p"), "'p'");
    if (!is_prime(p)) bad("'p' must be a prime");
    out.rational = false;
  } else {
    bad("'field' must be \"Q\" or \"Fp\"");
  }
  if (out.rational) {
    out.q.basis = labels;
    for (int i = 0; i < d; ++i) {
      out.q.mul.emplace_back();
      for (int k = 0; k < d; ++k) out.q.mul[i].push_back(parse_coeffs_rat(mul[i][k], d, "'mul' entry"));
    }
    out.q.unit = parse_coeffs_rat(need(j, "unit"), d, "'unit'");
  } else {
    out.fp.basis = labels;
    for (int i = 0; i < d; ++i) {
      out.fp.mul.emplace_back();
      for (int k = 0; k < d; ++k) out.fp.mul[i].push_back(parse_coeffs_fp(mul[i][k], d, p, "'mul' entry"));
    }
    out.fp.unit = parse_coeffs_fp(need(j, "unit"), d, p, "'unit'");
  }
  return out;
}

Json emit_algmatrix(const FDAlgebra<Rat>&, const AlgMatrix<Rat>& m) {
  return emit_algmatrix_k<Rat>(m, rat_json);
}

Json emit_algmatrix(const FDAlgebra<Fp>&, const AlgMatrix<Fp>& m) {
  return emit_algmatrix_k<Fp>(m, fp_json);
}

AlgMatrix<Rat> parse_algmatrix(const Json& j, const FDAlgebra<Rat>& a) {
  const Json& rows = need_array(j, "matrix");
  AlgMatrix<Rat> m;
  m.r = static_cast<int>(rows.size());
  m.d = a.dim();
  for (const Json& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != m.r) bad("'matrix' must be square");
    for (const Json& entry : row) m.e.push_back(parse_coeffs_rat(entry, m.d, "'matrix' entry"));
  }
  return m;
}

AlgMatrix<Fp> parse_algmatrix(const Json& j, const FDAlgebra<Fp>& a) {
  const Json& rows = need_array(j, "matrix");
  AlgMatrix<Fp> m;
  m.r = static_cast<int>(rows.size());
  m.d = a.dim();
  long long p = a.exemplar().p;
  for (const Json& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != m.r) bad("'matrix' must be square");
    for (const Json& entry : row) m.e.push_back(parse_coeffs_fp(entry, m.d, p, "'matrix' entry"));
  }
  return m;
}

Json emit_matrix(const Matrix<Rat>& m) { return emit_matrix_k<Rat>(m, rat_json); }
Json emit_matrix(const Matrix<Fp>& m) { return emit_matrix_k<Fp>(m, fp_json); }

Matrix<Rat> parse_matrix_rat(const Json& j) {
  int r, c;
  const Json* rows;
  check_matrix_shape(j, r, c, rows);
  Matrix<Rat> m(r, c, Rat(0));
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < c; ++k) m.at(i, k) = parse_rat((*rows)[i][k], "'matrix' entry");
  return m;
}

Matrix<Fp> parse_matrix_fp(const Json& j, long long p) {
  int r, c;
  const Json* rows;
  check_matrix_shape(j, r, c, rows);
  Matrix<Fp> m(r, c, Fp(0, p));
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < c; ++k) m.at(i, k) = parse_fp((*rows)[i][k], p, "'matrix' entry");
  return m;
}

Json emit_matcat(const MatCatSpec& s) {
  Json j;
  j["field"] = s.rational ? "Q" : "Fp";
  if (!s.rational) j["p"] = s.p;
  j["maxdim"] = s.maxdim;
  return j;
}

MatCatSpec parse_matcat(const Json& j) {
  MatCatSpec s;
  std::string field = need_str(j, "field");
  if (field == "Q") {
    s.rational = true;
  } else if (field == "Fp") {
    s.rational = false;
    s.p = as_ll(need(j, "p"), "'p'");
    if (!is_prime(s.p)) bad("'p' must be a prime");
  } else {
    bad("'field' must be \"Q\" or \"Fp\"");
  }
  s.maxdim = need_int(j, "maxdim");
  if (s.maxdim < 0) bad("'maxdim' must be nonnegative");
  return s;
}

Json emit_rep(const GroupRep<Rat>& r) {
  Json j;
  int d = r.rho.empty() ? 0 : r.rho[0].rows;
  j["dim"] = d;
  Json gens = Json::array();
  for (size_t e = 0; e < r.rho.size(); ++e) {
    Json rows = Json::array();
    for (int i = 0; i < d; ++i) {
      Json row = Json::array();
      for (int k = 0; k < d; ++k) row.push_back(rat_json(r.rho[e].at(i, k)));
      rows.push_back(row);
    }
    gens.push_back(Json{{"element", static_cast<int>(e)}, {"matrix", rows}});
  }
  j["generators"] = gens;
  return j;
}

GroupRep<Rat> parse_rep(const Json& j, const FinGroup& g) {
  int d = need_int(j, "dim");
  if (d < 1) bad("'dim' must be positive");
  std::vector<std::pair<int, Matrix<Rat>>> gens;
  for (const Json& e : need_array(j, "generators")) {
    int el = index_in(need(e, "element"), g.n, "'element'");
    const Json& rows = need_array(e, "matrix");
    if (static_cast<int>(rows.size()) != d) bad("generator matrices must be 'dim' square");
    Matrix<Rat> m(d, d, Rat(0));
    for (int i = 0; i < d; ++i) {
      if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != d)
        bad("generator matrices must be 'dim' square");
      for (int k = 0; k < d; ++k) m.at(i, k) = parse_rat(rows[i][k], "'matrix' entry");
    }
    gens.emplace_back(el, std::move(m));
  }
  return expand_rep(g, gens, Rat(0));
}

Json emit_bordism(const Bordism& b) {
  auto word = [](const SignedWord& w) {
    std::string s;
    for (int v : w) s += v > 0 ? '+' : '-';
    return s;
  };
  Json arcs = Json::array();
  for (const BordArc& a : b.arcs) arcs.push_back(Json{{"a", a.a}, {"b", a.b}, {"g", a.g}});
  Json j;
  j["source"] = word(b.src);
  j["target"] = word(b.tgt);
  j["arcs"] = arcs;
  j["circles"] = b.circles;
  return j;
}

Bordism parse_bordism(const Json& j) {
  auto word = [](const std::string& s, const char* what) {
    SignedWord w;
    for (char c : s) {
      if (c == '+')
        w.push_back(1);
      else if (c == '-')
        w.push_back(-1);
      else
        bad(std::string(what) + " must be a string of '+' and '-'");
    }
    return w;
  };
  Bordism b;
  b.src = word(need_str(j, "source"), "'source'");
  b.tgt = word(need_str(j, "target"), "'target'");
  int slots = static_cast<int>(b.src.size() + b.tgt.size());
  for (const Json& e : need_array(j, "arcs")) {
    BordArc a;
    a.a = index_in(need(e, "a"), slots, "arc endpoint 'a'");
    a.b = index_in(need(e, "b"), slots, "arc endpoint 'b'");
    a.g = as_int(need(e, "g"), "arc label 'g'");
    if (a.g < 0) bad("arc label 'g' must be nonnegative");
    b.arcs.push_back(a);
  }
  for (const Json& v : need_array(j, "circles")) {
    int c = as_int(v, "'circles' entry");
    if (c < 0) bad("'circles' entries must be nonnegative");
    b.circles.push_back(c);
  }
  return b;
}

CatDiagram parse_diagram(const Json& j, const std::function<Json(const std::string&)>& load) {
  CatDiagram d;
  d.base = parse_fincat(load(need_str(j, "base")));
  for (const Json& v : need_array(j, "fibers")) {
    if (!v.is_string()) bad("'fibers' entries must be file names");
    d.fiber.push_back(parse_fincat(load(v.get<std::string>())));
  }
  for (const Json& v : need_array(j, "arrows")) d.arrow.push_back(parse_functor(v));
  return d;
}

GammaDump dump_gamma(const GammaSet& x) {
  GammaDump d;
  d.bound = x.bound;
  d.sizes = x.size;
  for (int n = 0; n <= x.bound; ++n) {
    std::vector<std::vector<long long>> tabs;
    for (int i = 1; i <= n; ++i) {
      GammaMap u = segal_map(n, i);
      std::vector<long long> t;
      for (long long k = 0; k < x.size[n]; ++k) t.push_back(x.act(u, k));
      tabs.push_back(std::move(t));
    }
    d.segal.push_back(std::move(tabs));
    GammaMap fold = gamma_fold(n);
    std::vector<long long> ft;
    for (long long k = 0; k < x.size[n]; ++k) ft.push_back(x.act(fold, k));
    d.fold.push_back(std::move(ft));
  }
  return d;
}

Json emit_gamma_dump(const GammaDump& d) {
  Json j;
  j["bound"] = d.bound;
  j["sizes"] = d.sizes;
  j["segal"] = d.segal;
  j["fold"] = d.fold;
  return j;
}

GammaDump parse_gamma_dump(const Json& j) {
  GammaDump d;
  d.bound = need_int(j, "bound");
  if (d.bound < 0) bad("'bound' must be nonnegative");
  for (const Json& v : need_array(j, "sizes")) {
    long long s = as_ll(v, "'sizes' entry");
    if (s < 0) bad("'sizes' entries must be nonnegative");
    d.sizes.push_back(s);
  }
  if (static_cast<int>(d.sizes.size()) != d.bound + 1) bad("'sizes' must have bound+1 entries");
  const Json& seg = need_array(j, "segal");
  const Json& fold = need_array(j, "fold");
  if (static_cast<int>(seg.size()) != d.bound + 1 || static_cast<int>(fold.size()) != d.bound + 1)
    bad("'segal' and 'fold' must have bound+1 entries");
  for (int n = 0; n <= d.bound; ++n) {
    if (!seg[n].is_array() || static_cast<int>(seg[n].size()) != n)
      bad("'segal' level " + std::to_string(n) + " must list " + std::to_string(n) + " tables");
    std::vector<std::vector<long long>> tabs;
    for (const Json& t : seg[n]) {
      if (!t.is_array() || static_cast<long long>(t.size()) != d.sizes[n])
        bad("'segal' tables must match the level size");
      std::vector<long long> tab;
      for (const Json& v : t) {
        long long y = as_ll(v, "'segal' entry");
        if (y < 0 || y >= d.sizes[1]) bad("'segal' entry out of range");
        tab.push_back(y);
      }
      tabs.push_back(std::move(tab));
    }
    d.segal.push_back(std::move(tabs));
    if (!fold[n].is_array() || static_cast<long long>(fold[n].size()) != d.sizes[n])
      bad("'fold' tables must match the level size");
    std::vector<long long> ft;
    for (const Json& v : fold[n]) {
      long long y = as_ll(v, "'fold' entry");
      if (y < 0 || y >= d.sizes[1]) bad("'fold' entry out of range");
      ft.push_back(y);
    }
    d.fold.push_back(std::move(ft));
  }
  return d;
}

}  // namespace rigidtrace
