#include "rigidtrace/cli.hpp"

#include <cerrno>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rigidtrace/json_io.hpp"
#include "rigidtrace/selftest.hpp"
#include "rigidtrace/simplices.hpp"
#include "rigidtrace/smc.hpp"

namespace rigidtrace {
namespace {

// Usage errors and unreadable or ill-formed inputs exit with code 2;
// validation failures reported by the check_* functions exit with code 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// RIGIDTRACE_CAP overrides the per-verb enumeration caps. The selftest verb
// never reads it, so acceptance runs are identical across environments.
long long env_cap(long long dflt) {
  const char* s = std::getenv("RIGIDTRACE_CAP");
  if (s == nullptr || *s == '\0') return dflt;
  errno = 0;
  char* end = nullptr;
  long long v = std::strtoll(s, &end, 10);
  if (errno != 0 || end == s || *end != '\0' || v <= 0)
    throw UsageError("RIGIDTRACE_CAP must be a positive integer");
  return v;
}

Json load_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

// Shape errors from the codecs become usage errors tagged with the file.
template <typename F>
auto parse_as(const std::string& path, F&& f) -> decltype(f(std::declval<const Json&>())) {
  Json j = load_json(path);
  try {
    return f(j);
  } catch (const std::invalid_argument& e) {
    throw UsageError(path + ": " + e.what());
  }
}

// Fiber and arrow files are resolved relative to the diagram file.
CatDiagram load_diagram_file(const std::string& path) {
  std::filesystem::path dir = std::filesystem::path(path).parent_path();
  Json j = load_json(path);
  try {
    return parse_diagram(j, [&dir](const std::string& rel) { return load_json((dir / rel).string()); });
  } catch (const std::invalid_argument& e) {
    throw UsageError(path + ": " + e.what());
  }
}

std::string scal(const Rat& x) { return to_string(x); }
std::string scal(const Fp& x) { return to_string(x); }

template <typename K>
std::string coeff_tuple(const std::vector<K>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += scal(v[i]);
  }
  return s + ")";
}

template <typename K>
Json coeff_json(const std::vector<K>& v) {
  Json a = Json::array();
  for (const K& x : v) a.push_back(scal(x));
  return a;
}

int report_invalid(bool js, std::ostream& out, const std::string& subject,
                   const std::vector<std::string>& viol) {
  if (js) {
    out << Json{{"valid", false}, {"subject", subject}, {"violations", viol}}.dump(2) << "\n";
  } else {
    out << subject << ": invalid\n";
    for (const std::string& v : viol) out << "  " << v << "\n";
  }
  return 1;
}

// Level n of the nerve has |E|^n elements (one more factor when padded);
// refuse bounds whose tables would not fit a desk-scale dump.
void guard_gamma_size(const FinCMonoid& e, int bound, bool padded) {
  long long n = std::max(1, e.n);
  long long sz = 1;
  int top = padded ? bound + 1 : bound;
  for (int k = 0; k < top; ++k) {
    sz *= n;
    if (sz > 1000000)
      throw UsageError("bound too large for this monoid: a nerve level exceeds 10^6 elements");
  }
}

template <typename K>
MixedComplex<K> complex_guarded(const FDAlgebra<K>& a, int bound, bool normalized) {
  try {
    return normalized ? normalized_complex(a, bound) : mixed_complex(a, bound);
  } catch (const std::length_error& e) {
    throw UsageError(std::string("complex too large: ") + e.what());
  }
}

struct CliOpts {
  std::string category, monoid, algebra, group, rep, bordism, diagram, smc, endo, idempotent;
  int object = 0;
  int degree = 0;
  int uorder = 0;
  int bound = -1;  // per-verb default filled in by the handler
  bool padded = false;
  bool normalized = false;
};

int do_check(const CliOpts& o, bool js, std::ostream& out) {
  if (o.category.empty() && o.monoid.empty() && o.algebra.empty() && o.group.empty() &&
      o.rep.empty() && o.bordism.empty() && o.diagram.empty())
    throw UsageError(
        "nothing to check: pass --category, --monoid, --algebra, --group, --rep, --bordism or "
        "--diagram");
  if ((!o.rep.empty() || !o.bordism.empty()) && o.group.empty())
    throw UsageError("--rep and --bordism need --group for context");

  struct Entry {
    std::string file, kind;
    std::vector<std::string> viol;
  };
  std::vector<Entry> entries;

  if (!o.category.empty())
    entries.push_back({o.category, "category", check_category(parse_as(o.category, parse_fincat))});
  if (!o.monoid.empty())
    entries.push_back({o.monoid, "monoid", check_cmonoid(parse_as(o.monoid, parse_cmonoid))});
  if (!o.algebra.empty()) {
    AnyAlgebra a = parse_as(o.algebra, parse_algebra);
    entries.push_back({o.algebra, "algebra", a.rational ? check_algebra(a.q) : check_algebra(a.fp)});
  }
  FinGroup grp;
  bool group_ok = false;
  if (!o.group.empty()) {
    grp = parse_as(o.group, parse_group);
    std::vector<std::string> v = check_group(grp);
    group_ok = v.empty();
    entries.push_back({o.group, "group", std::move(v)});
  }
  if (!o.rep.empty()) {
    if (group_ok) {
      GroupRep<Rat> rep = parse_as(o.rep, [&](const Json& j) { return parse_rep(j, grp); });
      entries.push_back({o.rep, "representation", check_rep(grp, rep, Rat(0))});
    } else {
      entries.push_back({o.rep, "representation", {"skipped: the group is invalid"}});
    }
  }
  if (!o.bordism.empty()) {
    if (group_ok) {
      Bordism b = parse_as(o.bordism, parse_bordism);
      entries.push_back({o.bordism, "bordism", check_bordism(grp, b)});
    } else {
      entries.push_back({o.bordism, "bordism", {"skipped: the group is invalid"}});
    }
  }
  if (!o.diagram.empty())
    entries.push_back({o.diagram, "diagram", check_diagram(load_diagram_file(o.diagram))});

  bool all = true;
  for (const Entry& e : entries) all = all && e.viol.empty();
  if (js) {
    Json arr = Json::array();
    for (const Entry& e : entries)
      arr.push_back(
          Json{{"file", e.file}, {"kind", e.kind}, {"valid", e.viol.empty()}, {"violations", e.viol}});
    out << Json{{"valid", all}, {"results", arr}}.dump(2) << "\n";
  } else if (all) {
    out << "valid\n";
  } else {
    for (const Entry& e : entries) {
      if (e.viol.empty()) {
        out << e.file << ": valid\n";
        continue;
      }
      out << e.file << ": invalid\n";
      for (const std::string& v : e.viol) out << "  " << v << "\n";
    }
  }
  return all ? 0 : 1;
}

int do_nerve(const CliOpts& o, bool js, std::ostream& out) {
  int bound = o.bound < 0 ? 4 : o.bound;
  if (bound < 0) throw UsageError("--bound must be nonnegative");
  FinCMonoid e = parse_as(o.monoid, parse_cmonoid);
  std::vector<std::string> bad = check_cmonoid(e);
  if (!bad.empty()) return report_invalid(js, out, o.monoid, bad);
  guard_gamma_size(e, bound, o.padded);
  GammaSet x = o.padded ? padded_nerve(e, bound) : nerve_monoid(e, bound);
  GammaDump d = dump_gamma(x);
  if (js) {
    out << emit_gamma_dump(d).dump(2) << "\n";
  } else {
    out << "levels 0.." << bound << ":";
    for (long long s : d.sizes) out << " " << s;
    out << "\n";
    out << "Segal and fold tables computed; use --format json for the full dump\n";
  }
  return 0;
}

int do_special(const CliOpts& o, bool js, std::ostream& out) {
  int bound = o.bound < 0 ? 4 : o.bound;
  if (bound < 0) throw UsageError("--bound must be nonnegative");
  FinCMonoid e = parse_as(o.monoid, parse_cmonoid);
  std::vector<std::string> bad = check_cmonoid(e);
  if (!bad.empty()) return report_invalid(js, out, o.monoid, bad);
  guard_gamma_size(e, bound, o.padded);
  GammaSet x = o.padded ? padded_nerve(e, bound) : nerve_monoid(e, bound);
  SpecialReport r = is_special(x, bound);
  if (js) {
    Json lv = Json::array();
    for (bool b : r.level_ok) lv.push_back(b);
    out << Json{{"special", r.ok},
                {"failing_level", r.failing_level},
                {"reason", r.reason},
                {"level_ok", lv}}
               .dump(2)
        << "\n";
  } else if (r.ok) {
    out << "special through level " << bound << "\n";
  } else {
    out << "not special: level " << r.failing_level << ": " << r.reason << "\n";
  }
  return r.ok ? 0 : 1;
}

int do_integrate(const CliOpts& o, bool js, std::ostream& out) {
  CatDiagram d = load_diagram_file(o.diagram);
  std::vector<std::string> bad = check_diagram(d);
  if (!bad.empty()) return report_invalid(js, out, o.diagram, bad);
  FiberedCat p = integrate(d);
  if (js) {
    Json flags = Json::array();
    for (bool b : p.cartesian) flags.push_back(b);
    out << Json{{"total", emit_fincat(p.total)}, {"projection", emit_functor(p.proj)}, {"cartesian", flags}}
               .dump(2)
        << "\n";
  } else {
    out << "total category: " << p.total.n_obj << " objects, " << p.total.n_mor() << " morphisms\n";
    out << "projection omap:";
    for (int v : p.proj.omap) out << " " << v;
    out << "\n";
    long long nc = 0;
    for (bool b : p.cartesian) nc += b ? 1 : 0;
    out << "cartesian morphisms: " << nc << " of " << p.cartesian.size() << "\n";
  }
  return 0;
}

int do_sections(const CliOpts& o, bool js, std::ostream& out) {
  CatDiagram d = load_diagram_file(o.diagram);
  std::vector<std::string> bad = check_diagram(d);
  if (!bad.empty()) return report_invalid(js, out, o.diagram, bad);
  SectionReport r = cartesian_sections_roundtrip(d, static_cast<std::size_t>(env_cap(100000)));
  if (js) {
    Json per = Json::array();
    for (bool b : r.per_object) per.push_back(b);
    out << Json{{"ok", r.ok},
                {"per_object", per},
                {"cap_exceeded", r.cap_exceeded},
                {"failure", r.failure}}
               .dump(2)
        << "\n";
  } else {
    for (size_t i = 0; i < r.per_object.size(); ++i)
      out << "base object " << i << ": "
          << (r.per_object[i] ? "sections recover the fiber" : "mismatch") << "\n";
    if (r.cap_exceeded) out << "enumeration cap exceeded; raise RIGIDTRACE_CAP to finish\n";
    if (r.ok)
      out << "cartesian sections recover every fiber\n";
    else
      out << "failure: " << r.failure << "\n";
  }
  return r.ok ? 0 : 1;
}

int do_simplices(const CliOpts& o, bool js, std::ostream& out) {
  int bound = o.bound < 0 ? 3 : o.bound;
  if (bound < 0) throw UsageError("--bound must be nonnegative");
  FinCat c = parse_as(o.category, parse_fincat);
  std::vector<std::string> bad = check_category(c);
  if (!bad.empty()) return report_invalid(js, out, o.category, bad);
  // crude chain-count bound n_obj * n_mor^bound, so oversized requests fail
  // fast instead of exhausting memory
  long long cap = env_cap(100000);
  long long est = std::max(1, c.n_obj);
  long long nm = std::max(1, c.n_mor());
  for (int k = 0; k < bound; ++k) {
    est *= nm;
    if (est > cap)
      throw UsageError("simplex category too large at this bound; raise RIGIDTRACE_CAP to proceed");
  }
  SimplexCat s = category_of_simplices(c, bound);
  long long vert = 0;
  for (bool b : s.vertical) vert += b ? 1 : 0;
  std::vector<SimplexFiberReport> reps;
  bool all = true;
  for (int i = 0; i < c.n_obj; ++i) {
    reps.push_back(fiber_report(s, i));
    const SimplexFiberReport& r = reps.back();
    all = all && r.cofibered && r.has_terminal && r.witness_is_point;
  }
  if (js) {
    Json arr = Json::array();
    for (int i = 0; i < c.n_obj; ++i)
      arr.push_back(Json{{"object", i},
                         {"cofibered", reps[i].cofibered},
                         {"has_terminal", reps[i].has_terminal},
                         {"terminal_obj", reps[i].terminal_obj},
                         {"witness_is_point", reps[i].witness_is_point},
                         {"failure", reps[i].failure}});
    out << Json{{"objects", s.total.n_obj},
                {"morphisms", s.total.n_mor()},
                {"vertical", vert},
                {"fibers", arr},
                {"ok", all}}
               .dump(2)
        << "\n";
  } else {
    out << "simplex category to dimension " << bound << ": " << s.total.n_obj << " objects, "
        << s.total.n_mor() << " morphisms, " << vert << " vertical\n";
    for (int i = 0; i < c.n_obj; ++i) {
      const SimplexFiberReport& r = reps[i];
      if (r.cofibered && r.has_terminal && r.witness_is_point)
        out << "object " << i << ": cofibered, terminal point witness at total object "
            << r.terminal_obj << "\n";
      else
        out << "object " << i << ": failed, " << (r.failure.empty() ? "missing witness" : r.failure)
            << "\n";
    }
  }
  return all ? 0 : 1;
}

template <typename K>
int dual_verdict(const MatrixCat<K>& c, int x, long long cap, bool js, std::ostream& out) {
  FindDualResult<MatrixCat<K>> r = find_dual(c, x, cap);
  std::string status = r.status == SearchStatus::Found       ? "found"
                       : r.status == SearchStatus::NotRigid ? "not_rigid"
                                                            : "cap_exceeded";
  if (js) {
    Json j{{"status", status}, {"searched", r.searched}};
    if (r.datum) j["dual"] = r.datum->dual;
    out << j.dump(2) << "\n";
  } else if (r.status == SearchStatus::Found) {
    out << "dual found: object " << r.datum->dual << " after " << r.searched
        << " candidate pairs\n";
  } else if (r.status == SearchStatus::NotRigid) {
    out << "not rigid: no duality datum in the view, " << r.searched << " candidate pairs examined\n";
  } else {
    out << "inconclusive: a candidate hom-set is not enumerable under the cap\n";
  }
  return r.status == SearchStatus::Found ? 0 : 1;
}

int do_dual(const CliOpts& o, bool js, std::ostream& out) {
  MatCatSpec s = parse_as(o.smc, parse_matcat);
  if (o.object < 0 || o.object > s.maxdim)
    throw UsageError("--object must lie in the view, 0 to maxdim");
  long long cap = env_cap(1000000);
  if (s.rational) return dual_verdict(matrix_cat_rat(s.maxdim), o.object, cap, js, out);
  return dual_verdict(matrix_cat_fp(s.p, s.maxdim), o.object, cap, js, out);
}

template <typename K>
int trace_verdict(const MatrixCat<K>& c, int x, const Matrix<K>& m, bool js, std::ostream& out) {
  if (m.rows != x || m.cols != x)
    throw UsageError("endomorphism matrix must be " + std::to_string(x) + " x " + std::to_string(x));
  DualityDatum<MatrixCat<K>> d = matrix_standard_dual(c, x);
  typename MatrixCat<K>::Mor f{x, x, m};
  K sc = c.scalar_of(trace(c, d, f));
  if (js)
    out << Json{{"object", x}, {"trace", scal(sc)}}.dump(2) << "\n";
  else
    out << "trace = " << scal(sc) << "\n";
  return 0;
}

int do_trace(const CliOpts& o, bool js, std::ostream& out) {
  MatCatSpec s = parse_as(o.smc, parse_matcat);
  if (o.object < 0 || o.object > s.maxdim)
    throw UsageError("--object must lie in the view, 0 to maxdim");
  if (s.rational) {
    Matrix<Rat> m = parse_as(o.endo, parse_matrix_rat);
    return trace_verdict(matrix_cat_rat(s.maxdim), o.object, m, js, out);
  }
  Matrix<Fp> m = parse_as(o.endo, [&](const Json& j) { return parse_matrix_fp(j, s.p); });
  return trace_verdict(matrix_cat_fp(s.p, s.maxdim), o.object, m, js, out);
}

int do_hochschild(const CliOpts& o, bool js, std::ostream& out) {
  if (o.degree < 0) throw UsageError("--degree must be nonnegative");
  int bound = o.bound < 0 ? o.degree + 2 : o.bound;
  if (bound <= o.degree) throw UsageError("--bound must exceed --degree");
  AnyAlgebra a = parse_as(o.algebra, parse_algebra);
  auto run = [&](const auto& alg) -> int {
    std::vector<std::string> bad = check_algebra(alg);
    if (!bad.empty()) return report_invalid(js, out, o.algebra, bad);
    auto m = complex_guarded(alg, bound, o.normalized);
    auto r = hochschild_homology(m, o.degree);
    if (js)
      out << Json{{"degree", o.degree},
                  {"bound", bound},
                  {"normalized", o.normalized},
                  {"dim", r.dim}}
                 .dump(2)
          << "\n";
    else
      out << "HH_" << o.degree << " has dimension " << r.dim
          << (o.normalized ? " (normalized route)" : " (full route)") << "\n";
    return 0;
  };
  return a.rational ? run(a.q) : run(a.fp);
}

int do_negcyclic(const CliOpts& o, bool js, std::ostream& out) {
  if (o.degree < 0) throw UsageError("--degree must be nonnegative");
  if (o.uorder < 0) throw UsageError("--uorder must be nonnegative");
  int bound = o.bound < 0 ? o.degree + 2 * o.uorder + 1 : o.bound;
  if (bound <= o.degree + 2 * o.uorder)
    throw UsageError("--bound must exceed degree + 2*uorder");
  AnyAlgebra a = parse_as(o.algebra, parse_algebra);
  auto run = [&](const auto& alg) -> int {
    std::vector<std::string> bad = check_algebra(alg);
    if (!bad.empty()) return report_invalid(js, out, o.algebra, bad);
    auto m = complex_guarded(alg, bound, false);
    NegCyclicReport r = negative_cyclic(m, o.degree, o.uorder);
    if (js)
      out << Json{{"degree", o.degree},
                  {"uorder", o.uorder},
                  {"bound", bound},
                  {"dim", r.dim},
                  {"prev_dim", r.prev_dim},
                  {"stabilized", r.stabilized}}
                 .dump(2)
          << "\n";
    else {
      out << "degree " << o.degree << " at truncation order " << o.uorder << ": dimension "
          << r.dim << "\n";
      if (r.prev_dim >= 0)
        out << "previous truncation order " << o.uorder - 1 << ": dimension " << r.prev_dim << "\n";
      out << "stabilized: " << (r.stabilized ? "yes" : "no") << "\n";
    }
    return 0;
  };
  return a.rational ? run(a.q) : run(a.fp);
}

int do_chern(const CliOpts& o, bool js, std::ostream& out) {
  if (o.uorder < 0) throw UsageError("--uorder must be nonnegative");
  int bound = o.bound < 0 ? 2 * o.uorder + 2 : o.bound;
  if (bound < 2 * o.uorder + 2) throw UsageError("--bound must be at least 2*uorder + 2");
  AnyAlgebra a = parse_as(o.algebra, parse_algebra);
  auto run = [&](const auto& alg) -> int {
    std::vector<std::string> bad = check_algebra(alg);
    if (!bad.empty()) return report_invalid(js, out, o.algebra, bad);
    auto e = parse_as(o.idempotent, [&](const Json& j) { return parse_algmatrix(j, alg); });
    if (!amat_is_idempotent(alg, e))
      return report_invalid(js, out, o.idempotent, {"matrix is not idempotent"});
    auto m = complex_guarded(alg, bound, false);
    auto cyc = chern_character(m, e, o.uorder);
    std::vector<std::string> cbad = check_cycle(m, cyc);
    if (!cbad.empty()) return report_invalid(js, out, "lift certificate", cbad);
    if (js) {
      Json comps = Json::array();
      for (const auto& comp : cyc.comp) comps.push_back(coeff_json(comp));
      out << Json{{"uorder", o.uorder},
                  {"bound", bound},
                  {"c0", coeff_json(cyc.comp[0])},
                  {"components", comps},
                  {"verified", true}}
                 .dump(2)
          << "\n";
    } else {
      out << "c_0 = " << coeff_tuple(cyc.comp[0]) << "\n";
      for (int j = 1; j <= o.uorder; ++j)
        out << "c_" << 2 * j << ": " << cyc.comp[j].size() << " coordinates in chain degree "
            << 2 * j << "\n";
      out << "certificate: b c_0 = 0 and every B c_{2j} + b c_{2j+2} = 0 hold exactly through order "
          << o.uorder << "\n";
    }
    return 0;
  };
  return a.rational ? run(a.q) : run(a.fp);
}

int do_bord_eval(const CliOpts& o, bool js, std::ostream& out) {
  FinGroup grp = parse_as(o.group, parse_group);
  std::vector<std::string> bad = check_group(grp);
  if (!bad.empty()) return report_invalid(js, out, o.group, bad);
  GroupRep<Rat> rep = parse_as(o.rep, [&](const Json& j) { return parse_rep(j, grp); });
  bad = check_rep(grp, rep, Rat(0));
  if (!bad.empty()) return report_invalid(js, out, o.rep, bad);
  Bordism bd = parse_as(o.bordism, parse_bordism);
  bad = check_bordism(grp, bd);
  if (!bad.empty()) return report_invalid(js, out, o.bordism, bad);
  Matrix<Rat> m;
  try {
    m = evaluate(grp, rep, bd, Rat(0));
  } catch (const std::length_error& e) {
    throw UsageError(std::string("state space too large: ") + e.what());
  }
  if (js) {
    out << emit_matrix(m).dump(2) << "\n";
  } else {
    out << m.rows << " x " << m.cols << " matrix\n";
    for (int i = 0; i < m.rows; ++i) {
      for (int c = 0; c < m.cols; ++c) out << (c ? " " : "") << to_string(m.at(i, c));
      out << "\n";
    }
  }
  return 0;
}

int do_selftest(bool js, std::ostream& out) {
  std::vector<CriterionResult> res = run_acceptance();
  int passed = 0;
  for (const CriterionResult& r : res) passed += r.pass ? 1 : 0;
  bool all = passed == static_cast<int>(res.size());
  if (js) {
    Json arr = Json::array();
    for (const CriterionResult& r : res)
      arr.push_back(
          Json{{"number", r.number}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    out << Json{{"criteria", arr}, {"passed", passed}, {"total", static_cast<int>(res.size())}}
               .dump(2)
        << "\n";
  } else {
    for (const CriterionResult& r : res)
      out << "criterion " << std::setw(2) << r.number << ": " << (r.pass ? "PASS" : "FAIL") << "  "
          << r.name << " (" << r.detail << ")\n";
    out << "summary: " << passed << "/" << res.size() << " criteria passed\n";
  }
  return all ? 0 : 1;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact desk-scale computations with finite categories, traces and cyclic lifts",
               "rigidtrace"};
  app.require_subcommand(1);

  CliOpts o;
  std::string format = "text";
  app.add_option("--format", format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* sc_check = app.add_subcommand("check", "validate input files and list violations");
  sc_check->add_option("--category", o.category, "finite category file");
  sc_check->add_option("--monoid", o.monoid, "commutative monoid file");
  sc_check->add_option("--algebra", o.algebra, "finite dimensional algebra file");
  sc_check->add_option("--group", o.group, "finite group file");
  sc_check->add_option("--rep", o.rep, "representation file, needs --group");
  sc_check->add_option("--bordism", o.bordism, "labeled bordism file, needs --group");
  sc_check->add_option("--diagram", o.diagram, "diagram file with fiber references");

  CLI::App* sc_nerve = app.add_subcommand("nerve", "tabulate the Gamma nerve of a monoid");
  sc_nerve->add_option("--monoid", o.monoid, "commutative monoid file")->required();
  sc_nerve->add_option("--bound", o.bound, "top level of the truncation, default 4");
  sc_nerve->add_flag("--padded", o.padded, "use the padded variant that breaks level 0");

  CLI::App* sc_special = app.add_subcommand("special", "test the Segal condition level by level");
  sc_special->add_option("--monoid", o.monoid, "commutative monoid file")->required();
  sc_special->add_option("--bound", o.bound, "top level of the truncation, default 4");
  sc_special->add_flag("--padded", o.padded, "use the padded variant that breaks level 0");

  CLI::App* sc_integrate =
      app.add_subcommand("integrate", "run the Grothendieck construction on a diagram");
  sc_integrate->add_option("--diagram", o.diagram, "diagram file")->required();

  CLI::App* sc_sections =
      app.add_subcommand("sections", "compare cartesian sections with the fibers");
  sc_sections->add_option("--diagram", o.diagram, "diagram file")->required();

  CLI::App* sc_simplices =
      app.add_subcommand("simplices", "build the truncated simplex category with fiber reports");
  sc_simplices->add_option("--category", o.category, "finite category file")->required();
  sc_simplices->add_option("--bound", o.bound, "top chain dimension, default 3");

  CLI::App* sc_dual = app.add_subcommand("dual", "search for a duality datum in a matrix category");
  sc_dual->add_option("--smc", o.smc, "matrix category spec file")->required();
  sc_dual->add_option("--object", o.object, "object of the view")->required();

  CLI::App* sc_trace = app.add_subcommand("trace", "monoidal trace of a matrix endomorphism");
  sc_trace->add_option("--smc", o.smc, "matrix category spec file")->required();
  sc_trace->add_option("--object", o.object, "object of the view")->required();
  sc_trace->add_option("--endo", o.endo, "endomorphism matrix file")->required();

  CLI::App* sc_hochschild =
      app.add_subcommand("hochschild", "Hochschild homology dimension of an algebra");
  sc_hochschild->add_option("--algebra", o.algebra, "algebra file")->required();
  sc_hochschild->add_option("--degree", o.degree, "homology degree")->required();
  sc_hochschild->add_option("--bound", o.bound, "complex truncation, default degree + 2");
  sc_hochschild->add_flag("--normalized", o.normalized, "use the normalized complex");

  CLI::App* sc_negcyclic =
      app.add_subcommand("negcyclic", "negative cyclic homology under a u-truncation");
  sc_negcyclic->add_option("--algebra", o.algebra, "algebra file")->required();
  sc_negcyclic->add_option("--degree", o.degree, "homology degree")->required();
  sc_negcyclic->add_option("--uorder", o.uorder, "truncation order in the circle variable")
      ->required();
  sc_negcyclic->add_option("--bound", o.bound, "complex truncation, default degree + 2*uorder + 1");

  CLI::App* sc_chern = app.add_subcommand(
      "chern", "degree-zero trace of an idempotent with its circle-invariance lift");
  sc_chern->add_option("--algebra", o.algebra, "algebra file")->required();
  sc_chern->add_option("--idempotent", o.idempotent, "matrix over the algebra")->required();
  sc_chern->add_option("--uorder", o.uorder, "lift order in the circle variable")->required();
  sc_chern->add_option("--bound", o.bound, "complex truncation, default 2*uorder + 2");

  CLI::App* sc_bord =
      app.add_subcommand("bord-eval", "evaluate a labeled bordism under a representation");
  sc_bord->add_option("--group", o.group, "finite group file")->required();
  sc_bord->add_option("--rep", o.rep, "representation file")->required();
  sc_bord->add_option("--bordism", o.bordism, "labeled bordism file")->required();

  CLI::App* sc_selftest =
      app.add_subcommand("selftest", "run the acceptance suite and report each criterion");

  for (CLI::App* s : {sc_check, sc_nerve, sc_special, sc_integrate, sc_sections, sc_simplices,
                      sc_dual, sc_trace, sc_hochschild, sc_negcyclic, sc_chern, sc_bord,
                      sc_selftest})
    s->add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> full;
  full.reserve(args.size() + 1);
  full.push_back("rigidtrace");
  for (const std::string& a : args) full.push_back(a);
  std::vector<const char*> argv;
  argv.reserve(full.size());
  for (const std::string& a : full) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      app.exit(e, out, err);
      return 0;
    }
    err << "error: " << e.what() << "\n";
    err << "run 'rigidtrace --help' for usage\n";
    return 2;
  }

  bool js = format == "json";
  try {
    if (*sc_check) return do_check(o, js, out);
    if (*sc_nerve) return do_nerve(o, js, out);
    if (*sc_special) return do_special(o, js, out);
    if (*sc_integrate) return do_integrate(o, js, out);
    if (*sc_sections) return do_sections(o, js, out);
    if (*sc_simplices) return do_simplices(o, js, out);
    if (*sc_dual) return do_dual(o, js, out);
    if (*sc_trace) return do_trace(o, js, out);
    if (*sc_hochschild) return do_hochschild(o, js, out);
    if (*sc_negcyclic) return do_negcyclic(o, js, out);
    if (*sc_chern) return do_chern(o, js, out);
    if (*sc_bord) return do_bord_eval(o, js, out);
    if (*sc_selftest) return do_selftest(js, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace rigidtrace
