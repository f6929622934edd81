#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rigidtrace/bord.hpp"
#include "rigidtrace/cyclic.hpp"
#include "rigidtrace/fibration.hpp"
#include "rigidtrace/field.hpp"
#include "rigidtrace/fincat.hpp"
#include "rigidtrace/gamma.hpp"
#include "rigidtrace/matrix.hpp"

// Value <-> JSON codecs for every file format the CLI reads or writes.
// Parsers check shape only (types, sizes, index ranges) and throw
// std::invalid_argument naming the offending field; mathematical validity
// stays with the per-module check_* functions. Every emit/parse pair
// round-trips: parse(emit(x)) == x.

namespace rigidtrace {

using Json = nlohmann::json;

// {"objects":[0..n-1], "morphisms":[{"id","src","tgt"}...],
//  "identities":{"obj":mor,...}, "compose":[[g,f,gf],...]}
Json emit_fincat(const FinCat& c);
FinCat parse_fincat(const Json& j);

// {"omap":[...], "mmap":[...]}
Json emit_functor(const FinFunctor& f);
FinFunctor parse_functor(const Json& j);

// Cayley-table format shared by commutative monoids and groups:
// {"elements":[0..n-1], "op":[[...]...], "unit":u}
Json emit_cmonoid(const FinCMonoid& e);
FinCMonoid parse_cmonoid(const Json& j);
Json emit_group(const FinGroup& g);
FinGroup parse_group(const Json& j);

// {"field":"Q"|"Fp", "p":..., "basis":[...], "mul":[[[coeffs]]], "unit":[coeffs]}
// Rational coefficients are exact "p/q" strings (plain integers accepted);
// prime-field coefficients are integers, reduced on input.
Json emit_algebra(const FDAlgebra<Rat>& a);
Json emit_algebra(const FDAlgebra<Fp>& a);

struct AnyAlgebra {
  bool rational = true;
  FDAlgebra<Rat> q;
  FDAlgebra<Fp> fp;

  int dim() const { return rational ? q.dim() : fp.dim(); }
};
AnyAlgebra parse_algebra(const Json& j);

// {"matrix":[[[coeffs],...],...]}, square, entries are coefficient vectors
// over the algebra's basis.
Json emit_algmatrix(const FDAlgebra<Rat>& a, const AlgMatrix<Rat>& m);
Json emit_algmatrix(const FDAlgebra<Fp>& a, const AlgMatrix<Fp>& m);
AlgMatrix<Rat> parse_algmatrix(const Json& j, const FDAlgebra<Rat>& a);
AlgMatrix<Fp> parse_algmatrix(const Json& j, const FDAlgebra<Fp>& a);

// {"rows":r, "cols":c, "matrix":[[...]...]}; dimensions are explicit so
// empty matrices survive the round trip.
Json emit_matrix(const Matrix<Rat>& m);
Json emit_matrix(const Matrix<Fp>& m);
Matrix<Rat> parse_matrix_rat(const Json& j);
Matrix<Fp> parse_matrix_fp(const Json& j, long long p);

// {"field":"Q"|"Fp", "p":..., "maxdim":d} names a matrix category view.
struct MatCatSpec {
  bool rational = true;
  long long p = 0;
  int maxdim = 0;

  bool operator==(const MatCatSpec& o) const {
    return rational == o.rational && (rational || p == o.p) && maxdim == o.maxdim;
  }
};
Json emit_matcat(const MatCatSpec& s);
MatCatSpec parse_matcat(const Json& j);

// {"dim":d, "generators":[{"element":e, "matrix":[[...]...]},...]} over Q;
// the table is completed by expand_rep, so listing a generating set is
// enough. Emission lists every element, which round-trips exactly.
Json emit_rep(const GroupRep<Rat>& r);
GroupRep<Rat> parse_rep(const Json& j, const FinGroup& g);

// {"source":"+-", "target":"", "arcs":[{"a","b","g"}...], "circles":[...]}
Json emit_bordism(const Bordism& b);
Bordism parse_bordism(const Json& j);

// {"base":"file", "fibers":["file",...], "arrows":[functor,...]}; the loader
// resolves the referenced files (paths are relative to the diagram file).
CatDiagram parse_diagram(const Json& j, const std::function<Json(const std::string&)>& load);

// Tabulated view of a GammaSet: level sizes plus the tables of the maps the
// Segal condition is built from. This is what the nerve verb emits; the
// functional GammaSet itself is not serializable.
struct GammaDump {
  int bound = 0;
  std::vector<long long> sizes;                       // sizes[n] = |X([n])|
  std::vector<std::vector<std::vector<long long>>> segal;  // segal[n][i-1] = table of s_i
  std::vector<std::vector<long long>> fold;                // fold[n] = table of [n] -> [1]

  bool operator==(const GammaDump& o) const {
    return bound == o.bound && sizes == o.sizes && segal == o.segal && fold == o.fold;
  }
};
GammaDump dump_gamma(const GammaSet& x);
Json emit_gamma_dump(const GammaDump& d);
GammaDump parse_gamma_dump(const Json& j);

}  // namespace rigidtrace
