#pragma once

#include <string>

#include "json.hpp"
#include "qb2/cyclotomic.hpp"
#include "qb2/iso.hpp"
#include "qb2/matrix.hpp"
#include "qb2/pbw.hpp"
#include "qb2/pidegree.hpp"
#include "qb2/repmod.hpp"
#include "qb2/verify.hpp"

namespace qb2 {

// Insertion-ordered JSON so every artifact serializes with a fixed key
// order; together with canonical rational strings this makes dumps
// byte-reproducible.
using Json = nlohmann::ordered_json;

// Scalar: {"level": L, "coeffs": [["num","den"], ...]}.
Json to_json(const Cyc& c);
Cyc cyc_from_json(const Json& j); // ParseError on malformed input

// Root configuration: {"m","n","k1","k2","ell","level"}. The derived fields
// are recomputed on read, so a parsed config always satisfies the
// constructor's validity checks.
Json to_json(const RootConfig& cfg);
RootConfig config_from_json(const Json& j);

// Normal form: {"config": {...}, "terms": [{"exp":[a,b,c,d],"coeff":...}]}
// with terms sorted lexicographically by exponent.
Json to_json(const NCPoly& p);
NCPoly ncpoly_from_json(const Json& j);

// Dense row-major matrix as an array of rows of scalars (the level is
// carried by the scalars; empty matrices are not serialized).
Json to_json(const CycMatrix& m);
CycMatrix matrix_from_json(const Json& j);

// Module: {"family","config","params","dim","grid","matrices"} where
// "matrices" maps X1/X2/X3 and X4 (full algebra) or W (subalgebra) to dense
// matrices. Canonical ordering throughout, suitable for golden files.
Json to_json(const Representation& rep);
Representation representation_from_json(const Json& j);

Json to_json(const PiDegreeReport& report);
Json to_json(const QuotientBoundReport& report);
Json to_json(const RelationReport& report);
Json to_json(const IsoVerdict& verdict);
Json to_json(const CrossValidationReport& report);

// Fixed rendering (2-space indent, trailing newline) so identical values
// always produce identical bytes.
std::string dump_canonical(const Json& j);

// Reads a whole file and parses it; ParseError wraps both I/O and syntax
// problems with the file name.
Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

// Scalar expressions for command lines and parameter files: a product of
// factors joined by '*', each factor a rational ("3", "-2/7") or a power of
// a named root: q^k (primitive ell-th root), zeta^k (primitive level-th
// root), r^k, s^k, or rs^k meaning (rs)^k. Examples: "1", "-1/3*s^-2",
// "q^5*2". ParseError on anything else.
Cyc parse_scalar(const std::string& text, const RootConfig& cfg);

// Parameter tuple from a JSON array whose entries are scalar objects,
// scalar-expression strings, or integers.
ParamTuple params_from_json(const Json& j, const RootConfig& cfg);

} // namespace qb2
