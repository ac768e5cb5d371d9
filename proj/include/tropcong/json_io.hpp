// Copyright (c) tropcong contributors.
// SPDX-License-Identifier: Apache-2.0
//
// JSON document schemas for every value crossing the CLI boundary. Parsing
// throws input_error with a diagnostic; emission is canonical and
// byte-deterministic for fixed inputs.
#ifndef TROPCONG_JSON_IO_HPP
#define TROPCONG_JSON_IO_HPP

#include <json.hpp>

#include "tropcong/finlab.hpp"
#include "tropcong/order.hpp"
#include "tropcong/pairalg.hpp"
#include "tropcong/polytope.hpp"
#include "tropcong/radnull.hpp"

namespace tropcong::io {

using json = nlohmann::json;

// {"semifield":"B"|"Zmax"|"TQ", "k":int, "laurent":bool}
SemifieldTag parse_tag(const json& j);
PolyContext parse_context(const json& j);
json context_json(const PolyContext& ctx);

// {"coeff":"t^p/q"|"1"|"0", "exp":[ints]} entries under "terms"; duplicate
// exponents are merged on load.
TropPoly parse_poly(const json& j);
json poly_json(const TropPoly& f);

// {"lhs": <poly>, "rhs": <poly>}
Pair parse_pair(const json& j);
json pair_json(const Pair& p);

// {"generators": [<pair>...]}; the context falls back to `ctx` when there
// are no generators.
CongPresentation parse_presentation(const json& j, const PolyContext& ctx);

// ["p/q" | "-inf", ...]
Point parse_point(const json& j, int k);
json point_json(const Point& a);

// {"dim":int, "vertices":[["p/q",...],...]}
Polytope parse_polytope(const json& j);
json polytope_json(const Polytope& P);

// {"rows":[["p/q",...],...]}
OrderMatrix parse_matrix(const json& j, SemifieldTag tag);
json matrix_json(const OrderMatrix& U);

// {"kill":[ints], "matrix": <matrix>}
PrimeSpec parse_prime_spec(const json& j, const PolyContext& ctx);
json prime_spec_json(const PrimeSpec& spec);

// {"kpow":int, "lpow":int, "c": <poly>}
GpWitness parse_gp_witness(const json& j, const PolyContext& ctx);
json gp_witness_json(const GpWitness& w);

// {"member":bool, "witness":{"kind":"prime"|"point", ...}, "cases":int}
json verdict_json(const Verdict& v);

// {"n":int, "add":[[...]], "mul":[[...]], "zero":int, "one":int}
FiniteAlgebra parse_algebra(const json& j);
json algebra_report_json(const AlgebraReport& report);

// Root-level helper: parse text, mapping parse failures to input_error with
// the byte position.
json parse_document(const std::string& text);

}  // namespace tropcong::io

#endif
