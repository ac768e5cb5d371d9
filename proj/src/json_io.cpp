// Copyright (c) tropcong contributors.
// SPDX-License-Identifier: Apache-2.0
#include "tropcong/json_io.hpp"

#include "tropcong/errors.hpp"

namespace tropcong::io {

namespace {

const json& field(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end())
    throw input_error(std::string("missing field \"") + key + "\"");
  return *it;
}

int int_field(const json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_number_integer())
    throw input_error(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

std::string str_field(const json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_string())
    throw input_error(std::string("field \"") + key + "\" must be a string");
  return v.get<std::string>();
}

}  // namespace

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw input_error(std::string("malformed JSON at byte ") +
                      std::to_string(e.byte) + ": " + e.what());
  }
}

SemifieldTag parse_tag(const json& j) {
  const std::string name = j.is_string() ? j.get<std::string>() : str_field(j, "semifield");
  if (name == "B") return SemifieldTag::B;
  if (name == "Zmax") return SemifieldTag::Zmax;
  if (name == "TQ") return SemifieldTag::TQ;
  throw input_error("unknown semifield \"" + name + "\"");
}

PolyContext parse_context(const json& j) {
  PolyContext ctx;
  ctx.tag = parse_tag(j);
  ctx.k = int_field(j, "k");
  if (ctx.k < 1) throw input_error("k must be positive");
  const auto& l = field(j, "laurent");
  if (!l.is_boolean()) throw input_error("field \"laurent\" must be a boolean");
  ctx.laurent = l.get<bool>();
  return ctx;
}

json context_json(const PolyContext& ctx) {
  return {{"semifield", tag_name(ctx.tag)}, {"k", ctx.k}, {"laurent", ctx.laurent}};
}

TropPoly parse_poly(const json& j) {
  const PolyContext ctx = parse_context(j);
  TropPoly f(ctx);
  const auto& terms = field(j, "terms");
  if (!terms.is_array()) throw input_error("\"terms\" must be an array");
  for (const auto& t : terms) {
    const auto& exp = field(t, "exp");
    if (!exp.is_array() || static_cast<int>(exp.size()) != ctx.k)
      throw input_error("term \"exp\" must be an array of k integers");
    ExpVec e;
    for (const auto& n : exp) {
      if (!n.is_number_integer()) throw input_error("exponents must be integers");
      e.push_back(n.get<std::int64_t>());
    }
    f.add_term(e, parse_scalar(ctx.tag, str_field(t, "coeff")));
  }
  return f;
}

json poly_json(const TropPoly& f) {
  json j = context_json(f.context());
  json terms = json::array();
  for (const auto& [exp, coeff] : f.terms()) {
    json t;
    t["coeff"] = scalar_to_string(coeff);
    t["exp"] = exp;
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

Pair parse_pair(const json& j) {
  return Pair(parse_poly(field(j, "lhs")), parse_poly(field(j, "rhs")));
}

json pair_json(const Pair& p) {
  return {{"lhs", poly_json(p.lhs)}, {"rhs", poly_json(p.rhs)}};
}

CongPresentation parse_presentation(const json& j, const PolyContext& ctx) {
  std::vector<Pair> gens;
  const auto& arr = field(j, "generators");
  if (!arr.is_array()) throw input_error("\"generators\" must be an array");
  for (const auto& g : arr) gens.push_back(parse_pair(g));
  const PolyContext use = gens.empty() ? ctx : gens.front().context();
  return CongPresentation(use, std::move(gens));
}

Point parse_point(const json& j, int k) {
  if (!j.is_array() || static_cast<int>(j.size()) != k)
    throw input_error("point must be an array of k coordinates");
  Point a;
  for (const auto& c : j) {
    if (!c.is_string()) throw input_error("coordinates must be strings");
    const std::string s = c.get<std::string>();
    if (s == "-inf")
      a.coords.push_back(std::nullopt);
    else
      a.coords.push_back(parse_rat(s));
  }
  return a;
}

json point_json(const Point& a) {
  json out = json::array();
  for (const auto& c : a.coords)
    out.push_back(c ? rat_to_string(*c) : std::string("-inf"));
  return out;
}

Polytope parse_polytope(const json& j) {
  Polytope P;
  const int dim = int_field(j, "dim");
  if (dim < 0) throw input_error("dim must be nonnegative");
  P.dim = static_cast<std::size_t>(dim);
  const auto& verts = field(j, "vertices");
  if (!verts.is_array()) throw input_error("\"vertices\" must be an array");
  std::vector<RatVec> pts;
  for (const auto& v : verts) {
    if (!v.is_array() || v.size() != P.dim)
      throw input_error("each vertex must be an array of dim rationals");
    RatVec p;
    for (const auto& c : v) {
      if (!c.is_string()) throw input_error("vertex coordinates must be strings");
      p.push_back(parse_rat(c.get<std::string>()));
    }
    pts.push_back(std::move(p));
  }
  return hull_vertices(P.dim, std::move(pts));
}

json polytope_json(const Polytope& P) {
  json verts = json::array();
  for (const auto& v : P.vertices) {
    json row = json::array();
    for (const auto& c : v) row.push_back(rat_to_string(c));
    verts.push_back(std::move(row));
  }
  return {{"dim", P.dim}, {"vertices", std::move(verts)}};
}

OrderMatrix parse_matrix(const json& j, SemifieldTag tag) {
  OrderMatrix U;
  U.tag = tag;
  const auto& rows = field(j, "rows");
  if (!rows.is_array()) throw input_error("\"rows\" must be an array");
  for (const auto& r : rows) {
    if (!r.is_array()) throw input_error("matrix rows must be arrays");
    RatVec row;
    for (const auto& c : r) {
      if (!c.is_string()) throw input_error("matrix entries must be strings");
      row.push_back(parse_rat(c.get<std::string>()));
    }
    U.rows.push_back(std::move(row));
  }
  for (const auto& r : U.rows)
    if (r.size() != U.rows.front().size())
      throw input_error("matrix rows must have equal length");
  return U;
}

json matrix_json(const OrderMatrix& U) {
  json rows = json::array();
  for (const auto& r : U.rows) {
    json row = json::array();
    for (const auto& c : r) row.push_back(rat_to_string(c));
    rows.push_back(std::move(row));
  }
  return {{"rows", std::move(rows)}};
}

PrimeSpec parse_prime_spec(const json& j, const PolyContext& ctx) {
  PrimeSpec spec;
  spec.ctx = ctx;
  const auto& kill = field(j, "kill");
  if (!kill.is_array()) throw input_error("\"kill\" must be an array");
  for (const auto& i : kill) {
    if (!i.is_number_integer()) throw input_error("kill indices must be integers");
    spec.kill.insert(i.get<int>());
  }
  spec.U = parse_matrix(field(j, "matrix"), ctx.tag);
  return spec;
}

json prime_spec_json(const PrimeSpec& spec) {
  json kill = json::array();
  for (int i : spec.kill) kill.push_back(i);
  return {{"kill", std::move(kill)}, {"matrix", matrix_json(spec.U)}};
}

GpWitness parse_gp_witness(const json& j, const PolyContext& ctx) {
  GpWitness w{0, 0, TropPoly::zero(ctx)};
  const int kpow = int_field(j, "kpow");
  const int lpow = int_field(j, "lpow");
  if (kpow < 0 || lpow < 0) throw input_error("witness powers must be nonnegative");
  w.kpow = static_cast<std::size_t>(kpow);
  w.lpow = static_cast<std::size_t>(lpow);
  w.c = parse_poly(field(j, "c"));
  return w;
}

json gp_witness_json(const GpWitness& w) {
  return {{"kpow", w.kpow}, {"lpow", w.lpow}, {"c", poly_json(w.c)}};
}

json verdict_json(const Verdict& v) {
  json out;
  out["member"] = v.member;
  out["cases"] = v.cases_explored;
  if (v.prime_witness) {
    json w;
    w["kind"] = "prime";
    json kill = json::array();
    for (int i : v.prime_witness->kill) kill.push_back(i);
    w["kill"] = std::move(kill);
    if (v.prime_witness->row) {
      json row = json::array();
      for (const auto& c : *v.prime_witness->row) row.push_back(rat_to_string(c));
      w["row"] = std::move(row);
    } else {
      w["row"] = nullptr;
    }
    out["witness"] = std::move(w);
  } else if (v.point_witness) {
    out["witness"] = {{"kind", "point"}, {"coords", point_json(v.point_witness->point)}};
  }
  return out;
}

FiniteAlgebra parse_algebra(const json& j) {
  FiniteAlgebra A;
  A.n = int_field(j, "n");
  A.zero = int_field(j, "zero");
  A.one = int_field(j, "one");
  auto table = [&](const char* key) {
    const auto& t = field(j, key);
    if (!t.is_array()) throw input_error(std::string("\"") + key + "\" must be an array");
    std::vector<std::vector<int>> out;
    for (const auto& row : t) {
      if (!row.is_array())
        throw input_error(std::string("\"") + key + "\" rows must be arrays");
      std::vector<int> r;
      for (const auto& v : row) {
        if (!v.is_number_integer())
          throw input_error(std::string("\"") + key + "\" entries must be integers");
        r.push_back(v.get<int>());
      }
      out.push_back(std::move(r));
    }
    return out;
  };
  A.add = table("add");
  A.mul = table("mul");
  return A;
}

json algebra_report_json(const AlgebraReport& report) {
  json congruences = json::array();
  for (const auto& row : report.analyses) {
    json c;
    c["blocks"] = row.relation.blocks();
    c["proper"] = row.proper;
    c["prime"] = row.prime;
    c["qc"] = row.qc;
    c["indecomposable"] = row.indecomposable;
    c["primary"] = row.primary;
    c["radical"] = row.radical_index;
    congruences.push_back(std::move(c));
  }
  json checks;
  checks["radical_equals_nilpotent"] = report.radical_equals_nilpotent;
  checks["prime_iff_qc_and_indecomposable"] = report.prime_iff_qc_indecomposable;
  return {{"congruences", std::move(congruences)}, {"checks", std::move(checks)}};
}

}  // namespace tropcong::io
