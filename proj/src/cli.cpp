// Copyright (c) tropcong contributors.
// SPDX-License-Identifier: Apache-2.0
#include "tropcong/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tropcong/errors.hpp"
#include "tropcong/json_io.hpp"
#include "tropcong/radnull.hpp"
#include "tropcong/svg.hpp"

namespace tropcong::cli {

namespace {

using io::json;

struct Invocation {
  Config config;
  PolyContext flag_ctx{SemifieldTag::B, 1, false};
  bool have_tag = false;
  std::string svg_out;
  json input;
  std::ostream* out = nullptr;
  std::ostream* err = nullptr;

  bool verbose() const {
    const char* env = std::getenv("TROPCONG_LOG");
    return env != nullptr && *env != '\0';
  }

  void note(const std::string& line) const {
    if (verbose()) *err << "tropcong: " << line << "\n";
  }

  void emit(const json& doc) const { *out << doc.dump() << "\n"; }

  DeciderOptions decider() const {
    DeciderOptions opts;
    opts.k_bound = config.k_bound;
    opts.jobs = config.jobs;
    return opts;
  }

  // Context for commands whose documents do not carry one.
  PolyContext context() const { return flag_ctx; }
};

int verdict_exit(const Invocation& inv, const Verdict& v) {
  inv.emit(io::verdict_json(v));
  inv.note("cases explored: " + std::to_string(v.cases_explored));
  return v.member ? kOk : kNonMember;
}

// ---- poly ------------------------------------------------------------------

int cmd_poly_add(const Invocation& inv) {
  const auto f = io::parse_poly(inv.input.at("f"));
  const auto g = io::parse_poly(inv.input.at("g"));
  inv.emit({{"result", io::poly_json(poly_add(f, g))}});
  return kOk;
}

int cmd_poly_mul(const Invocation& inv) {
  const auto f = io::parse_poly(inv.input.at("f"));
  const auto g = io::parse_poly(inv.input.at("g"));
  inv.emit({{"result", io::poly_json(poly_mul(f, g))}});
  return kOk;
}

int cmd_poly_eval(const Invocation& inv) {
  const auto f = io::parse_poly(inv.input.at("f"));
  const auto a = io::parse_point(inv.input.at("point"), f.context().k);
  inv.emit({{"result", scalar_to_string(poly_eval(f, a))}});
  return kOk;
}

// ---- pair ------------------------------------------------------------------

int cmd_pair_twist(const Invocation& inv) {
  const auto a = io::parse_pair(inv.input.at("a"));
  const auto b = io::parse_pair(inv.input.at("b"));
  inv.emit({{"result", io::pair_json(twisted_mul(a, b))}});
  return kOk;
}

int cmd_pair_star(const Invocation& inv) {
  const auto a = io::parse_pair(inv.input.at("a"));
  inv.emit({{"result", io::pair_json(star(a))}});
  return kOk;
}

int cmd_pair_gp(const Invocation& inv) {
  const auto a = io::parse_pair(inv.input.at("a"));
  const auto w = io::parse_gp_witness(inv.input.at("witness"), a.context());
  inv.emit({{"result", io::pair_json(gp_element(a, w))}});
  return kOk;
}

// ---- newt ------------------------------------------------------------------

Polytope input_polytope(const Invocation& inv) {
  if (inv.input.contains("polytope")) return io::parse_polytope(inv.input.at("polytope"));
  return poly_newt(io::parse_poly(inv.input.at("f")));
}

int cmd_newt_compute(const Invocation& inv) {
  inv.emit({{"polytope", io::polytope_json(input_polytope(inv))}});
  return kOk;
}

int cmd_newt_eq(const Invocation& inv) {
  const auto f = io::parse_poly(inv.input.at("f"));
  const auto g = io::parse_poly(inv.input.at("g"));
  const bool equal = polytope_eq(poly_newt(f), poly_newt(g));
  inv.emit({{"equal", equal}});
  return equal ? kOk : kNonMember;
}

int cmd_newt_hat(const Invocation& inv) {
  const auto P = input_polytope(inv);
  json verts = json::array();
  for (const auto& v : hat_vertices(P)) {
    json row = json::array();
    for (const auto& c : v) row.push_back(rat_to_string(c));
    verts.push_back(std::move(row));
  }
  inv.emit({{"hat_vertices", std::move(verts)}});
  return kOk;
}

int cmd_newt_svg(const Invocation& inv) {
  if (inv.svg_out.empty())
    throw input_error("newt svg requires --svg-out PATH");
  const auto P = input_polytope(inv);
  const std::string drawing = polytope_svg(P);
  std::ofstream file(inv.svg_out);
  if (!file) throw input_error("cannot open " + inv.svg_out);
  file << drawing;
  inv.emit({{"written", inv.svg_out}, {"vertices", P.vertices.size()}});
  return kOk;
}

// ---- prime -----------------------------------------------------------------

PrimeSpec input_spec(const Invocation& inv, const PolyContext& ctx) {
  return io::parse_prime_spec(inv.input.at("spec"), ctx);
}

int cmd_prime_validate(const Invocation& inv) {
  const auto spec = input_spec(inv, inv.context());
  const auto report = validate(spec);
  inv.emit({{"valid", report.ok}, {"issues", report.issues}});
  return report.ok ? kOk : kNonMember;
}

int cmd_prime_member(const Invocation& inv) {
  const auto pair = io::parse_pair(inv.input.at("pair"));
  const auto spec = input_spec(inv, pair.context());
  const bool member = prime_member(spec, pair);
  json payload{{"member", member}};
  auto image = [&](const TropPoly& f) -> json {
    const auto img = leading_image(spec, f);
    if (!img) return nullptr;
    json row = json::array();
    for (const auto& c : *img) row.push_back(rat_to_string(c));
    return row;
  };
  payload["lhs_image"] = image(pair.lhs);
  payload["rhs_image"] = image(pair.rhs);
  inv.emit(payload);
  return member ? kOk : kNonMember;
}

int cmd_prime_chain(const Invocation& inv) {
  const auto spec = input_spec(inv, inv.context());
  json chain = json::array();
  for (const auto& link : prime_chain(spec))
    chain.push_back(io::prime_spec_json(link));
  json seps = json::array();
  for (const auto& s : chain_separators(spec)) seps.push_back(io::pair_json(s));
  inv.emit({{"chain", std::move(chain)}, {"separators", std::move(seps)}});
  return kOk;
}

int cmd_prime_canon(const Invocation& inv) {
  const auto U = io::parse_matrix(inv.input.at("matrix"), inv.context().tag);
  inv.emit({{"matrix", io::matrix_json(canonicalize(U))}});
  return kOk;
}

int cmd_prime_dim(const Invocation& inv) {
  const auto spec = input_spec(inv, inv.context());
  inv.emit({{"dimension", dimension(spec)}});
  return kOk;
}

int cmd_prime_minimal(const Invocation& inv) {
  const auto spec = input_spec(inv, inv.context());
  const bool minimal = is_minimal(spec);
  inv.emit({{"minimal", minimal}});
  return minimal ? kOk : kNonMember;
}

// ---- rad / null ------------------------------------------------------------

int cmd_rad_trivial(const Invocation& inv) {
  const auto pair = io::parse_pair(inv.input.at("pair"));
  return verdict_exit(inv, rad_trivial_member(pair));
}

int cmd_rad_member(const Invocation& inv) {
  const auto pair = io::parse_pair(inv.input.at("pair"));
  const auto E = io::parse_presentation(inv.input, pair.context());
  return verdict_exit(inv, rad_member_fg(E, pair, inv.decider()));
}

int cmd_rad_witness_search(const Invocation& inv) {
  const auto pair = io::parse_pair(inv.input.at("pair"));
  GpSearchBounds bounds;
  bounds.pow_bound = inv.config.gp_search_bound;
  const auto found = gp_witness_search(pair, bounds);
  if (!found) {
    inv.emit({{"found", false}});
    return kUnknown;
  }
  inv.emit({{"found", true}, {"witness", io::gp_witness_json(*found)}});
  return kOk;
}

int cmd_rad_witness_verify(const Invocation& inv) {
  const auto pair = io::parse_pair(inv.input.at("pair"));
  const auto w = io::parse_gp_witness(inv.input.at("witness"), pair.context());
  const bool ok = gp_witness_verify(pair, w);
  inv.emit({{"verified", ok}});
  return ok ? kOk : kNonMember;
}

int cmd_rad_witness_normalize(const Invocation& inv) {
  const auto pair = io::parse_pair(inv.input.at("pair"));
  const auto i = inv.input.at("i").get<int>();
  const auto j = inv.input.at("j").get<int>();
  if (i < 0 || j < 0) throw input_error("i and j must be nonnegative");
  const auto h = io::parse_poly(inv.input.at("h"));
  const auto w = gp_witness_normalize(pair, static_cast<std::size_t>(i),
                                      static_cast<std::size_t>(j), h);
  inv.emit({{"witness", io::gp_witness_json(w)}});
  return kOk;
}

int cmd_null_member(const Invocation& inv) {
  const auto pair = io::parse_pair(inv.input.at("pair"));
  const auto E = io::parse_presentation(inv.input, pair.context());
  return verdict_exit(inv, null_member(E, pair, inv.decider()));
}

int cmd_null_eplus(const Invocation& inv) {
  const auto pair = io::parse_pair(inv.input.at("pair"));
  const auto E = io::parse_presentation(inv.input, pair.context());
  const auto eps = parse_scalar(SemifieldTag::TQ, inv.config.epsilon);
  return verdict_exit(inv, eplus_member(E, pair, eps, inv.decider()));
}

// ---- collapse / finlab -----------------------------------------------------

int cmd_collapse(const Invocation& inv) {
  std::vector<Pair> pairs;
  for (const auto& p : inv.input.at("pairs")) pairs.push_back(io::parse_pair(p));
  const SemifieldTag tag =
      pairs.empty() ? inv.context().tag : pairs.front().context().tag;
  const auto U = io::parse_matrix(inv.input.at("matrix"), tag);
  inv.emit({{"matrix", io::matrix_json(collapse_weights(U, pairs))}});
  return kOk;
}

int cmd_finlab_analyze(const Invocation& inv) {
  const auto A = validate_algebra(io::parse_algebra(inv.input));
  inv.emit(io::algebra_report_json(analyze(A)));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"exact prime-congruence and tropical Nullstellensatz toolkit",
               "tropcong"};
  app.require_subcommand(1);

  Invocation inv;
  inv.out = &out;
  inv.err = &err;
  std::string semifield = "B";
  std::string config_path;

  app.add_option("--semifield", semifield, "coefficient semifield: B, Zmax or TQ");
  app.add_flag("--laurent", inv.flag_ctx.laurent, "Laurent polynomial context");
  app.add_option("--k", inv.flag_ctx.k, "number of variables");
  auto* opt_bound = app.add_option("--bound", inv.config.k_bound,
                                   "variable bound for the decision procedures");
  auto* opt_eps =
      app.add_option("--epsilon", inv.config.epsilon, "epsilon scalar for null eplus");
  auto* opt_jobs = app.add_option("--jobs", inv.config.jobs, "parallel case branches");
  auto* opt_seed = app.add_option("--seed", inv.config.seed, "seed for randomized commands");
  app.add_option("--svg-out", inv.svg_out, "output path for newt svg");
  app.add_option("--config", config_path, "JSON config file");

  int (*handler)(const Invocation&) = nullptr;
  auto leaf = [&](CLI::App* parent, const char* name, const char* help,
                  int (*fn)(const Invocation&)) {
    auto* cmd = parent->add_subcommand(name, help);
    cmd->fallthrough();
    cmd->callback([&handler, fn]() { handler = fn; });
    return cmd;
  };
  auto group = [&](const char* name, const char* help) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->fallthrough();
    cmd->require_subcommand(1);
    return cmd;
  };

  auto* poly = group("poly", "polynomial arithmetic");
  leaf(poly, "add", "sum of two polynomials", cmd_poly_add);
  leaf(poly, "mul", "product of two polynomials", cmd_poly_mul);
  leaf(poly, "eval", "evaluate at a point", cmd_poly_eval);

  auto* pair = group("pair", "twisted pair algebra");
  leaf(pair, "twist", "twisted product", cmd_pair_twist);
  leaf(pair, "star", "star of a pair", cmd_pair_star);
  leaf(pair, "gp", "generalized power", cmd_pair_gp);

  auto* newt = group("newt", "Newton polytopes");
  leaf(newt, "compute", "Newton polytope of a polynomial", cmd_newt_compute);
  leaf(newt, "eq", "vertex-set equality of Newton polytopes", cmd_newt_eq);
  leaf(newt, "hat", "upper-face vertices", cmd_newt_hat);
  leaf(newt, "svg", "draw a 2-dimensional polytope", cmd_newt_svg);

  auto* prime = group("prime", "matrix-defined prime congruences");
  leaf(prime, "validate", "admissibility check", cmd_prime_validate);
  leaf(prime, "member", "membership in P(U)", cmd_prime_member);
  leaf(prime, "chain", "prefix chain with separators", cmd_prime_chain);
  leaf(prime, "canon", "canonical defining matrix", cmd_prime_canon);
  leaf(prime, "dim", "dimension of the quotient", cmd_prime_dim);
  leaf(prime, "minimal", "minimality check", cmd_prime_minimal);

  auto* rad = group("rad", "radical membership");
  leaf(rad, "trivial", "membership in Rad(diag)", cmd_rad_trivial);
  leaf(rad, "member", "membership in Rad(E)", cmd_rad_member);
  leaf(rad, "witness-search", "search a generalized-power witness",
       cmd_rad_witness_search);
  leaf(rad, "witness-verify", "verify a generalized-power witness",
       cmd_rad_witness_verify);
  leaf(rad, "witness-normalize", "collapse a witness to lpow = 1",
       cmd_rad_witness_normalize);

  auto* null = group("null", "tropical Nullstellensatz");
  leaf(null, "member", "agreement on V(E)", cmd_null_member);
  leaf(null, "eplus", "membership in E_+", cmd_null_eplus);

  leaf(&app, "collapse", "weight-collapse an ordering matrix", cmd_collapse);
  auto* finlab = group("finlab", "finite B-algebra laboratory");
  leaf(finlab, "analyze", "full congruence analysis", cmd_finlab_analyze);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "tropcong: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (!config_path.empty()) {
      std::ifstream file(config_path);
      if (!file) throw input_error("cannot open config " + config_path);
      std::stringstream buf;
      buf << file.rdbuf();
      const json conf = io::parse_document(buf.str());
      // Explicit flags win over the config file.
      if (conf.contains("k_bound") && opt_bound->count() == 0)
        inv.config.k_bound = conf.at("k_bound").get<int>();
      if (conf.contains("closure_degree_bound"))
        inv.config.closure_degree_bound = conf.at("closure_degree_bound").get<std::int64_t>();
      if (conf.contains("gp_search_bound"))
        inv.config.gp_search_bound = conf.at("gp_search_bound").get<std::size_t>();
      if (conf.contains("epsilon") && opt_eps->count() == 0)
        inv.config.epsilon = conf.at("epsilon").get<std::string>();
      if (conf.contains("jobs") && opt_jobs->count() == 0)
        inv.config.jobs = conf.at("jobs").get<unsigned>();
      if (conf.contains("seed") && opt_seed->count() == 0)
        inv.config.seed = conf.at("seed").get<std::uint64_t>();
    }
    if (inv.config.k_bound < 1 || inv.config.closure_degree_bound < 1 ||
        inv.config.gp_search_bound < 1 || inv.config.jobs < 1)
      throw input_error("all bounds must be positive");
    if (semifield != "B") inv.flag_ctx.tag = io::parse_tag(json(semifield));
    if (inv.flag_ctx.k < 1) throw input_error("--k must be positive");

    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    inv.input = text.empty() ? json::object() : io::parse_document(text);

    if (handler == nullptr) throw input_error("no subcommand selected");
    return handler(inv);
  } catch (const input_error& e) {
    err << "tropcong: input error: " << e.what() << "\n";
    return kInputError;
  } catch (const resource_error& e) {
    err << "tropcong: resource bound exceeded: " << e.what() << "\n";
    return kResource;
  } catch (const json::exception& e) {
    err << "tropcong: input error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace tropcong::cli
