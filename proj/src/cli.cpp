#include "gnnsep/cli.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>
#include <variant>

#include "CLI11.hpp"

#include "gnnsep/bounds.hpp"
#include "gnnsep/errors.hpp"
#include "gnnsep/extract.hpp"
#include "gnnsep/generated.hpp"
#include "gnnsep/json_io.hpp"
#include "gnnsep/random_instances.hpp"
#include "gnnsep/refine.hpp"
#include "gnnsep/search.hpp"

namespace gnnsep {

namespace {

using nlohmann::json;

constexpr const char* kSchema = "gnn-sep-lab/1";

std::string now_iso8601() {
  std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::tm tm_utc{};
  gmtime_r(&t, &tm_utc);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

json envelope(const std::string& command) {
  return json{{"schema", kSchema}, {"command", command}, {"generated_at", now_iso8601()}};
}

struct Output {
  std::string path;  // empty -> stdout
  bool profile = false;
  std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();
  mutable std::chrono::steady_clock::time_point last = started;

  void mark(const char* phase) const {
    auto t = std::chrono::steady_clock::now();
    if (profile) {
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(t - last).count();
      std::cerr << "[profile] " << phase << " " << ms << " ms\n";
    }
    last = t;
  }

  void emit(const json& report, const std::string& summary) const {
    mark("compute");
    std::string text = report.dump(2);
    text += '\n';
    if (path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(path);
      if (!out) throw std::runtime_error("cannot write output file '" + path + "'");
      out << text;
    }
    mark("write");
    std::cerr << summary << "\n";
    if (profile) {
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - started)
                    .count();
      std::cerr << "[profile] total " << ms << " ms\n";
    }
  }
};

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("malformed JSON in '" + path + "': " + e.what());
  }
  return j;
}

std::vector<long> parse_long_list(const std::string& s) {
  std::vector<long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    long v = std::stol(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("bad integer list '" + s + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

// inline "1,3" or a JSON file {"degrees": [1,3]}
DegreeSpec parse_spec(const std::string& s) {
  if (s.size() > 5 && s.rfind(".json") == s.size() - 5)
    return spec_from_json(load_json(s));
  return DegreeSpec(parse_long_list(s));
}

struct FieldChoice {
  bool interval = false;
  long bits = 64;
};

FieldChoice parse_field(const std::string& s) {
  if (s == "rational") return {false, 0};
  if (s.rfind("interval:", 0) == 0) {
    long bits = std::stol(s.substr(9));
    if (bits < MPFR_PREC_MIN) throw std::invalid_argument("field: precision too small");
    return {true, bits};
  }
  throw std::invalid_argument("field must be 'rational' or 'interval:BITS', got '" + s +
                              "'");
}

const char* kind_name(SeparationKind k) {
  switch (k) {
    case SeparationKind::Isomorphic: return "Isomorphic";
    case SeparationKind::DistinctCertified: return "DistinctCertified";
    case SeparationKind::Undecided: return "Undecided";
  }
  return "?";
}

ActivationSpec::Kind parse_analytic(const std::string& name) {
  auto kind = ActivationSpec::kind_from_name(name);
  if (!kind || !ActivationSpec::named(*kind).is_analytic())
    throw std::invalid_argument("activation '" + name +
                                "' is not one of exp, sigmoid, tanh, sinh, cosh");
  return *kind;
}

json seq_to_json(const std::vector<std::vector<Rat>>& seq) {
  json out = json::array();
  for (const auto& v : seq) out.push_back(rat_vec_to_json(v));
  return out;
}

// ---- subcommand handlers ----

int cmd_cr(const std::string& graph_path, const std::string& spec_a,
           const std::string& spec_b, long rounds, bool rounds_set, const Output& out) {
  json report = envelope("cr");
  std::string summary;
  if (!graph_path.empty()) {
    LabeledGraph g = graph_from_json(load_json(graph_path));
    RefinementTrace trace =
        rounds_set ? cr_run(g, static_cast<int>(rounds)) : cr_run(g);
    report["trace"] = trace_to_json(trace);
    summary = "cr: " + std::to_string(trace.rounds.size()) + " rounds, stable_round=" +
              std::to_string(trace.stable_round);
  } else {
    if (spec_a.empty() || spec_b.empty())
      throw std::invalid_argument("cr: need --graph, or both --a and --b");
    DegreeSpec a = parse_spec(spec_a);
    DegreeSpec b = parse_spec(spec_b);
    int t = rounds_set ? static_cast<int>(rounds) : 2;
    bool distinguished = cr_compare(make_tree(a), make_tree(b), t);
    report["a"] = a.degrees();
    report["b"] = b.degrees();
    report["t"] = t;
    report["distinguished"] = distinguished;
    summary = "cr: " + a.to_string() + " vs " + b.to_string() + " at t=" +
              std::to_string(t) + (distinguished ? ": distinguished" : ": equal");
  }
  out.emit(report, summary);
  return 0;
}

int cmd_gnn(const std::string& model_path, const std::string& graph_path,
            const std::string& spec_str, long iters, const std::string& field_str,
            const Output& out) {
  RecurrentGNN gnn = model_from_json(load_json(model_path));
  FieldChoice field = parse_field(field_str);
  json report = envelope("gnn");
  report["iterations"] = iters;
  report["field"] = field_str;

  auto table_json = [&](const auto& table) {
    json jt = json::array();
    for (const auto& round : table) {
      json jr = json::array();
      for (const auto& vec : round) {
        if constexpr (std::is_same_v<std::decay_t<decltype(vec[0])>, Rat>) {
          jr.push_back(rat_vec_to_json(vec));
        } else {
          json jv = json::array();
          for (const auto& x : vec) jv.push_back(interval_to_json(x));
          jr.push_back(jv);
        }
      }
      jt.push_back(jr);
    }
    return jt;
  };

  if (!spec_str.empty()) {
    DegreeSpec spec = parse_spec(spec_str);
    report["spec"] = spec.degrees();
    if (field.interval) {
      IntervalField f{static_cast<mpfr_prec_t>(field.bits)};
      auto seq = root_embedding_seq(gnn, spec, static_cast<int>(iters), f);
      json js = json::array();
      for (const auto& vec : seq) {
        json jv = json::array();
        for (const auto& x : vec) jv.push_back(interval_to_json(x));
        js.push_back(jv);
      }
      report["root_sequence"] = js;
    } else {
      RationalField f;
      report["root_sequence"] =
          seq_to_json(root_embedding_seq(gnn, spec, static_cast<int>(iters), f));
    }
    out.emit(report, "gnn: root sequence of T" + spec.to_string() + " through t=" +
                         std::to_string(iters));
  } else {
    if (graph_path.empty())
      throw std::invalid_argument("gnn: need --graph or --spec");
    LabeledGraph g = graph_from_json(load_json(graph_path));
    if (field.interval) {
      IntervalField f{static_cast<mpfr_prec_t>(field.bits)};
      report["table"] = table_json(gnn_run(gnn, g, static_cast<int>(iters), f));
    } else {
      RationalField f;
      report["table"] = table_json(gnn_run(gnn, g, static_cast<int>(iters), f));
    }
    out.emit(report, "gnn: table over " + std::to_string(g.order()) + " vertices");
  }
  return 0;
}

int cmd_collide(const std::string& model_path, long iters, const std::string& m_list,
                long m_max, const Output& out) {
  RecurrentGNN gnn = model_from_json(load_json(model_path));
  CollisionBudget budget;
  for (long m : parse_long_list(m_list)) budget.m_values.push_back(static_cast<int>(m));
  budget.max_entry = m_max;

  CollisionOutcome outcome = find_collision(gnn, static_cast<int>(iters), budget);
  json report = envelope("collide");
  report["iterations"] = iters;
  report["budget"] = json{{"m_values", budget.m_values}, {"max_entry", budget.max_entry}};

  if (const auto* hit = std::get_if<CollisionResult>(&outcome)) {
    report["found"] = true;
    report["a"] = hit->spec_a.degrees();
    report["b"] = hit->spec_b.degrees();
    report["sequence_a"] = seq_to_json(hit->seq_a);
    report["sequence_b"] = seq_to_json(hit->seq_b);
    report["cr_round_distinguished"] = hit->cr_round_distinguished;
    out.emit(report, "collide: " + hit->spec_a.to_string() + " and " +
                         hit->spec_b.to_string() + " agree through t=" +
                         std::to_string(iters));
    return 0;
  }
  const auto& miss = std::get<CollisionNotFound>(outcome);
  report["found"] = false;
  report["specs_checked"] = miss.specs_checked;
  out.emit(report, "collide: no collision within budget (" +
                       std::to_string(miss.specs_checked) + " specs checked)");
  return 2;
}

int cmd_verify(const std::string& model_path, long iters, const std::string& spec_a,
               const std::string& spec_b, const Output& out) {
  RecurrentGNN gnn = model_from_json(load_json(model_path));
  DegreeSpec a = parse_spec(spec_a);
  DegreeSpec b = parse_spec(spec_b);
  bool ok = verify_collision(gnn, static_cast<int>(iters), a, b);
  json report = envelope("verify");
  report["iterations"] = iters;
  report["a"] = a.degrees();
  report["b"] = b.degrees();
  report["verified"] = ok;
  out.emit(report, std::string("verify: ") + (ok ? "collision verified" : "not a collision"));
  return ok ? 0 : 2;
}

int cmd_separate(const std::string& activation, const std::string& spec_a,
                 const std::string& spec_b, long max_bits, const Output& out) {
  DegreeSpec a = parse_spec(spec_a);
  DegreeSpec b = parse_spec(spec_b);
  SeparationVerdict v = separate_roots(parse_analytic(activation), a, b, max_bits);
  json report = envelope("separate");
  report["activation"] = activation;
  report["a"] = a.degrees();
  report["b"] = b.degrees();
  report["max_bits"] = max_bits;
  report["verdict"] = kind_name(v.kind);
  report["bits"] = v.bits;
  out.emit(report, std::string("separate: ") + kind_name(v.kind) +
                       (v.kind == SeparationKind::DistinctCertified
                            ? " at " + std::to_string(v.bits) + " bits"
                            : ""));
  return v.kind == SeparationKind::Undecided ? 2 : 0;
}

int cmd_exhaustive(const std::string& activation, long max_vertices, long max_bits,
                   int threads, const Output& out) {
  SeparationReport r =
      exhaustive_separation(parse_analytic(activation), max_vertices, max_bits, threads);
  json report = envelope("exhaustive-separate");
  report["activation"] = activation;
  report["max_total_vertices"] = r.max_total_vertices;
  report["max_bits"] = r.max_bits;
  report["spec_count"] = r.spec_count;
  report["pairs_checked"] = r.pairs_checked;
  report["distinct_certified"] = r.distinct_certified;
  report["undecided"] = r.undecided;
  report["max_bits_used"] = r.max_bits_used;
  report["oracle_consistent"] = r.oracle_consistent;
  report["success"] = r.success();
  out.emit(report, "exhaustive-separate: " + std::to_string(r.pairs_checked) +
                       " pairs, " + std::to_string(r.undecided) + " undecided, max " +
                       std::to_string(r.max_bits_used) + " bits");
  return r.success() ? 0 : 2;
}

int cmd_bound(long m, long q, long T, long M, const std::string& lambda,
              const Output& out) {
  BoundParams p{m, q, T, M, BigInt(lambda)};
  BigInt bound = value_count_bound(p);
  json report = envelope("bound");
  report["m"] = m;
  report["q"] = q;
  report["T"] = T;
  report["M"] = M;
  report["lambda_max"] = lambda;
  report["bound"] = bigint_to_string(bound);
  out.emit(report, "bound: " + bigint_to_string(bound));
  return 0;
}

int cmd_boxsize(long m, long q, long iters, long r, const std::string& lambda,
                const Output& out) {
  long M = min_box_size(m, q, iters, r, BigInt(lambda));
  json report = envelope("boxsize");
  report["m"] = m;
  report["q"] = q;
  report["iters"] = iters;
  report["r"] = r;
  report["lambda_max"] = lambda;
  report["min_box_size"] = M;
  out.emit(report, "boxsize: M = " + std::to_string(M));
  return 0;
}

int cmd_refines(const std::string& model_path, const std::string& graph_path,
                long iters, long random_count, long max_n, std::uint64_t seed,
                const Output& out) {
  json report = envelope("refines");
  if (random_count > 0) {
    SplitMix64 rng(seed);
    long violations = 0;
    for (long i = 0; i < random_count; ++i) {
      int dim = static_cast<int>(rng.range(1, 4));
      LabeledGraph g = random_graph(rng, static_cast<int>(max_n), dim);
      RecurrentGNN gnn = random_relu_gnn(rng, dim, 3, 3, 4);
      int t = static_cast<int>(rng.range(1, std::max(1L, iters)));
      if (!check_cr_refines_gnn(gnn, g, t)) ++violations;
    }
    report["random_instances"] = random_count;
    report["max_n"] = max_n;
    report["seed"] = seed;
    report["violations"] = violations;
    out.emit(report, "refines: " + std::to_string(violations) + " violations in " +
                         std::to_string(random_count) + " random instances");
    return violations == 0 ? 0 : 2;
  }
  RecurrentGNN gnn = model_from_json(load_json(model_path));
  LabeledGraph g = graph_from_json(load_json(graph_path));
  bool ok = check_cr_refines_gnn(gnn, g, static_cast<int>(iters));
  report["iterations"] = iters;
  report["refines"] = ok;
  out.emit(report, std::string("refines: ") + (ok ? "holds" : "VIOLATED"));
  return ok ? 0 : 2;
}

int cmd_poly_eval(const std::string& poly_path, const std::string& at,
                  const Output& out) {
  Poly p = poly_from_json(load_json(poly_path));
  std::vector<Rat> x;
  for (long v : parse_long_list(at)) x.emplace_back(v);
  Rat value = p.eval(x);
  json report = envelope("poly");
  report["op"] = "eval";
  report["value"] = rat_to_string(value);
  out.emit(report, "poly eval: " + rat_to_string(value));
  return 0;
}

int cmd_poly_compose(const std::string& outer, const std::string& inner_list,
                     const Output& out) {
  Poly f = poly_from_json(load_json(outer));
  std::vector<Poly> gs;
  std::stringstream ss(inner_list);
  std::string path;
  while (std::getline(ss, path, ','))
    gs.push_back(poly_from_json(load_json(path)));
  Poly composed = poly_compose(f, gs);
  json report = envelope("poly");
  report["op"] = "compose";
  report["result"] = poly_to_json(composed);
  out.emit(report, "poly compose: degree " + std::to_string(composed.degree()));
  return 0;
}

int cmd_poly_qgen(const std::string& poly_path, const Output& out) {
  Poly p = poly_from_json(load_json(poly_path));
  QGeneratedPoly g = q_generate(p);
  json report = envelope("poly");
  report["op"] = "qgen";
  json gens = json::array();
  for (const Rat& s : g.generators()) gens.push_back(rat_to_string(s));
  report["generators"] = gens;
  json coords = json::array();
  for (const auto& [alpha, lambdas] : g.int_coeffs()) {
    json lj = json::array();
    for (const BigInt& l : lambdas) lj.push_back(bigint_to_string(l));
    coords.push_back(json{{"exp", alpha}, {"lambda", lj}});
  }
  report["int_coeffs"] = coords;
  report["max_abs_lambda"] = bigint_to_string(g.max_abs_coordinate());
  out.emit(report, "poly qgen: q = " + std::to_string(g.generator_count()));
  return 0;
}

int cmd_poly_extract(const std::string& model_path, long m, long t,
                     const std::string& seed_str, const Output& out) {
  RecurrentGNN gnn = model_from_json(load_json(model_path));
  DegreeSpec seed = parse_spec(seed_str);
  RegionPolyResult r = extract_region_poly(gnn, static_cast<int>(m),
                                           static_cast<int>(t), seed);
  json report = envelope("poly");
  report["op"] = "extract";
  report["m"] = m;
  report["t"] = t;
  report["seed"] = seed.degrees();
  report["poly"] = poly_to_json(r.poly);
  report["signature_length"] = r.signature.gates.size();
  report["fit_points"] = r.fit_points.size();
  report["holdout_points"] = r.holdout_points.size();
  out.emit(report, "poly extract: " + r.poly.to_string());
  return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args) {
  CLI::App app{"exact-arithmetic lab comparing color refinement with recurrent GNNs"};
  app.require_subcommand(1);

  Output out;
  std::string out_path;
  int threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  app.add_option("--out", out_path, "write the JSON report to this file");
  app.add_flag("--profile", out.profile, "print phase timing to stderr");
  app.add_option("--threads", threads, "worker thread cap");
  // let --out/--profile/--threads appear after the subcommand as well
  app.fallthrough();

  // cr
  auto* cr = app.add_subcommand("cr", "color refinement trace or root comparison");
  std::string cr_graph, cr_a, cr_b;
  long cr_rounds = 0;
  cr->add_option("--graph", cr_graph, "graph JSON file");
  cr->add_option("--a", cr_a, "first degree spec, e.g. 1,3");
  cr->add_option("--b", cr_b, "second degree spec");
  auto* cr_rounds_opt = cr->add_option("--rounds,--t", cr_rounds, "round bound");

  // gnn
  auto* gnn = app.add_subcommand("gnn", "run a model on a graph or tree spec");
  std::string gnn_model, gnn_graph, gnn_spec, gnn_field = "rational";
  long gnn_iters = 2;
  gnn->add_option("--model", gnn_model, "model JSON file")->required();
  gnn->add_option("--graph", gnn_graph, "graph JSON file");
  gnn->add_option("--spec", gnn_spec, "degree spec, e.g. 1,3");
  gnn->add_option("--iters", gnn_iters, "iteration count");
  gnn->add_option("--field", gnn_field, "rational | interval:BITS");

  // collide
  auto* collide = app.add_subcommand("collide", "search for a GNN collision pair");
  std::string col_model, col_m = "2,3,4";
  long col_iters = 2, col_mmax = 8;
  collide->add_option("--model", col_model, "model JSON file")->required();
  collide->add_option("--iters", col_iters, "iterations the pair must agree on");
  collide->add_option("--m", col_m, "comma list of tree widths");
  collide->add_option("--m-max", col_mmax, "max degree entry (box side M)");

  // verify
  auto* verify = app.add_subcommand("verify", "verify a collision pair");
  std::string ver_model, ver_a, ver_b;
  long ver_iters = 2;
  verify->add_option("--model", ver_model, "model JSON file")->required();
  verify->add_option("--iters", ver_iters, "iteration bound I");
  verify->add_option("--a", ver_a, "first degree spec")->required();
  verify->add_option("--b", ver_b, "second degree spec")->required();

  // separate
  auto* separate = app.add_subcommand("separate", "certified root separation");
  std::string sep_act = "sigmoid", sep_a, sep_b;
  long sep_bits = 512;
  separate->add_option("--activation", sep_act, "exp|sigmoid|tanh|sinh|cosh");
  separate->add_option("--a", sep_a, "first degree spec")->required();
  separate->add_option("--b", sep_b, "second degree spec")->required();
  separate->add_option("--max-bits", sep_bits, "precision cap");

  // exhaustive-separate
  auto* exh = app.add_subcommand("exhaustive-separate",
                                 "separate all non-isomorphic pairs up to a size");
  std::string exh_act = "sigmoid";
  long exh_maxv = 13, exh_bits = 512;
  exh->add_option("--activation", exh_act, "exp|sigmoid|tanh|sinh|cosh");
  exh->add_option("--max-vertices", exh_maxv, "max tree vertex count");
  exh->add_option("--max-bits", exh_bits, "precision cap");

  // poly
  auto* poly = app.add_subcommand("poly", "polynomial operations");
  poly->require_subcommand(1);
  auto* peval = poly->add_subcommand("eval", "evaluate at an integer point");
  std::string pe_file, pe_at;
  peval->add_option("--poly", pe_file, "polynomial JSON file")->required();
  peval->add_option("--at", pe_at, "comma list of integers")->required();
  auto* pcomp = poly->add_subcommand("compose", "symbolic composition");
  std::string pc_outer, pc_inner;
  pcomp->add_option("--outer", pc_outer, "outer polynomial JSON")->required();
  pcomp->add_option("--inner", pc_inner, "comma list of inner polynomial JSONs")
      ->required();
  auto* pqgen = poly->add_subcommand("qgen", "1-generated decomposition");
  std::string pq_file;
  pqgen->add_option("--poly", pq_file, "polynomial JSON file")->required();
  auto* pext = poly->add_subcommand("extract", "extract a root-embedding region poly");
  std::string px_model, px_seed;
  long px_m = 2, px_t = 2;
  pext->add_option("--model", px_model, "model JSON file")->required();
  pext->add_option("--m", px_m, "tree width");
  pext->add_option("--t", px_t, "iteration");
  pext->add_option("--seed", px_seed, "seed degree spec")->required();

  // bound
  auto* bound = app.add_subcommand("bound", "value-count bound");
  long b_m = 1, b_q = 1, b_T = 1, b_M = 1;
  std::string b_lambda = "1";
  bound->add_option("--m", b_m)->required();
  bound->add_option("--q", b_q)->required();
  bound->add_option("--T", b_T)->required();
  bound->add_option("--M", b_M)->required();
  bound->add_option("--lambda", b_lambda, "max |lambda| (big integer)");

  // boxsize
  auto* boxsize = app.add_subcommand("boxsize", "minimal collision box side");
  long bs_m = 2, bs_q = 1, bs_iters = 1, bs_r = 1;
  std::string bs_lambda = "1";
  boxsize->add_option("--m", bs_m)->required();
  boxsize->add_option("--q", bs_q)->required();
  boxsize->add_option("--iters", bs_iters, "|I|")->required();
  boxsize->add_option("--r", bs_r, "pieces per function");
  boxsize->add_option("--lambda", bs_lambda, "max |lambda| (big integer)");

  // refines
  auto* refines = app.add_subcommand("refines", "check cr^t refines xi^t");
  std::string rf_model, rf_graph;
  long rf_iters = 2, rf_random = 0, rf_maxn = 12;
  std::uint64_t rf_seed = 1;
  refines->add_option("--model", rf_model, "model JSON file");
  refines->add_option("--graph", rf_graph, "graph JSON file");
  refines->add_option("--iters", rf_iters, "iteration count (cap in random mode)");
  refines->add_option("--random", rf_random, "run N random instances instead");
  refines->add_option("--max-n", rf_maxn, "max graph order in random mode");
  refines->add_option("--seed", rf_seed, "random seed");

  std::vector<const char*> argv;
  argv.push_back("gnnsep");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  out.path = out_path;
  out.mark("parse");

  try {
    if (cr->parsed())
      return cmd_cr(cr_graph, cr_a, cr_b, cr_rounds, cr_rounds_opt->count() > 0, out);
    if (gnn->parsed())
      return cmd_gnn(gnn_model, gnn_graph, gnn_spec, gnn_iters, gnn_field, out);
    if (collide->parsed()) return cmd_collide(col_model, col_iters, col_m, col_mmax, out);
    if (verify->parsed()) return cmd_verify(ver_model, ver_iters, ver_a, ver_b, out);
    if (separate->parsed()) return cmd_separate(sep_act, sep_a, sep_b, sep_bits, out);
    if (exh->parsed()) return cmd_exhaustive(exh_act, exh_maxv, exh_bits, threads, out);
    if (poly->parsed()) {
      if (peval->parsed()) return cmd_poly_eval(pe_file, pe_at, out);
      if (pcomp->parsed()) return cmd_poly_compose(pc_outer, pc_inner, out);
      if (pqgen->parsed()) return cmd_poly_qgen(pq_file, out);
      if (pext->parsed()) return cmd_poly_extract(px_model, px_m, px_t, px_seed, out);
    }
    if (bound->parsed()) return cmd_bound(b_m, b_q, b_T, b_M, b_lambda, out);
    if (boxsize->parsed())
      return cmd_boxsize(bs_m, bs_q, bs_iters, bs_r, bs_lambda, out);
    if (refines->parsed())
      return cmd_refines(rf_model, rf_graph, rf_iters, rf_random, rf_maxn, rf_seed, out);
    std::cerr << "error: no subcommand selected\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace gnnsep
