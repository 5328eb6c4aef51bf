#include "gnnsep/json_io.hpp"

#include <stdexcept>

namespace gnnsep {

using nlohmann::json;

namespace {

const json& need(const json& j, const char* field) {
  auto it = j.find(field);
  if (it == j.end())
    throw std::invalid_argument(std::string("missing field '") + field + "'");
  return *it;
}

long need_int(const json& j, const char* field) {
  const json& v = need(j, field);
  if (!v.is_number_integer())
    throw std::invalid_argument(std::string("field '") + field + "' must be an integer");
  return v.get<long>();
}

Rat need_rat(const json& v, const char* field) {
  if (!v.is_string())
    throw std::invalid_argument(std::string("field '") + field +
                                "' must be a rational string");
  try {
    return rat_from_string(v.get<std::string>());
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument(std::string("field '") + field +
                                "' is not a valid rational");
  }
}

std::vector<Rat> rat_vec(const json& v, const char* field) {
  if (!v.is_array())
    throw std::invalid_argument(std::string("field '") + field + "' must be an array");
  std::vector<Rat> out;
  out.reserve(v.size());
  for (const auto& e : v) out.push_back(need_rat(e, field));
  return out;
}

}  // namespace

json graph_to_json(const LabeledGraph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back(json::array({u, v}));
  return json{{"n", g.order()}, {"edges", edges}, {"labels", g.labels()}};
}

LabeledGraph graph_from_json(const json& j) {
  long n = need_int(j, "n");
  const json& je = need(j, "edges");
  if (!je.is_array()) throw std::invalid_argument("field 'edges' must be an array");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : je) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw std::invalid_argument("field 'edges' must contain [u,v] integer pairs");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  const json& jl = need(j, "labels");
  if (!jl.is_array()) throw std::invalid_argument("field 'labels' must be an array");
  std::vector<int> labels;
  int num_labels = 1;
  for (const auto& l : jl) {
    if (!l.is_number_integer())
      throw std::invalid_argument("field 'labels' must contain integers");
    labels.push_back(l.get<int>());
    num_labels = std::max(num_labels, labels.back());
  }
  return LabeledGraph(static_cast<int>(n), std::move(edges), std::move(labels),
                      num_labels);
}

json spec_to_json(const DegreeSpec& s) {
  return json{{"degrees", s.degrees()}};
}

DegreeSpec spec_from_json(const json& j) {
  const json& jd = need(j, "degrees");
  if (!jd.is_array()) throw std::invalid_argument("field 'degrees' must be an array");
  std::vector<long> degrees;
  for (const auto& d : jd) {
    if (!d.is_number_integer())
      throw std::invalid_argument("field 'degrees' must contain integers");
    degrees.push_back(d.get<long>());
  }
  return DegreeSpec(std::move(degrees));
}

namespace {

json activation_to_json(const ActivationSpec& a) {
  if (a.kind() != ActivationSpec::Kind::piecewise)
    return ActivationSpec::name_of(a.kind());
  json breakpoints = json::array();
  for (const Rat& b : a.pieces().breakpoints()) breakpoints.push_back(rat_to_string(b));
  json pieces = json::array();
  for (int i = 0; i < a.pieces().piece_count(); ++i) {
    json coeffs = json::array();
    for (const Rat& c : a.pieces().piece(i)) coeffs.push_back(rat_to_string(c));
    pieces.push_back(coeffs);
  }
  return json{{"piecewise", json{{"breakpoints", breakpoints}, {"pieces", pieces}}}};
}

ActivationSpec activation_from_json(const json& v) {
  if (v.is_string()) {
    auto kind = ActivationSpec::kind_from_name(v.get<std::string>());
    if (!kind)
      throw std::invalid_argument("field 'activation' has unknown name '" +
                                  v.get<std::string>() + "'");
    return ActivationSpec::named(*kind);
  }
  if (v.is_object() && v.contains("piecewise")) {
    const json& pw = v["piecewise"];
    std::vector<Rat> breakpoints = rat_vec(need(pw, "breakpoints"), "breakpoints");
    const json& jp = need(pw, "pieces");
    if (!jp.is_array())
      throw std::invalid_argument("field 'pieces' must be an array of arrays");
    std::vector<std::vector<Rat>> pieces;
    for (const auto& p : jp) pieces.push_back(rat_vec(p, "pieces"));
    return ActivationSpec::from_pieces(
        PiecewisePoly(std::move(breakpoints), std::move(pieces)));
  }
  throw std::invalid_argument("field 'activation' must be a name or piecewise object");
}

}  // namespace

json model_to_json(const RecurrentGNN& g) {
  json layers = json::array();
  for (const Layer& l : g.comb().layers()) {
    json weights = json::array();
    for (const auto& row : l.weights) {
      json jrow = json::array();
      for (const Rat& w : row) jrow.push_back(rat_to_string(w));
      weights.push_back(jrow);
    }
    json bias = json::array();
    for (const Rat& b : l.bias) bias.push_back(rat_to_string(b));
    layers.push_back(json{{"weights", weights},
                          {"bias", bias},
                          {"activation", activation_to_json(l.activation)}});
  }
  return json{{"d", g.dim()}, {"layers", layers}};
}

RecurrentGNN model_from_json(const json& j) {
  long d = need_int(j, "d");
  const json& jl = need(j, "layers");
  if (!jl.is_array() || jl.empty())
    throw std::invalid_argument("field 'layers' must be a non-empty array");

  std::vector<Layer> layers;
  for (const auto& l : jl) {
    const json& jw = need(l, "weights");
    if (!jw.is_array() || jw.empty())
      throw std::invalid_argument("field 'weights' must be a non-empty array");
    std::vector<std::vector<Rat>> weights;
    for (const auto& row : jw) weights.push_back(rat_vec(row, "weights"));
    std::vector<Rat> bias = rat_vec(need(l, "bias"), "bias");
    ActivationSpec act = activation_from_json(need(l, "activation"));
    layers.push_back(Layer{std::move(weights), std::move(bias), std::move(act)});
  }
  return RecurrentGNN(FeedForwardNet(std::move(layers)), static_cast<int>(d));
}

json poly_to_json(const Poly& p) {
  json terms = json::array();
  for (const auto& [alpha, c] : p.terms())
    terms.push_back(json{{"exp", alpha}, {"coeff", rat_to_string(c)}});
  return json{{"m", p.vars()}, {"terms", terms}};
}

Poly poly_from_json(const json& j) {
  long m = need_int(j, "m");
  Poly p(static_cast<int>(m));
  const json& jt = need(j, "terms");
  if (!jt.is_array()) throw std::invalid_argument("field 'terms' must be an array");
  for (const auto& t : jt) {
    const json& je = need(t, "exp");
    if (!je.is_array() || static_cast<long>(je.size()) != m)
      throw std::invalid_argument("field 'exp' must be an array of m exponents");
    Poly::Exponents alpha;
    for (const auto& e : je) {
      if (!e.is_number_integer() || e.get<long>() < 0)
        throw std::invalid_argument("field 'exp' must contain nonnegative integers");
      alpha.push_back(e.get<unsigned>());
    }
    p.add_term(alpha, need_rat(need(t, "coeff"), "coeff"));
  }
  return p;
}

json trace_to_json(const RefinementTrace& t) {
  json rounds = json::array();
  for (const Coloring& c : t.rounds) rounds.push_back(c.colors);
  return json{{"rounds", rounds}, {"stable_round", t.stable_round}};
}

json interval_to_json(const Interval& x) {
  int digits = static_cast<int>(static_cast<double>(x.precision()) * 0.30103) + 3;
  char* lo = nullptr;
  char* hi = nullptr;
  mpfr_asprintf(&lo, "%.*RDg", digits, x.lo());
  mpfr_asprintf(&hi, "%.*RUg", digits, x.hi());
  json out{{"lo", std::string(lo)}, {"hi", std::string(hi)}};
  mpfr_free_str(lo);
  mpfr_free_str(hi);
  return out;
}

json rat_vec_to_json(const std::vector<Rat>& v) {
  json out = json::array();
  for (const Rat& r : v) out.push_back(rat_to_string(r));
  return out;
}

}  // namespace gnnsep
