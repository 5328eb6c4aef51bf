#ifndef GNNSEP_JSON_IO_HPP
#define GNNSEP_JSON_IO_HPP

#include "json.hpp"

#include "gnnsep/gnn.hpp"
#include "gnnsep/graph.hpp"
#include "gnnsep/interval.hpp"
#include "gnnsep/poly.hpp"
#include "gnnsep/refine.hpp"

namespace gnnsep {

// All exact numbers (rationals, big integers) travel as strings; only
// machine-sized counts are JSON numbers. Parsers throw std::invalid_argument
// naming the offending field.

nlohmann::json graph_to_json(const LabeledGraph& g);
LabeledGraph graph_from_json(const nlohmann::json& j);

nlohmann::json spec_to_json(const DegreeSpec& s);
DegreeSpec spec_from_json(const nlohmann::json& j);

nlohmann::json model_to_json(const RecurrentGNN& g);
RecurrentGNN model_from_json(const nlohmann::json& j);

nlohmann::json poly_to_json(const Poly& p);
Poly poly_from_json(const nlohmann::json& j);

nlohmann::json trace_to_json(const RefinementTrace& t);

nlohmann::json interval_to_json(const Interval& x);

nlohmann::json rat_vec_to_json(const std::vector<Rat>& v);

}  // namespace gnnsep

#endif
