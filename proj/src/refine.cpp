#include "gnnsep/refine.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gnnsep {

bool Coloring::same_partition(const Coloring& other) const {
  if (colors.size() != other.colors.size()) return false;
  if (num_colors != other.num_colors) return false;
  // Both sides are dense canonical ids of refinements of a common start, so
  // equal class counts mean equal partitions; still verify class-for-class.
  std::vector<int> map_ab(num_colors, -1);
  for (size_t v = 0; v < colors.size(); ++v) {
    int& m = map_ab[colors[v]];
    if (m == -1)
      m = other.colors[v];
    else if (m != other.colors[v])
      return false;
  }
  return true;
}

const Coloring& RefinementTrace::at(int t) const {
  if (t < 0) throw std::invalid_argument("trace: negative round");
  if (t <= last_round()) return rounds[t];
  if (stable_round < 0)
    throw std::invalid_argument("trace: round beyond a non-stabilized bounded run");
  return rounds.back();
}

Coloring initial_coloring(const LabeledGraph& g) {
  std::vector<int> present;
  for (int v = 0; v < g.order(); ++v) present.push_back(g.label(v));
  std::sort(present.begin(), present.end());
  present.erase(std::unique(present.begin(), present.end()), present.end());

  Coloring c;
  c.round = 0;
  c.num_colors = static_cast<int>(present.size());
  c.colors.resize(g.order());
  for (int v = 0; v < g.order(); ++v) {
    auto it = std::lower_bound(present.begin(), present.end(), g.label(v));
    c.colors[v] = static_cast<int>(it - present.begin());
  }
  return c;
}

Coloring cr_step(const LabeledGraph& g, const Coloring& c) {
  const int n = g.order();
  if (static_cast<int>(c.colors.size()) != n)
    throw std::invalid_argument("cr_step: coloring size != graph order");

  using Signature = std::pair<int, std::vector<int>>;
  std::vector<Signature> sig(n);
  for (int v = 0; v < n; ++v) {
    std::vector<int> nb;
    nb.reserve(g.neighbors(v).size());
    for (int w : g.neighbors(v)) nb.push_back(c.colors[w]);
    std::sort(nb.begin(), nb.end());
    sig[v] = {c.colors[v], std::move(nb)};
  }

  std::map<Signature, int> ids;
  for (const auto& s : sig) ids.emplace(s, 0);
  int next = 0;
  for (auto& [key, id] : ids) id = next++;

  Coloring out;
  out.round = c.round + 1;
  out.num_colors = next;
  out.colors.resize(n);
  for (int v = 0; v < n; ++v) out.colors[v] = ids.at(sig[v]);
  return out;
}

RefinementTrace cr_run(const LabeledGraph& g, std::optional<int> max_rounds) {
  if (max_rounds && *max_rounds < 0)
    throw std::invalid_argument("cr_run: negative round bound");

  RefinementTrace trace;
  trace.rounds.push_back(initial_coloring(g));
  while (!max_rounds || trace.last_round() < *max_rounds) {
    Coloring next = cr_step(g, trace.rounds.back());
    if (next.same_partition(trace.rounds.back())) {
      trace.stable_round = trace.last_round();
      break;
    }
    trace.rounds.push_back(std::move(next));
  }
  return trace;
}

bool cr_compare(const RootedGraph& a, const RootedGraph& b, int t) {
  if (t < 0) throw std::invalid_argument("cr_compare: negative round");
  LabeledGraph joint = disjoint_union(a.graph, b.graph);
  RefinementTrace trace = cr_run(joint, t);
  const Coloring& col = trace.at(std::min(t, trace.last_round()));
  return col.colors[a.root] != col.colors[a.graph.order() + b.root];
}

}  // namespace gnnsep
