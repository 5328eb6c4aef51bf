#include "gnnsep/graph.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace gnnsep {

LabeledGraph::LabeledGraph(int n, std::vector<std::pair<int, int>> edges,
                           std::vector<int> labels, int num_labels)
    : n_(n), num_labels_(num_labels), labels_(std::move(labels)) {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  if (num_labels < 1) throw std::invalid_argument("graph: need at least one label");
  if (static_cast<int>(labels_.size()) != n)
    throw std::invalid_argument("graph: label list size != vertex count");
  for (int lab : labels_)
    if (lab < 1 || lab > num_labels)
      throw std::invalid_argument("graph: vertex label out of range");

  for (auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("graph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("graph: self-loop");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);

  adj_.assign(n_, {});
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

LabeledGraph LabeledGraph::unicolored(int n, std::vector<std::pair<int, int>> edges) {
  return LabeledGraph(n, std::move(edges), std::vector<int>(n, 1), 1);
}

RootedGraph::RootedGraph(LabeledGraph g, int root_vertex)
    : graph(std::move(g)), root(root_vertex) {
  if (root < 0 || root >= graph.order())
    throw std::invalid_argument("rooted graph: root id out of range");
}

DegreeSpec::DegreeSpec(std::vector<long> degrees) : degrees_(std::move(degrees)) {
  if (degrees_.empty()) throw std::invalid_argument("degree spec: empty");
  for (long k : degrees_)
    if (k < 1) throw std::invalid_argument("degree spec: every k_i must be >= 1");
  std::sort(degrees_.begin(), degrees_.end());
}

long DegreeSpec::total_vertices() const {
  long total = 1 + size();
  for (long k : degrees_) total += k - 1;
  return total;
}

std::string DegreeSpec::to_string() const {
  std::string out = "[";
  for (size_t i = 0; i < degrees_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(degrees_[i]);
  }
  out += ']';
  return out;
}

RootedGraph make_tree(const DegreeSpec& spec) {
  const int m = spec.size();
  const long total = spec.total_vertices();
  if (total > std::numeric_limits<int>::max() / 2)
    throw std::invalid_argument("make_tree: spec too large to materialize");
  const int n = static_cast<int>(total);

  std::vector<std::pair<int, int>> edges;
  edges.reserve(n - 1);
  int next = 1 + m;  // first leaf id
  for (int i = 0; i < m; ++i) {
    edges.emplace_back(0, 1 + i);
    for (long c = 0; c < spec.degrees()[i] - 1; ++c)
      edges.emplace_back(1 + i, next++);
  }
  return RootedGraph(LabeledGraph::unicolored(n, std::move(edges)), 0);
}

bool tree_isomorphic(const DegreeSpec& a, const DegreeSpec& b) {
  return a.degrees() == b.degrees();
}

LabeledGraph apply_permutation(const LabeledGraph& g, std::span<const int> perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("apply_permutation: size mismatch");
  std::vector<bool> hit(n, false);
  for (int p : perm) {
    if (p < 0 || p >= n || hit[p])
      throw std::invalid_argument("apply_permutation: not a bijection");
    hit[p] = true;
  }

  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edges().size());
  for (const auto& [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  std::vector<int> labels(n);
  for (int v = 0; v < n; ++v) labels[perm[v]] = g.label(v);
  return LabeledGraph(n, std::move(edges), std::move(labels), g.num_labels());
}

LabeledGraph disjoint_union(const LabeledGraph& a, const LabeledGraph& b) {
  const int off = a.order();
  std::vector<std::pair<int, int>> edges = a.edges();
  for (const auto& [u, v] : b.edges()) edges.emplace_back(u + off, v + off);
  std::vector<int> labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  return LabeledGraph(a.order() + b.order(), std::move(edges), std::move(labels),
                      std::max(a.num_labels(), b.num_labels()));
}

}  // namespace gnnsep
