#ifndef GNNSEP_GRAPH_HPP
#define GNNSEP_GRAPH_HPP

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gnnsep {

// Finite simple vertex-labeled graph. Vertices are dense ids 0..n-1, the
// edge relation is symmetric and irreflexive, every vertex carries exactly
// one label in {1..num_labels}.
class LabeledGraph {
public:
  LabeledGraph(int n, std::vector<std::pair<int, int>> edges,
               std::vector<int> labels, int num_labels);

  // All vertices labeled 1, single color.
  static LabeledGraph unicolored(int n, std::vector<std::pair<int, int>> edges);

  int order() const { return n_; }
  int num_labels() const { return num_labels_; }
  int label(int v) const { return labels_[v]; }
  const std::vector<int>& labels() const { return labels_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  // normalized: u < v, sorted, no duplicates
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

private:
  int n_ = 0;
  int num_labels_ = 1;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> labels_;
  std::vector<std::vector<int>> adj_;
};

struct RootedGraph {
  LabeledGraph graph;
  int root = 0;

  RootedGraph(LabeledGraph g, int root_vertex);
};

// The multiset (k_1,...,k_m) parameterizing the depth-two tree T[k_1..k_m].
// Stored sorted nondecreasing, the canonical multiset representative.
class DegreeSpec {
public:
  explicit DegreeSpec(std::vector<long> degrees);

  int size() const { return static_cast<int>(degrees_.size()); }  // m
  const std::vector<long>& degrees() const { return degrees_; }
  // 1 + m + sum(k_i - 1)
  long total_vertices() const;
  std::string to_string() const;  // e.g. "[1,3]"

  bool operator==(const DegreeSpec& other) const = default;
  auto operator<=>(const DegreeSpec& other) const = default;

private:
  std::vector<long> degrees_;
};

// Builds the unicolored depth-two tree with root of degree m whose i-th
// depth-one vertex has degree k_i. Ids are deterministic: root 0, then the
// depth-one vertices in spec order, then their leaves in order.
RootedGraph make_tree(const DegreeSpec& spec);

// Trees in this family are isomorphic iff their degree multisets are equal.
bool tree_isomorphic(const DegreeSpec& a, const DegreeSpec& b);

// Relabels vertices: vertex v becomes perm[v]. perm must be a bijection on
// 0..n-1; labels follow their vertices.
LabeledGraph apply_permutation(const LabeledGraph& g, std::span<const int> perm);

// Disjoint union; the second graph's ids are offset by a.order().
LabeledGraph disjoint_union(const LabeledGraph& a, const LabeledGraph& b);

}  // namespace gnnsep

#endif
