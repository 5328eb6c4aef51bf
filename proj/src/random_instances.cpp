#include "gnnsep/random_instances.hpp"

namespace gnnsep {

LabeledGraph random_graph(SplitMix64& rng, int max_n, int num_labels) {
  const int n = static_cast<int>(rng.range(1, max_n));
  // density in [0, 100]%, re-drawn per graph so sparse and dense cases appear
  const long density = rng.range(0, 100);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.range(0, 99) < density) edges.emplace_back(u, v);
  std::vector<int> labels(n);
  for (int v = 0; v < n; ++v) labels[v] = static_cast<int>(rng.range(1, num_labels));
  return LabeledGraph(n, std::move(edges), std::move(labels), num_labels);
}

namespace {

Rat random_rat(SplitMix64& rng, long max_num, long max_den) {
  Rat r(rng.range(-max_num, max_num), rng.range(1, max_den));
  r.canonicalize();
  return r;
}

std::vector<std::vector<Rat>> random_matrix(SplitMix64& rng, int rows, int cols,
                                            long max_num, long max_den) {
  std::vector<std::vector<Rat>> w(rows);
  for (auto& row : w) {
    row.reserve(cols);
    for (int c = 0; c < cols; ++c) row.push_back(random_rat(rng, max_num, max_den));
  }
  return w;
}

std::vector<Rat> random_vec(SplitMix64& rng, int n, long max_num, long max_den) {
  std::vector<Rat> v;
  v.reserve(n);
  for (int i = 0; i < n; ++i) v.push_back(random_rat(rng, max_num, max_den));
  return v;
}

}  // namespace

RecurrentGNN random_relu_gnn(SplitMix64& rng, int dim, int max_hidden, long max_num,
                             long max_den) {
  const int hidden = static_cast<int>(rng.range(1, max_hidden));
  Layer l1{random_matrix(rng, hidden, 2 * dim, max_num, max_den),
           random_vec(rng, hidden, max_num, max_den),
           ActivationSpec::named(ActivationSpec::Kind::relu)};
  Layer l2{random_matrix(rng, dim, hidden, max_num, max_den),
           random_vec(rng, dim, max_num, max_den),
           ActivationSpec::named(ActivationSpec::Kind::identity)};
  return RecurrentGNN(FeedForwardNet({std::move(l1), std::move(l2)}), dim);
}

}  // namespace gnnsep
