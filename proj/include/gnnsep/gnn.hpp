#ifndef GNNSEP_GNN_HPP
#define GNNSEP_GNN_HPP

#include <span>
#include <vector>

#include "gnnsep/activation.hpp"
#include "gnnsep/graph.hpp"

namespace gnnsep {

struct Layer {
  // weights[r][c]: row r of the matrix mapping in_dim -> out_dim
  std::vector<std::vector<Rat>> weights;
  std::vector<Rat> bias;
  ActivationSpec activation;

  int out_dim() const { return static_cast<int>(weights.size()); }
  int in_dim() const { return weights.empty() ? 0 : static_cast<int>(weights[0].size()); }
};

// Affine-then-activation layer stack with rational weights.
class FeedForwardNet {
public:
  explicit FeedForwardNet(std::vector<Layer> layers);

  int input_dim() const { return input_dim_; }
  int output_dim() const { return output_dim_; }
  const std::vector<Layer>& layers() const { return layers_; }

private:
  std::vector<Layer> layers_;
  int input_dim_ = 0;
  int output_dim_ = 0;
};

// Recurrent GNN: a single combine network comb: R^{2d} -> R^d applied at
// every iteration, with summation aggregation over neighbors.
class RecurrentGNN {
public:
  RecurrentGNN(FeedForwardNet comb, int dim);

  const FeedForwardNet& comb() const { return comb_; }
  int dim() const { return dim_; }

  // d=1, comb(x, y) = x + y.
  static RecurrentGNN identity_sum();
  // d=1, comb(x, y) = act(x + y), unit weights, zero bias.
  static RecurrentGNN one_neuron(ActivationSpec::Kind activation);

private:
  FeedForwardNet comb_;
  int dim_;
};

bool has_analytic_activation(const FeedForwardNet& net);

// Degree of the network as a piecewise polynomial function of its inputs:
// the product of the layers' maximum piece degrees. Analytic layers have no
// degree; UnsupportedFieldError.
long piecewise_degree(const FeedForwardNet& net);

// One forward pass. In the exact field, gates (when given) collects the
// piece index of every activation application, in layer-then-unit order.
template <class Field>
std::vector<typename Field::Scalar> nn_eval(
    const FeedForwardNet& net, std::span<const typename Field::Scalar> input,
    const Field& field, RegionSignature* gates = nullptr) {
  if (static_cast<int>(input.size()) != net.input_dim())
    throw std::invalid_argument("nn_eval: input length != input_dim");

  using S = typename Field::Scalar;
  std::vector<S> cur(input.begin(), input.end());
  for (const Layer& layer : net.layers()) {
    std::vector<S> next;
    next.reserve(layer.out_dim());
    for (int r = 0; r < layer.out_dim(); ++r) {
      S acc = field.constant(layer.bias[r]);
      for (int c = 0; c < layer.in_dim(); ++c)
        acc = acc + field.constant(layer.weights[r][c]) * cur[c];
      next.push_back(activation_eval(layer.activation, acc, field, gates));
    }
    cur = std::move(next);
  }
  return cur;
}

// Per-iteration, per-vertex embeddings: table[t][v] is the d-vector
// xi^t(v); xi^0(v) is the indicator of v's color and
// xi^{t+1}(v) = comb(xi^t(v), sum over neighbors of xi^t).
template <class Field>
std::vector<std::vector<std::vector<typename Field::Scalar>>> gnn_run(
    const RecurrentGNN& g, const LabeledGraph& graph, int iterations,
    const Field& field, RegionSignature* gates = nullptr) {
  if (iterations < 0) throw std::invalid_argument("gnn_run: negative iteration count");
  if (graph.num_labels() > g.dim())
    throw std::invalid_argument("gnn_run: graph colors exceed embedding dimension");

  using S = typename Field::Scalar;
  const int n = graph.order();
  const int d = g.dim();

  std::vector<std::vector<std::vector<S>>> table;
  table.reserve(iterations + 1);

  std::vector<std::vector<S>> cur(n);
  for (int v = 0; v < n; ++v) {
    std::vector<S> e(d, field.constant(Rat(0)));
    e[graph.label(v) - 1] = field.constant(Rat(1));
    cur[v] = std::move(e);
  }
  table.push_back(cur);

  std::vector<S> in(2 * d, field.constant(Rat(0)));
  for (int t = 1; t <= iterations; ++t) {
    std::vector<std::vector<S>> next(n);
    for (int v = 0; v < n; ++v) {
      for (int i = 0; i < d; ++i) in[i] = cur[v][i];
      for (int i = 0; i < d; ++i) in[d + i] = field.constant(Rat(0));
      for (int w : graph.neighbors(v))
        for (int i = 0; i < d; ++i) in[d + i] = in[d + i] + cur[w][i];
      next[v] = nn_eval(g.comb(), std::span<const S>(in), field, gates);
    }
    cur = std::move(next);
    table.push_back(cur);
  }
  return table;
}

// The compared object of the separation experiments: the root's embedding
// at every iteration 0..T of the tree T[spec].
template <class Field>
std::vector<std::vector<typename Field::Scalar>> root_embedding_seq(
    const RecurrentGNN& g, const DegreeSpec& spec, int iterations,
    const Field& field) {
  RootedGraph tree = make_tree(spec);
  auto table = gnn_run(g, tree.graph, iterations, field);
  std::vector<std::vector<typename Field::Scalar>> seq;
  seq.reserve(table.size());
  for (auto& round : table) seq.push_back(std::move(round[tree.root]));
  return seq;
}

// Exact root embedding sequence of T[k_1..k_m] computed on the three vertex
// classes (root, each depth-one vertex, each leaf class) instead of the
// materialized tree. Agrees exactly with root_embedding_seq and keeps the
// recorded signature length independent of the k_i, so signatures are
// comparable across integer points. k need not be sorted.
std::vector<std::vector<Rat>> tree_root_seq_classes(const RecurrentGNN& g,
                                                    std::span<const long> k,
                                                    int iterations,
                                                    RegionSignature* gates = nullptr);

}  // namespace gnnsep

#endif
