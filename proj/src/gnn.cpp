#include "gnnsep/gnn.hpp"

#include <stdexcept>

namespace gnnsep {

FeedForwardNet::FeedForwardNet(std::vector<Layer> layers)
    : layers_(std::move(layers)) {
  if (layers_.empty()) throw std::invalid_argument("net: needs at least one layer");
  for (const Layer& l : layers_) {
    if (l.weights.empty()) throw std::invalid_argument("net: empty weight matrix");
    for (const auto& row : l.weights)
      if (row.size() != l.weights[0].size())
        throw std::invalid_argument("net: ragged weight matrix");
    if (static_cast<int>(l.bias.size()) != l.out_dim())
      throw std::invalid_argument("net: bias size != output dim");
  }
  for (size_t i = 1; i < layers_.size(); ++i)
    if (layers_[i].in_dim() != layers_[i - 1].out_dim())
      throw std::invalid_argument("net: consecutive layer dimensions incompatible");
  input_dim_ = layers_.front().in_dim();
  output_dim_ = layers_.back().out_dim();
}

RecurrentGNN::RecurrentGNN(FeedForwardNet comb, int dim)
    : comb_(std::move(comb)), dim_(dim) {
  if (dim_ < 1) throw std::invalid_argument("gnn: dimension must be >= 1");
  if (comb_.input_dim() != 2 * dim_ || comb_.output_dim() != dim_)
    throw std::invalid_argument("gnn: combine network must map R^{2d} -> R^d");
}

RecurrentGNN RecurrentGNN::identity_sum() {
  Layer l{{{Rat(1), Rat(1)}}, {Rat(0)},
          ActivationSpec::named(ActivationSpec::Kind::identity)};
  return RecurrentGNN(FeedForwardNet({l}), 1);
}

RecurrentGNN RecurrentGNN::one_neuron(ActivationSpec::Kind activation) {
  Layer l{{{Rat(1), Rat(1)}}, {Rat(0)}, ActivationSpec::named(activation)};
  return RecurrentGNN(FeedForwardNet({l}), 1);
}

bool has_analytic_activation(const FeedForwardNet& net) {
  for (const Layer& l : net.layers())
    if (l.activation.is_analytic()) return true;
  return false;
}

long piecewise_degree(const FeedForwardNet& net) {
  long deg = 1;
  for (const Layer& l : net.layers()) {
    if (l.activation.is_analytic())
      throw UnsupportedFieldError("piecewise_degree: analytic activation");
    deg *= l.activation.pieces().degree();
  }
  return deg;
}

std::vector<std::vector<Rat>> tree_root_seq_classes(const RecurrentGNN& g,
                                                    std::span<const long> k,
                                                    int iterations,
                                                    RegionSignature* gates) {
  if (iterations < 0)
    throw std::invalid_argument("tree_root_seq_classes: negative iteration count");
  for (long ki : k)
    if (ki < 1) throw std::invalid_argument("tree_root_seq_classes: every k_i must be >= 1");
  const int m = static_cast<int>(k.size());
  if (m < 1) throw std::invalid_argument("tree_root_seq_classes: empty spec");

  const RationalField field;
  const int d = g.dim();
  const std::vector<Rat> zero(d, Rat(0));
  std::vector<Rat> indicator = zero;
  indicator[0] = 1;  // unicolored family

  // class values: root, depth-one vertex above each k_i, leaf below each k_i
  std::vector<Rat> root = indicator;
  std::vector<std::vector<Rat>> depth1(m, indicator), leaf(m, indicator);

  std::vector<std::vector<Rat>> seq;
  seq.reserve(iterations + 1);
  seq.push_back(root);

  std::vector<Rat> in(2 * d);
  auto combine = [&](const std::vector<Rat>& self, const std::vector<Rat>& agg) {
    for (int i = 0; i < d; ++i) in[i] = self[i];
    for (int i = 0; i < d; ++i) in[d + i] = agg[i];
    return nn_eval(g.comb(), std::span<const Rat>(in), field, gates);
  };

  std::vector<Rat> agg(d);
  for (int t = 1; t <= iterations; ++t) {
    // root aggregates all depth-one vertices
    for (int i = 0; i < d; ++i) agg[i] = 0;
    for (int j = 0; j < m; ++j)
      for (int i = 0; i < d; ++i) agg[i] += depth1[j][i];
    std::vector<Rat> root_next = combine(root, agg);

    // depth-one vertex j aggregates the root and its k_j - 1 leaves; the
    // leaf class is evaluated even when empty so signature shapes match
    std::vector<std::vector<Rat>> depth1_next(m), leaf_next(m);
    for (int j = 0; j < m; ++j) {
      const Rat mult(k[j] - 1);
      for (int i = 0; i < d; ++i) agg[i] = root[i] + mult * leaf[j][i];
      depth1_next[j] = combine(depth1[j], agg);
      leaf_next[j] = combine(leaf[j], depth1[j]);
    }

    root = std::move(root_next);
    depth1 = std::move(depth1_next);
    leaf = std::move(leaf_next);
    seq.push_back(root);
  }
  return seq;
}

}  // namespace gnnsep
