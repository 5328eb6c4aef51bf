#ifndef GNNSEP_RANDOM_INSTANCES_HPP
#define GNNSEP_RANDOM_INSTANCES_HPP

#include <cstdint>

#include "gnnsep/gnn.hpp"
#include "gnnsep/graph.hpp"

namespace gnnsep {

// Deterministic generator for the randomized property campaigns; identical
// sequences on every platform for a given seed.
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // uniform-enough draw in [0, n)
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

  long range(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
};

// Random simple graph on 1..max_n vertices with random labels in
// {1..num_labels}; edge density varies per draw.
LabeledGraph random_graph(SplitMix64& rng, int max_n, int num_labels);

// Random ReLU network GNN: one hidden ReLU layer of width 1..max_hidden and
// an identity output layer, weights and biases p/q with |p| <= max_num and
// 1 <= q <= max_den.
RecurrentGNN random_relu_gnn(SplitMix64& rng, int dim, int max_hidden,
                             long max_num, long max_den);

}  // namespace gnnsep

#endif
