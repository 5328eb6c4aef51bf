#ifndef GNNSEP_SEARCH_HPP
#define GNNSEP_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "gnnsep/gnn.hpp"
#include "gnnsep/graph.hpp"

namespace gnnsep {

// Every nondecreasing k in {1..M}^m, lexicographically; binom(M+m-1, m) specs.
std::vector<DegreeSpec> enumerate_specs(int m, long M);

// Streaming form; visit returns false to stop early.
void for_each_spec(int m, long M,
                   const std::function<bool(std::span<const long>)>& visit);

// All specs whose tree has at most max_total_vertices vertices, ordered by
// (m, lex).
std::vector<DegreeSpec> specs_up_to_vertices(long max_total_vertices);

// A verified pair of non-isomorphic depth-two trees whose root embeddings
// coincide exactly for every iteration 0..iterations.
struct CollisionResult {
  DegreeSpec spec_a;
  DegreeSpec spec_b;
  int iterations = 0;                       // I
  std::vector<std::vector<Rat>> seq_a;      // [t][dim], equal to seq_b
  std::vector<std::vector<Rat>> seq_b;
  int cr_round_distinguished = 2;
};

// Budget exhaustion; says nothing about nonexistence.
struct CollisionNotFound {
  std::uint64_t specs_checked = 0;
};

using CollisionOutcome = std::variant<CollisionResult, CollisionNotFound>;

struct CollisionBudget {
  std::vector<int> m_values;  // tree widths to try, searched in given order
  long max_entry = 8;         // box side M; entries k_i range over 1..M
};

// Searches for two specs with exactly equal root embedding sequences through
// iteration `iterations` under the exact rational field. Specs are grouped
// per m by their canonical sequence encoding, enumerated with growing
// maximum entry so small trees are found first; any returned pair is
// re-verified from scratch. Analytic activations are rejected.
CollisionOutcome find_collision(const RecurrentGNN& gnn, int iterations,
                                const CollisionBudget& budget);

// True iff the root sequences agree exactly for t = 0..iterations, the
// multisets differ, and color refinement distinguishes the roots at round 2.
bool verify_collision(const RecurrentGNN& gnn, int iterations,
                      const DegreeSpec& a, const DegreeSpec& b);

enum class SeparationKind { Isomorphic, DistinctCertified, Undecided };

struct SeparationVerdict {
  SeparationKind kind = SeparationKind::Undecided;
  // precision at which the enclosures separated, or the cap that was reached
  long bits = 0;
};

// Compares xi^2 of the two roots under the one-neuron perceptron
// sigma(x1 + x2). Equal multisets are Isomorphic with no numerics; otherwise
// interval precision doubles from 64 bits up to max_bits until the two
// enclosures are disjoint. Undecided never certifies equality.
SeparationVerdict separate_roots(ActivationSpec::Kind activation,
                                 const DegreeSpec& a, const DegreeSpec& b,
                                 long max_bits);

struct SeparationReport {
  ActivationSpec::Kind activation = ActivationSpec::Kind::sigmoid;
  long max_total_vertices = 0;
  long max_bits = 0;
  std::uint64_t spec_count = 0;
  std::uint64_t pairs_checked = 0;       // non-isomorphic pairs
  std::uint64_t distinct_certified = 0;
  std::uint64_t undecided = 0;
  long max_bits_used = 0;
  bool oracle_consistent = true;         // every verdict matched multiset_exp_oracle
  bool success() const { return undecided == 0 && oracle_consistent; }
};

// Runs separate_roots on every unordered pair of non-isomorphic specs whose
// trees have at most max_total_vertices vertices, cross-checking each
// verdict against the multiset-exponential oracle.
SeparationReport exhaustive_separation(ActivationSpec::Kind activation,
                                       long max_total_vertices, long max_bits,
                                       int threads = 1);

// Decides sum_i e^{a_i} = sum_i e^{a'_i} for nonnegative integers: true iff
// the multisets are equal. (Distinct integer exponents have linearly
// independent exponentials over the algebraic numbers, so no other
// cancellation exists.)
bool multiset_exp_oracle(std::vector<long> alpha, std::vector<long> alpha_prime);

// True iff cr^t-equality of vertices implies exact xi^t-equality on this
// graph. A false return is a counterexample to the implementation, never to
// the mathematics.
bool check_cr_refines_gnn(const RecurrentGNN& gnn, const LabeledGraph& graph,
                          int iterations);

// Depth-one trees (stars): one iteration of the one-neuron perceptron with
// an injective activation maps distinct root degrees to distinct values.
// Exact comparison for identity, certified interval disjointness otherwise.
// Returns false for equal degrees (isomorphic stars).
bool depth_one_separation(long degree_a, long degree_b,
                          ActivationSpec::Kind activation, long max_bits);

}  // namespace gnnsep

#endif
