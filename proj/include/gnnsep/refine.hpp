#ifndef GNNSEP_REFINE_HPP
#define GNNSEP_REFINE_HPP

#include <optional>
#include <vector>

#include "gnnsep/graph.hpp"

namespace gnnsep {

// One round of color refinement: per-vertex color ids, contiguous 0..c-1.
// Two vertices share an id iff they received identical
// (previous color, neighbor-color multiset) signatures at this round.
struct Coloring {
  std::vector<int> colors;
  int round = 0;
  int num_colors = 0;

  bool same_partition(const Coloring& other) const;
};

// Per-round colorings from round 0 up to stabilization (or the requested
// bound). stable_round is the first t whose partition the next step does not
// strictly refine; -1 when a bounded run stopped before stabilizing.
struct RefinementTrace {
  std::vector<Coloring> rounds;
  int stable_round = -1;

  // cr^t; for t past the stored rounds the trace must have stabilized, in
  // which case the coloring no longer changes.
  const Coloring& at(int t) const;
  int last_round() const { return static_cast<int>(rounds.size()) - 1; }
};

// Round-0 coloring from the vertex labels, renumbered to dense ids in
// ascending label order.
Coloring initial_coloring(const LabeledGraph& g);

// One refinement round. Signatures (old color, sorted neighbor colors) are
// sorted lexicographically and renumbered to dense ids, so the output
// partition refines the input partition and ids are reproducible.
Coloring cr_step(const LabeledGraph& g, const Coloring& c);

// Iterates cr_step from the label coloring. Stops after max_rounds rounds or
// as soon as the partition stops strictly refining, whichever comes first;
// runs until stable when max_rounds is not given.
RefinementTrace cr_run(const LabeledGraph& g,
                       std::optional<int> max_rounds = std::nullopt);

// True iff cr^t assigns different values to the two roots. Refinement runs
// jointly on the disjoint union of the two graphs so color ids are
// comparable across graphs.
bool cr_compare(const RootedGraph& a, const RootedGraph& b, int t);

}  // namespace gnnsep

#endif
