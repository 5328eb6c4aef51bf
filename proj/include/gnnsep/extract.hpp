#ifndef GNNSEP_EXTRACT_HPP
#define GNNSEP_EXTRACT_HPP

#include <vector>

#include "gnnsep/gnn.hpp"
#include "gnnsep/poly.hpp"

namespace gnnsep {

struct ExtractOptions {
  int holdout = 20;             // verification points kept out of the fit
  long max_radius = 64;         // box radius around the seed
  long max_points_examined = 200000;
};

struct RegionPolyResult {
  Poly poly;                    // in k_1..k_m
  RegionSignature signature;    // the seed's activation-gate pattern
  std::vector<std::vector<long>> fit_points;
  std::vector<std::vector<long>> holdout_points;
};

// Recovers the polynomial piece that computes the root embedding at
// iteration t on the seed's region, for a d=1 GNN with piecewise-polynomial
// activations. Integer points around the seed that reproduce the seed's
// activation-gate signature lie in the same polynomial region; the unique
// polynomial of degree <= q_t through them is fit by an exact linear solve
// over all monomials of total degree <= q_t and re-verified on held-out
// same-signature points (a mismatch there is a bug, never returned).
RegionPolyResult extract_region_poly(const RecurrentGNN& gnn, int m, int t,
                                     const DegreeSpec& seed,
                                     const ExtractOptions& options = {});

}  // namespace gnnsep

#endif
