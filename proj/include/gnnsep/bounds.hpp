#ifndef GNNSEP_BOUNDS_HPP
#define GNNSEP_BOUNDS_HPP

#include <vector>

#include "gnnsep/rational.hpp"

namespace gnnsep {

// Inputs of the value-count bound: m variables, q generators (doubling as
// the degree bound), T polynomials, box side M, max |lambda| coordinate.
struct BoundParams {
  long m = 1;
  long q = 1;
  long T = 1;
  long M = 1;
  BigInt lambda_max = 1;
};

// (2 * lambda_max * M^q * binom(m+q-1, q) + 1)^(q*T), exactly: an upper
// bound on the number of value tuples a T-tuple of q-generated polynomials
// of degree below q can take on the box {1..M}^m.
BigInt value_count_bound(const BoundParams& p);

// Smallest M with (1/r^nIters) * binom(M+m-1, m) strictly above the value
// count bound, i.e. the box side that forces a collision by pigeonhole.
// Requires m > q^2 * nIters so the left side eventually dominates; found by
// doubling then binary search, both sides evaluated exactly.
long min_box_size(long m, long q, long n_iters, long r, const BigInt& lambda_max);

// Degree bounds of the root embedding as a polynomial of the tree degrees:
// q_0 = max(1, q0) and q_{t+1} = q_t * deg_phi. Returns (q_0, ..., q_T).
std::vector<BigInt> degree_bound_seq(long q0, long deg_phi, long T);

}  // namespace gnnsep

#endif
