#ifndef GNNSEP_RATIONAL_HPP
#define GNNSEP_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace gnnsep {

// Exact arithmetic scalars. All weights, coefficients and exact embeddings
// are rationals in lowest terms; counting bounds use arbitrary big integers.
using Rat = mpq_class;
using BigInt = mpz_class;

// Parses "p", "-p", or "p/q" (base 10). Throws std::invalid_argument on
// malformed input or zero denominator.
Rat rat_from_string(const std::string& s);

// Canonical lowest-terms encoding: "p" or "p/q".
std::string rat_to_string(const Rat& r);

std::string bigint_to_string(const BigInt& z);

// binomial(n, k) exactly; 0 when k < 0 or k > n.
BigInt binomial(long n, long k);

}  // namespace gnnsep

#endif
