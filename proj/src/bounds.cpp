#include "gnnsep/bounds.hpp"

#include <stdexcept>

#include "gnnsep/errors.hpp"

namespace gnnsep {

namespace {

BigInt pow_big(const BigInt& base, unsigned long e) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

void check_positive(long v, const char* name) {
  if (v < 1) throw std::invalid_argument(std::string("bounds: ") + name + " must be >= 1");
}

}  // namespace

BigInt value_count_bound(const BoundParams& p) {
  check_positive(p.m, "m");
  check_positive(p.q, "q");
  check_positive(p.T, "T");
  check_positive(p.M, "M");
  if (p.lambda_max < 1) throw std::invalid_argument("bounds: lambda_max must be >= 1");

  BigInt base = 2 * p.lambda_max * pow_big(p.M, p.q) * binomial(p.m + p.q - 1, p.q) + 1;
  return pow_big(base, static_cast<unsigned long>(p.q * p.T));
}

long min_box_size(long m, long q, long n_iters, long r, const BigInt& lambda_max) {
  check_positive(m, "m");
  check_positive(q, "q");
  check_positive(n_iters, "nIters");
  check_positive(r, "r");
  if (lambda_max < 1) throw std::invalid_argument("bounds: lambda_max must be >= 1");
  if (m <= q * q * n_iters)
    throw PreconditionError("min_box_size: requires m > q^2 * nIters");

  // multisets(M) > r^nIters * bound(M); integral on both sides
  const BigInt r_pow = pow_big(r, static_cast<unsigned long>(n_iters));
  auto holds = [&](long M) {
    BigInt multisets = binomial(M + m - 1, m);
    BigInt values = value_count_bound({m, q, n_iters, M, lambda_max});
    return multisets > r_pow * values;
  };

  long hi = 1;
  while (!holds(hi)) {
    if (hi > (1L << 62) / 2)
      throw std::overflow_error("min_box_size: search exceeded representable range");
    hi *= 2;
  }
  long lo = hi / 2;  // holds(lo) false (or lo == 0)
  while (lo + 1 < hi) {
    long mid = lo + (hi - lo) / 2;
    (holds(mid) ? hi : lo) = mid;
  }
  return hi;
}

std::vector<BigInt> degree_bound_seq(long q0, long deg_phi, long T) {
  if (T < 0) throw std::invalid_argument("degree_bound_seq: negative T");
  if (q0 < 0 || deg_phi < 1)
    throw std::invalid_argument("degree_bound_seq: q0 >= 0 and deg_phi >= 1 required");
  std::vector<BigInt> out;
  out.reserve(T + 1);
  out.push_back(BigInt(std::max(1L, q0)));
  for (long t = 0; t < T; ++t) out.push_back(out.back() * deg_phi);
  return out;
}

}  // namespace gnnsep
