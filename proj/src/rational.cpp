#include "gnnsep/rational.hpp"

#include <stdexcept>

namespace gnnsep {

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("rational: empty string");
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("rational: cannot parse '" + s + "'");
  if (q.get_den() == 0)
    throw std::invalid_argument("rational: zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rat& r) {
  return r.get_str();
}

std::string bigint_to_string(const BigInt& z) {
  return z.get_str();
}

BigInt binomial(long n, long k) {
  if (k < 0 || k > n || n < 0) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

}  // namespace gnnsep
