#ifndef GNNSEP_POLY_HPP
#define GNNSEP_POLY_HPP

#include <map>
#include <span>
#include <string>
#include <vector>

#include "gnnsep/rational.hpp"

namespace gnnsep {

// Sparse multivariate polynomial with rational coefficients: a map from
// exponent vectors to nonzero coefficients.
class Poly {
public:
  using Exponents = std::vector<unsigned>;

  explicit Poly(int vars);
  static Poly constant(int vars, const Rat& c);
  static Poly variable(int vars, int index);

  int vars() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  // max total degree of a stored term; 0 for the zero polynomial
  int degree() const;
  const std::map<Exponents, Rat>& terms() const { return terms_; }

  // Adds c * X^alpha, merging and dropping cancelled terms.
  void add_term(const Exponents& alpha, const Rat& c);

  Poly operator+(const Poly& rhs) const;
  Poly operator-(const Poly& rhs) const;
  Poly operator*(const Poly& rhs) const;
  Poly scaled(const Rat& c) const;
  bool operator==(const Poly& rhs) const = default;

  Rat eval(std::span<const Rat> x) const;
  std::string to_string() const;

private:
  int vars_;
  std::map<Exponents, Rat> terms_;
};

// Exact symbolic composition f(g_1, ..., g_{d2}) where f has d2 variables
// and every g_j has the same arity d1.
Poly poly_compose(const Poly& f, std::span<const Poly> gs);

}  // namespace gnnsep

#endif
