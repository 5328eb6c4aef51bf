#ifndef GNNSEP_GENERATED_HPP
#define GNNSEP_GENERATED_HPP

#include <map>
#include <span>
#include <vector>

#include "gnnsep/poly.hpp"

namespace gnnsep {

// Decomposition of a polynomial over a finite generator set: every
// coefficient is an integer combination sum_i lambda_{alpha,i} * sigma_i of
// the generators. For rational-coefficient polynomials the generators are
// themselves rationals (powers of a common 1/D in practice).
class QGeneratedPoly {
public:
  QGeneratedPoly(int vars, std::vector<Rat> generators,
                 std::map<Poly::Exponents, std::vector<BigInt>> int_coeffs);

  int vars() const { return vars_; }
  int generator_count() const { return static_cast<int>(generators_.size()); }  // q
  const std::vector<Rat>& generators() const { return generators_; }
  const std::map<Poly::Exponents, std::vector<BigInt>>& int_coeffs() const {
    return int_coeffs_;
  }

  // max |lambda_{alpha,i}|; 0 for the zero polynomial
  BigInt max_abs_coordinate() const;

  Poly reconstruct() const;

private:
  int vars_;
  std::vector<Rat> generators_;
  std::map<Poly::Exponents, std::vector<BigInt>> int_coeffs_;
};

// 1-generated decomposition over sigma_1 = 1/D with D the lcm of the
// coefficient denominators; reconstruction is exact.
QGeneratedPoly q_generate(const Poly& p);

// Generated representation of f(g_1,...,g_{d2}). The output generator set
// consists of monomials in the input generators, merged by exact value;
// reconstruction equals poly_compose of the reconstructions.
QGeneratedPoly compose_generated(const QGeneratedPoly& f,
                                 std::span<const QGeneratedPoly> gs);

}  // namespace gnnsep

#endif
