#ifndef GNNSEP_ACTIVATION_HPP
#define GNNSEP_ACTIVATION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gnnsep/errors.hpp"
#include "gnnsep/interval.hpp"
#include "gnnsep/rational.hpp"

namespace gnnsep {

// Univariate piecewise polynomial with rational data: r pieces separated by
// r-1 strictly increasing breakpoints; piece i applies on [b_{i-1}, b_i)
// with b_{-1} = -inf and b_{r-1} = +inf.
class PiecewisePoly {
public:
  // pieces[i] holds coefficients c0, c1, ... of the i-th polynomial.
  PiecewisePoly(std::vector<Rat> breakpoints, std::vector<std::vector<Rat>> pieces);

  int piece_count() const { return static_cast<int>(pieces_.size()); }
  int degree() const;  // max piece degree
  const std::vector<Rat>& breakpoints() const { return breakpoints_; }
  const std::vector<Rat>& piece(int i) const { return pieces_[i]; }

  // Index of the unique piece whose interval contains x (exact comparison).
  int piece_index(const Rat& x) const;

private:
  std::vector<Rat> breakpoints_;
  std::vector<std::vector<Rat>> pieces_;
};

// Activation of one network layer: a named analytic function, or a piecewise
// polynomial (identity and relu are stored in piecewise form).
class ActivationSpec {
public:
  enum class Kind { identity, relu, piecewise, exp, sigmoid, tanh, sinh, cosh };

  static ActivationSpec named(Kind kind);
  static ActivationSpec from_pieces(PiecewisePoly pw);
  static std::optional<Kind> kind_from_name(const std::string& name);
  static std::string name_of(Kind kind);

  Kind kind() const { return kind_; }
  bool is_analytic() const;
  // Valid only for non-analytic activations.
  const PiecewisePoly& pieces() const;

private:
  ActivationSpec(Kind kind, std::optional<PiecewisePoly> pw);

  Kind kind_;
  std::optional<PiecewisePoly> pw_;
};

// Scalar fields the engine can evaluate over. Exact rationals support only
// piecewise-polynomial activations; the interval field encloses every true
// real value by outward rounding at a fixed working precision.
struct RationalField {
  using Scalar = Rat;
  Scalar constant(const Rat& r) const { return r; }
};

struct IntervalField {
  mpfr_prec_t bits = 64;
  using Scalar = Interval;
  Scalar constant(const Rat& r) const { return Interval(r, bits); }
};

// Recorded piece choices of every piecewise activation application in one
// evaluation, in deterministic order; identifies the polynomial region.
struct RegionSignature {
  std::vector<int32_t> gates;
  bool operator==(const RegionSignature&) const = default;
};

// Exact evaluation; throws UnsupportedFieldError for analytic activations.
// When gates is set, the chosen piece index is appended.
Rat activation_eval(const ActivationSpec& a, const Rat& x, const RationalField& f,
                    RegionSignature* gates = nullptr);

// Enclosure evaluation. If x straddles a breakpoint the hull of the touched
// pieces' values is returned. Gate recording is an exact-field notion.
Interval activation_eval(const ActivationSpec& a, const Interval& x,
                         const IntervalField& f, RegionSignature* gates = nullptr);

// Horner evaluation of univariate coefficients over either scalar type.
Rat poly_piece_eval(const std::vector<Rat>& coeffs, const Rat& x);
Interval poly_piece_eval(const std::vector<Rat>& coeffs, const Interval& x,
                         mpfr_prec_t bits);

}  // namespace gnnsep

#endif
