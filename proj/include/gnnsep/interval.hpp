#ifndef GNNSEP_INTERVAL_HPP
#define GNNSEP_INTERVAL_HPP

#include <mpfr.h>

#include <string>

#include "gnnsep/rational.hpp"

namespace gnnsep {

// Arbitrary-precision interval with outward directed rounding: every
// operation returns an enclosure [lo, hi] that contains the true real
// result whenever the operands' intervals contain theirs.
class Interval {
public:
  Interval() : Interval(64) {}
  explicit Interval(mpfr_prec_t bits);
  Interval(const Rat& value, mpfr_prec_t bits);
  Interval(long value, mpfr_prec_t bits);
  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(const Interval& other);
  Interval& operator=(Interval&& other) noexcept;
  ~Interval();

  mpfr_prec_t precision() const { return prec_; }
  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }

  Interval operator+(const Interval& rhs) const;
  Interval operator-(const Interval& rhs) const;
  Interval operator*(const Interval& rhs) const;
  Interval operator-() const;
  Interval& operator+=(const Interval& rhs);

  // Strict order certificates. Both false when the enclosures overlap.
  bool strictly_less(const Interval& rhs) const;
  bool disjoint_from(const Interval& rhs) const;

  // Exact comparisons of endpoints against a rational.
  bool hi_below(const Rat& r) const;      // hi <  r
  bool lo_at_least(const Rat& r) const;   // lo >= r
  bool contains(const Rat& r) const;

  // hi - lo, rounded up, as a double (coarse; used for diagnostics only).
  double width_upper() const;

  std::string to_string() const;

private:
  mpfr_prec_t prec_;
  mpfr_t lo_;
  mpfr_t hi_;

  friend Interval interval_hull(const Interval& a, const Interval& b);
  friend Interval ivl_exp(const Interval& x);
  friend Interval ivl_sigmoid(const Interval& x);
  friend Interval ivl_tanh(const Interval& x);
  friend Interval ivl_sinh(const Interval& x);
  friend Interval ivl_cosh(const Interval& x);
};

Interval interval_hull(const Interval& a, const Interval& b);

// Enclosures of the analytic activations. exp, sigmoid, tanh and sinh are
// monotone; cosh is handled by case analysis around its minimum at 0.
Interval ivl_exp(const Interval& x);
Interval ivl_sigmoid(const Interval& x);
Interval ivl_tanh(const Interval& x);
Interval ivl_sinh(const Interval& x);
Interval ivl_cosh(const Interval& x);

}  // namespace gnnsep

#endif
