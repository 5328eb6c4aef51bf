#include "gnnsep/interval.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <utility>

namespace gnnsep {

namespace {

mpfr_prec_t join_prec(const Interval& a, const Interval& b) {
  return std::max(a.precision(), b.precision());
}

}  // namespace

Interval::Interval(mpfr_prec_t bits) : prec_(bits) {
  if (bits < MPFR_PREC_MIN) throw std::invalid_argument("interval: precision too small");
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Rat& value, mpfr_prec_t bits) : Interval(bits) {
  mpfr_set_q(lo_, value.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, value.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(long value, mpfr_prec_t bits) : Interval(bits) {
  mpfr_set_si(lo_, value, MPFR_RNDD);
  mpfr_set_si(hi_, value, MPFR_RNDU);
}

Interval::Interval(const Interval& other) : prec_(other.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept : prec_(other.prec_) {
  mpfr_init2(lo_, MPFR_PREC_MIN);
  mpfr_init2(hi_, MPFR_PREC_MIN);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(const Interval& other) {
  if (this == &other) return *this;
  prec_ = other.prec_;
  mpfr_set_prec(lo_, prec_);
  mpfr_set_prec(hi_, prec_);
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
  return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
  if (this == &other) return *this;
  prec_ = other.prec_;
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::operator+(const Interval& rhs) const {
  Interval out(join_prec(*this, rhs));
  mpfr_add(out.lo_, lo_, rhs.lo_, MPFR_RNDD);
  mpfr_add(out.hi_, hi_, rhs.hi_, MPFR_RNDU);
  return out;
}

Interval& Interval::operator+=(const Interval& rhs) {
  *this = *this + rhs;
  return *this;
}

Interval Interval::operator-(const Interval& rhs) const {
  Interval out(join_prec(*this, rhs));
  mpfr_sub(out.lo_, lo_, rhs.hi_, MPFR_RNDD);
  mpfr_sub(out.hi_, hi_, rhs.lo_, MPFR_RNDU);
  return out;
}

Interval Interval::operator*(const Interval& rhs) const {
  Interval out(join_prec(*this, rhs));
  mpfr_t t;
  mpfr_init2(t, out.prec_);

  // lo: minimum of the four endpoint products rounded down
  mpfr_mul(out.lo_, lo_, rhs.lo_, MPFR_RNDD);
  mpfr_mul(t, lo_, rhs.hi_, MPFR_RNDD);
  mpfr_min(out.lo_, out.lo_, t, MPFR_RNDD);
  mpfr_mul(t, hi_, rhs.lo_, MPFR_RNDD);
  mpfr_min(out.lo_, out.lo_, t, MPFR_RNDD);
  mpfr_mul(t, hi_, rhs.hi_, MPFR_RNDD);
  mpfr_min(out.lo_, out.lo_, t, MPFR_RNDD);

  // hi: maximum rounded up
  mpfr_mul(out.hi_, lo_, rhs.lo_, MPFR_RNDU);
  mpfr_mul(t, lo_, rhs.hi_, MPFR_RNDU);
  mpfr_max(out.hi_, out.hi_, t, MPFR_RNDU);
  mpfr_mul(t, hi_, rhs.lo_, MPFR_RNDU);
  mpfr_max(out.hi_, out.hi_, t, MPFR_RNDU);
  mpfr_mul(t, hi_, rhs.hi_, MPFR_RNDU);
  mpfr_max(out.hi_, out.hi_, t, MPFR_RNDU);

  mpfr_clear(t);
  return out;
}

Interval Interval::operator-() const {
  Interval out(prec_);
  mpfr_neg(out.lo_, hi_, MPFR_RNDD);
  mpfr_neg(out.hi_, lo_, MPFR_RNDU);
  return out;
}

bool Interval::strictly_less(const Interval& rhs) const {
  // never certify an order through a NaN endpoint
  if (mpfr_nan_p(hi_) || mpfr_nan_p(rhs.lo_)) return false;
  return mpfr_cmp(hi_, rhs.lo_) < 0;
}

bool Interval::disjoint_from(const Interval& rhs) const {
  return strictly_less(rhs) || rhs.strictly_less(*this);
}

bool Interval::hi_below(const Rat& r) const {
  return mpfr_cmp_q(hi_, r.get_mpq_t()) < 0;
}

bool Interval::lo_at_least(const Rat& r) const {
  return mpfr_cmp_q(lo_, r.get_mpq_t()) >= 0;
}

bool Interval::contains(const Rat& r) const {
  return mpfr_cmp_q(lo_, r.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, r.get_mpq_t()) >= 0;
}

double Interval::width_upper() const {
  mpfr_t w;
  mpfr_init2(w, 64);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  double out = mpfr_get_d(w, MPFR_RNDU);
  mpfr_clear(w);
  return out;
}

std::string Interval::to_string() const {
  // enough decimal digits to reproduce the binary endpoints
  int digits = static_cast<int>(static_cast<double>(prec_) * 0.30103) + 3;
  char* s = nullptr;
  int n = mpfr_asprintf(&s, "[%.*RDg, %.*RUg]", digits, lo_, digits, hi_);
  if (n < 0) return "[?, ?]";
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

Interval interval_hull(const Interval& a, const Interval& b) {
  Interval out(join_prec(a, b));
  mpfr_min(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return out;
}

Interval ivl_exp(const Interval& x) {
  Interval out(x.precision());
  mpfr_exp(out.lo_, x.lo_, MPFR_RNDD);
  mpfr_exp(out.hi_, x.hi_, MPFR_RNDU);
  return out;
}

namespace {

// sigmoid(x) = 1 / (1 + exp(-x)), increasing. Rounds the whole chain in the
// direction that moves the result toward the requested bound.
void sigmoid_endpoint(mpfr_ptr out, mpfr_srcptr x, bool lower, mpfr_prec_t prec) {
  mpfr_t t;
  mpfr_init2(t, prec);
  // lower result <=> upper bound on exp(-x)
  mpfr_neg(t, x, lower ? MPFR_RNDU : MPFR_RNDD);
  mpfr_exp(t, t, lower ? MPFR_RNDU : MPFR_RNDD);
  mpfr_add_ui(t, t, 1, lower ? MPFR_RNDU : MPFR_RNDD);
  mpfr_ui_div(out, 1, t, lower ? MPFR_RNDD : MPFR_RNDU);
  mpfr_clear(t);
}

}  // namespace

Interval ivl_sigmoid(const Interval& x) {
  Interval out(x.precision());
  sigmoid_endpoint(out.lo_, x.lo_, true, x.precision());
  sigmoid_endpoint(out.hi_, x.hi_, false, x.precision());
  return out;
}

Interval ivl_tanh(const Interval& x) {
  Interval out(x.precision());
  mpfr_tanh(out.lo_, x.lo_, MPFR_RNDD);
  mpfr_tanh(out.hi_, x.hi_, MPFR_RNDU);
  return out;
}

Interval ivl_sinh(const Interval& x) {
  Interval out(x.precision());
  mpfr_sinh(out.lo_, x.lo_, MPFR_RNDD);
  mpfr_sinh(out.hi_, x.hi_, MPFR_RNDU);
  return out;
}

Interval ivl_cosh(const Interval& x) {
  Interval out(x.precision());
  if (mpfr_sgn(x.lo()) >= 0) {
    mpfr_cosh(out.lo_, x.lo_, MPFR_RNDD);
    mpfr_cosh(out.hi_, x.hi_, MPFR_RNDU);
  } else if (mpfr_sgn(x.hi()) <= 0) {
    mpfr_cosh(out.lo_, x.hi_, MPFR_RNDD);
    mpfr_cosh(out.hi_, x.lo_, MPFR_RNDU);
  } else {
    // minimum cosh(0) = 1 inside the interval
    mpfr_set_ui(out.lo_, 1, MPFR_RNDD);
    mpfr_t a;
    mpfr_init2(a, x.precision());
    mpfr_cosh(out.hi_, x.lo_, MPFR_RNDU);
    mpfr_cosh(a, x.hi_, MPFR_RNDU);
    mpfr_max(out.hi_, out.hi_, a, MPFR_RNDU);
    mpfr_clear(a);
  }
  return out;
}

}  // namespace gnnsep
