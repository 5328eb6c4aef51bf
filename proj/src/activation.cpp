#include "gnnsep/activation.hpp"

#include <algorithm>
#include <stdexcept>

namespace gnnsep {

PiecewisePoly::PiecewisePoly(std::vector<Rat> breakpoints,
                             std::vector<std::vector<Rat>> pieces)
    : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {
  if (pieces_.empty()) throw std::invalid_argument("piecewise: no pieces");
  if (breakpoints_.size() + 1 != pieces_.size())
    throw std::invalid_argument("piecewise: need exactly one breakpoint between pieces");
  for (size_t i = 1; i < breakpoints_.size(); ++i)
    if (!(breakpoints_[i - 1] < breakpoints_[i]))
      throw std::invalid_argument("piecewise: breakpoints must be strictly increasing");
  for (const auto& p : pieces_)
    if (p.empty()) throw std::invalid_argument("piecewise: empty coefficient list");
}

int PiecewisePoly::degree() const {
  int deg = 0;
  for (const auto& p : pieces_) {
    int d = 0;
    for (size_t j = 0; j < p.size(); ++j)
      if (p[j] != 0) d = static_cast<int>(j);
    deg = std::max(deg, d);
  }
  return deg;
}

int PiecewisePoly::piece_index(const Rat& x) const {
  int idx = 0;
  for (const auto& b : breakpoints_) {
    if (x >= b)
      ++idx;
    else
      break;
  }
  return idx;
}

ActivationSpec::ActivationSpec(Kind kind, std::optional<PiecewisePoly> pw)
    : kind_(kind), pw_(std::move(pw)) {}

ActivationSpec ActivationSpec::named(Kind kind) {
  switch (kind) {
    case Kind::identity:
      return ActivationSpec(kind, PiecewisePoly({}, {{Rat(0), Rat(1)}}));
    case Kind::relu:
      return ActivationSpec(kind,
                            PiecewisePoly({Rat(0)}, {{Rat(0)}, {Rat(0), Rat(1)}}));
    case Kind::piecewise:
      throw std::invalid_argument("activation: piecewise needs explicit data");
    default:
      return ActivationSpec(kind, std::nullopt);
  }
}

ActivationSpec ActivationSpec::from_pieces(PiecewisePoly pw) {
  return ActivationSpec(Kind::piecewise, std::move(pw));
}

std::optional<ActivationSpec::Kind> ActivationSpec::kind_from_name(
    const std::string& name) {
  if (name == "identity") return Kind::identity;
  if (name == "relu") return Kind::relu;
  if (name == "exp") return Kind::exp;
  if (name == "sigmoid") return Kind::sigmoid;
  if (name == "tanh") return Kind::tanh;
  if (name == "sinh") return Kind::sinh;
  if (name == "cosh") return Kind::cosh;
  return std::nullopt;
}

std::string ActivationSpec::name_of(Kind kind) {
  switch (kind) {
    case Kind::identity: return "identity";
    case Kind::relu: return "relu";
    case Kind::piecewise: return "piecewise";
    case Kind::exp: return "exp";
    case Kind::sigmoid: return "sigmoid";
    case Kind::tanh: return "tanh";
    case Kind::sinh: return "sinh";
    case Kind::cosh: return "cosh";
  }
  return "?";
}

bool ActivationSpec::is_analytic() const {
  switch (kind_) {
    case Kind::exp:
    case Kind::sigmoid:
    case Kind::tanh:
    case Kind::sinh:
    case Kind::cosh:
      return true;
    default:
      return false;
  }
}

const PiecewisePoly& ActivationSpec::pieces() const {
  if (!pw_) throw std::logic_error("activation: analytic activation has no pieces");
  return *pw_;
}

Rat poly_piece_eval(const std::vector<Rat>& coeffs, const Rat& x) {
  Rat acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Interval poly_piece_eval(const std::vector<Rat>& coeffs, const Interval& x,
                         mpfr_prec_t bits) {
  Interval acc(Rat(0), bits);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    acc = acc * x + Interval(*it, bits);
  return acc;
}

Rat activation_eval(const ActivationSpec& a, const Rat& x, const RationalField&,
                    RegionSignature* gates) {
  if (a.is_analytic())
    throw UnsupportedFieldError("activation '" + ActivationSpec::name_of(a.kind()) +
                                "' requires the interval field");
  int i = a.pieces().piece_index(x);
  if (gates) gates->gates.push_back(i);
  return poly_piece_eval(a.pieces().piece(i), x);
}

Interval activation_eval(const ActivationSpec& a, const Interval& x,
                         const IntervalField& f, RegionSignature* gates) {
  if (gates)
    throw std::logic_error("region signatures are recorded in the exact field only");
  switch (a.kind()) {
    case ActivationSpec::Kind::exp: return ivl_exp(x);
    case ActivationSpec::Kind::sigmoid: return ivl_sigmoid(x);
    case ActivationSpec::Kind::tanh: return ivl_tanh(x);
    case ActivationSpec::Kind::sinh: return ivl_sinh(x);
    case ActivationSpec::Kind::cosh: return ivl_cosh(x);
    default: break;
  }

  const PiecewisePoly& pw = a.pieces();
  // first and last piece whose half-open interval can meet [x.lo, x.hi]
  int first = 0;
  int last = 0;
  for (const auto& b : pw.breakpoints()) {
    if (x.lo_at_least(b)) ++first;
    if (!x.hi_below(b)) ++last;
  }
  Interval out = poly_piece_eval(pw.piece(first), x, f.bits);
  for (int i = first + 1; i <= last; ++i)
    out = interval_hull(out, poly_piece_eval(pw.piece(i), x, f.bits));
  return out;
}

}  // namespace gnnsep
