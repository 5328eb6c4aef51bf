#include "gnnsep/poly.hpp"

#include <numeric>
#include <stdexcept>

namespace gnnsep {

Poly::Poly(int vars) : vars_(vars) {
  if (vars < 0) throw std::invalid_argument("poly: negative arity");
}

Poly Poly::constant(int vars, const Rat& c) {
  Poly p(vars);
  p.add_term(Exponents(vars, 0), c);
  return p;
}

Poly Poly::variable(int vars, int index) {
  if (index < 0 || index >= vars) throw std::invalid_argument("poly: variable index");
  Poly p(vars);
  Exponents e(vars, 0);
  e[index] = 1;
  p.add_term(e, Rat(1));
  return p;
}

int Poly::degree() const {
  int deg = 0;
  for (const auto& [alpha, c] : terms_) {
    int total = std::accumulate(alpha.begin(), alpha.end(), 0);
    deg = std::max(deg, total);
  }
  return deg;
}

void Poly::add_term(const Exponents& alpha, const Rat& c) {
  if (static_cast<int>(alpha.size()) != vars_)
    throw std::invalid_argument("poly: exponent arity mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(alpha, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator+(const Poly& rhs) const {
  if (vars_ != rhs.vars_) throw std::invalid_argument("poly: arity mismatch");
  Poly out = *this;
  for (const auto& [alpha, c] : rhs.terms_) out.add_term(alpha, c);
  return out;
}

Poly Poly::operator-(const Poly& rhs) const {
  if (vars_ != rhs.vars_) throw std::invalid_argument("poly: arity mismatch");
  Poly out = *this;
  for (const auto& [alpha, c] : rhs.terms_) out.add_term(alpha, -c);
  return out;
}

Poly Poly::operator*(const Poly& rhs) const {
  if (vars_ != rhs.vars_) throw std::invalid_argument("poly: arity mismatch");
  Poly out(vars_);
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : rhs.terms_) {
      Exponents e(vars_);
      for (int i = 0; i < vars_; ++i) e[i] = a[i] + b[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

Poly Poly::scaled(const Rat& c) const {
  Poly out(vars_);
  if (c == 0) return out;
  for (const auto& [alpha, coeff] : terms_) out.add_term(alpha, coeff * c);
  return out;
}

Rat Poly::eval(std::span<const Rat> x) const {
  if (static_cast<int>(x.size()) != vars_)
    throw std::invalid_argument("poly eval: dimension mismatch");
  Rat acc = 0;
  for (const auto& [alpha, c] : terms_) {
    Rat term = c;
    for (int i = 0; i < vars_; ++i)
      for (unsigned e = 0; e < alpha[i]; ++e) term *= x[i];
    acc += term;
  }
  return acc;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [alpha, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += rat_to_string(c);
    for (int i = 0; i < vars_; ++i) {
      if (alpha[i] == 0) continue;
      out += "*x" + std::to_string(i + 1);
      if (alpha[i] > 1) out += "^" + std::to_string(alpha[i]);
    }
  }
  return out;
}

Poly poly_compose(const Poly& f, std::span<const Poly> gs) {
  if (static_cast<int>(gs.size()) != f.vars())
    throw std::invalid_argument("compose: need one inner polynomial per variable");
  if (gs.empty()) throw std::invalid_argument("compose: empty inner list");
  const int inner_vars = gs[0].vars();
  for (const Poly& g : gs)
    if (g.vars() != inner_vars)
      throw std::invalid_argument("compose: inner polynomials must share arity");

  // memoized powers g_j^e
  std::vector<std::vector<Poly>> powers(gs.size(), {Poly::constant(inner_vars, 1)});
  auto power = [&](size_t j, unsigned e) -> const Poly& {
    auto& cache = powers[j];
    while (cache.size() <= e) cache.push_back(cache.back() * gs[j]);
    return cache[e];
  };

  Poly out(inner_vars);
  for (const auto& [alpha, c] : f.terms()) {
    Poly term = Poly::constant(inner_vars, c);
    for (size_t j = 0; j < gs.size(); ++j)
      if (alpha[j] > 0) term = term * power(j, alpha[j]);
    out = out + term;
  }
  return out;
}

}  // namespace gnnsep
