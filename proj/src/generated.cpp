#include "gnnsep/generated.hpp"

#include <algorithm>
#include <stdexcept>

namespace gnnsep {

QGeneratedPoly::QGeneratedPoly(
    int vars, std::vector<Rat> generators,
    std::map<Poly::Exponents, std::vector<BigInt>> int_coeffs)
    : vars_(vars), generators_(std::move(generators)),
      int_coeffs_(std::move(int_coeffs)) {
  if (generators_.empty())
    throw std::invalid_argument("generated poly: q must be >= 1");
  for (const auto& [alpha, lambdas] : int_coeffs_) {
    if (static_cast<int>(alpha.size()) != vars_)
      throw std::invalid_argument("generated poly: exponent arity mismatch");
    if (lambdas.size() != generators_.size())
      throw std::invalid_argument("generated poly: coordinate count != q");
  }
}

BigInt QGeneratedPoly::max_abs_coordinate() const {
  BigInt best = 0;
  for (const auto& [alpha, lambdas] : int_coeffs_)
    for (const BigInt& l : lambdas) best = std::max(best, BigInt(abs(l)));
  return best;
}

Poly QGeneratedPoly::reconstruct() const {
  Poly out(vars_);
  for (const auto& [alpha, lambdas] : int_coeffs_) {
    Rat coeff = 0;
    for (size_t i = 0; i < lambdas.size(); ++i)
      coeff += Rat(lambdas[i]) * generators_[i];
    out.add_term(alpha, coeff);
  }
  return out;
}

QGeneratedPoly q_generate(const Poly& p) {
  BigInt den = 1;
  for (const auto& [alpha, c] : p.terms())
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());

  std::map<Poly::Exponents, std::vector<BigInt>> coords;
  for (const auto& [alpha, c] : p.terms()) {
    Rat scaled = c * Rat(den);
    // exact by construction: den is a multiple of every denominator
    coords.emplace(alpha, std::vector<BigInt>{BigInt(scaled.get_num())});
  }
  return QGeneratedPoly(p.vars(), {Rat(1) / Rat(den)}, std::move(coords));
}

namespace {

// Coefficients of the intermediate composition live in the ring of integer
// combinations of monomials in the pooled generator symbols.
using SymExp = std::vector<unsigned>;
using SymCoeff = std::map<SymExp, BigInt>;

SymCoeff sym_add(const SymCoeff& a, const SymCoeff& b) {
  SymCoeff out = a;
  for (const auto& [e, c] : b) {
    auto [it, inserted] = out.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) out.erase(it);
    }
  }
  return out;
}

SymCoeff sym_mul(const SymCoeff& a, const SymCoeff& b) {
  SymCoeff out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      SymExp e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      auto [it, inserted] = out.emplace(e, ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (it->second == 0) out.erase(it);
      }
    }
  return out;
}

// Polynomial over SymCoeff coefficients.
using GPoly = std::map<Poly::Exponents, SymCoeff>;

void gpoly_add_term(GPoly& p, const Poly::Exponents& alpha, const SymCoeff& c) {
  if (c.empty()) return;
  auto it = p.find(alpha);
  if (it == p.end()) {
    p.emplace(alpha, c);
  } else {
    it->second = sym_add(it->second, c);
    if (it->second.empty()) p.erase(it);
  }
}

GPoly gpoly_mul(const GPoly& a, const GPoly& b, int vars) {
  GPoly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Poly::Exponents e(vars);
      for (int i = 0; i < vars; ++i) e[i] = ea[i] + eb[i];
      gpoly_add_term(out, e, sym_mul(ca, cb));
    }
  return out;
}

GPoly to_gpoly(const QGeneratedPoly& p, const std::vector<size_t>& sym_index,
               size_t sym_count) {
  GPoly out;
  for (const auto& [alpha, lambdas] : p.int_coeffs()) {
    SymCoeff c;
    for (size_t i = 0; i < lambdas.size(); ++i) {
      if (lambdas[i] == 0) continue;
      SymExp e(sym_count, 0);
      e[sym_index[i]] = 1;
      auto [it, inserted] = c.emplace(e, lambdas[i]);
      if (!inserted) it->second += lambdas[i];
    }
    if (!c.empty()) out.emplace(alpha, std::move(c));
  }
  return out;
}

}  // namespace

QGeneratedPoly compose_generated(const QGeneratedPoly& f,
                                 std::span<const QGeneratedPoly> gs) {
  if (static_cast<int>(gs.size()) != f.vars())
    throw std::invalid_argument("compose_generated: arity mismatch");
  if (gs.empty()) throw std::invalid_argument("compose_generated: empty inner list");
  const int inner_vars = gs[0].vars();
  for (const QGeneratedPoly& g : gs)
    if (g.vars() != inner_vars)
      throw std::invalid_argument("compose_generated: inner arity mismatch");

  // pool the generator values of all inputs
  std::vector<Rat> symbols;
  auto index_of = [&](const Rat& v) {
    for (size_t i = 0; i < symbols.size(); ++i)
      if (symbols[i] == v) return i;
    symbols.push_back(v);
    return symbols.size() - 1;
  };
  std::vector<size_t> f_index;
  for (const Rat& s : f.generators()) f_index.push_back(index_of(s));
  std::vector<std::vector<size_t>> g_index;
  for (const QGeneratedPoly& g : gs) {
    std::vector<size_t> idx;
    for (const Rat& s : g.generators()) idx.push_back(index_of(s));
    g_index.push_back(std::move(idx));
  }
  const size_t sym_count = symbols.size();

  GPoly f_sym = to_gpoly(f, f_index, sym_count);
  std::vector<GPoly> g_sym;
  for (size_t j = 0; j < gs.size(); ++j)
    g_sym.push_back(to_gpoly(gs[j], g_index[j], sym_count));

  // composition over the symbolic coefficient ring, with memoized powers
  SymExp one_exp(sym_count, 0);
  GPoly unit{{Poly::Exponents(inner_vars, 0), SymCoeff{{one_exp, BigInt(1)}}}};
  std::vector<std::vector<GPoly>> powers(gs.size(), {unit});
  auto power = [&](size_t j, unsigned e) -> const GPoly& {
    auto& cache = powers[j];
    while (cache.size() <= e)
      cache.push_back(gpoly_mul(cache.back(), g_sym[j], inner_vars));
    return cache[e];
  };

  GPoly result;
  for (const auto& [alpha, coeff] : f_sym) {
    GPoly term{{Poly::Exponents(inner_vars, 0), coeff}};
    for (size_t j = 0; j < gs.size(); ++j)
      if (alpha[j] > 0) term = gpoly_mul(term, power(j, alpha[j]), inner_vars);
    for (const auto& [e, c] : term) gpoly_add_term(result, e, c);
  }

  // realize each surviving symbol monomial as its exact rational value;
  // monomials with equal values merge into one generator
  std::map<SymExp, Rat> mono_value;
  for (const auto& [alpha, coeff] : result)
    for (const auto& [e, c] : coeff)
      if (!mono_value.count(e)) {
        Rat v = 1;
        for (size_t i = 0; i < sym_count; ++i)
          for (unsigned p = 0; p < e[i]; ++p) v *= symbols[i];
        mono_value.emplace(e, v);
      }

  std::vector<Rat> out_gens;
  for (const auto& [e, v] : mono_value) out_gens.push_back(v);
  std::sort(out_gens.begin(), out_gens.end());
  out_gens.erase(std::unique(out_gens.begin(), out_gens.end()), out_gens.end());
  if (out_gens.empty()) out_gens.push_back(Rat(1));  // zero polynomial: q >= 1

  std::map<SymExp, size_t> mono_slot;
  for (const auto& [e, v] : mono_value) {
    auto it = std::lower_bound(out_gens.begin(), out_gens.end(), v);
    mono_slot.emplace(e, static_cast<size_t>(it - out_gens.begin()));
  }

  std::map<Poly::Exponents, std::vector<BigInt>> coords;
  for (const auto& [alpha, coeff] : result) {
    std::vector<BigInt> lambdas(out_gens.size(), BigInt(0));
    for (const auto& [e, c] : coeff) lambdas[mono_slot.at(e)] += c;
    bool all_zero = true;
    for (const BigInt& l : lambdas)
      if (l != 0) all_zero = false;
    if (!all_zero) coords.emplace(alpha, std::move(lambdas));
  }
  return QGeneratedPoly(inner_vars, std::move(out_gens), std::move(coords));
}

}  // namespace gnnsep
