#include "gnnsep/extract.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "gnnsep/bounds.hpp"
#include "gnnsep/errors.hpp"

namespace gnnsep {

namespace {

// all exponent vectors over `vars` variables with total degree <= max_deg,
// graded lexicographic order
std::vector<Poly::Exponents> monomial_basis(int vars, long max_deg) {
  std::vector<Poly::Exponents> out;
  Poly::Exponents cur(vars, 0);
  auto rec = [&](auto&& self, int pos, long budget) -> void {
    if (pos == vars) {
      out.push_back(cur);
      return;
    }
    for (long e = 0; e <= budget; ++e) {
      cur[pos] = static_cast<unsigned>(e);
      self(self, pos + 1, budget - e);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, max_deg);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    long ta = 0, tb = 0;
    for (unsigned e : a) ta += e;
    for (unsigned e : b) tb += e;
    if (ta != tb) return ta < tb;
    return a < b;
  });
  return out;
}

Rat eval_monomial(const Poly::Exponents& alpha, const std::vector<long>& x) {
  Rat v = 1;
  for (size_t i = 0; i < alpha.size(); ++i)
    for (unsigned e = 0; e < alpha[i]; ++e) v *= Rat(x[i]);
  return v;
}

// Exact Gaussian elimination on the augmented system. Returns the
// coefficient vector if the system has full column rank and is consistent;
// nullopt if rank-deficient; throws on inconsistency.
std::optional<std::vector<Rat>> solve_full_rank(std::vector<std::vector<Rat>> rows,
                                                size_t cols) {
  std::vector<size_t> pivot_of_col(cols, SIZE_MAX);
  size_t next_row = 0;
  for (size_t col = 0; col < cols && next_row < rows.size(); ++col) {
    size_t pivot = SIZE_MAX;
    for (size_t r = next_row; r < rows.size(); ++r)
      if (rows[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot == SIZE_MAX) continue;
    std::swap(rows[next_row], rows[pivot]);
    const Rat inv = 1 / rows[next_row][col];
    for (size_t c = col; c <= cols; ++c) rows[next_row][c] *= inv;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == next_row || rows[r][col] == 0) continue;
      const Rat factor = rows[r][col];
      for (size_t c = col; c <= cols; ++c) rows[r][c] -= factor * rows[next_row][c];
    }
    pivot_of_col[col] = next_row;
    ++next_row;
  }
  for (size_t r = next_row; r < rows.size(); ++r)
    if (rows[r][cols] != 0)
      throw std::logic_error(
          "extract: same-signature points are not on one polynomial");
  for (size_t col = 0; col < cols; ++col)
    if (pivot_of_col[col] == SIZE_MAX) return std::nullopt;

  std::vector<Rat> coeffs(cols);
  for (size_t col = 0; col < cols; ++col)
    coeffs[col] = rows[pivot_of_col[col]][cols];
  return coeffs;
}

}  // namespace

RegionPolyResult extract_region_poly(const RecurrentGNN& gnn, int m, int t,
                                     const DegreeSpec& seed,
                                     const ExtractOptions& options) {
  if (gnn.dim() != 1)
    throw std::invalid_argument("extract: supported for 1-dimensional embeddings");
  if (has_analytic_activation(gnn.comb()))
    throw UnsupportedFieldError("extract: requires piecewise-polynomial activations");
  if (m < 1 || seed.size() != m)
    throw std::invalid_argument("extract: seed arity != m");
  if (t < 0) throw std::invalid_argument("extract: negative iteration");

  const long deg_phi = std::max(1L, piecewise_degree(gnn.comb()));
  const BigInt q_big = degree_bound_seq(1, deg_phi, t).back();
  if (q_big > 64) throw RegionTooSmallError("extract: degree bound too large to fit");
  const long q_t = static_cast<long>(q_big.get_si());
  const auto basis = monomial_basis(m, q_t);
  const size_t needed = basis.size() + static_cast<size_t>(options.holdout);

  RegionSignature seed_sig;
  std::vector<long> seed_point = seed.degrees();
  tree_root_seq_classes(gnn, seed_point, t, &seed_sig);

  std::vector<std::vector<long>> points;
  std::vector<Rat> values;
  long examined = 0;

  // collects the whole radius box (minus the previously visited inner box)
  // around the seed; returns false once the point budget is exceeded
  auto collect_radius = [&](long radius, long prev_radius) {
    std::vector<long> lo(m), hi(m), prev_lo(m), prev_hi(m), cur(m);
    for (int i = 0; i < m; ++i) {
      lo[i] = std::max(1L, seed_point[i] - radius);
      hi[i] = seed_point[i] + radius;
      prev_lo[i] = std::max(1L, seed_point[i] - prev_radius);
      prev_hi[i] = seed_point[i] + prev_radius;
    }
    cur = lo;
    while (true) {
      bool in_prev = prev_radius >= 0;
      for (int i = 0; in_prev && i < m; ++i)
        in_prev = cur[i] >= prev_lo[i] && cur[i] <= prev_hi[i];
      if (!in_prev) {
        if (++examined > options.max_points_examined) return false;
        RegionSignature sig;
        auto seq = tree_root_seq_classes(gnn, cur, t, &sig);
        if (sig == seed_sig) {
          points.push_back(cur);
          values.push_back(seq[t][0]);
        }
      }
      int pos = m - 1;
      while (pos >= 0 && cur[pos] == hi[pos]) {
        cur[pos] = lo[pos];
        --pos;
      }
      if (pos < 0) return true;
      ++cur[pos];
    }
  };

  // fits on everything except the trailing holdout block; the early lex
  // points of a small box can be affinely degenerate, so a rank-deficient
  // solve widens the box instead of failing
  std::optional<std::vector<Rat>> coeffs;
  size_t fit_count = 0;
  long prev_radius = -1;
  for (long radius = 1; radius <= options.max_radius; radius *= 2) {
    bool within_budget = collect_radius(radius, prev_radius);
    prev_radius = radius;
    if (points.size() >= needed) {
      fit_count = points.size() - static_cast<size_t>(options.holdout);
      std::vector<std::vector<Rat>> rows;
      rows.reserve(fit_count);
      for (size_t p = 0; p < fit_count; ++p) {
        std::vector<Rat> row;
        row.reserve(basis.size() + 1);
        for (const auto& alpha : basis) row.push_back(eval_monomial(alpha, points[p]));
        row.push_back(values[p]);
        rows.push_back(std::move(row));
      }
      coeffs = solve_full_rank(std::move(rows), basis.size());
      if (coeffs) break;
    }
    if (!within_budget) break;
  }
  if (points.size() < needed)
    throw RegionTooSmallError("extract: only " + std::to_string(points.size()) +
                              " same-signature points within budget, need " +
                              std::to_string(needed));
  if (!coeffs)
    throw RegionTooSmallError(
        "extract: sample points do not determine the polynomial (rank deficient)");

  Poly poly(m);
  for (size_t i = 0; i < basis.size(); ++i) poly.add_term(basis[i], (*coeffs)[i]);

  RegionPolyResult result{std::move(poly),
                          std::move(seed_sig),
                          {points.begin(), points.begin() + fit_count},
                          {points.begin() + fit_count, points.end()}};

  for (size_t p = fit_count; p < points.size(); ++p) {
    std::vector<Rat> x;
    x.reserve(m);
    for (long v : points[p]) x.emplace_back(v);
    if (result.poly.eval(x) != values[p])
      throw std::logic_error("extract: fitted polynomial fails held-out verification");
  }
  return result;
}

}  // namespace gnnsep
