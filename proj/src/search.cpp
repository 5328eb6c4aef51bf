#include "gnnsep/search.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>

#include "gnnsep/errors.hpp"
#include "gnnsep/refine.hpp"

namespace gnnsep {

namespace {

struct Hash128 {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  bool operator==(const Hash128&) const = default;
};

struct Hash128Hasher {
  size_t operator()(const Hash128& h) const { return static_cast<size_t>(h.a); }
};

Hash128 hash_bytes(const std::string& s) {
  std::uint64_t h1 = 0x9E3779B97F4A7C15ull;
  std::uint64_t h2 = 0xC2B2AE3D27D4EB4Full;
  for (unsigned char c : s) {
    h1 = (h1 ^ c) * 0x100000001B3ull;
    h1 ^= h1 >> 29;
    h2 = (h2 + c) * 0xFF51AFD7ED558CCDull;
    h2 ^= h2 >> 33;
  }
  h1 ^= h1 >> 32;
  h1 *= 0xD6E8FEB86659FD93ull;
  h2 ^= h2 >> 31;
  h2 *= 0xCA77FC47AE764821ull;
  return {h1 ^ (h2 >> 17), h2 ^ (h1 >> 13)};
}

void encode_vec(const std::vector<Rat>& v, std::string& out) {
  for (const Rat& r : v) {
    out += r.get_str();
    out += ',';
  }
  out += ';';
}

// deterministic parallel map over 0..n-1; each index's work is independent
void parallel_for(std::uint64_t n, int threads,
                  const std::function<void(std::uint64_t)>& fn) {
  threads = std::max(1, threads);
  if (threads == 1 || n < 2) {
    for (std::uint64_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  auto worker = [&]() {
    constexpr std::uint64_t chunk = 16;
    while (true) {
      std::uint64_t begin = next.fetch_add(chunk);
      if (begin >= n) break;
      std::uint64_t end = std::min(n, begin + chunk);
      for (std::uint64_t i = begin; i < end; ++i) fn(i);
    }
    mpfr_free_cache();  // this thread's transcendental constant caches
  };
  std::vector<std::thread> pool;
  for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

}  // namespace

void for_each_spec(int m, long M,
                   const std::function<bool(std::span<const long>)>& visit) {
  if (m < 1 || M < 1) throw std::invalid_argument("enumerate_specs: m, M >= 1");
  std::vector<long> k(m, 1);
  while (true) {
    if (!visit(k)) return;
    int pos = m - 1;
    while (pos >= 0 && k[pos] == M) --pos;
    if (pos < 0) return;
    ++k[pos];
    for (int i = pos + 1; i < m; ++i) k[i] = k[pos];
  }
}

std::vector<DegreeSpec> enumerate_specs(int m, long M) {
  std::vector<DegreeSpec> out;
  for_each_spec(m, M, [&](std::span<const long> k) {
    out.emplace_back(std::vector<long>(k.begin(), k.end()));
    return true;
  });
  return out;
}

std::vector<DegreeSpec> specs_up_to_vertices(long max_total_vertices) {
  std::vector<DegreeSpec> out;
  for (long m = 1; 1 + m <= max_total_vertices; ++m) {
    std::vector<long> cur(m);
    const long leaf_budget = max_total_vertices - 1 - m;
    auto rec = [&](auto&& self, long pos, long min_value, long budget) -> void {
      if (pos == m) {
        out.emplace_back(cur);
        return;
      }
      for (long k = min_value; k - 1 <= budget; ++k) {
        cur[pos] = k;
        self(self, pos + 1, k, budget - (k - 1));
      }
    };
    rec(rec, 0, 1, leaf_budget);
  }
  return out;
}

namespace {

// specs ordered by (max entry, lex): small boxes first, no re-enumeration
void for_each_spec_growing(int m, long max_entry,
                           const std::function<bool(std::span<const long>)>& visit) {
  std::vector<long> k(m);
  for (long M = 1; M <= max_entry; ++M) {
    bool keep_going = true;
    k.back() = M;
    if (m == 1) {
      keep_going = visit(k);
    } else {
      for_each_spec(m - 1, M, [&](std::span<const long> prefix) {
        std::copy(prefix.begin(), prefix.end(), k.begin());
        keep_going = visit(k);
        return keep_going;
      });
    }
    if (!keep_going) return;
  }
}

std::vector<long> spec_at_ordinal(int m, long max_entry, std::uint64_t target) {
  std::vector<long> found;
  std::uint64_t count = 0;
  for_each_spec_growing(m, max_entry, [&](std::span<const long> k) {
    if (count++ == target) {
      found.assign(k.begin(), k.end());
      return false;
    }
    return true;
  });
  if (found.empty()) throw std::logic_error("spec_at_ordinal: ordinal out of range");
  return found;
}

}  // namespace

CollisionOutcome find_collision(const RecurrentGNN& gnn, int iterations,
                                const CollisionBudget& budget) {
  if (has_analytic_activation(gnn.comb()))
    throw UnsupportedFieldError(
        "find_collision: analytic activations admit no collision; exact field only");
  if (iterations < 0) throw std::invalid_argument("find_collision: negative iterations");
  if (budget.m_values.empty() || budget.max_entry < 1)
    throw std::invalid_argument("find_collision: empty budget");
  for (int m : budget.m_values)
    if (m < 1) throw std::invalid_argument("find_collision: m values must be >= 1");

  const RationalField field;
  const int d = gnn.dim();
  std::vector<Rat> indicator(d, Rat(0));
  indicator[0] = 1;

  std::vector<Rat> in(2 * d);
  auto combine = [&](const std::vector<Rat>& self, const std::vector<Rat>& agg) {
    for (int i = 0; i < d; ++i) in[i] = self[i];
    for (int i = 0; i < d; ++i) in[d + i] = agg[i];
    return nn_eval(gnn.comb(), std::span<const Rat>(in), field);
  };
  auto scaled_indicator = [&](long c) {
    std::vector<Rat> v(d, Rat(0));
    v[0] = c;
    return v;
  };

  // For I <= 2 the only spec-dependent value is
  // xi^2(s) = comb(S1, sum_i u(k_i)) with u(k) = comb(e, k*e) and
  // S1 = comb(e, m*e), so u is precomputed once per search.
  const bool fast_path = iterations <= 2;
  std::vector<std::vector<Rat>> u;
  if (fast_path && iterations == 2) {
    u.resize(budget.max_entry + 1);
    for (long k = 1; k <= budget.max_entry; ++k)
      u[k] = combine(indicator, scaled_indicator(k));
  }

  std::uint64_t checked = 0;
  for (int m : budget.m_values) {
    std::unordered_map<Hash128, std::uint64_t, Hash128Hasher> groups;
    groups.reserve(1 << 16);

    std::string prefix_key;
    std::vector<Rat> s1;
    if (fast_path) {
      encode_vec(indicator, prefix_key);
      if (iterations >= 1) {
        s1 = combine(indicator, scaled_indicator(m));
        encode_vec(s1, prefix_key);
      }
    }

    std::optional<std::pair<std::vector<long>, std::vector<long>>> hit;
    std::uint64_t ordinal = 0;
    std::string key;
    for_each_spec_growing(m, budget.max_entry, [&](std::span<const long> k) {
      key.clear();
      if (fast_path) {
        key = prefix_key;
        if (iterations == 2) {
          std::vector<Rat> agg(d, Rat(0));
          for (long ki : k)
            for (int i = 0; i < d; ++i) agg[i] += u[ki][i];
          encode_vec(combine(s1, agg), key);
        }
      } else {
        for (const auto& row : tree_root_seq_classes(gnn, k, iterations))
          encode_vec(row, key);
      }
      ++checked;

      auto [it, inserted] = groups.emplace(hash_bytes(key), ordinal);
      if (!inserted) {
        std::vector<long> earlier = spec_at_ordinal(m, budget.max_entry, it->second);
        DegreeSpec spec_a{earlier};
        DegreeSpec spec_b{std::vector<long>(k.begin(), k.end())};
        // exact re-evaluation guards against 128-bit hash collisions
        auto seq_a = root_embedding_seq(gnn, spec_a, iterations, field);
        auto seq_b = root_embedding_seq(gnn, spec_b, iterations, field);
        if (seq_a == seq_b) {
          hit = {earlier, {k.begin(), k.end()}};
          return false;
        }
      }
      ++ordinal;
      return true;
    });

    if (hit) {
      DegreeSpec spec_a{hit->first};
      DegreeSpec spec_b{hit->second};
      if (spec_b < spec_a) std::swap(spec_a, spec_b);
      auto seq_a = root_embedding_seq(gnn, spec_a, iterations, field);
      auto seq_b = root_embedding_seq(gnn, spec_b, iterations, field);
      if (seq_a != seq_b || spec_a == spec_b)
        throw std::logic_error("find_collision: candidate failed re-verification");
      if (!cr_compare(make_tree(spec_a), make_tree(spec_b), 2))
        throw std::logic_error(
            "find_collision: color refinement failed to distinguish a collision pair");
      return CollisionResult{std::move(spec_a), std::move(spec_b), iterations,
                             std::move(seq_a), std::move(seq_b), 2};
    }
  }
  return CollisionNotFound{checked};
}

bool verify_collision(const RecurrentGNN& gnn, int iterations, const DegreeSpec& a,
                      const DegreeSpec& b) {
  if (has_analytic_activation(gnn.comb()))
    throw UnsupportedFieldError("verify_collision: exact field only");
  if (iterations < 0) throw std::invalid_argument("verify_collision: negative iterations");
  if (tree_isomorphic(a, b)) return false;

  const RationalField field;
  auto seq_a = root_embedding_seq(gnn, a, iterations, field);
  auto seq_b = root_embedding_seq(gnn, b, iterations, field);
  if (seq_a != seq_b) return false;
  return cr_compare(make_tree(a), make_tree(b), 2);
}

SeparationVerdict separate_roots(ActivationSpec::Kind activation, const DegreeSpec& a,
                                 const DegreeSpec& b, long max_bits) {
  ActivationSpec act = ActivationSpec::named(activation);
  if (!act.is_analytic())
    throw std::invalid_argument("separate_roots: activation must be analytic");
  if (max_bits < MPFR_PREC_MIN)
    throw std::invalid_argument("separate_roots: precision cap too small");
  if (tree_isomorphic(a, b)) return {SeparationKind::Isomorphic, 0};

  const RecurrentGNN net = RecurrentGNN::one_neuron(activation);
  long bits = std::min<long>(64, max_bits);
  while (true) {
    IntervalField field{static_cast<mpfr_prec_t>(bits)};
    Interval xa = root_embedding_seq(net, a, 2, field)[2][0];
    Interval xb = root_embedding_seq(net, b, 2, field)[2][0];
    if (xa.disjoint_from(xb)) return {SeparationKind::DistinctCertified, bits};
    if (bits >= max_bits) return {SeparationKind::Undecided, max_bits};
    bits = std::min(bits * 2, max_bits);
  }
}

SeparationReport exhaustive_separation(ActivationSpec::Kind activation,
                                       long max_total_vertices, long max_bits,
                                       int threads) {
  // validate before any worker can throw
  if (!ActivationSpec::named(activation).is_analytic())
    throw std::invalid_argument("exhaustive_separation: activation must be analytic");
  if (max_bits < MPFR_PREC_MIN)
    throw std::invalid_argument("exhaustive_separation: precision cap too small");

  const std::vector<DegreeSpec> specs = specs_up_to_vertices(max_total_vertices);
  SeparationReport report;
  report.activation = activation;
  report.max_total_vertices = max_total_vertices;
  report.max_bits = max_bits;
  report.spec_count = specs.size();

  // canonical specs are pairwise non-isomorphic
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::uint32_t i = 0; i < specs.size(); ++i)
    for (std::uint32_t j = i + 1; j < specs.size(); ++j) pairs.emplace_back(i, j);

  std::vector<SeparationVerdict> verdicts(pairs.size());
  parallel_for(pairs.size(), threads, [&](std::uint64_t p) {
    verdicts[p] = separate_roots(activation, specs[pairs[p].first],
                                 specs[pairs[p].second], max_bits);
  });

  auto oracle_input = [](const DegreeSpec& s) {
    std::vector<long> v;
    v.reserve(s.size() + 1);
    v.push_back(1 + s.size());
    for (long k : s.degrees()) v.push_back(k + 1);
    return v;
  };

  report.pairs_checked = pairs.size();
  for (std::uint64_t p = 0; p < pairs.size(); ++p) {
    const SeparationVerdict& v = verdicts[p];
    bool oracle_equal = multiset_exp_oracle(oracle_input(specs[pairs[p].first]),
                                            oracle_input(specs[pairs[p].second]));
    switch (v.kind) {
      case SeparationKind::Isomorphic:
        report.oracle_consistent = report.oracle_consistent && oracle_equal;
        break;
      case SeparationKind::DistinctCertified:
        ++report.distinct_certified;
        report.max_bits_used = std::max(report.max_bits_used, v.bits);
        report.oracle_consistent = report.oracle_consistent && !oracle_equal;
        break;
      case SeparationKind::Undecided:
        ++report.undecided;
        report.max_bits_used = std::max(report.max_bits_used, v.bits);
        break;
    }
  }
  return report;
}

bool multiset_exp_oracle(std::vector<long> alpha, std::vector<long> alpha_prime) {
  for (long a : alpha)
    if (a < 0) throw std::invalid_argument("multiset_exp_oracle: negative exponent");
  for (long a : alpha_prime)
    if (a < 0) throw std::invalid_argument("multiset_exp_oracle: negative exponent");
  std::sort(alpha.begin(), alpha.end());
  std::sort(alpha_prime.begin(), alpha_prime.end());
  return alpha == alpha_prime;
}

bool check_cr_refines_gnn(const RecurrentGNN& gnn, const LabeledGraph& graph,
                          int iterations) {
  if (has_analytic_activation(gnn.comb()))
    throw UnsupportedFieldError("check_cr_refines_gnn: exact field only");
  if (iterations < 0) throw std::invalid_argument("check_cr_refines_gnn: negative rounds");

  RefinementTrace trace = cr_run(graph, iterations);
  const Coloring& col = trace.at(std::min(iterations, trace.last_round()));
  auto table = gnn_run(gnn, graph, iterations, RationalField{});
  const auto& emb = table[iterations];

  const int n = graph.order();
  for (int v = 0; v < n; ++v)
    for (int w = v + 1; w < n; ++w)
      if (col.colors[v] == col.colors[w] && emb[v] != emb[w]) return false;
  return true;
}

bool depth_one_separation(long degree_a, long degree_b,
                          ActivationSpec::Kind activation, long max_bits) {
  if (degree_a < 1 || degree_b < 1)
    throw std::invalid_argument("depth_one_separation: degrees must be >= 1");
  if (degree_a == degree_b) return false;

  // the star with root degree d is T[1,...,1] with m = d
  const DegreeSpec star_a{std::vector<long>(degree_a, 1)};
  const DegreeSpec star_b{std::vector<long>(degree_b, 1)};
  const RecurrentGNN net = RecurrentGNN::one_neuron(activation);

  if (!ActivationSpec::named(activation).is_analytic()) {
    const RationalField field;
    return root_embedding_seq(net, star_a, 1, field)[1] !=
           root_embedding_seq(net, star_b, 1, field)[1];
  }

  long bits = std::min<long>(64, max_bits);
  while (true) {
    IntervalField field{static_cast<mpfr_prec_t>(bits)};
    Interval xa = root_embedding_seq(net, star_a, 1, field)[1][0];
    Interval xb = root_embedding_seq(net, star_b, 1, field)[1][0];
    if (xa.disjoint_from(xb)) return true;
    if (bits >= max_bits) return false;
    bits = std::min(bits * 2, max_bits);
  }
}

}  // namespace gnnsep
