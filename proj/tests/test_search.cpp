#include "doctest.h"

#include <algorithm>
#include <map>

#include "gnnsep/errors.hpp"
#include "gnnsep/random_instances.hpp"
#include "gnnsep/search.hpp"

using namespace gnnsep;

TEST_CASE("enumerate_specs") {
  auto specs = enumerate_specs(2, 2);
  REQUIRE(specs.size() == 3);
  CHECK(specs[0].degrees() == std::vector<long>{1, 1});
  CHECK(specs[1].degrees() == std::vector<long>{1, 2});
  CHECK(specs[2].degrees() == std::vector<long>{2, 2});

  CHECK(enumerate_specs(1, 4).size() == 4);
  CHECK(enumerate_specs(3, 3).size() == 10);  // stars and bars: C(5,3)

  // lexicographic and duplicate-free
  auto many = enumerate_specs(3, 4);
  CHECK(BigInt(static_cast<long>(many.size())) == binomial(6, 3));
  CHECK(std::is_sorted(many.begin(), many.end()));
  CHECK(std::adjacent_find(many.begin(), many.end()) == many.end());
}

TEST_CASE("specs_up_to_vertices") {
  auto only = specs_up_to_vertices(2);
  REQUIRE(only.size() == 1);
  CHECK(only[0].degrees() == std::vector<long>{1});

  // oracle: filter the full enumeration by total vertex count
  for (long cap : {5L, 9L, 13L}) {
    auto got = specs_up_to_vertices(cap);
    std::vector<DegreeSpec> expect;
    for (int m = 1; 1 + m <= cap; ++m)
      for (const DegreeSpec& s : enumerate_specs(m, cap))
        if (s.total_vertices() <= cap) expect.push_back(s);
    std::sort(expect.begin(), expect.end(),
              [](const DegreeSpec& a, const DegreeSpec& b) {
                if (a.size() != b.size()) return a.size() < b.size();
                return a.degrees() < b.degrees();
              });
    CHECK(got == expect);
    for (const DegreeSpec& s : got) CHECK(s.total_vertices() <= cap);
  }
}

TEST_CASE("find_collision on the identity-sum GNN") {
  RecurrentGNN gnn = RecurrentGNN::identity_sum();

  SUBCASE("I=2: brute-force oracle picks the same first pair") {
    // oracle: xi-sequence of T[k] is (1, 1+m, 1+2m+sum k); search in the
    // same growing-box order and report the first repeat
    std::map<long, std::vector<long>> seen;  // sum k -> first spec (m=2)
    std::vector<long> oracle_a, oracle_b;
    for (long M = 1; M <= 4 && oracle_a.empty(); ++M)
      for (long k1 = 1; k1 <= M && oracle_a.empty(); ++k1) {
        std::vector<long> spec{k1, M};
        auto [it, inserted] = seen.emplace(k1 + M, spec);
        if (!inserted) {
          oracle_a = it->second;
          oracle_b = spec;
        }
      }
    REQUIRE(!oracle_a.empty());

    auto outcome = find_collision(gnn, 2, {{2}, 4});
    auto* hit = std::get_if<CollisionResult>(&outcome);
    REQUIRE(hit != nullptr);
    std::vector<DegreeSpec> got{hit->spec_a, hit->spec_b};
    std::vector<DegreeSpec> expect{DegreeSpec(oracle_a), DegreeSpec(oracle_b)};
    std::sort(expect.begin(), expect.end());
    CHECK(got == expect);
    CHECK(hit->seq_a == hit->seq_b);
    REQUIRE(hit->seq_a.size() == 3);
    CHECK(hit->seq_a[0] == std::vector<Rat>{Rat(1)});
    CHECK(hit->seq_a[1] == std::vector<Rat>{Rat(3)});
    CHECK(hit->seq_a[2] == std::vector<Rat>{Rat(9)});
    CHECK(hit->cr_round_distinguished == 2);
    CHECK(verify_collision(gnn, 2, hit->spec_a, hit->spec_b));
  }
  SUBCASE("I=3: [1,3] and [2,2] still collide (both reach 25)") {
    auto outcome = find_collision(gnn, 3, {{2}, 4});
    auto* hit = std::get_if<CollisionResult>(&outcome);
    REQUIRE(hit != nullptr);
    CHECK(hit->spec_a == DegreeSpec({1, 3}));
    CHECK(hit->spec_b == DegreeSpec({2, 2}));
    CHECK(hit->seq_a.back() == std::vector<Rat>{Rat(25)});
    CHECK(verify_collision(gnn, 3, hit->spec_a, hit->spec_b));
  }
  SUBCASE("m=1 has no identity-sum collision: budget exhausts honestly") {
    auto outcome = find_collision(gnn, 2, {{1}, 5});
    auto* miss = std::get_if<CollisionNotFound>(&outcome);
    REQUIRE(miss != nullptr);
    CHECK(miss->specs_checked == 5);
  }
  SUBCASE("analytic activations are rejected") {
    CHECK_THROWS_AS(find_collision(RecurrentGNN::one_neuron(
                                       ActivationSpec::Kind::sigmoid),
                                   2, {{2}, 4}),
                    UnsupportedFieldError);
  }
}

TEST_CASE("find_collision with a quadratic activation") {
  // comb(x, y) = (x + y)^2: xi^1(v) = (1 + deg v)^2 and
  // xi^2(s) = ((1+m)^2 + sum (1+k_i)^2)^2, so the first m=2 collision is the
  // smallest pair of two-square sums that agree: 2^2 + 9^2 = 6^2 + 7^2 = 85,
  // i.e. [1,8] and [5,6]
  PiecewisePoly square({}, {{Rat(0), Rat(0), Rat(1)}});
  Layer l{{{Rat(1), Rat(1)}}, {Rat(0)}, ActivationSpec::from_pieces(square)};
  RecurrentGNN gnn(FeedForwardNet({l}), 1);

  auto outcome = find_collision(gnn, 2, {{2}, 8});
  auto* hit = std::get_if<CollisionResult>(&outcome);
  REQUIRE(hit != nullptr);
  CHECK(hit->spec_a == DegreeSpec({1, 8}));
  CHECK(hit->spec_b == DegreeSpec({5, 6}));
  REQUIRE(hit->seq_a.size() == 3);
  CHECK(hit->seq_a[1] == std::vector<Rat>{Rat(9)});
  CHECK(hit->seq_a[2] == std::vector<Rat>{Rat(8836)});  // (9 + 85)^2
  CHECK(hit->seq_a == hit->seq_b);
  CHECK(verify_collision(gnn, 2, hit->spec_a, hit->spec_b));

  // no smaller box contains a two-square-sum coincidence
  auto none = find_collision(gnn, 2, {{2}, 7});
  CHECK(std::get_if<CollisionNotFound>(&none) != nullptr);
}

TEST_CASE("find_collision soundness on random relu nets") {
  SplitMix64 rng(0x5EED0051);
  for (int trial = 0; trial < 6; ++trial) {
    RecurrentGNN gnn = random_relu_gnn(rng, 1, 3, 3, 4);
    auto outcome = find_collision(gnn, 2, {{2, 3}, 6});
    if (auto* hit = std::get_if<CollisionResult>(&outcome)) {
      CHECK(verify_collision(gnn, 2, hit->spec_a, hit->spec_b));
      CHECK_FALSE(tree_isomorphic(hit->spec_a, hit->spec_b));
    }
  }
}

TEST_CASE("verify_collision") {
  RecurrentGNN gnn = RecurrentGNN::identity_sum();
  CHECK(verify_collision(gnn, 3, DegreeSpec({1, 3}), DegreeSpec({2, 2})));
  // xi^4 separates: sum of squares enters the recurrence
  CHECK_FALSE(verify_collision(gnn, 4, DegreeSpec({1, 3}), DegreeSpec({2, 2})));
  CHECK_FALSE(verify_collision(gnn, 3, DegreeSpec({2, 2}), DegreeSpec({2, 2})));
}

TEST_CASE("separate_roots") {
  SUBCASE("permutations are isomorphic, no numerics") {
    SeparationVerdict v =
        separate_roots(ActivationSpec::Kind::sigmoid, DegreeSpec({2, 3}),
                       DegreeSpec({3, 2}), 256);
    CHECK(v.kind == SeparationKind::Isomorphic);
  }
  SUBCASE("sigmoid certifies [1,3] vs [2,2]") {
    SeparationVerdict v = separate_roots(ActivationSpec::Kind::sigmoid,
                                         DegreeSpec({1, 3}), DegreeSpec({2, 2}), 256);
    CHECK(v.kind == SeparationKind::DistinctCertified);
    CHECK(v.bits >= 64);
    // the oracle agrees: multisets {3,2,4} vs {3,3,3} differ
    CHECK_FALSE(multiset_exp_oracle({3, 2, 4}, {3, 3, 3}));
  }
  SUBCASE("exp certifies [1] vs [2]") {
    SeparationVerdict v = separate_roots(ActivationSpec::Kind::exp, DegreeSpec({1}),
                                         DegreeSpec({2}), 256);
    CHECK(v.kind == SeparationKind::DistinctCertified);
  }
  SUBCASE("piecewise names are rejected") {
    CHECK_THROWS_AS(separate_roots(ActivationSpec::Kind::relu, DegreeSpec({1}),
                                   DegreeSpec({2}), 64),
                    std::invalid_argument);
  }
  SUBCASE("certification is monotone in precision") {
    RecurrentGNN net = RecurrentGNN::one_neuron(ActivationSpec::Kind::tanh);
    for (long bits : {64L, 128L, 256L}) {
      IntervalField f{static_cast<mpfr_prec_t>(bits)};
      Interval a = root_embedding_seq(net, DegreeSpec({1, 4}), 2, f)[2][0];
      Interval b = root_embedding_seq(net, DegreeSpec({2, 3}), 2, f)[2][0];
      CHECK(a.disjoint_from(b));
    }
  }
}

TEST_CASE("exhaustive_separation at small scale") {
  for (auto kind : {ActivationSpec::Kind::sigmoid, ActivationSpec::Kind::tanh}) {
    SeparationReport r = exhaustive_separation(kind, 5, 512, 2);
    CHECK(r.undecided == 0);
    CHECK(r.oracle_consistent);
    CHECK(r.success());
    CHECK(r.pairs_checked == r.spec_count * (r.spec_count - 1) / 2);
    CHECK(r.distinct_certified == r.pairs_checked);
  }
  SeparationReport singleton = exhaustive_separation(ActivationSpec::Kind::exp, 2, 64, 1);
  CHECK(singleton.spec_count == 1);
  CHECK(singleton.pairs_checked == 0);
  CHECK(singleton.success());
}

TEST_CASE("multiset_exp_oracle") {
  CHECK(multiset_exp_oracle({2, 3, 3}, {3, 2, 3}));
  CHECK_FALSE(multiset_exp_oracle({2, 4}, {3, 3}));
  CHECK_FALSE(multiset_exp_oracle({1}, {1, 1}));
  CHECK_THROWS_AS(multiset_exp_oracle({-1}, {1}), std::invalid_argument);
}

TEST_CASE("verdicts agree with the multiset-exponential oracle") {
  // Isomorphic exactly when the oracle on (1+m, k_1+1, ..., k_m+1) says the
  // exponential sums coincide
  auto oracle_input = [](const DegreeSpec& s) {
    std::vector<long> v{1 + s.size()};
    for (long k : s.degrees()) v.push_back(k + 1);
    return v;
  };
  SplitMix64 rng(0x5EED0053);
  auto specs = specs_up_to_vertices(7);
  for (int trial = 0; trial < 60; ++trial) {
    const DegreeSpec& a = specs[rng.below(specs.size())];
    const DegreeSpec& b = specs[rng.below(specs.size())];
    SeparationVerdict v = separate_roots(ActivationSpec::Kind::sigmoid, a, b, 512);
    bool oracle_equal = multiset_exp_oracle(oracle_input(a), oracle_input(b));
    CHECK((v.kind == SeparationKind::Isomorphic) == oracle_equal);
    if (v.kind == SeparationKind::DistinctCertified) CHECK_FALSE(oracle_equal);
  }
}

TEST_CASE("scheduling independence and reproducibility") {
  SeparationReport r1 = exhaustive_separation(ActivationSpec::Kind::sigmoid, 7, 256, 1);
  SeparationReport r3 = exhaustive_separation(ActivationSpec::Kind::sigmoid, 7, 256, 3);
  CHECK(r1.pairs_checked == r3.pairs_checked);
  CHECK(r1.distinct_certified == r3.distinct_certified);
  CHECK(r1.undecided == r3.undecided);
  CHECK(r1.max_bits_used == r3.max_bits_used);
  CHECK(r1.oracle_consistent == r3.oracle_consistent);

  SplitMix64 rng(0x5EED0054);
  RecurrentGNN gnn = random_relu_gnn(rng, 1, 3, 3, 4);
  auto first = find_collision(gnn, 2, {{2, 3}, 8});
  auto second = find_collision(gnn, 2, {{2, 3}, 8});
  REQUIRE(first.index() == second.index());
  if (auto* hit = std::get_if<CollisionResult>(&first)) {
    auto* again = std::get_if<CollisionResult>(&second);
    CHECK(hit->spec_a == again->spec_a);
    CHECK(hit->spec_b == again->spec_b);
  }
}

TEST_CASE("cr refines gnn embeddings") {
  RecurrentGNN gnn = RecurrentGNN::identity_sum();

  LabeledGraph k4 = LabeledGraph::unicolored(
      4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(check_cr_refines_gnn(gnn, k4, 3));
  CHECK(check_cr_refines_gnn(gnn, make_tree(DegreeSpec({1, 3})).graph, 2));

  SplitMix64 rng(0x5EED0052);
  for (int trial = 0; trial < 25; ++trial) {
    const int dim = static_cast<int>(rng.range(1, 4));
    LabeledGraph g = random_graph(rng, 10, dim);
    RecurrentGNN net = random_relu_gnn(rng, dim, 3, 3, 4);
    const int iters = static_cast<int>(rng.range(1, 4));
    CHECK(check_cr_refines_gnn(net, g, iters));
  }
}

TEST_CASE("depth_one_separation") {
  CHECK(depth_one_separation(2, 3, ActivationSpec::Kind::identity, 64));
  CHECK_FALSE(depth_one_separation(5, 5, ActivationSpec::Kind::identity, 64));
  CHECK(depth_one_separation(1, 2, ActivationSpec::Kind::sigmoid, 256));
  CHECK_THROWS_AS(depth_one_separation(0, 1, ActivationSpec::Kind::identity, 64),
                  std::invalid_argument);
}
