#include "doctest.h"

#include <algorithm>

#include "gnnsep/errors.hpp"
#include "gnnsep/extract.hpp"
#include "gnnsep/random_instances.hpp"

using namespace gnnsep;

namespace {

// relu-based net with two hidden units and mixed signs:
// f(x, y) = relu(x + y) + 2 * relu(x - y) - 1
RecurrentGNN mixed_relu_gnn() {
  Layer hidden{{{Rat(1), Rat(1)}, {Rat(1), Rat(-1)}},
               {Rat(0), Rat(0)},
               ActivationSpec::named(ActivationSpec::Kind::relu)};
  Layer out{{{Rat(1), Rat(2)}},
            {Rat(-1)},
            ActivationSpec::named(ActivationSpec::Kind::identity)};
  return RecurrentGNN(FeedForwardNet({hidden, out}), 1);
}

}  // namespace

TEST_CASE("identity-sum extraction recovers the hand polynomial") {
  RecurrentGNN gnn = RecurrentGNN::identity_sum();

  SUBCASE("t=2, m=2: xi^2(s) = 1 + 2m + k1 + k2 = 5 + k1 + k2") {
    RegionPolyResult r = extract_region_poly(gnn, 2, 2, DegreeSpec({3, 4}));
    Poly expect(2);
    expect.add_term({0, 0}, 5);
    expect.add_term({1, 0}, 1);
    expect.add_term({0, 1}, 1);
    CHECK(r.poly == expect);
  }
  SUBCASE("t=1, m=2: constant 1 + m = 3") {
    RegionPolyResult r = extract_region_poly(gnn, 2, 1, DegreeSpec({3, 4}));
    CHECK(r.poly == Poly::constant(2, 3));
  }
}

TEST_CASE("extraction matches fresh root evaluations exactly") {
  SplitMix64 rng(0x5EED0041);
  for (const RecurrentGNN& gnn : {RecurrentGNN::identity_sum(), mixed_relu_gnn()}) {
    const int m = 3;
    const int t = 2;
    DegreeSpec seed({4, 5, 6});
    RegionPolyResult r = extract_region_poly(gnn, m, t, seed);

    RegionSignature seed_sig;
    tree_root_seq_classes(gnn, seed.degrees(), t, &seed_sig);

    int fresh = 0;
    int attempts = 0;
    while (fresh < 20) {
      REQUIRE(++attempts < 2000);
      std::vector<long> point;
      for (int i = 0; i < m; ++i)
        point.push_back(std::max(1L, seed.degrees()[i] + rng.range(-2, 2)));
      RegionSignature sig;
      auto seq = tree_root_seq_classes(gnn, point, t, &sig);
      if (!(sig == seed_sig)) continue;
      std::vector<Rat> x(point.begin(), point.end());
      CHECK(r.poly.eval(x) == seq[t][0]);

      // symmetry at the value level: a coordinate permutation with the same
      // signature evaluates identically
      std::vector<long> perm = point;
      std::rotate(perm.begin(), perm.begin() + 1, perm.end());
      RegionSignature psig;
      auto pseq = tree_root_seq_classes(gnn, perm, t, &psig);
      if (psig == seed_sig) {
        std::vector<Rat> px(perm.begin(), perm.end());
        CHECK(r.poly.eval(px) == r.poly.eval(x));
        CHECK(pseq[t][0] == seq[t][0]);
      }
      ++fresh;
    }
  }
}

TEST_CASE("quadratic activation: degree-four region polynomial") {
  // comb(x, y) = (x + y)^2 gives xi^2(s) = ((1+m)^2 + sum (1+k_i)^2)^2; the
  // expected polynomial is built symbolically and must match the fit exactly
  PiecewisePoly square({}, {{Rat(0), Rat(0), Rat(1)}});
  Layer l{{{Rat(1), Rat(1)}}, {Rat(0)}, ActivationSpec::from_pieces(square)};
  RecurrentGNN gnn(FeedForwardNet({l}), 1);

  RegionPolyResult r = extract_region_poly(gnn, 2, 2, DegreeSpec({3, 5}));

  Poly one_plus_k1 = Poly::constant(2, 1) + Poly::variable(2, 0);
  Poly one_plus_k2 = Poly::constant(2, 1) + Poly::variable(2, 1);
  Poly inner = Poly::constant(2, 9) + one_plus_k1 * one_plus_k1 +
               one_plus_k2 * one_plus_k2;
  CHECK(r.poly == inner * inner);
  CHECK(r.poly.degree() == 4);
}

TEST_CASE("extraction degree stays within the bound sequence") {
  RecurrentGNN gnn = mixed_relu_gnn();
  for (int t = 0; t <= 3; ++t) {
    RegionPolyResult r = extract_region_poly(gnn, 2, t, DegreeSpec({5, 7}));
    // relu nets have deg_phi = 1, so every q_t is 1
    CHECK(r.poly.degree() <= 1);
  }
}

TEST_CASE("extraction errors") {
  SUBCASE("analytic activations are unsupported") {
    CHECK_THROWS_AS(extract_region_poly(RecurrentGNN::one_neuron(
                                            ActivationSpec::Kind::sigmoid),
                                        2, 1, DegreeSpec({2, 2})),
                    UnsupportedFieldError);
  }
  SUBCASE("seed arity must match m") {
    CHECK_THROWS_AS(
        extract_region_poly(RecurrentGNN::identity_sum(), 3, 1, DegreeSpec({2, 2})),
        std::invalid_argument);
  }
  SUBCASE("exhausted budget raises region-too-small") {
    ExtractOptions tight;
    tight.max_points_examined = 2;
    CHECK_THROWS_AS(extract_region_poly(RecurrentGNN::identity_sum(), 2, 2,
                                        DegreeSpec({3, 3}), tight),
                    RegionTooSmallError);
  }
}
