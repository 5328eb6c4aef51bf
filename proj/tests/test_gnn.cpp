#include "doctest.h"

#include <cmath>
#include <numeric>

#include "gnnsep/gnn.hpp"
#include "gnnsep/random_instances.hpp"

using namespace gnnsep;

namespace {

bool same_interval(const Interval& a, const Interval& b) {
  return mpfr_cmp(a.lo(), b.lo()) == 0 && mpfr_cmp(a.hi(), b.hi()) == 0;
}

bool nested_in(const Interval& inner, const Interval& outer) {
  return mpfr_cmp(outer.lo(), inner.lo()) <= 0 && mpfr_cmp(inner.hi(), outer.hi()) <= 0;
}

}  // namespace

TEST_CASE("activation_eval") {
  const RationalField exact;
  ActivationSpec relu = ActivationSpec::named(ActivationSpec::Kind::relu);

  SUBCASE("relu branches, exact") {
    CHECK(activation_eval(relu, Rat(-3, 2), exact) == 0);
    CHECK(activation_eval(relu, Rat(7, 2), exact) == Rat(7, 2));
    CHECK(activation_eval(relu, Rat(0), exact) == 0);  // 0 lies in [0, inf)
  }
  SUBCASE("analytic under the exact field is unsupported") {
    ActivationSpec sig = ActivationSpec::named(ActivationSpec::Kind::sigmoid);
    CHECK_THROWS_AS(activation_eval(sig, Rat(0), exact), UnsupportedFieldError);
  }
  SUBCASE("sigmoid at 0 encloses 1/2 tightly") {
    IntervalField f{64};
    ActivationSpec sig = ActivationSpec::named(ActivationSpec::Kind::sigmoid);
    Interval v = activation_eval(sig, Interval(Rat(0), 64), f);
    CHECK(v.contains(Rat(1, 2)));
    CHECK(v.width_upper() <= std::ldexp(1.0, 1 - 64));
  }
  SUBCASE("interval straddling a breakpoint returns the hull") {
    IntervalField f{64};
    // [-1, 1] crosses relu's breakpoint; each piece is evaluated over the
    // whole input interval and the results are hulled
    Interval x = interval_hull(Interval(Rat(-1), 64), Interval(Rat(1), 64));
    Interval v = activation_eval(relu, x, f);
    CHECK(v.contains(Rat(0)));
    CHECK(v.contains(Rat(1)));
    CHECK(v.contains(Rat(-1)));
  }
  SUBCASE("gate recording captures the piece index") {
    RegionSignature sig;
    activation_eval(relu, Rat(-1), exact, &sig);
    activation_eval(relu, Rat(2), exact, &sig);
    CHECK(sig.gates == std::vector<int32_t>{0, 1});
  }
}

TEST_CASE("nn_eval basics") {
  const RationalField exact;
  Layer sum{{{Rat(1), Rat(1)}}, {Rat(0)},
            ActivationSpec::named(ActivationSpec::Kind::identity)};
  FeedForwardNet net({sum});
  std::vector<Rat> in{Rat(2), Rat(3)};
  CHECK(nn_eval(net, std::span<const Rat>(in), exact) == std::vector<Rat>{Rat(5)});

  Layer relu_sum{{{Rat(1), Rat(1)}}, {Rat(0)},
                 ActivationSpec::named(ActivationSpec::Kind::relu)};
  FeedForwardNet rnet({relu_sum});
  std::vector<Rat> neg{Rat(-2), Rat(-3)};
  CHECK(nn_eval(rnet, std::span<const Rat>(neg), exact) == std::vector<Rat>{Rat(0)});

  std::vector<Rat> wrong{Rat(1)};
  CHECK_THROWS_AS(nn_eval(net, std::span<const Rat>(wrong), exact),
                  std::invalid_argument);
}

TEST_CASE("identity-sum GNN on the depth-two family") {
  const RationalField exact;
  RecurrentGNN gnn = RecurrentGNN::identity_sum();

  SUBCASE("hand recurrence: (1, 3, 9, 25), then 71 vs 69 at t=4") {
    auto a = root_embedding_seq(gnn, DegreeSpec({1, 3}), 4, exact);
    auto b = root_embedding_seq(gnn, DegreeSpec({2, 2}), 4, exact);
    std::vector<Rat> expect{Rat(1), Rat(3), Rat(9), Rat(25)};
    for (int t = 0; t <= 3; ++t) {
      CHECK(a[t] == std::vector<Rat>{expect[t]});
      CHECK(b[t] == std::vector<Rat>{expect[t]});
    }
    // xi^4(s) = 1 + 4m^2 + (9+m)*sum(k) + sum(k^2); sum k^2 = 10 vs 8
    CHECK(a[4] == std::vector<Rat>{Rat(71)});
    CHECK(b[4] == std::vector<Rat>{Rat(69)});
  }
  SUBCASE("spec permutations give identical sequences") {
    auto a = root_embedding_seq(gnn, DegreeSpec({2, 3, 5}), 3, exact);
    auto b = root_embedding_seq(gnn, DegreeSpec({5, 3, 2}), 3, exact);
    CHECK(a == b);
  }
}

TEST_CASE("one-neuron perceptron computes sigma(1 + deg) at t=1") {
  RecurrentGNN gnn = RecurrentGNN::one_neuron(ActivationSpec::Kind::sigmoid);
  RootedGraph tree = make_tree(DegreeSpec({2, 3}));
  IntervalField f{128};
  auto table = gnn_run(gnn, tree.graph, 1, f);
  for (int v = 0; v < tree.graph.order(); ++v) {
    Interval direct = ivl_sigmoid(Interval(Rat(1 + tree.graph.degree(v)), 128));
    CHECK(same_interval(table[1][v][0], direct));
  }
}

TEST_CASE("class-based tree evaluation agrees with the materialized graph") {
  const RationalField exact;
  SplitMix64 rng(0x5EED0021);
  for (int trial = 0; trial < 25; ++trial) {
    RecurrentGNN gnn = random_relu_gnn(rng, 1, 3, 3, 4);
    std::vector<long> k;
    const int m = static_cast<int>(rng.range(1, 5));
    for (int i = 0; i < m; ++i) k.push_back(rng.range(1, 6));
    const int iters = static_cast<int>(rng.range(0, 3));

    auto by_class = tree_root_seq_classes(gnn, k, iters);
    auto by_graph = root_embedding_seq(gnn, DegreeSpec(k), iters, exact);
    CHECK(by_class == by_graph);
  }
}

TEST_CASE("gnn_run equivariance under vertex permutations") {
  const RationalField exact;
  SplitMix64 rng(0x5EED0022);
  for (int trial = 0; trial < 15; ++trial) {
    const int dim = static_cast<int>(rng.range(1, 3));
    LabeledGraph g = random_graph(rng, 8, dim);
    RecurrentGNN gnn = random_relu_gnn(rng, dim, 3, 3, 4);

    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    for (size_t i = perm.size(); i > 1; --i)
      std::swap(perm[i - 1], perm[rng.below(i)]);

    auto base = gnn_run(gnn, g, 3, exact);
    auto moved = gnn_run(gnn, apply_permutation(g, perm), 3, exact);
    for (size_t t = 0; t < base.size(); ++t)
      for (int v = 0; v < g.order(); ++v) CHECK(moved[t][perm[v]] == base[t][v]);
  }
}

TEST_CASE("interval evaluation encloses the exact value and tightens with precision") {
  SplitMix64 rng(0x5EED0023);
  const RationalField exact;
  for (int trial = 0; trial < 10; ++trial) {
    RecurrentGNN gnn = random_relu_gnn(rng, 1, 3, 3, 4);
    DegreeSpec spec({rng.range(1, 4), rng.range(1, 4)});

    Rat truth = root_embedding_seq(gnn, spec, 2, exact)[2][0];
    IntervalField f64{64};
    IntervalField f128{128};
    Interval coarse = root_embedding_seq(gnn, spec, 2, f64)[2][0];
    Interval fine = root_embedding_seq(gnn, spec, 2, f128)[2][0];

    CHECK(coarse.contains(truth));
    CHECK(fine.contains(truth));
    CHECK_FALSE(coarse.disjoint_from(fine));
    CHECK(nested_in(fine, coarse));
  }
}

TEST_CASE("analytic interval enclosures") {
  SplitMix64 rng(0x5EED0024);
  mpfr_t ref;
  mpfr_init2(ref, 512);

  auto reference_inside = [&](const Interval& enc, ActivationSpec::Kind kind,
                              const Rat& x) {
    // a 512-bit point evaluation is far more accurate than any 64-bit
    // enclosure is wide, so it must land inside
    mpfr_set_q(ref, x.get_mpq_t(), MPFR_RNDN);
    switch (kind) {
      case ActivationSpec::Kind::exp: mpfr_exp(ref, ref, MPFR_RNDN); break;
      case ActivationSpec::Kind::tanh: mpfr_tanh(ref, ref, MPFR_RNDN); break;
      case ActivationSpec::Kind::sinh: mpfr_sinh(ref, ref, MPFR_RNDN); break;
      case ActivationSpec::Kind::cosh: mpfr_cosh(ref, ref, MPFR_RNDN); break;
      default: {  // sigmoid
        mpfr_neg(ref, ref, MPFR_RNDN);
        mpfr_exp(ref, ref, MPFR_RNDN);
        mpfr_add_ui(ref, ref, 1, MPFR_RNDN);
        mpfr_ui_div(ref, 1, ref, MPFR_RNDN);
      }
    }
    return mpfr_cmp(enc.lo(), ref) <= 0 && mpfr_cmp(ref, enc.hi()) <= 0;
  };

  for (int trial = 0; trial < 40; ++trial) {
    Rat x(rng.range(-40, 40), rng.range(1, 7));
    x.canonicalize();
    Interval xi(x, 64);
    for (auto kind : {ActivationSpec::Kind::exp, ActivationSpec::Kind::sigmoid,
                      ActivationSpec::Kind::tanh, ActivationSpec::Kind::sinh,
                      ActivationSpec::Kind::cosh}) {
      Interval enc = activation_eval(ActivationSpec::named(kind), xi,
                                     IntervalField{64});
      CHECK(reference_inside(enc, kind, x));
    }
  }

  // cosh straddling zero keeps the true minimum cosh(0) = 1
  Interval straddle = interval_hull(Interval(Rat(-1), 64), Interval(Rat(2), 64));
  Interval c = ivl_cosh(straddle);
  CHECK(c.contains(Rat(1)));
  CHECK(mpfr_cmp_ui(c.lo(), 1) == 0);
  Interval mirrored = ivl_cosh(interval_hull(Interval(Rat(-2), 64), Interval(Rat(1), 64)));
  CHECK(mpfr_cmp(mirrored.hi(), c.hi()) == 0);

  mpfr_clear(ref);
}

TEST_CASE("dimension and color checks") {
  RecurrentGNN gnn = RecurrentGNN::identity_sum();
  LabeledGraph bicolored(2, {{0, 1}}, {1, 2}, 2);
  CHECK_THROWS_AS(gnn_run(gnn, bicolored, 1, RationalField{}), std::invalid_argument);

  // combine net must map R^{2d} -> R^d
  Layer bad{{{Rat(1), Rat(1), Rat(1)}}, {Rat(0)},
            ActivationSpec::named(ActivationSpec::Kind::identity)};
  CHECK_THROWS_AS(RecurrentGNN(FeedForwardNet({bad}), 1), std::invalid_argument);
}

TEST_CASE("piecewise_degree multiplies layer degrees") {
  CHECK(piecewise_degree(RecurrentGNN::identity_sum().comb()) == 1);
  // quadratic piece
  PiecewisePoly square({}, {{Rat(0), Rat(0), Rat(1)}});
  Layer l1{{{Rat(1), Rat(1)}}, {Rat(0)}, ActivationSpec::from_pieces(square)};
  Layer l2{{{Rat(1)}}, {Rat(0)}, ActivationSpec::from_pieces(square)};
  CHECK(piecewise_degree(FeedForwardNet({l1, l2})) == 4);
  CHECK_THROWS_AS(
      piecewise_degree(RecurrentGNN::one_neuron(ActivationSpec::Kind::exp).comb()),
      UnsupportedFieldError);
}
