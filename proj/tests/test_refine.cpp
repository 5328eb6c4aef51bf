#include "doctest.h"

#include <numeric>

#include "gnnsep/random_instances.hpp"
#include "gnnsep/refine.hpp"

using namespace gnnsep;

namespace {

// c2 refines c1: equal colors in c2 imply equal colors in c1
bool refines(const Coloring& c2, const Coloring& c1) {
  std::vector<int> witness(c2.num_colors, -1);
  for (size_t v = 0; v < c2.colors.size(); ++v) {
    int& w = witness[c2.colors[v]];
    if (w == -1)
      w = c1.colors[v];
    else if (w != c1.colors[v])
      return false;
  }
  return true;
}

}  // namespace

TEST_CASE("cr_step hand cases") {
  SUBCASE("P3 path, uniform start: endpoints split from the middle") {
    LabeledGraph p3 = LabeledGraph::unicolored(3, {{0, 1}, {1, 2}});
    Coloring c1 = cr_step(p3, initial_coloring(p3));
    // signature sort: (0,[0]) before (0,[0,0])
    CHECK(c1.colors == std::vector<int>{0, 1, 0});
    CHECK(c1.num_colors == 2);
    CHECK(c1.round == 1);
  }
  SUBCASE("single vertex stays put") {
    LabeledGraph g = LabeledGraph::unicolored(1, {});
    Coloring c1 = cr_step(g, initial_coloring(g));
    CHECK(c1.colors == std::vector<int>{0});
  }
  SUBCASE("K3 is vertex-transitive") {
    LabeledGraph k3 = LabeledGraph::unicolored(3, {{0, 1}, {0, 2}, {1, 2}});
    Coloring c1 = cr_step(k3, initial_coloring(k3));
    CHECK(c1.num_colors == 1);
  }
  SUBCASE("size mismatch is an error") {
    LabeledGraph p3 = LabeledGraph::unicolored(3, {{0, 1}, {1, 2}});
    Coloring wrong;
    wrong.colors = {0, 0};
    wrong.num_colors = 1;
    CHECK_THROWS_AS(cr_step(p3, wrong), std::invalid_argument);
  }
}

TEST_CASE("cr_run stabilization") {
  SUBCASE("K_n with uniform labels is stable at round 0") {
    for (int n : {2, 3, 5}) {
      std::vector<std::pair<int, int>> edges;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      RefinementTrace trace = cr_run(LabeledGraph::unicolored(n, edges));
      CHECK(trace.stable_round == 0);
      CHECK(trace.rounds.size() == 1);
    }
  }
  SUBCASE("T[1,3] separates root, both depth-one degrees, and leaves") {
    RootedGraph t = make_tree(DegreeSpec({1, 3}));
    RefinementTrace trace = cr_run(t.graph);
    CHECK(trace.stable_round == 2);
    const Coloring& fin = trace.rounds.back();
    CHECK(fin.num_colors == 4);
    // ids: root=0, x1=1, x2=2, leaves of x2 = 3,4
    CHECK(fin.colors[3] == fin.colors[4]);
    CHECK(fin.colors[1] != fin.colors[3]);  // x1 is not a depth-two leaf
    CHECK(fin.colors[0] != fin.colors[2]);
  }
  SUBCASE("bounded run stops at the bound") {
    RootedGraph t = make_tree(DegreeSpec({1, 3}));
    RefinementTrace trace = cr_run(t.graph, 1);
    CHECK(trace.last_round() == 1);
    CHECK(trace.stable_round == -1);
    CHECK_THROWS_AS(trace.at(3), std::invalid_argument);
  }
}

TEST_CASE("cr_compare on the depth-two family") {
  RootedGraph a = make_tree(DegreeSpec({1, 3}));
  RootedGraph b = make_tree(DegreeSpec({2, 2}));
  // both roots see (1, {{1,1}}) at round one; the multisets split at two
  CHECK_FALSE(cr_compare(a, b, 0));
  CHECK_FALSE(cr_compare(a, b, 1));
  CHECK(cr_compare(a, b, 2));

  RootedGraph c = make_tree(DegreeSpec({2, 3}));
  RootedGraph d = make_tree(DegreeSpec({3, 2}));
  for (int t = 0; t <= 4; ++t) {
    CHECK_FALSE(cr_compare(c, d, t));
    CHECK_FALSE(cr_compare(a, a, t));
  }
}

TEST_CASE("refinement chain, stabilization bound, equivariance") {
  SplitMix64 rng(0x5EED0011);
  for (int trial = 0; trial < 40; ++trial) {
    LabeledGraph g = random_graph(rng, 12, static_cast<int>(rng.range(1, 3)));
    RefinementTrace trace = cr_run(g);
    const int n = g.order();

    CHECK(trace.stable_round >= 0);
    CHECK(trace.stable_round <= n);
    CHECK(static_cast<int>(trace.rounds.size()) <= n + 1);
    for (size_t r = 1; r < trace.rounds.size(); ++r)
      CHECK(refines(trace.rounds[r], trace.rounds[r - 1]));

    // canonical renumbering makes colorings permutation-equivariant id-for-id
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (size_t i = perm.size(); i > 1; --i)
      std::swap(perm[i - 1], perm[rng.below(i)]);
    RefinementTrace permuted = cr_run(apply_permutation(g, perm));
    REQUIRE(permuted.rounds.size() == trace.rounds.size());
    for (size_t r = 0; r < trace.rounds.size(); ++r)
      for (int v = 0; v < n; ++v)
        CHECK(permuted.rounds[r].colors[perm[v]] == trace.rounds[r].colors[v]);
  }
}

TEST_CASE("initial coloring renumbers sparse labels densely") {
  LabeledGraph g(3, {}, {3, 1, 3}, 3);
  Coloring c = initial_coloring(g);
  CHECK(c.colors == std::vector<int>{1, 0, 1});
  CHECK(c.num_colors == 2);
}
