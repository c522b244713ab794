#include "doctest.h"

#include <cstdlib>

#include "atype/evolve/operators.hpp"
#include "support/figures.hpp"

using namespace atype;

TEST_CASE("radial growth on a chain") {
  const ATypeGraph g = figures::chain_network().graph;  // internals 2 and 3
  Rng rng(23);
  CHECK(radial_subgraph(g, 2, 1, rng) == std::vector<NodeId>{2});
  CHECK(radial_subgraph(g, 2, 2, rng) == std::vector<NodeId>{2, 3});
  // growth exhausts at the internal component
  CHECK(radial_subgraph(g, 2, 10, rng) == std::vector<NodeId>{2, 3});
}

TEST_CASE("radial sets are connected and internal") {
  Rng rng(24);
  GenConfig cfg;
  cfg.input_dim = 2;
  cfg.output_dim = 1;
  cfg.size_lo = 8;
  cfg.size_hi = 30;
  for (int i = 0; i < 300; ++i) {
    const ATypeGraph g = random_atype(cfg, rng);
    const std::vector<NodeId> internals = g.internal_nodes();
    const NodeId center = internals[rng_index(rng, internals.size())];
    const std::size_t want = 1 + rng_index(rng, internals.size());
    const std::vector<NodeId> set = radial_subgraph(g, center, want, rng);
    REQUIRE(!set.empty());
    CHECK(set.size() <= want);
    for (NodeId id : set) CHECK(g.is_internal(id));

    // connectivity of the set under undirected adjacency
    const auto adj = undirected_adjacency(g);
    std::vector<char> in_set(g.size(), 0), seen(g.size(), 0);
    for (NodeId id : set) in_set[id] = 1;
    std::vector<NodeId> stack{set[0]};
    seen[set[0]] = 1;
    std::size_t visited = 0;
    while (!stack.empty()) {
      const NodeId v = stack.back();
      stack.pop_back();
      ++visited;
      for (NodeId nb : adj[v])
        if (in_set[nb] && !seen[nb]) {
          seen[nb] = 1;
          stack.push_back(nb);
        }
    }
    CHECK(visited == set.size());
  }
}

TEST_CASE("boundaries of the splice fixtures") {
  const ATypeGraph mother = figures::splice_mother().graph;
  const Boundaries bm = boundaries(mother, {4});
  CHECK(bm.proximal == std::vector<NodeId>{4});
  CHECK(bm.distal == std::vector<NodeId>{2, 3, 5, 6});

  const ATypeGraph father = figures::splice_father().graph;
  const Boundaries bf = boundaries(father, {2, 3, 4, 5, 6, 7});
  CHECK(bf.proximal == std::vector<NodeId>{2, 6, 7});
  CHECK(bf.distal == std::vector<NodeId>{0, 1});
}

TEST_CASE("boundaries of the full node set are empty") {
  const ATypeGraph g = figures::splice_mother().graph;
  std::vector<NodeId> all;
  for (NodeId id = 0; id < g.size(); ++id) all.push_back(id);
  const Boundaries b = boundaries(g, all);
  CHECK(b.proximal.empty());
  CHECK(b.distal.empty());
}

TEST_CASE("mutation keeps children valid with size steps of at most one") {
  Rng rng(25);
  GenConfig cfg;
  cfg.input_dim = 2;
  cfg.output_dim = 2;
  cfg.size_lo = 5;
  cfg.size_hi = 24;
  cfg.p_delay = 0.2;
  for (int i = 0; i < 10000; ++i) {
    const ATypeGraph parent = random_atype(cfg, rng);
    const ATypeGraph child = mutate(parent, cfg.p_delay, rng);
    CAPTURE(i);
    REQUIRE(is_valid(child));
    const auto delta = static_cast<std::ptrdiff_t>(child.size()) -
                       static_cast<std::ptrdiff_t>(parent.size());
    REQUIRE(std::abs(delta) <= 1);
    REQUIRE(child.input_order == parent.input_order);
    REQUIRE(child.output_order == parent.output_order);
  }
}

TEST_CASE("mutation at the minimum size falls back instead of removing") {
  Rng rng(26);
  GenConfig cfg;
  cfg.input_dim = 1;
  cfg.output_dim = 1;
  cfg.size_lo = 3;  // single internal node: removal is impossible
  cfg.size_hi = 3;
  for (int i = 0; i < 500; ++i) {
    const ATypeGraph parent = random_atype(cfg, rng);
    const ATypeGraph child = mutate(parent, 0.2, rng);
    REQUIRE(is_valid(child));
    REQUIRE(child.size() >= parent.size());
  }
}

TEST_CASE("splice fixture pair combines into a twelve-node child") {
  Rng rng(27);
  for (int i = 0; i < 200; ++i) {
    const auto child = crossover_with_parts(figures::splice_mother().graph, {4},
                                            figures::splice_father().graph,
                                            {2, 3, 4, 5, 6, 7}, rng);
    REQUIRE(child.has_value());
    CHECK(child->size() == 12);
    CHECK(is_valid(*child));
    CHECK(child->input_order == figures::splice_mother().graph.input_order);
    CHECK(child->output_order == figures::splice_mother().graph.output_order);
  }
}

TEST_CASE("swapping a node for an identically wired one reproduces the mother") {
  Rng rng(28);
  const ATypeGraph mother = figures::identity_network(1).graph;
  const ATypeGraph father = figures::identity_network(1).graph;
  const auto child = crossover_with_parts(mother, {2}, father, {2}, rng);
  REQUIRE(child.has_value());
  CHECK(*child == mother);
}

TEST_CASE("crossover children are valid and preserve dimensions") {
  Rng rng(29);
  GenConfig cfg;
  cfg.input_dim = 2;
  cfg.output_dim = 1;
  cfg.size_lo = 5;
  cfg.size_hi = 20;
  cfg.p_delay = 0.2;
  std::size_t produced = 0, failures = 0;
  for (int i = 0; i < 10000; ++i) {
    const ATypeGraph mother = random_atype(cfg, rng);
    const ATypeGraph father = random_atype(cfg, rng);
    const auto child = crossover(mother, father, 0.8, rng);
    if (!child) {
      ++failures;
      continue;
    }
    ++produced;
    CAPTURE(i);
    REQUIRE(is_valid(*child));
    REQUIRE(child->input_order == mother.input_order);
    REQUIRE(child->output_order == mother.output_order);
  }
  CHECK(produced > 9000);  // degenerate boundaries are the rare exception
  CHECK(produced + failures == 10000);
}
