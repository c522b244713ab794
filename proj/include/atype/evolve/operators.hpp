#pragma once

#include <optional>
#include <vector>

#include "atype/gen.hpp"
#include "atype/graph.hpp"
#include "atype/rng.hpp"

namespace atype {

// Node adjacency ignoring arrow direction, deduplicated and sorted.
std::vector<std::vector<NodeId>> undirected_adjacency(const ATypeGraph& g);

// Grows a connected set of internal nodes outward from `center`: at each
// step one uniformly chosen internal node adjacent to the set is absorbed,
// until the set reaches `target` nodes or no adjacent internal node is left.
std::vector<NodeId> radial_subgraph(const ATypeGraph& g, NodeId center, std::size_t target,
                                    Rng& rng);

struct Boundaries {
  std::vector<NodeId> proximal;  // subset nodes adjacent to the outside
  std::vector<NodeId> distal;    // outside nodes adjacent to the subset
};

Boundaries boundaries(const ATypeGraph& g, const std::vector<NodeId>& subset);

// One of three equally likely edits, each followed by just enough rewiring
// to restore the indegree rules: drop an internal node, replace one arrow,
// or add a node (delay with probability p_delay) spliced into an existing
// arrow. Impossible edits fall back to a possible one; the child's size
// differs from the parent's by at most one and its input/output ids are
// untouched. Requires the canonical id layout.
ATypeGraph mutate(const ATypeGraph& parent, double p_delay, Rng& rng);

// Subgraph-exchange recombination: a radial acceptor set of the mother is
// replaced by a copy of a radial donor set of the father, and the seam is
// repaired by drawing sources from the acceptor's distal boundary (for
// donor-side gaps) and the donor's proximal boundary (for the rest).
// Returns nothing when a boundary needed for repair is empty; the caller
// retries with fresh choices. Both parents must share input/output
// dimensions and use the canonical id layout.
std::optional<ATypeGraph> crossover(const ATypeGraph& mother, const ATypeGraph& father,
                                    double subgraph_cap, Rng& rng);

// The splice-and-repair stage of crossover with the subgraphs pinned,
// exposed for deterministic tests.
std::optional<ATypeGraph> crossover_with_parts(const ATypeGraph& mother,
                                               const std::vector<NodeId>& acceptor,
                                               const ATypeGraph& father,
                                               const std::vector<NodeId>& donor, Rng& rng);

}  // namespace atype
