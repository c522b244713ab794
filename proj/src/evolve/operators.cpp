#include "atype/evolve/operators.hpp"

#include <algorithm>
#include <cassert>

namespace atype {

std::vector<std::vector<NodeId>> undirected_adjacency(const ATypeGraph& g) {
  std::vector<std::vector<NodeId>> adj(g.size());
  for (const Arrow& a : g.arrows) {
    adj[a.src].push_back(a.dst);
    adj[a.dst].push_back(a.src);
  }
  for (std::vector<NodeId>& list : adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return adj;
}

std::vector<NodeId> radial_subgraph(const ATypeGraph& g, NodeId center, std::size_t target,
                                    Rng& rng) {
  assert(g.is_internal(center));
  assert(target >= 1);
  const std::vector<std::vector<NodeId>> adj = undirected_adjacency(g);

  std::vector<char> in_set(g.size(), 0);
  std::vector<NodeId> set{center};
  in_set[center] = 1;

  std::vector<NodeId> frontier;
  while (set.size() < target) {
    frontier.clear();
    for (NodeId member : set)
      for (NodeId nb : adj[member])
        if (!in_set[nb] && g.is_internal(nb)) frontier.push_back(nb);
    std::sort(frontier.begin(), frontier.end());
    frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
    if (frontier.empty()) break;
    const NodeId pick = frontier[rng_index(rng, frontier.size())];
    in_set[pick] = 1;
    set.push_back(pick);
  }
  std::sort(set.begin(), set.end());
  return set;
}

Boundaries boundaries(const ATypeGraph& g, const std::vector<NodeId>& subset) {
  std::vector<char> in_set(g.size(), 0);
  for (NodeId id : subset) in_set[id] = 1;

  std::vector<char> proximal(g.size(), 0), distal(g.size(), 0);
  for (const Arrow& a : g.arrows) {
    if (in_set[a.src] != in_set[a.dst]) {
      if (in_set[a.src]) {
        proximal[a.src] = 1;
        distal[a.dst] = 1;
      } else {
        proximal[a.dst] = 1;
        distal[a.src] = 1;
      }
    }
  }

  Boundaries out;
  for (NodeId id = 0; id < g.size(); ++id) {
    if (proximal[id]) out.proximal.push_back(id);
    if (distal[id]) out.distal.push_back(id);
  }
  return out;
}

namespace {

NodeId draw_source(const ATypeGraph& g, NodeId target, Rng& rng) {
  const std::vector<NodeId> pool = permitted_sources(g, target);
  assert(!pool.empty());
  return pool[rng_index(rng, pool.size())];
}

// repair every node whose indegree fell short, in id order
void repair_deficits(ATypeGraph& g, Rng& rng) {
  const std::vector<int> deg = indegrees(g);
  for (NodeId id = 0; id < g.size(); ++id) {
    const int missing = required_indegree(g.kinds[id]) - deg[id];
    for (int k = 0; k < missing; ++k) g.arrows.push_back({draw_source(g, id, rng), id});
  }
}

ATypeGraph remove_internal_node(const ATypeGraph& parent, NodeId victim, Rng& rng) {
  ATypeGraph child;
  child.input_order = parent.input_order;
  child.output_order = parent.output_order;

  std::vector<NodeId> remap(parent.size());
  for (NodeId id = 0, next = 0; id < parent.size(); ++id)
    remap[id] = (id == victim) ? 0 : next++;
  child.kinds.reserve(parent.size() - 1);
  for (NodeId id = 0; id < parent.size(); ++id)
    if (id != victim) child.kinds.push_back(parent.kinds[id]);
  for (const Arrow& a : parent.arrows)
    if (a.src != victim && a.dst != victim)
      child.arrows.push_back({remap[a.src], remap[a.dst]});

  repair_deficits(child, rng);
  return child;
}

ATypeGraph rewire_arrow(const ATypeGraph& parent, Rng& rng) {
  ATypeGraph child = parent;
  const std::size_t idx = rng_index(rng, child.arrows.size());
  const NodeId target = child.arrows[idx].dst;
  child.arrows.erase(child.arrows.begin() + static_cast<std::ptrdiff_t>(idx));
  child.arrows.push_back({draw_source(child, target, rng), target});
  return child;
}

ATypeGraph add_node(const ATypeGraph& parent, double p_delay, Rng& rng) {
  ATypeGraph child = parent;
  const NodeId fresh = static_cast<NodeId>(child.size());
  child.kinds.push_back(rng_chance(rng, p_delay) ? NodeKind::Delay : NodeKind::Nand);

  const int want = required_indegree(child.kinds[fresh]);
  for (int k = 0; k < want; ++k) child.arrows.push_back({draw_source(child, fresh, rng), fresh});

  // wire the new node's output: a spare-indegree target if one exists,
  // otherwise splice it in place of an existing arrow (indegrees unchanged)
  std::vector<NodeId> spare;
  const std::vector<int> deg = indegrees(child);
  for (NodeId id = 0; id < fresh; ++id)
    if (deg[id] < required_indegree(child.kinds[id])) spare.push_back(id);
  if (!spare.empty()) {
    child.arrows.push_back({fresh, spare[rng_index(rng, spare.size())]});
    return child;
  }

  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < child.arrows.size(); ++i)
    if (child.arrows[i].dst != fresh) candidates.push_back(i);
  assert(!candidates.empty());
  const std::size_t idx = candidates[rng_index(rng, candidates.size())];
  const NodeId target = child.arrows[idx].dst;
  child.arrows.erase(child.arrows.begin() + static_cast<std::ptrdiff_t>(idx));
  child.arrows.push_back({fresh, target});
  return child;
}

}  // namespace

ATypeGraph mutate(const ATypeGraph& parent, double p_delay, Rng& rng) {
  assert(has_canonical_layout(parent));
  enum Move { Remove = 0, Rewire = 1, Add = 2 };

  const bool can_remove = parent.internal_count() >= 2;  // outputs always need
                                                         // an internal source
  const bool can_rewire = !parent.arrows.empty();

  int move = static_cast<int>(rng_below(rng, 3));
  if ((move == Remove && !can_remove) || (move == Rewire && !can_rewire)) {
    std::vector<int> possible;
    if (can_remove) possible.push_back(Remove);
    if (can_rewire) possible.push_back(Rewire);
    possible.push_back(Add);
    // the chosen move is impossible, so fall back to one that is not
    std::vector<int> others;
    for (int m : possible)
      if (m != move) others.push_back(m);
    if (others.empty()) return parent;
    move = others[rng_index(rng, others.size())];
  }

  switch (move) {
    case Remove: {
      const std::vector<NodeId> internals = parent.internal_nodes();
      return remove_internal_node(parent, internals[rng_index(rng, internals.size())], rng);
    }
    case Rewire:
      return rewire_arrow(parent, rng);
    default:
      return add_node(parent, p_delay, rng);
  }
}

std::optional<ATypeGraph> crossover_with_parts(const ATypeGraph& mother,
                                               const std::vector<NodeId>& acceptor,
                                               const ATypeGraph& father,
                                               const std::vector<NodeId>& donor, Rng& rng) {
  assert(has_canonical_layout(mother));
  const std::size_t n = mother.input_dim();
  const std::size_t p = mother.output_dim();
  assert(father.input_dim() == n && father.output_dim() == p);

  const std::vector<NodeId> distal_of_acceptor = boundaries(mother, acceptor).distal;
  const std::vector<NodeId> proximal_of_donor = boundaries(father, donor).proximal;

  std::vector<char> in_acceptor(mother.size(), 0);
  for (NodeId id : acceptor) {
    assert(mother.is_internal(id));
    in_acceptor[id] = 1;
  }
  std::vector<char> in_donor(father.size(), 0);
  for (NodeId id : donor) {
    assert(father.is_internal(id));
    in_donor[id] = 1;
  }

  ATypeGraph child;
  child.input_order = mother.input_order;
  child.output_order = mother.output_order;

  // kept mother nodes first (inputs and outputs keep their ids), donor copy
  // appended after
  std::vector<NodeId> remap_mother(mother.size(), 0);
  for (NodeId id = 0, next = 0; id < mother.size(); ++id) {
    if (in_acceptor[id]) continue;
    remap_mother[id] = next++;
    child.kinds.push_back(mother.kinds[id]);
  }
  const NodeId kept_count = static_cast<NodeId>(child.kinds.size());
  std::vector<NodeId> remap_father(father.size(), 0);
  {
    NodeId next = kept_count;
    for (NodeId id = 0; id < father.size(); ++id) {
      if (!in_donor[id]) continue;
      remap_father[id] = next++;
      child.kinds.push_back(father.kinds[id]);
    }
  }

  for (const Arrow& a : mother.arrows)
    if (!in_acceptor[a.src] && !in_acceptor[a.dst])
      child.arrows.push_back({remap_mother[a.src], remap_mother[a.dst]});
  for (const Arrow& a : father.arrows)
    if (in_donor[a.src] && in_donor[a.dst])
      child.arrows.push_back({remap_father[a.src], remap_father[a.dst]});

  // sources available for seam repair, in child ids
  std::vector<NodeId> donor_gap_sources;  // acceptor's distal boundary, outputs excluded
  for (NodeId id : distal_of_acceptor)
    if (!mother.is_output(id)) donor_gap_sources.push_back(remap_mother[id]);
  std::vector<NodeId> kept_gap_sources;  // donor's proximal boundary
  for (NodeId id : proximal_of_donor) kept_gap_sources.push_back(remap_father[id]);

  const std::vector<int> deg = indegrees(child);
  auto missing = [&](NodeId id) { return required_indegree(child.kinds[id]) - deg[id]; };

  // donor-side gaps first, then the rest of the child
  for (NodeId id = kept_count; id < child.size(); ++id)
    for (int k = 0; k < missing(id); ++k) {
      if (donor_gap_sources.empty()) return std::nullopt;
      child.arrows.push_back(
          {donor_gap_sources[rng_index(rng, donor_gap_sources.size())], id});
    }
  for (NodeId id = 0; id < kept_count; ++id)
    for (int k = 0; k < missing(id); ++k) {
      if (kept_gap_sources.empty()) return std::nullopt;
      child.arrows.push_back({kept_gap_sources[rng_index(rng, kept_gap_sources.size())], id});
    }

  assert(is_valid(child));
  return child;
}

std::optional<ATypeGraph> crossover(const ATypeGraph& mother, const ATypeGraph& father,
                                    double subgraph_cap, Rng& rng) {
  const std::vector<NodeId> mother_internals = mother.internal_nodes();
  const std::vector<NodeId> father_internals = father.internal_nodes();
  assert(!mother_internals.empty() && !father_internals.empty());

  auto pick_subgraph = [&](const ATypeGraph& g, const std::vector<NodeId>& internals) {
    const std::size_t cap = static_cast<std::size_t>(
        std::max(1.0, std::ceil(subgraph_cap * static_cast<double>(internals.size()))));
    const NodeId center = internals[rng_index(rng, internals.size())];
    const std::size_t target = 1 + rng_index(rng, cap);
    return radial_subgraph(g, center, target, rng);
  };

  const std::vector<NodeId> acceptor = pick_subgraph(mother, mother_internals);
  const std::vector<NodeId> donor = pick_subgraph(father, father_internals);
  return crossover_with_parts(mother, acceptor, father, donor, rng);
}

}  // namespace atype
