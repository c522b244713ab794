#include "atype/gen.hpp"

namespace atype {

std::vector<NodeId> permitted_sources(const ATypeGraph& g, NodeId target) {
  std::vector<NodeId> out;
  const bool target_is_output = g.is_output(target);
  for (NodeId id = 0; id < g.size(); ++id) {
    if (g.is_output(id)) continue;  // outputs have outdegree zero
    if (target_is_output && g.kinds[id] == NodeKind::Input) continue;
    out.push_back(id);
  }
  return out;
}

ATypeGraph random_atype(const GenConfig& cfg, Rng& rng) {
  cfg.check();
  const std::size_t n = cfg.input_dim;
  const std::size_t p = cfg.output_dim;
  const std::size_t size = cfg.size_lo + rng_below(rng, cfg.size_hi - cfg.size_lo + 1);

  ATypeGraph g;
  g.kinds.resize(size);
  for (std::size_t i = 0; i < n; ++i) {
    g.kinds[i] = NodeKind::Input;
    g.input_order.push_back(static_cast<NodeId>(i));
  }
  for (std::size_t i = n; i < size; ++i)
    g.kinds[i] = rng_chance(rng, cfg.p_delay) ? NodeKind::Delay : NodeKind::Nand;
  for (std::size_t i = 0; i < p; ++i) g.output_order.push_back(static_cast<NodeId>(n + i));

  // Wire target-by-target; drawing each node's required sources guarantees
  // the indegree rules by construction.
  const NodeId internal_lo = static_cast<NodeId>(n + p);
  const NodeId node_count = static_cast<NodeId>(size);
  for (NodeId target = static_cast<NodeId>(n); target < node_count; ++target) {
    const bool target_is_output = target < internal_lo;
    // internal targets accept inputs and internals (self included);
    // output targets accept internals only
    const std::size_t choices = target_is_output ? size - internal_lo : size - p;
    if (choices == 0) throw GenError("no permitted source for a node");
    const int want = required_indegree(g.kinds[target]);
    for (int k = 0; k < want; ++k) {
      const std::size_t pick = rng_below(rng, choices);
      NodeId src;
      if (target_is_output) {
        src = static_cast<NodeId>(internal_lo + pick);
      } else {
        // skip over the output id block [n, n+p)
        src = pick < n ? static_cast<NodeId>(pick) : static_cast<NodeId>(pick + p);
      }
      g.arrows.push_back({src, target});
    }
  }
  return g;
}

}  // namespace atype
