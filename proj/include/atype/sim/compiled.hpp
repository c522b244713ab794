#pragma once

#include <cstdint>
#include <vector>

#include "atype/graph.hpp"

namespace atype {

// Flattened update plan for a valid graph: one op per non-input node, with
// the source ids resolved. A nand with a doubled arrow reads the same source
// twice; a delay stores its single source in both slots so kernels need no
// branch on arity.
struct CompiledNet {
  struct Op {
    NodeId dst;
    NodeId a;
    NodeId b;
    bool is_delay;
  };

  std::uint32_t node_count = 0;
  std::vector<NodeId> input_nodes;
  std::vector<NodeId> output_nodes;
  std::vector<Op> ops;
};

// Requires a graph that passes validate(); indegree rules are assumed.
CompiledNet compile(const ATypeGraph& g);

}  // namespace atype
