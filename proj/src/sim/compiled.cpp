#include "atype/sim/compiled.hpp"

#include <cassert>

namespace atype {

CompiledNet compile(const ATypeGraph& g) {
  CompiledNet net;
  net.node_count = static_cast<std::uint32_t>(g.size());
  net.input_nodes = g.input_order;
  net.output_nodes = g.output_order;

  std::vector<NodeId> first(g.size(), 0), second(g.size(), 0);
  std::vector<int> seen(g.size(), 0);
  for (const Arrow& a : g.arrows) {
    if (seen[a.dst] == 0) first[a.dst] = a.src;
    else second[a.dst] = a.src;
    ++seen[a.dst];
  }

  for (NodeId id = 0; id < g.size(); ++id) {
    switch (g.kinds[id]) {
      case NodeKind::Input:
        assert(seen[id] == 0);
        break;
      case NodeKind::Nand:
        assert(seen[id] == 2);
        net.ops.push_back({id, first[id], second[id], false});
        break;
      case NodeKind::Delay:
        assert(seen[id] == 1);
        net.ops.push_back({id, first[id], first[id], true});
        break;
    }
  }
  return net;
}

}  // namespace atype
