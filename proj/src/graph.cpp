#include "atype/graph.hpp"

#include <algorithm>

namespace atype {

const char* to_string(NodeKind k) {
  switch (k) {
    case NodeKind::Input: return "INPUT";
    case NodeKind::Nand: return "NAND";
    case NodeKind::Delay: return "DELAY";
  }
  return "?";
}

bool ATypeGraph::is_output(NodeId id) const {
  return std::find(output_order.begin(), output_order.end(), id) != output_order.end();
}

std::size_t ATypeGraph::internal_count() const {
  std::size_t n_inputs = 0;
  for (NodeKind k : kinds)
    if (k == NodeKind::Input) ++n_inputs;
  return size() - n_inputs - output_order.size();
}

std::vector<NodeId> ATypeGraph::internal_nodes() const {
  std::vector<NodeId> out;
  for (NodeId id = 0; id < size(); ++id)
    if (is_internal(id)) out.push_back(id);
  return out;
}

std::vector<int> indegrees(const ATypeGraph& g) {
  std::vector<int> deg(g.size(), 0);
  for (const Arrow& a : g.arrows)
    if (a.dst < g.size()) ++deg[a.dst];
  return deg;
}

std::vector<int> outdegrees(const ATypeGraph& g) {
  std::vector<int> deg(g.size(), 0);
  for (const Arrow& a : g.arrows)
    if (a.src < g.size()) ++deg[a.src];
  return deg;
}

namespace {

std::string node_str(NodeId id) { return "node " + std::to_string(id); }

std::string arrow_str(const Arrow& a) {
  return "arrow " + std::to_string(a.src) + "->" + std::to_string(a.dst);
}

}  // namespace

std::vector<Violation> validate(const ATypeGraph& g) {
  std::vector<Violation> out;
  const std::size_t n = g.size();

  bool ids_ok = true;
  auto check_id = [&](NodeId id, const std::string& where) {
    if (id >= n) {
      out.push_back({ViolationKind::DanglingNodeId, id, {},
                     where + " references unknown node " + std::to_string(id)});
      ids_ok = false;
    }
  };
  for (const Arrow& a : g.arrows) {
    check_id(a.src, arrow_str(a));
    check_id(a.dst, arrow_str(a));
  }
  for (NodeId id : g.input_order) check_id(id, "input order");
  for (NodeId id : g.output_order) check_id(id, "output order");
  if (!ids_ok) return out;  // the remaining checks index by id

  const std::vector<int> in_deg = indegrees(g);
  const std::vector<int> out_deg = outdegrees(g);

  for (NodeId id = 0; id < n; ++id) {
    const int want = required_indegree(g.kinds[id]);
    if (in_deg[id] != want)
      out.push_back({ViolationKind::WrongIndegree, id, {},
                     node_str(id) + " (" + to_string(g.kinds[id]) + ") has indegree " +
                         std::to_string(in_deg[id]) + ", requires " + std::to_string(want)});
  }

  if (g.input_order.empty())
    out.push_back({ViolationKind::EmptyInputOrder, 0, {}, "input order is empty"});
  if (g.output_order.empty())
    out.push_back({ViolationKind::EmptyOutputOrder, 0, {}, "output order is empty"});

  // input_order must list each input-kind node exactly once and nothing else
  {
    std::vector<int> seen(n, 0);
    for (NodeId id : g.input_order) ++seen[id];
    for (NodeId id = 0; id < n; ++id) {
      const bool is_in = g.kinds[id] == NodeKind::Input;
      if (is_in && seen[id] != 1)
        out.push_back({ViolationKind::InputOrderMismatch, id, {},
                       node_str(id) + " is an input node listed " + std::to_string(seen[id]) +
                           " times in input order"});
      if (!is_in && seen[id] != 0)
        out.push_back({ViolationKind::InputOrderMismatch, id, {},
                       node_str(id) + " appears in input order but is not an input node"});
    }
  }

  {
    std::vector<int> seen(n, 0);
    for (NodeId id : g.output_order) {
      if (++seen[id] == 2)
        out.push_back({ViolationKind::DuplicateOutput, id, {},
                       node_str(id) + " listed twice in output order"});
      if (g.kinds[id] == NodeKind::Input)
        out.push_back({ViolationKind::OutputIsInput, id, {},
                       node_str(id) + " is an input node used as an output"});
      if (out_deg[id] > 0)
        out.push_back({ViolationKind::OutputHasOutdegree, id, {},
                       node_str(id) + " is an output node with outdegree " +
                           std::to_string(out_deg[id])});
    }
    for (const Arrow& a : g.arrows)
      if (g.kinds[a.src] == NodeKind::Input && seen[a.dst] > 0)
        out.push_back({ViolationKind::InputFeedsOutput, a.src, a,
                       arrow_str(a) + " runs from an input node to an output node"});
  }

  return out;
}

bool is_valid(const ATypeGraph& g) { return validate(g).empty(); }

bool has_canonical_layout(const ATypeGraph& g) {
  const std::size_t n = g.input_dim();
  const std::size_t p = g.output_dim();
  if (n + p > g.size()) return false;
  for (std::size_t i = 0; i < n; ++i)
    if (g.input_order[i] != i || g.kinds[i] != NodeKind::Input) return false;
  for (std::size_t i = 0; i < p; ++i)
    if (g.output_order[i] != n + i || g.kinds[n + i] == NodeKind::Input) return false;
  for (std::size_t i = n + p; i < g.size(); ++i)
    if (g.kinds[i] == NodeKind::Input) return false;
  return true;
}

}  // namespace atype
