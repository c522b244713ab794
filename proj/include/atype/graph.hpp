#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace atype {

using NodeId = std::uint32_t;

enum class NodeKind : std::uint8_t { Input, Nand, Delay };

const char* to_string(NodeKind k);

// Required indegree by firing rule: inputs are driven externally, a nand
// reads two sources, a delay buffers one.
inline int required_indegree(NodeKind k) {
  switch (k) {
    case NodeKind::Input: return 0;
    case NodeKind::Nand: return 2;
    case NodeKind::Delay: return 1;
  }
  return 0;
}

struct Arrow {
  NodeId src = 0;
  NodeId dst = 0;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

// Directed multigraph of typed nodes. Node ids are dense indices into
// `kinds`; parallel arrows and loops are repeated entries in `arrows`.
// Arrow order carries no meaning (NAND is symmetric) but is preserved so
// that serialization is deterministic.
//
// Output nodes are the members of `output_order`; any other non-input node
// is internal, whatever its outdegree (dead-end junk nodes are legal).
struct ATypeGraph {
  std::vector<NodeKind> kinds;
  std::vector<Arrow> arrows;
  std::vector<NodeId> input_order;
  std::vector<NodeId> output_order;

  std::size_t size() const { return kinds.size(); }
  std::size_t input_dim() const { return input_order.size(); }
  std::size_t output_dim() const { return output_order.size(); }

  bool is_output(NodeId id) const;
  bool is_internal(NodeId id) const {
    return kinds[id] != NodeKind::Input && !is_output(id);
  }
  std::size_t internal_count() const;
  std::vector<NodeId> internal_nodes() const;

  friend bool operator==(const ATypeGraph&, const ATypeGraph&) = default;
};

// A network plus the number of moments to wait before reading its outputs.
struct AType {
  ATypeGraph graph;
  std::uint32_t delay = 0;
  friend bool operator==(const AType&, const AType&) = default;
};

enum class ViolationKind {
  DanglingNodeId,
  WrongIndegree,
  EmptyInputOrder,
  EmptyOutputOrder,
  InputOrderMismatch,
  DuplicateOutput,
  OutputIsInput,
  OutputHasOutdegree,
  InputFeedsOutput,
};

struct Violation {
  ViolationKind kind;
  NodeId node = 0;   // offending node where applicable
  Arrow arrow{};     // offending arrow where applicable
  std::string message;
};

// Checks every structural rule; returns one descriptor per breach, empty
// means valid. Pure: no ordering or randomness involved.
std::vector<Violation> validate(const ATypeGraph& g);
bool is_valid(const ATypeGraph& g);

std::vector<int> indegrees(const ATypeGraph& g);
std::vector<int> outdegrees(const ATypeGraph& g);

// Canonical id layout used by the generator and required by the evolution
// operators: inputs occupy ids [0, n), outputs [n, n+p), internals the rest,
// with input_order/output_order equal to those ranges in order. Keeping
// input/output ids fixed lets operators add and remove internal nodes
// without disturbing either order.
bool has_canonical_layout(const ATypeGraph& g);

}  // namespace atype
