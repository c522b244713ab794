#pragma once

#include <stdexcept>

#include "atype/graph.hpp"
#include "atype/rng.hpp"

namespace atype {

struct GenError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Random-network parameters. The floor n + p + 1 is forced by the rules:
// inputs may not feed outputs directly, so at least one internal node must
// sit between them.
struct GenConfig {
  std::size_t size_lo = 0;
  std::size_t size_hi = 0;
  std::size_t input_dim = 0;
  std::size_t output_dim = 0;
  double p_delay = 0.2;

  void check() const {
    if (input_dim < 1 || output_dim < 1) throw GenError("need at least one input and output");
    if (size_lo > size_hi) throw GenError("size_lo exceeds size_hi");
    if (size_lo < input_dim + output_dim + 1)
      throw GenError("size_lo below input_dim + output_dim + 1");
    if (p_delay < 0.0 || p_delay > 1.0) throw GenError("p_delay outside [0,1]");
  }
};

// Uniform size in [size_lo, size_hi]; every non-input node is a delay with
// probability p_delay, else a nand; each non-input node draws its required
// sources uniformly from the nodes permitted to feed it (any non-output node
// for internal targets, internal nodes for output targets). Both sources of
// a nand may coincide. Emits the canonical id layout.
ATypeGraph random_atype(const GenConfig& cfg, Rng& rng);

// Sources allowed to feed `target`. Shared with the mutation and crossover
// operators so all of them respect the same wiring rules.
std::vector<NodeId> permitted_sources(const ATypeGraph& g, NodeId target);

}  // namespace atype
