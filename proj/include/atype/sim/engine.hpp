#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "atype/graph.hpp"
#include "atype/rng.hpp"
#include "atype/sequence.hpp"
#include "atype/sim/compiled.hpp"
#include "atype/sim/kernels.hpp"

namespace atype {

// Per-node Boolean states at one moment, indexed by node id.
using NetworkState = std::vector<std::uint8_t>;

// Input streams for a batch of lanes: every lane is an independent input
// sequence of the same dimension and length. Input words are packed once per
// moment so the simulation loop only copies. After the sequences run out the
// final vector is held (shunting).
class LaneInput {
 public:
  LaneInput(const std::vector<BooleanSequence>& lanes, std::size_t words_hint = 0);

  std::size_t dim() const { return dim_; }
  std::size_t lanes() const { return lanes_; }
  std::size_t words() const { return words_; }
  std::size_t length() const { return length_; }

  // words for input pin `i` at moment `t`, shunted past the end
  const std::uint64_t* pin_words(std::size_t t, std::size_t i) const {
    const std::size_t m = t < length_ ? t : length_ - 1;
    return packed_.data() + (m * dim_ + i) * words_;
  }

 private:
  std::size_t dim_ = 0;
  std::size_t lanes_ = 0;
  std::size_t words_ = 0;
  std::size_t length_ = 0;
  std::vector<std::uint64_t> packed_;
};

// Synchronous lane-batched simulator. All node updates for one moment are
// computed from a frozen copy of the previous moment (double buffering), so
// update order never matters. The state after construction is moment 0:
// every non-input node zero, input nodes loaded from each lane's first
// vector. step() is Markov in the state, which is what makes split runs
// equal to one long run.
class BatchSim {
 public:
  BatchSim(const ATypeGraph& g, const LaneInput& input,
           const StepKernel& kernel = default_kernel());

  std::size_t moment() const { return moment_; }
  std::size_t words() const { return input_->words(); }
  std::size_t lanes() const { return input_->lanes(); }
  std::size_t output_dim() const { return net_.output_nodes.size(); }

  void step();

  bool output_bit(std::size_t out_idx, std::size_t lane) const;
  const std::uint64_t* output_words(std::size_t out_idx) const;
  const std::uint64_t* node_words(NodeId id) const {
    return cur_.data() + static_cast<std::size_t>(id) * words();
  }

  NetworkState state_of_lane(std::size_t lane) const;
  void flip_node(NodeId id, std::size_t lane);

 private:
  void load_inputs(std::vector<std::uint64_t>& buf, std::size_t t);

  CompiledNet net_;
  const StepKernel* kernel_;
  const LaneInput* input_;
  std::size_t moment_ = 0;
  std::vector<std::uint64_t> cur_, next_;
};

// Output-node words for moments [0, moments), laid out
// [moment][output index][word].
struct OutputTrace {
  std::size_t moments = 0;
  std::size_t out_dim = 0;
  std::size_t words = 0;
  std::vector<std::uint64_t> bits;

  const std::uint64_t* at(std::size_t t, std::size_t out_idx) const {
    return bits.data() + (t * out_dim + out_idx) * words;
  }
};

OutputTrace collect_trace(const ATypeGraph& g, const LaneInput& input, std::size_t moments,
                          const StepKernel& kernel = default_kernel());

// Drives the network with `input` (shunting the final vector once the
// sequence is exhausted) and returns the out_len output vectors read from
// moment delay onward. Throws std::invalid_argument on a dimension mismatch
// or an empty input.
BooleanSequence run(const AType& a, const BooleanSequence& input, std::size_t out_len);

// run() with the single-vector sequence (x): inputs clamped to x throughout.
BooleanSequence run_clamped(const AType& a, const std::vector<std::uint8_t>& x,
                            std::size_t horizon);

// True iff every vector run_clamped collects over the horizon is the same.
bool is_clampable(const AType& a, const std::vector<std::uint8_t>& x, std::size_t horizon);

// Probes the graph at delay zero with two independent random input streams
// of length 2N + 16 whose first vectors are forced to differ, and reads off
// where the output streams first diverge. The window below that point cannot
// be the percolation time, so it bounds the delay from below; the node count
// bounds it from above.
std::pair<std::uint32_t, std::uint32_t> estimate_delay_range(const ATypeGraph& g, Rng& rng);

}  // namespace atype
