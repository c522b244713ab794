#include "atype/sim/engine.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace atype {

LaneInput::LaneInput(const std::vector<BooleanSequence>& lanes, std::size_t words_hint) {
  assert(!lanes.empty());
  dim_ = lanes[0].dim();
  lanes_ = lanes.size();
  length_ = lanes[0].length();
  for (const BooleanSequence& s : lanes) {
    assert(s.dim() == dim_);
    assert(s.length() == length_);
  }
  assert(length_ >= 1);
  words_ = std::max<std::size_t>(words_hint, (lanes_ + 63) / 64);
  packed_.assign(length_ * dim_ * words_, 0);
  for (std::size_t t = 0; t < length_; ++t)
    for (std::size_t i = 0; i < dim_; ++i) {
      std::uint64_t* w = packed_.data() + (t * dim_ + i) * words_;
      for (std::size_t l = 0; l < lanes_; ++l)
        if (lanes[l].bit(t, i)) w[l >> 6] |= 1ull << (l & 63);
    }
}

BatchSim::BatchSim(const ATypeGraph& g, const LaneInput& input, const StepKernel& kernel)
    : net_(compile(g)), kernel_(&kernel), input_(&input) {
  if (input.dim() != g.input_dim())
    throw std::invalid_argument("input dimension mismatch: network wants " +
                                std::to_string(g.input_dim()) + ", sequence has " +
                                std::to_string(input.dim()));
  const std::size_t total = static_cast<std::size_t>(net_.node_count) * words();
  cur_.assign(total, 0);
  next_.assign(total, 0);
  load_inputs(cur_, 0);
}

void BatchSim::load_inputs(std::vector<std::uint64_t>& buf, std::size_t t) {
  const std::size_t w = words();
  for (std::size_t i = 0; i < net_.input_nodes.size(); ++i) {
    const std::uint64_t* src = input_->pin_words(t, i);
    std::uint64_t* dst = buf.data() + static_cast<std::size_t>(net_.input_nodes[i]) * w;
    std::copy(src, src + w, dst);
  }
}

void BatchSim::step() {
  kernel_->step(net_, cur_.data(), next_.data(), words());
  ++moment_;
  load_inputs(next_, moment_);
  cur_.swap(next_);
}

bool BatchSim::output_bit(std::size_t out_idx, std::size_t lane) const {
  const std::uint64_t* w =
      cur_.data() + static_cast<std::size_t>(net_.output_nodes[out_idx]) * words();
  return (w[lane >> 6] >> (lane & 63)) & 1;
}

const std::uint64_t* BatchSim::output_words(std::size_t out_idx) const {
  return cur_.data() + static_cast<std::size_t>(net_.output_nodes[out_idx]) * words();
}

NetworkState BatchSim::state_of_lane(std::size_t lane) const {
  NetworkState s(net_.node_count);
  for (NodeId id = 0; id < net_.node_count; ++id) {
    const std::uint64_t* w = cur_.data() + static_cast<std::size_t>(id) * words();
    s[id] = (w[lane >> 6] >> (lane & 63)) & 1;
  }
  return s;
}

void BatchSim::flip_node(NodeId id, std::size_t lane) {
  std::uint64_t* w = cur_.data() + static_cast<std::size_t>(id) * words();
  w[lane >> 6] ^= 1ull << (lane & 63);
}

OutputTrace collect_trace(const ATypeGraph& g, const LaneInput& input, std::size_t moments,
                          const StepKernel& kernel) {
  BatchSim sim(g, input, kernel);
  OutputTrace trace;
  trace.moments = moments;
  trace.out_dim = g.output_dim();
  trace.words = sim.words();
  trace.bits.resize(moments * trace.out_dim * trace.words);
  for (std::size_t t = 0; t < moments; ++t) {
    if (t) sim.step();
    std::uint64_t* row = trace.bits.data() + t * trace.out_dim * trace.words;
    for (std::size_t o = 0; o < trace.out_dim; ++o)
      std::copy(sim.output_words(o), sim.output_words(o) + trace.words,
                row + o * trace.words);
  }
  return trace;
}

BooleanSequence run(const AType& a, const BooleanSequence& input, std::size_t out_len) {
  if (input.empty()) throw std::invalid_argument("input sequence is empty");
  if (input.dim() != a.graph.input_dim())
    throw std::invalid_argument("input dimension mismatch");
  BooleanSequence out(a.graph.output_dim(), out_len);
  if (out_len == 0) return out;

  LaneInput lane({input});
  BatchSim sim(a.graph, lane);
  for (std::size_t t = 0; t < a.delay + out_len; ++t) {
    if (t) sim.step();
    if (t >= a.delay)
      for (std::size_t o = 0; o < out.dim(); ++o)
        out.set_bit(t - a.delay, o, sim.output_bit(o, 0));
  }
  return out;
}

BooleanSequence run_clamped(const AType& a, const std::vector<std::uint8_t>& x,
                            std::size_t horizon) {
  BooleanSequence single(x.size());
  single.push_back(x);
  return run(a, single, horizon);
}

bool is_clampable(const AType& a, const std::vector<std::uint8_t>& x, std::size_t horizon) {
  if (horizon < 1) throw std::invalid_argument("horizon must be at least 1");
  const BooleanSequence out = run_clamped(a, x, horizon);
  for (std::size_t t = 1; t < out.length(); ++t)
    for (std::size_t i = 0; i < out.dim(); ++i)
      if (out.bit(t, i) != out.bit(0, i)) return false;
  return true;
}

std::pair<std::uint32_t, std::uint32_t> estimate_delay_range(const ATypeGraph& g, Rng& rng) {
  const std::size_t n = g.input_dim();
  const std::size_t p = g.output_dim();
  const std::uint32_t delay_max = static_cast<std::uint32_t>(g.size());
  const std::size_t probe_len = 2 * g.size() + 16;

  BooleanSequence probe_a = random_sequence(n, probe_len, rng);
  BooleanSequence probe_b = random_sequence(n, probe_len, rng);
  bool first_differ = false;
  for (std::size_t i = 0; i < n && !first_differ; ++i)
    first_differ = probe_a.bit(0, i) != probe_b.bit(0, i);
  if (!first_differ) {
    // force a difference so the divergence point measures percolation
    const std::size_t i = rng_index(rng, n);
    probe_b.set_bit(0, i, !probe_b.bit(0, i));
  }

  LaneInput lanes({probe_a, probe_b});
  BatchSim sim(g, lanes);
  std::ptrdiff_t q = -1;
  for (std::size_t t = 0; t < probe_len; ++t) {
    if (t) sim.step();
    for (std::size_t o = 0; o < p; ++o) {
      if (sim.output_bit(o, 0) != sim.output_bit(o, 1)) {
        q = static_cast<std::ptrdiff_t>(t);
        break;
      }
    }
    if (q >= 0) break;
  }

  std::ptrdiff_t delay_min = q - static_cast<std::ptrdiff_t>(n + p);
  if (delay_min < 0) delay_min = 0;
  if (delay_min > static_cast<std::ptrdiff_t>(delay_max)) delay_min = delay_max;
  return {static_cast<std::uint32_t>(delay_min), delay_max};
}

}  // namespace atype
