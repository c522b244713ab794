#include "atype/evolve/candidate.hpp"

#include <bit>
#include <cassert>

namespace atype {

namespace {

std::vector<BooleanSequence> training_inputs(const TrainingSet& training) {
  std::vector<BooleanSequence> lanes;
  lanes.reserve(training.size());
  for (const TrainingExample& ex : training) lanes.push_back(ex.input);
  return lanes;
}

}  // namespace

TrainingBatch::TrainingBatch(const ConceptFunction& target, const TrainingSet& training)
    : lanes_(training_inputs(training)) {
  assert(!training.empty());
  out_len_ = training[0].expected.length();
  out_dim_ = target.output_dim;
  for (const TrainingExample& ex : training) {
    assert(ex.expected.length() == out_len_);
    assert(ex.expected.dim() == out_dim_);
  }
  total_bits_ = training.size() * out_len_ * out_dim_;

  const std::size_t w = words();
  expected_.assign(out_len_ * out_dim_ * w, 0);
  for (std::size_t l = 0; l < training.size(); ++l)
    for (std::size_t t = 0; t < out_len_; ++t)
      for (std::size_t o = 0; o < out_dim_; ++o)
        if (training[l].expected.bit(t, o))
          expected_[(t * out_dim_ + o) * w + (l >> 6)] |= 1ull << (l & 63);

  mask_.assign(w, ~0ull);
  if (training.size() % 64) mask_[w - 1] = (1ull << (training.size() % 64)) - 1;
}

CandidateSolution Evaluator::evaluate(ATypeGraph graph, Rng& rng) {
  CandidateSolution cand;
  const auto [dmin, dmax] = estimate_delay_range(graph, rng);
  cand.delay_min = dmin;
  cand.delay_max = dmax;

  const TrainingBatch& batch = *batch_;
  const std::size_t words = batch.words();
  const std::size_t out_dim = batch.out_dim();
  const std::size_t out_len = batch.out_len();
  const std::size_t moments = dmax + out_len;

  // one pass at delay zero; every delay reads its own window of the trace
  trace_.assign(moments * out_dim * words, 0);
  {
    BatchSim sim(graph, batch.lanes());
    for (std::size_t t = 0; t < moments; ++t) {
      if (t) sim.step();
      std::uint64_t* row = trace_.data() + t * out_dim * words;
      for (std::size_t o = 0; o < out_dim; ++o) {
        const std::uint64_t* src = sim.output_words(o);
        for (std::size_t w = 0; w < words; ++w) row[o * words + w] = src[w];
      }
    }
  }

  cand.fitness_by_delay.resize(dmax - dmin + 1);
  for (std::uint32_t d = dmin; d <= dmax; ++d) {
    std::size_t diff = 0;
    for (std::size_t t = 0; t < out_len; ++t) {
      const std::uint64_t* got = trace_.data() + (d + t) * out_dim * words;
      for (std::size_t o = 0; o < out_dim; ++o) {
        const std::uint64_t* want = batch.expected(t, o);
        for (std::size_t w = 0; w < words; ++w)
          diff += std::popcount((got[o * words + w] ^ want[w]) & batch.lane_mask(w));
      }
    }
    const double distance = static_cast<double>(diff) / static_cast<double>(batch.total_bits());
    cand.fitness_by_delay[d - dmin] = size_penalized_fitness(distance, graph.size(), fitness_);
  }

  cand.best_delay = dmin;
  cand.best_fitness = cand.fitness_by_delay[0];
  for (std::uint32_t d = dmin + 1; d <= dmax; ++d)
    if (cand.fitness_by_delay[d - dmin] < cand.best_fitness) {
      cand.best_fitness = cand.fitness_by_delay[d - dmin];
      cand.best_delay = d;
    }

  cand.graph = std::move(graph);
  return cand;
}

}  // namespace atype
