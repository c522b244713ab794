#pragma once

#include <cstdint>
#include <vector>

#include "atype/evolve/fitness.hpp"
#include "atype/graph.hpp"
#include "atype/rng.hpp"
#include "atype/sim/engine.hpp"
#include "atype/tasks.hpp"

namespace atype {

// One population member: a graph together with its estimated delay window
// and the fitness of every (graph, delay) pairing in it.
struct CandidateSolution {
  ATypeGraph graph;
  std::uint32_t delay_min = 0;
  std::uint32_t delay_max = 0;
  std::vector<double> fitness_by_delay;  // index 0 = delay_min
  double best_fitness = 1.0;
  std::uint32_t best_delay = 0;          // smallest delay reaching best_fitness
  bool exactness_checked = false;        // a zero-fitness member that failed the
                                         // exactness oracle is not re-checked

  double fitness_at(std::uint32_t delay) const {
    return fitness_by_delay[delay - delay_min];
  }
};

// Training set packed into simulation lanes, with the expected output bits
// as lane words. Built once per search; evaluating a candidate then needs a
// single simulation at delay zero, because shifting the read window by the
// delay is the only effect the delay has.
class TrainingBatch {
 public:
  TrainingBatch(const ConceptFunction& target, const TrainingSet& training);

  const LaneInput& lanes() const { return lanes_; }
  std::size_t out_len() const { return out_len_; }
  std::size_t out_dim() const { return out_dim_; }
  std::size_t words() const { return lanes_.words(); }
  std::size_t total_bits() const { return total_bits_; }

  const std::uint64_t* expected(std::size_t t, std::size_t o) const {
    return expected_.data() + (t * out_dim_ + o) * words();
  }
  std::uint64_t lane_mask(std::size_t w) const { return mask_[w]; }

 private:
  LaneInput lanes_;
  std::size_t out_len_ = 0;
  std::size_t out_dim_ = 0;
  std::size_t total_bits_ = 0;
  std::vector<std::uint64_t> expected_;
  std::vector<std::uint64_t> mask_;
};

// Estimates the delay window, simulates once, and scores every delay in the
// window. Scratch buffers live in the evaluator so tight search loops do not
// reallocate.
class Evaluator {
 public:
  Evaluator(const TrainingBatch& batch, const FitnessConfig& fitness)
      : batch_(&batch), fitness_(fitness) {}

  CandidateSolution evaluate(ATypeGraph graph, Rng& rng);

 private:
  const TrainingBatch* batch_;
  FitnessConfig fitness_;
  std::vector<std::uint64_t> trace_;
};

}  // namespace atype
