#include "atype/evolve/selection.hpp"

#include <cassert>
#include <cmath>
#include <vector>

namespace atype {

double parent_weight(double fitness, const SelectionConfig& cfg) {
  return std::exp(-cfg.kappa * fitness);
}

double victim_weight(double fitness, const SelectionConfig& cfg) {
  return std::exp(cfg.kappa * fitness);
}

std::size_t pick_weighted(std::span<const double> weights, Rng& rng) {
  assert(!weights.empty());
  double total = 0.0;
  for (double w : weights) total += w;
  double u = rng_unit(rng) * total;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    u -= weights[i];
    if (u < 0.0) return i;
  }
  return weights.size() - 1;  // rounding spill
}

std::size_t select_parent(std::span<const double> fitness, const SelectionConfig& cfg,
                          Rng& rng) {
  std::vector<double> w(fitness.size());
  for (std::size_t i = 0; i < fitness.size(); ++i) w[i] = parent_weight(fitness[i], cfg);
  return pick_weighted(w, rng);
}

std::size_t select_victim(std::span<const double> fitness, const SelectionConfig& cfg,
                          Rng& rng) {
  std::vector<double> w(fitness.size());
  for (std::size_t i = 0; i < fitness.size(); ++i) w[i] = victim_weight(fitness[i], cfg);
  return pick_weighted(w, rng);
}

}  // namespace atype
