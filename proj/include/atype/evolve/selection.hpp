#pragma once

#include <span>

#include "atype/rng.hpp"

namespace atype {

// Exponential fitness weighting. kappa sets the selection pressure: a
// fitness gap of g changes the odds by exp(kappa * g).
struct SelectionConfig {
  double kappa = 8.0;
};

double parent_weight(double fitness, const SelectionConfig& cfg);  // exp(-kappa f)
double victim_weight(double fitness, const SelectionConfig& cfg);  // exp(+kappa f)

// Index drawn with probability proportional to its weight.
std::size_t pick_weighted(std::span<const double> weights, Rng& rng);

// Fitter members are more likely parents, less fit members more likely
// victims.
std::size_t select_parent(std::span<const double> fitness, const SelectionConfig& cfg,
                          Rng& rng);
std::size_t select_victim(std::span<const double> fitness, const SelectionConfig& cfg,
                          Rng& rng);

}  // namespace atype
