#pragma once

#include <cstddef>

#include "atype/sequence.hpp"

namespace atype {

// Lower is fitter; 0 means every training bit matched.
struct FitnessConfig {
  std::size_t penalty_bound = 0;   // size above which the penalty kicks in
  double pressure_gradient = 0.5;  // slope of the oversize penalty
};

// Fraction of differing bits. Throws std::invalid_argument on shape mismatch.
double normalized_hamming(const BooleanSequence& a, const BooleanSequence& b);

// Piecewise fitness: the raw training distance d while the network is within
// the penalty bound, then min(1, d * m * (size - u + 1)).
double size_penalized_fitness(double distance, std::size_t size, const FitnessConfig& cfg);

}  // namespace atype
