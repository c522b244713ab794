#include "atype/evolve/fitness.hpp"

#include <algorithm>
#include <stdexcept>

namespace atype {

double normalized_hamming(const BooleanSequence& a, const BooleanSequence& b) {
  if (a.dim() != b.dim() || a.length() != b.length())
    throw std::invalid_argument("normalized_hamming: shape mismatch");
  const std::size_t total = a.dim() * a.length();
  if (total == 0) return 0.0;
  std::size_t diff = 0;
  for (std::size_t t = 0; t < a.length(); ++t)
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (a.bit(t, i) != b.bit(t, i)) ++diff;
  return static_cast<double>(diff) / static_cast<double>(total);
}

double size_penalized_fitness(double distance, std::size_t size, const FitnessConfig& cfg) {
  if (size <= cfg.penalty_bound) return distance;
  const double penalized =
      distance * cfg.pressure_gradient *
      static_cast<double>(size - cfg.penalty_bound + 1);
  return std::min(1.0, penalized);
}

}  // namespace atype
