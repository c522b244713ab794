#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "atype/evolve/candidate.hpp"
#include "atype/evolve/selection.hpp"
#include "atype/gen.hpp"
#include "atype/tasks.hpp"

namespace atype {

enum class Algorithm { Blind, MutationOnly, Genetic, HeadlessChicken };

const char* to_string(Algorithm a);
std::optional<Algorithm> parse_algorithm(const std::string& name);

struct SearchConfig {
  Algorithm algorithm = Algorithm::Genetic;
  std::size_t population_size = 100;
  std::size_t crossovers_per_gen = 1;
  std::size_t mutations_per_gen = 1;
  std::uint64_t max_attempts = 1000000000ull;
  GenConfig gen;
  FitnessConfig fitness;
  SelectionConfig selection;
  double subgraph_cap = 0.8;
  std::size_t crossover_retries = 8;  // degenerate-boundary retries before
                                      // the crossover falls back to mutation
  std::uint64_t seed = 0;
  ExactnessParams exactness;
};

struct SearchResult {
  bool solved = false;
  std::uint64_t attempts = 0;
  std::optional<AType> solution;  // the exact solution, or the fittest
                                  // member when the search ran out
  double best_fitness = 1.0;
  double wall_ms = 0.0;
};

// Steady-state search for a network representing the concept.
//
// Every constructed graph counts as one attempt, the initial population
// included. A candidate that reaches fitness zero is immediately screened
// with verify_exact; passing ends the search, failing leaves it in the
// population flagged so the screen does not re-fire. Blind search skips the
// population machinery, mutation-only is the generational loop with zero
// crossovers, and the headless-chicken variant swaps one crossover parent
// for a fresh random network of the same size.
SearchResult run_search(const SearchConfig& cfg, const ConceptFunction& target,
                        const TrainingSet& training);

}  // namespace atype
