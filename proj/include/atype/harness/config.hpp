#pragma once

#include <stdexcept>
#include <string>

#include "atype/harness/experiment.hpp"

namespace atype {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Experiment description file: line-oriented `key = value` entries under
// `[experiment]`, `[task.<name>]` and `[algo.<name>]` sections. Blank lines
// and lines starting with '#' are skipped; unknown sections or keys are
// errors.
//
//   [experiment]   seed, trials, out, threads, timing, population, p_delay,
//                  pressure, kappa, subgraph_cap, crossovers_per_gen,
//                  mutations_per_gen
//   [task.T]       n (list like "1,2,5-7"; required), max_attempts,
//                  size_lo, size_hi
//   [algo.A]       trials, max_attempts, population, crossovers_per_gen,
//                  mutations_per_gen
Experiment parse_experiment_config(const std::string& text);
Experiment load_experiment_config(const std::string& path);

}  // namespace atype
