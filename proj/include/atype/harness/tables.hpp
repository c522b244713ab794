#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "atype/evolve/search.hpp"
#include "atype/gen.hpp"
#include "atype/tasks.hpp"

namespace atype {

enum class TaskKind { Identity, Multiplexer, Carry };

const char* to_string(TaskKind t);
std::optional<TaskKind> parse_task(const std::string& name);

// Stable codes for seed derivation; appending new tasks or algorithms never
// renumbers existing ones.
std::uint64_t task_code(TaskKind t);
std::uint64_t algo_code(Algorithm a);

// Benchmark defaults per task family: initial size window and attempt cap.
//
//   identity(n)     sizes [3n, 4n],           cap 1e9, n >= 1
//   multiplexer(n)  sizes [l(n), l(n)+4] with l = {7, 13, 18, 24} for
//                   n = 2..5 (no window is defined outside that range),
//                   cap 1e8
//   carry(n)        sizes [2n+1, 2n+3],       cap 1e9, n >= 1
struct TaskSetup {
  ConceptFunction target;
  std::size_t size_lo = 0;
  std::size_t size_hi = 0;
  std::uint64_t max_attempts = 0;
};

TaskSetup task_setup(TaskKind task, std::size_t n);

}  // namespace atype
