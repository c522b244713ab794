#include "atype/harness/tables.hpp"

#include <stdexcept>

namespace atype {

const char* to_string(TaskKind t) {
  switch (t) {
    case TaskKind::Identity: return "identity";
    case TaskKind::Multiplexer: return "multiplexer";
    case TaskKind::Carry: return "carry";
  }
  return "?";
}

std::optional<TaskKind> parse_task(const std::string& name) {
  if (name == "identity") return TaskKind::Identity;
  if (name == "multiplexer") return TaskKind::Multiplexer;
  if (name == "carry") return TaskKind::Carry;
  return std::nullopt;
}

std::uint64_t task_code(TaskKind t) {
  switch (t) {
    case TaskKind::Identity: return 1;
    case TaskKind::Multiplexer: return 2;
    case TaskKind::Carry: return 3;
  }
  return 0;
}

std::uint64_t algo_code(Algorithm a) {
  switch (a) {
    case Algorithm::Blind: return 1;
    case Algorithm::MutationOnly: return 2;
    case Algorithm::Genetic: return 3;
    case Algorithm::HeadlessChicken: return 4;
  }
  return 0;
}

TaskSetup task_setup(TaskKind task, std::size_t n) {
  if (n < 1) throw std::invalid_argument("task parameter n must be positive");
  TaskSetup setup;
  switch (task) {
    case TaskKind::Identity:
      setup.target = identity_concept(n);
      setup.size_lo = 3 * n;
      setup.size_hi = 4 * n;
      setup.max_attempts = 1000000000ull;
      break;
    case TaskKind::Multiplexer: {
      if (n < 2 || n > 5)
        throw std::invalid_argument("multiplexer size window is defined for n in [2,5]");
      static constexpr std::size_t lower[] = {7, 13, 18, 24};
      setup.target = multiplexer_concept(n);
      setup.size_lo = lower[n - 2];
      setup.size_hi = setup.size_lo + 4;
      setup.max_attempts = 100000000ull;
      break;
    }
    case TaskKind::Carry:
      setup.target = carry_concept(n);
      setup.size_lo = 2 * n + 1;
      setup.size_hi = 2 * n + 3;
      setup.max_attempts = 1000000000ull;
      break;
  }
  return setup;
}

}  // namespace atype
