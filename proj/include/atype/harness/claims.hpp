#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "atype/graph.hpp"
#include "atype/rng.hpp"
#include "atype/sequence.hpp"
#include "atype/tasks.hpp"

namespace atype {

// Blind-sampling experiments behind the delay-node claims: nand-only
// networks are drawn at random and tested for representing a columnwise
// function at any delay.
enum class ClaimKind {
  OddDelayIdentity,   // sizes [3,20], columnwise 1-identity, tally by the
                      // parity of the solving delay
  XorWithoutDelays,   // sizes [8,40], columnwise xor
};

const char* to_string(ClaimKind c);
std::optional<ClaimKind> parse_claim(const std::string& name);

struct ClaimSummary {
  ClaimKind which = ClaimKind::OddDelayIdentity;
  std::uint64_t attempts = 0;
  std::uint64_t solutions = 0;
  std::uint64_t even_delay_solutions = 0;
  std::uint64_t odd_delay_solutions = 0;
};

std::string format_summary(const ClaimSummary& s);

// Every delay d in [0, node count] for which the network maps the input to
// the columnwise image of `base` exactly. Simulation stops as soon as every
// candidate delay has been contradicted, which is almost immediate for a
// random network.
std::vector<std::uint32_t> columnwise_solution_delays(const ATypeGraph& g,
                                                      const BoolFn& base,
                                                      const BooleanSequence& input);

// `attempts` random networks, each screened against a fresh random input
// sequence of test_len vectors.
ClaimSummary claim_search(ClaimKind which, std::uint64_t attempts, Rng& rng,
                          std::size_t test_len = 10000);

}  // namespace atype
