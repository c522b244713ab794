#include "atype/harness/claims.hpp"

#include <sstream>

#include "atype/gen.hpp"
#include "atype/sim/engine.hpp"

namespace atype {

const char* to_string(ClaimKind c) {
  switch (c) {
    case ClaimKind::OddDelayIdentity: return "odd_delay_identity";
    case ClaimKind::XorWithoutDelays: return "xor_without_delays";
  }
  return "?";
}

std::optional<ClaimKind> parse_claim(const std::string& name) {
  if (name == "odd_delay_identity") return ClaimKind::OddDelayIdentity;
  if (name == "xor_without_delays") return ClaimKind::XorWithoutDelays;
  return std::nullopt;
}

std::string format_summary(const ClaimSummary& s) {
  std::ostringstream out;
  out << "claim=" << to_string(s.which) << " attempts=" << s.attempts
      << " solutions=" << s.solutions;
  if (s.which == ClaimKind::OddDelayIdentity)
    out << " even_delay=" << s.even_delay_solutions
        << " odd_delay=" << s.odd_delay_solutions;
  return out.str();
}

std::vector<std::uint32_t> columnwise_solution_delays(const ATypeGraph& g,
                                                      const BoolFn& base,
                                                      const BooleanSequence& input) {
  const std::size_t len = input.length();
  const std::size_t p = base.out_dim;
  const std::uint32_t max_delay = static_cast<std::uint32_t>(g.size());

  BooleanSequence expected(p, len);
  {
    std::vector<std::uint8_t> y;
    for (std::size_t t = 0; t < len; ++t) {
      y = base.eval(input.at(t));
      for (std::size_t o = 0; o < p; ++o) expected.set_bit(t, o, y[o] != 0);
    }
  }

  std::vector<std::uint32_t> alive;
  for (std::uint32_t d = 0; d <= max_delay; ++d) alive.push_back(d);

  LaneInput lane({input});
  BatchSim sim(g, lane);
  const std::size_t last = max_delay + len;
  for (std::size_t t = 0; t < last && !alive.empty(); ++t) {
    if (t) sim.step();
    std::size_t keep = 0;
    for (std::size_t i = 0; i < alive.size(); ++i) {
      const std::uint32_t d = alive[i];
      bool ok = true;
      if (t >= d && t - d < len) {
        for (std::size_t o = 0; o < p && ok; ++o)
          ok = sim.output_bit(o, 0) == expected.bit(t - d, o);
      }
      if (ok) alive[keep++] = d;
    }
    alive.resize(keep);
  }
  return alive;  // every survivor was compared at all len positions
}

ClaimSummary claim_search(ClaimKind which, std::uint64_t attempts, Rng& rng,
                          std::size_t test_len) {
  ClaimSummary summary;
  summary.which = which;

  GenConfig gen;
  gen.p_delay = 0.0;
  BoolFn base;
  if (which == ClaimKind::OddDelayIdentity) {
    base = identity_fn(1);
    gen.input_dim = 1;
    gen.output_dim = 1;
    gen.size_lo = 3;
    gen.size_hi = 20;
  } else {
    base = xor_fn();
    gen.input_dim = 2;
    gen.output_dim = 1;
    gen.size_lo = 8;
    gen.size_hi = 40;
  }

  for (std::uint64_t i = 0; i < attempts; ++i) {
    const ATypeGraph g = random_atype(gen, rng);
    const BooleanSequence input = random_sequence(gen.input_dim, test_len, rng);
    const std::vector<std::uint32_t> delays = columnwise_solution_delays(g, base, input);
    if (delays.empty()) continue;
    ++summary.solutions;
    if (delays.front() % 2 == 0) ++summary.even_delay_solutions;
    else ++summary.odd_delay_solutions;
  }
  summary.attempts = attempts;
  return summary;
}

}  // namespace atype
