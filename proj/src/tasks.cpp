#include "atype/tasks.hpp"

#include <algorithm>
#include <cassert>

#include "atype/sim/engine.hpp"

namespace atype {

BoolFn identity_fn(std::size_t n) {
  return {"identity" + std::to_string(n), n, n,
          [](const std::vector<std::uint8_t>& x) { return x; }};
}

BoolFn and_fn() {
  return {"and", 2, 1, [](const std::vector<std::uint8_t>& x) {
            return std::vector<std::uint8_t>{static_cast<std::uint8_t>(x[0] && x[1])};
          }};
}

BoolFn xor_fn() {
  return {"xor", 2, 1, [](const std::vector<std::uint8_t>& x) {
            return std::vector<std::uint8_t>{static_cast<std::uint8_t>(!x[0] != !x[1])};
          }};
}

namespace {

std::size_t selector_bits(std::size_t n) {
  std::size_t bits = 0;
  while ((std::size_t{1} << bits) < n) ++bits;
  return bits;
}

std::size_t selector_value(const ConceptFunction& c, const std::vector<std::uint8_t>& x) {
  std::size_t v = 0;
  for (std::size_t i = 0; i < c.selector_dim; ++i) v = (v << 1) | (x[i] ? 1 : 0);
  return v;
}

}  // namespace

std::vector<std::uint8_t> ConceptFunction::map_vector(
    const std::vector<std::uint8_t>& x) const {
  assert(x.size() == input_dim);
  switch (kind) {
    case Kind::Identity:
      return x;
    case Kind::Multiplexer: {
      const std::size_t sel = selector_value(*this, x);
      if (sel >= n)
        throw OutOfDomainError(name + ": selector value " + std::to_string(sel) +
                               " has no data pin");
      return {x[selector_dim + sel]};
    }
    case Kind::ClampedBase:
    case Kind::ColumnwiseBase:
      return base.eval(x);
    case Kind::Carry:
      break;
  }
  throw std::logic_error("carry has no per-vector map");
}

bool ConceptFunction::in_domain(const std::vector<std::uint8_t>& x) const {
  if (kind == Kind::Multiplexer) return selector_value(*this, x) < n;
  return true;
}

ConceptFunction identity_concept(std::size_t n) {
  ConceptFunction c;
  c.kind = ConceptFunction::Kind::Identity;
  c.n = n;
  c.input_dim = n;
  c.output_dim = n;
  c.mode = Mode::Clamped;
  c.name = "identity";
  return c;
}

ConceptFunction multiplexer_concept(std::size_t n) {
  ConceptFunction c;
  c.kind = ConceptFunction::Kind::Multiplexer;
  c.n = n;
  c.selector_dim = selector_bits(n);
  c.input_dim = n + c.selector_dim;
  c.output_dim = 1;
  c.mode = Mode::Clamped;
  c.name = "multiplexer";
  return c;
}

ConceptFunction carry_concept(std::size_t n) {
  ConceptFunction c;
  c.kind = ConceptFunction::Kind::Carry;
  c.n = n;
  c.input_dim = 1;
  c.output_dim = n;
  c.mode = Mode::Sequential;
  c.name = "carry";
  return c;
}

ConceptFunction clamped_concept(const BoolFn& base) {
  ConceptFunction c;
  c.kind = ConceptFunction::Kind::ClampedBase;
  c.n = base.in_dim;
  c.input_dim = base.in_dim;
  c.output_dim = base.out_dim;
  c.mode = Mode::Clamped;
  c.base = base;
  c.name = "clamped-" + base.name;
  return c;
}

ConceptFunction columnwise_concept(const BoolFn& base) {
  ConceptFunction c;
  c.kind = ConceptFunction::Kind::ColumnwiseBase;
  c.n = base.in_dim;
  c.input_dim = base.in_dim;
  c.output_dim = base.out_dim;
  c.mode = Mode::Sequential;
  c.base = base;
  c.name = "columnwise-" + base.name;
  return c;
}

BooleanSequence apply_concept(const ConceptFunction& c, const BooleanSequence& input,
                              std::size_t out_len) {
  if (input.dim() != c.input_dim)
    throw std::invalid_argument(c.name + ": input dimension mismatch");

  if (c.kind == ConceptFunction::Kind::Carry) {
    if (out_len != 0) throw std::invalid_argument("carry output length is determined");
    if (input.length() < c.n)
      throw std::invalid_argument("carry needs an input at least n long");
    const std::size_t len = input.length() - c.n + 1;
    BooleanSequence out(c.output_dim, len);
    for (std::size_t i = 0; i < len; ++i)
      for (std::size_t j = 0; j < c.n; ++j) out.set_bit(i, j, input.bit(i + j, 0));
    return out;
  }

  const std::size_t len = out_len ? out_len : input.length();
  BooleanSequence out(c.output_dim, len);
  std::vector<std::uint8_t> y;
  for (std::size_t t = 0; t < len; ++t) {
    const std::size_t src = t < input.length() ? t : input.length() - 1;
    y = c.map_vector(input.at(src));
    for (std::size_t j = 0; j < c.output_dim; ++j) out.set_bit(t, j, y[j] != 0);
  }
  return out;
}

std::vector<std::vector<std::uint8_t>> enumerate_domain(const ConceptFunction& c) {
  if (c.mode != Mode::Clamped)
    throw std::logic_error(c.name + " has no finite clamped domain");
  std::vector<std::vector<std::uint8_t>> domain;
  if (c.kind == ConceptFunction::Kind::Multiplexer) {
    for (std::size_t sel = 0; sel < c.n; ++sel)
      for (std::size_t data = 0; data < (std::size_t{1} << c.n); ++data) {
        std::vector<std::uint8_t> x(c.input_dim);
        for (std::size_t i = 0; i < c.selector_dim; ++i)
          x[i] = (sel >> (c.selector_dim - 1 - i)) & 1;
        for (std::size_t j = 0; j < c.n; ++j) x[c.selector_dim + j] = (data >> j) & 1;
        domain.push_back(std::move(x));
      }
  } else {
    for (std::size_t v = 0; v < (std::size_t{1} << c.input_dim); ++v) {
      std::vector<std::uint8_t> x(c.input_dim);
      for (std::size_t i = 0; i < c.input_dim; ++i) x[i] = (v >> i) & 1;
      domain.push_back(std::move(x));
    }
  }
  return domain;
}

TrainingSet make_training_set(const ConceptFunction& c, const TrainingParams& params,
                              Rng& rng) {
  TrainingSet set;
  if (c.mode == Mode::Clamped) {
    std::vector<std::vector<std::uint8_t>> domain = enumerate_domain(c);
    if (domain.size() > params.max_clamped_examples) {
      // uniform sample without replacement: partial Fisher-Yates
      for (std::size_t i = 0; i < params.max_clamped_examples; ++i) {
        const std::size_t j = i + rng_index(rng, domain.size() - i);
        std::swap(domain[i], domain[j]);
      }
      domain.resize(params.max_clamped_examples);
    }
    for (const std::vector<std::uint8_t>& x : domain) {
      BooleanSequence input(c.input_dim);
      input.push_back(x);
      set.push_back({input, apply_concept(c, input, params.clamped_out_len)});
    }
  } else {
    BooleanSequence input = random_sequence(c.input_dim, params.sequential_len, rng);
    set.push_back({input, apply_concept(c, input)});
  }
  return set;
}

bool verify_exact(const AType& a, const ConceptFunction& c, Rng& rng,
                  const ExactnessParams& params) {
  if (a.graph.input_dim() != c.input_dim || a.graph.output_dim() != c.output_dim)
    throw std::invalid_argument("network dimensions do not match the concept");

  if (c.mode == Mode::Clamped) {
    const std::vector<std::vector<std::uint8_t>> domain = enumerate_domain(c);
    std::vector<BooleanSequence> lanes;
    lanes.reserve(domain.size());
    for (const std::vector<std::uint8_t>& x : domain) {
      BooleanSequence s(c.input_dim);
      s.push_back(x);
      lanes.push_back(std::move(s));
    }
    const std::size_t words = (domain.size() + 63) / 64;
    std::vector<std::uint64_t> expected(c.output_dim * words, 0);
    for (std::size_t l = 0; l < domain.size(); ++l) {
      const std::vector<std::uint8_t> y = c.map_vector(domain[l]);
      for (std::size_t o = 0; o < c.output_dim; ++o)
        if (y[o]) expected[o * words + (l >> 6)] |= 1ull << (l & 63);
    }
    std::vector<std::uint64_t> lane_mask(words, ~0ull);
    if (domain.size() % 64) lane_mask[words - 1] = (1ull << (domain.size() % 64)) - 1;

    LaneInput lane_input(lanes);
    BatchSim sim(a.graph, lane_input);
    const std::size_t last = a.delay + params.clamped_horizon;
    for (std::size_t t = 0; t < last; ++t) {
      if (t) sim.step();
      if (t < a.delay) continue;
      for (std::size_t o = 0; o < c.output_dim; ++o) {
        const std::uint64_t* got = sim.output_words(o);
        for (std::size_t w = 0; w < words; ++w)
          if ((got[w] ^ expected[o * words + w]) & lane_mask[w]) return false;
      }
    }
    return true;
  }

  const BooleanSequence input = random_sequence(c.input_dim, params.sequential_len, rng);
  const BooleanSequence expected = apply_concept(c, input);
  LaneInput lane_input({input});
  BatchSim sim(a.graph, lane_input);
  const std::size_t last = a.delay + expected.length();
  for (std::size_t t = 0; t < last; ++t) {
    if (t) sim.step();
    if (t < a.delay) continue;
    for (std::size_t o = 0; o < c.output_dim; ++o)
      if (sim.output_bit(o, 0) != expected.bit(t - a.delay, o)) return false;
  }
  return true;
}

}  // namespace atype
