#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "atype/graph.hpp"
#include "atype/rng.hpp"
#include "atype/sequence.hpp"

namespace atype {

enum class Mode { Clamped, Sequential };

struct OutOfDomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// A plain Boolean function between fixed-width vectors, used as the base of
// clamped and columnwise concepts.
struct BoolFn {
  std::string name;
  std::size_t in_dim = 0;
  std::size_t out_dim = 0;
  std::function<std::vector<std::uint8_t>(const std::vector<std::uint8_t>&)> eval;
};

BoolFn identity_fn(std::size_t n);
BoolFn and_fn();
BoolFn xor_fn();

// A concept function: the target a search tries to represent.
//
//   identity(n)     S_n -> S_n, clamped
//   multiplexer(n)  selector pins (most significant first) pick one of the n
//                   data pins; inputs whose selector encodes i >= n are out
//                   of domain. Clamped.
//   carry(n)        each output vector is the window of the current and
//                   previous n-1 input bits, oldest bit first. Sequential.
//   clamped(f)      the base function under clamped input
//   columnwise(f)   the termwise lift of the base function, sequential
struct ConceptFunction {
  enum class Kind { Identity, Multiplexer, Carry, ClampedBase, ColumnwiseBase };

  Kind kind = Kind::Identity;
  std::size_t n = 0;             // family parameter
  std::size_t selector_dim = 0;  // multiplexer only
  std::size_t input_dim = 0;
  std::size_t output_dim = 0;
  Mode mode = Mode::Clamped;
  BoolFn base;  // ClampedBase / ColumnwiseBase
  std::string name;

  // per-vector map; throws OutOfDomainError outside the domain
  std::vector<std::uint8_t> map_vector(const std::vector<std::uint8_t>& x) const;
  bool in_domain(const std::vector<std::uint8_t>& x) const;
};

ConceptFunction identity_concept(std::size_t n);
ConceptFunction multiplexer_concept(std::size_t n);
ConceptFunction carry_concept(std::size_t n);
ConceptFunction clamped_concept(const BoolFn& base);
ConceptFunction columnwise_concept(const BoolFn& base);

// Applies the concept to an input sequence. For carry the result is the
// window sequence of length |input| - n + 1 and out_len must be zero. For
// all other kinds the map is applied termwise; out_len > 0 extends (or
// trims) the output to that length, holding the final input vector, which is
// how clamped training examples with repeated expected vectors are built.
BooleanSequence apply_concept(const ConceptFunction& c, const BooleanSequence& input,
                              std::size_t out_len = 0);

// All in-domain input vectors of a clamped concept, in a fixed enumeration
// order (selector value outermost for the multiplexer).
std::vector<std::vector<std::uint8_t>> enumerate_domain(const ConceptFunction& c);

struct TrainingExample {
  BooleanSequence input;
  BooleanSequence expected;
  friend bool operator==(const TrainingExample&, const TrainingExample&) = default;
};

using TrainingSet = std::vector<TrainingExample>;

struct TrainingParams {
  std::size_t clamped_out_len = 3;
  std::size_t max_clamped_examples = 100;
  std::size_t sequential_len = 50;
};

// Clamped concepts: the exhaustive single-vector example set, or a uniform
// without-replacement sample of max_clamped_examples when the domain is
// larger. Sequential concepts: one random example of sequential_len.
TrainingSet make_training_set(const ConceptFunction& c, const TrainingParams& params,
                              Rng& rng);

struct ExactnessParams {
  std::size_t clamped_horizon = 1000;
  std::size_t sequential_len = 10000;
};

// The exactness oracle. Clamped: for every in-domain input the network must
// hold the expected output at every one of clamped_horizon moments from its
// delay onward. Sequential: one fresh random input of sequential_len must be
// mapped exactly.
bool verify_exact(const AType& a, const ConceptFunction& c, Rng& rng,
                  const ExactnessParams& params = {});

}  // namespace atype
