#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "atype/rng.hpp"

namespace atype {

// A sequence of Boolean vectors of one fixed dimension. Storage is
// earliest-first: index 0 is the vector for moment 0. (Pretty-printing in
// right-to-left time order is a display concern only, see format_sequence.)
class BooleanSequence {
 public:
  BooleanSequence() = default;
  explicit BooleanSequence(std::size_t dim) : dim_(dim) {}
  BooleanSequence(std::size_t dim, std::size_t len, bool fill = false)
      : dim_(dim), bits_(dim * len, fill ? 1 : 0) {}

  std::size_t dim() const { return dim_; }
  std::size_t length() const { return dim_ == 0 ? 0 : bits_.size() / dim_; }
  bool empty() const { return bits_.empty(); }

  bool bit(std::size_t t, std::size_t i) const { return bits_[t * dim_ + i] != 0; }
  void set_bit(std::size_t t, std::size_t i, bool v) { bits_[t * dim_ + i] = v ? 1 : 0; }

  void push_back(const std::vector<std::uint8_t>& vec);
  std::vector<std::uint8_t> at(std::size_t t) const;

  friend bool operator==(const BooleanSequence&, const BooleanSequence&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<std::uint8_t> bits_;
};

BooleanSequence random_sequence(std::size_t dim, std::size_t len, Rng& rng);

// CLI grammar: vectors as bit-strings joined by ';', leftmost = earliest
// moment ("11;01;10"). parse_sequence throws std::invalid_argument on
// malformed text or ragged dimensions.
BooleanSequence parse_sequence(const std::string& text);
std::string format_sequence(const BooleanSequence& seq, bool latest_first = false);

BooleanSequence reversed(const BooleanSequence& seq);

}  // namespace atype
