#include "atype/sequence.hpp"

#include <cassert>
#include <stdexcept>

namespace atype {

void BooleanSequence::push_back(const std::vector<std::uint8_t>& vec) {
  if (dim_ == 0) dim_ = vec.size();
  assert(vec.size() == dim_);
  for (std::uint8_t b : vec) bits_.push_back(b ? 1 : 0);
}

std::vector<std::uint8_t> BooleanSequence::at(std::size_t t) const {
  std::vector<std::uint8_t> v(dim_);
  for (std::size_t i = 0; i < dim_; ++i) v[i] = bits_[t * dim_ + i];
  return v;
}

BooleanSequence random_sequence(std::size_t dim, std::size_t len, Rng& rng) {
  BooleanSequence seq(dim, len);
  for (std::size_t t = 0; t < len; ++t)
    for (std::size_t i = 0; i < dim; ++i) seq.set_bit(t, i, rng_bit(rng));
  return seq;
}

BooleanSequence parse_sequence(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty input sequence");
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ';') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);

  BooleanSequence seq;
  for (const std::string& p : parts) {
    if (p.empty()) throw std::invalid_argument("empty vector in input sequence");
    std::vector<std::uint8_t> vec;
    vec.reserve(p.size());
    for (char c : p) {
      if (c != '0' && c != '1')
        throw std::invalid_argument(std::string("bad bit character '") + c + "'");
      vec.push_back(c == '1');
    }
    if (seq.dim() != 0 && vec.size() != seq.dim())
      throw std::invalid_argument("input vectors have mixed dimensions");
    seq.push_back(vec);
  }
  return seq;
}

std::string format_sequence(const BooleanSequence& seq, bool latest_first) {
  std::string out;
  const std::size_t len = seq.length();
  for (std::size_t k = 0; k < len; ++k) {
    const std::size_t t = latest_first ? len - 1 - k : k;
    if (k) out.push_back(';');
    for (std::size_t i = 0; i < seq.dim(); ++i) out.push_back(seq.bit(t, i) ? '1' : '0');
  }
  return out;
}

BooleanSequence reversed(const BooleanSequence& seq) {
  BooleanSequence out(seq.dim(), seq.length());
  for (std::size_t t = 0; t < seq.length(); ++t)
    for (std::size_t i = 0; i < seq.dim(); ++i)
      out.set_bit(seq.length() - 1 - t, i, seq.bit(t, i));
  return out;
}

}  // namespace atype
