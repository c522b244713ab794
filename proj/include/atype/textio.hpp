#pragma once

#include <stdexcept>
#include <string>

#include "atype/graph.hpp"

namespace atype {

struct ParseError : std::runtime_error {
  ParseError(int line_, const std::string& what_)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
  int line;
};

// Line-oriented network format, LF endings, single spaces:
//
//   ATYPE 1
//   NODES <count>
//   <id> <INPUT|NAND|DELAY>      (count lines)
//   ARROWS <count>
//   <src> <dst>                  (count lines; repeats = parallel arrows)
//   INPUT_ORDER <id> <id> ...
//   OUTPUT_ORDER <id> <id> ...
//   DELAY <d>
//
// parse() rejects unknown directives, malformed lines and any network that
// breaks the structural rules, reporting the offending line.
std::string serialize(const AType& a);
AType parse(const std::string& text);

AType load_atype_file(const std::string& path);
void save_atype_file(const std::string& path, const AType& a);

}  // namespace atype
