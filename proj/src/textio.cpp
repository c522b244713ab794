#include "atype/textio.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace atype {

std::string serialize(const AType& a) {
  const ATypeGraph& g = a.graph;
  std::ostringstream out;
  out << "ATYPE 1\n";
  out << "NODES " << g.size() << "\n";
  for (NodeId id = 0; id < g.size(); ++id)
    out << id << " " << to_string(g.kinds[id]) << "\n";
  out << "ARROWS " << g.arrows.size() << "\n";
  for (const Arrow& ar : g.arrows) out << ar.src << " " << ar.dst << "\n";
  out << "INPUT_ORDER";
  for (NodeId id : g.input_order) out << " " << id;
  out << "\n";
  out << "OUTPUT_ORDER";
  for (NodeId id : g.output_order) out << " " << id;
  out << "\n";
  out << "DELAY " << a.delay << "\n";
  return out.str();
}

namespace {

// Strict tokenizer: fields separated by exactly one space, no leading or
// trailing whitespace, no tabs or CR.
std::vector<std::string> split_fields(const std::string& line, int lineno) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ' ') {
      if (cur.empty()) throw ParseError(lineno, "malformed spacing");
      fields.push_back(cur);
      cur.clear();
    } else if (c == '\t' || c == '\r') {
      throw ParseError(lineno, "illegal whitespace character");
    } else {
      cur.push_back(c);
    }
  }
  if (cur.empty()) throw ParseError(lineno, "malformed spacing");
  fields.push_back(cur);
  return fields;
}

std::uint64_t parse_number(const std::string& s, int lineno) {
  std::uint64_t value = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw ParseError(lineno, "expected a decimal number, got '" + s + "'");
  return value;
}

struct LineReader {
  std::vector<std::string> lines;
  std::size_t next = 0;

  explicit LineReader(const std::string& text) {
    std::string cur;
    for (char c : text) {
      if (c == '\n') {
        lines.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(c);
      }
    }
    if (!cur.empty()) lines.push_back(cur);
  }

  int lineno() const { return static_cast<int>(next); }  // last consumed line

  std::string take(const char* what) {
    if (next >= lines.size())
      throw ParseError(static_cast<int>(lines.size() + 1),
                       std::string("unexpected end of input, expected ") + what);
    return lines[next++];
  }

  bool done() const { return next >= lines.size(); }
};

}  // namespace

AType parse(const std::string& text) {
  LineReader reader(text);

  {
    const std::string header = reader.take("ATYPE header");
    if (header != "ATYPE 1") throw ParseError(1, "expected header 'ATYPE 1'");
  }

  AType result;
  ATypeGraph& g = result.graph;

  {
    auto f = split_fields(reader.take("NODES directive"), reader.lineno());
    if (f.size() != 2 || f[0] != "NODES")
      throw ParseError(reader.lineno(), "expected 'NODES <count>'");
    const std::uint64_t count = parse_number(f[1], reader.lineno());
    g.kinds.reserve(count);
    std::vector<int> node_lines(count, 0);
    for (std::uint64_t i = 0; i < count; ++i) {
      auto nf = split_fields(reader.take("node line"), reader.lineno());
      if (nf.size() != 2) throw ParseError(reader.lineno(), "expected '<id> <kind>'");
      if (parse_number(nf[0], reader.lineno()) != i)
        throw ParseError(reader.lineno(), "node ids must be dense and in order");
      NodeKind kind;
      if (nf[1] == "INPUT") kind = NodeKind::Input;
      else if (nf[1] == "NAND") kind = NodeKind::Nand;
      else if (nf[1] == "DELAY") kind = NodeKind::Delay;
      else throw ParseError(reader.lineno(), "unknown node kind '" + nf[1] + "'");
      g.kinds.push_back(kind);
      node_lines[i] = reader.lineno();
    }

    auto need_id = [&](const std::string& s, int lineno) {
      const std::uint64_t id = parse_number(s, lineno);
      if (id >= g.size())
        throw ParseError(lineno, "unknown node id " + std::to_string(id));
      return static_cast<NodeId>(id);
    };

    auto af = split_fields(reader.take("ARROWS directive"), reader.lineno());
    if (af.size() != 2 || af[0] != "ARROWS")
      throw ParseError(reader.lineno(), "expected 'ARROWS <count>'");
    const std::uint64_t arrow_count = parse_number(af[1], reader.lineno());
    for (std::uint64_t i = 0; i < arrow_count; ++i) {
      auto fa = split_fields(reader.take("arrow line"), reader.lineno());
      if (fa.size() != 2) throw ParseError(reader.lineno(), "expected '<src> <dst>'");
      g.arrows.push_back({need_id(fa[0], reader.lineno()), need_id(fa[1], reader.lineno())});
    }

    auto fi = split_fields(reader.take("INPUT_ORDER directive"), reader.lineno());
    if (fi.empty() || fi[0] != "INPUT_ORDER")
      throw ParseError(reader.lineno(), "expected 'INPUT_ORDER <id> ...'");
    for (std::size_t i = 1; i < fi.size(); ++i)
      g.input_order.push_back(need_id(fi[i], reader.lineno()));

    auto fo = split_fields(reader.take("OUTPUT_ORDER directive"), reader.lineno());
    if (fo.empty() || fo[0] != "OUTPUT_ORDER")
      throw ParseError(reader.lineno(), "expected 'OUTPUT_ORDER <id> ...'");
    for (std::size_t i = 1; i < fo.size(); ++i)
      g.output_order.push_back(need_id(fo[i], reader.lineno()));

    auto fd = split_fields(reader.take("DELAY directive"), reader.lineno());
    if (fd.size() != 2 || fd[0] != "DELAY")
      throw ParseError(reader.lineno(), "expected 'DELAY <d>'");
    result.delay = static_cast<std::uint32_t>(parse_number(fd[1], reader.lineno()));

    if (!reader.done())
      throw ParseError(reader.lineno() + 1, "unexpected trailing content");

    const std::vector<Violation> violations = validate(g);
    if (!violations.empty()) {
      // attribute structural breaches to the declaring line where possible
      const Violation& v = violations.front();
      int lineno = reader.lineno();
      if (v.kind == ViolationKind::WrongIndegree && v.node < node_lines.size())
        lineno = node_lines[v.node];
      throw ParseError(lineno, v.message);
    }
  }

  return result;
}

AType load_atype_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

void save_atype_file(const std::string& path, const AType& a) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << serialize(a);
}

}  // namespace atype
