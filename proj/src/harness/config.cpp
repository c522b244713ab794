#include "atype/harness/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace atype {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && (s[a] == ' ' || s[a] == '\t')) ++a;
  while (b > a && (s[b - 1] == ' ' || s[b - 1] == '\t' || s[b - 1] == '\r')) --b;
  return s.substr(a, b - a);
}

std::uint64_t parse_u64(const std::string& v, int line) {
  std::uint64_t out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size())
    throw ConfigError("line " + std::to_string(line) + ": expected a number, got '" + v + "'");
  return out;
}

double parse_double(const std::string& v, int line) {
  try {
    std::size_t used = 0;
    const double out = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return out;
  } catch (const std::exception&) {
    throw ConfigError("line " + std::to_string(line) + ": expected a real number, got '" + v +
                      "'");
  }
}

bool parse_bool(const std::string& v, int line) {
  if (v == "on" || v == "true" || v == "1") return true;
  if (v == "off" || v == "false" || v == "0") return false;
  throw ConfigError("line " + std::to_string(line) + ": expected on/off, got '" + v + "'");
}

std::vector<std::size_t> parse_n_list(const std::string& v, int line) {
  std::vector<std::size_t> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    const std::size_t dash = item.find('-');
    if (dash == std::string::npos) {
      out.push_back(parse_u64(item, line));
    } else {
      const std::size_t lo = parse_u64(trim(item.substr(0, dash)), line);
      const std::size_t hi = parse_u64(trim(item.substr(dash + 1)), line);
      if (hi < lo) throw ConfigError("line " + std::to_string(line) + ": bad range '" + item + "'");
      for (std::size_t n = lo; n <= hi; ++n) out.push_back(n);
    }
  }
  if (out.empty()) throw ConfigError("line " + std::to_string(line) + ": empty n list");
  return out;
}

}  // namespace

Experiment parse_experiment_config(const std::string& text) {
  Experiment exp;
  exp.trials = 20;

  enum class Section { None, Experiment, Task, Algo };
  Section section = Section::None;
  TaskPlan* task = nullptr;
  AlgoPlan* algo = nullptr;

  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string s = trim(raw);
    if (s.empty() || s[0] == '#') continue;

    if (s.front() == '[') {
      if (s.back() != ']') throw ConfigError("line " + std::to_string(line) + ": bad section");
      const std::string name = s.substr(1, s.size() - 2);
      if (name == "experiment") {
        section = Section::Experiment;
      } else if (name.rfind("task.", 0) == 0) {
        const std::optional<TaskKind> kind = parse_task(name.substr(5));
        if (!kind)
          throw ConfigError("line " + std::to_string(line) + ": unknown task '" +
                            name.substr(5) + "'");
        exp.tasks.push_back({});
        task = &exp.tasks.back();
        task->task = *kind;
        section = Section::Task;
      } else if (name.rfind("algo.", 0) == 0) {
        const std::optional<Algorithm> a = parse_algorithm(name.substr(5));
        if (!a)
          throw ConfigError("line " + std::to_string(line) + ": unknown algorithm '" +
                            name.substr(5) + "'");
        exp.algos.push_back({});
        algo = &exp.algos.back();
        algo->algorithm = *a;
        section = Section::Algo;
      } else {
        throw ConfigError("line " + std::to_string(line) + ": unknown section '" + name + "'");
      }
      continue;
    }

    const std::size_t eq = s.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(line) + ": expected 'key = value'");
    const std::string key = trim(s.substr(0, eq));
    const std::string value = trim(s.substr(eq + 1));
    if (key.empty() || value.empty())
      throw ConfigError("line " + std::to_string(line) + ": expected 'key = value'");

    switch (section) {
      case Section::None:
        throw ConfigError("line " + std::to_string(line) + ": entry outside any section");
      case Section::Experiment:
        if (key == "seed") exp.master_seed = parse_u64(value, line);
        else if (key == "trials") exp.trials = parse_u64(value, line);
        else if (key == "out") exp.out_csv = value;
        else if (key == "threads") exp.threads = parse_u64(value, line);
        else if (key == "timing") exp.timing = parse_bool(value, line);
        else if (key == "population") exp.shared.population = parse_u64(value, line);
        else if (key == "p_delay") exp.shared.p_delay = parse_double(value, line);
        else if (key == "pressure") exp.shared.pressure = parse_double(value, line);
        else if (key == "kappa") exp.shared.kappa = parse_double(value, line);
        else if (key == "subgraph_cap") exp.shared.subgraph_cap = parse_double(value, line);
        else if (key == "crossovers_per_gen")
          exp.shared.crossovers_per_gen = parse_u64(value, line);
        else if (key == "mutations_per_gen")
          exp.shared.mutations_per_gen = parse_u64(value, line);
        else
          throw ConfigError("line " + std::to_string(line) + ": unknown key '" + key + "'");
        break;
      case Section::Task:
        if (key == "n") task->ns = parse_n_list(value, line);
        else if (key == "max_attempts") task->max_attempts = parse_u64(value, line);
        else if (key == "size_lo") task->size_lo = parse_u64(value, line);
        else if (key == "size_hi") task->size_hi = parse_u64(value, line);
        else
          throw ConfigError("line " + std::to_string(line) + ": unknown key '" + key + "'");
        break;
      case Section::Algo:
        if (key == "trials") algo->trials = parse_u64(value, line);
        else if (key == "max_attempts") algo->max_attempts = parse_u64(value, line);
        else if (key == "population") algo->population = parse_u64(value, line);
        else if (key == "crossovers_per_gen") algo->crossovers_per_gen = parse_u64(value, line);
        else if (key == "mutations_per_gen") algo->mutations_per_gen = parse_u64(value, line);
        else
          throw ConfigError("line " + std::to_string(line) + ": unknown key '" + key + "'");
        break;
    }
  }

  if (exp.tasks.empty()) throw ConfigError("no [task.*] section");
  if (exp.algos.empty()) throw ConfigError("no [algo.*] section");
  for (const TaskPlan& tp : exp.tasks)
    if (tp.ns.empty())
      throw ConfigError(std::string("task ") + to_string(tp.task) + " lists no n values");
  return exp;
}

Experiment load_experiment_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_experiment_config(buf.str());
}

}  // namespace atype
