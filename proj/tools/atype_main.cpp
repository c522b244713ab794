// atype: command-line front end for the network library, the evolutionary
// searches and the batch experiment harness.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "atype/harness/claims.hpp"
#include "atype/harness/config.hpp"
#include "atype/harness/experiment.hpp"
#include "atype/sim/engine.hpp"
#include "atype/stats.hpp"
#include "atype/textio.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;     // file or configuration problems
constexpr int kExitUsage = 2;     // bad flags
constexpr int kExitUnsolved = 3;  // search ran out of attempts

int cmd_validate(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "cannot open '" << path << "'\n";
    return kExitError;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    atype::parse(buf.str());
  } catch (const atype::ParseError& e) {
    std::cout << e.what() << "\n";
    return kExitError;
  }
  std::cout << "valid\n";
  return kExitOk;
}

int cmd_run(const std::string& path, const std::string& input_text, std::size_t out_len,
            bool paper_order) {
  const atype::AType net = atype::load_atype_file(path);
  atype::BooleanSequence input = atype::parse_sequence(input_text);
  if (paper_order) input = atype::reversed(input);
  const atype::BooleanSequence out = atype::run(net, input, out_len);
  std::cout << atype::format_sequence(out, paper_order) << "\n";
  return kExitOk;
}

struct SearchArgs {
  std::string task;
  std::size_t n = 1;
  std::string algo;
  std::uint64_t seed = 0;
  std::uint64_t max_attempts = 0;  // 0: task default
  std::size_t population = 0;      // 0: default
  std::string out_csv;
  std::string solution_path;
  bool timing = false;
};

int cmd_search(const SearchArgs& args) {
  const auto task = atype::parse_task(args.task);
  if (!task) {
    std::cerr << "unknown task '" << args.task << "'\n";
    return kExitUsage;
  }
  const auto algo = atype::parse_algorithm(args.algo);
  if (!algo) {
    std::cerr << "unknown algorithm '" << args.algo << "'\n";
    return kExitUsage;
  }

  atype::SharedParams shared;
  atype::TrialOverrides overrides;
  if (args.max_attempts) overrides.max_attempts = args.max_attempts;
  if (args.population) overrides.population = args.population;
  overrides.timing = args.timing;

  atype::AType solution;
  bool have_solution = false;
  const atype::TrialRecord rec = atype::run_trial(*task, args.n, *algo, 0, args.seed, shared,
                                                  overrides, &solution, &have_solution);
  std::cout << atype::to_csv(rec) << "\n";
  if (!args.out_csv.empty()) atype::write_csv(args.out_csv, {rec});
  if (have_solution) {
    std::string path = args.solution_path;
    if (path.empty())
      path = "solution_" + rec.task + std::to_string(rec.n) + "_" + rec.algorithm + "_" +
             std::to_string(args.seed) + ".atype";
    atype::save_atype_file(path, solution);
    std::cerr << "solution written to " << path << "\n";
  }
  return rec.solved ? kExitOk : kExitUnsolved;
}

int cmd_experiment(const std::string& config_path) {
  const atype::Experiment exp = atype::load_experiment_config(config_path);
  const std::vector<atype::TrialRecord> records = atype::run_experiment(exp);
  if (exp.out_csv.empty()) {
    std::cout << atype::csv_header() << "\n";
    for (const atype::TrialRecord& r : records) std::cout << atype::to_csv(r) << "\n";
  } else {
    std::cerr << "wrote " << records.size() << " records to " << exp.out_csv << "\n";
  }
  return kExitOk;
}

int cmd_claims(const std::string& which, std::uint64_t attempts, std::uint64_t seed,
               std::size_t test_len) {
  const auto kind = atype::parse_claim(which);
  if (!kind) {
    std::cerr << "unknown claim '" << which << "'\n";
    return kExitUsage;
  }
  atype::Rng rng(seed);
  const atype::ClaimSummary summary = atype::claim_search(*kind, attempts, rng, test_len);
  std::cout << atype::format_summary(summary) << "\n";
  return kExitOk;
}

int cmd_stats(const std::string& csv_path, double confidence) {
  std::ifstream in(csv_path, std::ios::binary);
  if (!in) {
    std::cerr << "cannot open '" << csv_path << "'\n";
    return kExitError;
  }
  std::string line;
  if (!std::getline(in, line) || line != atype::csv_header()) {
    std::cerr << "unrecognized CSV header\n";
    return kExitError;
  }

  // group attempts by (task, n, algorithm), keeping first-appearance order
  std::vector<std::string> order;
  std::map<std::string, std::vector<double>> groups;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::string cur;
    for (char c : line) {
      if (c == ',') {
        f.push_back(cur);
        cur.clear();
      } else cur.push_back(c);
    }
    f.push_back(cur);
    if (f.size() != 10) {
      std::cerr << "line " << lineno << ": expected 10 fields\n";
      return kExitError;
    }
    const std::string key = f[0] + "," + f[1] + "," + f[2];
    if (!groups.count(key)) order.push_back(key);
    groups[key].push_back(std::stod(f[5]));
  }

  std::cout << "task,n,algorithm,trials,mean_attempts,half_width\n";
  for (const std::string& key : order) {
    const std::vector<double>& samples = groups[key];
    std::cout << key << "," << samples.size() << ",";
    if (samples.size() < 2) {
      std::cout << samples[0] << ",\n";  // no interval from one trial
      continue;
    }
    const atype::MeanCI ci = atype::t_confidence(samples, confidence);
    std::cout << ci.mean << "," << ci.half_width << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Turing-style NAND/delay network tools"};
  app.require_subcommand(1);

  std::string validate_path;
  CLI::App* validate = app.add_subcommand("validate", "check a network file");
  validate->add_option("file", validate_path, "network file")->required();

  std::string run_path, run_input;
  std::size_t run_out_len = 0;
  bool run_paper_order = false;
  CLI::App* run = app.add_subcommand("run", "drive a network with an input sequence");
  run->add_option("file", run_path, "network file")->required();
  run->add_option("--input", run_input, "input sequence, e.g. 11;01;10")->required();
  run->add_option("--out-len", run_out_len, "output vectors to collect")->required();
  run->add_flag("--paper-order", run_paper_order,
                "treat sequences as written right-to-left in time");

  SearchArgs search_args;
  CLI::App* search = app.add_subcommand("search", "run one evolutionary search trial");
  search->add_option("--task", search_args.task, "identity|multiplexer|carry")->required();
  search->add_option("--n", search_args.n, "task parameter")->required();
  search->add_option("--algo", search_args.algo, "blind|mutation|genetic|headless")
      ->required();
  search->add_option("--seed", search_args.seed, "trial seed")->required();
  search->add_option("--max-attempts", search_args.max_attempts, "attempt cap");
  search->add_option("--pop", search_args.population, "population size");
  search->add_option("--out", search_args.out_csv, "write the record as a CSV file");
  search->add_option("--solution", search_args.solution_path, "solution output path");
  search->add_flag("--timing", search_args.timing, "report measured wall_ms");

  std::string experiment_config;
  CLI::App* experiment = app.add_subcommand("experiment", "run a batch experiment");
  experiment->add_option("--config", experiment_config, "experiment description file")
      ->required();

  std::string claims_which;
  std::uint64_t claims_attempts = 0, claims_seed = 0;
  std::size_t claims_len = 10000;
  CLI::App* claims = app.add_subcommand("claims", "random screening for the delay-node claims");
  claims->add_option("--which", claims_which, "odd_delay_identity|xor_without_delays")
      ->required();
  claims->add_option("--attempts", claims_attempts, "networks to draw")->required();
  claims->add_option("--seed", claims_seed, "rng seed")->required();
  claims->add_option("--test-len", claims_len, "test sequence length");

  std::string stats_in;
  double stats_confidence = 0.90;
  CLI::App* stats = app.add_subcommand("stats", "confidence intervals over a record CSV");
  stats->add_option("--in", stats_in, "records CSV")->required();
  stats->add_option("--confidence", stats_confidence, "confidence level");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*validate) return cmd_validate(validate_path);
    if (*run) return cmd_run(run_path, run_input, run_out_len, run_paper_order);
    if (*search) return cmd_search(search_args);
    if (*experiment) return cmd_experiment(experiment_config);
    if (*claims) return cmd_claims(claims_which, claims_attempts, claims_seed, claims_len);
    if (*stats) return cmd_stats(stats_in, stats_confidence);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitError;
  }
  return kExitUsage;
}
