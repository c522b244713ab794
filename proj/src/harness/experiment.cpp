#include "atype/harness/experiment.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

namespace atype {

std::string csv_header() {
  return "task,n,algorithm,trial,seed,attempts,solved,solution_size,solution_delay,wall_ms";
}

std::string to_csv(const TrialRecord& r) {
  std::ostringstream out;
  out << r.task << ',' << r.n << ',' << r.algorithm << ',' << r.trial << ',' << r.seed << ','
      << r.attempts << ',' << (r.solved ? 1 : 0) << ',';
  if (r.solved) out << r.solution_size;
  out << ',';
  if (r.solved) out << r.solution_delay;
  out << ',' << r.wall_ms;
  return out.str();
}

std::uint64_t cell_seed(std::uint64_t master, TaskKind task, std::size_t n,
                        std::size_t trial) {
  return derive_seed(master, task_code(task), n, trial);
}

std::uint64_t training_seed(std::uint64_t cell) { return derive_seed(cell, 1); }

std::uint64_t search_stream_seed(std::uint64_t cell) { return derive_seed(cell, 2); }

TrainingSet training_for_cell(TaskKind task, std::size_t n, std::uint64_t cell) {
  const TaskSetup setup = task_setup(task, n);
  Rng rng(training_seed(cell));
  return make_training_set(setup.target, {}, rng);
}

TrialRecord run_trial(TaskKind task, std::size_t n, Algorithm algo, std::size_t trial,
                      std::uint64_t cell, const SharedParams& shared,
                      const TrialOverrides& overrides, AType* solution_out,
                      bool* have_solution) {
  const TaskSetup setup = task_setup(task, n);

  SearchConfig cfg;
  cfg.algorithm = algo;
  cfg.population_size = overrides.population.value_or(shared.population);
  cfg.crossovers_per_gen = overrides.crossovers_per_gen.value_or(shared.crossovers_per_gen);
  cfg.mutations_per_gen = overrides.mutations_per_gen.value_or(shared.mutations_per_gen);
  cfg.max_attempts = overrides.max_attempts.value_or(setup.max_attempts);
  cfg.gen.input_dim = setup.target.input_dim;
  cfg.gen.output_dim = setup.target.output_dim;
  cfg.gen.size_lo = overrides.size_lo.value_or(setup.size_lo);
  cfg.gen.size_hi = overrides.size_hi.value_or(setup.size_hi);
  cfg.gen.p_delay = shared.p_delay;
  cfg.fitness.penalty_bound = cfg.gen.size_hi;  // the initial-size upper bound
  cfg.fitness.pressure_gradient = shared.pressure;
  cfg.selection.kappa = shared.kappa;
  cfg.subgraph_cap = shared.subgraph_cap;
  cfg.seed = search_stream_seed(cell);
  cfg.gen.check();

  Rng training_rng(training_seed(cell));
  const TrainingSet training = make_training_set(setup.target, {}, training_rng);

  const SearchResult result = run_search(cfg, setup.target, training);

  TrialRecord rec;
  rec.task = to_string(task);
  rec.n = n;
  rec.algorithm = to_string(algo);
  rec.trial = trial;
  rec.seed = cell;
  rec.attempts = result.attempts;
  rec.solved = result.solved;
  if (result.solved) {
    rec.solution_size = result.solution->graph.size();
    rec.solution_delay = result.solution->delay;
  }
  if (overrides.timing)
    rec.wall_ms = static_cast<std::uint64_t>(result.wall_ms);
  if (have_solution) *have_solution = result.solved;
  if (solution_out && result.solved) *solution_out = *result.solution;
  return rec;
}

namespace {

struct Cell {
  TaskKind task;
  std::size_t n;
  Algorithm algo;
  std::size_t trial;
  TrialOverrides overrides;
};

std::size_t worker_count(const Experiment& exp, std::size_t cells) {
  std::size_t threads = exp.threads ? exp.threads : std::thread::hardware_concurrency();
  if (threads == 0) threads = 1;
  if (const char* env = std::getenv("ATYPE_THREADS")) {
    const unsigned long cap = std::strtoul(env, nullptr, 10);
    if (cap >= 1 && cap < threads) threads = cap;
  }
  return std::min(threads, cells ? cells : 1);
}

}  // namespace

std::vector<TrialRecord> run_experiment(const Experiment& exp) {
  std::vector<Cell> cells;
  for (const TaskPlan& tp : exp.tasks)
    for (std::size_t n : tp.ns)
      for (const AlgoPlan& ap : exp.algos) {
        const std::size_t trials = ap.trials.value_or(exp.trials);
        for (std::size_t trial = 0; trial < trials; ++trial) {
          TrialOverrides ov;
          ov.max_attempts = ap.max_attempts ? ap.max_attempts : tp.max_attempts;
          ov.size_lo = tp.size_lo;
          ov.size_hi = tp.size_hi;
          ov.population = ap.population;
          ov.crossovers_per_gen = ap.crossovers_per_gen;
          ov.mutations_per_gen = ap.mutations_per_gen;
          ov.timing = exp.timing;
          cells.push_back({tp.task, n, ap.algorithm, trial, ov});
        }
      }

  std::vector<TrialRecord> records(cells.size());

  std::ofstream partial;
  if (!exp.out_csv.empty()) partial.open(exp.out_csv + ".partial", std::ios::binary);

  std::atomic<std::size_t> next{0};
  std::mutex sink_mutex;
  auto work = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cells.size()) return;
      const Cell& c = cells[i];
      const std::uint64_t seed = cell_seed(exp.master_seed, c.task, c.n, c.trial);
      TrialRecord rec;
      try {
        rec = run_trial(c.task, c.n, c.algo, c.trial, seed, exp.shared, c.overrides);
      } catch (const std::exception& e) {
        rec.task = to_string(c.task);
        rec.n = c.n;
        rec.algorithm = to_string(c.algo);
        rec.trial = c.trial;
        rec.seed = seed;
        std::lock_guard<std::mutex> lock(sink_mutex);
        std::cerr << "cell " << rec.task << " n=" << c.n << " " << rec.algorithm
                  << " trial=" << c.trial << " failed: " << e.what() << "\n";
      }
      std::lock_guard<std::mutex> lock(sink_mutex);
      records[i] = rec;
      if (partial.is_open()) partial << to_csv(rec) << "\n" << std::flush;
    }
  };

  const std::size_t workers = worker_count(exp, cells.size());
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }

  if (!exp.out_csv.empty()) {
    partial.close();
    write_csv(exp.out_csv, records);
    std::remove((exp.out_csv + ".partial").c_str());
  }
  return records;
}

void write_csv(const std::string& path, const std::vector<TrialRecord>& records) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << csv_header() << "\n";
  for (const TrialRecord& r : records) out << to_csv(r) << "\n";
}

}  // namespace atype
