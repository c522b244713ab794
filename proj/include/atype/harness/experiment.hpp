#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "atype/harness/tables.hpp"

namespace atype {

// Parameters shared by every algorithm in a run.
struct SharedParams {
  std::size_t population = 100;
  double p_delay = 0.2;
  double pressure = 0.5;
  double kappa = 8.0;
  double subgraph_cap = 0.8;
  std::size_t crossovers_per_gen = 1;
  std::size_t mutations_per_gen = 1;
};

struct TrialOverrides {
  std::optional<std::uint64_t> max_attempts;
  std::optional<std::size_t> size_lo;
  std::optional<std::size_t> size_hi;
  std::optional<std::size_t> population;
  std::optional<std::size_t> crossovers_per_gen;
  std::optional<std::size_t> mutations_per_gen;
  bool timing = false;  // off: wall_ms is reported as 0 so identical seeds
                        // give identical bytes
};

struct TaskPlan {
  TaskKind task = TaskKind::Identity;
  std::vector<std::size_t> ns;
  std::optional<std::uint64_t> max_attempts;
  std::optional<std::size_t> size_lo;
  std::optional<std::size_t> size_hi;
};

struct AlgoPlan {
  Algorithm algorithm = Algorithm::Genetic;
  std::optional<std::size_t> trials;
  std::optional<std::uint64_t> max_attempts;
  std::optional<std::size_t> population;
  std::optional<std::size_t> crossovers_per_gen;
  std::optional<std::size_t> mutations_per_gen;
};

struct Experiment {
  std::uint64_t master_seed = 0;
  std::size_t trials = 20;
  std::string out_csv;     // empty: records are only returned
  std::size_t threads = 0;  // 0: hardware count; ATYPE_THREADS caps either way
  bool timing = false;
  SharedParams shared;
  std::vector<TaskPlan> tasks;
  std::vector<AlgoPlan> algos;
};

struct TrialRecord {
  std::string task;
  std::size_t n = 0;
  std::string algorithm;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::uint64_t attempts = 0;
  bool solved = false;
  std::size_t solution_size = 0;      // valid when solved
  std::uint32_t solution_delay = 0;   // valid when solved
  std::uint64_t wall_ms = 0;

  friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

std::string csv_header();
std::string to_csv(const TrialRecord& r);

// Per-trial seeds. The cell seed depends on (task, n, trial) only, so every
// algorithm sees the same training set for trial i; training and search
// streams are split below it.
std::uint64_t cell_seed(std::uint64_t master, TaskKind task, std::size_t n,
                        std::size_t trial);
std::uint64_t training_seed(std::uint64_t cell);
std::uint64_t search_stream_seed(std::uint64_t cell);

// Runs one (task, n, algorithm, trial) cell end to end. When the search
// solves and solution_out is given, the exact network is stored there.
TrialRecord run_trial(TaskKind task, std::size_t n, Algorithm algo, std::size_t trial,
                      std::uint64_t cell, const SharedParams& shared,
                      const TrialOverrides& overrides = {}, AType* solution_out = nullptr,
                      bool* have_solution = nullptr);

// Regenerates the training set a recorded trial used.
TrainingSet training_for_cell(TaskKind task, std::size_t n, std::uint64_t cell);

// Runs every cell (tasks x ns x algorithms x trials), possibly on a worker
// pool, and returns the records in (task, n, algorithm, trial) order. When
// out_csv is set, finished records stream to "<out_csv>.partial" and the
// sorted table is written to out_csv at the end. A cell whose configuration
// is infeasible yields an unsolved record with zero attempts and a
// diagnostic on stderr.
std::vector<TrialRecord> run_experiment(const Experiment& exp);

void write_csv(const std::string& path, const std::vector<TrialRecord>& records);

}  // namespace atype
