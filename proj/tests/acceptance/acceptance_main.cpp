// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// fails. Criteria can be cherry-picked by number on the command line.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "atype/evolve/operators.hpp"
#include "atype/evolve/search.hpp"
#include "atype/harness/claims.hpp"
#include "atype/harness/config.hpp"
#include "atype/harness/experiment.hpp"
#include "atype/sim/engine.hpp"
#include "atype/stats.hpp"
#include "atype/textio.hpp"
#include "support/figures.hpp"

using namespace atype;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << "    FAILED: " << what << "\n";
    } else {
      detail << "    ok: " << what << "\n";
    }
  }
};

std::string fmt(double v) {
  std::ostringstream out;
  out.precision(1);
  out << std::fixed << v;
  return out.str();
}

// ---------------------------------------------------------------------------
// 1. golden networks pass the exactness oracle

void criterion_1(Check& c) {
  Rng rng(101);
  const ExactnessParams exact;  // horizon 1000, sequential 10^4

  c.expect(verify_exact(figures::and_network(), clamped_concept(and_fn()), rng, exact),
           "two-input AND, delay 2");
  c.expect(verify_exact(figures::xor_network(), columnwise_concept(xor_fn()), rng, exact),
           "columnwise XOR, delay 3");
  c.expect(verify_exact(figures::identity_network(1), identity_concept(1), rng, exact),
           "1-identity, delay 2");
  c.expect(verify_exact(figures::identity_network(2), identity_concept(2), rng, exact),
           "2-identity, delay 2");
  c.expect(verify_exact(figures::mux_network(2), multiplexer_concept(2), rng, exact),
           "2-multiplexer, delay 3");
  c.expect(verify_exact(figures::mux_network(3), multiplexer_concept(3), rng, exact),
           "3-multiplexer, delay 6");
  c.expect(verify_exact(figures::carry_network(2), carry_concept(2), rng, exact),
           "2-carry, delay 3");
  c.expect(verify_exact(figures::carry_network(3), carry_concept(3), rng, exact),
           "3-carry, delay 4");
}

// ---------------------------------------------------------------------------
// 2. odd-delay claim: no nand-only network represents columnwise identity at
//    an odd delay; even-delay solutions appear at a few percent

void criterion_2(Check& c) {
  Rng rng(102);
  const ClaimSummary s = claim_search(ClaimKind::OddDelayIdentity, 100000, rng);
  const double even_rate =
      static_cast<double>(s.even_delay_solutions) / static_cast<double>(s.attempts);
  c.detail << "    even-delay solutions: " << s.even_delay_solutions << " ("
           << even_rate * 100.0 << "%), odd-delay: " << s.odd_delay_solutions << "\n";
  c.expect(s.odd_delay_solutions == 0, "zero odd-delay solutions");
  c.expect(even_rate >= 0.005 && even_rate <= 0.06, "even-delay rate within [0.5%, 6%]");
}

// ---------------------------------------------------------------------------
// 3. XOR claim: no nand-only network represents columnwise XOR

void criterion_3(Check& c) {
  Rng rng(103);
  const ClaimSummary s = claim_search(ClaimKind::XorWithoutDelays, 1000000, rng);
  c.detail << "    solutions: " << s.solutions << " in " << s.attempts << " attempts\n";
  c.expect(s.solutions == 0, "zero columnwise-XOR solutions without delay nodes");
}

// ---------------------------------------------------------------------------
// paired-trial helpers for criteria 4-6

struct PairedRuns {
  std::vector<double> attempts;
  bool all_solved = true;
};

PairedRuns run_algo(TaskKind task, std::size_t n, Algorithm algo, std::size_t trials,
                    std::uint64_t master, std::uint64_t cap, Check& c) {
  PairedRuns out;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    TrialOverrides ov;
    ov.max_attempts = cap;
    const TrialRecord rec = run_trial(task, n, algo, trial,
                                      cell_seed(master, task, n, trial), {}, ov);
    out.attempts.push_back(static_cast<double>(rec.attempts));
    out.all_solved = out.all_solved && rec.solved;
  }
  const MeanCI ci = t_confidence(out.attempts, 0.90);
  c.detail << "    " << to_string(task) << " n=" << n << " " << to_string(algo)
           << ": mean attempts " << fmt(ci.mean) << " +- " << fmt(ci.half_width)
           << (out.all_solved ? "" : " (some trials hit the cap)") << "\n";
  return out;
}

double mean_of(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

// 4. evolution beats blind sampling on 3-identity

void criterion_4(Check& c) {
  const std::uint64_t master = 104;
  const std::uint64_t cap = 1000000;
  const PairedRuns genetic = run_algo(TaskKind::Identity, 3, Algorithm::Genetic, 20, master,
                                      cap, c);
  const PairedRuns mutation = run_algo(TaskKind::Identity, 3, Algorithm::MutationOnly, 20,
                                       master, cap, c);
  const PairedRuns blind = run_algo(TaskKind::Identity, 3, Algorithm::Blind, 20, master,
                                    cap, c);

  c.expect(genetic.all_solved, "genetic solves all 20 trials within 1e6 attempts");
  c.expect(mutation.all_solved, "mutation-only solves all 20 trials within 1e6 attempts");
  c.expect(mean_of(blind.attempts) >= 10.0 * mean_of(genetic.attempts),
           "blind needs at least 10x the attempts of genetic");
  const MeanCI cb = t_confidence(blind.attempts, 0.90);
  const MeanCI cg = t_confidence(genetic.attempts, 0.90);
  c.expect(cg.mean + cg.half_width < cb.mean - cb.half_width,
           "90% confidence intervals of blind and genetic are disjoint");
}

// 5. crossover helps on 4-identity and 4-carry

void criterion_5(Check& c) {
  const std::uint64_t cap = 10000000;
  {
    const PairedRuns genetic = run_algo(TaskKind::Identity, 4, Algorithm::Genetic, 20, 105,
                                        cap, c);
    const PairedRuns mutation = run_algo(TaskKind::Identity, 4, Algorithm::MutationOnly, 20,
                                         105, cap, c);
    c.expect(mean_of(genetic.attempts) < mean_of(mutation.attempts),
             "4-identity: genetic mean below mutation-only mean");
  }
  {
    const PairedRuns genetic = run_algo(TaskKind::Carry, 4, Algorithm::Genetic, 20, 205, cap,
                                        c);
    const PairedRuns mutation = run_algo(TaskKind::Carry, 4, Algorithm::MutationOnly, 20, 205,
                                         cap, c);
    c.expect(mean_of(genetic.attempts) < mean_of(mutation.attempts),
             "4-carry: genetic mean below mutation-only mean");
  }
}

// 6. crossover is more than macromutation on 4-identity

void criterion_6(Check& c) {
  const std::uint64_t cap = 10000000;
  const PairedRuns genetic = run_algo(TaskKind::Identity, 4, Algorithm::Genetic, 20, 106, cap,
                                      c);
  const PairedRuns headless = run_algo(TaskKind::Identity, 4, Algorithm::HeadlessChicken, 20,
                                       106, cap, c);
  c.expect(mean_of(genetic.attempts) <= mean_of(headless.attempts),
           "genetic mean at or below headless-chicken mean");
}

// ---------------------------------------------------------------------------
// 7. a zero-crossover genetic run is the mutation-only run

void criterion_7(Check& c) {
  for (std::uint64_t master : {701ull, 702ull, 703ull}) {
    TrialOverrides ov;
    ov.max_attempts = 50000;
    ov.crossovers_per_gen = 0;
    const TrialRecord genetic = run_trial(TaskKind::Identity, 2, Algorithm::Genetic, 0,
                                          cell_seed(master, TaskKind::Identity, 2, 0), {}, ov);
    TrialOverrides ov_mut = ov;
    ov_mut.crossovers_per_gen = 1;  // the algorithm forces zero anyway
    const TrialRecord mutation =
        run_trial(TaskKind::Identity, 2, Algorithm::MutationOnly, 0,
                  cell_seed(master, TaskKind::Identity, 2, 0), {}, ov_mut);

    TrialRecord relabeled = genetic;
    relabeled.algorithm = mutation.algorithm;
    c.expect(relabeled == mutation,
             "records identical apart from the algorithm label (seed " +
                 std::to_string(master) + ")");
  }
}

// ---------------------------------------------------------------------------
// 8. property suites

void criterion_8(Check& c) {
  Rng rng(108);

  {  // (a) operator fuzzing
    GenConfig cfg;
    cfg.input_dim = 2;
    cfg.output_dim = 2;
    cfg.size_lo = 5;
    cfg.size_hi = 25;
    cfg.p_delay = 0.2;
    bool mutants_ok = true;
    for (int i = 0; i < 10000 && mutants_ok; ++i) {
      const ATypeGraph parent = random_atype(cfg, rng);
      const ATypeGraph child = mutate(parent, cfg.p_delay, rng);
      const auto delta = static_cast<std::ptrdiff_t>(child.size()) -
                         static_cast<std::ptrdiff_t>(parent.size());
      mutants_ok = is_valid(child) && delta >= -1 && delta <= 1 &&
                   child.input_order == parent.input_order &&
                   child.output_order == parent.output_order;
    }
    c.expect(mutants_ok, "1e4 mutants valid with size step in {-1,0,+1}");

    bool children_ok = true;
    std::size_t produced = 0;
    for (int i = 0; i < 10000 && children_ok; ++i) {
      const ATypeGraph mother = random_atype(cfg, rng);
      const ATypeGraph father = random_atype(cfg, rng);
      const auto child = crossover(mother, father, 0.8, rng);
      if (!child) continue;
      ++produced;
      children_ok = is_valid(*child) && child->input_order == mother.input_order &&
                    child->output_order == mother.output_order;
    }
    c.expect(children_ok && produced > 9000,
             "1e4 crossovers valid, dimensions preserved (" + std::to_string(produced) +
                 " produced)");
  }

  {  // (b) fitness range and monotone penalty
    const FitnessConfig fcfg{.penalty_bound = 12, .pressure_gradient = 0.5};
    bool ok = true;
    for (int i = 0; i < 20000 && ok; ++i) {
      const double d = rng_unit(rng);
      double prev = 0.0;
      for (std::size_t size = 1; size <= 40 && ok; ++size) {
        const double f = size_penalized_fitness(d, size, fcfg);
        ok = f >= 0.0 && f <= 1.0 && (size == 1 || f >= prev) &&
             (size > fcfg.penalty_bound || f == d);
        prev = f;
      }
    }
    c.expect(ok, "fitness in [0,1], equal to d within the bound, monotone beyond it");
  }

  {  // (c) simulation composability and clamped/sequential coherence
    GenConfig cfg;
    cfg.input_dim = 2;
    cfg.output_dim = 1;
    cfg.size_lo = 5;
    cfg.size_hi = 20;
    cfg.p_delay = 0.25;
    bool ok = true;
    for (int i = 0; i < 1000 && ok; ++i) {
      const ATypeGraph g = random_atype(cfg, rng);
      const BooleanSequence input = random_sequence(2, 8, rng);
      const LaneInput lanes({input});
      BatchSim one(g, lanes);
      BatchSim two(g, lanes);
      const std::size_t split = rng_below(rng, 12);
      for (std::size_t t = 0; t < 12; ++t) one.step();
      for (std::size_t t = 0; t < split; ++t) two.step();
      for (std::size_t t = split; t < 12; ++t) two.step();
      ok = one.state_of_lane(0) == two.state_of_lane(0);

      const AType a{g, static_cast<std::uint32_t>(rng_below(rng, 4))};
      const std::vector<std::uint8_t> x{rng_bit(rng), rng_bit(rng)};
      BooleanSequence single(2);
      single.push_back(x);
      ok = ok && run_clamped(a, x, 6) == run(a, single, 6);
    }
    c.expect(ok, "1e3 networks: split runs equal whole runs; clamped equals single-vector");
  }

  {  // (d) serialization round trip
    GenConfig cfg;
    cfg.input_dim = 3;
    cfg.output_dim = 2;
    cfg.size_lo = 6;
    cfg.size_hi = 30;
    cfg.p_delay = 0.2;
    bool ok = true;
    for (int i = 0; i < 10000 && ok; ++i) {
      const AType a{random_atype(cfg, rng), static_cast<std::uint32_t>(rng_below(rng, 50))};
      ok = parse(serialize(a)) == a;
    }
    c.expect(ok, "1e4 random networks round-trip exactly");
  }
}

// ---------------------------------------------------------------------------
// 9. byte-identical CSV under a fixed seed

void criterion_9(Check& c) {
  const char* config =
      "[experiment]\n"
      "seed = 909\n"
      "trials = 3\n"
      "[task.identity]\n"
      "n = 1,2\n"
      "max_attempts = 200000\n"
      "[algo.blind]\n"
      "[algo.genetic]\n";
  Experiment exp = parse_experiment_config(config);

  auto render = [](const std::vector<TrialRecord>& records) {
    std::ostringstream out;
    out << csv_header() << "\n";
    for (const TrialRecord& r : records) out << to_csv(r) << "\n";
    return out.str();
  };
  const std::string first = render(run_experiment(exp));
  const std::string second = render(run_experiment(exp));
  c.expect(first == second, "experiment repeated with one seed: identical CSV bytes");

  exp.out_csv = "acceptance_det_a.csv";
  run_experiment(exp);
  std::ifstream fa(exp.out_csv, std::ios::binary);
  std::ostringstream ba;
  ba << fa.rdbuf();
  exp.out_csv = "acceptance_det_b.csv";
  run_experiment(exp);
  std::ifstream fb(exp.out_csv, std::ios::binary);
  std::ostringstream bb;
  bb << fb.rdbuf();
  c.expect(ba.str() == bb.str() && ba.str() == first,
           "written CSV files byte-identical to the in-memory records");
  std::remove("acceptance_det_a.csv");
  std::remove("acceptance_det_b.csv");

  TrialOverrides ov;
  ov.max_attempts = 100000;
  const TrialRecord s1 = run_trial(TaskKind::Carry, 2, Algorithm::Genetic, 0, 4242, {}, ov);
  const TrialRecord s2 = run_trial(TaskKind::Carry, 2, Algorithm::Genetic, 0, 4242, {}, ov);
  c.expect(s1 == s2, "single search repeated with one seed: identical record");
}

}  // namespace

int main(int argc, char** argv) {
  struct Criterion {
    int number;
    const char* title;
    std::function<void(Check&)> fn;
  };
  const std::vector<Criterion> criteria = {
      {1, "golden networks pass the exactness oracle", criterion_1},
      {2, "odd-delay columnwise identity never appears without delay nodes", criterion_2},
      {3, "columnwise XOR never appears without delay nodes", criterion_3},
      {4, "evolution outperforms blind sampling on 3-identity", criterion_4},
      {5, "crossover helps on 4-identity and 4-carry", criterion_5},
      {6, "genetic matches or beats the headless-chicken control", criterion_6},
      {7, "zero-crossover genetic equals mutation-only exactly", criterion_7},
      {8, "operator, fitness, simulation and serialization property suites", criterion_8},
      {9, "fixed seeds give byte-identical CSV output", criterion_9},
  };

  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));

  bool all_ok = true;
  for (const Criterion& cr : criteria) {
    if (!selected.empty() &&
        std::find(selected.begin(), selected.end(), cr.number) == selected.end())
      continue;
    const auto start = std::chrono::steady_clock::now();
    Check check;
    cr.fn(check);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << "criterion " << cr.number << ": " << cr.title << " ... "
              << (check.ok ? "PASS" : "FAIL") << " (" << fmt(secs) << "s)\n"
              << check.detail.str();
    std::cout.flush();
    all_ok = all_ok && check.ok;
  }
  std::cout << (all_ok ? "ALL SELECTED CRITERIA PASS" : "CRITERIA FAILED") << "\n";
  return all_ok ? 0 : 1;
}
