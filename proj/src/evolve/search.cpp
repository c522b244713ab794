#include "atype/evolve/search.hpp"

#include <algorithm>
#include <chrono>

#include "atype/evolve/operators.hpp"

namespace atype {

const char* to_string(Algorithm a) {
  switch (a) {
    case Algorithm::Blind: return "blind";
    case Algorithm::MutationOnly: return "mutation";
    case Algorithm::Genetic: return "genetic";
    case Algorithm::HeadlessChicken: return "headless";
  }
  return "?";
}

std::optional<Algorithm> parse_algorithm(const std::string& name) {
  if (name == "blind") return Algorithm::Blind;
  if (name == "mutation") return Algorithm::MutationOnly;
  if (name == "genetic") return Algorithm::Genetic;
  if (name == "headless") return Algorithm::HeadlessChicken;
  return std::nullopt;
}

namespace {

class SearchRun {
 public:
  SearchRun(const SearchConfig& cfg, const ConceptFunction& target,
            const TrainingSet& training)
      : cfg_(cfg),
        concept_(&target),
        rng_(cfg.seed),
        batch_(target, training),
        evaluator_(batch_, cfg.fitness) {}

  SearchResult run() {
    const auto start = std::chrono::steady_clock::now();
    SearchResult result =
        cfg_.algorithm == Algorithm::Blind ? run_blind() : run_population();
    const auto stop = std::chrono::steady_clock::now();
    result.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    return result;
  }

 private:
  // Evaluates a constructed graph (one attempt). If it hits fitness zero,
  // screens every zero-fitness delay with the exactness oracle, smallest
  // delay first.
  CandidateSolution make_candidate(ATypeGraph graph) {
    CandidateSolution cand = evaluator_.evaluate(std::move(graph), rng_);
    ++attempts_;
    best_seen_ = std::min(best_seen_, cand.best_fitness);
    if (cand.best_fitness == 0.0) {
      for (std::uint32_t d = cand.delay_min; d <= cand.delay_max && !solution_; ++d) {
        if (cand.fitness_at(d) != 0.0) continue;
        AType a{cand.graph, d};
        if (verify_exact(a, *concept_, rng_, cfg_.exactness)) solution_ = std::move(a);
      }
      cand.exactness_checked = true;
    }
    return cand;
  }

  SearchResult run_blind() {
    while (attempts_ < cfg_.max_attempts && !solution_)
      make_candidate(random_atype(cfg_.gen, rng_));
    return finish(std::nullopt);
  }

  void insert(CandidateSolution cand) {
    parent_w_.push_back(parent_weight(cand.best_fitness, cfg_.selection));
    victim_w_.push_back(victim_weight(cand.best_fitness, cfg_.selection));
    population_.push_back(std::move(cand));
  }

  void erase(std::size_t idx) {
    population_.erase(population_.begin() + static_cast<std::ptrdiff_t>(idx));
    parent_w_.erase(parent_w_.begin() + static_cast<std::ptrdiff_t>(idx));
    victim_w_.erase(victim_w_.begin() + static_cast<std::ptrdiff_t>(idx));
  }

  // new members join the pool before the victim draw; no one is protected
  void add_then_eliminate(CandidateSolution cand) {
    insert(std::move(cand));
    erase(pick_weighted(victim_w_, rng_));
  }

  ATypeGraph crossover_child() {
    const std::size_t mother_i = pick_weighted(parent_w_, rng_);
    const std::size_t father_i = pick_weighted(parent_w_, rng_);
    ATypeGraph mother = population_[mother_i].graph;
    ATypeGraph father = population_[father_i].graph;
    if (cfg_.algorithm == Algorithm::HeadlessChicken) {
      // swap one parent for a random network of the same size
      ATypeGraph& swapped = rng_bit(rng_) ? mother : father;
      GenConfig fresh = cfg_.gen;
      fresh.size_lo = fresh.size_hi = swapped.size();
      swapped = random_atype(fresh, rng_);
    }
    for (std::size_t r = 0; r < cfg_.crossover_retries; ++r) {
      std::optional<ATypeGraph> child = crossover(mother, father, cfg_.subgraph_cap, rng_);
      if (child) return std::move(*child);
    }
    return mutate(mother, cfg_.gen.p_delay, rng_);
  }

  SearchResult run_population() {
    const std::size_t crossovers =
        cfg_.algorithm == Algorithm::MutationOnly ? 0 : cfg_.crossovers_per_gen;

    while (population_.size() < cfg_.population_size && attempts_ < cfg_.max_attempts &&
           !solution_)
      insert(make_candidate(random_atype(cfg_.gen, rng_)));

    while (attempts_ < cfg_.max_attempts && !solution_) {
      for (std::size_t c = 0; c < crossovers && attempts_ < cfg_.max_attempts && !solution_;
           ++c)
        add_then_eliminate(make_candidate(crossover_child()));
      for (std::size_t m = 0;
           m < cfg_.mutations_per_gen && attempts_ < cfg_.max_attempts && !solution_; ++m) {
        const std::size_t src = rng_index(rng_, population_.size());
        add_then_eliminate(
            make_candidate(mutate(population_[src].graph, cfg_.gen.p_delay, rng_)));
      }
    }
    return finish(fittest());
  }

  std::optional<AType> fittest() {
    if (population_.empty()) return std::nullopt;
    double best = population_[0].best_fitness;
    for (const CandidateSolution& c : population_) best = std::min(best, c.best_fitness);
    std::vector<std::size_t> ties;
    for (std::size_t i = 0; i < population_.size(); ++i)
      if (population_[i].best_fitness == best) ties.push_back(i);
    const CandidateSolution& pick = population_[ties[rng_index(rng_, ties.size())]];
    return AType{pick.graph, pick.best_delay};
  }

  SearchResult finish(std::optional<AType> fallback) {
    SearchResult result;
    result.attempts = attempts_;
    if (solution_) {
      result.solved = true;
      result.solution = std::move(solution_);
      result.best_fitness = 0.0;
    } else {
      result.solution = std::move(fallback);
      result.best_fitness = best_seen_;
    }
    return result;
  }

  const SearchConfig& cfg_;
  const ConceptFunction* concept_;
  Rng rng_;
  TrainingBatch batch_;
  Evaluator evaluator_;
  std::uint64_t attempts_ = 0;
  double best_seen_ = 1.0;
  std::optional<AType> solution_;
  std::vector<CandidateSolution> population_;
  std::vector<double> parent_w_, victim_w_;
};

}  // namespace

SearchResult run_search(const SearchConfig& cfg, const ConceptFunction& target,
                        const TrainingSet& training) {
  return SearchRun(cfg, target, training).run();
}

}  // namespace atype
