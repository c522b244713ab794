#include "doctest.h"

#include <cmath>

#include "atype/evolve/selection.hpp"

using namespace atype;

namespace {

std::vector<double> draw_frequencies(bool victims, const std::vector<double>& fitness,
                                     const SelectionConfig& cfg, std::size_t draws) {
  Rng rng(30);
  std::vector<double> counts(fitness.size(), 0.0);
  for (std::size_t i = 0; i < draws; ++i) {
    const std::size_t pick = victims ? select_victim(fitness, cfg, rng)
                                     : select_parent(fitness, cfg, rng);
    counts[pick] += 1.0;
  }
  for (double& c : counts) c /= static_cast<double>(draws);
  return counts;
}

}  // namespace

TEST_CASE("equal fitness draws uniformly") {
  const std::vector<double> fitness{0.4, 0.4, 0.4, 0.4};
  for (bool victims : {false, true}) {
    const std::vector<double> freq = draw_frequencies(victims, fitness, {.kappa = 8}, 40000);
    for (double f : freq) CHECK(f == doctest::Approx(0.25).epsilon(0.05));
  }
}

TEST_CASE("weight ratio e^kappa: parents 4:1, victims 1:4") {
  const SelectionConfig cfg{.kappa = std::log(4.0)};
  const std::vector<double> fitness{0.0, 1.0};

  const std::vector<double> parents = draw_frequencies(false, fitness, cfg, 200000);
  CHECK(parents[0] == doctest::Approx(0.8).epsilon(0.01));
  CHECK(parents[1] == doctest::Approx(0.2).epsilon(0.04));

  const std::vector<double> victims = draw_frequencies(true, fitness, cfg, 200000);
  CHECK(victims[0] == doctest::Approx(0.2).epsilon(0.04));
  CHECK(victims[1] == doctest::Approx(0.8).epsilon(0.01));
}

TEST_CASE("raising a fitness value never helps parenthood or hurts victimhood") {
  const SelectionConfig cfg{.kappa = 8};
  std::vector<double> fitness{0.1, 0.3, 0.5};
  const double before_w = parent_weight(fitness[1], cfg);
  const double before_v = victim_weight(fitness[1], cfg);
  fitness[1] = 0.6;
  CHECK(parent_weight(fitness[1], cfg) < before_w);
  CHECK(victim_weight(fitness[1], cfg) > before_v);
}

TEST_CASE("picker is deterministic and in range") {
  Rng a(31), b(31);
  const std::vector<double> w{1.0, 2.0, 0.5, 7.0};
  for (int i = 0; i < 1000; ++i) {
    const std::size_t pa = pick_weighted(w, a);
    const std::size_t pb = pick_weighted(w, b);
    CHECK(pa == pb);
    CHECK(pa < w.size());
  }
}
