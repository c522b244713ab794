#include "doctest.h"

#include <stdexcept>

#include "atype/stats.hpp"

using namespace atype;

TEST_CASE("t quantiles match the standard table to three decimals") {
  struct Row {
    std::size_t df;
    double p;
    double want;
  };
  const Row rows[] = {
      {1, 0.95, 6.314},  {2, 0.95, 2.920},  {3, 0.95, 2.353},  {4, 0.95, 2.132},
      {5, 0.95, 2.015},  {10, 0.95, 1.812}, {19, 0.95, 1.729}, {30, 0.95, 1.697},
      {60, 0.95, 1.671}, {120, 0.95, 1.658}, {10, 0.975, 2.228}, {5, 0.99, 3.365},
  };
  for (const Row& r : rows) {
    CAPTURE(r.df);
    CHECK(student_t_quantile(r.p, r.df) == doctest::Approx(r.want).epsilon(0.0005));
  }
  CHECK(student_t_quantile(0.5, 7) == 0.0);
  CHECK(student_t_quantile(0.05, 1) == doctest::Approx(-6.314).epsilon(0.0005));
}

TEST_CASE("confidence interval of {1,2,3} at 90%") {
  const MeanCI ci = t_confidence({1.0, 2.0, 3.0}, 0.90);
  CHECK(ci.mean == doctest::Approx(2.0));
  CHECK(ci.half_width == doctest::Approx(1.686).epsilon(0.001));
}

TEST_CASE("degenerate intervals") {
  const MeanCI equal = t_confidence({4.0, 4.0, 4.0, 4.0});
  CHECK(equal.mean == 4.0);
  CHECK(equal.half_width == 0.0);

  const MeanCI zero_level = t_confidence({1.0, 5.0}, 0.0);
  CHECK(zero_level.mean == 3.0);
  CHECK(zero_level.half_width == 0.0);

  CHECK_THROWS_AS(t_confidence({1.0}), std::invalid_argument);
  CHECK_THROWS_AS(t_confidence({}), std::invalid_argument);
}
