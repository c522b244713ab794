#pragma once

#include <cstddef>
#include <vector>

namespace atype {

// Upper-tail quantile of Student's t: the value q with CDF(q) = p for the
// given degrees of freedom. Computed by inverting the regularized incomplete
// beta form of the CDF; good to full double precision, well past the three
// decimals the experiment reports need.
double student_t_quantile(double p, std::size_t df);

struct MeanCI {
  double mean = 0.0;
  double half_width = 0.0;
};

// Two-sided confidence interval for the mean of the samples at the given
// level. Throws std::invalid_argument for fewer than two samples.
MeanCI t_confidence(const std::vector<double>& samples, double level = 0.90);

}  // namespace atype
