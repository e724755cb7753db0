#pragma once

#include <cstdint>
#include <vector>

namespace clockrc {

// Regularized incomplete gamma functions (series / continued fraction).
double gammp(double a, double x);
double gammq(double a, double x);

// Upper tail of the chi-square distribution.
double chi2_sf(double x, int dof);

struct Chi2Result {
  double stat = 0.0;
  int dof = 0;
  double p_value = 1.0;
};

// Goodness of fit of observed counts against given cell probabilities.
// Cells with zero expected count must carry zero observations.
Chi2Result chi2_gof(const std::vector<std::uint64_t>& counts, const std::vector<double>& probs);

// Two-sample homogeneity test on a 2 x 2 table (success/failure per sample).
Chi2Result chi2_two_sample_2x2(std::uint64_t a_success, std::uint64_t a_failure,
                               std::uint64_t b_success, std::uint64_t b_failure);

// Two-sample homogeneity test across k categories.
Chi2Result chi2_two_sample(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b);

struct BatchMeansResult {
  double mean = 0.0;
  double std_error = 0.0;
  int batches = 0;
};

// Standard error of a correlated series by non-overlapping batch means;
// trailing remainder samples are dropped.
BatchMeansResult batch_means(const std::vector<double>& series, int batches);

}  // namespace clockrc
