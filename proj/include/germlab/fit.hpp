#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace germlab {

struct PowerLawFit {
    double slope = 0.0;
    double intercept = 0.0;  // log-space intercept; prefactor = exp(intercept)
    double prefactor = 0.0;
    double r2 = 0.0;
};

// Least-squares fit of log(value) against log(eps). Entries must be positive;
// throws DegenerateFit for fewer than 3 usable entries or zero abscissa spread.
PowerLawFit fit_loglog(const std::vector<std::pair<double, double>>& series);

// Plain linear least squares y = slope*x + intercept.
PowerLawFit fit_linear(const std::vector<std::pair<double, double>>& xy);

}  // namespace germlab
