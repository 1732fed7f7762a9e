#include "germlab/fit.hpp"

#include <cmath>

#include "germlab/errors.hpp"

namespace germlab {

PowerLawFit fit_linear(const std::vector<std::pair<double, double>>& xy) {
    if (xy.size() < 3) throw DegenerateFit("fit: need at least 3 points");
    const double n = static_cast<double>(xy.size());
    double sx = 0, sy = 0;
    for (const auto& [x, y] : xy) {
        sx += x;
        sy += y;
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0, syy = 0;
    for (const auto& [x, y] : xy) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
        syy += (y - my) * (y - my);
    }
    if (sxx <= 0.0) throw DegenerateFit("fit: no spread in abscissa");

    PowerLawFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    f.prefactor = std::exp(f.intercept);
    f.r2 = (syy > 0.0) ? (sxy * sxy) / (sxx * syy) : 1.0;
    return f;
}

PowerLawFit fit_loglog(const std::vector<std::pair<double, double>>& series) {
    std::vector<std::pair<double, double>> xy;
    xy.reserve(series.size());
    for (const auto& [eps, value] : series) {
        if (eps > 0.0 && value > 0.0 && std::isfinite(eps) && std::isfinite(value)) {
            xy.emplace_back(std::log(eps), std::log(value));
        }
    }
    if (xy.size() < 3) throw DegenerateFit("fit_loglog: fewer than 3 positive entries");
    return fit_linear(xy);
}

}  // namespace germlab
