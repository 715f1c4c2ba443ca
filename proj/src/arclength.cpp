#include "detail.hpp"

#include <algorithm>

namespace bwgeom::detail {

namespace {

std::vector<double> cumulative_trapezoid(const std::function<double(double)>& speed,
                                         int grid) {
  std::vector<double> cum(static_cast<size_t>(grid) + 1, 0.0);
  const double h = 1.0 / grid;
  double prev = speed(0.0);
  for (int i = 1; i <= grid; ++i) {
    const double cur = speed(i * h);
    cum[i] = cum[i - 1] + 0.5 * h * (prev + cur);
    prev = cur;
  }
  return cum;
}

}  // namespace

double trapezoid_length(const std::function<double(double)>& speed, int grid) {
  return cumulative_trapezoid(speed, grid).back();
}

std::vector<double> equispaced_in_length(const std::function<double(double)>& speed,
                                         int steps, int grid) {
  if (steps < 1) throw validation_error("arclength sampling needs steps >= 1");
  const std::vector<double> cum = cumulative_trapezoid(speed, grid);
  const double total = cum.back();
  const double h = 1.0 / grid;

  std::vector<double> params(static_cast<size_t>(steps) + 1);
  params.front() = 0.0;
  params.back() = 1.0;
  for (int k = 1; k < steps; ++k) {
    const double target = total * k / steps;
    const auto it = std::lower_bound(cum.begin(), cum.end(), target);
    const size_t hi = static_cast<size_t>(it - cum.begin());
    const size_t lo = hi - 1;
    const double seg = cum[hi] - cum[lo];
    const double frac = seg > 0.0 ? (target - cum[lo]) / seg : 0.0;
    params[static_cast<size_t>(k)] = (static_cast<double>(lo) + frac) * h;
  }
  return params;
}

}  // namespace bwgeom::detail
