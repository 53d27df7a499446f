#include "rfh/stable.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace rfh {

StableLaw::StableLaw(double alpha_, double scale_)
    : alpha(alpha_), scale(scale_) {
  if (!(alpha > 1.0) || !(alpha <= 2.0))
    throw std::invalid_argument("StableLaw: alpha must be in (1, 2]");
  if (!(scale >= 0.0) || !std::isfinite(scale))
    throw std::invalid_argument("StableLaw: scale must be finite and >= 0");
}

double sample_stable(const StableLaw& law, SplitMix64& rng) {
  if (law.scale == 0.0) return 0.0;
  if (law.alpha == 2.0) return law.scale * std::numbers::sqrt2 * rng.next_normal();
  // Chambers-Mallows-Stuck, symmetric case.
  const double a = law.alpha;
  const double theta = std::numbers::pi * (rng.next_unit_open() - 0.5);
  const double w = rng.next_exponential();
  const double z = std::sin(a * theta) / std::pow(std::cos(theta), 1.0 / a) *
                   std::pow(std::cos((1.0 - a) * theta) / w, (1.0 - a) / a);
  return law.scale * z;
}

SamplePath simulate_path(std::vector<double> grid, double alpha,
                         std::uint64_t seed) {
  if (grid.size() < 2)
    throw std::invalid_argument("simulate_path: grid needs at least 2 points");
  for (std::size_t i = 0; i + 1 < grid.size(); ++i)
    if (!(grid[i] < grid[i + 1]))
      throw std::invalid_argument("simulate_path: grid must be strictly increasing");
  if (!(alpha > 1.0) || !(alpha <= 2.0))
    throw std::invalid_argument("simulate_path: alpha must be in (1, 2]");

  SamplePath path;
  path.alpha = alpha;
  path.seed = seed;
  path.increments.resize(grid.size() - 1);
  SplitMix64 rng(seed);
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const double dt = grid[i + 1] - grid[i];
    path.increments[i] =
        sample_stable(StableLaw(alpha, std::pow(dt, 1.0 / alpha)), rng);
  }
  path.grid = std::move(grid);
  return path;
}

std::vector<double> uniform_grid(double T, double h) {
  if (!(T > 0.0)) throw std::invalid_argument("uniform_grid: T must be > 0");
  if (!(h > 0.0) || h > T)
    throw std::invalid_argument("uniform_grid: need 0 < h <= T");
  const double steps_exact = 2.0 * T / h;
  const auto n = static_cast<std::size_t>(std::floor(steps_exact + 1e-9));
  std::vector<double> grid;
  grid.reserve(n + 2);
  grid.push_back(-T);
  for (std::size_t i = 1; i <= n; ++i)
    grid.push_back(-T + static_cast<double>(i) * h);
  if (std::abs(grid.back() - T) <= 1e-9 * h)
    grid.back() = T;
  else
    grid.push_back(T);
  return grid;
}

void write_path_csv(const SamplePath& path, std::ostream& os) {
  char buf[64];
  os << "# alpha=";
  std::snprintf(buf, sizeof buf, "%.17g", path.alpha);
  os << buf << "\n# seed=" << path.seed << "\nt,dX\n";
  for (std::size_t i = 0; i < path.increments.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", path.grid[i]);
    os << buf << ',';
    std::snprintf(buf, sizeof buf, "%.17g", path.increments[i]);
    os << buf << '\n';
  }
}

}  // namespace rfh
