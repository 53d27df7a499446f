#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "rfh/rng.hpp"

namespace rfh {

/// Symmetric alpha-stable law with characteristic function
/// E[e^{iuZ}] = exp(-scale^alpha |u|^alpha), alpha in (1, 2].
/// Note: at alpha = 2 this is Gaussian with variance 2*scale^2, not scale^2.
struct StableLaw {
  double alpha;
  double scale;
  StableLaw(double alpha_, double scale_);
};

/// One draw from `law`. Gaussian fast path at alpha = 2 (standard deviation
/// scale*sqrt(2)); Chambers-Mallows-Stuck otherwise.
double sample_stable(const StableLaw& law, SplitMix64& rng);

/// One realization of the process as independent stationary increments on a
/// fixed grid. Immutable; a deterministic function of (grid, alpha, seed).
struct SamplePath {
  std::vector<double> grid;        ///< strictly increasing, size M+1
  std::vector<double> increments;  ///< size M; X(grid[i+1]) - X(grid[i])
  double alpha = 2.0;
  std::uint64_t seed = 0;
};

/// Increment i is StableLaw(alpha, dt_i^{1/alpha}), so the path has
/// characteristic exponent t|u|^alpha.
SamplePath simulate_path(std::vector<double> grid, double alpha,
                         std::uint64_t seed);

/// Grid from -T to T with step h; the last step may be shorter. The first
/// element is exactly -T and the last exactly T.
std::vector<double> uniform_grid(double T, double h);

/// CSV export: `# alpha=` and `# seed=` metadata lines, header `t,dX`, one
/// row per increment with t the left endpoint.
void write_path_csv(const SamplePath& path, std::ostream& os);

}  // namespace rfh
