#pragma once

#include <cmath>
#include <vector>

#include "exlab/common.hpp"
#include "exlab/dynamics.hpp"

// World tubes: the band [<q>_t - kappa sigma_q(t), <q>_t + kappa sigma_q(t)]
// swept by a position expectation. For several components the halfwidth
// aggregates as sqrt(sum of sigma_i^2) around the per-component centers.

namespace exlab {

struct WorldTube {
  std::vector<double> times;
  RMatrix center;     // rows = times, cols = components
  RVector halfwidth;  // per time
  double kappa = 1.0;

  Eigen::Index components() const { return center.cols(); }
  double lower(Eigen::Index row, Eigen::Index comp = 0) const {
    return center(row, comp) - halfwidth(row);
  }
  double upper(Eigen::Index row, Eigen::Index comp = 0) const {
    return center(row, comp) + halfwidth(row);
  }
};

// tube over a set of position series of a trajectory (indices into
// traj.series); kappa scales the sigma band
inline WorldTube world_tube(const Trajectory& traj,
                            const std::vector<std::size_t>& components,
                            double kappa) {
  require(kappa >= 0.0, "world_tube: kappa must be nonnegative");
  require(!components.empty(), "world_tube: no position components given");
  for (std::size_t c : components)
    require(c < traj.series.size(), "world_tube: component index out of range");
  const std::size_t rows = traj.times.size();
  WorldTube tube;
  tube.times = traj.times;
  tube.kappa = kappa;
  tube.center.resize(static_cast<Eigen::Index>(rows),
                     static_cast<Eigen::Index>(components.size()));
  tube.halfwidth.resize(static_cast<Eigen::Index>(rows));
  for (std::size_t r = 0; r < rows; ++r) {
    double s2 = 0.0;
    for (std::size_t k = 0; k < components.size(); ++k) {
      const auto& series = traj.series[components[k]];
      tube.center(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(k)) =
          series.values[r].real();
      s2 += series.sigmas[r] * series.sigmas[r];
    }
    tube.halfwidth(static_cast<Eigen::Index>(r)) = kappa * std::sqrt(s2);
  }
  return tube;
}

inline WorldTube world_tube(const Trajectory& traj, std::size_t component,
                            double kappa) {
  return world_tube(traj, std::vector<std::size_t>{component}, kappa);
}

}  // namespace exlab
