#pragma once

#include <vector>

#include "diracbox/box1d.hpp"
#include "diracbox/box3d.hpp"

namespace diracbox {

inline constexpr int kSpinDegeneracy = 2;

struct CountPoint {
    double epsilon = 0.0;
    long count = 0;  ///< states (spin included) with energy <= epsilon
};

struct CountingReport {
    std::vector<CountPoint> relativistic;
    std::vector<CountPoint> non_relativistic;  ///< x_l = n_l pi at the same geometry
};

/// N(eps) = 2 * sum of degeneracies with level energy <= eps.
/// Throws SolverError(InsufficientSpectrum) if any grid point is at or above
/// the table's completeness bound.
std::vector<CountPoint> cumulative_count(const LevelTable& levels, const std::vector<double>& eps_grid);

/// Both counts on the same grid; the NR table is built from `levels`' geometry
/// and n_max.
CountingReport counting_report(const LevelTable& levels, const std::vector<double>& eps_grid);

/// dx_n = x_{n+1} - x_n for n = 1..n_max-1 of the 1-D bag.
std::vector<double> spacing_series(double lambda, int n_max);

/// Levels from x_l = n_l pi pushed through the same dispersion relation.
LevelTable nr_level_table(const BoxGeometry& geometry, int n_max);

struct LevelPair {
    QuantumNumbers qn{{1, 1, 1}};
    int degeneracy = 0;
    std::array<double, 3> phase_over_pi{};  ///< relativistic k_l L_l / pi
    double epsilon_rel = 0.0;
    double epsilon_nr = 0.0;
};

struct DensityThreshold {
    double epsilon = 0.0;  ///< an NR level energy
    long count_rel = 0;
    long count_nr = 0;
};

struct NrComparison {
    std::vector<LevelPair> pairs;
    /// Counts below each NR level energy that lies inside both tables'
    /// completeness bounds.
    std::vector<DensityThreshold> thresholds;
};

NrComparison nr_comparison(const BoxGeometry& geometry, int n_max, const SweepOptions& options = {});

} // namespace diracbox
