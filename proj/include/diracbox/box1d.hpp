#pragma once

#include <vector>

#include "diracbox/rootfind.hpp"

namespace diracbox {

/// One positive-energy level of the 1-D bag of length lambda (Compton units).
struct Mode1D {
    int n = 0;
    double x = 0.0;        ///< phase k L, inside ((n - 1/2) pi, n pi)
    double u = 0.0;        ///< hbar k / (m c) = x / lambda
    double epsilon = 0.0;  ///< E / (m c^2)
    double residual = 0.0; ///< normalized residual |sin x + (x/lambda) cos x| / sqrt(1 + (x/lambda)^2)
    int iterations = 0;
};

/// tan(x) + x / lambda, the 1-D eigenvalue condition.
double condition_1d(double x, double lambda);

/// Root of tan x = -x / lambda on the n-th branch ((n - 1/2) pi, n pi).
Mode1D solve_1d_mode(double lambda, int n, const BisectOptions& options = {});

/// Modes n = 1..n_max ordered by energy. Branches are solved in parallel.
std::vector<Mode1D> spectrum_1d(double lambda, int n_max, const BisectOptions& options = {});

/// Serial reference for spectrum_1d.
std::vector<Mode1D> spectrum_1d_serial(double lambda, int n_max, const BisectOptions& options = {});

/// Signed energies {-eps_n} u {+eps_n}, ascending. The negative branch is the
/// exact mirror of the positive one.
std::vector<double> mirror_spectrum(const std::vector<Mode1D>& modes);

} // namespace diracbox
