#include "diracbox/box1d.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <sstream>
#include <stdexcept>

#include "diracbox/error.hpp"
#include "diracbox/units.hpp"

namespace diracbox {

double condition_1d(double x, double lambda) { return std::tan(x) + x / lambda; }

Mode1D solve_1d_mode(double lambda, int n, const BisectOptions& options)
{
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw std::invalid_argument("lambda must be positive and finite");
    }
    if (n < 1) {
        throw std::invalid_argument("branch index n starts at 1");
    }

    // tan -> -inf at (n - 1/2) pi from above; the far end is evaluated.
    Bracket bracket = Bracket::open((n - 0.5) * pi, n * pi);
    bracket.lo_sign = -1;

    SolveReport report;
    try {
        report = bisect([lambda](double x) { return condition_1d(x, lambda); }, bracket, options);
    } catch (const SolverError& e) {
        std::ostringstream msg;
        msg << "1-D branch n = " << n << " at lambda = " << lambda << ": " << e.what();
        throw SolverError(ErrorKind::ConvergenceFailure, msg.str());
    }

    Mode1D mode;
    mode.n = n;
    mode.x = report.root;
    mode.u = mode.x / lambda;
    mode.epsilon = dispersion(mode.u);
    const double slope = mode.x / lambda;
    mode.residual = std::abs(std::sin(mode.x) + slope * std::cos(mode.x)) / std::sqrt(1.0 + slope * slope);
    mode.iterations = report.iterations;
    return mode;
}

std::vector<Mode1D> spectrum_1d_serial(double lambda, int n_max, const BisectOptions& options)
{
    if (n_max < 1) {
        throw std::invalid_argument("n_max must be at least 1");
    }
    std::vector<Mode1D> modes;
    modes.reserve(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) {
        modes.push_back(solve_1d_mode(lambda, n, options));
    }
    return modes;
}

std::vector<Mode1D> spectrum_1d(double lambda, int n_max, const BisectOptions& options)
{
    if (n_max < 1) {
        throw std::invalid_argument("n_max must be at least 1");
    }
    const auto count = static_cast<std::size_t>(n_max);
    std::vector<Mode1D> modes(count);
    std::vector<std::exception_ptr> failures(count);

#pragma omp parallel for schedule(static)
    for (int n = 1; n <= n_max; ++n) {
        const auto i = static_cast<std::size_t>(n - 1);
        try {
            modes[i] = solve_1d_mode(lambda, n, options);
        } catch (...) {
            failures[i] = std::current_exception();
        }
    }
    // Report the lowest failing branch regardless of scheduling.
    for (const auto& failure : failures) {
        if (failure) {
            std::rethrow_exception(failure);
        }
    }
    // Branches are already in energy order.
    return modes;
}

std::vector<double> mirror_spectrum(const std::vector<Mode1D>& modes)
{
    std::vector<double> energies;
    energies.reserve(2 * modes.size());
    for (const auto& m : modes) {
        energies.push_back(-m.epsilon);
        energies.push_back(m.epsilon);
    }
    std::sort(energies.begin(), energies.end());
    return energies;
}

} // namespace diracbox
