#include "diracbox/dos.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "diracbox/error.hpp"

namespace diracbox {

namespace {

ModeSolution nr_mode(const BoxGeometry& geometry, const QuantumNumbers& qn)
{
    ModeSolution sol;
    sol.qn = qn;
    sol.geometry = geometry;
    for (int l = 0; l < 3; ++l) {
        sol.u.u[l] = qn[l] * pi / geometry[l];
    }
    sol.epsilon = dispersion(sol.u);
    sol.kinetic = kinetic_energy(sol.u);
    return sol;
}

// States (spin included) whose kinetic energy does not exceed `kinetic`, with
// the level grouping tolerance so a level sitting on the threshold counts.
long count_up_to_kinetic(const LevelTable& table, double kinetic)
{
    long count = 0;
    const double cap = kinetic * (1.0 + kLevelGroupingTolerance);
    for (const auto& level : table.levels) {
        if (level.kinetic <= cap) {
            count += kSpinDegeneracy * level.degeneracy;
        }
    }
    return count;
}

} // namespace

std::vector<CountPoint> cumulative_count(const LevelTable& levels, const std::vector<double>& eps_grid)
{
    std::vector<CountPoint> out;
    out.reserve(eps_grid.size());
    for (double eps : eps_grid) {
        if (!(eps < levels.complete_below)) {
            std::ostringstream msg;
            msg << "energy " << eps << " is not below the completeness bound " << levels.complete_below
                << " of the n_max = " << levels.n_max << " table";
            throw SolverError(ErrorKind::InsufficientSpectrum, msg.str());
        }
        long count = 0;
        for (const auto& level : levels.levels) {
            if (level.epsilon <= eps) {
                count += kSpinDegeneracy * level.degeneracy;
            }
        }
        out.push_back({eps, count});
    }
    return out;
}

CountingReport counting_report(const LevelTable& levels, const std::vector<double>& eps_grid)
{
    CountingReport report;
    report.relativistic = cumulative_count(levels, eps_grid);
    report.non_relativistic = cumulative_count(nr_level_table(levels.geometry, levels.n_max), eps_grid);
    return report;
}

std::vector<double> spacing_series(double lambda, int n_max)
{
    if (n_max < 2) {
        throw std::invalid_argument("spacing series needs n_max >= 2");
    }
    const auto modes = spectrum_1d(lambda, n_max);
    std::vector<double> spacing;
    spacing.reserve(modes.size() - 1);
    for (std::size_t i = 0; i + 1 < modes.size(); ++i) {
        spacing.push_back(modes[i + 1].x - modes[i].x);
    }
    return spacing;
}

LevelTable nr_level_table(const BoxGeometry& geometry, int n_max)
{
    if (n_max < 1) {
        throw std::invalid_argument("n_max must be at least 1");
    }
    std::vector<ModeSolution> solutions;
    for (int a = 1; a <= n_max; ++a) {
        for (int b = 1; b <= n_max; ++b) {
            for (int c = 1; c <= n_max; ++c) {
                solutions.push_back(nr_mode(geometry, QuantumNumbers({a, b, c})));
            }
        }
    }
    LevelTable table{geometry, n_max, group_levels(std::move(solutions)), std::numeric_limits<double>::infinity()};
    for (int l = 0; l < 3; ++l) {
        std::array<int, 3> n{1, 1, 1};
        n[static_cast<std::size_t>(l)] = n_max + 1;
        table.complete_below = std::min(table.complete_below, nr_mode(geometry, QuantumNumbers(n)).epsilon);
    }
    return table;
}

NrComparison nr_comparison(const BoxGeometry& geometry, int n_max, const SweepOptions& options)
{
    const LevelTable rel = enumerate_spectrum(geometry, n_max, options);
    const LevelTable nr = nr_level_table(geometry, n_max);

    NrComparison out;
    for (const auto& level : rel.levels) {
        const auto& front = level.members.front();
        LevelPair pair;
        pair.qn = front.qn;
        pair.degeneracy = level.degeneracy;
        for (int l = 0; l < 3; ++l) {
            pair.phase_over_pi[l] = front.phase(l) / pi;
        }
        pair.epsilon_rel = level.epsilon;
        pair.epsilon_nr = nr_mode(geometry, front.qn).epsilon;
        out.pairs.push_back(pair);
    }

    const double bound = std::min(rel.complete_below, nr.complete_below);
    for (const auto& level : nr.levels) {
        if (!(level.epsilon < bound)) {
            break;
        }
        out.thresholds.push_back(
            {level.epsilon, count_up_to_kinetic(rel, level.kinetic), count_up_to_kinetic(nr, level.kinetic)});
    }
    return out;
}

} // namespace diracbox
