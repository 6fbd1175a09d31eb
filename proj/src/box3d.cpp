#include "diracbox/box3d.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "diracbox/error.hpp"
#include "diracbox/rootfind.hpp"

namespace diracbox {

namespace {

std::string describe(const BoxGeometry& g, const QuantumNumbers& qn)
{
    std::ostringstream s;
    s << "qn = (" << qn[0] << "," << qn[1] << "," << qn[2] << "), lambda = (" << g[0] << "," << g[1] << ","
      << g[2] << ")";
    return s.str();
}

ModeSolution finish(const BoxGeometry& geometry, const QuantumNumbers& qn, const WaveVector& u)
{
    ModeSolution sol;
    sol.qn = qn;
    sol.geometry = geometry;
    sol.u = u;
    sol.epsilon = dispersion(u);
    sol.kinetic = kinetic_energy(u);
    sol.residuals = mode_residuals(geometry, u);
    return sol;
}

// Index map taking the sorted multiset onto `target`: target[l] == sorted[map[l]].
std::array<int, 3> placement(const QuantumNumbers& sorted, const QuantumNumbers& target)
{
    std::array<int, 3> map{};
    std::array<bool, 3> used{};
    for (int l = 0; l < 3; ++l) {
        for (int i = 0; i < 3; ++i) {
            if (!used[i] && sorted[i] == target[l]) {
                map[l] = i;
                used[i] = true;
                break;
            }
        }
    }
    return map;
}

template <typename Solve>
std::vector<ModeSolution> solve_all(const std::vector<QuantumNumbers>& triples, Solve solve)
{
    const auto count = triples.size();
    std::vector<std::optional<ModeSolution>> slots(count);
    std::vector<std::exception_ptr> failures(count);

#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(count); ++i) {
        const auto k = static_cast<std::size_t>(i);
        try {
            slots[k] = solve(triples[k]);
        } catch (...) {
            failures[k] = std::current_exception();
        }
    }
    for (const auto& f : failures) {
        if (f) {
            std::rethrow_exception(f);
        }
    }
    std::vector<ModeSolution> out;
    out.reserve(count);
    for (auto& s : slots) {
        out.push_back(std::move(*s));
    }
    return out;
}

double completeness_bound(const BoxGeometry& geometry, int n_max, const SweepOptions& options)
{
    double bound = std::numeric_limits<double>::infinity();
    const int axes = geometry.is_cubic() ? 1 : 3;
    for (int l = 0; l < axes; ++l) {
        std::array<int, 3> n{1, 1, 1};
        n[static_cast<std::size_t>(l)] = n_max + 1;
        bound = std::min(bound, solve_mode(geometry, QuantumNumbers(n), options).epsilon);
    }
    return bound;
}

std::vector<QuantumNumbers> all_triples(int n_max)
{
    std::vector<QuantumNumbers> out;
    for (int a = 1; a <= n_max; ++a) {
        for (int b = 1; b <= n_max; ++b) {
            for (int c = 1; c <= n_max; ++c) {
                out.emplace_back(std::array<int, 3>{a, b, c});
            }
        }
    }
    return out;
}

void check_n_max(int n_max)
{
    if (n_max < 1) {
        throw std::invalid_argument("n_max must be at least 1");
    }
}

} // namespace

double rhs_coupled(const WaveVector& u, int axis)
{
    const double ul = u[axis];
    if (ul == 0.0) {
        return 0.0;
    }
    const double eps1 = dispersion(u) + 1.0;
    double others = 0.0;
    for (int j = 0; j < 3; ++j) {
        if (j != axis) {
            others += u[j] * u[j];
        }
    }
    return -2.0 * ul * eps1 / (others + 2.0 * eps1);
}

double condition_residual(double phase, double rhs)
{
    return std::abs(std::sin(phase) - rhs * std::cos(phase)) / std::sqrt(1.0 + rhs * rhs);
}

std::array<double, 3> mode_residuals(const BoxGeometry& geometry, const WaveVector& u)
{
    std::array<double, 3> res{};
    for (int l = 0; l < 3; ++l) {
        res[static_cast<std::size_t>(l)] = condition_residual(u[l] * geometry[l], rhs_coupled(u, l));
    }
    return res;
}

ModeSolution solve_mode(const BoxGeometry& geometry, const QuantumNumbers& qn, const SweepOptions& options)
{
    std::array<double, 3> x{};
    WaveVector u;
    for (int l = 0; l < 3; ++l) {
        x[l] = (qn[l] - 0.25) * pi;
        u.u[l] = x[l] / geometry[l];
    }

    constexpr int kStallWindow = 10;
    std::vector<double> update_norms;
    bool damped = false;

    for (int sweep = 1; sweep <= options.max_sweeps; ++sweep) {
        const auto previous = x;
        for (int l = 0; l < 3; ++l) {
            const double lambda = geometry[l];
            auto objective = [&u, l, lambda](double phase) {
                WaveVector trial = u;
                trial.u[l] = phase / lambda;
                return std::tan(phase) - rhs_coupled(trial, l);
            };
            Bracket bracket = Bracket::open((qn[l] - 0.5) * pi, qn[l] * pi);
            bracket.lo_sign = -1;
            BisectOptions inner;
            inner.tol_x = 4.0 * std::numeric_limits<double>::epsilon() * qn[l] * pi;
            inner.tol_f = 0.0;
            SolveReport report;
            try {
                report = bisect(objective, bracket, inner);
            } catch (const SolverError& e) {
                throw SolverError(ErrorKind::InvalidBracket, describe(geometry, qn) + ", axis " +
                                                                 std::to_string(l + 1) + ": " + e.what());
            }
            x[l] = damped ? x[l] + 0.5 * (report.root - x[l]) : report.root;
            u.u[l] = x[l] / lambda;
        }

        double delta = 0.0;
        for (int l = 0; l < 3; ++l) {
            delta = std::max(delta, std::abs(x[l] - previous[l]));
        }
        update_norms.push_back(delta);

        const auto residuals = mode_residuals(geometry, u);
        const double worst = *std::max_element(residuals.begin(), residuals.end());
        if (delta <= options.tol && worst <= options.tol_f) {
            ModeSolution sol = finish(geometry, qn, u);
            sol.sweeps = sweep;
            sol.damped = damped;
            return sol;
        }

        const auto k = update_norms.size();
        if (!damped && k > kStallWindow && update_norms[k - 1] >= update_norms[k - 1 - kStallWindow]) {
            damped = true;
        }
    }

    const auto residuals = mode_residuals(geometry, u);
    std::ostringstream msg;
    msg << describe(geometry, qn) << ": no convergence in " << options.max_sweeps << " sweeps; last x/pi = ("
        << x[0] / pi << "," << x[1] / pi << "," << x[2] / pi << "), residuals = (" << residuals[0] << ","
        << residuals[1] << "," << residuals[2] << ")";
    throw SolverError(ErrorKind::ConvergenceFailure, msg.str());
}

std::size_t LevelTable::solution_count() const
{
    std::size_t n = 0;
    for (const auto& level : levels) {
        n += level.members.size();
    }
    return n;
}

std::vector<Level> group_levels(std::vector<ModeSolution> solutions)
{
    std::sort(solutions.begin(), solutions.end(), [](const ModeSolution& a, const ModeSolution& b) {
        if (a.kinetic != b.kinetic) {
            return a.kinetic < b.kinetic;
        }
        return a.qn < b.qn;
    });

    std::vector<Level> levels;
    double anchor = 0.0;
    for (auto& sol : solutions) {
        const bool same = !levels.empty() &&
                          std::abs(sol.kinetic - anchor) <= kLevelGroupingTolerance * std::max(sol.kinetic, anchor);
        if (!same) {
            anchor = sol.kinetic;
            levels.emplace_back();
        }
        levels.back().members.push_back(std::move(sol));
    }

    for (auto& level : levels) {
        std::sort(level.members.begin(), level.members.end(),
                  [](const ModeSolution& a, const ModeSolution& b) { return a.qn < b.qn; });
        const auto& front = level.members.front();
        level.epsilon = front.epsilon;
        level.kinetic = front.kinetic;
        level.degeneracy = static_cast<int>(level.members.size());
        level.representative = front.qn.sorted();
    }
    std::stable_sort(levels.begin(), levels.end(), [](const Level& a, const Level& b) {
        if (a.kinetic != b.kinetic) {
            return a.kinetic < b.kinetic;
        }
        return a.representative < b.representative;
    });
    return levels;
}

std::vector<QuantumNumbers> multisets(int n_max)
{
    std::vector<QuantumNumbers> out;
    for (int a = 1; a <= n_max; ++a) {
        for (int b = a; b <= n_max; ++b) {
            for (int c = b; c <= n_max; ++c) {
                out.emplace_back(std::array<int, 3>{a, b, c});
            }
        }
    }
    return out;
}

std::vector<QuantumNumbers> permutations(const QuantumNumbers& qn)
{
    auto n = qn.sorted().values();
    std::vector<QuantumNumbers> out;
    do {
        out.emplace_back(n);
    } while (std::next_permutation(n.begin(), n.end()));
    return out;
}

LevelTable enumerate_spectrum(const BoxGeometry& geometry, int n_max, const SweepOptions& options)
{
    check_n_max(n_max);
    const bool cubic = geometry.is_cubic();
    const auto triples = cubic ? multisets(n_max) : all_triples(n_max);
    auto solved = solve_all(triples, [&](const QuantumNumbers& qn) { return solve_mode(geometry, qn, options); });

    std::vector<ModeSolution> solutions;
    if (cubic) {
        for (const auto& base : solved) {
            for (const auto& perm : permutations(base.qn)) {
                const auto map = placement(base.qn, perm);
                WaveVector u;
                for (int l = 0; l < 3; ++l) {
                    u.u[l] = base.u[map[l]];
                }
                ModeSolution sol = finish(geometry, perm, u);
                sol.sweeps = base.sweeps;
                sol.damped = base.damped;
                for (double r : sol.residuals) {
                    if (!(r <= options.tol_f)) {
                        throw SolverError(ErrorKind::ConvergenceFailure,
                                          describe(geometry, perm) + ": permuted solution fails residual check");
                    }
                }
                solutions.push_back(std::move(sol));
            }
        }
    } else {
        solutions = std::move(solved);
    }

    LevelTable table{geometry, n_max, group_levels(std::move(solutions)), 0.0};
    table.complete_below = completeness_bound(geometry, n_max, options);
    return table;
}

LevelTable enumerate_spectrum_serial(const BoxGeometry& geometry, int n_max, const SweepOptions& options)
{
    check_n_max(n_max);
    std::vector<ModeSolution> solutions;
    for (const auto& qn : all_triples(n_max)) {
        solutions.push_back(solve_mode(geometry, qn, options));
    }
    LevelTable table{geometry, n_max, group_levels(std::move(solutions)), 0.0};
    table.complete_below = completeness_bound(geometry, n_max, options);
    return table;
}

double reduced_dominant_equation(double x, double ratio) { return std::tan(x) + x * ratio; }

} // namespace diracbox
